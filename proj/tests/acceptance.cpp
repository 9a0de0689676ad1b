// Acceptance sweep driver: prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <iostream>

#include "bizeta/selftest.hpp"

int main() {
    return bizeta::run_selftest(std::cout) ? 0 : 1;
}
