#pragma once

// Umbrella header: exact rational/polynomial arithmetic, finite fields and
// point counting, the two-variable zeta numerator P(t,u) with its structural
// checks, irreducibility certificates with an independent factorization
// oracle, and the batch pipeline.

#include "bizeta/rational.hpp"
#include "bizeta/unipoly.hpp"
#include "bizeta/bipoly.hpp"
#include "bizeta/finite_field.hpp"
#include "bizeta/curve.hpp"
#include "bizeta/lpoly.hpp"
#include "bizeta/btable.hpp"
#include "bizeta/zeta.hpp"
#include "bizeta/report.hpp"
#include "bizeta/alpha.hpp"
#include "bizeta/checks.hpp"
#include "bizeta/factor.hpp"
#include "bizeta/certificate.hpp"
#include "bizeta/io.hpp"
#include "bizeta/pipeline.hpp"
#include "bizeta/selftest.hpp"
