// Batch front end: compute P(t,u) from a curve, parameter triple or b-table,
// verify its structural properties, and optionally certify irreducibility or
// run the factorization oracle. Exit statuses: 0 ok, 1 selftest failure,
// 2 input error, 3 verification failure, 4 inconclusive certificate.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bizeta/bizeta.hpp"

namespace {

void add_input_flags(CLI::App* cmd, bizeta::JobSpec& job, std::string& out_mode) {
    cmd->add_option("--curve", job.curve_file, "curve description JSON file");
    cmd->add_option("--params", job.params,
                    "inline parameters: g=0,q=Q | g=1,q=Q,N=N | g=2,q=Q,a=A,b=B");
    cmd->add_option("--btable", job.btable_file, "b-table JSON file");
    cmd->add_flag("--synthetic", job.synthetic, "allow parameters no smooth curve realizes");
    cmd->add_option("--out", out_mode, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    cmd->add_option("--emit-certificate", job.emit_certificate,
                    "write the certificate JSON to this file (implies certification)");
}

int run_job(bizeta::JobSpec& job, const std::string& out_mode) {
    job.out = out_mode == "json" ? bizeta::OutMode::json_out : bizeta::OutMode::text;
    const bizeta::RunResult res = bizeta::run(job);
    std::cout << res.output;
    return static_cast<int>(res.status);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-variable zeta numerator P(t,u): computation, verification, certification"};
    app.require_subcommand(1);

    bizeta::JobSpec job;
    std::string out_mode = "text";

    CLI::App* compute = app.add_subcommand("compute", "compute P, run all checks, optionally certify");
    add_input_flags(compute, job, out_mode);
    bool certify_flag = false;
    compute->add_flag("--certify", certify_flag, "also emit the irreducibility certificate");

    CLI::App* certify = app.add_subcommand("certify", "compute P and certify irreducibility");
    add_input_flags(certify, job, out_mode);

    CLI::App* factor = app.add_subcommand("factor", "compute P and report its oracle factorization");
    add_input_flags(factor, job, out_mode);

    CLI::App* selftest = app.add_subcommand("selftest", "run the full acceptance sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : static_cast<int>(bizeta::RunStatus::input_error);
    }

    try {
        if (selftest->parsed()) return bizeta::run_selftest(std::cout) ? 0 : 1;
        if (compute->parsed()) {
            job.certify = certify_flag || !job.emit_certificate.empty();
            return run_job(job, out_mode);
        }
        if (certify->parsed()) {
            job.certify = true;
            return run_job(job, out_mode);
        }
        job.factor_only = true; // factor subcommand
        return run_job(job, out_mode);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(bizeta::RunStatus::input_error);
    }
}
