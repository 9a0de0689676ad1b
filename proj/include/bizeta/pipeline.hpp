#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bizeta/alpha.hpp"
#include "bizeta/certificate.hpp"
#include "bizeta/checks.hpp"
#include "bizeta/factor.hpp"
#include "bizeta/io.hpp"
#include "bizeta/zeta.hpp"

namespace bizeta {

/// Process exit statuses. Input problems, verification failures and
/// inconclusive certificates are distinguishable by the caller.
enum class RunStatus : int {
    ok = 0,
    input_error = 2,
    check_failed = 3,
    inconclusive = 4,
};

enum class OutMode { text, json_out };

/// One batch job: exactly one input source, plus output switches.
struct JobSpec {
    std::string curve_file;
    std::string params; // "g=1,q=2,N=3" or "g=2,q=3,a=0,b=0" or "g=0,q=2"
    std::string btable_file;
    bool synthetic = false;
    bool certify = false;
    bool factor_only = false; // report the oracle factorization instead of gating on it
    OutMode out = OutMode::text;
    std::string emit_certificate; // write certificate JSON here when non-empty
};

struct RunResult {
    RunStatus status = RunStatus::ok;
    std::string output; // rendered per JobSpec::out, newline-terminated
    json report;        // the structured report regardless of output mode
};

inline bool is_prime_power(long q) {
    if (q < 2) return false;
    long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (p * p > q) p = q;
    while (q % p == 0) q /= p;
    return q == 1;
}

namespace detail {

inline Int params_int(const std::string& all, const std::string& key, bool required,
                      const Int& fallback = 0) {
    std::stringstream ss(all);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::domain_error("params: expected K=V, got \"" + item + "\"");
        if (item.substr(0, eq) == key) {
            try {
                return Int(item.substr(eq + 1));
            } catch (const std::invalid_argument&) {
                throw std::domain_error("params: value of " + key + " is not an integer");
            }
        }
    }
    if (required) throw std::domain_error("params: missing required key " + key);
    return fallback;
}

inline void params_check_keys(const std::string& all, const std::vector<std::string>& allowed) {
    std::stringstream ss(all);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        const std::string key = eq == std::string::npos ? item : item.substr(0, eq);
        bool ok = false;
        for (const auto& a : allowed) ok = ok || a == key;
        if (!ok) throw std::domain_error("params: unknown key \"" + key + "\"");
    }
}

inline long to_long_checked(const Int& v, const std::string& what) {
    if (!v.fits_slong_p()) throw std::domain_error(what + " out of range");
    return v.get_si();
}

/// Everything the input stage produced; later stages consume this.
struct Inputs {
    BTable bt;
    std::optional<CurveModel> curve;
    std::optional<PointCounts> counts;
    std::optional<LPoly> L;
    std::string source; // "curve" | "params" | "btable"
};

inline Inputs acquire_inputs(const JobSpec& job) {
    const int sources = (job.curve_file.empty() ? 0 : 1) + (job.params.empty() ? 0 : 1) +
                        (job.btable_file.empty() ? 0 : 1);
    if (sources != 1)
        throw std::domain_error("exactly one input source required (--curve, --params or --btable)");

    Inputs in;
    if (!job.curve_file.empty()) {
        in.source = "curve";
        in.curve = curve_from_json(load_json_file(job.curve_file));
        in.counts = point_counts(*in.curve);
        in.L = l_polynomial(*in.counts, in.counts->q, in.counts->g);
        if (in.L->g == 1)
            in.bt = btable_g1(in.L->q, Int(in.counts->n[0]));
        else
            in.bt = btable_g2(in.L->q, in.L->a(), in.L->b());
    } else if (!job.params.empty()) {
        in.source = "params";
        const int g = static_cast<int>(to_long_checked(params_int(job.params, "g", true), "g"));
        const long q = to_long_checked(params_int(job.params, "q", true), "q");
        if (q < 2 || !is_prime_power(q))
            throw std::domain_error("params: q must be a prime power >= 2");
        if (g == 0) {
            params_check_keys(job.params, {"g", "q"});
            in.bt = btable_g0(q);
        } else if (g == 1) {
            params_check_keys(job.params, {"g", "q", "N"});
            in.bt = btable_g1(q, params_int(job.params, "N", true), job.synthetic);
        } else if (g == 2) {
            params_check_keys(job.params, {"g", "q", "a", "b"});
            in.bt = btable_g2(q, params_int(job.params, "a", true),
                              params_int(job.params, "b", true), job.synthetic);
        } else {
            throw std::domain_error("params: unsupported genus " + std::to_string(g));
        }
    } else {
        in.source = "btable";
        in.bt = btable_from_json(load_json_file(job.btable_file));
    }
    return in;
}

inline std::string factorization_str(const Factorization& fac) {
    std::string s;
    for (const auto& [f, m] : fac.factors) {
        for (int i = 0; i < m; ++i) {
            if (!s.empty()) s += " * ";
            s += "(" + bipoly_str(f) + ")";
        }
    }
    return s;
}

inline json factorization_to_json(const Factorization& fac) {
    json j;
    j["input"] = bipoly_to_json(fac.input);
    j["reversed_input"] = fac.reversed_input;
    j["irreducible"] = fac.is_irreducible();
    json fs = json::array();
    for (const auto& [f, m] : fac.factors) {
        json e;
        e["factor"] = bipoly_to_json(f);
        e["text"] = bipoly_str(f);
        e["multiplicity"] = m;
        fs.push_back(std::move(e));
    }
    j["factors"] = std::move(fs);
    return j;
}

} // namespace detail

/// Run one job end to end: acquire the b-table (counting points and
/// recovering L first when the input is a curve), build P, verify every
/// structural property, then optionally certify irreducibility, falling
/// back to the factorization oracle when the certificate is inconclusive.
inline RunResult run(const JobSpec& job) {
    RunResult res;
    json& rep = res.report;
    std::ostringstream text;

    detail::Inputs in;
    PPoly p;
    try {
        in = detail::acquire_inputs(job);
        // a table that cannot even be assembled into a shape-valid P is
        // malformed input, not a verification failure
        p = p_from_btable(in.bt);
        if (in.L) p.L = *in.L;
    } catch (const std::exception& e) {
        res.status = RunStatus::input_error;
        rep["error"] = e.what();
        rep["status"] = "input-error";
        res.output = (job.out == OutMode::json_out) ? rep.dump(2) + "\n"
                                                    : std::string("error: ") + e.what() + "\n";
        return res;
    }

    const BTable& bt = in.bt;

    // context block
    {
        json ctx;
        ctx["g"] = bt.g;
        ctx["q"] = bt.q;
        ctx["h"] = int_to_json(bt.h);
        ctx["source"] = in.source;
        ctx["synthetic"] = bt.synthetic;
        rep["context"] = std::move(ctx);
        if (in.curve) rep["curve"] = curve_to_json(*in.curve);
        if (in.counts) {
            json ns = json::array();
            for (long nm : in.counts->n) ns.push_back(nm);
            rep["counts"] = std::move(ns);
        }
        if (in.L) {
            rep["L"] = unipoly_to_json(in.L->L);
            rep["L_text"] = unipoly_str(in.L->L);
        }
        rep["btable"] = btable_to_json(bt);
    }
    if (in.curve) {
        text << "curve: " << (in.curve->kind == CurveKind::elliptic ? "elliptic" : "hyperelliptic_g2")
             << " over F_" << bt.q << "\n";
        text << "counts:";
        for (int m = 1; m <= in.counts->g; ++m)
            text << " N_" << m << " = " << in.counts->n[static_cast<size_t>(m - 1)];
        text << "\n";
        text << "L(t) = " << unipoly_str(in.L->L) << "\n";
    }
    text << "g = " << bt.g << ", q = " << bt.q << ", h = " << bt.h.get_str()
         << (bt.synthetic ? " (synthetic)" : "") << "\n";
    text << "P(t,u) = " << bipoly_str(p.poly) << "\n";
    rep["P"] = bipoly_to_json(p.poly);
    rep["P_text"] = bipoly_str(p.poly);

    // verification stage
    CheckReport checks = verify_theorem1(p);
    checks.merge(clifford_validate(bt));
    try {
        checks.merge(cumulative_identity_check(alpha_matrix(p), bt, 6, 6));
    } catch (const std::domain_error& e) {
        // alpha extraction refuses degree-bound violations; report it as a
        // failed check rather than aborting the run
        checks.add("cum-alpha", false, e.what());
    }
    {
        // cross-check against the closed-form expansion
        PPoly expl = bt.g == 0   ? p_explicit_g0(bt.q)
                     : bt.g == 1 ? p_explicit_g1(bt.q, bt.h, bt.synthetic)
                                 : p_explicit_g2(bt.q, bt.b(1, 1) - bt.q - 1,
                                                 bt.b(2, 1) + (bt.q + 1) - (bt.b(1, 1) - bt.q - 1) * (1 + bt.q) -
                                                     (1 + bt.q + Int(bt.q) * bt.q),
                                                 bt.synthetic);
        checks.add("explicit-match", expl.poly == p.poly,
                   "table-driven P differs from the closed-form expansion");
    }

    rep["checks"] = report_to_json(checks);
    const bool checks_ok = checks.all_pass();
    int n_pass = 0;
    for (const auto& c : checks.checks) n_pass += c.pass ? 1 : 0;
    text << "checks: " << n_pass << "/" << checks.checks.size() << " passed";
    if (!checks_ok) {
        text << "; FAILED:";
        for (const auto& id : checks.failed_ids()) text << " " << id;
    }
    text << "\n";
    for (const auto& c : checks.checks)
        if (!c.pass) text << "  " << c.id << ": " << c.witness << "\n";

    // certificate stage
    bool cert_inconclusive = false;
    if (job.factor_only) {
        const Factorization fac = factor_oracle(p.poly);
        rep["factorization"] = detail::factorization_to_json(fac);
        text << "oracle: " << (fac.reversed_input ? "reversal " : "")
             << (fac.is_irreducible() ? "irreducible over Q(u)"
                                      : "factors " + detail::factorization_str(fac))
             << "\n";
    } else if (job.certify || !job.emit_certificate.empty()) {
        if (bt.g < 1) {
            res.status = RunStatus::input_error;
            rep["error"] = "nothing to certify for genus 0 (P = 1)";
            rep["status"] = "input-error";
            res.output = (job.out == OutMode::json_out)
                             ? rep.dump(2) + "\n"
                             : text.str() + "error: nothing to certify for genus 0 (P = 1)\n";
            return res;
        }
        const Certificate cert = certify_p(p);
        rep["certificate"] = certificate_to_json(cert);
        if (!job.emit_certificate.empty())
            save_json_file(job.emit_certificate, certificate_to_json(cert));
        if (cert.ok()) {
            text << "certificate: " << conclusion_name(cert.conclusion) << " (lead = "
                 << unipoly_str(cert.lead) << ", alpha = " << cert.alpha.str() << ", beta = "
                 << cert.beta.str() << ")\n";
        } else {
            cert_inconclusive = true;
            text << "certificate: Inconclusive (reason: " << cert.reason << ")\n";
            const Factorization fac = factor_oracle(p.poly);
            rep["factorization"] = detail::factorization_to_json(fac);
            text << "oracle: " << (fac.reversed_input ? "reversal " : "")
                 << (fac.is_irreducible() ? "irreducible over Q(u)"
                                          : "factors " + detail::factorization_str(fac))
                 << "\n";
        }
    }

    if (!checks_ok)
        res.status = RunStatus::check_failed;
    else if (cert_inconclusive)
        res.status = RunStatus::inconclusive;
    else
        res.status = RunStatus::ok;
    rep["status"] = res.status == RunStatus::ok            ? "ok"
                    : res.status == RunStatus::check_failed ? "check-failed"
                                                            : "inconclusive";
    text << "status: " << rep["status"].get<std::string>() << "\n";

    res.output = (job.out == OutMode::json_out) ? rep.dump(2) + "\n" : text.str();
    return res;
}

} // namespace bizeta
