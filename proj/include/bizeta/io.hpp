#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bizeta/bipoly.hpp"
#include "bizeta/btable.hpp"
#include "bizeta/certificate.hpp"
#include "bizeta/curve.hpp"
#include "bizeta/report.hpp"

namespace bizeta {

using nlohmann::json;

// ---------------------------------------------------------------------------
// numbers: exact integers/rationals <-> JSON. Integers are emitted as JSON
// numbers when they fit in int64 and as decimal strings beyond that;
// non-integral rationals as a [numerator, denominator] pair. No floating
// point anywhere.
// ---------------------------------------------------------------------------

inline json int_to_json(const Int& n) {
    if (n.fits_slong_p()) return json(static_cast<std::int64_t>(n.get_si()));
    return json(n.get_str());
}

inline json rat_to_json(const Rat& r) {
    if (r.is_integer()) return int_to_json(r.num());
    return json::array({int_to_json(r.num()), int_to_json(r.den())});
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer() || j.is_number_unsigned())
        return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::domain_error("json: expected an integer (number or decimal string)");
}

inline Rat rat_from_json(const json& j) {
    if (j.is_array()) {
        if (j.size() != 2) throw std::domain_error("json: a rational pair must have exactly two entries");
        return Rat(int_from_json(j[0]), int_from_json(j[1]));
    }
    return Rat(int_from_json(j));
}

// ---------------------------------------------------------------------------
// polynomials
// ---------------------------------------------------------------------------

/// BiPoly as a matrix: row index = t-exponent, column index = u-exponent.
inline json bipoly_to_json(const BiPoly& p) {
    json rows = json::array();
    const int du = p.deg_u();
    for (int i = 0; i <= p.deg_t(); ++i) {
        json row = json::array();
        for (int k = 0; k <= (p.is_zero() ? 0 : du); ++k) row.push_back(rat_to_json(p.coeff(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline BiPoly bipoly_from_json(const json& j) {
    if (!j.is_array()) throw std::domain_error("json: a polynomial must be a matrix (array of rows)");
    std::vector<UniPoly> t_coeffs;
    for (const auto& row : j) {
        if (!row.is_array()) throw std::domain_error("json: each polynomial row must be an array");
        std::vector<Rat> cs;
        for (const auto& e : row) cs.push_back(rat_from_json(e));
        t_coeffs.emplace_back(Var::u, std::move(cs));
    }
    return BiPoly(std::move(t_coeffs));
}

inline json unipoly_to_json(const UniPoly& p) {
    json arr = json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(rat_to_json(p.coeff(i)));
    if (p.is_zero()) arr.push_back(0);
    return arr;
}

// ---------------------------------------------------------------------------
// text rendering: terms ascending in the t-power, then ascending in the
// u-power, e.g. "1 + (2 - u)*t + u*t^2".
// ---------------------------------------------------------------------------

namespace detail {

inline std::string power_str(const char* v, int k) {
    if (k == 0) return "";
    std::string s(v);
    if (k > 1) s += "^" + std::to_string(k);
    return s;
}

/// One monomial |c|*v^k without sign; empty coefficient part when |c| = 1
/// and k >= 1.
inline std::string abs_term_str(const Rat& c, const char* v, int k) {
    const Rat a = c < Rat(0) ? -c : c;
    if (k == 0) return a.str();
    if (a == Rat(1)) return power_str(v, k);
    return a.str() + "*" + power_str(v, k);
}

} // namespace detail

inline std::string unipoly_str(const UniPoly& p) {
    if (p.is_zero()) return "0";
    const char* v = var_name(p.var());
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        const Rat c = p.coeff(k);
        if (c.is_zero()) continue;
        if (out.empty())
            out = (c < Rat(0) ? "-" : "") + detail::abs_term_str(c, v, k);
        else
            out += (c < Rat(0) ? " - " : " + ") + detail::abs_term_str(c, v, k);
    }
    return out;
}

inline std::string bipoly_str(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.deg_t(); ++i) {
        const UniPoly ci = p.coeff_t(i);
        if (ci.is_zero()) continue;

        int nonzero = 0, last_k = 0;
        for (int k = 0; k <= ci.degree(); ++k)
            if (!ci.coeff(k).is_zero()) { ++nonzero; last_k = k; }

        std::string piece;
        bool negative = false;
        if (nonzero == 1) {
            const Rat c = ci.coeff(last_k);
            negative = c < Rat(0);
            piece = detail::abs_term_str(c, "u", last_k);
            if (i > 0) {
                if (last_k == 0 && (c == Rat(1) || c == Rat(-1))) piece.clear();
                if (!piece.empty()) piece += "*";
                piece += detail::power_str("t", i);
            }
        } else {
            piece = "(" + unipoly_str(ci) + ")";
            if (i > 0) piece += "*" + detail::power_str("t", i);
        }

        if (out.empty())
            out = (negative ? "-" : "") + piece;
        else
            out += (negative ? " - " : " + ") + piece;
    }
    return out;
}

// ---------------------------------------------------------------------------
// b-tables
// ---------------------------------------------------------------------------

inline json btable_to_json(const BTable& bt) {
    json j;
    j["g"] = bt.g;
    j["q"] = bt.q;
    j["h"] = int_to_json(bt.h);
    if (bt.synthetic) j["synthetic"] = true;
    json finite = json::array();
    for (int n = 0; n < static_cast<int>(bt.finite.size()); ++n) {
        const auto& row = bt.finite[static_cast<size_t>(n)];
        for (int k = 0; k < static_cast<int>(row.size()); ++k)
            if (row[static_cast<size_t>(k)] != 0)
                finite.push_back(json::array({n, k, int_to_json(row[static_cast<size_t>(k)])}));
    }
    j["finite"] = std::move(finite);
    return j;
}

inline BTable btable_from_json(const json& j) {
    BTable bt;
    bt.g = j.at("g").get<int>();
    bt.q = j.at("q").get<long>();
    bt.h = int_from_json(j.at("h"));
    bt.synthetic = j.value("synthetic", false);
    if (bt.g < 0 || bt.g > 2) throw std::domain_error("btable: genus must be 0, 1 or 2");
    bt.finite.assign(static_cast<size_t>(bt.finite_max_n()) + 1, {});
    for (const auto& entry : j.at("finite")) {
        if (!entry.is_array() || entry.size() != 3)
            throw std::domain_error("btable: each finite entry must be a triple [n, k, b]");
        const int n = entry[0].get<int>();
        const int k = entry[1].get<int>();
        const Int b = int_from_json(entry[2]);
        if (n < 0 || n > bt.finite_max_n())
            throw std::domain_error("btable: entry n out of the finite range");
        if (k < 1) throw std::domain_error("btable: entry k must be >= 1");
        auto& row = bt.finite[static_cast<size_t>(n)];
        if (static_cast<int>(row.size()) <= k) row.resize(static_cast<size_t>(k) + 1, 0);
        row[static_cast<size_t>(k)] = b;
    }
    validate_btable(bt);
    return bt;
}

// ---------------------------------------------------------------------------
// check reports and certificates
// ---------------------------------------------------------------------------

inline json report_to_json(const CheckReport& r) {
    json arr = json::array();
    for (const auto& c : r.checks) {
        json e;
        e["id"] = c.id;
        e["pass"] = c.pass;
        e["witness"] = c.witness;
        arr.push_back(std::move(e));
    }
    return arr;
}

inline json certificate_to_json(const Certificate& c) {
    json j;
    j["monic"] = c.monic;
    j["lead"] = unipoly_to_json(c.lead);
    j["alpha"] = c.alpha.str();
    j["beta"] = c.beta.str();
    j["conclusion"] = conclusion_name(c.conclusion);
    j["reason"] = c.reason;
    j["note"] = c.note;
    return j;
}

// ---------------------------------------------------------------------------
// curve models
// ---------------------------------------------------------------------------

namespace detail {

/// A field element from JSON: a plain integer is reduced mod p (prime
/// subfield); a digit list [c0, c1, ...] is the residue polynomial
/// c0 + c1 x + ..., encoded base p.
inline long element_from_json(const Field& F, const json& j) {
    if (j.is_number_integer() || j.is_number_unsigned()) return F.from_int(j.get<long>());
    if (j.is_array()) {
        if (static_cast<int>(j.size()) > F.m())
            throw std::domain_error("curve: coefficient digit list longer than the extension degree");
        long code = 0, pw = 1;
        for (const auto& d : j) {
            long digit = d.get<long>() % F.p();
            if (digit < 0) digit += F.p();
            code += digit * pw;
            pw *= F.p();
        }
        return code;
    }
    throw std::domain_error("curve: coefficients must be integers or digit lists");
}

} // namespace detail

inline CurveModel curve_from_json(const json& j) {
    CurveModel c;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "elliptic")
        c.kind = CurveKind::elliptic;
    else if (kind == "hyperelliptic_g2")
        c.kind = CurveKind::hyperelliptic_g2;
    else
        throw std::domain_error("curve: unknown kind \"" + kind + "\"");

    const auto& fj = j.at("field");
    c.field.p = fj.at("p").get<long>();
    c.field.m = fj.value("m", 1);
    if (fj.contains("modulus")) c.field.modulus = fj.at("modulus").get<std::vector<long>>();
    const Field F(c.field);
    c.field = F.spec(); // normalized modulus filled in

    const auto& coeffs = j.at("coeffs");
    if (c.kind == CurveKind::elliptic) {
        c.a1 = coeffs.contains("a1") ? detail::element_from_json(F, coeffs["a1"]) : 0;
        c.a3 = coeffs.contains("a3") ? detail::element_from_json(F, coeffs["a3"]) : 0;
        c.a2 = coeffs.contains("a2") ? detail::element_from_json(F, coeffs["a2"]) : 0;
        c.a4 = coeffs.contains("a4") ? detail::element_from_json(F, coeffs["a4"]) : 0;
        c.a6 = coeffs.contains("a6") ? detail::element_from_json(F, coeffs["a6"]) : 0;
    } else {
        const auto& fj2 = coeffs.at("f");
        if (!fj2.is_array()) throw std::domain_error("curve: coeffs.f must be a list");
        for (const auto& e : fj2) c.f.push_back(detail::element_from_json(F, e));
    }
    validate_curve(F, c);
    return c;
}

inline json curve_to_json(const CurveModel& c) {
    json j;
    j["kind"] = c.kind == CurveKind::elliptic ? "elliptic" : "hyperelliptic_g2";
    json fj;
    fj["p"] = c.field.p;
    fj["m"] = c.field.m;
    if (!c.field.modulus.empty()) fj["modulus"] = c.field.modulus;
    j["field"] = std::move(fj);
    json coeffs;
    if (c.kind == CurveKind::elliptic) {
        coeffs["a1"] = c.a1;
        coeffs["a3"] = c.a3;
        coeffs["a2"] = c.a2;
        coeffs["a4"] = c.a4;
        coeffs["a6"] = c.a6;
    } else {
        coeffs["f"] = c.f;
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

// ---------------------------------------------------------------------------
// files
// ---------------------------------------------------------------------------

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::domain_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::domain_error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

} // namespace bizeta
