#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "superchar/characters.hpp"
#include "superchar/diagrams.hpp"
#include "superchar/laurent.hpp"

namespace superchar {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

/// {"m":..,"n":..,"terms":[{"x":[..],"y":[..],"c":"<decimal>"}]} with terms in
/// the canonical (lexicographic) order and coefficients as decimal strings.
inline ordered_json json_of(const LaurentPoly& p) {
    ordered_json out;
    out["m"] = p.m();
    out["n"] = p.n();
    ordered_json terms = ordered_json::array();
    for (const auto& [mo, c] : p.terms()) {
        ordered_json t;
        t["x"] = mo.x;
        t["y"] = mo.y;
        t["c"] = c.get_str();
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

inline Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
    throw std::invalid_argument("expected an integer or a decimal string");
}

inline LaurentPoly laurent_from_json(const json& j) {
    LaurentPoly p(j.at("m").get<int>(), j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
        Monomial mo{t.at("x").get<std::vector<int>>(), t.at("y").get<std::vector<int>>()};
        p.add_term(std::move(mo), int_from_json(t.at("c")));
    }
    return p;
}

/// {"m":..,"n":..,"A":[..],"B":[..],"kind":"full"|"euler"}.
inline ordered_json json_of(const Diagram& d) {
    ordered_json out;
    out["m"] = d.m();
    out["n"] = d.n();
    out["A"] = d.A();
    out["B"] = d.B();
    out["kind"] = d.is_full() ? "full" : "euler";
    return out;
}

inline Diagram diagram_from_json(const json& j) {
    Diagram d(j.at("m").get<int>(), j.at("n").get<int>(), j.at("A").get<std::vector<int>>(),
              j.at("B").get<std::vector<int>>());
    if (j.contains("kind")) {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind != "full" && kind != "euler")
            throw std::invalid_argument("diagram: kind must be \"full\" or \"euler\"");
        if (kind == "full" && !d.is_full())
            throw std::invalid_argument("diagram: declared full but set sizes disagree");
    }
    return d;
}

/// {"basis":"kac|euler|irr","terms":[{"diagram":{...},"coeff":..}]} with terms
/// in canonical diagram order; coefficients that fit 53 bits stay numbers,
/// larger ones become decimal strings.
inline ordered_json json_of(const CharCombination& c) {
    ordered_json out;
    out["basis"] = basis_name(c.basis());
    ordered_json terms = ordered_json::array();
    for (const auto& [d, coeff] : c.terms()) {
        ordered_json t;
        t["diagram"] = json_of(d);
        if (coeff.fits_slong_p() && std::abs(coeff.get_si()) < (1LL << 53))
            t["coeff"] = coeff.get_si();
        else
            t["coeff"] = coeff.get_str();
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

inline Basis basis_from_string(const std::string& s) {
    if (s == "kac") return Basis::Kac;
    if (s == "euler") return Basis::Euler;
    if (s == "irr") return Basis::Irreducible;
    throw std::invalid_argument("unknown basis: " + s);
}

/// Ambient (m,n) is recovered from the first diagram unless given explicitly.
inline CharCombination char_combination_from_json(const json& j) {
    const Basis basis = basis_from_string(j.at("basis").get<std::string>());
    int m = -1, n = -1;
    if (j.contains("m") && j.contains("n")) {
        m = j.at("m").get<int>();
        n = j.at("n").get<int>();
    } else if (!j.at("terms").empty()) {
        const auto& d0 = j.at("terms").front().at("diagram");
        m = d0.at("m").get<int>();
        n = d0.at("n").get<int>();
    } else {
        throw std::invalid_argument("char combination: ambient not recoverable");
    }
    CharCombination c(basis, m, n);
    for (const auto& t : j.at("terms"))
        c.add(diagram_from_json(t.at("diagram")), int_from_json(t.at("coeff")));
    return c;
}

/// Weight payloads: {"lambda":[..],"mu":[..]}.
inline Weight weight_from_json(const json& j) {
    return Weight{j.at("lambda").get<std::vector<int>>(), j.at("mu").get<std::vector<int>>()};
}

} // namespace superchar
