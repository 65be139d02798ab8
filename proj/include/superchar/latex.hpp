#pragma once

#include <string>

#include "superchar/characters.hpp"
#include "superchar/diagrams.hpp"
#include "superchar/laurent.hpp"

namespace superchar {

/// LaTeX rendering is a lossy presentation layer; JSON is the source of truth.

inline std::string latex_of(const Diagram& d, const std::string& symbol) {
    const auto set_str = [](const std::vector<int>& v) {
        if (v.empty()) return std::string("\\varnothing");
        std::string out;
        for (std::size_t i = v.size(); i-- > 0;) { // largest first, as usual for these sets
            out += std::to_string(v[i]);
            if (i != 0) out += ",";
        }
        return out;
    };
    if (d.A() == d.B()) return symbol + "(" + set_str(d.A()) + ")";
    return symbol + "(\\{" + set_str(d.A()) + "\\},\\{" + set_str(d.B()) + "\\})";
}

inline std::string latex_of(const CharCombination& c) {
    const std::string symbol = c.basis() == Basis::Kac     ? "K"
                               : c.basis() == Basis::Euler ? "E"
                                                           : "L";
    if (c.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, coeff] : c.terms()) {
        const bool neg = coeff < 0;
        Int mag = abs(coeff);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (mag != 1) out += mag.get_str() + "\\,";
        out += "\\mathrm{ch}\\," + latex_of(d, symbol);
    }
    return out;
}

inline std::string latex_of(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    const auto var = [](const char* name, int idx, int exp) {
        std::string out = std::string(name) + "_{" + std::to_string(idx + 1) + "}";
        if (exp != 1) out += "^{" + std::to_string(exp) + "}";
        return out;
    };
    std::string out;
    bool first = true;
    for (const auto& [mo, c] : p.terms()) {
        const bool neg = c < 0;
        Int mag = abs(c);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string vars;
        for (std::size_t i = 0; i < mo.x.size(); ++i)
            if (mo.x[i] != 0) vars += var("x", static_cast<int>(i), mo.x[i]);
        for (std::size_t j = 0; j < mo.y.size(); ++j)
            if (mo.y[j] != 0) vars += var("y", static_cast<int>(j), mo.y[j]);
        if (vars.empty()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "\\,";
            out += vars;
        }
    }
    return out;
}

} // namespace superchar
