#pragma once

#include <CLI11.hpp>

#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <typeinfo>
#include <vector>

#include "superchar/characters.hpp"
#include "superchar/decompose.hpp"
#include "superchar/diagrams.hpp"
#include "superchar/errors.hpp"
#include "superchar/json_io.hpp"
#include "superchar/latex.hpp"
#include "superchar/pairing.hpp"

namespace superchar::cli {

/// Parsed form of a --left/--right character selector.
struct CharSpec {
    enum class Kind { Kac, Euler, Irr, Laurent } kind;
    std::string payload; // raw text after the prefix
};

inline CharSpec parse_charspec(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("charspec: expected <kind>:<payload> in '" + text + "'");
    const std::string head = text.substr(0, colon);
    CharSpec spec{CharSpec::Kind::Kac, text.substr(colon + 1)};
    if (head == "kac")
        spec.kind = CharSpec::Kind::Kac;
    else if (head == "euler")
        spec.kind = CharSpec::Kind::Euler;
    else if (head == "irr")
        spec.kind = CharSpec::Kind::Irr;
    else if (head == "laurent")
        spec.kind = CharSpec::Kind::Laurent;
    else
        throw std::invalid_argument("charspec: unknown kind '" + head + "'");
    return spec;
}

/// Ambient hints from the global --m/--n flags (-1 when unset).
struct Ambient {
    int m = -1;
    int n = -1;
};

/// A resolved character: always a diagram or a polynomial, plus its role.
struct ResolvedChar {
    CharSpec::Kind kind;
    std::optional<Diagram> diagram;
    std::optional<LaurentPoly> laurent;
};

inline ResolvedChar resolve_charspec(const CharSpec& spec, const Ambient& amb) {
    ResolvedChar out{spec.kind, std::nullopt, std::nullopt};
    if (spec.kind == CharSpec::Kind::Laurent) {
        std::string text = spec.payload;
        if (!text.empty() && text.front() != '{') {
            std::ifstream in(text);
            if (!in) throw std::invalid_argument("charspec: cannot open file '" + text + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        }
        out.laurent = laurent_from_json(json::parse(text));
        return out;
    }
    const json j = json::parse(spec.payload);
    if (j.contains("A") && j.contains("B")) {
        out.diagram = diagram_from_json(j);
    } else if (j.contains("lambda") && j.contains("mu")) {
        const Weight w = weight_from_json(j);
        out.diagram = weight_to_diagram(w, static_cast<int>(w.lambda.size()),
                                        static_cast<int>(w.mu.size()));
    } else if (j.contains("tau") && j.contains("nu")) {
        if (amb.m < 0 || amb.n < 0)
            throw std::invalid_argument("charspec: euler weight form needs --m and --n");
        out.diagram = euler_weight_to_diagram(
            j.at("tau").get<std::vector<int>>(), j.at("nu").get<std::vector<int>>(),
            j.at("r").get<int>(), j.at("s").get<int>(), amb.m, amb.n);
    } else {
        throw std::invalid_argument("charspec: payload is neither a diagram nor a weight");
    }
    if (spec.kind == CharSpec::Kind::Kac || spec.kind == CharSpec::Kind::Irr) {
        if (!out.diagram->is_full())
            throw std::invalid_argument("charspec: kac/irr selectors need a full diagram");
    }
    return out;
}

/// Laurent expansion of a resolved character (irr goes through irr_char).
inline LaurentPoly expand_laurent(const ResolvedChar& rc, std::optional<Window> window) {
    switch (rc.kind) {
        case CharSpec::Kind::Laurent: return *rc.laurent;
        case CharSpec::Kind::Kac: return kac_char(*rc.diagram);
        case CharSpec::Kind::Euler: return euler_char(*rc.diagram);
        case CharSpec::Kind::Irr: return irr_char(*rc.diagram, window).laurent;
    }
    throw std::logic_error("expand_laurent: unreachable");
}

// ---------------------------------------------------------------------------
// Result cache.  Keyed by a hash of the canonical request; entries replay the
// exact bytes of a previous run.  Enabled only when SUPERCHAR_CACHE is set.
// ---------------------------------------------------------------------------

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

class ResultCache {
  public:
    ResultCache(bool enabled) {
        if (!enabled) return;
        if (const char* dir = std::getenv("SUPERCHAR_CACHE"); dir && *dir) dir_ = dir;
    }

    bool enabled() const { return dir_.has_value(); }

    std::optional<std::string> lookup(const std::string& request) const {
        if (!dir_) return std::nullopt;
        std::ifstream in(path_for(request));
        if (!in) return std::nullopt;
        json entry;
        try {
            in >> entry;
            if (entry.at("request").get<std::string>() != request) return std::nullopt;
            return entry.at("payload").get<std::string>();
        } catch (...) {
            return std::nullopt; // corrupt entries are ignored and recomputed
        }
    }

    void store(const std::string& request, const std::string& payload) const {
        if (!dir_) return;
        try {
            std::filesystem::create_directories(*dir_);
            const std::filesystem::path final_path = path_for(request);
            const std::filesystem::path tmp_path =
                final_path.string() + ".tmp" + std::to_string(::getpid());
            {
                ordered_json entry;
                entry["request"] = request;
                entry["payload"] = payload;
                std::ofstream out(tmp_path);
                out << entry.dump();
            }
            std::filesystem::rename(tmp_path, final_path); // atomic publish
        } catch (...) {
            // caching is best effort; never fail the computation
        }
    }

  private:
    std::filesystem::path path_for(const std::string& request) const {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(fnv1a64(request)));
        return *dir_ / (std::string(buf) + ".json");
    }

    std::optional<std::filesystem::path> dir_;
};

// ---------------------------------------------------------------------------

/// ASCII rendering of a diagram over [from, to] with an index ruler.
inline std::string render_diagram(const Diagram& d, int from, int to) {
    std::ostringstream ruler, row;
    for (int pos = from; pos <= to; ++pos) {
        std::string label = std::to_string(pos);
        ruler << ' ' << label;
        char sym = 'o';
        switch (d.symbol(pos)) {
            case Symbol::Cross: sym = 'x'; break;
            case Symbol::Circle: sym = 'o'; break;
            case Symbol::Greater: sym = '>'; break;
            case Symbol::Less: sym = '<'; break;
        }
        row << ' ' << std::string(label.size() - 1, ' ') << sym;
    }
    return ruler.str() + "\n" + row.str() + "\n";
}

inline ordered_json diagrams_json(const std::vector<Diagram>& ds) {
    ordered_json arr = ordered_json::array();
    for (const auto& d : ds) arr.push_back(json_of(d));
    return arr;
}

/// Runs the command line.  Exit codes: 0 success, 1 usage or computation
/// errors (with a machine-readable error object on stdout), 2 verification
/// disagreement in `pair --method both`.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"Exact characters and the canonical bilinear form for gl(m|n)"};
    app.require_subcommand(1);

    Ambient amb;
    int window_margin = 0;
    bool use_latex = false, no_cache = false;
    app.add_option("--m", amb.m, "ambient m (only needed for weight-form selectors)");
    app.add_option("--n", amb.n, "ambient n");
    app.add_option("--window", window_margin, "extra margin added to default search windows");
    app.add_flag("--latex", use_latex, "emit LaTeX instead of JSON");
    app.add_flag("--no-cache", no_cache, "bypass the result cache");

    // diagram show
    auto* show = app.add_subcommand("diagram", "diagram utilities");
    show->fallthrough();
    auto* show_cmd = show->add_subcommand("show", "render a diagram as ASCII");
    show_cmd->fallthrough();
    std::string show_json;
    int show_from = 0, show_to = 0;
    bool show_range_set = false;
    show_cmd->add_option("--diagram", show_json, "diagram JSON")->required();
    auto* fo = show_cmd->add_option("--from", show_from, "left end of the window");
    auto* to = show_cmd->add_option("--to", show_to, "right end of the window");
    fo->needs(to);
    to->needs(fo);
    show_cmd->callback([&]() { show_range_set = fo->count() > 0; });

    // pair
    auto* pair_cmd = app.add_subcommand("pair", "evaluate the bilinear form");
    pair_cmd->fallthrough();
    std::string left_text, right_text, method = "both";
    std::optional<long> order_override;
    long order_value = 0;
    pair_cmd->add_option("--left", left_text, "left character spec")->required();
    pair_cmd->add_option("--right", right_text, "right character spec")->required();
    pair_cmd->add_option("--method", method, "combinatorial|oracle|both")
        ->check(CLI::IsMember({"combinatorial", "oracle", "both"}));
    auto* order_opt = pair_cmd->add_option("--order", order_value, "series truncation override");

    // decomposition subcommands
    std::string diagram_text;
    bool pp_only = false;
    bool via_moves = false;
    auto* flag_cmd = app.add_subcommand("proj-flag", "Kac flag of a projective cover");
    flag_cmd->fallthrough();
    flag_cmd->add_option("--diagram", diagram_text, "full diagram JSON")->required();
    auto* kc_cmd = app.add_subcommand("kac-constituents", "irreducible constituents of a Kac module");
    kc_cmd->fallthrough();
    kc_cmd->add_option("--diagram", diagram_text, "full diagram JSON")->required();
    auto* es_cmd = app.add_subcommand("euler-support", "Euler support of a projective cover");
    es_cmd->fallthrough();
    es_cmd->add_option("--diagram", diagram_text, "full diagram JSON")->required();
    es_cmd->add_flag("--pp", pp_only, "partially polynomial support only");
    auto* ed_cmd = app.add_subcommand("euler-decompose",
                                      "decompose an Euler character into irreducibles");
    ed_cmd->fallthrough();
    ed_cmd->add_option("--diagram", diagram_text, "Euler diagram JSON")->required();
    ed_cmd->add_flag("--via-moves", via_moves, "use the move-sequence search");
    auto* ic_cmd = app.add_subcommand("irr-char", "irreducible character in the Euler basis");
    ic_cmd->fallthrough();
    ic_cmd->add_option("--diagram", diagram_text, "full diagram JSON")->required();

    auto* ps_cmd = app.add_subcommand("p-set", "projective support family");
    ps_cmd->fallthrough();
    int ps_n = 0, ps_bound = 0, ps_min = -8;
    ps_cmd->add_option("--atypicality", ps_n, "number of crosses")->required();
    ps_cmd->add_option("--bound", ps_bound, "bound on the Euler rank")->required();
    ps_cmd->add_option("--min-entry", ps_min, "truncation: smallest allowed entry");

    auto* g22_cmd = app.add_subcommand("gl22-char", "closed-form gl(2,2) irreducible character");
    g22_cmd->fallthrough();
    int g22_a = 0, g22_b = -1;
    g22_cmd->add_option("--a", g22_a, "larger entry (<= 0)")->required();
    g22_cmd->add_option("--b", g22_b, "smaller entry (< a)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    if (order_opt->count() > 0) order_override = order_value;

    const ResultCache cache(!no_cache);

    try {
        if (show_cmd->parsed()) {
            const Diagram d = diagram_from_json(json::parse(show_json));
            int from = show_from, to_ = show_to;
            if (!show_range_set) {
                const auto supp = d.support();
                from = (supp.empty() ? 0 : supp.front()) - 2;
                to_ = (supp.empty() ? 0 : supp.back()) + 2;
            }
            out << render_diagram(d, from, to_);
            return 0;
        }

        // --window widens the derived search window on both sides.
        const auto decompose_window = [&](const Diagram& d, int k) -> std::optional<Window> {
            if (window_margin <= 0) return std::nullopt;
            std::vector<int> base = d.support();
            base.push_back(d.n() - d.m());
            std::sort(base.begin(), base.end());
            return Window{base.front() - (2 * k + 1) - window_margin,
                          d.n() - d.m() + window_margin};
        };

        // The canonical request is derived from inputs only; a hit replays the
        // stored bytes.  `pair` re-derives its exit code from the payload.
        std::string request;
        if (pair_cmd->parsed()) {
            request = "pair " + left_text + " | " + right_text + " | " + method + " | " +
                      (order_override ? std::to_string(*order_override) : "default") + " | " +
                      std::to_string(window_margin);
        } else if (flag_cmd->parsed()) {
            request = "proj-flag " + diagram_text;
        } else if (kc_cmd->parsed()) {
            request = "kac-constituents " + diagram_text;
        } else if (es_cmd->parsed()) {
            request = std::string("euler-support ") + (pp_only ? "--pp " : "") + diagram_text;
        } else if (ed_cmd->parsed()) {
            request = std::string("euler-decompose ") + (via_moves ? "--via-moves " : "") +
                      std::to_string(window_margin) + " " + diagram_text;
        } else if (ic_cmd->parsed()) {
            request = "irr-char " + std::to_string(window_margin) + " " + diagram_text;
        } else if (ps_cmd->parsed()) {
            request = "p-set " + std::to_string(ps_n) + " " + std::to_string(ps_bound) + " " +
                      std::to_string(ps_min);
        } else if (g22_cmd->parsed()) {
            request = "gl22-char " + std::to_string(g22_a) + " " + std::to_string(g22_b);
        }
        if (use_latex) request += " latex";

        if (auto hit = cache.lookup(request)) {
            out << *hit;
            if (pair_cmd->parsed()) {
                const json cached = json::parse(*hit);
                if (cached.contains("agree") && !cached.at("agree").get<bool>()) return 2;
            }
            return 0;
        }

        std::string payload;
        int exit_code = 0;

        if (pair_cmd->parsed()) {
            const ResolvedChar left = resolve_charspec(parse_charspec(left_text), amb);
            const ResolvedChar right = resolve_charspec(parse_charspec(right_text), amb);
            ordered_json result;
            result["left"] = left_text;
            result["right"] = right_text;
            result["method"] = method;
            std::optional<Int> comb, oracle;
            if (method == "combinatorial" || method == "both") {
                if (left.kind == CharSpec::Kind::Kac && right.kind == CharSpec::Kind::Kac)
                    comb = pair_kac_kac(*left.diagram, *right.diagram);
                else if (left.kind == CharSpec::Kind::Kac && right.kind == CharSpec::Kind::Euler)
                    comb = pair_kac_euler(*left.diagram, *right.diagram);
                else if (left.kind == CharSpec::Kind::Euler && right.kind == CharSpec::Kind::Kac)
                    comb = pair_kac_euler(*right.diagram, *left.diagram); // the form is symmetric
                else
                    throw std::invalid_argument(
                        "pair: no combinatorial formula for this pair of selectors");
            }
            if (method == "oracle" || method == "both")
                oracle = pair_oracle(expand_laurent(left, std::nullopt),
                                     expand_laurent(right, std::nullopt), order_override);
            if (comb) result["combinatorial"] = comb->get_str();
            if (oracle) result["oracle"] = oracle->get_str();
            if (comb && oracle) {
                const bool agree = *comb == *oracle;
                result["agree"] = agree;
                if (!agree) exit_code = 2;
            }
            payload = result.dump(2) + "\n";
        } else if (flag_cmd->parsed() || kc_cmd->parsed() || es_cmd->parsed() ||
                   ed_cmd->parsed() || ic_cmd->parsed()) {
            const Diagram d = diagram_from_json(json::parse(diagram_text));
            if (flag_cmd->parsed()) {
                const auto flags = proj_flag(d);
                if (use_latex) {
                    CharCombination c(Basis::Kac, d.m(), d.n());
                    for (const auto& g : flags) c.add(g, 1);
                    payload = latex_of(c) + "\n";
                } else {
                    payload = diagrams_json(flags).dump(2) + "\n";
                }
            } else if (kc_cmd->parsed()) {
                const auto ks = kac_constituents(d);
                if (use_latex) {
                    CharCombination c(Basis::Irreducible, d.m(), d.n());
                    for (const auto& g : ks) c.add(g, 1);
                    payload = latex_of(c) + "\n";
                } else {
                    payload = diagrams_json(ks).dump(2) + "\n";
                }
            } else if (es_cmd->parsed()) {
                if (pp_only) {
                    payload = diagrams_json(euler_support_pp(d)).dump(2) + "\n";
                } else {
                    ordered_json arr = ordered_json::array();
                    for (const auto& [h, c] : euler_support(d)) {
                        ordered_json t;
                        t["diagram"] = json_of(h);
                        t["coeff"] = c;
                        arr.push_back(std::move(t));
                    }
                    payload = arr.dump(2) + "\n";
                }
            } else if (ed_cmd->parsed()) {
                const auto method_ =
                    via_moves ? DecomposeMethod::MoveSearch : DecomposeMethod::Pairing;
                const auto combo =
                    euler_to_irr(d, decompose_window(d, d.atypicality() + d.m() - d.r()), method_);
                payload = use_latex ? latex_of(combo) + "\n" : json_of(combo).dump(2) + "\n";
            } else {
                std::optional<Window> win;
                const auto crosses = d.crosses();
                if (window_margin > 0 && !crosses.empty())
                    win = Window{crosses.front() - (2 * d.n() + 3) - window_margin, 0};
                const IrrChar ic = irr_char(d, win);
                if (use_latex) {
                    payload = latex_of(ic.euler_combination) + " = " + latex_of(ic.laurent) + "\n";
                } else {
                    ordered_json result;
                    result["euler_combination"] = json_of(ic.euler_combination);
                    result["laurent"] = json_of(ic.laurent);
                    payload = result.dump(2) + "\n";
                }
            }
        } else if (ps_cmd->parsed()) {
            const ordered_json arr = p_set(ps_n, ps_bound, ps_min);
            payload = arr.dump(2) + "\n";
        } else if (g22_cmd->parsed()) {
            const CharCombination combo = gl22_irr_char(g22_a, g22_b);
            payload = use_latex ? latex_of(combo) + "\n" : json_of(combo).dump(2) + "\n";
        } else {
            err << "no subcommand\n";
            return 1;
        }

        cache.store(request, payload);
        out << payload;
        return exit_code;
    } catch (const Error& e) {
        ordered_json eo;
        eo["error"]["type"] = std::string(typeid(e) == typeid(WindowTooSmall)  ? "WindowTooSmall"
                                          : typeid(e) == typeid(NotDivisible) ? "NotDivisible"
                                          : typeid(e) == typeid(TruncationUnstable)
                                              ? "TruncationUnstable"
                                          : typeid(e) == typeid(DivisibilityViolation)
                                              ? "DivisibilityViolation"
                                          : typeid(e) == typeid(NonUnitriangular)
                                              ? "NonUnitriangular"
                                              : "Error");
        eo["error"]["message"] = e.what();
        out << eo.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        ordered_json eo;
        eo["error"]["type"] = "UsageError";
        eo["error"]["message"] = e.what();
        out << eo.dump(2) << "\n";
        return 1;
    }
}

} // namespace superchar::cli
