#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "superchar/characters.hpp"
#include "superchar/diagrams.hpp"
#include "superchar/errors.hpp"
#include "superchar/pairing.hpp"

namespace superchar {

/// Inclusive candidate range for cross positions in window scans.
struct Window {
    int lo;
    int hi;
};

/// The Kac flag of P(f): { pi_C(f) : C subset of the crosses of f }.
/// Multiplicity free, so exactly 2^{#crosses} distinct diagrams.
inline std::vector<Diagram> proj_flag(const Diagram& f) {
    if (!f.is_full()) throw std::invalid_argument("proj_flag: diagram is not full");
    std::set<Diagram> out;
    for (const auto& C : detail::subsets(f.crosses())) out.insert(pi_C(f, C));
    if (out.size() != (std::size_t(1) << f.crosses().size()))
        throw std::logic_error("proj_flag: flag is not multiplicity free");
    return {out.begin(), out.end()};
}

/// All f with g in the Kac flag of P(f), found by searching sequences of
/// inverse moves: repeatedly pick a cross d of the current diagram and a
/// circle c < d such that pi_c^d is admissible after swapping, with the c's
/// strictly decreasing and never meeting earlier endpoints.
inline std::vector<Diagram> kac_constituents(const Diagram& g) {
    if (!g.is_full()) throw std::invalid_argument("kac_constituents: diagram is not full");
    const std::vector<int> crosses = g.crosses();
    if (crosses.empty()) return {g};
    const int k = static_cast<int>(crosses.size());
    const int lo = g.support().front() - (2 * k + 1);

    std::set<Diagram> out;
    std::function<void(const Diagram&, int, std::set<int>&, std::set<int>&)> dfs =
        [&](const Diagram& u, int last_c, std::set<int>& used_c, std::set<int>& used_d) {
            out.insert(u);
            for (int d : u.crosses()) {
                if (used_c.count(d)) continue;
                for (int c = std::min(d, last_c) - 1; c >= lo; --c) {
                    if (u.symbol(c) != Symbol::Circle || used_d.count(c)) continue;
                    const Diagram u2 = apply_transposition(Transposition(c, d), u);
                    if (!is_admissible(u2, Transposition(c, d))) continue;
                    used_c.insert(c);
                    used_d.insert(d);
                    dfs(u2, c, used_c, used_d);
                    used_c.erase(c);
                    used_d.erase(d);
                }
            }
        };
    std::set<int> used_c, used_d;
    dfs(g, g.support().back() + 2 * k + 2, used_c, used_d);
    return {out.begin(), out.end()};
}

/// Full support of (ch P(f), ch E(.)): every h obtained from an element
/// g = pi_C(f) of the Kac flag by deleting a set A of crosses of f with
/// partner beyond n-m and position at most n-m, together with the pairing
/// value (ch K(g), ch E(h)).
inline std::vector<std::pair<Diagram, int>> euler_support(const Diagram& f) {
    if (!f.is_full()) throw std::invalid_argument("euler_support: diagram is not full");
    const int n = f.n(), m = f.m();
    auto [f0, f1] = cross_split(f);
    std::vector<int> pool;
    for (int a : f1)
        if (a <= n - m) pool.push_back(a);

    std::map<Diagram, int> out;
    for (const auto& C : detail::subsets(f.crosses())) {
        const Diagram g = pi_C(f, C);
        std::vector<int> avail;
        std::set_difference(pool.begin(), pool.end(), C.begin(), C.end(),
                            std::back_inserter(avail));
        for (const auto& A : detail::subsets(avail)) {
            const Diagram h = drop_crosses(g, A);
            const int val = pair_kac_euler(g, h);
            auto it = out.find(h);
            if (it == out.end())
                out.emplace(h, val);
            else if (it->second != val)
                throw std::logic_error("euler_support: conflicting coefficients");
        }
    }
    return {out.begin(), out.end()};
}

/// The partially polynomial Euler support of a partially polynomial f:
/// { (pi_C(f))_{>n-m} : C subset of the crosses of f }.
inline std::vector<Diagram> euler_support_pp(const Diagram& f) {
    if (!f.is_full()) throw std::invalid_argument("euler_support_pp: diagram is not full");
    if (!is_partially_polynomial(f))
        throw std::invalid_argument("euler_support_pp: diagram is not partially polynomial");
    std::set<Diagram> out;
    for (const auto& C : detail::subsets(f.crosses()))
        out.insert(truncate_above(pi_C(f, C), f.n() - f.m()));
    return {out.begin(), out.end()};
}

namespace detail {

inline std::vector<int> window_base(const Diagram& h) {
    std::vector<int> base = h.support();
    base.push_back(h.n() - h.m());
    std::sort(base.begin(), base.end());
    return base;
}

inline void k_subsets(const std::vector<int>& pool, int k,
                      const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(cur.size()) == k) {
            visit(cur);
            return;
        }
        if (pool.size() - start < k - cur.size()) return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

} // namespace detail

/// Decomposition method for euler_to_irr.
enum class DecomposeMethod { Pairing, MoveSearch };

/// ch E(h) = sum_f b_{f,h} ch L(f) for partially polynomial h.  The primary
/// method scans candidate diagrams over a window and evaluates
/// (ch P(f), ch E(h)) directly; the move-search method enumerates the
/// inverse-move/star-add sequences characterizing b_{f,h} != 0 and is kept as
/// an independent cross-check.
inline CharCombination euler_to_irr(const Diagram& h, std::optional<Window> window = std::nullopt,
                                    DecomposeMethod method = DecomposeMethod::Pairing) {
    if (!is_partially_polynomial(h))
        throw std::invalid_argument("euler_to_irr: diagram is not partially polynomial");
    const int m = h.m(), n = h.n();
    const int k = h.atypicality() + (m - h.r());
    const std::vector<int> base = detail::window_base(h);
    const Window win = window ? *window : Window{base.front() - (2 * k + 1), n - m};
    const int hi = std::min(win.hi, n - m);

    CharCombination out(Basis::Irreducible, m, n);
    const std::vector<int> gt = h.greater_set(), lt = h.less_set();

    if (method == DecomposeMethod::Pairing) {
        std::vector<int> domain;
        for (int pos = win.lo; pos <= hi; ++pos)
            if (h.symbol(pos) == Symbol::Circle || h.symbol(pos) == Symbol::Cross)
                domain.push_back(pos);
        detail::k_subsets(domain, k, [&](const std::vector<int>& X) {
            std::vector<int> A = X, B = X;
            A.insert(A.end(), gt.begin(), gt.end());
            B.insert(B.end(), lt.begin(), lt.end());
            const Diagram f(m, n, std::move(A), std::move(B));
            const int b = pair_proj_euler(f, h);
            if (b != 0) out.add(f, b);
        });
    } else {
        // Inverse moves on crosses at positions <= n-m (phase one), then
        // star-add a circle beyond n-m and move it left (phase two); within
        // each phase the landing positions strictly decrease, and no landing
        // position may meet a phase-one endpoint.
        std::set<Diagram> support;
        const int d_hi = base.back() + 2 * k + 2;
        std::function<void(const Diagram&, int, std::set<int>&, std::set<int>&, std::set<int>&)>
            phase_two = [&](const Diagram& u, int last_c, std::set<int>& a_cs,
                            std::set<int>& a_ds, std::set<int>& b_cs) {
                if (u.is_full()) {
                    support.insert(u);
                    return;
                }
                for (int d = n - m + 1; d <= d_hi; ++d) {
                    if (u.symbol(d) != Symbol::Circle) continue;
                    const Diagram u1 = star_add(u, {d});
                    // Landing positions are crosses of the partially
                    // polynomial result, hence at most n-m.
                    for (int c = std::min(std::min(d, last_c) - 1, n - m); c >= win.lo; --c) {
                        if (u1.symbol(c) != Symbol::Circle) continue;
                        if (a_cs.count(c) || a_ds.count(c)) continue;
                        const Diagram u2 = apply_transposition(Transposition(c, d), u1);
                        if (!is_admissible(u2, Transposition(c, d))) continue;
                        b_cs.insert(c);
                        phase_two(u2, c, a_cs, a_ds, b_cs);
                        b_cs.erase(c);
                    }
                }
            };
        std::function<void(const Diagram&, int, std::set<int>&, std::set<int>&)> phase_one =
            [&](const Diagram& u, int last_c, std::set<int>& a_cs, std::set<int>& a_ds) {
                std::set<int> b_cs;
                phase_two(u, d_hi + 1, a_cs, a_ds, b_cs);
                for (int d : u.crosses()) {
                    if (d > n - m || a_cs.count(d)) continue;
                    for (int c = std::min(d, last_c) - 1; c >= win.lo; --c) {
                        if (u.symbol(c) != Symbol::Circle || a_ds.count(c)) continue;
                        const Diagram u2 = apply_transposition(Transposition(c, d), u);
                        if (!is_admissible(u2, Transposition(c, d))) continue;
                        a_cs.insert(c);
                        a_ds.insert(d);
                        phase_one(u2, c, a_cs, a_ds);
                        a_cs.erase(c);
                        a_ds.erase(d);
                    }
                }
            };
        std::set<int> a_cs, a_ds;
        phase_one(h, d_hi + 1, a_cs, a_ds);
        for (const Diagram& f : support) {
            const int b = pair_proj_euler(f, h);
            if (b == 0) throw std::logic_error("euler_to_irr: move search produced a zero term");
            out.add(f, b);
        }
    }

    for (const auto& [d, c] : out.terms())
        if (!d.crosses().empty() && d.crosses().front() == win.lo)
            throw WindowTooSmall("euler_to_irr: nonzero coefficient on the window boundary");
    return out;
}

struct IrrChar {
    CharCombination euler_combination;
    LaurentPoly laurent;
};

namespace detail {

/// Completion of a maximally atypical Euler diagram: adjoin the largest
/// non-positive integers not already present until the diagram is full.
inline std::vector<int> completion_crosses(const std::vector<int>& B, int rank) {
    std::vector<int> out = B;
    int candidate = 0;
    while (static_cast<int>(out.size()) < rank) {
        while (std::find(out.begin(), out.end(), candidate) != out.end()) --candidate;
        out.push_back(candidate);
        --candidate;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Descending cross-vector order: a precedes b when a's crosses, read from
/// the largest down, are lexicographically larger.
inline bool desc_cross_greater(const Diagram& a, const Diagram& b) {
    std::vector<int> av = a.crosses(), bv = b.crosses();
    std::reverse(av.begin(), av.end());
    std::reverse(bv.begin(), bv.end());
    return av > bv;
}

} // namespace detail

/// ch L(f) in the Euler basis (and as an exact Laurent polynomial), for a
/// maximally atypical partially polynomial diagram f of gl(n,n).  Solves the
/// windowed system sum_h b_{f',h} c_h = delta_{f',f} by exact rational
/// elimination; the solution is unique because Euler characters are linearly
/// independent and each usable column's full support lies inside the window.
inline IrrChar irr_char(const Diagram& f, std::optional<Window> window = std::nullopt) {
    const int n = f.n();
    if (!f.is_full() || f.m() != n || f.A() != f.B())
        throw std::invalid_argument("irr_char: maximally atypical gl(n,n) diagram required");
    if (!is_partially_polynomial(f))
        throw std::invalid_argument("irr_char: diagram is not partially polynomial");
    const Window win = window ? *window : Window{f.crosses().front() - (2 * n + 3), 0};
    const int hi = std::min(win.hi, 0);

    std::vector<int> positions;
    for (int pos = win.lo; pos <= hi; ++pos) positions.push_back(pos);

    // Rows: full maximally atypical diagrams over the window, descending.
    std::vector<Diagram> rows;
    detail::k_subsets(positions, n, [&](const std::vector<int>& X) {
        rows.emplace_back(n, n, X, X);
    });
    std::sort(rows.begin(), rows.end(), detail::desc_cross_greater);
    std::map<Diagram, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
    if (!row_index.count(f)) throw WindowTooSmall("irr_char: target outside window");

    // Columns: Euler diagrams over the window whose full support stays inside
    // the window.  Columns are ordered by atypicality, then canonically.
    struct Column {
        Diagram h;
        CharCombination expansion;
    };
    std::vector<Column> cols;
    for (int p = 0; p <= n; ++p) {
        detail::k_subsets(positions, p, [&](const std::vector<int>& B) {
            const Diagram h(n, n, B, B);
            CharCombination exp(Basis::Irreducible, n, n);
            try {
                // Each column's support is computed with its own default
                // window so the expansion is exact, not clipped to ours.
                exp = euler_to_irr(h);
            } catch (const WindowTooSmall&) {
                return;
            }
            for (const auto& [d, c] : exp.terms())
                if (!row_index.count(d)) return; // support leaks below the window
            // Runtime triangularity verification: the maximal support element
            // is the completion of h and carries coefficient +-1.
            const std::vector<int> comp_crosses = detail::completion_crosses(B, n);
            const Diagram comp(n, n, comp_crosses, comp_crosses);
            const Diagram* maxd = nullptr;
            for (const auto& [d, c] : exp.terms())
                if (!maxd || detail::desc_cross_greater(d, *maxd)) maxd = &d;
            if (!maxd || !(*maxd == comp) || abs(exp.coeff(comp)) != 1)
                throw NonUnitriangular("irr_char: completion diagonal is not a unit");
            cols.push_back(Column{h, std::move(exp)});
        });
    }

    // Exact elimination on the |rows| x |cols| system, rhs = e_f.
    const std::size_t R = rows.size(), C = cols.size();
    std::vector<std::vector<mpq_class>> M(R, std::vector<mpq_class>(C + 1, 0));
    for (std::size_t c = 0; c < C; ++c)
        for (const auto& [d, b] : cols[c].expansion.terms()) M[row_index.at(d)][c] = mpq_class(b);
    M[row_index.at(f)][C] = 1;

    std::vector<std::size_t> pivot_col_of_row(R, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < C && rank < R; ++c) {
        std::size_t sel = SIZE_MAX;
        for (std::size_t r = rank; r < R; ++r)
            if (M[r][c] != 0) {
                sel = r;
                break;
            }
        if (sel == SIZE_MAX) continue;
        std::swap(M[rank], M[sel]);
        const mpq_class inv = M[rank][c];
        for (std::size_t cc = 0; cc <= C; ++cc) M[rank][cc] /= inv;
        for (std::size_t r = 0; r < R; ++r) {
            if (r == rank || M[r][c] == 0) continue;
            const mpq_class factor = M[r][c];
            for (std::size_t cc = 0; cc <= C; ++cc) M[r][cc] -= factor * M[rank][cc];
        }
        pivot_col_of_row[rank] = c;
        ++rank;
    }
    for (std::size_t r = rank; r < R; ++r)
        if (M[r][C] != 0)
            throw WindowTooSmall("irr_char: windowed system is infeasible");

    std::vector<mpq_class> solution(C, 0);
    for (std::size_t r = 0; r < rank; ++r) solution[pivot_col_of_row[r]] = M[r][C];

    CharCombination combo(Basis::Euler, n, n);
    CharCombination check(Basis::Irreducible, n, n);
    for (std::size_t c = 0; c < C; ++c) {
        if (solution[c] == 0) continue;
        if (solution[c].get_den() != 1)
            throw NonUnitriangular("irr_char: non-integer solution");
        const Int coeff = solution[c].get_num();
        combo.add(cols[c].h, coeff);
        check += cols[c].expansion * coeff;
    }
    CharCombination expected(Basis::Irreducible, n, n);
    expected.add(f, 1);
    if (!(check == expected)) throw std::logic_error("irr_char: verification failed");

    LaurentPoly laurent(n, n);
    for (const auto& [h, c] : combo.terms()) laurent += euler_char(h) * c;
    return IrrChar{std::move(combo), std::move(laurent)};
}

/// The family of n-element subsets A of the non-positive integers for which
/// some E(B) with |B| <= bound pairs nontrivially with P(A), truncated to
/// entries >= min_entry.  For bound >= n every windowed subset qualifies;
/// below that the family satisfies the shift recursion over the largest
/// element.
inline std::vector<std::vector<int>> p_set(int n, int bound, int min_entry) {
    if (n < 0 || bound < 0) throw std::invalid_argument("p_set: negative parameters");
    std::set<std::vector<int>> out;
    if (n == 0) {
        out.insert(std::vector<int>{});
    } else if (min_entry > 0) {
        // empty truncation window: no n-element subsets
    } else if (bound >= n) {
        std::vector<int> positions;
        for (int pos = min_entry; pos <= 0; ++pos) positions.push_back(pos);
        detail::k_subsets(positions, n, [&](const std::vector<int>& A) { out.insert(A); });
    } else {
        for (int i = 0; i <= bound; ++i) {
            if (-i < min_entry) continue;
            for (const auto& child : p_set(n - 1, bound - i, min_entry + i + 1)) {
                std::vector<int> A;
                A.reserve(child.size() + 1);
                for (int v : child) A.push_back(v - (i + 1));
                A.push_back(-i);
                std::sort(A.begin(), A.end());
                out.insert(std::move(A));
            }
        }
    }
    return {out.begin(), out.end()};
}

/// Closed-form gl(2,2) irreducible characters in the Euler basis:
/// ch L(a,a-1) is the graph character chi(Gamma_{|a|-1,1}), and for a-b >= 2
/// ch L(a,b) = (-1)^{a-b-1} [chi(Gamma_{|a|-1,1}) + chi(Gamma_{|a|,a-b})].
inline CharCombination gl22_irr_char(int a, int b) {
    if (a > 0 || b > a - 1) throw std::invalid_argument("gl22_irr_char: requires b < a <= 0");
    if (b == a - 1) return chi_gamma(GammaGraphParams{-a - 1, 1}, 2);
    CharCombination sum =
        chi_gamma(GammaGraphParams{-a - 1, 1}, 2) + chi_gamma(GammaGraphParams{-a, a - b}, 2);
    const int sign = ((a - b - 1) % 2 == 0) ? 1 : -1;
    return sum * Int(sign);
}

} // namespace superchar
