#pragma once

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "superchar/characters.hpp"
#include "superchar/diagrams.hpp"
#include "superchar/errors.hpp"
#include "superchar/laurent.hpp"

namespace superchar {

namespace detail {

inline std::vector<std::vector<int>> subsets(const std::vector<int>& v) {
    std::vector<std::vector<int>> out;
    const std::size_t k = v.size();
    out.reserve(std::size_t(1) << k);
    for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
        std::vector<int> s;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t(1) << i)) s.push_back(v[i]);
        out.push_back(std::move(s));
    }
    return out;
}

inline int parity_sign(long e) { return ((e % 2) + 2) % 2 == 0 ? 1 : -1; }

} // namespace detail

/// (ch K(f), ch K(g)) = delta_{f,g}  (Schur orthogonality).
inline int pair_kac_kac(const Diagram& f, const Diagram& g) {
    if (!f.is_full() || !g.is_full())
        throw std::invalid_argument("pair_kac_kac: full diagrams required");
    if (f.m() != g.m() || f.n() != g.n())
        throw std::invalid_argument("pair_kac_kac: ambient mismatch");
    return f == g ? 1 : 0;
}

/// (ch K(f), ch E(g)): nonzero exactly when f = g*C for some set C of circles
/// of g with all elements <= n-m, in which case the value is
/// (-1)^{r(r-1)/2 + m(m-1)/2 + s(m-r) + S(C)} eps(A,C) eps(C,B).
inline int pair_kac_euler(const Diagram& f, const Diagram& g) {
    if (!f.is_full()) throw std::invalid_argument("pair_kac_euler: f must be full");
    if (f.m() != g.m() || f.n() != g.n())
        throw std::invalid_argument("pair_kac_euler: ambient mismatch");
    const int m = f.m(), n = f.n(), r = g.r(), s = g.s();

    if (!std::includes(f.A().begin(), f.A().end(), g.A().begin(), g.A().end())) return 0;
    if (!std::includes(f.B().begin(), f.B().end(), g.B().begin(), g.B().end())) return 0;
    std::vector<int> C, C2;
    std::set_difference(f.A().begin(), f.A().end(), g.A().begin(), g.A().end(),
                        std::back_inserter(C));
    std::set_difference(f.B().begin(), f.B().end(), g.B().begin(), g.B().end(),
                        std::back_inserter(C2));
    if (C != C2) return 0;
    if (!C.empty() && C.back() > n - m) return 0;

    long sum_c = 0;
    for (int c : C) sum_c += c;
    const long exponent =
        long(r) * (r - 1) / 2 + long(m) * (m - 1) / 2 + long(s) * (m - r) + sum_c;
    return detail::parity_sign(exponent) * eps_sign(g.A(), C) * eps_sign(C, g.B());
}

/// (ch P(f), ch K(g)) = 1 iff g lies in the Kac flag of P(f), i.e.
/// g = pi_C(f) for some subset C of the crosses of f.
inline int pair_proj_kac(const Diagram& f, const Diagram& g) {
    if (!f.is_full() || !g.is_full())
        throw std::invalid_argument("pair_proj_kac: full diagrams required");
    if (f.m() != g.m() || f.n() != g.n())
        throw std::invalid_argument("pair_proj_kac: ambient mismatch");
    for (const auto& C : detail::subsets(f.crosses()))
        if (pi_C(f, C) == g) return 1;
    return 0;
}

/// (ch P(f), ch E(h)) = (ch K(h*A), ch E(h)) for the unique A contained in
/// the crosses of f with partner beyond n-m, elements <= n-m, and
/// h*A in the Kac flag of P(f); zero when no such A exists.
inline int pair_proj_euler(const Diagram& f, const Diagram& h) {
    if (!f.is_full()) throw std::invalid_argument("pair_proj_euler: f must be full");
    if (f.m() != h.m() || f.n() != h.n())
        throw std::invalid_argument("pair_proj_euler: ambient mismatch");
    const int m = f.m(), n = f.n();
    if (f.greater_set() != h.greater_set() || f.less_set() != h.less_set()) return 0;

    const int needed = m - h.r();
    auto [f0, f1] = cross_split(f);
    std::vector<int> pool;
    for (int a : f1)
        if (a <= n - m && h.symbol(a) == Symbol::Circle) pool.push_back(a);
    if (needed > static_cast<int>(pool.size())) return 0;

    std::set<Diagram> flag;
    for (const auto& C : detail::subsets(f.crosses())) flag.insert(pi_C(f, C));

    bool found = false;
    int value = 0;
    for (const auto& A : detail::subsets(pool)) {
        if (static_cast<int>(A.size()) != needed) continue;
        const Diagram hA = star_add(h, A);
        if (!flag.count(hA)) continue;
        if (found) throw std::logic_error("pair_proj_euler: completion set is not unique");
        found = true;
        value = pair_kac_euler(hA, h);
    }
    return found ? value : 0;
}

namespace detail {

inline Int factorial(int k) {
    Int out = 1;
    for (int i = 2; i <= k; ++i) out *= i;
    return out;
}

/// One evaluation of the constant-term form at a fixed truncation order
/// (or the provably sufficient default when `order` is empty).
inline Int oracle_eval(const LaurentPoly& p, const LaurentPoly& q, std::optional<long> order) {
    const int m = p.m(), n = p.n();
    const bool has_series = m > 0 && n > 0;
    const int xslack = m > 0 ? m - 1 : 0;
    const int yslack = n > 0 ? n - 1 : 0;

    // p* q with the terms that can never reach the constant monomial dropped
    // early: every later factor preserves total degree, the Weyl factors move
    // each exponent by at most the slack, and the series factors only lower
    // x exponents and raise y exponents.
    const LaurentPoly sp = star(p);
    std::map<long, std::vector<std::pair<const Monomial*, const Int*>>> buckets;
    for (const auto& [mo, c] : q.terms()) buckets[total_degree(mo)].push_back({&mo, &c});

    LaurentPoly W(m, n);
    for (const auto& [mo, c] : sp.terms()) {
        auto it = buckets.find(-total_degree(mo));
        if (it == buckets.end()) continue;
        for (const auto& [qmo, qc] : it->second) {
            Monomial e = mono_mul(mo, *qmo);
            bool ok = true;
            if (has_series) {
                for (int i = 0; ok && i < m; ++i) ok = e.x[i] >= n - xslack;
                for (int j = 0; ok && j < n; ++j) ok = e.y[j] <= -m + yslack;
            } else {
                for (int i = 0; ok && i < m; ++i) ok = std::abs(e.x[i]) <= xslack;
                for (int j = 0; ok && j < n; ++j) ok = std::abs(e.y[j]) <= yslack;
            }
            if (ok) W.add_term(std::move(e), c * (*qc));
        }
    }

    const WeylFactors wf = weyl_factors(m, n);
    W = W * wf.dx * star(wf.dx) * wf.dy * star(wf.dy);
    if (has_series) {
        Monomial shift{std::vector<int>(m, -n), std::vector<int>(n, m)};
        W = W * LaurentPoly::from_monomial(m, n, std::move(shift), 1);
    }

    const Int scale = factorial(m) * factorial(n);
    const auto finish = [&](const Int& raw) {
        if (!mpz_divisible_p(raw.get_mpz_t(), scale.get_mpz_t()))
            throw DivisibilityViolation("pair_oracle: constant term not divisible by m!n!");
        return Int(raw / scale);
    };
    if (!has_series) return finish(constant_term(W));

    {
        LaurentPoly pruned(m, n);
        for (const auto& [mo, c] : W.terms()) {
            if (total_degree(mo) != 0) continue;
            bool ok = true;
            for (int i = 0; ok && i < m; ++i) ok = mo.x[i] >= 0;
            for (int j = 0; ok && j < n; ++j) ok = mo.y[j] <= 0;
            if (ok) pruned.add_term(mo, c);
        }
        W = std::move(pruned);
    }
    if (W.is_zero()) return finish(0);

    long maxx = 0, minx = 0;
    bool first = true;
    for (const auto& [mo, c] : W.terms())
        for (int i = 0; i < m; ++i) {
            if (first) {
                maxx = minx = mo.x[i];
                first = false;
            } else {
                maxx = std::max(maxx, long(mo.x[i]));
                minx = std::min(minx, long(mo.x[i]));
            }
        }
    const long N =
        order ? std::max(*order, 0L)
              : std::max({maxx - minx, maxx, 0L}) + long(m) * n + 1;

    // Multiply in (1 + y_j/x_i)^{-2} = sum_k (-1)^k (k+1) (y_j/x_i)^k factor by
    // factor, keeping only the terms that can still reach exponent zero.
    const auto viable = [m, n](const Monomial& mo, int i, int j) {
        for (int i2 = 0; i2 < m; ++i2) {
            const bool done = i2 < i || (i2 == i && j == n - 1);
            if (done ? mo.x[i2] != 0 : mo.x[i2] < 0) return false;
        }
        for (int j2 = 0; j2 < n; ++j2) {
            const bool done = i == m - 1 && j2 <= j;
            if (done ? mo.y[j2] != 0 : mo.y[j2] > 0) return false;
        }
        return true;
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            LaurentPoly next(m, n);
            for (const auto& [mo, c] : W.terms()) {
                for (long k = 0; k <= N; ++k) {
                    Monomial cand = mo;
                    cand.x[i] -= static_cast<int>(k);
                    cand.y[j] += static_cast<int>(k);
                    if (!viable(cand, i, j)) continue;
                    Int coeff = c * (k + 1);
                    if (k % 2 != 0) coeff = -coeff;
                    next.add_term(std::move(cand), std::move(coeff));
                }
            }
            W = std::move(next);
            if (W.is_zero()) return finish(0);
        }
    return finish(constant_term(W));
}

} // namespace detail

/// The canonical bilinear form evaluated analytically:
/// (p,q) = (1/m!n!) [p* q Delta(x)Delta(x)* Delta(y)Delta(y)* /
///                   (Delta(x,y)Delta(x,y)*)]_0
/// with 1/(Delta(x,y)Delta(x,y)*) expanded as a series in the y_j/x_i.  When a
/// truncation order is supplied, the value is recomputed at order+5 and a
/// disagreement raises TruncationUnstable.
inline Int pair_oracle(const LaurentPoly& p, const LaurentPoly& q,
                       std::optional<long> order = std::nullopt) {
    if (p.m() != q.m() || p.n() != q.n())
        throw std::invalid_argument("pair_oracle: ambient mismatch");
    if (order) {
        Int a = detail::oracle_eval(p, q, *order);
        Int b = detail::oracle_eval(p, q, *order + 5);
        if (a != b)
            throw TruncationUnstable("pair_oracle: value changed when order increased by 5");
        return a;
    }
    return detail::oracle_eval(p, q, std::nullopt);
}

/// (ch P(pc), c) extended linearly over a combination in any basis, using
/// (P(f), K(g)) from the Kac flag, (P(f), E(h)) from the completion rule, and
/// (P(f), L(g)) = delta_{f,g}.
inline Int pair_general(const Diagram& pc, const CharCombination& c) {
    if (!pc.is_full()) throw std::invalid_argument("pair_general: projective index must be full");
    if (pc.m() != c.m() || pc.n() != c.n())
        throw std::invalid_argument("pair_general: ambient mismatch");
    Int total = 0;
    for (const auto& [d, coeff] : c.terms()) {
        switch (c.basis()) {
            case Basis::Kac: total += coeff * pair_proj_kac(pc, d); break;
            case Basis::Euler: total += coeff * pair_proj_euler(pc, d); break;
            case Basis::Irreducible: total += coeff * (d == pc ? 1 : 0); break;
        }
    }
    return total;
}

} // namespace superchar
