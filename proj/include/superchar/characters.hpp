#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superchar/diagrams.hpp"
#include "superchar/laurent.hpp"

namespace superchar {

enum class Basis { Kac, Euler, Irreducible };

inline std::string basis_name(Basis b) {
    switch (b) {
        case Basis::Kac: return "kac";
        case Basis::Euler: return "euler";
        default: return "irr";
    }
}

/// Formal integer combination of basis characters, keyed by diagrams.  Kac and
/// irreducible combinations are keyed by full diagrams, Euler combinations by
/// Euler diagrams (which include the full ones).  No zero coefficients.
class CharCombination {
  public:
    CharCombination(Basis basis, int m, int n) : basis_(basis), m_(m), n_(n) {}

    Basis basis() const { return basis_; }
    int m() const { return m_; }
    int n() const { return n_; }
    const std::map<Diagram, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Int coeff(const Diagram& d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add(const Diagram& d, const Int& c) {
        if (d.m() != m_ || d.n() != n_)
            throw std::invalid_argument("CharCombination: diagram ambient mismatch");
        if ((basis_ == Basis::Kac || basis_ == Basis::Irreducible) && !d.is_full())
            throw std::invalid_argument("CharCombination: this basis requires full diagrams");
        if (c == 0) return;
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            terms_.emplace(d, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    CharCombination& operator+=(const CharCombination& o) {
        check_compatible(o);
        for (const auto& [d, c] : o.terms_) add(d, c);
        return *this;
    }

    CharCombination& operator-=(const CharCombination& o) {
        check_compatible(o);
        for (const auto& [d, c] : o.terms_) add(d, -c);
        return *this;
    }

    friend CharCombination operator+(CharCombination a, const CharCombination& b) {
        return a += b;
    }
    friend CharCombination operator-(CharCombination a, const CharCombination& b) {
        return a -= b;
    }

    friend CharCombination operator*(const CharCombination& a, const Int& c) {
        CharCombination out(a.basis_, a.m_, a.n_);
        if (c != 0)
            for (const auto& [d, ca] : a.terms_) out.terms_.emplace(d, ca * c);
        return out;
    }

    friend bool operator==(const CharCombination& a, const CharCombination& b) {
        return a.basis_ == b.basis_ && a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }

  private:
    void check_compatible(const CharCombination& o) const {
        if (basis_ != o.basis_ || m_ != o.m_ || n_ != o.n_)
            throw std::invalid_argument("CharCombination: basis/ambient mismatch");
    }

    Basis basis_;
    int m_;
    int n_;
    std::map<Diagram, Int> terms_;
};

struct WeylFactors {
    LaurentPoly dx;
    LaurentPoly dy;
    LaurentPoly dxy;
};

/// Delta(x) = prod_{i>j}(1 - x_i/x_j), Delta(y) likewise,
/// Delta(x,y) = prod_{i,j}(1 + y_j/x_i).
inline WeylFactors weyl_factors(int m, int n) {
    LaurentPoly dx = LaurentPoly::one(m, n);
    for (int j = 0; j < m; ++j)
        for (int i = j + 1; i < m; ++i) {
            LaurentPoly factor = LaurentPoly::one(m, n);
            Monomial mo = factor.unit_monomial();
            mo.x[i] = 1;
            mo.x[j] = -1;
            factor.add_term(std::move(mo), -1);
            dx *= factor;
        }
    LaurentPoly dy = LaurentPoly::one(m, n);
    for (int l = 0; l < n; ++l)
        for (int k = l + 1; k < n; ++k) {
            LaurentPoly factor = LaurentPoly::one(m, n);
            Monomial mo = factor.unit_monomial();
            mo.y[k] = 1;
            mo.y[l] = -1;
            factor.add_term(std::move(mo), -1);
            dy *= factor;
        }
    LaurentPoly dxy = LaurentPoly::one(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            LaurentPoly factor = LaurentPoly::one(m, n);
            Monomial mo = factor.unit_monomial();
            mo.y[j] = 1;
            mo.x[i] = -1;
            factor.add_term(std::move(mo), 1);
            dxy *= factor;
        }
    return {std::move(dx), std::move(dy), std::move(dxy)};
}

namespace detail {

/// x^{exps} as a monomial supported on the x block (ambient m,n).
inline LaurentPoly x_power(int m, int n, const std::vector<int>& exps) {
    LaurentPoly p(m, n);
    Monomial mo = p.unit_monomial();
    mo.x = exps;
    p.add_term(std::move(mo), 1);
    return p;
}

inline LaurentPoly y_power(int m, int n, const std::vector<int>& exps) {
    LaurentPoly p(m, n);
    Monomial mo = p.unit_monomial();
    mo.y = exps;
    p.add_term(std::move(mo), 1);
    return p;
}

inline std::vector<int> staircase(int k) {
    std::vector<int> rho(k);
    for (int i = 0; i < k; ++i) rho[i] = k - 1 - i;
    return rho;
}

} // namespace detail

/// Schur polynomial in the x block by the bialternant formula; entries of
/// lambda may be negative (Laurent Schur).
inline LaurentPoly schur_in_x(const std::vector<int>& lambda, int m, int n) {
    if (static_cast<int>(lambda.size()) != m)
        throw std::invalid_argument("schur_in_x: lambda length must be m");
    if (!is_non_increasing(lambda)) throw std::invalid_argument("schur_in_x: lambda not dominant");
    if (m == 0) return LaurentPoly::one(m, n);
    const std::vector<int> rho = detail::staircase(m);
    std::vector<int> top(m);
    for (int i = 0; i < m; ++i) top[i] = lambda[i] + rho[i];
    const LaurentPoly num = alternate_x(detail::x_power(m, n, top));
    const LaurentPoly den = alternate_x(detail::x_power(m, n, rho));
    return exact_div(num, den);
}

inline LaurentPoly schur_in_y(const std::vector<int>& mu, int m, int n) {
    if (static_cast<int>(mu.size()) != n)
        throw std::invalid_argument("schur_in_y: mu length must be n");
    if (!is_non_increasing(mu)) throw std::invalid_argument("schur_in_y: mu not dominant");
    if (n == 0) return LaurentPoly::one(m, n);
    const std::vector<int> rho = detail::staircase(n);
    std::vector<int> top(n);
    for (int j = 0; j < n; ++j) top[j] = mu[j] + rho[j];
    const LaurentPoly num = alternate_y(detail::y_power(m, n, top));
    const LaurentPoly den = alternate_y(detail::y_power(m, n, rho));
    return exact_div(num, den);
}

/// ch K(f) = Delta(x,y) s_lambda(x) s_mu(y).
inline LaurentPoly kac_char(const Diagram& f) {
    if (!f.is_full()) throw std::invalid_argument("kac_char: diagram is not full");
    const Weight w = diagram_to_weight(f);
    const WeylFactors wf = weyl_factors(f.m(), f.n());
    return wf.dxy * schur_in_x(w.lambda, f.m(), f.n()) * schur_in_y(w.mu, f.m(), f.n());
}

/// ch E(g) for an Euler diagram g of shape (r,s), via the alternant formula:
/// the alternation of
///   prod_{i<=r, j<=n}(1+y_j/x_i) prod_{i>r, j<=s}(1+x_i/y_j) x^tau y^nu x^rho y^rho
/// divided exactly by Delta(x) x^rho Delta(y) y^rho.
inline LaurentPoly euler_char(const Diagram& g) {
    const int m = g.m(), n = g.n(), r = g.r(), s = g.s();
    const Weight w = euler_diagram_to_weight(g);
    const std::vector<int> rho_m = detail::staircase(m);
    const std::vector<int> rho_n = detail::staircase(n);

    std::vector<int> xe(m), ye(n);
    for (int i = 0; i < m; ++i) xe[i] = (i < r ? w.lambda[i] : 0) + rho_m[i];
    for (int j = 0; j < n; ++j) ye[j] = (j < s ? w.mu[j] : 0) + rho_n[j];
    LaurentPoly core = detail::x_power(m, n, xe) * detail::y_power(m, n, ye);

    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) {
            LaurentPoly factor = LaurentPoly::one(m, n);
            Monomial mo = factor.unit_monomial();
            mo.y[j] = 1;
            mo.x[i] = -1;
            factor.add_term(std::move(mo), 1);
            core *= factor;
        }
    for (int i = r; i < m; ++i)
        for (int j = 0; j < s; ++j) {
            LaurentPoly factor = LaurentPoly::one(m, n);
            Monomial mo = factor.unit_monomial();
            mo.x[i] = 1;
            mo.y[j] = -1;
            factor.add_term(std::move(mo), 1);
            core *= factor;
        }

    const LaurentPoly num = alternate(core);
    const LaurentPoly den =
        alternate_x(detail::x_power(m, n, rho_m)) * alternate_y(detail::y_power(m, n, rho_n));
    return exact_div(num, den);
}

/// Multiplication by (y_1...y_n)/(x_1...x_m).
inline LaurentPoly shift_T_laurent(const LaurentPoly& p) {
    Monomial shift{std::vector<int>(p.m(), -1), std::vector<int>(p.n(), 1)};
    return p * LaurentPoly::from_monomial(p.m(), p.n(), std::move(shift), 1);
}

/// T on the Euler basis of a maximally atypical gl(n,n) block:
/// T(E(B)) = (-1)^{n+p} [E(w(B)) - (-1)^p E({0} u w(B))] with p = |B|,
/// w the shift by -1; terms with more than n elements vanish.
inline CharCombination shift_T_euler(const CharCombination& c) {
    if (c.basis() != Basis::Euler)
        throw std::invalid_argument("shift_T_euler: Euler basis required");
    const int n = c.n();
    if (c.m() != n) throw std::invalid_argument("shift_T_euler: requires m == n");
    CharCombination out(Basis::Euler, n, n);
    for (const auto& [d, coeff] : c.terms()) {
        if (d.A() != d.B() || (!d.A().empty() && d.A().back() > 0))
            throw std::invalid_argument(
                "shift_T_euler: keys must be maximally atypical diagrams (B,B), B <= 0");
        const int p = d.r();
        std::vector<int> shifted = d.A();
        for (int& v : shifted) v -= 1;
        const int sign_np = ((n + p) % 2 == 0) ? 1 : -1;
        out.add(Diagram(n, n, shifted, shifted), coeff * sign_np);
        if (p + 1 <= n) {
            std::vector<int> with_zero = shifted;
            with_zero.push_back(0);
            const int sign_p = (p % 2 == 0) ? 1 : -1;
            out.add(Diagram(n, n, with_zero, with_zero), -coeff * sign_np * sign_p);
        }
    }
    return out;
}

/// Parameters of the graph Gamma_{n,m}: vertices are the integers in
/// [1-n-m, 0]; the "upper" vertices [1-n, 0] form a complete graph and are
/// each joined to every "lower" vertex in [1-n-m, -n].
struct GammaGraphParams {
    int n; // >= -1
    int m; // >= 1
};

/// chi(Gamma_{n,m}) = E(0) - sum_v eps(v) E(v) - sum_e eps(e) E(e), with
/// eps({i}) = (-1)^i; for n = -1 the combination is E(empty) alone.  The
/// result lives in the maximally atypical gl(rank,rank) block; terms with
/// more than `rank` elements vanish.
inline CharCombination chi_gamma(const GammaGraphParams& params, int rank = 2) {
    if (params.n < -1 || params.m < 1)
        throw std::invalid_argument("chi_gamma: requires n >= -1 and m >= 1");
    CharCombination out(Basis::Euler, rank, rank);
    out.add(Diagram(rank, rank, {}, {}), 1);
    if (params.n == -1) return out;

    const int lo = 1 - params.n - params.m;
    const auto eps_v = [](int i) { return (std::abs(i) % 2 == 0) ? 1 : -1; };
    for (int v = lo; v <= 0; ++v)
        out.add(Diagram(rank, rank, {v}, {v}), -eps_v(v));

    std::vector<std::pair<int, int>> edges;
    for (int u = 1 - params.n; u <= 0; ++u)
        for (int v = 1 - params.n; v < u; ++v) edges.emplace_back(u, v);
    for (int u = 1 - params.n; u <= 0; ++u)
        for (int v = lo; v <= -params.n; ++v) edges.emplace_back(u, v);
    for (const auto& [u, v] : edges) {
        if (rank < 2) continue;
        out.add(Diagram(rank, rank, {u, v}, {u, v}), -eps_v(u) * eps_v(v));
    }
    return out;
}

/// The character <-> supercharacter bridge: y_j -> -y_j.
inline LaurentPoly omega_super(const LaurentPoly& p) {
    LaurentPoly out(p.m(), p.n());
    for (const auto& [mo, c] : p.terms()) {
        const long ydeg = total_y_degree(mo);
        out.add_term(mo, (ydeg % 2 != 0) ? Int(-c) : c);
    }
    return out;
}

/// Keep only the partially polynomial Kac terms.
inline CharCombination filter_partially_polynomial(const CharCombination& c) {
    if (c.basis() != Basis::Kac)
        throw std::invalid_argument("filter_partially_polynomial: Kac basis required");
    CharCombination out(Basis::Kac, c.m(), c.n());
    for (const auto& [d, coeff] : c.terms())
        if (is_partially_polynomial(d)) out.add(d, coeff);
    return out;
}

} // namespace superchar
