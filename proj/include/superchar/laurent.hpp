#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superchar/errors.hpp"

namespace superchar {

/// Exact integer coefficient type.
using Int = mpz_class;

/// Exponent vector of one Laurent monomial: x[i] is the exponent of x_{i+1},
/// y[j] the exponent of y_{j+1}.  Exponents may be negative.
struct Monomial {
    std::vector<int> x;
    std::vector<int> y;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

inline long total_x_degree(const Monomial& mo) {
    return std::accumulate(mo.x.begin(), mo.x.end(), 0L);
}

inline long total_y_degree(const Monomial& mo) {
    return std::accumulate(mo.y.begin(), mo.y.end(), 0L);
}

inline long total_degree(const Monomial& mo) {
    return total_x_degree(mo) + total_y_degree(mo);
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (std::size_t i = 0; i < out.x.size(); ++i) out.x[i] += b.x[i];
    for (std::size_t j = 0; j < out.y.size(); ++j) out.y[j] += b.y[j];
    return out;
}

/// Sparse Laurent polynomial in x_1..x_m, y_1..y_n with exact integer
/// coefficients.  Terms are keyed by exponent vector; the map order
/// (lexicographic on the concatenated exponents) is the canonical term order
/// used for serialization.  No zero coefficient is ever stored.
class LaurentPoly {
  public:
    LaurentPoly(int m, int n) : m_(m), n_(n) {
        if (m < 0 || n < 0) throw std::invalid_argument("LaurentPoly: negative ambient");
    }

    static LaurentPoly constant(int m, int n, Int c) {
        LaurentPoly p(m, n);
        p.add_term(p.unit_monomial(), std::move(c));
        return p;
    }

    static LaurentPoly one(int m, int n) { return constant(m, n, 1); }

    static LaurentPoly from_monomial(int m, int n, Monomial mo, Int c = 1) {
        LaurentPoly p(m, n);
        p.add_term(std::move(mo), std::move(c));
        return p;
    }

    /// x_i (0-based index) as a polynomial.
    static LaurentPoly var_x(int m, int n, int i) {
        LaurentPoly p(m, n);
        Monomial mo = p.unit_monomial();
        mo.x.at(i) = 1;
        p.add_term(std::move(mo), 1);
        return p;
    }

    /// y_j (0-based index) as a polynomial.
    static LaurentPoly var_y(int m, int n, int j) {
        LaurentPoly p(m, n);
        Monomial mo = p.unit_monomial();
        mo.y.at(j) = 1;
        p.add_term(std::move(mo), 1);
        return p;
    }

    int m() const { return m_; }
    int n() const { return n_; }

    Monomial unit_monomial() const {
        return Monomial{std::vector<int>(m_, 0), std::vector<int>(n_, 0)};
    }

    const std::map<Monomial, Int>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    std::size_t size() const { return terms_.size(); }

    Int coeff(const Monomial& mo) const {
        auto it = terms_.find(mo);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(Monomial mo, Int c) {
        if (static_cast<int>(mo.x.size()) != m_ || static_cast<int>(mo.y.size()) != n_)
            throw std::invalid_argument("LaurentPoly: monomial does not match ambient");
        if (c == 0) return;
        auto it = terms_.find(mo);
        if (it == terms_.end()) {
            terms_.emplace(std::move(mo), std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_ambient(o);
        for (const auto& [mo, c] : o.terms_) add_term(mo, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) {
        check_ambient(o);
        for (const auto& [mo, c] : o.terms_) add_term(mo, -c);
        return *this;
    }

    LaurentPoly operator-() const {
        LaurentPoly out(m_, n_);
        for (const auto& [mo, c] : terms_) out.terms_.emplace(mo, -c);
        return out;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_ambient(b);
        LaurentPoly out(a.m_, a.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
        return out;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator*(const LaurentPoly& a, const Int& c) {
        LaurentPoly out(a.m_, a.n_);
        if (c != 0)
            for (const auto& [mo, ca] : a.terms_) out.terms_.emplace(mo, ca * c);
        return out;
    }

    friend LaurentPoly operator*(const Int& c, const LaurentPoly& a) { return a * c; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }

  private:
    void check_ambient(const LaurentPoly& o) const {
        if (m_ != o.m_ || n_ != o.n_)
            throw std::invalid_argument("LaurentPoly: ambient (m,n) mismatch");
    }

    int m_;
    int n_;
    std::map<Monomial, Int> terms_;
};

/// The * involution: x_i -> 1/x_i, y_j -> 1/y_j.
inline LaurentPoly star(const LaurentPoly& p) {
    LaurentPoly out(p.m(), p.n());
    for (const auto& [mo, c] : p.terms()) {
        Monomial neg = mo;
        for (int& e : neg.x) e = -e;
        for (int& e : neg.y) e = -e;
        out.add_term(std::move(neg), c);
    }
    return out;
}

/// Coefficient of the all-zero exponent monomial.
inline Int constant_term(const LaurentPoly& p) { return p.coeff(p.unit_monomial()); }

namespace detail {

inline bool is_permutation_vector(const std::vector<int>& s) {
    std::vector<char> seen(s.size(), 0);
    for (int v : s) {
        if (v < 0 || v >= static_cast<int>(s.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

inline int permutation_sign(const std::vector<int>& s) {
    int inv = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] > s[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

/// All permutations of {0..k-1} with their signs.
inline std::vector<std::pair<std::vector<int>, int>> signed_permutations(int k) {
    std::vector<int> s(k);
    std::iota(s.begin(), s.end(), 0);
    std::vector<std::pair<std::vector<int>, int>> out;
    do {
        out.emplace_back(s, permutation_sign(s));
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
}

} // namespace detail

/// Action of (sigma, tau) in S_m x S_n: x_i -> x_{sigma(i)}, y_j -> y_{tau(j)}.
inline LaurentPoly act(const std::vector<int>& sigma, const std::vector<int>& tau,
                       const LaurentPoly& p) {
    if (static_cast<int>(sigma.size()) != p.m() || static_cast<int>(tau.size()) != p.n())
        throw std::invalid_argument("act: permutation sizes do not match ambient");
    if (!detail::is_permutation_vector(sigma) || !detail::is_permutation_vector(tau))
        throw std::invalid_argument("act: not a permutation");
    LaurentPoly out(p.m(), p.n());
    for (const auto& [mo, c] : p.terms()) {
        Monomial img = p.unit_monomial();
        for (int i = 0; i < p.m(); ++i) img.x[sigma[i]] = mo.x[i];
        for (int j = 0; j < p.n(); ++j) img.y[tau[j]] = mo.y[j];
        out.add_term(std::move(img), c);
    }
    return out;
}

namespace detail {

enum class Block { X, Y, Both };

inline LaurentPoly alternate_over(const LaurentPoly& p, Block block) {
    const auto id_m = [](int k) {
        std::vector<int> v(k);
        std::iota(v.begin(), v.end(), 0);
        return v;
    };
    std::vector<std::pair<std::vector<int>, int>> perms_x, perms_y;
    if (block == Block::X || block == Block::Both)
        perms_x = signed_permutations(p.m());
    else
        perms_x = {{id_m(p.m()), 1}};
    if (block == Block::Y || block == Block::Both)
        perms_y = signed_permutations(p.n());
    else
        perms_y = {{id_m(p.n()), 1}};

    LaurentPoly out(p.m(), p.n());
    for (const auto& [sx, sgx] : perms_x)
        for (const auto& [sy, sgy] : perms_y) {
            LaurentPoly img = act(sx, sy, p);
            if (sgx * sgy < 0)
                out -= img;
            else
                out += img;
        }
    return out;
}

} // namespace detail

/// Alternation over the full group S_m x S_n:  sum_w sign(w) w(p).
inline LaurentPoly alternate(const LaurentPoly& p) {
    return detail::alternate_over(p, detail::Block::Both);
}

/// Alternation over S_m only (y variables untouched).
inline LaurentPoly alternate_x(const LaurentPoly& p) {
    return detail::alternate_over(p, detail::Block::X);
}

/// Alternation over S_n only.
inline LaurentPoly alternate_y(const LaurentPoly& p) {
    return detail::alternate_over(p, detail::Block::Y);
}

namespace detail {

// Graded lex order on shifted (non-negative) exponent vectors.  Degree-
// compatible, which the division termination argument relies on.
struct DegLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        long da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

} // namespace detail

/// Exact division in the Laurent ring: returns r with r*q == p, or throws
/// NotDivisible.  Both operands are shifted to ordinary polynomials by a
/// monomial factor, then divided with a remainder check.
inline LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.m() != q.m() || p.n() != q.n())
        throw std::invalid_argument("exact_div: ambient mismatch");
    if (q.is_zero()) throw std::invalid_argument("exact_div: division by zero");
    const int m = p.m(), n = p.n();
    if (p.is_zero()) return LaurentPoly(m, n);

    const auto min_exps = [m, n](const LaurentPoly& f) {
        Monomial mins = f.terms().begin()->first;
        for (const auto& [mo, c] : f.terms()) {
            for (int i = 0; i < m; ++i) mins.x[i] = std::min(mins.x[i], mo.x[i]);
            for (int j = 0; j < n; ++j) mins.y[j] = std::min(mins.y[j], mo.y[j]);
        }
        return mins;
    };
    const Monomial pmin = min_exps(p), qmin = min_exps(q);

    using Ordered = std::map<Monomial, Int, detail::DegLexLess>;
    const auto shifted = [](const LaurentPoly& f, const Monomial& mins) {
        Ordered out;
        for (const auto& [mo, c] : f.terms()) {
            Monomial s = mo;
            for (std::size_t i = 0; i < s.x.size(); ++i) s.x[i] -= mins.x[i];
            for (std::size_t j = 0; j < s.y.size(); ++j) s.y[j] -= mins.y[j];
            out.emplace(std::move(s), c);
        }
        return out;
    };
    Ordered rem = shifted(p, pmin);
    const Ordered div = shifted(q, qmin);
    const Monomial& qlead = div.rbegin()->first;
    const Int& qlc = div.rbegin()->second;

    Ordered quot;
    while (!rem.empty()) {
        const Monomial rlead = rem.rbegin()->first;
        const Int rlc = rem.rbegin()->second;
        Monomial t = rlead;
        for (std::size_t i = 0; i < t.x.size(); ++i) {
            t.x[i] -= qlead.x[i];
            if (t.x[i] < 0) throw NotDivisible("exact_div: no exact quotient");
        }
        for (std::size_t j = 0; j < t.y.size(); ++j) {
            t.y[j] -= qlead.y[j];
            if (t.y[j] < 0) throw NotDivisible("exact_div: no exact quotient");
        }
        if (!mpz_divisible_p(rlc.get_mpz_t(), qlc.get_mpz_t()))
            throw NotDivisible("exact_div: leading coefficient not divisible");
        Int tc = rlc / qlc;
        for (const auto& [qm, qc] : div) {
            Monomial prod = mono_mul(t, qm);
            auto it = rem.find(prod);
            if (it == rem.end()) {
                rem.emplace(std::move(prod), -tc * qc);
            } else {
                it->second -= tc * qc;
                if (it->second == 0) rem.erase(it);
            }
        }
        quot.emplace(std::move(t), std::move(tc));
    }

    LaurentPoly out(m, n);
    for (const auto& [mo, c] : quot) {
        Monomial s = mo;
        for (int i = 0; i < m; ++i) s.x[i] += pmin.x[i] - qmin.x[i];
        for (int j = 0; j < n; ++j) s.y[j] += pmin.y[j] - qmin.y[j];
        out.add_term(std::move(s), c);
    }
    return out;
}

/// Supersymmetry test: S_m x S_n symmetry plus the cancellation property
/// (substituting x_1 = t, y_1 = -t yields a t-free result).
inline bool is_supersymmetric(const LaurentPoly& p) {
    const int m = p.m(), n = p.n();
    const auto id_vec = [](int k) {
        std::vector<int> v(k);
        std::iota(v.begin(), v.end(), 0);
        return v;
    };
    // Adjacent transpositions generate the symmetric groups.
    for (int i = 0; i + 1 < m; ++i) {
        std::vector<int> s = id_vec(m);
        std::swap(s[i], s[i + 1]);
        if (!(act(s, id_vec(n), p) == p)) return false;
    }
    for (int j = 0; j + 1 < n; ++j) {
        std::vector<int> s = id_vec(n);
        std::swap(s[j], s[j + 1]);
        if (!(act(id_vec(m), s, p) == p)) return false;
    }
    if (m == 0 || n == 0) return true;

    // Key: t exponent followed by the remaining variables' exponents.
    std::map<std::vector<int>, Int> acc;
    for (const auto& [mo, c] : p.terms()) {
        std::vector<int> key;
        key.reserve(m + n - 1);
        key.push_back(mo.x[0] + mo.y[0]);
        key.insert(key.end(), mo.x.begin() + 1, mo.x.end());
        key.insert(key.end(), mo.y.begin() + 1, mo.y.end());
        Int signed_c = (mo.y[0] % 2 != 0) ? Int(-c) : c;
        auto it = acc.find(key);
        if (it == acc.end()) {
            acc.emplace(std::move(key), std::move(signed_c));
        } else {
            it->second += signed_c;
            if (it->second == 0) acc.erase(it);
        }
    }
    for (const auto& [key, c] : acc)
        if (key[0] != 0) return false;
    return true;
}

} // namespace superchar
