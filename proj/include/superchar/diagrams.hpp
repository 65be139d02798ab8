#pragma once

#include <algorithm>
#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superchar/errors.hpp"

namespace superchar {

/// Dominant-weight data: lambda (length m) and mu (length n), both
/// non-increasing.  Also used for the (tau, nu) data of Euler weights, with
/// lengths r and s.
struct Weight {
    std::vector<int> lambda;
    std::vector<int> mu;

    friend bool operator==(const Weight&, const Weight&) = default;
};

inline bool is_non_increasing(const std::vector<int>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1]) return false;
    return true;
}

/// Symbols of the function Z -> {x, o, >, <} attached to a diagram.
enum class Symbol { Cross, Circle, Greater, Less };

inline int phi(Symbol s) {
    switch (s) {
        case Symbol::Cross: return 1;
        case Symbol::Circle: return -1;
        default: return 0;
    }
}

/// A transposition of Z swapping a < b.
struct Transposition {
    int a;
    int b;

    Transposition(int a_, int b_) : a(a_), b(b_) {
        if (a >= b) throw std::invalid_argument("Transposition: requires a < b");
    }

    friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

/// A pair (A,B) of finite integer sets with ambient (m,n).  Crosses sit on
/// A cap B, > on A\B, < on B\A, circles elsewhere.  The diagram is "full"
/// when |A| = m and |B| = n; otherwise it is an Euler diagram with
/// (r,s) = (|A|,|B|), which the constructor requires to satisfy r-s = m-n,
/// r <= m, s <= n.
class Diagram {
  public:
    Diagram(int m, int n, std::vector<int> A, std::vector<int> B)
        : m_(m), n_(n), A_(std::move(A)), B_(std::move(B)) {
        normalize(A_, "A");
        normalize(B_, "B");
        const int r = static_cast<int>(A_.size());
        const int s = static_cast<int>(B_.size());
        if (m < 0 || n < 0) throw std::invalid_argument("Diagram: negative ambient");
        if (r > m || s > n || r - s != m - n)
            throw std::invalid_argument("Diagram: set sizes incompatible with ambient (m,n)");
    }

    int m() const { return m_; }
    int n() const { return n_; }
    int r() const { return static_cast<int>(A_.size()); }
    int s() const { return static_cast<int>(B_.size()); }

    /// Sorted ascending, no duplicates.
    const std::vector<int>& A() const { return A_; }
    const std::vector<int>& B() const { return B_; }

    bool is_full() const { return r() == m_ && s() == n_; }

    bool in_A(int pos) const { return std::binary_search(A_.begin(), A_.end(), pos); }
    bool in_B(int pos) const { return std::binary_search(B_.begin(), B_.end(), pos); }

    Symbol symbol(int pos) const {
        const bool a = in_A(pos), b = in_B(pos);
        if (a && b) return Symbol::Cross;
        if (a) return Symbol::Greater;
        if (b) return Symbol::Less;
        return Symbol::Circle;
    }

    int phi_at(int pos) const { return phi(symbol(pos)); }

    /// Positions of crosses (A cap B), ascending.
    std::vector<int> crosses() const {
        std::vector<int> out;
        std::set_intersection(A_.begin(), A_.end(), B_.begin(), B_.end(),
                              std::back_inserter(out));
        return out;
    }

    /// Number of crosses.
    int atypicality() const { return static_cast<int>(crosses().size()); }

    /// Positions of non-circle symbols (A cup B), ascending.
    std::vector<int> support() const {
        std::vector<int> out;
        std::set_union(A_.begin(), A_.end(), B_.begin(), B_.end(), std::back_inserter(out));
        return out;
    }

    /// A \ B (the > positions).
    std::vector<int> greater_set() const {
        std::vector<int> out;
        std::set_difference(A_.begin(), A_.end(), B_.begin(), B_.end(),
                            std::back_inserter(out));
        return out;
    }

    /// B \ A (the < positions).
    std::vector<int> less_set() const {
        std::vector<int> out;
        std::set_difference(B_.begin(), B_.end(), A_.begin(), A_.end(),
                            std::back_inserter(out));
        return out;
    }

    friend auto operator<=>(const Diagram&, const Diagram&) = default;

  private:
    static void normalize(std::vector<int>& v, const char* which) {
        std::sort(v.begin(), v.end());
        if (std::adjacent_find(v.begin(), v.end()) != v.end())
            throw std::invalid_argument(std::string("Diagram: duplicate entries in ") + which);
    }

    int m_;
    int n_;
    std::vector<int> A_;
    std::vector<int> B_;
};

/// Weight -> full diagram: A = {lambda_i + 1 - i}, B = {j - m - mu_j}.
inline Diagram weight_to_diagram(const Weight& w, int m, int n) {
    if (static_cast<int>(w.lambda.size()) != m || static_cast<int>(w.mu.size()) != n)
        throw std::invalid_argument("weight_to_diagram: weight lengths do not match (m,n)");
    if (!is_non_increasing(w.lambda) || !is_non_increasing(w.mu))
        throw std::invalid_argument("weight_to_diagram: weight is not dominant");
    std::vector<int> A(m), B(n);
    for (int i = 0; i < m; ++i) A[i] = w.lambda[i] - i;
    for (int j = 0; j < n; ++j) B[j] = (j + 1) - m - w.mu[j];
    return Diagram(m, n, std::move(A), std::move(B));
}

/// Inverse of weight_to_diagram.
inline Weight diagram_to_weight(const Diagram& f) {
    if (!f.is_full()) throw std::invalid_argument("diagram_to_weight: diagram is not full");
    const int m = f.m(), n = f.n();
    std::vector<int> lambda(m), mu(n);
    // A descending recovers lambda, B ascending recovers mu.
    for (int i = 0; i < m; ++i) lambda[i] = f.A()[m - 1 - i] + i;
    for (int j = 0; j < n; ++j) mu[j] = (j + 1) - m - f.B()[j];
    return Weight{std::move(lambda), std::move(mu)};
}

/// Euler weight (tau, nu) of shape (r,s) -> Euler diagram:
/// A = {tau_i + 1 - i}, B = {j - r - nu_j}.
inline Diagram euler_weight_to_diagram(const std::vector<int>& tau, const std::vector<int>& nu,
                                       int r, int s, int m, int n) {
    if (r - s != m - n)
        throw std::invalid_argument("euler_weight_to_diagram: r - s must equal m - n");
    if (r < 0 || s < 0 || r > m || s > n)
        throw std::invalid_argument("euler_weight_to_diagram: (r,s) out of range");
    if (static_cast<int>(tau.size()) != r || static_cast<int>(nu.size()) != s)
        throw std::invalid_argument("euler_weight_to_diagram: weight lengths do not match (r,s)");
    if (!is_non_increasing(tau) || !is_non_increasing(nu))
        throw std::invalid_argument("euler_weight_to_diagram: weight is not dominant");
    std::vector<int> A(r), B(s);
    for (int i = 0; i < r; ++i) A[i] = tau[i] - i;
    for (int j = 0; j < s; ++j) B[j] = (j + 1) - r - nu[j];
    return Diagram(m, n, std::move(A), std::move(B));
}

/// (tau, nu) of an Euler diagram.
inline Weight euler_diagram_to_weight(const Diagram& g) {
    const int r = g.r(), s = g.s();
    std::vector<int> tau(r), nu(s);
    for (int i = 0; i < r; ++i) tau[i] = g.A()[r - 1 - i] + i;
    for (int j = 0; j < s; ++j) nu[j] = (j + 1) - r - g.B()[j];
    return Weight{std::move(tau), std::move(nu)};
}

/// The unique b > a such that pi_a^b is admissible for f: scan rightward from
/// the cross at a accumulating phi; b is the first position where the running
/// sum hits zero.  Terminates because circles are cofinite.
inline int admissible_partner(const Diagram& f, int a) {
    if (f.symbol(a) != Symbol::Cross)
        throw std::invalid_argument("admissible_partner: position is not a cross");
    int sum = 1;
    const int hard_stop = (f.support().empty() ? a : std::max(f.support().back(), a)) +
                          2 * (f.m() + f.n()) + 2;
    for (int pos = a + 1; pos <= hard_stop; ++pos) {
        sum += f.phi_at(pos);
        if (sum == 0) return pos;
    }
    throw std::logic_error("admissible_partner: scan did not terminate");
}

inline bool is_admissible(const Diagram& f, const Transposition& t) {
    return f.symbol(t.a) == Symbol::Cross && admissible_partner(f, t.a) == t.b;
}

/// Relabel positions a <-> b in both defining sets.
inline Diagram apply_transposition(const Transposition& t, const Diagram& f) {
    const auto swapped = [&](std::vector<int> S) {
        const bool ha = std::binary_search(S.begin(), S.end(), t.a);
        const bool hb = std::binary_search(S.begin(), S.end(), t.b);
        if (ha != hb) {
            if (ha) {
                S.erase(std::find(S.begin(), S.end(), t.a));
                S.push_back(t.b);
            } else {
                S.erase(std::find(S.begin(), S.end(), t.b));
                S.push_back(t.a);
            }
        }
        return S;
    };
    return Diagram(f.m(), f.n(), swapped(f.A()), swapped(f.B()));
}

/// Commuting product of the admissible transpositions pi_c, c in C.  All
/// partners are computed against f itself; admissible transpositions of a
/// fixed diagram pairwise commute.
inline Diagram pi_C(const Diagram& f, const std::vector<int>& C) {
    std::vector<int> from, to;
    for (int c : C) {
        if (f.symbol(c) != Symbol::Cross)
            throw std::invalid_argument("pi_C: C contains a non-cross position");
        from.push_back(c);
        to.push_back(admissible_partner(f, c));
    }
    const auto moved = [&](std::vector<int> S) {
        for (std::size_t k = 0; k < from.size(); ++k) {
            auto it = std::find(S.begin(), S.end(), from[k]);
            if (it != S.end()) *it = to[k];
        }
        return S;
    };
    return Diagram(f.m(), f.n(), moved(f.A()), moved(f.B()));
}

/// h*C: turn the circles at C into crosses (C joins both sets).
inline Diagram star_add(const Diagram& h, const std::vector<int>& C) {
    std::vector<int> A = h.A(), B = h.B();
    for (int c : C) {
        if (h.symbol(c) != Symbol::Circle)
            throw std::invalid_argument("star_add: C contains a non-circle position");
        A.push_back(c);
        B.push_back(c);
    }
    return Diagram(h.m(), h.n(), std::move(A), std::move(B));
}

/// f_B: crosses at the positions of B become circles.
inline Diagram drop_crosses(const Diagram& f, const std::vector<int>& drop) {
    std::vector<int> A = f.A(), B = f.B();
    for (int d : drop) {
        if (f.symbol(d) != Symbol::Cross)
            throw std::invalid_argument("drop_crosses: set contains a non-cross position");
        A.erase(std::find(A.begin(), A.end(), d));
        B.erase(std::find(B.begin(), B.end(), d));
    }
    return Diagram(f.m(), f.n(), std::move(A), std::move(B));
}

/// f_{>d}: delete all crosses strictly greater than d.
inline Diagram truncate_above(const Diagram& f, int d) {
    std::vector<int> drop;
    for (int c : f.crosses())
        if (c > d) drop.push_back(c);
    return drop_crosses(f, drop);
}

/// Sign of the permutation sorting (X desc, Y desc) into the descending order
/// of X cup Y, computed by explicit inversion counting.
inline int eps_sign(const std::vector<int>& X, const std::vector<int>& Y) {
    std::vector<int> xs = X, ys = Y;
    std::sort(xs.begin(), xs.end(), std::greater<int>());
    std::sort(ys.begin(), ys.end(), std::greater<int>());
    for (int x : xs)
        if (std::find(ys.begin(), ys.end(), x) != ys.end())
            throw std::invalid_argument("eps_sign: sets are not disjoint");
    std::vector<int> seq = xs;
    seq.insert(seq.end(), ys.begin(), ys.end());
    int inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] < seq[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

/// True iff every element of B is at most n-m (vacuously true for empty B).
inline bool is_partially_polynomial(const Diagram& f) {
    return f.B().empty() || f.B().back() <= f.n() - f.m();
}

/// Partition of the crosses of a full diagram by whether the admissible
/// partner exceeds n-m: returns (f0 crosses, f1 crosses).
inline std::pair<std::vector<int>, std::vector<int>> cross_split(const Diagram& f) {
    if (!f.is_full()) throw std::invalid_argument("cross_split: diagram is not full");
    std::vector<int> f0, f1;
    for (int a : f.crosses()) {
        if (admissible_partner(f, a) <= f.n() - f.m())
            f0.push_back(a);
        else
            f1.push_back(a);
    }
    return {std::move(f0), std::move(f1)};
}

} // namespace superchar
