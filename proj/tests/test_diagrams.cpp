#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <set>

#include "superchar/diagrams.hpp"
#include "test_util.hpp"

using namespace superchar;
using test_util::all_subsets;
using test_util::atypical;
using test_util::full_diagrams;

static std::mt19937 rng(911);

TEST_CASE("weight to diagram dictionary") {
    CHECK(weight_to_diagram(Weight{{0}, {0}}, 1, 1) == Diagram(1, 1, {0}, {0}));
    CHECK(weight_to_diagram(Weight{{0, 0}, {0, 0}}, 2, 2) == Diagram(2, 2, {0, -1}, {0, -1}));
    CHECK(weight_to_diagram(Weight{{3, 1}, {}}, 2, 0) == Diagram(2, 0, {3, 0}, {}));
    CHECK_THROWS_AS(weight_to_diagram(Weight{{0, 1}, {}}, 2, 0), std::invalid_argument);
}

TEST_CASE("weight dictionary round-trips") {
    CHECK(diagram_to_weight(Diagram(1, 1, {0}, {0})) == Weight{{0}, {0}});
    CHECK(diagram_to_weight(Diagram(2, 2, {0, -1}, {0, -1})) == Weight{{0, 0}, {0, 0}});
    for (const auto& f : full_diagrams(2, 2, -3, 3))
        CHECK(weight_to_diagram(diagram_to_weight(f), 2, 2) == f);
    CHECK_THROWS_AS(diagram_to_weight(Diagram(2, 2, {0}, {1})), std::invalid_argument);
}

TEST_CASE("euler weight dictionary") {
    CHECK(euler_weight_to_diagram({}, {}, 0, 0, 2, 2) == Diagram(2, 2, {}, {}));
    CHECK(euler_weight_to_diagram({-1}, {1}, 1, 1, 2, 2) == Diagram(2, 2, {-1}, {-1}));
    // at (r,s) = (m,n) it agrees with the full dictionary
    const Weight w{{2, 0}, {1, -1}};
    CHECK(euler_weight_to_diagram(w.lambda, w.mu, 2, 2, 2, 2) == weight_to_diagram(w, 2, 2));
    CHECK_THROWS_AS(euler_weight_to_diagram({0}, {}, 1, 0, 2, 2), std::invalid_argument);

    for (const auto& A : all_subsets(-3, 3, 1)) {
        const Diagram g(2, 2, A, A);
        const Weight tn = euler_diagram_to_weight(g);
        CHECK(euler_weight_to_diagram(tn.lambda, tn.mu, g.r(), g.s(), 2, 2) == g);
    }
}

TEST_CASE("admissible partner") {
    const Diagram f = atypical(2, {2, 3});
    CHECK(admissible_partner(f, 3) == 4);
    CHECK(admissible_partner(f, 2) == 5);
    CHECK(admissible_partner(atypical(1, {0}), 0) == 1);
    CHECK_THROWS_AS(admissible_partner(f, 0), std::invalid_argument);
}

TEST_CASE("partner uniqueness against the raw conditions") {
    // Exhaustively verify that the scan finds the unique b satisfying the
    // balance and positivity conditions.
    for (const auto& f : full_diagrams(2, 2, -2, 2)) {
        for (int a : f.crosses()) {
            int found = 0, the_b = 0;
            for (int b = a + 1; b <= 10; ++b) {
                if (f.symbol(b) != Symbol::Circle) continue;
                int sum = 0;
                bool positive_prefixes = true;
                for (int c = a; c < b; ++c) {
                    sum += f.phi_at(c);
                    if (sum <= 0) positive_prefixes = false;
                }
                if (positive_prefixes && sum + f.phi_at(b) == 0) {
                    ++found;
                    the_b = b;
                }
            }
            REQUIRE(found == 1);
            CHECK(admissible_partner(f, a) == the_b);
            CHECK(is_admissible(f, Transposition(a, the_b)));
        }
    }
}

TEST_CASE("interval nesting and balance") {
    for (const auto& f : full_diagrams(2, 2, -3, 3)) {
        const auto crosses = f.crosses();
        // balance: as many crosses as circles within [a, b]
        for (int a : crosses) {
            const int b = admissible_partner(f, a);
            int ncross = 0, ncirc = 0;
            for (int c = a; c <= b; ++c) {
                if (f.symbol(c) == Symbol::Cross) ++ncross;
                if (f.symbol(c) == Symbol::Circle) ++ncirc;
            }
            CHECK(ncross == ncirc);
        }
        // nesting: two admissible intervals are disjoint or strictly nested
        for (int a1 : crosses)
            for (int a2 : crosses) {
                if (a1 >= a2) continue;
                const int b1 = admissible_partner(f, a1);
                const int b2 = admissible_partner(f, a2);
                const bool disjoint = b1 < a2 || b2 < a1;
                const bool nested12 = a1 < a2 && b2 < b1;
                const bool nested21 = a2 < a1 && b1 < b2;
                CHECK((disjoint || nested12 || nested21));
            }
    }
}

TEST_CASE("apply_transposition") {
    CHECK(apply_transposition(Transposition(0, 1), atypical(1, {0})) == atypical(1, {1}));
    CHECK(apply_transposition(Transposition(1, 2), atypical(2, {2, 3})) == atypical(2, {1, 3}));
    const Diagram d(2, 2, {0, 2}, {-1, 2});
    CHECK(apply_transposition(Transposition(-1, 0),
                              apply_transposition(Transposition(-1, 0), d)) == d);
}

TEST_CASE("pi_C applies commuting admissible moves") {
    const Diagram f = atypical(2, {2, 3});
    CHECK(pi_C(f, {}) == f);
    CHECK(pi_C(f, {2, 3}) == atypical(2, {4, 5}));
    CHECK_THROWS_AS(pi_C(f, {0}), std::invalid_argument);

    // order independence: applying the two transpositions in either order
    for (const auto& g : full_diagrams(2, 2, -2, 2)) {
        const auto crosses = g.crosses();
        if (crosses.size() != 2) continue;
        const Transposition t1(crosses[0], admissible_partner(g, crosses[0]));
        const Transposition t2(crosses[1], admissible_partner(g, crosses[1]));
        const Diagram a = apply_transposition(t2, apply_transposition(t1, g));
        const Diagram b = apply_transposition(t1, apply_transposition(t2, g));
        CHECK(a == b);
        CHECK(a == pi_C(g, crosses));
    }
}

TEST_CASE("star_add, drop_crosses, truncate_above") {
    const Diagram h(1, 1, {}, {});
    CHECK(star_add(h, {}) == h);
    CHECK(star_add(h, {0}) == atypical(1, {0}));
    CHECK(star_add(atypical(2, {-1}), {1}) == atypical(2, {-1, 1}));
    CHECK_THROWS_AS(star_add(atypical(1, {0}), {0}), std::invalid_argument);

    const Diagram f = atypical(2, {-1, 1});
    CHECK(truncate_above(f, 0) == Diagram(2, 2, {-1}, {-1}));
    CHECK(truncate_above(f, 5) == f);
    CHECK(drop_crosses(f, {-1, 1}) == Diagram(2, 2, {}, {}));
    CHECK_THROWS_AS(drop_crosses(f, {0}), std::invalid_argument);
}

TEST_CASE("eps_sign basics") {
    CHECK(eps_sign({2}, {1}) == 1);
    CHECK(eps_sign({1}, {2}) == -1);
    CHECK_THROWS_AS(eps_sign({1, 2}, {2, 3}), std::invalid_argument);
}

TEST_CASE("eps_sign equals the corrected counting formula and brute force") {
    const auto sets = [&](int maxk) {
        std::vector<std::vector<int>> out;
        for (int k = 0; k <= maxk; ++k)
            for (auto& s : all_subsets(-3, 3, k)) out.push_back(s);
        return out;
    };
    for (const auto& X : sets(2))
        for (const auto& Y : sets(2)) {
            bool disjoint = true;
            for (int x : X)
                if (std::find(Y.begin(), Y.end(), x) != Y.end()) disjoint = false;
            if (!disjoint) continue;

            // counting formula: (-1)^{sum_i |Y cap (x_i, +inf)|}
            long count = 0;
            for (int x : X)
                for (int y : Y)
                    if (y > x) ++count;
            const int counting = count % 2 == 0 ? 1 : -1;

            // brute force: sign of the sorting permutation via cycle count
            std::vector<int> seq;
            for (int v : X) seq.push_back(v);
            for (int v : Y) seq.push_back(v);
            std::sort(seq.begin(), seq.begin() + X.size(), std::greater<int>());
            std::sort(seq.begin() + X.size(), seq.end(), std::greater<int>());
            std::vector<int> target = seq;
            std::sort(target.begin(), target.end(), std::greater<int>());
            std::vector<int> perm(seq.size());
            for (std::size_t i = 0; i < seq.size(); ++i)
                perm[i] = std::find(target.begin(), target.end(), seq[i]) - target.begin();
            std::vector<bool> seen(perm.size(), false);
            int cycles = 0;
            for (std::size_t i = 0; i < perm.size(); ++i) {
                if (seen[i]) continue;
                ++cycles;
                for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
            }
            const int brute =
                ((static_cast<int>(perm.size()) - cycles) % 2 == 0) ? 1 : -1;

            const int val = eps_sign(X, Y);
            CHECK(val == counting);
            CHECK(val == brute);
            // block swap
            CHECK(val * eps_sign(Y, X) ==
                  ((X.size() * Y.size()) % 2 == 0 ? 1 : -1));
        }
}

TEST_CASE("is_partially_polynomial") {
    CHECK(is_partially_polynomial(Diagram(2, 2, {}, {})));
    CHECK(is_partially_polynomial(Diagram(2, 2, {0, -1}, {0, -1})));
    CHECK_FALSE(is_partially_polynomial(Diagram(2, 2, {1, -1}, {1, -1})));
}

TEST_CASE("cross_split") {
    {
        const auto [f0, f1] = cross_split(atypical(2, {0, -1}));
        CHECK(f0.empty());
        CHECK(f1 == std::vector<int>{-1, 0});
    }
    {
        const auto [f0, f1] = cross_split(atypical(2, {2, 3}));
        CHECK(f0.empty());
        CHECK(f1 == std::vector<int>{2, 3});
    }
    {
        // full diagram without crosses
        const auto [f0, f1] = cross_split(Diagram(2, 2, {0, 1}, {-1, 2}));
        CHECK(f0.empty());
        CHECK(f1.empty());
        CHECK_THROWS_AS(cross_split(Diagram(2, 2, {}, {})), std::invalid_argument);
    }
    {
        // cross at -2 has partner -1 <= 0, cross at 0 has partner 1 > 0
        const auto [f0, f1] = cross_split(atypical(2, {-2, 0}));
        CHECK(f0 == std::vector<int>{-2});
        CHECK(f1 == std::vector<int>{0});
    }
}

TEST_CASE("diagram validation") {
    CHECK_THROWS_AS(Diagram(2, 2, {0}, {}), std::invalid_argument);     // r-s != m-n
    CHECK_THROWS_AS(Diagram(1, 1, {0, 1}, {0, 1}), std::invalid_argument); // too many
    CHECK_THROWS_AS(Diagram(2, 2, {0, 0}, {1, 2}), std::invalid_argument); // duplicates
    CHECK(Diagram(2, 2, {5, -5}, {0, 7}).is_full());
    CHECK_FALSE(Diagram(2, 2, {5}, {0}).is_full());
}
