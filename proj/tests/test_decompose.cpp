#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "superchar/decompose.hpp"
#include "test_util.hpp"

using namespace superchar;
using test_util::all_subsets;
using test_util::atypical;
using test_util::full_diagrams;

namespace {

std::set<std::vector<int>> cross_sets(const std::vector<Diagram>& ds) {
    std::set<std::vector<int>> out;
    for (const auto& d : ds) out.insert(d.crosses());
    return out;
}

} // namespace

TEST_CASE("proj_flag") {
    const Diagram no_cross(2, 2, {0, 1}, {-1, 2});
    CHECK(proj_flag(no_cross) == std::vector<Diagram>{no_cross});

    const Diagram f(1, 1, {0}, {0});
    CHECK(cross_sets(proj_flag(f)) == std::set<std::vector<int>>{{0}, {1}});

    for (const auto& g : full_diagrams(2, 2, -2, 2))
        CHECK(proj_flag(g).size() == (std::size_t(1) << g.crosses().size()));
}

TEST_CASE("kac_constituents worked example") {
    const Diagram g = atypical(2, {2, 3});
    CHECK(cross_sets(kac_constituents(g)) ==
          std::set<std::vector<int>>{{2, 3}, {1, 3}, {0, 1}});

    const Diagram nc(2, 2, {0, 1}, {-1, 2});
    CHECK(kac_constituents(nc) == std::vector<Diagram>{nc});

    CHECK(cross_sets(kac_constituents(Diagram(1, 1, {1}, {1}))) ==
          std::set<std::vector<int>>{{1}, {0}});
}

TEST_CASE("reciprocity between constituents and flags") {
    // f is a constituent of K(g) exactly when g lies in the flag of P(f);
    // exhaustive over a window
    const auto window = full_diagrams(2, 1, -2, 2);
    std::map<Diagram, std::set<Diagram>> flags;
    for (const auto& f : window) {
        const auto pf = proj_flag(f);
        flags.emplace(f, std::set<Diagram>(pf.begin(), pf.end()));
    }
    for (const auto& g : window) {
        const auto ks = kac_constituents(g);
        const std::set<Diagram> kset(ks.begin(), ks.end());
        for (const auto& f : window)
            CHECK(kset.count(f) == flags.at(f).count(g));
    }
}

TEST_CASE("euler_support") {
    const Diagram f = atypical(2, {0, -1});
    const auto supp = euler_support(f);

    // every reported coefficient is the projective/Euler pairing
    for (const auto& [h, c] : supp) {
        CHECK(c != 0);
        CHECK(pair_proj_euler(f, h) == c);
    }

    // the partially polynomial slice of rank <= 1
    std::map<std::vector<int>, int> slice;
    for (const auto& [h, c] : supp)
        if (h.atypicality() <= 1 && is_partially_polynomial(h)) slice[h.crosses()] = c;
    const std::map<std::vector<int>, int> expect{{{}, 1}, {{0}, 1}, {{-1}, -1}};
    CHECK(slice == expect);

    // a diagram with no crosses supports only itself
    const Diagram nc(2, 2, {0, 1}, {-1, 2});
    const auto nsupp = euler_support(nc);
    REQUIRE(nsupp.size() == 1);
    CHECK(nsupp.front().first == nc);
    CHECK(nsupp.front().second == 1);

    // when every partner stays at or below n-m the support is the Kac flag
    const Diagram deep = atypical(2, {-4, -2});
    const auto dsupp = euler_support(deep);
    const auto dflag = proj_flag(deep);
    REQUIRE(dsupp.size() == dflag.size());
    for (const auto& [h, c] : dsupp) CHECK(h.is_full());
}

TEST_CASE("euler_support_pp agrees with the filtered full support") {
    for (const auto& A : all_subsets(-3, 0, 2)) {
        const Diagram f(2, 2, A, A);
        const auto pp = euler_support_pp(f);
        std::set<Diagram> from_full;
        for (const auto& [h, c] : euler_support(f))
            if (is_partially_polynomial(h)) from_full.insert(h);
        CHECK(std::set<Diagram>(pp.begin(), pp.end()) == from_full);
    }
    CHECK_THROWS_AS(euler_support_pp(atypical(2, {1, 2})), std::invalid_argument);
}

TEST_CASE("euler_to_irr worked example") {
    const Diagram h = atypical(2, {-1});
    const CharCombination c = euler_to_irr(h);
    REQUIRE(c.size() == 3);
    std::set<std::vector<int>> got;
    for (const auto& [d, coeff] : c.terms()) {
        CHECK(coeff == -1);
        got.insert(d.crosses());
    }
    CHECK(got == std::set<std::vector<int>>{{-2, 0}, {-1, 0}, {-2, -1}});
}

TEST_CASE("euler_to_irr routes agree and coefficients stay in {0,+-1}") {
    for (int k = 0; k <= 2; ++k)
        for (const auto& B : all_subsets(-3, 0, k)) {
            const Diagram h = atypical(2, B);
            const CharCombination a = euler_to_irr(h);
            const CharCombination b =
                euler_to_irr(h, std::nullopt, DecomposeMethod::MoveSearch);
            CHECK(a == b);
            for (const auto& [d, coeff] : a.terms()) CHECK(abs(coeff) == 1);
        }
    CHECK_THROWS_AS(euler_to_irr(atypical(2, {1})), std::invalid_argument);
}

TEST_CASE("euler_to_irr widening does not change the result") {
    const Diagram h = atypical(2, {-1});
    const auto base = euler_to_irr(h);
    const auto wide = euler_to_irr(h, Window{-1 - 5 - 3, 0});
    CHECK(base == wide);
}

TEST_CASE("euler_to_irr reports a boundary hit instead of truncating") {
    // the support of E({-1}) reaches crosses at -2, so a window starting
    // there must refuse rather than silently clip
    CHECK_THROWS_AS(euler_to_irr(atypical(2, {-1}), Window{-2, 0}), WindowTooSmall);
}

TEST_CASE("euler_to_irr of a full diagram recovers the Kac constituents") {
    const Diagram h = atypical(2, {0, -1});
    const CharCombination c = euler_to_irr(h);
    const auto ks = kac_constituents(h);
    CHECK(c.size() == ks.size());
    for (const auto& f : ks) CHECK(c.coeff(f) == 1);
}

TEST_CASE("irr_char on the trivial block element") {
    const IrrChar ic = irr_char(atypical(2, {0, -1}));
    CHECK(ic.euler_combination.size() == 1);
    CHECK(ic.euler_combination.coeff(Diagram(2, 2, {}, {})) == 1);
    CHECK(ic.laurent == euler_char(Diagram(2, 2, {}, {})));
    CHECK_THROWS_AS(irr_char(Diagram(2, 2, {0, -1}, {0, -2})), std::invalid_argument);
    CHECK_THROWS_AS(irr_char(atypical(2, {1, 2})), std::invalid_argument);
}

TEST_CASE("irr_char inverts the rank-one rows") {
    const auto single = [](std::vector<int> crosses) {
        CharCombination c(Basis::Euler, 2, 2);
        c.add(atypical(2, std::move(crosses)), 1);
        return c;
    };
    // ch L({-1,-2}) = E() - E(0)
    CHECK(irr_char(atypical(2, {-1, -2})).euler_combination == single({}) - single({0}));
    // ch L({0,-2}) = -(E(-1) - E(0) + 2 E())
    CHECK(irr_char(atypical(2, {0, -2})).euler_combination ==
          (single({-1}) - single({0}) + single({}) + single({})) * Int(-1));
}

TEST_CASE("decomposition identity at the Laurent level") {
    // ch E(h) = sum_f b_{f,h} ch L(f) expanded exactly
    for (int k = 0; k <= 1; ++k)
        for (const auto& B : all_subsets(-2, 0, k)) {
            const Diagram h = atypical(2, B);
            const CharCombination combo = euler_to_irr(h);
            LaurentPoly rhs(2, 2);
            for (const auto& [d, coeff] : combo.terms()) rhs += irr_char(d).laurent * coeff;
            CHECK(rhs == euler_char(h));
        }
}

TEST_CASE("p_set explicit families") {
    CHECK(p_set(1, 0, -6) == std::vector<std::vector<int>>{{0}});
    CHECK(p_set(0, 3, -6) == std::vector<std::vector<int>>{{}});

    // rank bound >= atypicality: every windowed subset
    CHECK(p_set(1, 1, -2) == std::vector<std::vector<int>>{{-2}, {-1}, {0}});

    // the m = 1 family: S1 (truncated) plus S2
    for (int n : {2, 3, 4}) {
        const int min_entry = 1 - n - 4;
        std::set<std::vector<int>> expect;
        for (int a = min_entry; a <= 1 - n; ++a) {
            std::vector<int> s{a};
            for (int v = 2 - n; v <= 0; ++v) s.push_back(v);
            std::sort(s.begin(), s.end());
            expect.insert(s);
        }
        for (int b = -n; b <= 0; ++b) {
            std::vector<int> s;
            for (int v = -n; v <= 0; ++v)
                if (v != b) s.push_back(v);
            expect.insert(s);
        }
        const auto got = p_set(n, 1, min_entry);
        CHECK(std::set<std::vector<int>>(got.begin(), got.end()) == expect);
    }
    CHECK_THROWS_AS(p_set(-1, 0, -3), std::invalid_argument);
}

TEST_CASE("p_set membership matches the pairing definition") {
    // A belongs exactly when some E(B) with |B| <= 1 pairs nontrivially
    const auto family = p_set(2, 1, -4);
    const std::set<std::vector<int>> members(family.begin(), family.end());
    for (const auto& A : all_subsets(-4, 0, 2)) {
        const Diagram f(2, 2, A, A);
        bool any = pair_proj_euler(f, Diagram(2, 2, {}, {})) != 0;
        for (int b = -6; b <= 0 && !any; ++b)
            any = pair_proj_euler(f, atypical(2, {b})) != 0;
        CHECK(any == (members.count(A) > 0));
    }
}

TEST_CASE("gl22 closed forms match window inversion") {
    for (int a = -2; a <= 0; ++a)
        for (int diff = 1; diff <= 3; ++diff) {
            const int b = a - diff;
            CHECK(gl22_irr_char(a, b) ==
                  irr_char(atypical(2, {b, a})).euler_combination);
        }
    CHECK_THROWS_AS(gl22_irr_char(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(gl22_irr_char(0, 0), std::invalid_argument);
}
