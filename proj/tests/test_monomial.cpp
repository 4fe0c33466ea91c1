#include <catch2/catch_amalgamated.hpp>
#include <algorithm>

#include "helpers.hpp"
#include "srgci/monomial.hpp"

using namespace srgci;
using testing::cx;
using testing::delta_a;
using testing::ideal;
using testing::sqfree;

TEST_CASE("Stanley-Reisner translation") {
    auto I = stanley_reisner_ideal(delta_a());
    REQUIRE(I == sqfree(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
    REQUIRE(complex_of(I) == delta_a());

    // full simplex has a zero Stanley-Reisner ideal
    REQUIRE_THROWS_AS(stanley_reisner_ideal(cx(3, {{1, 2, 3}})), Error);
}

TEST_CASE("round trip on assorted complexes") {
    for (auto c : {delta_a(), cx(5, {{1, 2, 3}, {3, 4}, {4, 5}}),
                   cx(3, {{1, 2}, {2, 3}, {1, 3}})})
        REQUIRE(complex_of(stanley_reisner_ideal(c)) == c);
}

TEST_CASE("powers") {
    auto p = ideal(2, {{1, 1}});
    REQUIRE(power(p, 2) == ideal(2, {{2, 2}}));
    auto I = stanley_reisner_ideal(delta_a());
    REQUIRE(power(I, 1) == I);
    auto sq = power(I, 2);
    REQUIRE(sq.generators().size() == 9);  // ten products, one collision
    // every generator of I^2 is a product of two generators of I
    for (const auto& g : sq.generators()) {
        bool found = false;
        for (const auto& a : I.generators())
            for (const auto& b : I.generators()) {
                Exponents s(4);
                for (int k = 0; k < 4; ++k) s[k] = a[k] + b[k];
                if (s == g) found = true;
            }
        REQUIRE(found);
        REQUIRE(total_degree(g) == 4);
    }
}

TEST_CASE("radical") {
    auto I = stanley_reisner_ideal(delta_a());
    REQUIRE(radical(power(I, 2)) == I);
    REQUIRE(radical(I) == I);
    REQUIRE(radical(ideal(2, {{2, 3}})) == ideal(2, {{1, 1}}));
    // radical of any power is the radical of the base
    auto J = ideal(3, {{1, 1, 0}, {0, 2, 1}});
    for (int l = 1; l <= 3; ++l) REQUIRE(radical(power(J, l)) == radical(J));
}

TEST_CASE("edge graph and complete intersections") {
    auto I = stanley_reisner_ideal(delta_a());
    REQUIRE(edge_graph(I) == Graph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
    REQUIRE_FALSE(is_complete_intersection(I));

    auto ci = sqfree(4, {{1, 3}, {2, 4}});  // C4 complex
    REQUIRE(is_complete_intersection(ci));

    REQUIRE_THROWS_AS(edge_graph(sqfree(3, {{1, 2, 3}})), Error);
}

TEST_CASE("max exponents") {
    auto I = stanley_reisner_ideal(delta_a());
    REQUIRE(max_exponents(I) == std::vector<int>{1, 1, 1, 1});
    REQUIRE(max_exponents(power(I, 2)) == std::vector<int>{2, 2, 2, 2});
    REQUIRE(max_exponents(ideal(2, {{2, 3}})) == std::vector<int>{2, 3});
}

TEST_CASE("degree complex") {
    auto J = sqfree(3, {{1, 3}, {2, 3}});
    auto d = degree_complex(J, {0, 0, -1});
    REQUIRE(d.is_empty_complex());  // {1},{2} excluded, only the empty face left

    // all a_j >= rho_j makes every excess set empty: void complex
    auto v = degree_complex(J, {1, 1, 1});
    REQUIRE(v.is_void());

    auto I = stanley_reisner_ideal(delta_a());
    auto d0 = degree_complex(I, {0, 0, 0, 0});
    REQUIRE(d0 == delta_a());
}

TEST_CASE("degree complex truncation stability") {
    // pushing a coordinate below -1 never changes the degree complex
    auto I = power(stanley_reisner_ideal(delta_a()), 2);
    for (int j = 0; j < 4; ++j) {
        SignedDegree a{0, -1, 1, 0};
        SignedDegree b = a;
        b[j] = -3;
        a[j] = -1;
        REQUIRE(degree_complex(I, a) == degree_complex(I, b));
    }
}

TEST_CASE("degree complex membership definition") {
    // direct re-check of the membership test against the definition
    auto I = power(stanley_reisner_ideal(delta_a()), 2);
    SignedDegree a{1, 0, -1, 2};
    auto d = degree_complex(I, a);
    mask_t gneg = 0b0100;
    for (mask_t f = 0; f < 16; ++f) {
        if (f & gneg) continue;
        bool member = true;
        for (const auto& g : I.generators()) {
            bool witness = false;
            for (int j = 0; j < 4 && !witness; ++j)
                if (!((f >> j) & 1) && !((gneg >> j) & 1) && g[j] > a[j]) witness = true;
            if (!witness) member = false;
        }
        REQUIRE(d.contains(f) == member);
    }
}
