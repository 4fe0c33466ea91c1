#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "srgci/cohomology.hpp"
#include "srgci/enumerate.hpp"

using namespace srgci;
using testing::cx;
using testing::delta_a;
using testing::simplex_union;
using testing::sqfree;

TEST_CASE("hochster dimensions") {
    auto field = FieldSpec::default_field();
    auto two_triangles = cx(6, {{1, 2, 3}, {4, 5, 6}});
    REQUIRE(hochster_dim(two_triangles, 1, {0, 0, 0, 0, 0, 0}, field) == 1);
    REQUIRE(hochster_dim(two_triangles, 2, {-1, 0, 0, 0, 0, 0}, field) == 0);
    REQUIRE(hochster_dim(two_triangles, 0, {0, 0, 0, 0, 0, 0}, field) == 0);
    // F not a face: zero
    REQUIRE(hochster_dim(delta_a(), 1, {-1, 0, -1, 0}, field) == 0);
    REQUIRE_THROWS_AS(hochster_dim(delta_a(), 1, {1, 0, 0, 0}, field), Error);
}

TEST_CASE("takayama dimensions") {
    auto field = FieldSpec::default_field();
    auto J = sqfree(3, {{1, 3}, {2, 3}});
    REQUIRE(takayama_dim(J, 1, {0, 0, -1}, field) == 1);

    auto I2 = power(stanley_reisner_ideal(delta_a()), 2);
    REQUIRE(takayama_dim(I2, 1, {0, 0, 0, 0}, field) == 1);
}

TEST_CASE("takayama equals hochster on squarefree ideals at nonpositive degrees") {
    auto field = FieldSpec::default_field();
    for (auto c : {delta_a(), cx(6, {{1, 2, 3}, {4, 5, 6}}), cx(3, {{1, 2}, {2, 3}, {1, 3}})}) {
        auto I = stanley_reisner_ideal(c);
        int n = c.vertex_count(), d = c.dimension() + 1;
        SignedDegree a(n, 0);
        std::function<void(int)> scan = [&](int j) {
            if (j == n) {
                for (int i = 0; i <= d; ++i)
                    REQUIRE(takayama_dim(I, i, a, field) == hochster_dim(c, i, a, field));
                return;
            }
            for (int v = -1; v <= 0; ++v) {
                a[j] = v;
                scan(j + 1);
            }
        };
        scan(0);
    }
}

TEST_CASE("flc verdicts") {
    auto field = FieldSpec::default_field();
    auto I = stanley_reisner_ideal(delta_a());
    REQUIRE(is_flc(I, 2, field).verdict);
    for (int l : {2, 3}) REQUIRE(is_flc(power(I, l), 2, field).verdict);

    auto J = sqfree(3, {{1, 3}, {2, 3}});
    auto r = is_flc(J, 2, field);
    REQUIRE_FALSE(r.verdict);
    REQUIRE(r.violations.size() == 1);
    REQUIRE(r.violations[0].i == 1);
    REQUIRE(r.violations[0].a == SignedDegree{0, 0, -1});
    REQUIRE(r.violations[0].dim == 1);
}

TEST_CASE("symmetry reduction does not change flc verdicts") {
    auto field = FieldSpec::default_field();
    Rng rng(11);
    for (int s = 0; s < 15; ++s) {
        auto J = random_edge_ideal(5, rng);
        int d = complex_of(radical(J)).dimension() + 1;
        auto with = is_flc(J, d, field, true);
        auto without = is_flc(J, d, field, false);
        REQUIRE(with.verdict == without.verdict);
    }
}

TEST_CASE("complete multipartite detection") {
    REQUIRE(complete_multipartite_blocks(stanley_reisner_ideal(delta_a())));
    auto blocks = *complete_multipartite_blocks(stanley_reisner_ideal(delta_a()));
    REQUIRE(blocks.size() == 2);

    // a path graph's edge ideal is not complete multipartite
    REQUIRE_FALSE(complete_multipartite_blocks(sqfree(4, {{1, 2}, {2, 3}, {3, 4}})));
    // non-degree-2 ideals are rejected outright
    REQUIRE_FALSE(complete_multipartite_blocks(sqfree(3, {{1, 2, 3}})));
}

TEST_CASE("block formula agrees with the generic scan on simplex unions") {
    auto field = FieldSpec::default_field();
    for (auto [r, s] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        auto c = simplex_union(r, s);
        auto I = stanley_reisner_ideal(c);
        int top = c.dimension() + 1;
        for (int l = 1; l <= 2; ++l) {
            auto fast = is_flc_power(I, l, top, field, true);
            auto slow = is_flc(power(I, l), top, field);
            REQUIRE(fast.verdict == slow.verdict);
            REQUIRE(fast.violations.size() == slow.violations.size());
        }
    }
    // unequal blocks give non-FLC; the two routes must agree on that too
    auto bad = cx(5, {{1, 2, 3}, {4, 5}});
    auto I = stanley_reisner_ideal(bad);
    for (int l = 1; l <= 2; ++l) {
        auto fast = is_flc_power(I, l, 3, field, true);
        auto slow = is_flc(power(I, l), 3, field);
        REQUIRE(fast.verdict == slow.verdict);
        REQUIRE(fast.violations.size() == slow.violations.size());
    }
}

TEST_CASE("multiplicity and Buchsbaum lengths") {
    auto field = FieldSpec::default_field();
    auto two_triangles = cx(6, {{1, 2, 3}, {4, 5, 6}});
    REQUIRE(multiplicity(two_triangles) == 2);
    REQUIRE(local_cohomology_lengths(two_triangles, field) == std::vector<int>{1, 0});

    REQUIRE(multiplicity(cx(3, {{1, 2, 3}})) == 1);
    REQUIRE(local_cohomology_lengths(cx(3, {{1, 2, 3}}), field) == std::vector<int>{0, 0});

    REQUIRE(multiplicity(delta_a()) == 2);
    REQUIRE(local_cohomology_lengths(delta_a(), field) == std::vector<int>{1});

    REQUIRE_THROWS_AS(local_cohomology_lengths(cx(3, {{1, 2}, {3}}), field), Error);
}
