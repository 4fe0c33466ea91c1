#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "srgci/classify.hpp"
#include "srgci/crossval.hpp"
#include "srgci/enumerate.hpp"

using namespace srgci;
using testing::cx;
using testing::delta_a;
using testing::simplex_union;
using testing::sqfree;

TEST_CASE("check_gci") {
    auto rep = check_gci(delta_a());
    REQUIRE(rep.verdict);
    REQUIRE_FALSE(rep.is_ci);
    REQUIRE(rep.cond_pure);
    REQUIRE(rep.cond_cu);
    REQUIRE(rep.cond_linked);
    REQUIRE(rep.cond_path4);

    // complete intersection short-circuit
    auto ci = check_gci(cx(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
    REQUIRE(ci.verdict);
    REQUIRE(ci.is_ci);

    // core a proper subcomplex: outside the characterization
    REQUIRE_THROWS_AS(check_gci(cx(3, {{1, 2}, {2, 3}})), Error);
}

TEST_CASE("check_gci agrees with the flc oracle on the 5-path") {
    auto field = FieldSpec::default_field();
    auto p5 = cx(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
    auto rep = check_gci(p5);
    auto I = stanley_reisner_ideal(p5);
    bool oracle = is_flc(power(I, 2), p5.dimension() + 1, field).verdict;
    REQUIRE(rep.verdict == oracle);
}

TEST_CASE("check_linear_powers") {
    REQUIRE(check_linear_powers(delta_a()).verdict);

    auto c5 = cx(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    auto rep = check_linear_powers(c5);
    REQUIRE_FALSE(rep.verdict);
    REQUIRE_FALSE(rep.cond_chordal);
    REQUIRE(rep.chordless_cycle.size() == 5);

    REQUIRE(check_linear_powers(cx(7, {{1, 2, 3}, {1, 2, 4}, {5, 6, 7}})).verdict);
}

TEST_CASE("classify_structure") {
    auto pts = classify_structure(cx(5, {{1}, {2}, {3}, {4}, {5}}));
    REQUIRE(pts.verdict);
    REQUIRE(pts.decomposition->kind == DecompositionKind::Points);
    REQUIRE(pts.decomposition->points == std::vector<int>{1, 2, 3, 4, 5});

    auto path = classify_structure(cx(4, {{1, 2}, {2, 3}, {3, 4}}));
    REQUIRE(path.verdict);
    REQUIRE(path.decomposition->kind == DecompositionKind::PathUnion);
    REQUIRE(path.decomposition->paths == std::vector<std::vector<int>>{{1, 2, 3, 4}});

    auto du = classify_structure(delta_a());
    REQUIRE(du.verdict);
    REQUIRE(du.decomposition->paths == std::vector<std::vector<int>>{{1, 2}, {3, 4}});

    auto fp = classify_structure(cx(7, {{1, 2, 3}, {1, 2, 4}, {5, 6, 7}}));
    REQUIRE(fp.verdict);
    REQUIRE(fp.decomposition->kind == DecompositionKind::FacetPairUnion);
    REQUIRE(fp.decomposition->pairs.size() == 2);
    REQUIRE(fp.decomposition->pairs[0].type1);
    REQUIRE(fp.decomposition->pairs[0].f == Face{1, 2, 3});
    REQUIRE(fp.decomposition->pairs[0].g == Face{1, 2, 4});
    REQUIRE_FALSE(fp.decomposition->pairs[1].type1);
    REQUIRE(fp.decomposition->pairs[1].f == Face{5, 6, 7});

    REQUIRE_FALSE(classify_structure(cx(3, {{1, 2}, {2, 3}, {1, 3}})).verdict);
}

TEST_CASE("matroid base exchange") {
    REQUIRE(is_matroidal(stanley_reisner_ideal(delta_a())));
    REQUIRE_FALSE(is_matroidal(sqfree(4, {{1, 2}, {3, 4}})));
    REQUIRE_THROWS_AS(is_matroidal(testing::ideal(2, {{2, 0}, {0, 2}})), Error);
    REQUIRE_THROWS_AS(is_matroidal(sqfree(3, {{1}, {2, 3}})), Error);
}

TEST_CASE("power linearity routing") {
    auto field = FieldSpec::default_field();
    auto I = stanley_reisner_ideal(delta_a());
    for (int l = 1; l <= 3; ++l) REQUIRE(power_has_linear_resolution(I, l, field).linear);
    // certificate route on a large matroidal instance (three 4-blocks)
    auto big = stanley_reisner_ideal(simplex_union(3, 4));
    REQUIRE(power_has_linear_resolution(big, 2, field).linear);
    // scan route on a non-linear base
    REQUIRE_FALSE(power_has_linear_resolution(sqfree(4, {{1, 3}, {2, 4}}), 1, field).linear);
}

TEST_CASE("minimal multiplicity") {
    auto field = FieldSpec::default_field();
    auto yes = check_minimal_multiplicity(cx(6, {{1, 2, 3}, {4, 5, 6}}), field);
    REQUIRE(yes.verdict);
    REQUIRE(yes.e == 2);
    REQUIRE(yes.lengths == std::vector<int>{1, 0});

    auto no = check_minimal_multiplicity(cx(7, {{1, 2, 3}, {1, 2, 4}, {5, 6, 7}}), field);
    REQUIRE_FALSE(no.verdict);

    auto da = check_minimal_multiplicity(delta_a(), field);
    REQUIRE(da.verdict);
    REQUIRE(da.e == 2);

    REQUIRE_THROWS_AS(check_minimal_multiplicity(cx(3, {{1, 2}, {3}}), field), Error);
    REQUIRE_THROWS_AS(check_minimal_multiplicity(cx(3, {{1}, {2}, {3}}), field), Error);
}

TEST_CASE("equivalence ladder on small complexes") {
    // the four characterizations agree instance by instance at n <= 4
    CrossvalConfig cfg;
    cfg.max_n = 4;
    cfg.max_power = 2;
    auto sum = main_equivalence_crossval(cfg);
    REQUIRE(sum.instances > 0);
    REQUIRE(sum.discrepancies.empty());
}

TEST_CASE("gci verdicts match linear-powers verdicts plus chordality") {
    // Cor 1.7-style consequence at small scale, checker vs checker
    ComplexFilter filter;
    filter.flag_only = true;
    filter.pure = true;
    filter.core_equals_delta = true;
    filter.non_ci = true;
    enumerate_complexes(5, filter, [&](const SimplicialComplex& c) {
        bool gci_chordal =
            check_gci(c).verdict && is_chordal(one_skeleton_graph(c)).chordal;
        REQUIRE(gci_chordal == check_linear_powers(c).verdict);
    });
}
