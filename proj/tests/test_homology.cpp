#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "srgci/enumerate.hpp"
#include "srgci/homology.hpp"

using namespace srgci;
using testing::cx;

TEST_CASE("matrix rank") {
    IntMatrix id3{3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}};
    IntMatrix zero{2, 3, {0, 0, 0, 0, 0, 0}};
    // boundary matrix from edges to vertices of the 4-cycle
    IntMatrix d1{4, 4, {-1, 0, -1, 0,
                        1, -1, 0, 0,
                        0, 1, 0, -1,
                        0, 0, 1, 1}};
    for (auto field : {FieldSpec::rational(), FieldSpec::default_field(), FieldSpec::prime(2)}) {
        REQUIRE(matrix_rank(id3, field) == 3);
        REQUIRE(matrix_rank(zero, field) == 0);
        REQUIRE(matrix_rank(d1, field) == 3);
    }
}

TEST_CASE("reduced homology conventions") {
    auto field = FieldSpec::default_field();
    REQUIRE(reduced_homology(SimplicialComplex::void_complex(3), field).dims.empty());
    auto empty = SimplicialComplex::empty_complex(3);
    REQUIRE(reduced_homology(empty, field).rank(-1) == 1);
    REQUIRE(reduced_homology_rank(empty, -1, field) == 1);
}

TEST_CASE("reduced homology of standard complexes") {
    auto field = FieldSpec::default_field();
    auto two_triangles = cx(6, {{1, 2, 3}, {4, 5, 6}});
    auto prof = reduced_homology(two_triangles, field);
    REQUIRE(prof.rank(0) == 1);
    REQUIRE(prof.rank(1) == 0);
    REQUIRE(prof.rank(2) == 0);

    auto hollow = cx(3, {{1, 2}, {2, 3}, {1, 3}});
    REQUIRE(reduced_homology(hollow, field).rank(1) == 1);
    REQUIRE(reduced_homology(hollow, field).rank(0) == 0);

    auto simplex = cx(4, {{1, 2, 3, 4}});
    for (int q = -1; q <= 3; ++q) REQUIRE(reduced_homology_rank(simplex, q, field) == 0);

    // boundary of the tetrahedron: a 2-sphere
    auto sphere = cx(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    REQUIRE(reduced_homology(sphere, field).rank(2) == 1);
    REQUIRE(reduced_homology(sphere, field).rank(1) == 0);
}

TEST_CASE("homology ranks match the reduced Euler characteristic") {
    auto field = FieldSpec::rational();
    enumerate_graphs(5, [&](const Graph& g) {
        auto c = simp_closure(g);
        auto prof = reduced_homology(c, field);
        long long chi = -1;  // empty face
        int n = c.vertex_count();
        for (mask_t s = 1; s < (mask_t{1} << n); ++s)
            if (c.contains(s)) chi += (mask_size(s) % 2 ? 1 : -1);
        long long alt = 0;
        for (auto [q, r] : prof.dims) alt += (q % 2 == 0 ? 1 : -1) * r;
        REQUIRE(chi == alt);
    });
}

TEST_CASE("prime and rational fields agree on small clique complexes") {
    // no torsion phenomena at this scale for clique complexes of 5-vertex graphs
    enumerate_graphs(5, [&](const Graph& g) {
        auto c = simp_closure(g);
        auto a = reduced_homology(c, FieldSpec::default_field());
        auto b = reduced_homology(c, FieldSpec::rational());
        REQUIRE(a.dims == b.dims);
    });
}

TEST_CASE("homology degrees beyond qmax are suppressed") {
    auto hollow = cx(3, {{1, 2}, {2, 3}, {1, 3}});
    auto by = faces_by_size(hollow, 2);
    auto prof = detail::homology_from_graded_faces(by, FieldSpec::default_field(), 0);
    REQUIRE(prof.rank(0) == 0);  // H0 is trivial and H1 is not requested
    REQUIRE(prof.dims.count(1) == 0);
}
