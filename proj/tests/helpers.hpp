// Shared constructors for the test suites.
#pragma once

#include <vector>

#include "srgci/classify.hpp"
#include "srgci/cohomology.hpp"
#include "srgci/complex.hpp"
#include "srgci/monomial.hpp"

namespace srgci::testing {

inline SimplicialComplex cx(int n, const std::vector<Face>& facets) {
    return SimplicialComplex::create(n, facets);
}

// Two disjoint edges on 4 vertices: the running example everywhere.
inline SimplicialComplex delta_a() { return cx(4, {{1, 2}, {3, 4}}); }

inline MonomialIdeal ideal(int n, const std::vector<std::vector<int>>& gens) {
    std::vector<Exponents> es;
    for (const auto& g : gens) es.emplace_back(g.begin(), g.end());
    return MonomialIdeal(n, std::move(es));
}

// Squarefree ideal from variable-index supports (1-based).
inline MonomialIdeal sqfree(int n, const std::vector<std::vector<int>>& supports) {
    std::vector<Exponents> es;
    for (const auto& s : supports) {
        Exponents e(n, 0);
        for (int v : s) e[v - 1] = 1;
        es.push_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(es));
}

// Disjoint union of r simplexes with s vertices each.
inline SimplicialComplex simplex_union(int r, int s) {
    std::vector<Face> facets;
    for (int b = 0; b < r; ++b) {
        Face f;
        for (int k = 1; k <= s; ++k) f.push_back(b * s + k);
        facets.push_back(std::move(f));
    }
    return cx(r * s, facets);
}

}  // namespace srgci::testing
