// Exhaustive small-graph and small-complex enumeration up to vertex
// relabeling, plus the seeded samplers used by the cross-validation harness.
#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "complex.hpp"
#include "graph.hpp"
#include "monomial.hpp"

namespace srgci {

// xorshift64*: tiny, seedable, identical across platforms.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545f4914f6cdd1dull;
    }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    bool coin() { return next() & 1; }
};

namespace detail {

inline int pair_index(int i, int j, int n) {  // i < j, 1-based
    return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
}

inline std::uint64_t edge_mask_of(const Graph& g) {
    int n = g.vertex_count();
    std::uint64_t m = 0;
    for (auto [i, j] : g.edges()) m |= std::uint64_t{1} << pair_index(i, j, n);
    return m;
}

// Minimum edge mask over relabelings that sort the degree sequence in
// non-increasing order; the restriction is labeling-invariant, so equal keys
// still mean isomorphic graphs.  Brute force, fine for n <= 8.
inline std::uint64_t canonical_graph_key(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(n + 1, 0);
    for (auto [i, j] : g.edges()) ++deg[i], ++deg[j];
    std::vector<int> sorted_deg(deg.begin() + 1, deg.end());
    std::sort(sorted_deg.rbegin(), sorted_deg.rend());
    std::vector<int> perm(n), pos(n + 1);
    std::iota(perm.begin(), perm.end(), 1);
    auto edges = g.edges();
    std::uint64_t best = ~std::uint64_t{0};
    do {
        // perm[v-1] = original vertex placed at new label v
        bool degree_ok = true;
        for (int v = 1; v <= n && degree_ok; ++v)
            if (deg[perm[v - 1]] != sorted_deg[v - 1]) degree_ok = false;
        if (!degree_ok) continue;
        for (int v = 1; v <= n; ++v) pos[perm[v - 1]] = v;
        std::uint64_t m = 0;
        for (auto [i, j] : edges) {
            int a = pos[i], b = pos[j];
            if (a > b) std::swap(a, b);
            m |= std::uint64_t{1} << pair_index(a, b, n);
        }
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline Graph graph_from_edge_mask(int n, std::uint64_t m) {
    Graph g(n, {});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if ((m >> pair_index(i, j, n)) & 1) g.add_edge(i, j);
    return g;
}

}  // namespace detail

// All graphs on exactly n labeled vertices, one representative per
// isomorphism class.  n <= 8.
inline void enumerate_graphs(int n, const std::function<void(const Graph&)>& visit) {
    if (n < 1 || n > 8) throw Error(errc::vertex_out_of_range, "enumerate_graphs needs 1 <= n <= 8");
    int pairs = n * (n - 1) / 2;
    std::set<std::uint64_t> seen;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
        Graph g = detail::graph_from_edge_mask(n, m);
        if (!seen.insert(detail::canonical_graph_key(g)).second) continue;
        visit(g);
    }
}

struct ComplexFilter {
    bool flag_only = true;   // clique complexes only; off adds pure non-flag complexes
    bool pure = false;
    bool core_equals_delta = false;
    bool non_ci = false;
};

namespace detail {

inline bool passes(const SimplicialComplex& c, const ComplexFilter& f) {
    if (f.pure && !c.is_pure()) return false;
    if (f.core_equals_delta && !core(c).core_equals_delta) return false;
    if (f.non_ci) {
        if (c.dimension() + 1 == c.vertex_count()) return false;  // full simplex: zero ideal
        if (is_complete_intersection(stanley_reisner_ideal(c))) return false;
    }
    return true;
}

}  // namespace detail

// Complexes on 1..max_n vertices (every vertex covered), one per isomorphism
// class of the generating graph.  With flag_only the stream is the clique
// complexes of all graphs; otherwise pure non-flag complexes on <= 5 vertices
// are appended as negative controls.
inline void enumerate_complexes(int max_n, const ComplexFilter& filter,
                                const std::function<void(const SimplicialComplex&)>& visit) {
    if (max_n > 8) throw Error(errc::vertex_out_of_range, "exhaustive enumeration capped at n = 8");
    for (int n = 1; n <= max_n; ++n) {
        enumerate_graphs(n, [&](const Graph& g) {
            SimplicialComplex c = simp_closure(g);
            if (c.vertex_support() != (n >= 32 ? ~mask_t{0} : ((mask_t{1} << n) - 1)))
                return;  // cannot happen: singleton cliques cover isolated vertices
            if (detail::passes(c, filter)) visit(c);
        });
    }
    if (filter.flag_only) return;
    // pure complexes with facet cardinality k on n vertices, all facet subsets
    for (int n = 2; n <= std::min(max_n, 5); ++n) {
        for (int k = 2; k < n; ++k) {
            mask_t all = (mask_t{1} << n) - 1;
            auto ksets = subsets_of_size(all, k);
            for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << ksets.size()); ++pick) {
                std::vector<mask_t> facs;
                mask_t covered = 0;
                for (std::size_t i = 0; i < ksets.size(); ++i)
                    if ((pick >> i) & 1) {
                        facs.push_back(ksets[i]);
                        covered |= ksets[i];
                    }
                if (covered != all) continue;
                auto c = SimplicialComplex::from_masks(n, facs);
                if (c.facet_masks().size() != facs.size()) continue;  // not an antichain pick
                if (is_flag(c)) continue;
                if (detail::passes(c, filter)) visit(c);
            }
        }
    }
}

// Seeded random graph on n vertices; each pair is an edge with probability 1/2.
inline Graph random_graph(int n, Rng& rng) {
    Graph g(n, {});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (rng.coin()) g.add_edge(i, j);
    return g;
}

// Random degree-2 squarefree ideal on up to max_n variables: a nonempty
// random edge set, retried until nonempty.
inline MonomialIdeal random_edge_ideal(int max_n, Rng& rng) {
    while (true) {
        int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 1)));
        Graph g = random_graph(n, rng);
        auto es = g.edges();
        if (es.empty()) continue;
        std::vector<Exponents> gens;
        for (auto [i, j] : es) {
            Exponents e(n, 0);
            e[i - 1] = e[j - 1] = 1;
            gens.push_back(std::move(e));
        }
        return MonomialIdeal(n, std::move(gens));
    }
}

}  // namespace srgci
