// Z^n-graded local cohomology dimensions (Hochster and Takayama forms),
// finite-local-cohomology detection, multiplicity and Buchsbaum lengths.
//
// is_flc scans the box prod_j {-1,0,...,rho_j}.  Three exact reductions keep
// the scan tractable on the larger acceptance instances:
//   - degrees with more than top_dim-1 negative entries contribute homology
//     below degree -1, which vanishes identically;
//   - only the (top_dim-|G_a|)-skeleton of the degree complex carries the
//     homology degrees under test, so only small "excess sets" matter;
//   - variable permutations fixing the generator set act on the box without
//     changing the homology, so one representative per orbit suffices.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "homology.hpp"
#include "monomial.hpp"
#include "resolution.hpp"

namespace srgci {

struct LocalCohomologyEntry {
    int i;
    SignedDegree a;
    int dim;
};

struct FlcReport {
    bool verdict;
    std::vector<LocalCohomologyEntry> violations;
};

// Hochster: for a <= 0 with F = {j : a_j < 0},
//   dim [H^i_m(K[Delta])]_a = dim H~_{i-|F|-1}(lk F) when F is a face, else 0.
inline int hochster_dim(const SimplicialComplex& c, int i, const SignedDegree& a,
                        const FieldSpec& field) {
    if (static_cast<int>(a.size()) != c.vertex_count())
        throw Error(errc::vertex_out_of_range, "degree vector length mismatch");
    Face f;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] > 0) throw Error(errc::positive_degree, "Hochster form needs a <= 0");
        if (a[j] < 0) f.push_back(static_cast<int>(j) + 1);
    }
    if (!c.contains(f)) return 0;
    return reduced_homology_rank(link(c, f), i - static_cast<int>(f.size()) - 1, field);
}

// Takayama: dim [H^i_m(S/I)]_a = dim H~_{i-|G_a|-1}(Delta_a(I)).
inline int takayama_dim(const MonomialIdeal& ideal, int i, const SignedDegree& a,
                        const FieldSpec& field) {
    int g = 0;
    for (int x : a)
        if (x < 0) ++g;
    return reduced_homology_rank(degree_complex(ideal, a), i - g - 1, field);
}

namespace detail {

// Partition of the variables into classes closed under generator-preserving
// transpositions, plus groups of mutually swappable classes.
struct VariableSymmetry {
    std::vector<std::vector<int>> classes;  // 0-based variable indices, each sorted
    std::vector<int> family_of;             // class index -> family id
};

inline bool permutation_fixes_generators(const std::vector<Exponents>& gens,
                                         const std::vector<int>& perm) {
    std::vector<Exponents> mapped;
    mapped.reserve(gens.size());
    int n = static_cast<int>(perm.size());
    for (const auto& g : gens) {
        Exponents h(n);
        for (int k = 0; k < n; ++k) h[perm[k]] = g[k];
        mapped.push_back(std::move(h));
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == gens;  // gens are stored sorted
}

inline VariableSymmetry detect_symmetry(const MonomialIdeal& ideal) {
    const auto& gens = ideal.generators();
    int n = ideal.variable_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (find(i) == find(j)) continue;
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[i], perm[j]);
            if (permutation_fixes_generators(gens, perm)) parent[find(i)] = find(j);
        }
    VariableSymmetry sym;
    std::vector<int> class_of(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (class_of[r] < 0) {
            class_of[r] = static_cast<int>(sym.classes.size());
            sym.classes.emplace_back();
        }
        sym.classes[class_of[r]].push_back(i);
    }
    // swappable classes: the order-preserving bijection between two classes
    // of equal size extends to an automorphism
    int nc = static_cast<int>(sym.classes.size());
    std::vector<int> cparent(nc);
    std::iota(cparent.begin(), cparent.end(), 0);
    std::function<int(int)> cfind = [&](int x) {
        return cparent[x] == x ? x : cparent[x] = cfind(cparent[x]);
    };
    for (int a = 0; a < nc; ++a)
        for (int b = a + 1; b < nc; ++b) {
            if (sym.classes[a].size() != sym.classes[b].size()) continue;
            if (cfind(a) == cfind(b)) continue;
            std::iota(perm.begin(), perm.end(), 0);
            for (std::size_t k = 0; k < sym.classes[a].size(); ++k) {
                perm[sym.classes[a][k]] = sym.classes[b][k];
                perm[sym.classes[b][k]] = sym.classes[a][k];
            }
            if (permutation_fixes_generators(gens, perm)) cparent[cfind(a)] = cfind(b);
        }
    sym.family_of.resize(nc);
    for (int c = 0; c < nc; ++c) sym.family_of[c] = cfind(c);
    return sym;
}

// Worker state for one fully assigned degree vector inside the FLC scan.
struct FlcScanner {
    int n;
    int top_dim;
    const FieldSpec* field;
    std::vector<LocalCohomologyEntry>* violations;
    int last_void_gen = 0;  // memoized witness: speeds up the void region

    // excess[g] = bitmask of {j not in G : deg_j(gen g) > a_j}
    // Checks one degree vector given the per-generator excess masks.
    void check(const SignedDegree& a, const std::vector<mask_t>& excess) {
        mask_t gneg = 0;
        for (int j = 0; j < n; ++j)
            if (a[j] < 0) gneg |= mask_t{1} << j;
        int gsz = mask_size(gneg);
        int qmax = top_dim - gsz - 2;  // homology degrees -1..qmax are in range
        int max_face = qmax + 2;
        mask_t ambient = (n >= 32 ? ~mask_t{0} : ((mask_t{1} << n) - 1)) & ~gneg;

        // void degree complex: some generator has empty excess
        if (!excess.empty() && excess[static_cast<std::size_t>(last_void_gen) %
                                      excess.size()] == 0)
            return;
        std::vector<mask_t> smalls;
        for (std::size_t g = 0; g < excess.size(); ++g) {
            mask_t t = excess[g];
            if (t == 0) {
                last_void_gen = static_cast<int>(g);
                return;
            }
            if (mask_size(t) <= max_face) smalls.push_back(t);
        }
        std::sort(smalls.begin(), smalls.end());
        smalls.erase(std::unique(smalls.begin(), smalls.end()), smalls.end());

        // cone shortcut: a vertex missing from every small excess set is an
        // apex of the complex carrying the tested skeleton
        mask_t used = 0;
        for (mask_t t : smalls) used |= t;
        if (used != ambient) return;

        std::vector<std::vector<mask_t>> by(max_face + 1);
        for (int k = 0; k <= max_face; ++k) {
            for (mask_t f : subsets_of_size(ambient, k)) {
                bool face = true;
                for (mask_t t : smalls)
                    if ((t & ~f) == 0) {
                        face = false;
                        break;
                    }
                if (face) by[k].push_back(f);
            }
        }
        if (by[0].empty()) return;  // every singleton excluded and ∅ too: void
        auto prof = homology_from_graded_faces(by, *field, qmax);
        for (auto [q, r] : prof.dims) {
            if (r == 0 || q > qmax) continue;
            violations->push_back({q + gsz + 1, a, r});
        }
    }
};

}  // namespace detail

// Finite local cohomology scan.  top_dim is the Krull dimension of S/I,
// supplied by the caller (dim Delta + 1 for powers of a Stanley-Reisner
// ideal).  The verdict is true iff every [H^i_m(S/I)]_a with i < top_dim and
// some a_j < 0 vanishes; truncation stability of the degree complex confines
// the scan to a_j in {-1,0,...,rho_j}.
inline FlcReport is_flc(const MonomialIdeal& ideal, int top_dim, const FieldSpec& field,
                        bool use_symmetry = true) {
    int n = ideal.variable_count();
    const auto& gens = ideal.generators();
    std::vector<int> rho = max_exponents(ideal);
    FlcReport report{true, {}};
    if (top_dim <= 0) return report;  // i-range empty

    detail::VariableSymmetry sym;
    if (use_symmetry) {
        sym = detail::detect_symmetry(ideal);
    } else {
        for (int j = 0; j < n; ++j) sym.classes.push_back({j});
        sym.family_of.resize(n);
        std::iota(sym.family_of.begin(), sym.family_of.end(), 0);
    }

    detail::FlcScanner scanner{n, top_dim, &field, &report.violations};
    int max_neg = top_dim - 1;  // more negatives only reach homology below -1

    SignedDegree a(n, 0);
    // survivors: generator indices whose partial excess can still stay small
    std::vector<std::vector<int>> survivors(sym.classes.size() + 1);
    std::vector<std::vector<mask_t>> partial(sym.classes.size() + 1);
    survivors[0].resize(gens.size());
    std::iota(survivors[0].begin(), survivors[0].end(), 0);
    partial[0].assign(gens.size(), 0);

    // per-class values: assign a non-decreasing sequence over each class;
    // classes in one family additionally carry non-decreasing value tuples
    std::size_t nclasses = sym.classes.size();
    std::vector<std::vector<int>> class_values(nclasses);

    std::function<void(std::size_t, int)> recurse = [&](std::size_t ci, int negs) {
        if (ci == nclasses) {
            if (negs < 1) return;
            // full excess masks for surviving generators; dropped generators
            // have excess sets too large to affect the tested skeleton
            scanner.check(a, partial[nclasses]);
            return;
        }
        const auto& cls = sym.classes[ci];
        int csz = static_cast<int>(cls.size());
        int r = rho[cls[0]];
        // enumerate non-decreasing value sequences over {-1..r}
        std::vector<int> vals(csz, -1);
        std::function<void(int, int)> assign = [&](int pos, int lo) {
            if (pos == csz) {
                int new_negs = negs;
                for (int v : vals)
                    if (v < 0) ++new_negs;
                if (new_negs > max_neg) return;
                // family ordering: value tuple must be >= the previous
                // class of the same family
                if (ci > 0 && sym.family_of[ci] == sym.family_of[ci - 1] &&
                    sym.classes[ci - 1].size() == cls.size() &&
                    vals < class_values[ci - 1])
                    return;
                class_values[ci] = vals;
                for (int k = 0; k < csz; ++k) a[cls[k]] = vals[k];
                // filter survivors: partial excess must stay small enough
                int bound = scanner.top_dim - std::max(1, new_negs);
                auto& surv = survivors[ci + 1];
                auto& part = partial[ci + 1];
                surv.clear();
                part.clear();
                for (std::size_t s = 0; s < survivors[ci].size(); ++s) {
                    int g = survivors[ci][s];
                    mask_t t = partial[ci][s];
                    for (int k = 0; k < csz; ++k) {
                        int j = cls[k];
                        if (vals[k] >= 0 && gens[g][j] > vals[k]) t |= mask_t{1} << j;
                    }
                    // dropped generators have excess sets too large to touch
                    // the tested skeleton; zero-excess ones witness voidness
                    if (mask_size(t) <= bound || t == 0) {
                        surv.push_back(g);
                        part.push_back(t);
                    }
                }
                recurse(ci + 1, new_negs);
                return;
            }
            for (int v = lo; v <= r; ++v) {
                vals[pos] = v;
                assign(pos + 1, v);
            }
        };
        assign(0, -1);
    };
    recurse(0, 0);

    report.verdict = report.violations.empty();
    std::sort(report.violations.begin(), report.violations.end(),
              [](const auto& x, const auto& y) { return std::tie(x.i, x.a) < std::tie(y.i, y.a); });
    return report;
}

// Block decomposition when the ideal is exactly the edge ideal of a complete
// multipartite graph (all pairs between distinct blocks), with >= 2 blocks.
inline std::optional<std::vector<mask_t>> complete_multipartite_blocks(const MonomialIdeal& ideal) {
    if (!is_degree2(ideal)) return std::nullopt;
    Graph g = edge_graph(ideal);
    int n = ideal.variable_count();
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!g.has_edge(i, j)) parent[find(i)] = find(j);
    std::vector<mask_t> blocks;
    std::vector<int> block_of(n + 1, -1);
    for (int i = 1; i <= n; ++i) {
        int r = find(i);
        if (block_of[r] < 0) {
            block_of[r] = static_cast<int>(blocks.size());
            blocks.emplace_back(0);
        }
        blocks[block_of[r]] |= mask_t{1} << (i - 1);
        block_of[i] = block_of[r];
    }
    if (blocks.size() < 2) return std::nullopt;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (g.has_edge(i, j) == (block_of[i] == block_of[j])) return std::nullopt;
    return blocks;
}

// FLC scan for I^l without materializing the power, exact for edge ideals of
// complete multipartite graphs: x^c lies in I^l iff the graph admits l edges
// within the vertex capacities c, and with the negative support inverted the
// matching count collapses to a block-sum formula.  The degree complex is
// then void, a simplex, or {∅}, so each scanned degree costs O(#blocks).
// Other ideals (and small instances, where the generic scan doubles as a
// cross-check) fall through to is_flc on the materialized power.
inline FlcReport is_flc_power(const MonomialIdeal& base, int l, int top_dim,
                              const FieldSpec& field, bool force_block_formula = false) {
    auto blocks_opt = complete_multipartite_blocks(base);
    if (!blocks_opt || (base.variable_count() < 10 && !force_block_formula))
        return is_flc(power(base, l), top_dim, field);
    const auto& blocks = *blocks_opt;
    int n = base.variable_count();
    int r = static_cast<int>(blocks.size());
    FlcReport report{true, {}};
    if (top_dim <= 0) return report;
    int max_neg = top_dim - 1;

    // canonical degrees: a sorted value tuple over {-1..l} per block, tuples
    // of equal-size blocks sorted between blocks
    std::vector<std::vector<int>> tuples(r);
    std::function<void(int, int)> recurse = [&](int bi, int negs) {
        if (bi == r) {
            if (negs < 1) return;
            int neg_blocks = 0, b = -1;
            for (int i = 0; i < r; ++i) {
                bool has_neg = false;
                for (int v : tuples[i])
                    if (v < 0) has_neg = true;
                if (has_neg) {
                    ++neg_blocks;
                    b = i;
                }
            }
            if (neg_blocks >= 2) return;  // a cross pair inside the inverted set: void
            // positive capacity in the other blocks supports that many matched
            // pairs against the inverted block; l of them put x^{a+} in I^l
            long long others = 0;
            for (int i = 0; i < r; ++i) {
                if (i == b) continue;
                for (int v : tuples[i]) others += std::max(v, 0);
            }
            if (others >= l) return;  // void
            int gsz = 0;
            for (int v : tuples[b])
                if (v < 0) ++gsz;
            if (gsz < static_cast<int>(tuples[b].size())) return;  // simplex on the rest: acyclic
            // degree complex is {∅}: rank one in reduced degree -1
            if (gsz >= top_dim) return;
            SignedDegree a(n, 0);
            for (int i = 0; i < r; ++i) {
                Face verts = mask_to_face(blocks[i]);
                for (std::size_t k = 0; k < verts.size(); ++k) a[verts[k] - 1] = tuples[i][k];
            }
            report.violations.push_back({gsz, a, 1});
            return;
        }
        int bsz = mask_size(blocks[bi]);
        std::vector<int> vals(bsz);
        std::function<void(int, int, int)> assign = [&](int pos, int lo, int negs_here) {
            if (negs + negs_here > max_neg) return;
            if (pos == bsz) {
                if (bi > 0 && mask_size(blocks[bi - 1]) == bsz && vals < tuples[bi - 1]) return;
                tuples[bi] = vals;
                recurse(bi + 1, negs + negs_here);
                return;
            }
            for (int v = lo; v <= l; ++v) {
                vals[pos] = v;
                assign(pos + 1, v, negs_here + (v < 0 ? 1 : 0));
            }
        };
        assign(0, -1, 0);
    };
    recurse(0, 0);

    report.verdict = report.violations.empty();
    std::sort(report.violations.begin(), report.violations.end(),
              [](const auto& x, const auto& y) { return std::tie(x.i, x.a) < std::tie(y.i, y.a); });
    return report;
}

// Number of top-dimensional facets.
inline int multiplicity(const SimplicialComplex& c) {
    int d = c.dimension();
    int count = 0;
    for (mask_t f : c.facet_masks())
        if (mask_size(f) - 1 == d) ++count;
    return count;
}

// Buchsbaum local cohomology lengths: l_i = dim H~_{i-1}(Delta) for
// 1 <= i <= d-1 with d = dim K[Delta] = dim Delta + 1.
inline std::vector<int> local_cohomology_lengths(const SimplicialComplex& c,
                                                 const FieldSpec& field) {
    if (!c.is_pure()) throw Error(errc::not_pure, "Buchsbaum lengths need a pure complex");
    int d = c.dimension() + 1;
    auto prof = reduced_homology(c, field);
    std::vector<int> lengths;  // lengths[i-1] = l_i
    for (int i = 1; i <= d - 1; ++i) lengths.push_back(prof.rank(i - 1));
    return lengths;
}

}  // namespace srgci
