// Decision procedures: the generalized-complete-intersection criterion, the
// linear-powers criterion, the structure theorem for the class, the matroid
// base-exchange test and minimal multiplicity.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohomology.hpp"
#include "complex.hpp"
#include "graph.hpp"
#include "monomial.hpp"

namespace srgci {

// Graph on the degree-2 generator supports of I_Delta (minimal nonfaces of
// size 2); conditions (iii) and (iv) below read paths off this graph.
inline Graph nonface_graph(const SimplicialComplex& c, const std::vector<Face>& nonfaces) {
    Graph g(c.vertex_count(), {});
    for (const auto& nf : nonfaces)
        if (nf.size() == 2) g.add_edge(nf[0], nf[1]);
    return g;
}

struct GciReport {
    bool verdict = false;
    // preconditions
    bool core_equals_delta = false;
    bool is_pure = false;
    bool is_ci = false;          // complete intersection: trivially gCI, flagged
    // conditions (only meaningful when !is_ci)
    bool cond_pure = false;      // (i)
    bool cond_cu = false;        // (ii): every large support U admits a C(U)
    bool cond_linked = false;    // (iii)
    bool cond_path4 = false;     // (iv)
    std::optional<Face> failing_u;                     // U with no valid C(U)
    std::optional<std::pair<int, int>> unlinked_pair;  // (iii) witness
    std::vector<int> offending_path;                   // (iv) witness
    std::vector<std::pair<Face, Face>> cu_assignments; // U -> chosen C(U)
};

namespace detail {

// Search for a nonempty C(U) among subsets of the maximal candidate set,
// smallest cardinality first, lexicographic within a cardinality.
// Requirements on C = C(U):
//   (a) C and U disjoint (built in);
//   (b) {i,j} is a generator support for every i in C, j in U, and every
//       generator support T meeting U with T != U is such a pair;
//   (c) every k outside C and U has {i,k} a generator support for all i in C.
inline std::optional<Face> find_cu(const std::vector<Face>& nonfaces, const Face& u, int n) {
    mask_t umask = face_to_mask(u);
    std::vector<mask_t> nf_masks;
    nf_masks.reserve(nonfaces.size());
    for (const auto& f : nonfaces) nf_masks.push_back(face_to_mask(f));
    auto is_support = [&](mask_t m) {
        for (mask_t s : nf_masks)
            if (s == m) return true;
        return false;
    };
    mask_t candidates = 0;
    for (int i = 1; i <= n; ++i) {
        mask_t im = mask_t{1} << (i - 1);
        if (im & umask) continue;
        bool all = true;
        for (int j : u)
            if (!is_support(im | (mask_t{1} << (j - 1)))) {
                all = false;
                break;
            }
        if (all) candidates |= im;
    }
    int csz = mask_size(candidates);
    mask_t full = static_cast<int>(sizeof(mask_t)) * 8 <= n ? ~mask_t{0}
                                                            : ((mask_t{1} << n) - 1);
    for (int k = 1; k <= csz; ++k) {
        for (mask_t c : subsets_of_size(candidates, k)) {
            // (b) second clause: supports meeting U other than U itself are
            // exactly pairs {i,j}, i in C, j in U
            bool ok = true;
            for (mask_t t : nf_masks) {
                if (!(t & umask) || t == umask) continue;
                if (mask_size(t) != 2 || (t & ~(c | umask)) || !(t & c) || !(t & umask)) {
                    ok = false;
                    break;
                }
                mask_t ci = t & c, uj = t & umask;
                if (mask_size(ci) != 1 || mask_size(uj) != 1) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            // (c) outsiders are adjacent to all of C
            for (mask_t rest = full & ~(c | umask); rest && ok; rest &= rest - 1) {
                mask_t km = rest & (~rest + 1);
                for (mask_t cm = c; cm; cm &= cm - 1) {
                    mask_t im = cm & (~cm + 1);
                    if (!is_support(im | km)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) return mask_to_face(c);
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Generalized complete intersection criterion.  Preconditions: core Delta
// must equal Delta (else OutsideCharacterization); complete intersections
// short-circuit to a flagged true verdict.
inline GciReport check_gci(const SimplicialComplex& c,
                           PathMode mode = PathMode::SimpleVertices) {
    GciReport rep;
    auto cr = core(c);
    rep.core_equals_delta = cr.core_equals_delta;
    if (!rep.core_equals_delta)
        throw Error(errc::outside_characterization, "core of the complex is a proper subcomplex");
    rep.is_pure = c.is_pure();
    auto nonfaces = minimal_nonfaces(c);
    MonomialIdeal ideal = stanley_reisner_ideal(c);
    rep.is_ci = is_complete_intersection(ideal);
    if (rep.is_ci) {
        rep.verdict = true;
        return rep;
    }
    rep.cond_pure = rep.is_pure;
    rep.cond_cu = true;
    for (const auto& u : nonfaces) {
        if (u.size() < 3) continue;
        auto cu = detail::find_cu(nonfaces, u, c.vertex_count());
        if (!cu) {
            rep.cond_cu = false;
            rep.failing_u = u;
            break;
        }
        rep.cu_assignments.emplace_back(u, *cu);
    }
    Graph fg = nonface_graph(c, nonfaces);
    auto linked = all_pairs_linked(fg);
    rep.cond_linked = linked.linked;
    if (!linked.linked) rep.unlinked_pair = linked.witness;
    auto p4 = path4_condition(fg, mode);
    rep.cond_path4 = p4.ok;
    if (!p4.ok) rep.offending_path = p4.witness_path;
    rep.verdict = rep.cond_pure && rep.cond_cu && rep.cond_linked && rep.cond_path4;
    return rep;
}

struct LinearPowersReport {
    bool verdict = false;
    bool cond_pure_flag = false;  // (i) pure and flag
    bool cond_chordal = false;    // (ii) 1-skeleton chordal
    bool cond_linked = false;     // (iii) edge graph connected
    bool cond_path4 = false;      // (iv)
    std::vector<int> chordless_cycle;
    std::optional<std::pair<int, int>> unlinked_pair;
    std::vector<int> offending_path;
};

// Criterion for K[Delta] a gCI with all powers of I_Delta linearly resolved:
// pure flag complex, chordal 1-skeleton, connected edge graph, and the
// 4-path condition on the edge graph.
inline LinearPowersReport check_linear_powers(const SimplicialComplex& c,
                                              PathMode mode = PathMode::SimpleVertices) {
    if (!core(c).core_equals_delta)
        throw Error(errc::outside_characterization, "core of the complex is a proper subcomplex");
    LinearPowersReport rep;
    rep.cond_pure_flag = c.is_pure() && is_flag(c);
    auto chord = is_chordal(one_skeleton_graph(c));
    rep.cond_chordal = chord.chordal;
    if (!chord.chordal) rep.chordless_cycle = chord.chordless_cycle;
    Graph gd = nonface_graph(c, minimal_nonfaces(c));
    auto linked = all_pairs_linked(gd);
    rep.cond_linked = linked.linked;
    if (!linked.linked) rep.unlinked_pair = linked.witness;
    auto p4 = path4_condition(gd, mode);
    rep.cond_path4 = p4.ok;
    if (!p4.ok) rep.offending_path = p4.witness_path;
    rep.verdict = rep.cond_pure_flag && rep.cond_chordal && rep.cond_linked && rep.cond_path4;
    return rep;
}

enum class DecompositionKind { Points, PathUnion, FacetPairUnion };

inline const char* decomposition_kind_name(DecompositionKind k) {
    switch (k) {
        case DecompositionKind::Points: return "Points";
        case DecompositionKind::PathUnion: return "PathUnion";
        case DecompositionKind::FacetPairUnion: return "FacetPairUnion";
    }
    return "?";
}

struct FacetPairEntry {
    bool type1;  // two facets F, G with |F\G| = |G\F| = 1; else a lone facet
    Face f, g;   // g empty for type 2
};

struct Decomposition {
    DecompositionKind kind;
    std::vector<int> points;                 // Points
    std::vector<std::vector<int>> paths;     // PathUnion, each a vertex sequence
    std::vector<FacetPairEntry> pairs;       // FacetPairUnion
};

struct StructureVerdict {
    bool verdict = false;
    std::optional<Decomposition> decomposition;
    std::string failure_witness;
};

// Structure theorem: the complexes passing check_linear_powers are exactly
//   dim 0: at least two points;
//   dim 1: disjoint unions of simple paths;
//   dim >= 2: pure disjoint unions of components that are single facets or
//             pairs F, G with F ∩ G nonempty and |F\G| = |G\F| = 1.
inline StructureVerdict classify_structure(const SimplicialComplex& c) {
    if (!core(c).core_equals_delta)
        throw Error(errc::outside_characterization, "core of the complex is a proper subcomplex");
    StructureVerdict out;
    int dim = c.dimension();
    if (dim == 0) {
        if (c.vertex_count() < 2) {
            out.failure_witness = "a single point";
            return out;
        }
        Decomposition d{DecompositionKind::Points, {}, {}, {}};
        for (int v = 1; v <= c.vertex_count(); ++v) d.points.push_back(v);
        out.verdict = true;
        out.decomposition = std::move(d);
        return out;
    }
    if (dim == 1) {
        for (mask_t f : c.facet_masks())
            if (mask_size(f) != 2) {
                out.failure_witness = "isolated vertex facet " + std::to_string(mask_to_face(f)[0]);
                return out;
            }
        Graph g = one_skeleton_graph(c);
        Decomposition d{DecompositionKind::PathUnion, {}, {}, {}};
        std::vector<char> seen(c.vertex_count() + 1, 0);
        for (int v = 1; v <= c.vertex_count(); ++v) {
            if (seen[v]) continue;
            // walk the component; a simple path has exactly two degree-1
            // endpoints and no vertex of degree > 2
            std::vector<int> comp;
            std::vector<int> stack{v};
            seen[v] = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                comp.push_back(x);
                for (mask_t nb = g.neighbors(x); nb; nb &= nb - 1) {
                    int y = std::countr_zero(nb) + 1;
                    if (!seen[y]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
                }
            }
            int edge_count = 0, start = 0;
            for (int x : comp) {
                int deg = mask_size(g.neighbors(x));
                edge_count += deg;
                if (deg > 2) {
                    out.failure_witness = "vertex " + std::to_string(x) + " has degree > 2";
                    return out;
                }
                if (deg == 1 && (start == 0 || x < start)) start = x;
            }
            edge_count /= 2;
            if (edge_count != static_cast<int>(comp.size()) - 1) {
                out.failure_witness = "component of vertex " + std::to_string(v) + " contains a cycle";
                return out;
            }
            // trace from the smaller endpoint
            std::vector<int> path{start};
            int prev = 0, cur = start;
            while (static_cast<int>(path.size()) < static_cast<int>(comp.size())) {
                for (mask_t nb = g.neighbors(cur); nb; nb &= nb - 1) {
                    int y = std::countr_zero(nb) + 1;
                    if (y != prev) {
                        prev = cur;
                        cur = y;
                        break;
                    }
                }
                path.push_back(cur);
            }
            d.paths.push_back(std::move(path));
        }
        std::sort(d.paths.begin(), d.paths.end());
        out.verdict = true;
        out.decomposition = std::move(d);
        return out;
    }
    // dim >= 2
    if (!c.is_pure()) {
        out.failure_witness = "not pure";
        return out;
    }
    Decomposition d{DecompositionKind::FacetPairUnion, {}, {}, {}};
    for (const auto& comp : connected_components(c)) {
        const auto& fs = comp.facet_masks();
        if (fs.size() == 1) {
            d.pairs.push_back({false, mask_to_face(fs[0]), {}});
        } else if (fs.size() == 2 && (fs[0] & fs[1]) && mask_size(fs[0] & ~fs[1]) == 1 &&
                   mask_size(fs[1] & ~fs[0]) == 1) {
            d.pairs.push_back({true, mask_to_face(fs[0]), mask_to_face(fs[1])});
        } else {
            out.failure_witness = "component with " + std::to_string(fs.size()) +
                                  " facets is neither a simplex nor an admissible pair";
            return out;
        }
    }
    out.verdict = true;
    out.decomposition = std::move(d);
    return out;
}

// Matroid base-exchange axiom over the generator supports of an
// equigenerated squarefree ideal.
inline bool is_matroidal(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) throw Error(errc::not_squarefree, "is_matroidal");
    if (ideal.uniform_degree() < 0)
        throw Error(errc::not_equigenerated, "is_matroidal");
    std::vector<mask_t> bases;
    for (const auto& g : ideal.generators()) bases.push_back(support_mask(g));
    auto is_base = [&](mask_t b) {
        for (mask_t x : bases)
            if (x == b) return true;
        return false;
    };
    for (mask_t b1 : bases)
        for (mask_t b2 : bases) {
            if (b1 == b2) continue;
            for (mask_t rm = b1 & ~b2; rm; rm &= rm - 1) {
                mask_t i = rm & (~rm + 1);
                bool exchanged = false;
                for (mask_t ad = b2 & ~b1; ad && !exchanged; ad &= ad - 1) {
                    mask_t j = ad & (~ad + 1);
                    if (is_base((b1 & ~i) | j)) exchanged = true;
                }
                if (!exchanged) return false;
            }
        }
    return true;
}

// Linear resolution of base^l.  Small instances go through the exact
// multidegree Betti scan.  Beyond the scan budget, a matroidal base ideal
// certifies every power (powers of polymatroidal ideals are polymatroidal and
// have linear quotients); failing that, linear-quotient orders are tried on
// the materialized power, and has_linear_resolution refuses if none fires.
inline LinearResolutionResult power_has_linear_resolution(const MonomialIdeal& base, int l,
                                                          const FieldSpec& field) {
    MonomialIdeal p = power(base, l);
    std::vector<int> rho = max_exponents(p);
    std::uint64_t box = detail::box_volume(rho);
    int wide = 0;
    for (int e : rho)
        if (e > 0) ++wide;
    // scan cost is driven by the box times the Koszul subset enumeration
    std::uint64_t work = box;
    for (int k = 0; k < wide && work <= 50'000'000ull; ++k) work *= 2;
    if (box <= kBettiBoxBudget && work <= 50'000'000ull)
        return has_linear_resolution(p, field);
    if (base.is_squarefree() && base.uniform_degree() >= 0 && is_matroidal(base))
        return {true, std::nullopt};
    return has_linear_resolution(p, field);
}

struct MinimalMultiplicityReport {
    bool verdict = false;
    bool formula_route = false;     // e = 1 + sum C(d-1,i-1) l_i
    bool structural_route = false;  // disjoint union of equal-dimension simplexes
    bool matroidal_route = false;   // matroidal of degree 2 and flag
    int e = 0;
    std::vector<int> lengths;       // lengths[i-1] = l_i
};

// Evaluates the three equivalent characterizations of minimal multiplicity
// and demands unanimity; a split verdict signals a bug, not a result.
// Restricted to dim >= 1: at dimension 0 the multiplicity formula and the
// structural description genuinely part ways.
inline MinimalMultiplicityReport check_minimal_multiplicity(const SimplicialComplex& c,
                                                            const FieldSpec& field) {
    if (!c.is_pure()) throw Error(errc::not_pure, "check_minimal_multiplicity");
    if (!core(c).core_equals_delta)
        throw Error(errc::outside_characterization, "core of the complex is a proper subcomplex");
    if (c.dimension() < 1)
        throw Error(errc::outside_characterization, "dimension 0 is outside this criterion");

    MinimalMultiplicityReport rep;
    rep.e = multiplicity(c);
    rep.lengths = local_cohomology_lengths(c, field);
    int d = c.dimension() + 1;
    long long bound = 1;
    long long binom = 1;  // C(d-1, i-1) built incrementally
    for (int i = 1; i <= d - 1; ++i) {
        bound += binom * rep.lengths[i - 1];
        binom = binom * (d - 1 - (i - 1)) / i;
    }
    rep.formula_route = (rep.e == bound);

    rep.structural_route = true;
    for (const auto& comp : connected_components(c))
        if (comp.facet_masks().size() != 1) {
            rep.structural_route = false;
            break;
        }

    MonomialIdeal ideal = stanley_reisner_ideal(c);
    rep.matroidal_route = is_flag(c) && is_degree2(ideal) && is_matroidal(ideal);

    if (rep.formula_route != rep.structural_route || rep.formula_route != rep.matroidal_route)
        throw Error(errc::internal_disagreement,
                    "minimal multiplicity routes disagree: formula=" +
                        std::to_string(rep.formula_route) +
                        " structural=" + std::to_string(rep.structural_route) +
                        " matroidal=" + std::to_string(rep.matroidal_route));
    rep.verdict = rep.formula_route;
    return rep;
}

}  // namespace srgci
