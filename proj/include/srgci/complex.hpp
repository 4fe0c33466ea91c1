// Simplicial complexes on 1..n, stored by their inclusion-maximal faces.
//
// Three distinct values matter for the homological conventions downstream:
//   - the void complex (no faces at all), represented by an empty facet list;
//   - the empty complex {∅}, represented by the single facet ∅;
//   - everything else.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "face.hpp"
#include "graph.hpp"

namespace srgci {

class SimplicialComplex {
  public:
    // Validating constructor: canonicalizes facets and enforces the
    // convention that every vertex 1..n lies in some facet.
    static SimplicialComplex create(int n, const std::vector<Face>& facets) {
        std::vector<mask_t> ms;
        ms.reserve(facets.size());
        for (const auto& f : facets) ms.push_back(face_to_mask(make_face(f, n)));
        SimplicialComplex c = from_masks(n, std::move(ms));
        mask_t covered = 0;
        for (mask_t f : c.facets_) covered |= f;
        mask_t all = n >= 32 ? ~mask_t{0} : ((mask_t{1} << n) - 1);
        if (covered != all) {
            int v = std::countr_zero(mask_t(all & ~covered)) + 1;
            throw Error(errc::uncovered_vertex,
                        "vertex " + std::to_string(v) + " lies in no facet");
        }
        return c;
    }

    // Canonicalizing constructor without the coverage check; used for derived
    // complexes (links, cores, degree complexes) that may miss vertices.
    static SimplicialComplex from_masks(int n, std::vector<mask_t> facets) {
        if (n < 0 || n > 32) throw Error(errc::vertex_out_of_range, "n out of range");
        std::sort(facets.begin(), facets.end());
        facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
        // drop non-maximal faces
        std::vector<mask_t> maximal;
        for (std::size_t i = 0; i < facets.size(); ++i) {
            bool contained = false;
            for (std::size_t j = 0; j < facets.size(); ++j)
                if (i != j && (facets[i] & ~facets[j]) == 0 &&
                    (facets[i] != facets[j] || j > i)) {
                    contained = true;
                    break;
                }
            if (!contained) maximal.push_back(facets[i]);
        }
        SimplicialComplex c;
        c.n_ = n;
        c.facets_ = std::move(maximal);
        return c;
    }

    static SimplicialComplex void_complex(int n) { return from_masks(n, {}); }
    static SimplicialComplex empty_complex(int n) { return from_masks(n, {0}); }

    int vertex_count() const { return n_; }
    const std::vector<mask_t>& facet_masks() const { return facets_; }

    std::vector<Face> facets() const {
        std::vector<Face> fs;
        fs.reserve(facets_.size());
        for (mask_t m : facets_) fs.push_back(mask_to_face(m));
        return fs;
    }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_[0] == 0; }

    bool contains(mask_t face) const {
        for (mask_t f : facets_)
            if ((face & ~f) == 0) return true;
        return false;
    }
    bool contains(const Face& f) const { return contains(face_to_mask(f)); }

    // max facet cardinality - 1; the empty complex has dimension -1 and the
    // void complex is assigned -2 as a sentinel.
    int dimension() const {
        if (is_void()) return -2;
        int d = -1;
        for (mask_t f : facets_) d = std::max(d, mask_size(f) - 1);
        return d;
    }

    bool is_pure() const {
        if (facets_.empty()) return true;
        int s = mask_size(facets_[0]);
        for (mask_t f : facets_)
            if (mask_size(f) != s) return false;
        return true;
    }

    mask_t vertex_support() const {
        mask_t m = 0;
        for (mask_t f : facets_) m |= f;
        return m;
    }

    bool operator==(const SimplicialComplex& o) const {
        return n_ == o.n_ && facets_ == o.facets_;
    }

  private:
    int n_ = 0;
    std::vector<mask_t> facets_;
};

// All faces, optionally only those of dimension k (cardinality k+1).
// When k is not given the empty face is included for non-void complexes.
inline std::vector<Face> faces(const SimplicialComplex& c, int k) {
    std::vector<mask_t> ms;
    for (mask_t f : c.facet_masks())
        for (mask_t s : subsets_of_size(f, k + 1)) ms.push_back(s);
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<Face> out;
    out.reserve(ms.size());
    for (mask_t m : ms) out.push_back(mask_to_face(m));
    return out;
}

inline std::vector<Face> faces(const SimplicialComplex& c) {
    std::vector<mask_t> ms;
    for (mask_t f : c.facet_masks()) {
        // all subsets of f
        mask_t s = f;
        while (true) {
            ms.push_back(s);
            if (s == 0) break;
            s = (s - 1) & f;
        }
    }
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<Face> out;
    out.reserve(ms.size());
    for (mask_t m : ms) out.push_back(mask_to_face(m));
    return out;
}

// Face masks grouped by cardinality, up to max_size (inclusive).  Index k of
// the result holds the faces of cardinality k.  Cheap input to homology.
inline std::vector<std::vector<mask_t>> faces_by_size(const SimplicialComplex& c,
                                                      int max_size) {
    std::vector<std::vector<mask_t>> by(max_size + 1);
    if (c.is_void()) return by;
    std::vector<mask_t> all;
    for (mask_t f : c.facet_masks()) {
        mask_t s = f;
        while (true) {
            if (mask_size(s) <= max_size) all.push_back(s);
            if (s == 0) break;
            s = (s - 1) & f;
        }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (mask_t m : all) by[mask_size(m)].push_back(m);
    return by;
}

inline SimplicialComplex star(const SimplicialComplex& c, const Face& f) {
    mask_t fm = face_to_mask(f);
    if (!c.contains(fm)) throw Error(errc::not_a_face, "star of a non-face");
    std::vector<mask_t> out;
    for (mask_t facet : c.facet_masks())
        if (c.contains(facet | fm)) out.push_back(facet);
    return SimplicialComplex::from_masks(c.vertex_count(), std::move(out));
}

inline SimplicialComplex link(const SimplicialComplex& c, const Face& f) {
    mask_t fm = face_to_mask(f);
    if (!c.contains(fm)) throw Error(errc::not_a_face, "link of a non-face");
    std::vector<mask_t> out;
    for (mask_t facet : c.facet_masks())
        if ((facet & fm) == fm) out.push_back(facet & ~fm);
    // facets containing f give the maximal link faces; others contribute
    // nothing maximal, but from_masks would prune them anyway.
    return SimplicialComplex::from_masks(c.vertex_count(), std::move(out));
}

struct CoreResult {
    Face core_vertices;
    SimplicialComplex core_complex;
    bool core_equals_delta;
};

// core[n] = vertices whose star is not all of Δ, i.e. vertices missed by at
// least one facet; coreΔ = restrictions of faces to core[n].
inline CoreResult core(const SimplicialComplex& c) {
    mask_t core_set = 0;
    for (mask_t f : c.facet_masks()) core_set |= (c.vertex_support() & ~f);
    std::vector<mask_t> restricted;
    for (mask_t f : c.facet_masks()) restricted.push_back(f & core_set);
    if (restricted.empty() && !c.is_void()) restricted.push_back(0);
    auto cc = SimplicialComplex::from_masks(c.vertex_count(), std::move(restricted));
    bool equal = (cc == c);
    return {mask_to_face(core_set), std::move(cc), equal};
}

// Facet partition by shared-vertex connectivity.
inline std::vector<SimplicialComplex> connected_components(const SimplicialComplex& c) {
    const auto& fs = c.facet_masks();
    std::vector<int> comp(fs.size());
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return comp[x] == x ? x : comp[x] = find(comp[x]);
    };
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j)
            if (fs[i] & fs[j]) comp[find(static_cast<int>(i))] = find(static_cast<int>(j));
    std::vector<SimplicialComplex> out;
    for (std::size_t r = 0; r < fs.size(); ++r) {
        if (find(static_cast<int>(r)) != static_cast<int>(r)) continue;
        std::vector<mask_t> group;
        for (std::size_t i = 0; i < fs.size(); ++i)
            if (static_cast<std::size_t>(find(static_cast<int>(i))) == r)
                group.push_back(fs[i]);
        out.push_back(SimplicialComplex::from_masks(c.vertex_count(), std::move(group)));
    }
    return out;
}

inline SimplicialComplex skeleton(const SimplicialComplex& c, int k) {
    std::vector<mask_t> out;
    for (mask_t f : c.facet_masks()) {
        if (mask_size(f) <= k + 1) {
            out.push_back(f);
        } else {
            for (mask_t s : subsets_of_size(f, k + 1)) out.push_back(s);
        }
    }
    if (out.empty() && !c.is_void()) out.push_back(0);
    return SimplicialComplex::from_masks(c.vertex_count(), std::move(out));
}

inline Graph one_skeleton_graph(const SimplicialComplex& c) {
    Graph g(c.vertex_count(), {});
    for (int i = 1; i <= c.vertex_count(); ++i)
        for (int j = i + 1; j <= c.vertex_count(); ++j)
            if (c.contains(mask_t{(mask_t{1} << (i - 1)) | (mask_t{1} << (j - 1))}))
                g.add_edge(i, j);
    return g;
}

// Minimal non-faces: S not in Δ with every proper subset in Δ.  Enumerated by
// increasing cardinality; a candidate is scanned only if all its maximal
// proper subsets are faces, which bounds the search at dim Δ + 2.
inline std::vector<Face> minimal_nonfaces(const SimplicialComplex& c) {
    int n = c.vertex_count();
    mask_t all = n >= 32 ? ~mask_t{0} : ((mask_t{1} << n) - 1);
    std::vector<Face> out;
    int bound = std::min(n, c.dimension() + 2);
    for (int k = 1; k <= bound; ++k) {
        for (mask_t s : subsets_of_size(all, k)) {
            if (c.contains(s)) continue;
            bool all_subsets_faces = true;
            for (mask_t t = s; t && all_subsets_faces; t &= t - 1) {
                mask_t sub = s & ~(t & (~t + 1));
                if (!c.contains(sub)) all_subsets_faces = false;
            }
            if (all_subsets_faces) out.push_back(mask_to_face(s));
        }
    }
    return out;
}

// Clique complex of a graph: facets are the maximal cliques.
inline SimplicialComplex simp_closure(const Graph& g) {
    std::vector<mask_t> ms;
    for (const auto& f : maximal_cliques(g)) ms.push_back(face_to_mask(f));
    return SimplicialComplex::from_masks(g.vertex_count(), std::move(ms));
}

// Δ is flag iff all minimal non-faces have cardinality 2, equivalently
// Δ = Simp(Δ₁).
inline bool is_flag(const SimplicialComplex& c) {
    for (const auto& nf : minimal_nonfaces(c))
        if (nf.size() != 2) return false;
    return true;
}

}  // namespace srgci
