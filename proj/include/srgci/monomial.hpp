// Monomial ideals as minimal generator sets of exponent vectors:
// Stanley-Reisner translation, powers, radicals, edge graphs and
// degree complexes.
#pragma once

#include <algorithm>
#include <functional>
#include <unordered_set>
#include <vector>

#include "complex.hpp"
#include "face.hpp"
#include "graph.hpp"

namespace srgci {

using Exponents = std::vector<int>;     // length n, entries >= 0
using SignedDegree = std::vector<int>;  // length n, entries may be negative

inline bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

inline mask_t support_mask(const Exponents& e) {
    mask_t m = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) m |= mask_t{1} << i;
    return m;
}

class MonomialIdeal {
  public:
    MonomialIdeal(int n, std::vector<Exponents> generators) : n_(n) {
        if (generators.empty()) throw Error(errc::zero_ideal, "no generators");
        for (auto& g : generators) {
            if (static_cast<int>(g.size()) != n)
                throw Error(errc::vertex_out_of_range, "exponent vector length mismatch");
            for (int e : g)
                if (e < 0) throw Error(errc::vertex_out_of_range, "negative exponent");
            if (total_degree(g) == 0) throw Error(errc::unit_ideal, "unit generator");
        }
        gens_ = minimalize(std::move(generators));
    }

    int variable_count() const { return n_; }
    const std::vector<Exponents>& generators() const { return gens_; }

    bool is_squarefree() const {
        for (const auto& g : gens_)
            for (int e : g)
                if (e > 1) return false;
        return true;
    }

    // Generating degree when equigenerated, -1 otherwise.
    int uniform_degree() const {
        int d = total_degree(gens_[0]);
        for (const auto& g : gens_)
            if (total_degree(g) != d) return -1;
        return d;
    }

    bool contains(const Exponents& m) const {
        for (const auto& g : gens_)
            if (divides(g, m)) return true;
        return false;
    }

    bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }

    static std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Exponents> out;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < gens.size() && !dominated; ++j)
                if (i != j && divides(gens[j], gens[i]) && gens[i] != gens[j])
                    dominated = true;
            if (!dominated) out.push_back(gens[i]);
        }
        return out;
    }

  private:
    int n_;
    std::vector<Exponents> gens_;  // minimal, sorted
};

inline MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c) {
    int n = c.vertex_count();
    std::vector<Exponents> gens;
    for (const auto& nf : minimal_nonfaces(c)) {
        Exponents e(n, 0);
        for (int v : nf) e[v - 1] = 1;
        gens.push_back(std::move(e));
    }
    if (gens.empty()) throw Error(errc::zero_ideal, "complex is a full simplex");
    return MonomialIdeal(n, std::move(gens));
}

// Faces of the complex are the supports not containing any generator support.
inline SimplicialComplex complex_of(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) throw Error(errc::not_squarefree, "complex_of");
    int n = ideal.variable_count();
    std::vector<mask_t> gen_supports;
    for (const auto& g : ideal.generators()) gen_supports.push_back(support_mask(g));
    // facets = maximal subsets avoiding all generator supports
    mask_t all = n >= 32 ? ~mask_t{0} : ((mask_t{1} << n) - 1);
    std::vector<mask_t> faces_list;
    for (mask_t s = 0;; ++s) {
        if ((s & all) == s) {
            bool ok = true;
            for (mask_t g : gen_supports)
                if ((g & ~s) == 0) {
                    ok = false;
                    break;
                }
            if (ok) faces_list.push_back(s);
        }
        if (s == all) break;
    }
    auto cx = SimplicialComplex::from_masks(n, std::move(faces_list));
    // re-run through the validating path so the {i} ∈ Δ convention is enforced
    return SimplicialComplex::create(n, cx.facets());
}

namespace detail {

struct ExpHash {
    std::size_t operator()(const Exponents& e) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : e) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace detail

// Minimal generators of I^l via multiset products of generators.  When I is
// equigenerated the products all share a total degree, so distinct products
// are automatically minimal.
inline MonomialIdeal power(const MonomialIdeal& ideal, int l) {
    if (l < 1) throw Error(errc::vertex_out_of_range, "power exponent must be >= 1");
    if (l == 1) return ideal;
    const auto& gens = ideal.generators();
    int n = ideal.variable_count();
    std::unordered_set<Exponents, detail::ExpHash> products;
    Exponents acc(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
        if (remaining == 0) {
            products.insert(acc);
            return;
        }
        for (std::size_t i = start; i < gens.size(); ++i) {
            for (int k = 0; k < n; ++k) acc[k] += gens[i][k];
            rec(i, remaining - 1);
            for (int k = 0; k < n; ++k) acc[k] -= gens[i][k];
        }
    };
    rec(0, l);
    std::vector<Exponents> out(products.begin(), products.end());
    if (ideal.uniform_degree() < 0) out = MonomialIdeal::minimalize(std::move(out));
    return MonomialIdeal(n, std::move(out));
}

inline MonomialIdeal radical(const MonomialIdeal& ideal) {
    std::vector<Exponents> gens;
    for (const auto& g : ideal.generators()) {
        Exponents e(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) e[i] = g[i] > 0 ? 1 : 0;
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(ideal.variable_count(), std::move(gens));
}

inline bool is_degree2(const MonomialIdeal& ideal) {
    for (const auto& g : ideal.generators()) {
        if (total_degree(g) != 2) return false;
        for (int e : g)
            if (e > 1) return false;
    }
    return true;
}

// Edge graph of a degree-2 squarefree ideal: edges are generator supports.
inline Graph edge_graph(const MonomialIdeal& ideal) {
    if (!is_degree2(ideal))
        throw Error(errc::not_degree_two, "edge graph needs squarefree degree-2 generators");
    Graph g(ideal.variable_count(), {});
    for (const auto& gen : ideal.generators()) {
        Face f = mask_to_face(support_mask(gen));
        g.add_edge(f[0], f[1]);
    }
    return g;
}

// Complete intersection test for monomial ideals: pairwise disjoint supports.
inline bool is_complete_intersection(const MonomialIdeal& ideal) {
    const auto& gens = ideal.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (support_mask(gens[i]) & support_mask(gens[j])) return false;
    return true;
}

// rho_k: maximal exponent of variable k over the minimal generators.
inline std::vector<int> max_exponents(const MonomialIdeal& ideal) {
    std::vector<int> rho(ideal.variable_count(), 0);
    for (const auto& g : ideal.generators())
        for (std::size_t k = 0; k < g.size(); ++k) rho[k] = std::max(rho[k], g[k]);
    return rho;
}

// Degree complex Δ_a(I): with G_a = {j : a_j < 0},
//   Δ_a = { F ⊆ [n]\G_a : every generator m has some j ∉ F∪G_a with
//           deg_j(m) > a_j }.
// Membership depends on each generator only through its "excess set"
// T_m = {j ∉ G_a : deg_j(m) > a_j}: F is a face iff no T_m is contained in F.
inline SimplicialComplex degree_complex(const MonomialIdeal& ideal, const SignedDegree& a) {
    int n = ideal.variable_count();
    if (static_cast<int>(a.size()) != n)
        throw Error(errc::vertex_out_of_range, "degree vector length mismatch");
    mask_t gneg = 0;
    for (int j = 0; j < n; ++j)
        if (a[j] < 0) gneg |= mask_t{1} << j;
    std::vector<mask_t> excess;
    for (const auto& g : ideal.generators()) {
        mask_t t = 0;
        for (int j = 0; j < n; ++j)
            if (!((gneg >> j) & 1) && g[j] > a[j]) t |= mask_t{1} << j;
        if (t == 0) return SimplicialComplex::void_complex(n);
        excess.push_back(t);
    }
    mask_t ambient = (n >= 32 ? ~mask_t{0} : ((mask_t{1} << n) - 1)) & ~gneg;
    // bad[F] = some excess set is contained in F; computed by subset DP
    std::vector<char> bad(std::size_t{1} << std::popcount(ambient), 0);
    // compress ambient bits to dense indices
    std::vector<int> bits;
    for (mask_t t = ambient; t; t &= t - 1) bits.push_back(std::countr_zero(t));
    auto compress = [&](mask_t f) {
        mask_t r = 0;
        for (std::size_t i = 0; i < bits.size(); ++i)
            if ((f >> bits[i]) & 1) r |= mask_t{1} << i;
        return r;
    };
    for (mask_t t : excess) bad[compress(t)] = 1;
    for (std::size_t f = 0; f < bad.size(); ++f) {
        if (bad[f]) continue;
        for (std::size_t i = 0; i < bits.size(); ++i)
            if ((f >> i) & 1 && bad[f & ~(std::size_t{1} << i)]) {
                bad[f] = 1;
                break;
            }
    }
    std::vector<mask_t> facet_list;
    for (std::size_t f = 0; f < bad.size(); ++f) {
        if (bad[f]) continue;
        bool maximal = true;
        for (std::size_t i = 0; i < bits.size() && maximal; ++i)
            if (!((f >> i) & 1) && !bad[f | (std::size_t{1} << i)]) maximal = false;
        if (!maximal) continue;
        mask_t full = 0;
        for (std::size_t i = 0; i < bits.size(); ++i)
            if ((f >> i) & 1) full |= mask_t{1} << bits[i];
        facet_list.push_back(full);
    }
    return SimplicialComplex::from_masks(n, std::move(facet_list));
}

}  // namespace srgci
