// Undirected graphs on 1..n: chordality with witnesses, connectivity,
// the length-4-path condition, and maximal clique enumeration.
#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "face.hpp"

namespace srgci {

class Graph {
  public:
    Graph() : n_(0) {}
    Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), adj_(n, 0) {
        for (auto [a, b] : edges) add_edge(a, b);
    }

    int vertex_count() const { return n_; }

    void add_edge(int a, int b) {
        if (a < 1 || a > n_ || b < 1 || b > n_)
            throw Error(errc::vertex_out_of_range, "edge endpoint out of range");
        if (a == b) throw Error(errc::vertex_out_of_range, "loops not allowed");
        adj_[a - 1] |= mask_t{1} << (b - 1);
        adj_[b - 1] |= mask_t{1} << (a - 1);
    }

    bool has_edge(int a, int b) const { return (adj_[a - 1] >> (b - 1)) & 1; }

    mask_t neighbors(int v) const { return adj_[v - 1]; }

    // Canonical (i<j) edge list.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                if (has_edge(i, j)) es.emplace_back(i, j);
        return es;
    }

    std::size_t edge_count() const { return edges().size(); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

  private:
    int n_;
    std::vector<mask_t> adj_;
};

inline Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph c(n, {});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!g.has_edge(i, j)) c.add_edge(i, j);
    return c;
}

struct ChordalityResult {
    bool chordal;
    std::vector<int> elimination_order;  // perfect elimination order when chordal
    std::vector<int> chordless_cycle;    // length >= 4 cycle when not
};

namespace detail {

// Shortest u--w path avoiding `forbidden`; both endpoints must avoid it too.
inline std::optional<std::vector<int>> shortest_path_avoiding(const Graph& g, int u, int w,
                                                              mask_t forbidden) {
    int n = g.vertex_count();
    std::vector<int> prev(n + 1, 0);
    std::deque<int> q{u};
    prev[u] = u;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        if (x == w) break;
        mask_t nb = g.neighbors(x) & ~forbidden;
        while (nb) {
            int y = std::countr_zero(nb) + 1;
            nb &= nb - 1;
            if (!prev[y]) {
                prev[y] = x;
                q.push_back(y);
            }
        }
    }
    if (!prev[w]) return std::nullopt;
    std::vector<int> path{w};
    while (path.back() != u) path.push_back(prev[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace detail

// Maximum Cardinality Search + elimination-order replay.  On failure a
// chordless cycle of length >= 4 is extracted as the witness.
inline ChordalityResult is_chordal(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> weight(n + 1, 0), mcs;  // mcs in visit order
    std::vector<bool> seen(n + 1, false);
    for (int step = 0; step < n; ++step) {
        int best = -1, v = -1;
        for (int u = 1; u <= n; ++u)
            if (!seen[u] && weight[u] > best) best = weight[u], v = u;
        seen[v] = true;
        mcs.push_back(v);
        mask_t nb = g.neighbors(v);
        while (nb) {
            int y = std::countr_zero(nb) + 1;
            nb &= nb - 1;
            if (!seen[y]) ++weight[y];
        }
    }
    std::vector<int> elim(mcs.rbegin(), mcs.rend());
    std::vector<int> pos(n + 1, 0);
    for (int i = 0; i < n; ++i) pos[elim[i]] = i;

    for (int i = 0; i < n; ++i) {
        int v = elim[i];
        // later neighbors of v in elimination order
        std::vector<int> later;
        mask_t nb = g.neighbors(v);
        while (nb) {
            int y = std::countr_zero(nb) + 1;
            nb &= nb - 1;
            if (pos[y] > i) later.push_back(y);
        }
        if (later.size() < 2) continue;
        int u = *std::min_element(later.begin(), later.end(),
                                  [&](int a, int b) { return pos[a] < pos[b]; });
        for (int w : later) {
            if (w == u || g.has_edge(u, w)) continue;
            // v-u ... w-v closes a chordless cycle: route u->w outside N[v]\{u,w}
            mask_t forbidden = (g.neighbors(v) | (mask_t{1} << (v - 1)));
            forbidden &= ~(mask_t{1} << (u - 1));
            forbidden &= ~(mask_t{1} << (w - 1));
            auto path = detail::shortest_path_avoiding(g, u, w, forbidden);
            std::vector<int> cycle{v};
            if (path) {
                cycle.insert(cycle.end(), path->begin(), path->end());
            } else {
                cycle = {v, u, w};  // unreachable for a genuine failure
            }
            return {false, {}, cycle};
        }
    }
    return {true, elim, {}};
}

struct LinkedResult {
    bool linked;
    std::pair<int, int> witness;  // a pair with no connecting path, when !linked
};

// True iff every two vertices of 1..n are joined by a path in g.
inline LinkedResult all_pairs_linked(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return {true, {0, 0}};
    mask_t reached = 1;  // vertex 1
    std::deque<int> q{1};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        mask_t nb = g.neighbors(x) & ~reached;
        while (nb) {
            int y = std::countr_zero(nb) + 1;
            nb &= nb - 1;
            reached |= mask_t{1} << (y - 1);
            q.push_back(y);
        }
    }
    for (int v = 2; v <= n; ++v)
        if (!((reached >> (v - 1)) & 1)) return {false, {1, v}};
    return {true, {0, 0}};
}

enum class PathMode {
    SimpleVertices,     // all five vertices distinct
    WalkDistinctEdges,  // four distinct edges, endpoints distinct
};

struct Path4Result {
    bool ok;
    std::vector<int> witness_path;  // offending i1..i5 when !ok
};

// For every length-4 path i1..i5 (per mode), one of {i1,i3},{i1,i4},{i1,i5}
// must be an edge.
inline Path4Result path4_condition(const Graph& g, PathMode mode = PathMode::SimpleVertices) {
    int n = g.vertex_count();
    std::vector<int> path;
    Path4Result res{true, {}};

    auto check = [&]() {
        int i1 = path[0];
        if (g.has_edge(i1, path[2]) || g.has_edge(i1, path[3]) || g.has_edge(i1, path[4]))
            return true;
        res = {false, path};
        return false;
    };

    std::function<bool(void)> extend = [&]() -> bool {
        if (path.size() == 5) {
            if (path[0] == path[4]) return true;  // i1 != i5 required
            return check();
        }
        int cur = path.back();
        mask_t nb = g.neighbors(cur);
        while (nb) {
            int y = std::countr_zero(nb) + 1;
            nb &= nb - 1;
            if (mode == PathMode::SimpleVertices) {
                if (std::find(path.begin(), path.end(), y) != path.end()) continue;
            } else {
                bool dup_edge = false;
                for (std::size_t k = 0; k + 1 < path.size(); ++k) {
                    int a = path[k], b = path[k + 1];
                    if ((a == cur && b == y) || (a == y && b == cur)) dup_edge = true;
                }
                if (dup_edge) continue;
            }
            path.push_back(y);
            bool ok = extend();
            path.pop_back();
            if (!ok) return false;
        }
        return true;
    };

    for (int v = 1; v <= n; ++v) {
        path = {v};
        if (!extend()) return res;
    }
    return res;
}

// Bron-Kerbosch with pivoting; isolated vertices count as singleton cliques.
inline std::vector<Face> maximal_cliques(const Graph& g) {
    int n = g.vertex_count();
    std::vector<mask_t> out;
    std::function<void(mask_t, mask_t, mask_t)> bk = [&](mask_t r, mask_t p, mask_t x) {
        if (!p && !x) {
            out.push_back(r);
            return;
        }
        // pivot: vertex of p|x with most neighbors in p
        int pivot = -1, best = -1;
        for (mask_t t = p | x; t; t &= t - 1) {
            int v = std::countr_zero(t) + 1;
            int deg = std::popcount(g.neighbors(v) & p);
            if (deg > best) best = deg, pivot = v;
        }
        mask_t cand = p & ~g.neighbors(pivot);
        while (cand) {
            int v = std::countr_zero(cand) + 1;
            mask_t vb = cand & (~cand + 1);
            cand &= cand - 1;
            bk(r | vb, p & g.neighbors(v), x & g.neighbors(v));
            p &= ~vb;
            x |= vb;
        }
    };
    mask_t all = n >= 32 ? ~mask_t{0} : ((mask_t{1} << n) - 1);
    bk(0, all, 0);
    std::sort(out.begin(), out.end());
    std::vector<Face> faces;
    faces.reserve(out.size());
    for (mask_t m : out) faces.push_back(mask_to_face(m));
    return faces;
}

}  // namespace srgci
