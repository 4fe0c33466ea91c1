// Faces are strictly increasing sequences of 1-based vertex ids.
// Internally most algorithms work on bitmasks (bit i-1 <-> vertex i).
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "error.hpp"

namespace srgci {

using Face = std::vector<int>;   // sorted ascending, no duplicates
using mask_t = std::uint32_t;    // vertex set as bitmask, supports n <= 32

inline mask_t face_to_mask(const Face& f) {
    mask_t m = 0;
    for (int v : f) m |= mask_t{1} << (v - 1);
    return m;
}

inline Face mask_to_face(mask_t m) {
    Face f;
    while (m) {
        int b = std::countr_zero(m);
        f.push_back(b + 1);
        m &= m - 1;
    }
    return f;
}

inline int mask_size(mask_t m) { return std::popcount(m); }

// Canonicalizes an arbitrary vertex list into a Face; rejects out-of-range ids.
inline Face make_face(std::vector<int> verts, int n) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts) {
        if (v < 1 || v > n)
            throw Error(errc::vertex_out_of_range,
                        "vertex " + std::to_string(v) + " not in 1.." + std::to_string(n));
    }
    return verts;
}

// All subsets of `m` of given cardinality, ascending as integers.
inline std::vector<mask_t> subsets_of_size(mask_t m, int k) {
    std::vector<int> bits;
    for (mask_t t = m; t; t &= t - 1) bits.push_back(std::countr_zero(t));
    std::vector<mask_t> out;
    int nb = static_cast<int>(bits.size());
    if (k < 0 || k > nb) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        mask_t s = 0;
        for (int i : idx) s |= mask_t{1} << bits[i];
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && idx[i] == nb - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace srgci
