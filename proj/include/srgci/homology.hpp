// Exact rank computation over a coefficient field and reduced simplicial
// homology from boundary-matrix ranks.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "complex.hpp"
#include "error.hpp"

namespace srgci {

struct FieldSpec {
    enum class Kind { Rational, Prime };
    Kind kind;
    int p;  // modulus when Kind::Prime

    static FieldSpec rational() { return {Kind::Rational, 0}; }
    static FieldSpec prime(int p) {
        if (p < 2) throw Error(errc::vertex_out_of_range, "modulus must be prime");
        return {Kind::Prime, p};
    }
    // Fast default with negligible collision risk at desk scale.
    static FieldSpec default_field() { return prime(32003); }
};

// Dense matrix with small integer entries (boundary maps have entries ±1,
// but general integer input is accepted).
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<int> data;  // row-major

    int& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    int at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

inline int matrix_rank_mod_p(const IntMatrix& m, int p) {
    int rows = m.rows, cols = m.cols;
    std::vector<std::vector<int64_t>> a(rows, std::vector<int64_t>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) a[r][c] = ((m.at(r, c) % p) + p) % p;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        // normalize pivot row
        int64_t inv = 1, base = a[rank][c], e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int cc = c; cc < cols; ++cc) a[rank][cc] = a[rank][cc] * inv % p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || !a[r][c]) continue;
            int64_t f = a[r][c];
            for (int cc = c; cc < cols; ++cc)
                a[r][cc] = ((a[r][cc] - f * a[rank][cc]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

// Fraction-free Gaussian elimination (Bareiss) over the integers gives the
// rank over the rationals exactly.
inline int matrix_rank_rational(const IntMatrix& m) {
    using boost::multiprecision::cpp_int;
    int rows = m.rows, cols = m.cols;
    std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) a[r][c] = m.at(r, c);
    cpp_int prev = 1;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int cc = c + 1; cc < cols; ++cc)
                a[r][cc] = (a[rank][c] * a[r][cc] - a[r][c] * a[rank][cc]) / prev;
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

inline int matrix_rank(const IntMatrix& m, const FieldSpec& field) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return field.kind == FieldSpec::Kind::Rational ? matrix_rank_rational(m)
                                                   : matrix_rank_mod_p(m, field.p);
}

// dims[i] = rank of the i-th reduced homology; absent keys are zero.
struct HomologyProfile {
    std::map<int, int> dims;

    int rank(int i) const {
        auto it = dims.find(i);
        return it == dims.end() ? 0 : it->second;
    }
};

namespace detail {

// Boundary matrix from k-faces to (k-1)-faces; for k = 0 the target is the
// empty face (reduced augmentation).
inline IntMatrix boundary_matrix(const std::vector<mask_t>& lower,
                                 const std::vector<mask_t>& upper) {
    IntMatrix m;
    m.rows = static_cast<int>(lower.size());
    m.cols = static_cast<int>(upper.size());
    m.data.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);
    std::unordered_map<mask_t, int> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = static_cast<int>(i);
    for (std::size_t c = 0; c < upper.size(); ++c) {
        mask_t f = upper[c];
        int sign = 1, k = 0;
        for (mask_t t = f; t; t &= t - 1, ++k) {
            mask_t sub = f & ~(t & (~t + 1));
            auto it = index.find(sub);
            if (it != index.end()) m.at(it->second, static_cast<int>(c)) = (k % 2 ? -1 : 1);
        }
        (void)sign;
    }
    return m;
}

// Reduced homology ranks from faces grouped by cardinality (index = |F|).
// Only degrees q with q+2 <= max available cardinality are meaningful; the
// caller guarantees the face list is complete up to that cardinality.
inline HomologyProfile homology_from_graded_faces(const std::vector<std::vector<mask_t>>& by,
                                                  const FieldSpec& field, int qmax) {
    HomologyProfile prof;
    if (by.empty() || by[0].empty()) return prof;  // void complex: all zero
    int top = static_cast<int>(by.size()) - 1;
    // rank of boundary from cardinality k to k-1 faces
    std::vector<int> bd_rank(top + 2, 0);
    for (int k = 1; k <= top; ++k) {
        if (by[k].empty() || by[k - 1].empty()) continue;
        bd_rank[k] = matrix_rank(boundary_matrix(by[k - 1], by[k]), field);
    }
    for (int q = -1; q <= qmax; ++q) {
        int k = q + 1;  // faces of cardinality q+1 span C_q
        if (k > top) break;
        int dim_ck = static_cast<int>(by[k].size());
        int h = dim_ck - bd_rank[k] - (k + 1 <= top ? bd_rank[k + 1] : 0);
        if (h != 0) prof.dims[q] = h;
    }
    return prof;
}

}  // namespace detail

// Full reduced homology of a complex.  Conventions: the void complex has all
// ranks zero; the empty complex {∅} has rank 1 in degree -1.
inline HomologyProfile reduced_homology(const SimplicialComplex& c, const FieldSpec& field) {
    if (c.is_void()) return {};
    int top = c.dimension() + 1;  // max face cardinality
    auto by = faces_by_size(c, top);
    return detail::homology_from_graded_faces(by, field, c.dimension());
}

// Single reduced homology rank; degrees below -1 or above dim are zero.
inline int reduced_homology_rank(const SimplicialComplex& c, int q, const FieldSpec& field) {
    if (q < -1 || c.is_void()) return 0;
    if (q > c.dimension()) return 0;
    auto by = faces_by_size(c, std::min(c.dimension() + 1, q + 2));
    return detail::homology_from_graded_faces(by, field, q).rank(q);
}

}  // namespace srgci
