#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "complex.hpp"
#include "exact_linalg.hpp"

namespace bettiforge {

/**
 * Matrix of the boundary map d_k : C_k -> C_{k-1} of the reduced chain
 * complex, in the lexicographic face bases. Rows index (k-1)-faces, columns
 * index k-faces; for k = 0 the single row is the empty face and the matrix is
 * the all-ones augmentation. Entry (F', F) is (-1)^pos where pos is the index
 * of the vertex F \ F' within F sorted ascending.
 */
struct BoundaryMatrix {
    int k = 0;
    std::vector<std::uint64_t> row_faces;
    std::vector<std::uint64_t> col_faces;
    std::vector<std::int8_t> entries;  // row-major, row_faces.size() x col_faces.size()

    std::int8_t at(std::size_t i, std::size_t j) const {
        return entries[i * col_faces.size() + j];
    }
};

inline BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int k) {
    if (k < 0) throw std::invalid_argument("boundary_matrix: k must be >= 0");
    BoundaryMatrix m;
    m.k = k;
    m.row_faces = c.faces_of_dim(k - 1);
    m.col_faces = c.faces_of_dim(k);
    m.entries.assign(m.row_faces.size() * m.col_faces.size(), 0);
    std::unordered_map<std::uint64_t, std::size_t> row_index;
    row_index.reserve(m.row_faces.size());
    for (std::size_t i = 0; i < m.row_faces.size(); ++i) row_index[m.row_faces[i]] = i;
    for (std::size_t j = 0; j < m.col_faces.size(); ++j) {
        std::uint64_t face = m.col_faces[j];
        int pos = 0;
        std::uint64_t it = face;
        while (it) {
            std::uint64_t low = it & (~it + 1);
            std::size_t i = row_index.at(face ^ low);
            m.entries[i * m.col_faces.size() + j] = (pos % 2 == 0) ? 1 : -1;
            ++pos;
            it ^= low;
        }
    }
    return m;
}

namespace detail {

inline int boundary_rank(const std::vector<std::vector<std::uint64_t>>& faces, int k,
                         const FieldSpec& field) {
    // rank of d_k over the chain complex with face lists `faces` (index = dim)
    auto count = [&](int dim) -> std::size_t {
        if (dim == -1) return 1;
        if (dim < -1 || dim >= static_cast<int>(faces.size())) return 0;
        return faces[dim].size();
    };
    if (k < 0) return 0;
    std::size_t rows = count(k - 1), cols = count(k);
    if (rows == 0 || cols == 0) return 0;
    if (k == 0) return 1;  // augmentation row is all ones
    check_matrix_size(cols);
    std::vector<std::int8_t> entries(rows * cols, 0);
    std::unordered_map<std::uint64_t, std::size_t> row_index;
    row_index.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) row_index[faces[k - 1][i]] = i;
    for (std::size_t j = 0; j < cols; ++j) {
        std::uint64_t face = faces[k][j];
        int pos = 0;
        std::uint64_t it = face;
        while (it) {
            std::uint64_t low = it & (~it + 1);
            entries[row_index.at(face ^ low) * cols + j] = (pos % 2 == 0) ? 1 : -1;
            ++pos;
            it ^= low;
        }
    }
    return matrix_rank(rows, cols, entries.data(), field);
}

}  // namespace detail

/**
 * Dimensions of the reduced homology H~_k for k = -1 .. max_k, returned as a
 * vector indexed by k+1. Ranks of consecutive boundary maps are computed once
 * and shared between adjacent degrees.
 */
inline std::vector<long> reduced_betti_through(const SimplicialComplex& c, int max_k,
                                               const FieldSpec& field) {
    if (c.is_void())
        throw std::invalid_argument("reduced homology of the void complex is undefined");
    if (max_k < -1) return {};
    auto faces = c.faces_by_dim();
    int dim = static_cast<int>(faces.size()) - 1;  // -1 for {emptyset}
    auto f = [&](int k) -> long {
        if (k == -1) return 1;
        if (k < -1 || k > dim) return 0;
        return static_cast<long>(faces[k].size());
    };
    std::vector<long> out(static_cast<std::size_t>(max_k) + 2, 0);
    int prev_rank = 0;  // rank of d_{-1} = 0
    for (int k = -1; k <= max_k; ++k) {
        int next_rank = k + 1 <= dim ? detail::boundary_rank(faces, k + 1, field) : 0;
        out[static_cast<std::size_t>(k) + 1] = f(k) - prev_rank - next_rank;
        prev_rank = next_rank;
    }
    return out;
}

/// dim_K H~_k(c; K). The void complex is a contract violation.
inline long reduced_betti(const SimplicialComplex& c, int k, const FieldSpec& field) {
    if (k < -1) return 0;
    return reduced_betti_through(c, k, field).back();
}

/// Reduced Euler characteristic: sum over k >= 0 of (-1)^k f_k, minus 1.
inline long long reduced_euler_characteristic(const SimplicialComplex& c) {
    if (c.is_void())
        throw std::invalid_argument("euler characteristic of the void complex is undefined");
    auto faces = c.faces_by_dim();
    long long chi = -1;
    for (std::size_t k = 0; k < faces.size(); ++k) {
        long long cnt = static_cast<long long>(faces[k].size());
        chi += (k % 2 == 0) ? cnt : -cnt;
    }
    return chi;
}

}  // namespace bettiforge
