#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"

namespace bettiforge {

using Int = boost::multiprecision::cpp_int;

/// Coefficient field for homology: the rationals or a prime field F_p.
struct FieldSpec {
    enum class Kind { rationals, prime_field };

    Kind kind = Kind::rationals;
    long long p = 0;

    static FieldSpec rationals() { return FieldSpec{}; }

    static FieldSpec prime_field(long long p) {
        // (p-1)^2 must fit in a signed 64-bit intermediate
        if (p >= (1LL << 31)) throw std::invalid_argument("field: p must be below 2^31");
        if (!is_prime(p)) throw std::invalid_argument("field: p must be prime");
        FieldSpec f;
        f.kind = Kind::prime_field;
        f.p = p;
        return f;
    }

    std::string label() const {
        return kind == Kind::rationals ? "q" : "fp:" + std::to_string(p);
    }

    static bool is_prime(long long p) {
        if (p < 2) return false;
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind == b.kind && (a.kind == Kind::rationals || a.p == b.p);
    }
};

namespace detail {

inline constexpr std::size_t max_dense_columns = 5000;

inline void check_matrix_size(std::size_t cols) {
    if (cols > max_dense_columns)
        throw computation_refused("dense matrix with " + std::to_string(cols) +
                                  " columns exceeds the " +
                                  std::to_string(max_dense_columns) + "-column cap");
}

/*
 * Rank by fraction-free (Bareiss) elimination. Intermediate entries stay
 * integral: each elimination step divides exactly by the previous pivot,
 * which keeps entries equal to minors of the input matrix and bounds
 * coefficient growth without ever leaving the integers.
 */
inline int rank_rational(std::size_t rows, std::size_t cols, const std::int8_t* entries) {
    check_matrix_size(cols);
    if (rows == 0 || cols == 0) return 0;
    std::vector<Int> m(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) m[i] = entries[i];
    auto at = [&](std::size_t i, std::size_t j) -> Int& { return m[i * cols + j]; };

    Int prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && at(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        const Int piv = at(rank, col);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                at(i, j) = (piv * at(i, j) - at(i, col) * at(rank, j)) / prev;
            at(i, col) = 0;
        }
        prev = piv;
        ++rank;
    }
    return static_cast<int>(rank);
}

inline long long mod_pow(long long base, long long exp, long long p) {
    long long result = 1 % p;
    base %= p;
    if (base < 0) base += p;
    while (exp > 0) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

inline int rank_mod_p(std::size_t rows, std::size_t cols, const std::int8_t* entries,
                      long long p) {
    check_matrix_size(cols);
    if (rows == 0 || cols == 0) return 0;
    std::vector<long long> m(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        long long v = entries[i] % p;
        m[i] = v < 0 ? v + p : v;
    }
    auto at = [&](std::size_t i, std::size_t j) -> long long& { return m[i * cols + j]; };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && at(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        const long long inv = mod_pow(at(rank, col), p - 2, p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (at(i, col) == 0) continue;
            const long long factor = at(i, col) * inv % p;
            for (std::size_t j = col; j < cols; ++j) {
                at(i, j) = (at(i, j) - factor * at(rank, j)) % p;
                if (at(i, j) < 0) at(i, j) += p;
            }
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace detail

/// Exact rank of a small dense +-1/0 matrix over the given field.
inline int matrix_rank(std::size_t rows, std::size_t cols, const std::int8_t* entries,
                       const FieldSpec& field) {
    return field.kind == FieldSpec::Kind::rationals
               ? detail::rank_rational(rows, cols, entries)
               : detail::rank_mod_p(rows, cols, entries, field.p);
}

}  // namespace bettiforge
