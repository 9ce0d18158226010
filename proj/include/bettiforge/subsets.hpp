#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace bettiforge {

// Vertex subsets are bitmasks over 0..n-1; bit v set means vertex v belongs
// to the subset. All ground sets are capped at 63 vertices so a subset always
// fits in one word.

inline constexpr int max_vertices = 63;

inline int popcount(std::uint64_t m) { return std::popcount(m); }

inline std::uint64_t full_mask(int n) {
    return n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
}

inline int lowest_vertex(std::uint64_t m) { return std::countr_zero(m); }

/// Lexicographic order on subsets read as sorted vertex tuples, e.g.
/// {0,3} < {1,2} and {0} < {0,1} < {1}.
inline bool lex_mask_less(std::uint64_t a, std::uint64_t b) {
    if (a == b) return false;
    std::uint64_t diff = a ^ b;
    std::uint64_t low = diff & (~diff + 1);
    return (a & low) != 0;
}

inline std::vector<int> mask_to_vertices(std::uint64_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

inline std::uint64_t vertices_to_mask(const std::vector<int>& vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= std::uint64_t{1} << v;
    return m;
}

/// Renumber the elements of `f` (a subset of `w`) by their rank within `w`,
/// i.e. the order-preserving relabeling of w onto 0..|w|-1.
inline std::uint64_t compress_into(std::uint64_t f, std::uint64_t w) {
    std::uint64_t out = 0;
    int idx = 0;
    while (w) {
        std::uint64_t low = w & (~w + 1);
        if (f & low) out |= std::uint64_t{1} << idx;
        ++idx;
        w ^= low;
    }
    return out;
}

/// Visit all k-element subsets of {0,..,n-1} in lexicographic order.
template <typename F>
void for_each_combination(int n, int k, F&& fn) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        fn(std::uint64_t{0});
        return;
    }
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
        std::uint64_t m = 0;
        for (int v : c) m |= std::uint64_t{1} << v;
        fn(m);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

/// Visit all nonempty submasks of `m`.
template <typename F>
void for_each_submask(std::uint64_t m, F&& fn) {
    for (std::uint64_t s = m; s != 0; s = (s - 1) & m) fn(s);
}

}  // namespace bettiforge
