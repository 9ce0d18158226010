#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "subsets.hpp"

namespace bettiforge {

/**
 * A finite simple graph on vertices 0..n-1.
 *
 * Edges are stored normalized (u < v, sorted, deduplicated) and mirrored in
 * per-vertex adjacency bitmasks. Instances are immutable after construction
 * and safe to share across threads.
 */
class Graph {
public:
    Graph() = default;

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
        if (n > max_vertices)
            throw std::invalid_argument("graph: more than " + std::to_string(max_vertices) +
                                        " vertices unsupported");
        adj_.assign(static_cast<std::size_t>(n), 0);
        edges_.reserve(edges.size());
        for (auto [u, v] : edges) {
            if (u == v)
                throw std::invalid_argument("graph: loop edge at vertex " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("graph: edge endpoint out of range");
            if (u > v) std::swap(u, v);
            edges_.emplace_back(u, v);
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        for (auto [u, v] : edges_) {
            adj_[u] |= std::uint64_t{1} << v;
            adj_[v] |= std::uint64_t{1} << u;
        }
    }

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Bitmask of neighbors of v.
    std::uint64_t adjacency(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    bool has_edge(int u, int v) const {
        return u >= 0 && u < n_ && v >= 0 && v < n_ && (adj_[u] >> v & 1) != 0;
    }

    std::uint64_t vertex_mask() const { return full_mask(n_); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint64_t> adj_;
};

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, edges);
}

/// Join G1 * G2: disjoint union plus all cross edges. Vertices of g2 are
/// relabeled by offset n1, so the blocks are 0..n1-1 and n1..n1+n2-1.
inline Graph join(const Graph& g1, const Graph& g2) {
    int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    std::vector<std::pair<int, int>> edges = g1.edges();
    for (auto [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) edges.emplace_back(u, n1 + v);
    return Graph(n1 + n2, edges);
}

/// Subgraph induced on the vertices of `mask`, relabeled order-preservingly
/// to 0..|mask|-1.
inline Graph induced_subgraph(const Graph& g, std::uint64_t mask) {
    if ((mask & ~g.vertex_mask()) != 0)
        throw std::invalid_argument("induced_subgraph: vertex out of range");
    std::vector<int> verts = mask_to_vertices(mask);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (g.has_edge(verts[a], verts[b]))
                edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return Graph(static_cast<int>(verts.size()), edges);
}

inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    for (int v : vertices)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
    return induced_subgraph(g, vertices_to_mask(vertices));
}

/// Connected component of `seed` inside G[mask], as a bitmask.
inline std::uint64_t component_of(const Graph& g, std::uint64_t mask, int seed) {
    std::uint64_t comp = std::uint64_t{1} << seed;
    while (true) {
        std::uint64_t nb = 0;
        std::uint64_t it = comp;
        while (it) {
            nb |= g.adjacency(std::countr_zero(it));
            it &= it - 1;
        }
        std::uint64_t grown = comp | (nb & mask);
        if (grown == comp) return comp;
        comp = grown;
    }
}

/// True iff G[mask] is connected (subsets of size <= 1 count as connected).
inline bool subgraph_connected(const Graph& g, std::uint64_t mask) {
    if (mask == 0) return true;
    return component_of(g, mask, lowest_vertex(mask)) == mask;
}

inline bool is_connected(const Graph& g) {
    return subgraph_connected(g, g.vertex_mask());
}

/// Maximal connected subsets of 0..n-1, each sorted, ordered by minimum element.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::uint64_t rem = g.vertex_mask();
    while (rem) {
        std::uint64_t comp = component_of(g, rem, lowest_vertex(rem));
        out.push_back(mask_to_vertices(comp));
        rem &= ~comp;
    }
    return out;
}

/// True iff every connected component of G[mask] has at most r vertices.
inline bool is_r_independent(const Graph& g, std::uint64_t mask, int r) {
    std::uint64_t rem = mask;
    while (rem) {
        std::uint64_t comp = component_of(g, mask, lowest_vertex(rem));
        if (popcount(comp) > r) return false;
        rem &= ~comp;
    }
    return true;
}

// ---- standard families ----

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph empty_graph(int n) { return Graph(n, {}); }

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

/// Star K_{1,n}: hub is vertex 0, leaves are 1..n.
inline Graph star_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= n; ++v) edges.emplace_back(0, v);
    return Graph(n + 1, edges);
}

/// Wheel on n_plus_1 vertices: the (n_plus_1 - 1)-cycle joined with a single
/// hub, which ends up labeled last.
inline Graph wheel_graph(int n_plus_1) {
    if (n_plus_1 < 4) throw std::invalid_argument("wheel: need at least 4 vertices");
    return join(cycle_graph(n_plus_1 - 1), complete(1));
}

/// Complete multipartite graph; part s occupies the next n_s consecutive labels.
inline Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("multipartite: empty part list");
    int total = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("multipartite: each part must have size >= 1");
        total += p;
    }
    std::vector<std::pair<int, int>> edges;
    int offset = 0;
    for (std::size_t s = 0; s < parts.size(); ++s) {
        int hi = offset + parts[s];
        for (int u = offset; u < hi; ++u)
            for (int v = hi; v < total; ++v) edges.emplace_back(u, v);
        offset = hi;
    }
    return Graph(total, edges);
}

}  // namespace bettiforge
