#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <bettiforge/betti_table.hpp>
#include <bettiforge/graph.hpp>

namespace test_support {

inline bettiforge::Graph random_graph(int n, double density, std::mt19937& rng) {
    std::bernoulli_distribution coin(density);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return bettiforge::Graph(n, edges);
}

/// Disjoint union, first block keeps its labels.
inline bettiforge::Graph disjoint_union(const bettiforge::Graph& a, const bettiforge::Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.vertex_count(), v + a.vertex_count());
    return bettiforge::Graph(a.vertex_count() + b.vertex_count(), edges);
}

inline bettiforge::Graph relabel(const bettiforge::Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return bettiforge::Graph(g.vertex_count(), edges);
}

/// Build a table directly from (i, j, value) triples, for frozen expectations.
inline bettiforge::BettiTable table_of(int ambient, int r,
                                       const std::vector<std::tuple<int, int, long>>& triples) {
    bettiforge::BettiTable t(ambient, r, "expected", bettiforge::TableMethod::closed_form);
    for (auto& [i, j, v] : triples) t.add(i, j, v);
    return t;
}

}  // namespace test_support
