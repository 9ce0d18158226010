#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "subsets.hpp"

namespace bettiforge {

/**
 * An abstract simplicial complex on ground set 0..n-1, stored by its facets
 * (inclusion-maximal faces). Faces of a given dimension are enumerated on
 * demand; nothing is cached, so instances are immutable and freely shared.
 *
 * Two degenerate complexes are distinguished: the void complex (no faces at
 * all, empty facet list) and the complex {emptyset} (single facet 0).
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Build from an arbitrary collection of generating faces; keeps the
    /// inclusion-maximal ones. An empty collection yields the void complex.
    static SimplicialComplex from_faces(int ground, std::vector<std::uint64_t> faces) {
        check_ground(ground);
        for (std::uint64_t f : faces)
            if ((f & ~full_mask(ground)) != 0)
                throw std::invalid_argument("complex: face outside ground set");
        std::sort(faces.begin(), faces.end(),
                  [](std::uint64_t a, std::uint64_t b) { return popcount(a) > popcount(b); });
        std::vector<std::uint64_t> facets;
        for (std::uint64_t f : faces) {
            bool dominated = false;
            for (std::uint64_t m : facets)
                if ((f & ~m) == 0) {
                    dominated = true;
                    break;
                }
            if (!dominated) facets.push_back(f);
        }
        return from_facets_unchecked(ground, std::move(facets));
    }

    /// Caller guarantees `facets` is an antichain within the ground set.
    static SimplicialComplex from_facets_unchecked(int ground, std::vector<std::uint64_t> facets) {
        check_ground(ground);
        SimplicialComplex c;
        c.ground_ = ground;
        c.facets_ = std::move(facets);
        std::sort(c.facets_.begin(), c.facets_.end(), lex_mask_less);
        return c;
    }

    static SimplicialComplex void_complex(int ground) {
        return from_facets_unchecked(ground, {});
    }

    static SimplicialComplex empty_face_only(int ground) {
        return from_facets_unchecked(ground, {0});
    }

    /// Full simplex on n vertices.
    static SimplicialComplex simplex(int n) {
        return from_facets_unchecked(n, {full_mask(n)});
    }

    int ground_set_size() const { return ground_; }
    const std::vector<std::uint64_t>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }

    /// Max face dimension; -1 for {emptyset}, -2 for the void complex.
    int dimension() const {
        int d = -2;
        for (std::uint64_t f : facets_) d = std::max(d, popcount(f) - 1);
        return d;
    }

    bool contains_face(std::uint64_t f) const {
        for (std::uint64_t m : facets_)
            if ((f & ~m) == 0) return true;
        return false;
    }

    /// All k-faces in lexicographic order. k = -1 gives [emptyset] on a
    /// nonvoid complex; out-of-range k gives [].
    std::vector<std::uint64_t> faces_of_dim(int k) const {
        if (is_void() || k < -1) return {};
        if (k == -1) return {0};
        std::unordered_set<std::uint64_t> seen;
        for (std::uint64_t facet : facets_) {
            if (popcount(facet) < k + 1) continue;
            enumerate_subfaces(facet, k + 1, seen);
        }
        std::vector<std::uint64_t> out(seen.begin(), seen.end());
        std::sort(out.begin(), out.end(), lex_mask_less);
        return out;
    }

    /// Nonempty faces grouped by dimension, index k holds the k-faces.
    std::vector<std::vector<std::uint64_t>> faces_by_dim() const {
        int dim = dimension();
        std::vector<std::vector<std::uint64_t>> out;
        if (dim < 0) return out;
        out.resize(static_cast<std::size_t>(dim) + 1);
        std::unordered_set<std::uint64_t> seen;
        for (std::uint64_t facet : facets_)
            for_each_submask(facet, [&](std::uint64_t s) {
                if (seen.insert(s).second) out[popcount(s) - 1].push_back(s);
            });
        for (auto& bucket : out) std::sort(bucket.begin(), bucket.end(), lex_mask_less);
        return out;
    }

    /// Number of nonempty faces.
    std::size_t face_count() const {
        std::unordered_set<std::uint64_t> seen;
        for (std::uint64_t facet : facets_)
            for_each_submask(facet, [&](std::uint64_t s) { seen.insert(s); });
        return seen.size();
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.ground_ == b.ground_ && a.facets_ == b.facets_;
    }

private:
    static void check_ground(int ground) {
        if (ground < 0 || ground > max_vertices)
            throw std::invalid_argument("complex: ground set size out of range");
    }

    static void enumerate_subfaces(std::uint64_t facet, int size,
                                   std::unordered_set<std::uint64_t>& seen) {
        std::vector<int> verts = mask_to_vertices(facet);
        for_each_combination(static_cast<int>(verts.size()), size, [&](std::uint64_t idx_mask) {
            std::uint64_t f = 0;
            std::uint64_t it = idx_mask;
            while (it) {
                f |= std::uint64_t{1} << verts[std::countr_zero(it)];
                it &= it - 1;
            }
            seen.insert(f);
        });
    }

    int ground_ = 0;
    std::vector<std::uint64_t> facets_;
};

/**
 * A hypergraph on ground set 0..n-1 whose hyperedges have size >= 2 and form
 * an antichain under inclusion.
 */
struct Hypergraph {
    int ground = 0;
    std::vector<std::uint64_t> hyperedges;  // lex sorted

    static Hypergraph make(int ground, std::vector<std::uint64_t> hyperedges) {
        Hypergraph h;
        h.ground = ground;
        h.hyperedges = std::move(hyperedges);
        std::sort(h.hyperedges.begin(), h.hyperedges.end(), lex_mask_less);
        for (std::size_t a = 0; a < h.hyperedges.size(); ++a) {
            if (popcount(h.hyperedges[a]) < 2)
                throw std::invalid_argument("hypergraph: hyperedge of size < 2");
            if ((h.hyperedges[a] & ~full_mask(ground)) != 0)
                throw std::invalid_argument("hypergraph: hyperedge outside ground set");
            for (std::size_t b = 0; b < h.hyperedges.size(); ++b)
                if (a != b && (h.hyperedges[a] & ~h.hyperedges[b]) == 0)
                    throw std::invalid_argument("hypergraph: hyperedges not an antichain");
        }
        return h;
    }
};

namespace detail {

inline void check_enumeration_size(int n, const char* what) {
    if (n > 25)
        throw computation_refused(std::string(what) +
                                  ": subset enumeration over more than 25 vertices refused");
}

}  // namespace detail

/// The r-connectedness hypergraph Con_r(G): hyperedges are the (r+1)-subsets
/// of V(G) that induce a connected subgraph. Con_1(G) recovers E(G).
inline Hypergraph con_r(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("con_r: r must be >= 1");
    int n = g.vertex_count();
    std::vector<std::uint64_t> edges;
    for_each_combination(n, r + 1, [&](std::uint64_t a) {
        if (subgraph_connected(g, a)) edges.push_back(a);
    });
    Hypergraph h;
    h.ground = n;
    h.hyperedges = std::move(edges);
    return h;
}

/// The r-independence complex Ind_r(G): faces are the subsets A whose induced
/// subgraph G[A] has every connected component of size <= r. This is the
/// independence complex of Con_r(G).
inline SimplicialComplex ind_r(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("ind_r: r must be >= 1");
    int n = g.vertex_count();
    detail::check_enumeration_size(n, "ind_r");
    std::uint64_t count = std::uint64_t{1} << n;
    std::vector<char> indep(count);
    for (std::uint64_t m = 0; m < count; ++m)
        indep[m] = is_r_independent(g, m, r) ? 1 : 0;
    std::vector<std::uint64_t> facets;
    for (std::uint64_t m = 0; m < count; ++m) {
        if (!indep[m]) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!(m >> v & 1) && indep[m | (std::uint64_t{1} << v)]) maximal = false;
        if (maximal) facets.push_back(m);
    }
    return SimplicialComplex::from_facets_unchecked(n, std::move(facets));
}

/// Faces of c contained in `w`, with the ground set relabeled
/// order-preservingly to 0..|w|-1.
inline SimplicialComplex induced_subcomplex(const SimplicialComplex& c, std::uint64_t w) {
    if ((w & ~full_mask(c.ground_set_size())) != 0)
        throw std::invalid_argument("induced_subcomplex: vertex out of range");
    std::vector<std::uint64_t> gens;
    gens.reserve(c.facets().size());
    for (std::uint64_t f : c.facets()) gens.push_back(compress_into(f & w, w));
    return SimplicialComplex::from_faces(popcount(w), std::move(gens));
}

/// Subcomplex of faces of dimension <= k; k = -1 yields {emptyset}.
inline SimplicialComplex skeleton(const SimplicialComplex& c, int k) {
    if (k < -1) throw std::invalid_argument("skeleton: k must be >= -1");
    if (c.is_void()) return c;
    if (k == -1) return SimplicialComplex::empty_face_only(c.ground_set_size());
    std::vector<std::uint64_t> gens;
    for (std::uint64_t facet : c.facets()) {
        std::vector<int> verts = mask_to_vertices(facet);
        int size = static_cast<int>(verts.size());
        if (size <= k + 1) {
            gens.push_back(facet);
            continue;
        }
        for_each_combination(size, k + 1, [&](std::uint64_t idx_mask) {
            std::uint64_t f = 0;
            std::uint64_t it = idx_mask;
            while (it) {
                f |= std::uint64_t{1} << verts[std::countr_zero(it)];
                it &= it - 1;
            }
            gens.push_back(f);
        });
    }
    return SimplicialComplex::from_faces(c.ground_set_size(), std::move(gens));
}

inline std::vector<std::uint64_t> faces_of_dim(const SimplicialComplex& c, int k) {
    return c.faces_of_dim(k);
}

}  // namespace bettiforge
