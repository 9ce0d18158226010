#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "betti_table.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "homology.hpp"

namespace bettiforge {

struct OracleOptions {
    int vertex_cap = 14;   // subset enumeration is 2^n; lift with force
    bool force = false;
    unsigned threads = 0;  // 0 = available parallelism
};

namespace detail {

// Homology dims of Ind_r(g) for degrees r-1 .. t-1 (t = vertex count).
// A graph whose whole vertex set is r-independent spans the full simplex,
// which has no reduced homology.
inline std::vector<long> subgraph_homology_profile(const Graph& g, int r,
                                                   const FieldSpec& field) {
    const int t = g.vertex_count();
    std::vector<long> dims(static_cast<std::size_t>(t - r + 1), 0);
    if (is_r_independent(g, g.vertex_mask(), r)) return dims;
    SimplicialComplex complex = ind_r(g, r);
    std::vector<long> all = reduced_betti_through(complex, t - 1, field);
    for (int k = r - 1; k <= t - 1; ++k) dims[k - (r - 1)] = all[k + 1];
    return dims;
}

}  // namespace detail

/**
 * Graded Betti table of R_G/I_r(G) by Hochster's formula: for every vertex
 * subset W and every degree d with r <= d <= |W|, the dimension of
 * H~_{d-1}(Ind_r(G)[W]) is accumulated into entry (|W|-d, |W|).
 *
 * Subsets are enumerated by increasing size, lexicographically within each
 * size. Induced subcomplexes repeat heavily across subsets, so homology is
 * computed once per distinct relabeled induced subgraph; those jobs run in
 * parallel and are merged in enumeration order, making the result identical
 * for any thread count.
 */
inline BettiTable betti_hochster(const Graph& g, int r, const FieldSpec& field,
                                 const OracleOptions& opts = {}) {
    if (r < 1) throw std::invalid_argument("betti_hochster: r must be >= 1");
    const int n = g.vertex_count();
    if (!opts.force && n > opts.vertex_cap)
        throw computation_refused("betti_hochster: " + std::to_string(n) +
                                  " vertices exceeds the enumeration cap of " +
                                  std::to_string(opts.vertex_cap) + " (use force to lift)");
    detail::check_enumeration_size(n, "betti_hochster");

    // Pass 1: enumerate subsets, dedup by the relabeled induced subgraph.
    struct SubsetRef {
        int size;
        std::size_t job;
    };
    std::vector<SubsetRef> subsets;
    std::vector<Graph> jobs;
    std::map<std::vector<std::uint64_t>, std::size_t> job_index;
    for (int k = r; k <= n; ++k) {
        for_each_combination(n, k, [&](std::uint64_t w) {
            std::vector<std::uint64_t> key;
            key.reserve(static_cast<std::size_t>(k));
            std::uint64_t it = w;
            while (it) {
                key.push_back(compress_into(g.adjacency(std::countr_zero(it)) & w, w));
                it &= it - 1;
            }
            auto [pos, inserted] = job_index.try_emplace(std::move(key), jobs.size());
            if (inserted) jobs.push_back(induced_subgraph(g, w));
            subsets.push_back({k, pos->second});
        });
    }

    // Pass 2: homology per distinct induced subgraph, in parallel.
    std::vector<std::vector<long>> profiles(jobs.size());
    unsigned threads = opts.threads != 0 ? opts.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    if (threads > jobs.size() && !jobs.empty()) threads = static_cast<unsigned>(jobs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        while (true) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= jobs.size()) return;
            try {
                profiles[idx] = detail::subgraph_homology_profile(jobs[idx], r, field);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    // Pass 3: accumulate in enumeration order.
    BettiTable out(n, r, field.label(), TableMethod::oracle);
    for (const SubsetRef& ref : subsets) {
        const std::vector<long>& dims = profiles[ref.job];
        for (int d = r; d <= ref.size; ++d) {
            long h = dims[static_cast<std::size_t>(d - r)];
            if (h != 0) out.add(ref.size - d, ref.size, h);
        }
    }
    return out;
}

}  // namespace bettiforge
