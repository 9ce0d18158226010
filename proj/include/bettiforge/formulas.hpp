#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "betti_table.hpp"

namespace bettiforge {

/// Binomial coefficient with the counting convention: C(n,k) = 0 whenever
/// k < 0, k > n, or n < 0. Exact big-integer arithmetic.
inline Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int out = 1;
    for (long long i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

/// Table of the zero ideal: the single entry (0,0) = 1.
inline BettiTable betti_trivial(int ambient_n, int r) {
    return BettiTable(ambient_n, r, "formula", TableMethod::closed_form);
}

/**
 * Betti table of the join G1 * G2 assembled from the tables of the factors.
 * With n = |V(G1)|, m = |V(G2)| and d = j - i:
 *
 *   d  = r : sum_{j=0}^{i+d-1} [ C(m,j) t1(i-j, i-j+d) + C(n,j) t2(i-j, i-j+d) ]
 *            + sum_{j=1}^{i+d-1} [ C(i+d-1,d) - C(i+d-1-j,d) - C(j-1,d) ]
 *                                 * C(m,j) C(n, i+d-j)
 *   d >= r+1 : the first sum alone.
 *
 * Lookups at absent or negative indices contribute 0.
 */
inline BettiTable betti_join(const BettiTable& t1, int n, const BettiTable& t2, int m, int r) {
    if (t1.r() != r || t2.r() != r)
        throw std::invalid_argument("betti_join: tables computed for a different r");
    if (t1.ambient_n() != n || t2.ambient_n() != m)
        throw std::invalid_argument("betti_join: ambient size mismatch");
    BettiTable out(n + m, r, "formula", TableMethod::join_composition);
    for (int i = 1; i <= n + m; ++i) {
        for (int d = r; i + d <= n + m; ++d) {
            Int val = 0;
            for (int j = 0; j <= i + d - 1; ++j)
                val += binomial(m, j) * t1.value(i - j, i - j + d) +
                       binomial(n, j) * t2.value(i - j, i - j + d);
            if (d == r)
                for (int j = 1; j <= i + d - 1; ++j) {
                    Int bracket = binomial(i + d - 1, d) - binomial(i + d - 1 - j, d) -
                                  binomial(j - 1, d);
                    val += bracket * binomial(m, j) * binomial(n, i + d - j);
                }
            out.add(i, i + d, val);
        }
    }
    return out;
}

inline int reg_join(int reg1, int reg2) { return reg1 > reg2 ? reg1 : reg2; }

/// Complete graph K_n: beta_{i,i+r} = C(i+r-1, r) C(n, i+r) for 1 <= i <= n-r.
inline BettiTable betti_complete(int n, int r) {
    if (n < 0 || r < 1) throw std::invalid_argument("betti_complete: parameter out of range");
    BettiTable out(n, r, "formula", TableMethod::closed_form);
    for (int i = 1; i <= n - r; ++i)
        out.add(i, i + r, binomial(i + r - 1, r) * binomial(n, i + r));
    return out;
}

/**
 * Complete multipartite graph K_{n_1,...,n_t}: with N = sum n_s,
 *
 *   beta_{i,i+r} = C(N, i+r) C(i+r-1, r)
 *                - sum over (j_1,...,j_t) in N^t with sum j_s = i+r of
 *                  [ prod_s C(n_s, j_s) ] [ sum_s C(j_s - 1, r) ].
 *
 * Tuples with some j_s > n_s contribute 0 through the binomial convention,
 * so the enumeration bounds j_s by n_s.
 */
inline BettiTable betti_multipartite(const std::vector<int>& parts, int r) {
    if (parts.empty()) throw std::invalid_argument("betti_multipartite: empty part list");
    int total = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("betti_multipartite: part size must be >= 1");
        total += p;
    }
    if (r < 1) throw std::invalid_argument("betti_multipartite: r must be >= 1");
    BettiTable out(total, r, "formula", TableMethod::closed_form);
    std::vector<int> tuple(parts.size());
    for (int i = 1; i <= total - r; ++i) {
        const int degree = i + r;
        Int correction = 0;
        // iterate all bounded compositions of `degree` into parts.size() slots
        auto recurse = [&](auto&& self, std::size_t s, int remaining, const Int& prod) -> void {
            if (s + 1 == parts.size()) {
                if (remaining > parts[s]) return;
                tuple[s] = remaining;
                Int weight = prod * binomial(parts[s], remaining);
                if (weight == 0) return;
                Int inner = 0;
                for (std::size_t u = 0; u < parts.size(); ++u)
                    inner += binomial(tuple[u] - 1, r);
                correction += weight * inner;
                return;
            }
            int cap = remaining < parts[s] ? remaining : parts[s];
            for (int js = 0; js <= cap; ++js) {
                tuple[s] = js;
                self(self, s + 1, remaining - js, prod * binomial(parts[s], js));
            }
        };
        recurse(recurse, 0, degree, Int(1));
        Int val = binomial(total, degree) * binomial(degree - 1, r) - correction;
        if (val < 0)
            throw std::logic_error("betti_multipartite: negative value, formula misapplied");
        out.add(i, i + r, val);
    }
    return out;
}

/// Star K_{1,n} (n leaves, ambient n+1 variables):
/// beta_{i,i+r} = C(i+r-2, r-1) C(n, i+r-1) for 1 <= i <= n-r+1.
inline BettiTable betti_star(int n, int r) {
    if (n < 1 || r < 1) throw std::invalid_argument("betti_star: parameter out of range");
    BettiTable out(n + 1, r, "formula", TableMethod::closed_form);
    for (int i = 1; i <= n - r + 1; ++i)
        out.add(i, i + r, binomial(i + r - 2, r - 1) * binomial(n, i + r - 1));
    return out;
}

namespace detail {

struct CycleParams {
    int n, r, p, q;  // n = (r+2)p + q with 0 <= q <= r+1
};

inline CycleParams cycle_params(int n, int r) {
    if (n < 3 || r < 1 || r > n - 1)
        throw std::invalid_argument("cycle: need n >= 3 and 1 <= r <= n-1");
    return CycleParams{n, r, n / (r + 2), n % (r + 2)};
}

}  // namespace detail

/**
 * Cycle C_n, via the identification of I_r(C_n) with the (r+1)-path ideal.
 * Writing n = (r+2)p + q with 0 <= q <= r+1:
 *
 *   - top entry: beta_{2p, n} = r+1 when q = 0, beta_{2p+1, n} = 1 when q != 0;
 *   - strand entries for d = l*r, 1 <= l <= p, and l <= i <= min(2l, n-d-1):
 *       n / (n - l(r+1)) * C(l, i-l) * C(n - l(r+1), l).
 *
 * The strand is restricted to degrees d divisible by r; the coefficient is
 * evaluated in exact arithmetic and must come out integral.
 */
inline BettiTable betti_cycle(int n, int r) {
    auto [nn, rr, p, q] = detail::cycle_params(n, r);
    BettiTable out(n, r, "formula", TableMethod::closed_form);
    if (q == 0)
        out.add(2 * p, n, r + 1);
    else
        out.add(2 * p + 1, n, 1);
    for (int l = 1; l <= p; ++l) {
        const int d = l * r;
        const int den = n - l * (r + 1);
        if (den <= 0)
            throw std::logic_error("betti_cycle: nonpositive strand denominator");
        const int i_hi = std::min(2 * l, n - d - 1);
        for (int i = l; i <= i_hi; ++i) {
            Int num = Int(n) * binomial(l, i - l) * binomial(den, l);
            if (num % den != 0)
                throw std::logic_error("betti_cycle: non-integer strand value");
            out.add(i, i + d, num / den);
        }
    }
    return out;
}

/**
 * Wheel W_{n+1} = C_n * K_1 (ambient n+1 variables):
 *   beta_{i,i+d} = cyc(i, i+d) + cyc(i-1, i+d-1)
 *                + [d = r] C(i+d-2, d-1) C(n, i+d-1),
 * where cyc is the table of C_n at the same r.
 */
inline BettiTable betti_wheel(int n_plus_1, int r) {
    const int n = n_plus_1 - 1;
    if (n_plus_1 < 4 || r < 1 || r > n - 1)
        throw std::invalid_argument("wheel: need n+1 >= 4 and 1 <= r <= n-1");
    BettiTable cyc = betti_cycle(n, r);
    BettiTable out(n_plus_1, r, "formula", TableMethod::closed_form);
    for (int i = 1; i <= n_plus_1; ++i)
        for (int d = r; i + d <= n_plus_1; ++d) {
            Int val = cyc.value(i, i + d) + cyc.value(i - 1, i + d - 1);
            if (d == r) val += binomial(i + d - 2, d - 1) * binomial(n, i + d - 1);
            out.add(i, i + d, val);
        }
    return out;
}

/// Regularity of R/I_r(C_n): rp + q - 1 when q != 0, otherwise rp.
inline int reg_cycle(int n, int r) {
    auto [nn, rr, p, q] = detail::cycle_params(n, r);
    return q != 0 ? r * p + q - 1 : r * p;
}

/// The wheel has the same regularity as its rim cycle.
inline int reg_wheel(int n_plus_1, int r) {
    if (n_plus_1 < 4) throw std::invalid_argument("wheel: need n+1 >= 4");
    return reg_cycle(n_plus_1 - 1, r);
}

}  // namespace bettiforge
