#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "exact_linalg.hpp"

namespace bettiforge {

enum class TableMethod { oracle, closed_form, join_composition };

inline std::string to_string(TableMethod m) {
    switch (m) {
        case TableMethod::oracle: return "oracle";
        case TableMethod::closed_form: return "closed_form";
        case TableMethod::join_composition: return "join_composition";
    }
    return "?";
}

/**
 * Sparse N-graded Betti table of R_G/I_r(G): a map (homological index i,
 * internal degree j) -> positive count. Entry (0,0) = 1 is always present;
 * every other entry satisfies i >= 1, j >= i + r, and i, j <= ambient_n.
 * The field label is "q", "fp:P", or "formula" for closed-form tables.
 */
class BettiTable {
public:
    using Entries = std::map<std::pair<int, int>, Int>;

    BettiTable(int ambient_n, int r, std::string field_label, TableMethod method)
        : ambient_n_(ambient_n), r_(r), field_label_(std::move(field_label)), method_(method) {
        if (ambient_n < 0) throw std::invalid_argument("betti table: negative ambient size");
        if (r < 1) throw std::invalid_argument("betti table: r must be >= 1");
        entries_[{0, 0}] = 1;
    }

    int ambient_n() const { return ambient_n_; }
    int r() const { return r_; }
    const std::string& field_label() const { return field_label_; }
    TableMethod method() const { return method_; }
    const Entries& entries() const { return entries_; }

    /// Accumulate v into entry (i, j); v = 0 is a no-op. Enforces the table
    /// invariants on any newly touched entry.
    void add(int i, int j, const Int& v) {
        if (v == 0) return;
        if (v < 0) throw std::invalid_argument("betti table: negative entry");
        if (i == 0 && j == 0)
            throw std::invalid_argument("betti table: entry (0,0) is fixed to 1");
        if (i < 1 || j < i + r_ || i > ambient_n_ || j > ambient_n_)
            throw std::invalid_argument("betti table: entry (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") violates the support bounds");
        entries_[{i, j}] += v;
    }

    /// Entry value; absent, negative, or out-of-range indices give 0.
    Int value(int i, int j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? Int(0) : it->second;
    }

    friend bool operator==(const BettiTable& a, const BettiTable& b) {
        return a.ambient_n_ == b.ambient_n_ && a.r_ == b.r_ && a.entries_ == b.entries_;
    }

private:
    int ambient_n_;
    int r_;
    std::string field_label_;
    TableMethod method_;
    Entries entries_;
};

/// Castelnuovo-Mumford regularity: max of j - i over nonzero entries.
inline int regularity(const BettiTable& t) {
    int reg = 0;
    for (const auto& [key, v] : t.entries()) reg = std::max(reg, key.second - key.first);
    return reg;
}

/// Projective dimension: max homological index with a nonzero entry.
inline int projective_dimension(const BettiTable& t) {
    int pd = 0;
    for (const auto& [key, v] : t.entries()) pd = std::max(pd, key.first);
    return pd;
}

}  // namespace bettiforge
