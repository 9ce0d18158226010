#pragma once

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "betti_table.hpp"

namespace bettiforge {

enum class TableFormat { text, json };

namespace detail {

inline std::string rjust(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

// Text layout mirrors the usual Betti diagram: columns are the homological
// index i, rows are the strand d = j - i, zeros print as '.'.
inline std::string render_text(const BettiTable& t) {
    const int cols = projective_dimension(t);
    const int rows = regularity(t);
    std::vector<std::vector<std::string>> cells(rows + 1,
                                                std::vector<std::string>(cols + 1, "."));
    for (const auto& [key, v] : t.entries()) {
        auto [i, j] = key;
        cells[j - i][i] = v.str();
    }
    std::vector<std::size_t> width(cols + 1);
    for (int i = 0; i <= cols; ++i) {
        width[i] = std::to_string(i).size();
        for (int d = 0; d <= rows; ++d) width[i] = std::max(width[i], cells[d][i].size());
    }
    const std::size_t label_width = std::to_string(rows).size() + 1;
    std::ostringstream out;
    out << std::string(label_width, ' ');
    for (int i = 0; i <= cols; ++i) out << ' ' << rjust(std::to_string(i), width[i]);
    out << '\n';
    for (int d = 0; d <= rows; ++d) {
        out << rjust(std::to_string(d) + ":", label_width);
        for (int i = 0; i <= cols; ++i) out << ' ' << rjust(cells[d][i], width[i]);
        out << '\n';
    }
    return out.str();
}

inline std::string render_json(const BettiTable& t) {
    nlohmann::ordered_json doc;
    doc["ambient_n"] = t.ambient_n();
    doc["r"] = t.r();
    doc["method"] = to_string(t.method());
    doc["field"] = t.field_label();
    doc["entries"] = nlohmann::ordered_json::array();
    for (const auto& [key, v] : t.entries()) {
        nlohmann::ordered_json entry;
        entry["i"] = key.first;
        entry["j"] = key.second;
        entry["value"] = v.str();  // decimal string, values may exceed 64 bits
        doc["entries"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

}  // namespace detail

inline std::string render_table(const BettiTable& t, TableFormat format) {
    return format == TableFormat::text ? detail::render_text(t) : detail::render_json(t);
}

inline TableMethod method_from_string(const std::string& s) {
    if (s == "oracle") return TableMethod::oracle;
    if (s == "closed_form") return TableMethod::closed_form;
    if (s == "join_composition") return TableMethod::join_composition;
    throw std::invalid_argument("unknown table method '" + s + "'");
}

/// Inverse of the json rendering; values are parsed from decimal strings.
inline BettiTable parse_table_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    BettiTable t(doc.at("ambient_n").get<int>(), doc.at("r").get<int>(),
                 doc.at("field").get<std::string>(),
                 method_from_string(doc.at("method").get<std::string>()));
    for (const auto& entry : doc.at("entries")) {
        int i = entry.at("i").get<int>();
        int j = entry.at("j").get<int>();
        Int v(entry.at("value").get<std::string>());
        if (i == 0 && j == 0) {
            if (v != 1) throw std::invalid_argument("betti table: entry (0,0) must be 1");
            continue;
        }
        t.add(i, j, v);
    }
    return t;
}

/// Entries differing between two tables: (i, j, value in a, value in b).
inline std::vector<std::tuple<int, int, Int, Int>> table_diff(const BettiTable& a,
                                                              const BettiTable& b) {
    std::vector<std::tuple<int, int, Int, Int>> out;
    auto ia = a.entries().begin(), ib = b.entries().begin();
    while (ia != a.entries().end() || ib != b.entries().end()) {
        if (ib == b.entries().end() || (ia != a.entries().end() && ia->first < ib->first)) {
            out.emplace_back(ia->first.first, ia->first.second, ia->second, Int(0));
            ++ia;
        } else if (ia == a.entries().end() || ib->first < ia->first) {
            out.emplace_back(ib->first.first, ib->first.second, Int(0), ib->second);
            ++ib;
        } else {
            if (ia->second != ib->second)
                out.emplace_back(ia->first.first, ia->first.second, ia->second, ib->second);
            ++ia;
            ++ib;
        }
    }
    return out;
}

}  // namespace bettiforge
