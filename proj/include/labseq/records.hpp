#pragma once

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "labseq/bounds.hpp"
#include "labseq/fit.hpp"

namespace labseq {

struct record_entry {
    std::uint64_t n_value = 0;
    std::int64_t best_energy = 0;
};

/// Published best known energies for lengths 4 through 60.
inline const std::vector<record_entry>& builtin_records() {
    static const std::vector<record_entry> table = [] {
        constexpr std::int64_t energies[] = {
            2,   2,   7,   3,   8,   12,  13,  5,   10,  6,   19,  15,  24,  32, 25,
            29,  26,  26,  39,  47,  36,  36,  45,  37,  50,  62,  59,  67,  64, 64,
            65,  73,  82,  86,  87,  99,  108, 108, 101, 109, 122, 118, 131, 135, 140,
            136, 153, 153, 166, 170, 175, 171, 192, 188, 197, 205, 218};
        std::vector<record_entry> rows;
        rows.reserve(std::size(energies));
        std::uint64_t n = 4;
        for (std::int64_t e : energies) rows.push_back({n++, e});
        return rows;
    }();
    return table;
}

inline constexpr const char* records_csv_header = "n,best_energy";

namespace detail {

inline std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

inline bool parse_u64_field(const std::string& field, std::uint64_t& out) {
    const std::string t = trim(field);
    if (t.empty()) return false;
    std::uint64_t v = 0;
    for (char c : t) {
        if (c < '0' || c > '9') return false;
        if (v > (std::numeric_limits<std::uint64_t>::max() - (c - '0')) / 10) return false;
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    out = v;
    return true;
}

}  // namespace detail

/// Reads "n,best_energy" CSV. A leading header row is optional. Every bad row
/// is rejected with its 1-based row number: malformed fields, lengths below
/// 2, energies below the theoretical minimum, or energies off the mod-4
/// lattice.
inline std::vector<record_entry> load_records(std::istream& in) {
    std::vector<record_entry> rows;
    std::string line;
    std::size_t row_number = 0;
    while (std::getline(in, line)) {
        ++row_number;
        const std::string text = detail::trim(line);
        if (text.empty()) continue;
        if (row_number == 1 && text == records_csv_header) continue;

        const auto comma = text.find(',');
        std::uint64_t n = 0, energy = 0;
        if (comma == std::string::npos ||
            text.find(',', comma + 1) != std::string::npos ||
            !detail::parse_u64_field(text.substr(0, comma), n) ||
            !detail::parse_u64_field(text.substr(comma + 1), energy))
            throw error("records row " + std::to_string(row_number) +
                        ": expected two comma-separated non-negative integers, got \"" + text +
                        "\"");
        if (n < 2)
            throw error("records row " + std::to_string(row_number) +
                        ": length must be at least 2");
        try {
            deviation_of(n, static_cast<std::int64_t>(energy));
        } catch (const error& e) {
            throw error("records row " + std::to_string(row_number) + ": " + e.what());
        }
        rows.push_back({n, static_cast<std::int64_t>(energy)});
    }
    return rows;
}

struct record_row {
    std::uint64_t n_value = 0;
    std::int64_t best_energy = 0;
    std::int64_t min_possible = 0;
    std::int64_t deviation = 0;
};

inline std::vector<record_row> analyze_records(const std::vector<record_entry>& entries) {
    std::vector<record_row> rows;
    rows.reserve(entries.size());
    for (const auto& entry : entries)
        rows.push_back({entry.n_value, entry.best_energy, min_energy(entry.n_value),
                        deviation_of(entry.n_value, entry.best_energy)});
    return rows;
}

/// Quadratic model of deviation growth over the record table.
inline fit_model fit_record_deviations(const std::vector<record_row>& rows) {
    std::vector<fit_point> points;
    points.reserve(rows.size());
    for (const auto& row : rows)
        points.push_back({static_cast<double>(row.n_value), static_cast<double>(row.deviation)});
    return fit_quadratic(points);
}

}  // namespace labseq
