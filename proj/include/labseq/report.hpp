#pragma once

#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "labseq/barker.hpp"
#include "labseq/bounds.hpp"
#include "labseq/decomposition.hpp"
#include "labseq/fit.hpp"
#include "labseq/levels.hpp"
#include "labseq/records.hpp"
#include "labseq/search.hpp"
#include "labseq/sequence.hpp"

namespace labseq {

using json = nlohmann::ordered_json;

namespace detail {

inline json json_uint128(uint128 v) {
    if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
    return to_string(v);  // beyond 64 bits: exact decimal string
}

inline json json_merit(const std::optional<merit_factor>& merit) {
    if (!merit) return nullptr;
    return round4(merit->value());
}

inline bool near_integer(double v) { return std::abs(v - std::round(v)) < 1e-6; }

}  // namespace detail

inline json json_of(const theoretical_bounds& bounds) {
    json doc;
    doc["n"] = bounds.n_value;
    doc["e_max"] = bounds.e_max;
    doc["e_min"] = bounds.e_min;
    doc["n_max"] = bounds.n_max;
    doc["f_max"] = detail::json_merit(bounds.f_max);
    return doc;
}

inline json json_of(const autocorrelation_profile& profile) {
    json doc;
    doc["n"] = profile.n;
    doc["lags"] = profile.lags;
    doc["energy"] = profile.energy;
    doc["merit"] = detail::json_merit(profile.merit);
    return doc;
}

inline json json_of(const energy_decomposition& d) {
    json doc;
    doc["x_term"] = d.x_term;
    doc["pair_count"] = d.pair_count;
    doc["minus_pairs"] = d.minus_pairs;
    doc["plus_pairs"] = d.plus_pairs;
    doc["y_term"] = d.y_term;
    doc["energy"] = d.energy;
    return doc;
}

inline json json_of(const level_row& row) {
    json doc;
    doc["lag"] = row.lag;
    doc["length"] = row.length;
    doc["expected_minus"] = {{"lo", row.expected_minus_lo}, {"hi", row.expected_minus_hi}};
    doc["theoretical_pair_max"] = row.theoretical_pair_max;
    doc["minus_count"] = row.minus_count;
    doc["pair_minus"] = row.actual_pair_minus;
    doc["deviation"] = row.deviation;
    return doc;
}

inline json json_of(const level_table& table) {
    json doc;
    doc["n"] = table.n_value;
    json rows = json::array();
    for (const auto& row : table.rows) rows.push_back(json_of(row));
    doc["rows"] = std::move(rows);
    doc["total_deviation"] = table.total_deviation;
    return doc;
}

inline json json_of(const search_result& result) {
    json doc;
    doc["n"] = result.n_value;
    doc["mode"] = result.mode == search_mode::exhaustive ? "exhaustive" : "heuristic";
    doc["best_energy"] = result.best_energy;
    doc["best_merit"] = detail::json_merit(result.best_merit);
    doc["optimum_count"] = result.optimum_count;
    doc["canonical_best"] = result.canonical_best.to_string();
    doc["attained_e_min"] = result.attained_e_min;
    doc["deviation"] = result.deviation;
    doc["sequences_examined"] = result.sequences_examined;
    return doc;
}

inline json json_of(const search_space_stats& stats) {
    json doc;
    doc["n"] = stats.n_value;
    doc["max_minus"] = stats.max_minus;
    doc["full_size"] = detail::json_uint128(stats.full_size);
    doc["filtered_size"] = detail::json_uint128(stats.filtered_size);
    doc["reduction_ratio"] = round4(stats.reduction_ratio);
    return doc;
}

inline json json_of(const lattice_check& check) {
    json doc;
    doc["n"] = check.n_value;
    doc["e_max"] = check.e_max;
    doc["e_min"] = check.e_min;
    doc["min_achieved"] = check.min_achieved;
    doc["max_achieved"] = check.max_achieved;
    doc["distinct_energies"] = check.distinct_energies;
    doc["lattice_ok"] = check.lattice_ok;
    doc["attains_e_min"] = check.attains_e_min;
    return doc;
}

inline json json_of(const barker_analysis& analysis) {
    json doc;
    doc["n"] = analysis.n_value;
    doc["energy"] = analysis.energy;
    doc["merit"] = detail::json_merit(analysis.merit);
    doc["is_barker"] = analysis.is_barker;
    doc["attains_e_min"] = analysis.attains_e_min;
    doc["deviation_from_merit"] = round4(analysis.deviation_from_merit);
    return doc;
}

inline json json_of(const barker_root_set& roots) {
    json doc;
    doc["merit"] = round4(roots.merit);
    doc["even_root"] = {{"value", round4(roots.even_root)},
                        {"integral", detail::near_integer(roots.even_root)}};
    if (roots.has_odd_roots) {
        doc["odd_roots"] = {{"high",
                             {{"value", round4(roots.odd_root_high)},
                              {"integral", detail::near_integer(roots.odd_root_high)}}},
                            {"low",
                             {{"value", round4(roots.odd_root_low)},
                              {"integral", detail::near_integer(roots.odd_root_low)}}}};
    } else {
        doc["odd_roots"] = nullptr;
    }
    return doc;
}

inline json json_of(const fit_model& model, const std::vector<record_row>& rows) {
    json doc;
    doc["coefficients"] = {{"a2", round4(model.a2)}, {"a1", round4(model.a1)},
                           {"a0", round4(model.a0)}};
    doc["fit_range"] = {{"lo", round4(model.fit_lo)}, {"hi", round4(model.fit_hi)}};
    doc["residual_rms"] = round4(model.residual_rms);
    json residuals = json::array();
    for (const auto& row : rows) {
        const double fitted = model.evaluate(static_cast<double>(row.n_value));
        residuals.push_back({{"n", row.n_value},
                             {"observed", row.deviation},
                             {"fitted", round4(fitted)},
                             {"residual", round4(fitted - static_cast<double>(row.deviation))}});
    }
    doc["residuals"] = std::move(residuals);
    return doc;
}

inline json envelope(const std::string& command, const std::string& input_echo, json payload) {
    json doc;
    doc["command"] = command;
    doc["input_echo"] = input_echo;
    doc["version"] = version;
    doc["payload"] = std::move(payload);
    return doc;
}

// --- CSV emitters ------------------------------------------------------

inline void level_csv(std::ostream& out, const level_table& table) {
    out << "lag,length,expected_minus,theoretical_pair_max,minus_count,pair_minus,deviation\n";
    for (const auto& row : table.rows)
        out << row.lag << ',' << row.length << ',' << row.expected_minus_lo << ".."
            << row.expected_minus_hi << ',' << row.theoretical_pair_max << ','
            << row.minus_count << ',' << row.actual_pair_minus << ',' << row.deviation << '\n';
}

inline void records_csv(std::ostream& out, const std::vector<record_row>& rows) {
    out << records_csv_header << '\n';
    for (const auto& row : rows) out << row.n_value << ',' << row.best_energy << '\n';
}

/// Plot-ready table: the fitted curve over every record plus one flagged row
/// for the extrapolation target (d_observed left empty there).
inline void extrapolation_csv(std::ostream& out, const std::vector<record_row>& rows,
                              const fit_model& model, std::uint64_t target_n) {
    out << "n,d_fit,d_observed,extrapolated\n";
    for (const auto& row : rows)
        out << row.n_value << ',' << format_fixed(model.evaluate(static_cast<double>(row.n_value)))
            << ',' << row.deviation << ",0\n";
    out << target_n << ',' << format_fixed(model.evaluate(static_cast<double>(target_n)))
        << ",,1\n";
}

inline void search_csv(std::ostream& out, const search_result& result) {
    out << "n,mode,best_energy,best_merit,optimum_count,canonical_best,attained_e_min,"
           "deviation,sequences_examined\n";
    out << result.n_value << ','
        << (result.mode == search_mode::exhaustive ? "exhaustive" : "heuristic") << ','
        << result.best_energy << ','
        << (result.best_merit ? format_fixed(result.best_merit->value()) : std::string{}) << ','
        << result.optimum_count << ',' << result.canonical_best.to_string() << ','
        << (result.attained_e_min ? 1 : 0) << ',' << result.deviation << ','
        << result.sequences_examined << '\n';
}

inline void space_csv(std::ostream& out, const search_space_stats& stats) {
    out << "n,max_minus,full_size,filtered_size,reduction_ratio\n";
    out << stats.n_value << ',' << stats.max_minus << ',' << to_string(stats.full_size) << ','
        << to_string(stats.filtered_size) << ',' << format_fixed(stats.reduction_ratio) << '\n';
}

inline void verify_csv(std::ostream& out, const std::vector<lattice_check>& checks) {
    out << "n,e_max,e_min,min_achieved,max_achieved,distinct_energies,lattice_ok,"
           "attains_e_min\n";
    for (const auto& check : checks)
        out << check.n_value << ',' << check.e_max << ',' << check.e_min << ','
            << check.min_achieved << ',' << check.max_achieved << ',' << check.distinct_energies
            << ',' << (check.lattice_ok ? 1 : 0) << ',' << (check.attains_e_min ? 1 : 0) << '\n';
}

inline void barker_check_csv(std::ostream& out, const barker_analysis& analysis) {
    out << "n,energy,merit,is_barker,attains_e_min,deviation_from_merit\n";
    out << analysis.n_value << ',' << analysis.energy << ','
        << (analysis.merit ? format_fixed(analysis.merit->value()) : std::string{}) << ','
        << (analysis.is_barker ? 1 : 0) << ',' << (analysis.attains_e_min ? 1 : 0) << ','
        << format_fixed(analysis.deviation_from_merit) << '\n';
}

inline void barker_roots_csv(std::ostream& out, const barker_root_set& roots) {
    out << "branch,root,integral\n";
    out << "even," << format_fixed(roots.even_root) << ','
        << (detail::near_integer(roots.even_root) ? 1 : 0) << '\n';
    if (roots.has_odd_roots) {
        out << "odd_high," << format_fixed(roots.odd_root_high) << ','
            << (detail::near_integer(roots.odd_root_high) ? 1 : 0) << '\n';
        out << "odd_low," << format_fixed(roots.odd_root_low) << ','
            << (detail::near_integer(roots.odd_root_low) ? 1 : 0) << '\n';
    }
}

}  // namespace labseq
