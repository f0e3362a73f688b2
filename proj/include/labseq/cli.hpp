#pragma once

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "labseq/report.hpp"

namespace labseq {

namespace detail {

inline std::string join_args(const std::vector<std::string>& args) {
    std::string joined;
    for (const auto& arg : args) {
        if (!joined.empty()) joined += ' ';
        joined += arg;
    }
    return joined;
}

inline bool progress_requested() {
    const char* log = std::getenv("LABS_LOG");
    return log != nullptr && std::string(log) == "progress";
}

}  // namespace detail

/// Front end. Report goes to `out`; diagnostics and optional progress lines
/// go to `err`. Returns 0 on success, 1 on domain errors, 2 on usage errors.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"analysis and search toolkit for low-autocorrelation binary sequences"};
    app.name("labs");
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    // analyze
    auto* analyze = app.add_subcommand(
        "analyze", "autocorrelation profile, energy decomposition and level table");
    analyze->fallthrough();
    std::string analyze_text;
    analyze->add_option("sequence", analyze_text, "sequence like \"+++-\" or \"1 1 1 -1\"")
        ->required();

    // search
    auto* search = app.add_subcommand("search", "find minimum-energy sequences of a length");
    search->fallthrough();
    std::uint64_t search_n = 0;
    search->add_option("--n", search_n, "sequence length")->required();
    auto* exhaustive_flag = search->add_flag("--exhaustive", "enumerate the full space (default)");
    auto* heuristic_flag = search->add_flag("--heuristic", "restart steepest-descent search");
    exhaustive_flag->excludes(heuristic_flag);
    heuristic_flag->excludes(exhaustive_flag);
    std::uint64_t seed = 0, restarts = 0;
    auto* seed_opt = search->add_option("--seed", seed, "heuristic PRNG seed");
    auto* restarts_opt = search->add_option("--restarts", restarts, "heuristic restart count");
    heuristic_flag->needs(seed_opt)->needs(restarts_opt);
    seed_opt->needs(heuristic_flag);
    restarts_opt->needs(heuristic_flag);
    bool no_symmetry = false;
    search->add_flag("--no-symmetry", no_symmetry, "disable canonical-representative pruning");
    std::optional<unsigned> max_minus;
    search->add_option("--max-minus", max_minus,
                       "keep only sequences with at most this many minus elements");
    unsigned workers = 1;
    search->add_option("--workers", workers, "worker thread count")->check(CLI::Range(1u, 256u));
    unsigned ceiling = 28;
    search->add_option("--ceiling", ceiling, "largest length exhaustive mode will accept");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "enumerate all sequences up to a length and check the energy ladder");
    verify->fallthrough();
    std::uint64_t n_max = 0;
    verify->add_option("--n-max", n_max, "verify lengths 2..K")
        ->required()
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{24}));

    // records
    auto* records = app.add_subcommand("records", "best-known energy table, fit, extrapolation");
    records->fallthrough();
    std::string records_file;
    records->add_option("--file", records_file, "CSV of records (default: built-in table)");
    bool fit_flag = false;
    records->add_flag("--fit", fit_flag, "fit a quadratic to the deviations");
    std::optional<std::uint64_t> extrapolate_n;
    records->add_option("--extrapolate", extrapolate_n,
                        "evaluate the fitted deviation at this length");

    // barker
    auto* barker = app.add_subcommand("barker", "low-peak-sidelobe checks and merit-factor roots");
    barker->fallthrough();
    std::string barker_text;
    auto* check_opt =
        barker->add_option("--check", barker_text, "test a sequence for the +-1 sidelobe bound");
    auto* roots_flag =
        barker->add_flag("--roots", "lengths where the merit-implied deviation vanishes");
    double merit_value = 0;
    auto* merit_opt = barker->add_option("--merit", merit_value, "merit factor for --roots");
    check_opt->excludes(roots_flag);
    roots_flag->needs(merit_opt);
    merit_opt->needs(roots_flag);

    // space
    auto* space = app.add_subcommand("space", "search-space sizes under the minus-count filter");
    space->fallthrough();
    std::uint64_t space_n = 0;
    space->add_option("--n", space_n, "sequence length")->required();
    std::optional<unsigned> space_max_minus;
    space->add_option("--max-minus", space_max_minus, "minus-count bound (default: half of n)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("labs");
    for (const auto& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        err << app.help();
        return 2;
    }

    const std::string echo = detail::join_args(args);
    const bool csv = format == "csv";
    try {
        if (*analyze) {
            const binary_sequence seq = parse_sequence(analyze_text);
            const autocorrelation_profile profile = autocorrelate(seq);
            const level_table table = build_level_table(seq);
            if (csv) {
                level_csv(out, table);
                return 0;
            }
            json payload;
            payload["sequence"] = seq.to_string();
            payload["n"] = profile.n;
            payload["lags"] = profile.lags;
            payload["energy"] = profile.energy;
            payload["merit"] = detail::json_merit(profile.merit);
            payload["e_min"] = min_energy(profile.n);
            payload["e_max"] = max_energy(profile.n);
            payload["deviation"] = deviation_of(profile.n, profile.energy);
            payload["decomposition"] =
                profile.n >= 2 ? json_of(decompose_energy(seq)) : json(nullptr);
            payload["levels"] = json_of(table);
            out << envelope("analyze", echo, std::move(payload)).dump(2) << '\n';
            return 0;
        }
        if (*search) {
            search_options opts;
            opts.mode = *heuristic_flag ? search_mode::heuristic : search_mode::exhaustive;
            opts.use_symmetry = !no_symmetry;
            opts.max_minus_count = max_minus;
            opts.seed = seed;
            opts.restarts = *heuristic_flag ? restarts : 1;
            opts.worker_count = workers;
            opts.exhaustive_ceiling = ceiling;
            if (detail::progress_requested())
                opts.progress = [&err](std::uint64_t examined, std::int64_t best) {
                    err << "examined=" << examined << " best=" << best << '\n';
                };
            const search_result result = run_search(search_n, opts);
            if (csv)
                search_csv(out, result);
            else
                out << envelope("search", echo, json_of(result)).dump(2) << '\n';
            return 0;
        }
        if (*verify) {
            std::vector<lattice_check> checks;
            bool all_ok = true;
            for (std::uint64_t n = 2; n <= n_max; ++n) {
                checks.push_back(verify_lattice(n));
                all_ok = all_ok && checks.back().lattice_ok;
            }
            if (csv) {
                verify_csv(out, checks);
            } else {
                json payload;
                payload["n_max"] = n_max;
                payload["all_ok"] = all_ok;
                json items = json::array();
                for (const auto& check : checks) items.push_back(json_of(check));
                payload["checks"] = std::move(items);
                out << envelope("verify", echo, std::move(payload)).dump(2) << '\n';
            }
            if (!all_ok) {
                err << "error: an enumerated energy violates the theoretical ladder\n";
                return 1;
            }
            return 0;
        }
        if (*records) {
            std::vector<record_entry> entries;
            if (records_file.empty()) {
                entries = builtin_records();
            } else {
                std::ifstream in(records_file);
                if (!in) throw error("cannot open records file: " + records_file);
                entries = load_records(in);
            }
            const std::vector<record_row> rows = analyze_records(entries);
            const bool want_fit = fit_flag || extrapolate_n.has_value();
            std::optional<fit_model> model;
            if (want_fit) model = fit_record_deviations(rows);
            if (csv) {
                if (extrapolate_n)
                    extrapolation_csv(out, rows, *model, *extrapolate_n);
                else
                    records_csv(out, rows);
                return 0;
            }
            json payload;
            payload["source"] = records_file.empty() ? "builtin" : records_file;
            json items = json::array();
            for (const auto& row : rows)
                items.push_back({{"n", row.n_value},
                                 {"best_energy", row.best_energy},
                                 {"e_min", row.min_possible},
                                 {"deviation", row.deviation}});
            payload["rows"] = std::move(items);
            if (model) payload["fit"] = json_of(*model, rows);
            if (extrapolate_n) {
                const double fitted = model->evaluate(static_cast<double>(*extrapolate_n));
                payload["extrapolation"] = {
                    {"target_n", *extrapolate_n},
                    {"fitted_deviation", round4(fitted)},
                    {"beyond_fit_range",
                     static_cast<double>(*extrapolate_n) > model->fit_hi ||
                         static_cast<double>(*extrapolate_n) < model->fit_lo}};
            }
            out << envelope("records", echo, std::move(payload)).dump(2) << '\n';
            return 0;
        }
        if (*barker) {
            if (*roots_flag) {
                const barker_root_set roots = barker_roots(merit_value);
                if (csv)
                    barker_roots_csv(out, roots);
                else
                    out << envelope("barker", echo, json_of(roots)).dump(2) << '\n';
                return 0;
            }
            if (check_opt->count() == 0) {
                err << "barker requires either --check <sequence> or --roots --merit F\n";
                err << app.help();
                return 2;
            }
            const barker_analysis analysis = barker_check(parse_sequence(barker_text));
            if (csv)
                barker_check_csv(out, analysis);
            else
                out << envelope("barker", echo, json_of(analysis)).dump(2) << '\n';
            return 0;
        }
        if (*space) {
            const search_space_stats stats = count_search_space(space_n, space_max_minus);
            if (csv)
                space_csv(out, stats);
            else
                out << envelope("space", echo, json_of(stats)).dump(2) << '\n';
            return 0;
        }
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "no subcommand selected\n" << app.help();
    return 2;
}

}  // namespace labseq
