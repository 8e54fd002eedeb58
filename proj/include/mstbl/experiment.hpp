#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mstbl/bmatching.hpp"
#include "mstbl/generate.hpp"

namespace mstbl {

enum class ExactMethod {
    oracle,               // brute_force_opt
    shared_vertex_paths,  // requires the root_crossing_paths shape
};

struct RatioRow {
    std::uint64_t seed = 0;
    int tree_size = 0;
    int subtree_count = 0;
    std::int64_t m = 0;
    std::int64_t greedy_total = 0;
    std::optional<std::int64_t> opt_total;  // empty when the budget ran out
    std::int64_t opt_lower_bound = 0;       // best incumbent for budget rows
    double ratio = 1.0;                     // defined only when opt_total is set
};

struct RatioAggregate {
    int count = 0;
    int budget_exceeded = 0;
    std::optional<double> max_ratio;
    std::optional<double> mean_ratio;
};

struct RatioReport {
    std::vector<RatioRow> rows;
    RatioAggregate aggregate;

    // Header "seed,tree_size,subtree_count,M,greedy,opt,ratio", one row per
    // trial, then an aggregate comment line. Deterministic bytes.
    std::string to_csv() const;
};

RatioAggregate aggregate_rows(const std::vector<RatioRow>& rows);

// Per-trial seed derived from the config seed; row t of a report used this.
std::uint64_t trial_seed(std::uint64_t config_seed, int trial);

// One row per trial: generate an instance from the per-trial seed, run the
// greedy (default policy) and the exact method, report the ratio. Budget
// overruns are reported in the row, never dropped. Rows are ordered by trial
// index. run_ratio_experiment runs trials concurrently when built with
// OpenMP; run_ratio_experiment_serial is the reference implementation, and
// both produce identical reports.
RatioReport run_ratio_experiment(const GenConfig& config, int trials,
                                 ExactMethod method,
                                 const SolveBudget& budget = {});
RatioReport run_ratio_experiment_serial(const GenConfig& config, int trials,
                                        ExactMethod method,
                                        const SolveBudget& budget = {});

}  // namespace mstbl
