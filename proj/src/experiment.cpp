#include "mstbl/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <stdexcept>

#include "mstbl/exact.hpp"
#include "mstbl/greedy.hpp"

namespace mstbl {

namespace {

std::string format_ratio(double r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", r);
    return buf;
}

void check_method(const GenConfig& config, ExactMethod method) {
    if (method == ExactMethod::shared_vertex_paths &&
        config.shape != InstanceShape::root_crossing_paths)
        throw std::invalid_argument(
            "run_ratio_experiment: the shared-vertex method requires the "
            "root_crossing_paths shape");
}

RatioRow run_trial(const GenConfig& config, int trial, ExactMethod method,
                   const SolveBudget& budget) {
    GenConfig trial_config = config;
    trial_config.seed = trial_seed(config.seed, trial);
    Instance instance = random_instance(trial_config);

    RatioRow row;
    row.seed = trial_config.seed;
    row.tree_size = instance.tree.vertex_count();
    row.subtree_count = instance.subtree_count();
    row.m = instance.max_nonroot_leaves();
    row.greedy_total = bottom_up_greedy(instance).solution.total();

    try {
        Solution opt = method == ExactMethod::oracle
                           ? brute_force_opt(instance, budget)
                           : solve_shared_vertex_paths(instance, budget);
        row.opt_total = opt.total();
        // greedy_total = 0 forces opt = 0 by greedy maximality.
        row.ratio = row.greedy_total == 0
                        ? 1.0
                        : static_cast<double>(*row.opt_total) /
                              static_cast<double>(row.greedy_total);
    } catch (const BudgetExceeded& e) {
        row.opt_lower_bound = row.greedy_total;
        if (e.incumbent)
            row.opt_lower_bound =
                std::max(row.opt_lower_bound, e.incumbent->total());
    }
    return row;
}

RatioReport assemble(std::vector<RatioRow> rows) {
    RatioReport report;
    report.rows = std::move(rows);
    report.aggregate = aggregate_rows(report.rows);
    return report;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t config_seed, int trial) {
    Rng rng(config_seed ^
            (0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(trial) + 1)));
    return rng.next();
}

RatioAggregate aggregate_rows(const std::vector<RatioRow>& rows) {
    RatioAggregate agg;
    agg.count = static_cast<int>(rows.size());
    double sum = 0.0;
    int exact = 0;
    for (const RatioRow& row : rows) {
        if (!row.opt_total) {
            ++agg.budget_exceeded;
            continue;
        }
        ++exact;
        sum += row.ratio;
        agg.max_ratio = std::max(agg.max_ratio.value_or(row.ratio), row.ratio);
    }
    if (exact > 0) agg.mean_ratio = sum / exact;
    return agg;
}

std::string RatioReport::to_csv() const {
    std::string out = "seed,tree_size,subtree_count,M,greedy,opt,ratio\n";
    for (const RatioRow& row : rows) {
        out += std::to_string(row.seed) + ',' + std::to_string(row.tree_size) +
               ',' + std::to_string(row.subtree_count) + ',' +
               std::to_string(row.m) + ',' + std::to_string(row.greedy_total) +
               ',';
        if (row.opt_total) {
            out += std::to_string(*row.opt_total) + ',' + format_ratio(row.ratio);
        } else {
            out += "budget_exceeded(>=" + std::to_string(row.opt_lower_bound) +
                   "),na";
        }
        out += '\n';
    }
    out += "# aggregate count=" + std::to_string(aggregate.count) +
           " budget_exceeded=" + std::to_string(aggregate.budget_exceeded) +
           " max_ratio=" +
           (aggregate.max_ratio ? format_ratio(*aggregate.max_ratio) : "na") +
           " mean_ratio=" +
           (aggregate.mean_ratio ? format_ratio(*aggregate.mean_ratio) : "na") +
           "\n";
    return out;
}

RatioReport run_ratio_experiment_serial(const GenConfig& config, int trials,
                                        ExactMethod method,
                                        const SolveBudget& budget) {
    check_method(config, method);
    if (trials < 0)
        throw std::invalid_argument("run_ratio_experiment: negative trials");
    std::vector<RatioRow> rows(trials);
    for (int t = 0; t < trials; ++t)
        rows[t] = run_trial(config, t, method, budget);
    return assemble(std::move(rows));
}

RatioReport run_ratio_experiment(const GenConfig& config, int trials,
                                 ExactMethod method, const SolveBudget& budget) {
    check_method(config, method);
    if (trials < 0)
        throw std::invalid_argument("run_ratio_experiment: negative trials");
    std::vector<RatioRow> rows(trials);
    std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int t = 0; t < trials; ++t) {
        try {
            rows[t] = run_trial(config, t, method, budget);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return assemble(std::move(rows));
}

}  // namespace mstbl
