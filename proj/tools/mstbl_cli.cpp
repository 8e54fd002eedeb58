#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mstbl/exact.hpp"
#include "mstbl/experiment.hpp"
#include "mstbl/generate.hpp"
#include "mstbl/greedy.hpp"
#include "mstbl/io.hpp"

namespace {

using namespace mstbl;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

// Every solve re-checks its own output before printing.
void print_solution(const Instance& instance, const Solution& solution) {
    if (!is_feasible(instance, solution))
        throw std::runtime_error("internal error: solver produced an infeasible "
                                 "solution");
    LoadVector loads = load_vector(instance, solution);
    std::cout << "total: " << solution.total() << "\n";
    std::cout << "multiplicities:";
    for (auto m : solution.multiplicity) std::cout << ' ' << m;
    std::cout << "\n";
    std::cout << "L_V: " << loads.max_vertex_load() << "\n";
    std::cout << "L_E: " << loads.max_edge_load() << "\n";
}

struct GenOptions {
    GenConfig config;
    std::string shape = "general";
    std::int64_t cap_min = -1, cap_max = -1;
    std::int64_t demand_min = 1, demand_max = 1;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--seed", config.seed, "generator seed");
        cmd->add_option("--tree-min", config.tree_size_range.first,
                        "minimum tree size");
        cmd->add_option("--tree-max", config.tree_size_range.second,
                        "maximum tree size");
        cmd->add_option("--subtrees-min", config.subtree_count_range.first,
                        "minimum subtree count");
        cmd->add_option("--subtrees-max", config.subtree_count_range.second,
                        "maximum subtree count");
        cmd->add_option("--shape", shape,
                        "paths | general | root-crossing | directed")
            ->check(CLI::IsMember({"paths", "general", "root-crossing",
                                   "directed"}));
        cmd->add_option("--cap-min", cap_min,
                        "minimum capacity (omit both for load-scaled caps)");
        cmd->add_option("--cap-max", cap_max, "maximum capacity");
        cmd->add_option("--unbounded-fraction", config.unbounded_fraction,
                        "probability of an unbounded capacity");
        cmd->add_option("--demand-min", demand_min, "minimum demand");
        cmd->add_option("--demand-max", demand_max, "maximum demand");
    }

    GenConfig resolve() const {
        GenConfig c = config;
        if (shape == "paths") c.shape = InstanceShape::paths_only;
        if (shape == "general") c.shape = InstanceShape::general_subtrees;
        if (shape == "root-crossing") c.shape = InstanceShape::root_crossing_paths;
        if (shape == "directed") c.shape = InstanceShape::directed_paths;
        if (cap_min >= 0 || cap_max >= 0) {
            if (cap_min < 0 || cap_max < 0)
                throw std::runtime_error("--cap-min and --cap-max go together");
            c.capacity_range = {cap_min, cap_max};
        }
        c.demand_range = {demand_min, demand_max};
        return c;
    }
};

void add_budget_flags(CLI::App* cmd, SolveBudget& budget) {
    cmd->add_option("--budget-subtrees", budget.max_subtree_count,
                    "maximum subtree/edge count for the exact search");
    cmd->add_option("--budget-nodes", budget.max_node_count,
                    "maximum tree vertex / multigraph node count");
    cmd->add_option("--budget-copies", budget.max_expanded_copies,
                    "maximum total demand (expanded copies)");
}

int run(int argc, char** argv) {
    CLI::App app{"Solvers and experiment harness for packing a maximum number "
                 "of subtrees of a capacitated tree (bounded-load multicast "
                 "admission)"};
    app.require_subcommand(1);

    // solve-greedy
    auto* greedy_cmd =
        app.add_subcommand("solve-greedy", "bottom-up greedy approximation");
    std::string greedy_file;
    std::string order = "input";
    greedy_cmd->add_option("file", greedy_file, "instance file")->required();
    greedy_cmd->add_option("--order", order, "same-root tie order")
        ->check(CLI::IsMember({"input", "fewest-leaves"}));

    // solve-exact
    auto* exact_cmd =
        app.add_subcommand("solve-exact", "exact optimum (branch and bound)");
    std::string exact_file;
    SolveBudget exact_budget;
    exact_cmd->add_option("file", exact_file, "instance file")->required();
    add_budget_flags(exact_cmd, exact_budget);

    // solve-shared
    auto* shared_cmd = app.add_subcommand(
        "solve-shared",
        "exact optimum for paths that are directed or contain the root");
    std::string shared_file;
    SolveBudget shared_budget;
    shared_cmd->add_option("file", shared_file, "instance file")->required();
    add_budget_flags(shared_cmd, shared_budget);

    // gen-random
    auto* gen_cmd = app.add_subcommand("gen-random", "generate a random instance");
    GenOptions gen_options;
    std::string gen_out;
    gen_options.add_flags(gen_cmd);
    gen_cmd->add_option("-o,--output", gen_out, "output file")->required();

    // reduce-mis
    auto* mis_cmd = app.add_subcommand(
        "reduce-mis", "build the star instance of a maximum-independent-set "
                      "input graph");
    std::string mis_graph, mis_out;
    mis_cmd->add_option("graph", mis_graph, "graph file (count, then u v lines)")
        ->required();
    mis_cmd->add_option("-o,--output", mis_out, "output file")->required();

    // gen-tight
    auto* tight_cmd = app.add_subcommand(
        "gen-tight", "worst-case star family for the greedy");
    int tight_m = 3;
    std::string tight_out;
    tight_cmd->add_option("--m", tight_m, "number of leaves")->required();
    tight_cmd->add_option("-o,--output", tight_out, "output file")->required();

    // bench
    auto* bench_cmd = app.add_subcommand(
        "bench", "greedy-vs-optimum ratio experiment over random instances");
    GenOptions bench_options;
    bench_options.config.tree_size_range = {10, 20};
    bench_options.config.subtree_count_range = {20, 80};
    bench_options.shape = "paths";
    int trials = 200;
    std::string method = "oracle";
    bool serial = false;
    std::string bench_out;
    SolveBudget bench_budget{128, 128, 4096};
    bench_options.add_flags(bench_cmd);
    bench_cmd->add_option("--trials", trials, "number of instances");
    bench_cmd->add_option("--method", method, "exact method")
        ->check(CLI::IsMember({"oracle", "shared"}));
    bench_cmd->add_flag("--serial", serial,
                        "use the serial reference runner");
    bench_cmd->add_option("-o,--output", bench_out, "output CSV")->required();
    add_budget_flags(bench_cmd, bench_budget);

    CLI11_PARSE(app, argc, argv);

    if (greedy_cmd->parsed()) {
        Instance instance = parse_instance(read_file(greedy_file));
        OrderPolicy policy;
        if (order == "fewest-leaves")
            policy.same_root_order = SameRootOrder::fewest_nonroot_leaves;
        print_solution(instance, bottom_up_greedy(instance, policy).solution);
        return 0;
    }
    if (exact_cmd->parsed()) {
        Instance instance = parse_instance(read_file(exact_file));
        print_solution(instance, brute_force_opt(instance, exact_budget));
        return 0;
    }
    if (shared_cmd->parsed()) {
        Instance instance = parse_instance(read_file(shared_file));
        print_solution(instance,
                       solve_shared_vertex_paths(instance, shared_budget));
        return 0;
    }
    if (gen_cmd->parsed()) {
        write_file(gen_out,
                   serialize_instance(random_instance(gen_options.resolve())));
        return 0;
    }
    if (mis_cmd->parsed()) {
        SimpleGraph graph = parse_simple_graph(read_file(mis_graph));
        write_file(mis_out, serialize_instance(mis_to_star(graph)));
        return 0;
    }
    if (tight_cmd->parsed()) {
        write_file(tight_out, serialize_instance(tightness_instance(tight_m)));
        return 0;
    }
    if (bench_cmd->parsed()) {
        ExactMethod exact_method = method == "oracle"
                                       ? ExactMethod::oracle
                                       : ExactMethod::shared_vertex_paths;
        GenConfig config = bench_options.resolve();
        if (exact_method == ExactMethod::shared_vertex_paths &&
            bench_options.shape == "paths" &&
            !bench_cmd->count("--shape"))
            config.shape = InstanceShape::root_crossing_paths;
        RatioReport report =
            serial ? run_ratio_experiment_serial(config, trials, exact_method,
                                                 bench_budget)
                   : run_ratio_experiment(config, trials, exact_method,
                                          bench_budget);
        write_file(bench_out, report.to_csv());
        std::cout << "trials: " << report.aggregate.count << "\n";
        std::cout << "budget_exceeded: " << report.aggregate.budget_exceeded
                  << "\n";
        std::cout << "max_ratio: "
                  << (report.aggregate.max_ratio
                          ? std::to_string(*report.aggregate.max_ratio)
                          : "na")
                  << "\n";
        std::cout << "mean_ratio: "
                  << (report.aggregate.mean_ratio
                          ? std::to_string(*report.aggregate.mean_ratio)
                          : "na")
                  << "\n";
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
