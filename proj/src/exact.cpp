#include "mstbl/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mstbl/greedy.hpp"
#include "mstbl/load.hpp"

namespace mstbl {

namespace {

void check_oracle_budget(const Instance& instance, const SolveBudget& budget) {
    if (instance.subtree_count() > budget.max_subtree_count)
        throw BudgetExceeded("brute_force_opt: subtree count " +
                             std::to_string(instance.subtree_count()) +
                             " exceeds budget " +
                             std::to_string(budget.max_subtree_count));
    if (instance.tree.vertex_count() > budget.max_node_count)
        throw BudgetExceeded("brute_force_opt: tree has " +
                             std::to_string(instance.tree.vertex_count()) +
                             " vertices, budget " +
                             std::to_string(budget.max_node_count));
    std::int64_t copies = 0;
    for (const auto& s : instance.subtrees) copies += s.demand;
    if (copies > budget.max_expanded_copies)
        throw BudgetExceeded("brute_force_opt: expanded demand " +
                             std::to_string(copies) + " exceeds budget " +
                             std::to_string(budget.max_expanded_copies));
}

struct OracleSearch {
    const Instance& instance;
    LoadVector loads;
    std::vector<std::int64_t> current;
    std::int64_t current_total = 0;
    std::vector<std::int64_t> best;
    std::int64_t best_total = -1;

    explicit OracleSearch(const Instance& inst)
        : instance(inst), loads(LoadVector::zeros(inst.tree)) {
        current.assign(inst.subtrees.size(), 0);
    }

    std::int64_t allowance(int i) const {
        Cap residual = residual_min_capacity(instance, loads, i);
        const std::int64_t demand = instance.subtrees[i].demand;
        return residual.is_unbounded() ? demand
                                       : std::min(demand, residual.value());
    }

    std::int64_t remaining_bound(int from) const {
        std::int64_t sum = 0;
        for (int i = from; i < instance.subtree_count(); ++i) sum += allowance(i);
        return sum;
    }

    void apply(int i, std::int64_t m) {
        loads.add_subtree(instance.subtrees[i], m);
        current[i] = m;
        current_total += m;
    }

    void undo(int i, std::int64_t m) {
        loads.add_subtree(instance.subtrees[i], -m);
        current[i] = 0;
        current_total -= m;
    }

    void search_max(int i) {
        if (current_total + remaining_bound(i) <= best_total) return;
        if (i == instance.subtree_count()) {
            best_total = current_total;
            best = current;
            return;
        }
        for (std::int64_t m = allowance(i); m >= 0; --m) {
            apply(i, m);
            search_max(i + 1);
            undo(i, m);
        }
    }

    bool search_lex(int i, std::int64_t target) {
        if (current_total + remaining_bound(i) < target) return false;
        if (i == instance.subtree_count()) {
            if (current_total != target) return false;
            best = current;
            return true;
        }
        std::int64_t cap = allowance(i);
        for (std::int64_t m = 0; m <= cap; ++m) {
            apply(i, m);
            bool found = search_lex(i + 1, target);
            undo(i, m);
            if (found) return true;
        }
        return false;
    }
};

}  // namespace

Solution brute_force_opt(const Instance& instance, const SolveBudget& budget) {
    check_oracle_budget(instance, budget);
    OracleSearch search(instance);
    search.search_max(0);
    OracleSearch lex(instance);
    lex.search_lex(0, search.best_total);
    return Solution{std::move(lex.best)};
}

std::vector<Cap> compute_b_bounds(const Instance& instance) {
    const Tree& t = instance.tree;
    std::vector<Cap> b(t.vertex_count());
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
        if (v == t.root())
            b[v] = instance.capacities.vertex_cap[v];
        else
            b[v] = cap_min(instance.capacities.vertex_cap[v],
                           instance.capacities.edge_cap[v]);
    }
    return b;
}

namespace {

// Endpoints of a path subtree: the vertices of induced degree <= 1. A single
// vertex counts as both endpoints.
std::pair<Vertex, Vertex> path_endpoints(const Tree& tree, const Subtree& s) {
    if (s.vertices.size() == 1) return {s.vertices[0], s.vertices[0]};
    std::vector<Vertex> ends;
    for (Vertex v : s.vertices) {
        int degree = v != s.root_vertex ? 1 : 0;
        for (Vertex c : tree.children(v))
            if (s.contains(c)) ++degree;
        if (degree <= 1) ends.push_back(v);
    }
    if (ends.size() != 2)
        throw std::invalid_argument("path_endpoints: subtree is not a path");
    return {ends[0], ends[1]};
}

}  // namespace

LeafAugmentResult leaf_augment(const Instance& instance) {
    for (int i = 0; i < instance.subtree_count(); ++i)
        if (!instance.subtrees[i].is_path)
            throw std::invalid_argument("leaf_augment: subtree " +
                                        std::to_string(i) + " is not a path");

    std::vector<Vertex> parents(instance.tree.vertex_count());
    for (Vertex v = 0; v < instance.tree.vertex_count(); ++v)
        parents[v] = instance.tree.parent(v);
    std::vector<Cap> vcap = instance.capacities.vertex_cap;
    std::vector<Cap> ecap = instance.capacities.edge_cap;
    std::vector<std::vector<Vertex>> members(instance.subtree_count());
    std::vector<std::int64_t> demands(instance.subtree_count());
    for (int i = 0; i < instance.subtree_count(); ++i) {
        members[i] = instance.subtrees[i].vertices;
        demands[i] = instance.subtrees[i].demand;
    }
    std::vector<std::pair<Vertex, Vertex>> relabel;

    Tree tree = instance.tree;
    for (;;) {
        // Pendant allocated for each internal endpoint vertex this round;
        // shared by every path ending there.
        std::vector<Vertex> pendant(tree.vertex_count(), -1);
        bool changed = false;
        std::vector<Subtree> current;
        current.reserve(members.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            current.push_back(make_subtree(tree, members[i], demands[i]));
        for (std::size_t i = 0; i < members.size(); ++i) {
            auto [a, b] = path_endpoints(tree, current[i]);
            // A single-vertex path exposes one endpoint per round and so is
            // finished after the second round.
            const Vertex ends[2] = {a, b};
            const int sides = a == b ? 1 : 2;
            for (int side = 0; side < sides; ++side) {
                Vertex end = ends[side];
                if (tree.is_leaf(end)) continue;
                if (pendant[end] == -1) {
                    Vertex fresh = static_cast<Vertex>(parents.size());
                    parents.push_back(end);
                    vcap.push_back(Cap::unbounded());
                    ecap.push_back(Cap::unbounded());
                    pendant[end] = fresh;
                    relabel.emplace_back(fresh, end);
                }
                members[i].push_back(pendant[end]);
                changed = true;
            }
        }
        if (!changed) break;
        tree = build_tree(parents, instance.tree.root());
    }

    std::vector<Subtree> subtrees;
    subtrees.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        subtrees.push_back(make_subtree(tree, members[i], demands[i]));
    CapacityVector caps;
    caps.vertex_cap = std::move(vcap);
    caps.edge_cap = std::move(ecap);
    return {Instance(std::move(tree), std::move(subtrees), std::move(caps)),
            std::move(relabel)};
}

LaminarBMatchingProblem build_endpoint_multigraph(const Instance& instance) {
    const Tree& tree = instance.tree;
    LaminarBMatchingProblem problem;
    problem.node_ids = tree.leaves();

    for (int i = 0; i < instance.subtree_count(); ++i) {
        const Subtree& s = instance.subtrees[i];
        if (!s.is_path || s.root_vertex != tree.root() || s.nonroot_leaf_count != 2)
            throw std::invalid_argument(
                "build_endpoint_multigraph: subtree " + std::to_string(i) +
                " does not contain the root as an internal vertex");
        auto [a, b] = path_endpoints(tree, s);
        if (!tree.is_leaf(a) || !tree.is_leaf(b))
            throw std::invalid_argument(
                "build_endpoint_multigraph: subtree " + std::to_string(i) +
                " has a non-leaf endpoint (leaf augmentation required)");
        problem.edges.push_back({a, b, s.demand});
    }

    const std::vector<Cap> bounds = compute_b_bounds(instance);
    // Leaf-descendant sets per non-root vertex, in post-order accumulation.
    std::vector<std::vector<Vertex>> leaf_desc(tree.vertex_count());
    for (Vertex v : tree.default_post_order()) {
        if (tree.is_leaf(v)) {
            leaf_desc[v] = {v};
        } else {
            for (Vertex c : tree.children(v))
                leaf_desc[v].insert(leaf_desc[v].end(), leaf_desc[c].begin(),
                                    leaf_desc[c].end());
            std::sort(leaf_desc[v].begin(), leaf_desc[v].end());
        }
    }
    for (Vertex v = 0; v < tree.vertex_count(); ++v) {
        if (v == tree.root()) continue;
        problem.laminar_sets.push_back({leaf_desc[v], bounds[v]});
    }
    problem.root_pair_bound = instance.capacities.vertex_cap[tree.root()];
    return problem;
}

Solution solve_shared_vertex_paths(const Instance& instance,
                                   const SolveBudget& budget) {
    const Tree& tree = instance.tree;
    std::vector<int> directed, crossing;
    for (int i = 0; i < instance.subtree_count(); ++i) {
        const Subtree& s = instance.subtrees[i];
        if (!s.is_path)
            throw std::invalid_argument("solve_shared_vertex_paths: subtree " +
                                        std::to_string(i) + " is not a path");
        if (s.is_directed_path()) {
            directed.push_back(i);
        } else if (s.root_vertex == tree.root() && s.nonroot_leaf_count == 2) {
            crossing.push_back(i);
        } else {
            throw std::invalid_argument(
                "solve_shared_vertex_paths: subtree " + std::to_string(i) +
                " is neither directed nor contains the root internally");
        }
    }

    // Greedy over the directed paths only.
    std::vector<Subtree> directed_subtrees;
    for (int i : directed) directed_subtrees.push_back(instance.subtrees[i]);
    Instance directed_instance(tree, std::move(directed_subtrees),
                               instance.capacities);
    OrderPolicy policy;
    policy.same_root_order = SameRootOrder::fewest_nonroot_leaves;
    GreedyResult greedy = bottom_up_greedy(directed_instance, policy);

    Solution result = Solution::empty(instance.subtrees.size());
    for (std::size_t k = 0; k < directed.size(); ++k)
        result.multiplicity[directed[k]] = greedy.solution.multiplicity[k];
    if (crossing.empty()) return result;

    // Deduct the greedy loads, keep only the root-crossing paths.
    LoadVector used = load_vector(directed_instance, greedy.solution);
    CapacityVector residual = instance.capacities;
    for (Vertex v = 0; v < tree.vertex_count(); ++v) {
        if (!residual.vertex_cap[v].is_unbounded())
            residual.vertex_cap[v] =
                Cap(residual.vertex_cap[v].value() - used.vertex_load[v]);
        if (v != tree.root() && !residual.edge_cap[v].is_unbounded())
            residual.edge_cap[v] =
                Cap(residual.edge_cap[v].value() - used.edge_load[v]);
    }
    std::vector<Subtree> crossing_subtrees;
    for (int i : crossing) crossing_subtrees.push_back(instance.subtrees[i]);
    Instance residual_instance(tree, std::move(crossing_subtrees),
                               std::move(residual));

    LeafAugmentResult augmented = leaf_augment(residual_instance);
    LaminarBMatchingProblem problem =
        build_endpoint_multigraph(augmented.instance);
    std::vector<std::int64_t> matched = hierarchical_b_matching(problem, budget);
    for (std::size_t k = 0; k < crossing.size(); ++k)
        result.multiplicity[crossing[k]] = matched[k];
    return result;
}

}  // namespace mstbl
