#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mstbl/instance.hpp"

namespace mstbl {

// Caps on the exact solvers. Exceeding a budget raises BudgetExceeded; the
// solvers never silently approximate.
struct SolveBudget {
    int max_subtree_count = 32;       // distinct subtrees / edge records
    int max_node_count = 64;          // tree vertices / multigraph nodes
    std::int64_t max_expanded_copies = 512;  // total demand / edge multiplicity
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
    BudgetExceeded(const std::string& what, Solution incumbent_solution)
        : std::runtime_error(what), incumbent(std::move(incumbent_solution)) {}

    // Best feasible solution seen before the budget ran out, when any search
    // happened at all; a valid lower bound on the optimum.
    std::optional<Solution> incumbent;
};

struct MultiEdge {
    int u = 0;
    int v = 0;
    std::int64_t multiplicity = 1;
};

struct LaminarSet {
    std::vector<int> nodes;  // sorted ascending
    Cap bound;
};

// Maximum-multiplicity edge selection in a multigraph subject to degree-sum
// bounds over a laminar family of node sets, plus a cap on the total number
// of selected edges. An edge with both endpoints inside a set contributes
// twice to that set's degree sum.
struct LaminarBMatchingProblem {
    std::vector<int> node_ids;
    std::vector<MultiEdge> edges;
    std::vector<LaminarSet> laminar_sets;
    Cap root_pair_bound = Cap::unbounded();

    // Throws std::invalid_argument when the set family is not laminar, an
    // edge endpoint is unknown, or an edge is a self-loop.
    void validate() const;
};

// Exact solve by branch and bound: edges in input order, multiplicities tried
// high to low; among equal-total optima returns the lexicographically
// smallest multiplicity vector. Result is one selected multiplicity per edge
// record.
std::vector<std::int64_t> hierarchical_b_matching(
    const LaminarBMatchingProblem& problem, const SolveBudget& budget = {});

}  // namespace mstbl
