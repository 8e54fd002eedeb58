#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mstbl/bmatching.hpp"
#include "mstbl/instance.hpp"

namespace mstbl {

// Exact optimum by depth-first branch and bound over per-subtree
// multiplicities: subtrees in input order, multiplicities tried high to low,
// pruning on the admissible bound "sum over remaining subtrees of
// min(demand, remaining capacity)". Among equal-total optima returns the
// lexicographically smallest multiplicity vector. Throws BudgetExceeded when
// the instance exceeds the budget (with the best incumbent when the search
// had started).
Solution brute_force_opt(const Instance& instance, const SolveBudget& budget = {});

// Per-vertex degree-sum bound of the endpoint multigraph: the vertex capacity
// at the root, min(vertex capacity, parent-edge capacity) elsewhere.
std::vector<Cap> compute_b_bounds(const Instance& instance);

struct LeafAugmentResult {
    Instance instance;
    // Fresh pendant leaf -> the original vertex it was attached to.
    std::vector<std::pair<Vertex, Vertex>> new_to_original;
};

// Reroutes every path endpoint that is an internal tree vertex to a fresh
// pendant leaf with unbounded vertex and edge capacity. Optimal values of the
// original and augmented instances are equal. Requires every subtree to be a
// path.
LeafAugmentResult leaf_augment(const Instance& instance);

// One multigraph edge per path (multiplicity = demand) between its endpoint
// leaves; edges[i] corresponds to instance.subtrees[i]. One laminar set per
// non-root vertex v: (leaf descendants of v, b_v). The root capacity caps the
// number of selected paths (root_pair_bound), not a degree sum, because every
// root-crossing path has both endpoints under the root. Requires all
// endpoints to be leaves and every path to contain the root internally.
LaminarBMatchingProblem build_endpoint_multigraph(const Instance& instance);

// Exact optimum when every subtree is a path that is either directed or
// contains the root internally. Pipeline: greedy over the directed paths
// (fewest-nonroot-leaves ties), capacity deduction, discard of unaccepted
// directed paths, leaf augmentation, endpoint multigraph, hierarchical
// b-matching, union of greedy picks and matched paths.
Solution solve_shared_vertex_paths(const Instance& instance,
                                   const SolveBudget& budget = {});

}  // namespace mstbl
