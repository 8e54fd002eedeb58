#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mstbl/load.hpp"

namespace mstbl {

enum class SameRootOrder {
    input,                 // ties by input index
    fewest_nonroot_leaves, // ascending nonroot_leaf_count, ties by input index
    explicit_permutation,  // ties by position in OrderPolicy::permutation
};

// How the greedy visits subtrees: roots grouped along a post-order traversal
// of the tree, ties among subtrees sharing a root broken per same_root_order.
struct OrderPolicy {
    // Empty = post-order with children visited by ascending vertex id. A
    // custom order must list every vertex after all its descendants.
    std::vector<Vertex> vertex_traversal;
    SameRootOrder same_root_order = SameRootOrder::input;
    // Permutation of all subtree indices; consulted only for
    // explicit_permutation.
    std::vector<int> permutation;
};

struct GreedyDecision {
    std::int64_t accepted = 0;               // 0 means rejected
    std::optional<ObjectId> blocking;        // set iff rejected
};

struct GreedyTrace {
    std::vector<int> visit_order;            // subtree indices, processing order
    std::vector<GreedyDecision> decisions;   // indexed by subtree index
};

struct GreedyResult {
    Solution solution;
    GreedyTrace trace;
};

// Permutation of 0..n-1 grouped by subtree root in post-order; deterministic.
// Throws std::invalid_argument when a custom traversal is not a post-order or
// an explicit permutation is not a bijection.
std::vector<int> order_subtrees(const Instance& instance,
                                const OrderPolicy& policy);

// Bottom-up greedy: visits subtrees in order_subtrees order and accepts each
// with multiplicity min(demand, minimum remaining capacity over its objects).
// A zero acceptance is recorded as rejected with the first tight object of
// the subtree (vertices before edges, ids ascending). Runs in time polynomial
// in tree size and subtree count, independent of demand magnitudes.
GreedyResult bottom_up_greedy(const Instance& instance,
                              const OrderPolicy& policy = {});

}  // namespace mstbl
