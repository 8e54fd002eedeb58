#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mstbl/instance.hpp"

namespace mstbl {

// Deterministic RNG with explicitly implemented bounded draws so generated
// instances are reproducible across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();  // splitmix64 step
    // Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    // Uniform in [0, 1).
    double real01();
    bool chance(double p) { return real01() < p; }

private:
    std::uint64_t state_;
};

struct SimpleGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // normalized u < v, distinct

    // Throws std::invalid_argument on self-loops or out-of-range endpoints;
    // deduplicates and normalizes edges.
    static SimpleGraph make(int vertex_count,
                            std::vector<std::pair<int, int>> edges);
};

enum class InstanceShape {
    paths_only,           // uniform endpoint pairs, the tree path between them
    general_subtrees,     // random connected vertex sets
    root_crossing_paths,  // mix of directed and root-crossing paths
    directed_paths,       // paths whose root is an endpoint
};

struct GenConfig {
    std::uint64_t seed = 1;
    std::pair<int, int> tree_size_range{5, 12};
    std::pair<int, int> subtree_count_range{4, 12};
    // Capacities per object are drawn uniformly from this range; when unset
    // the range is [1, 2 * ceil(expected object load)] for the generated
    // instance ("high capacities").
    std::optional<std::pair<std::int64_t, std::int64_t>> capacity_range;
    double unbounded_fraction = 0.0;
    std::pair<std::int64_t, std::int64_t> demand_range{1, 1};
    InstanceShape shape = InstanceShape::general_subtrees;
};

// Deterministic function of the config (and in particular its seed). The
// tree attaches each vertex i >= 1 to a uniformly random earlier vertex.
Instance random_instance(const GenConfig& config);

// Star with one leaf per graph edge; one sub-star per graph vertex (center
// plus the leaves of its incident edges; an isolated vertex maps to the
// single-vertex subtree at the center). Center capacity unbounded, every
// other object capacity 1. The optimum of the result equals the independence
// number of the graph.
Instance mis_to_star(const SimpleGraph& graph);

struct Commodity {
    Vertex source = 0;
    Vertex target = 0;
    std::int64_t demand = 1;
};

// Multi-commodity flow on a tree: one path per commodity (demand as
// multiplicity), given edge capacities, unbounded vertex capacities.
// edge_caps is indexed by child endpoint; the root slot is ignored.
Instance mcf_to_instance(const Tree& tree,
                         const std::vector<Commodity>& commodities,
                         const std::vector<Cap>& edge_caps);

// Maximum k-colorable set on a chordal graph given by a subtree
// representation: vertex capacities k, edge capacities unbounded.
Instance chordal_mkc_to_instance(const Tree& tree,
                                 std::vector<Subtree> representation,
                                 std::int64_t k);

// Worst-case family for the greedy: star with center 0 and m leaves, the
// whole star listed first, then the m center-to-leaf paths; center capacity
// m, every other object 1. Greedy with input-order ties returns 1, the
// optimum is the m paths.
Instance tightness_instance(int m);

// Vertices of the unique tree path between a and b.
std::vector<Vertex> tree_path(const Tree& tree, Vertex a, Vertex b);

}  // namespace mstbl
