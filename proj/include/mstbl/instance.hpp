#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "mstbl/tree.hpp"

namespace mstbl {

// Capacity of a single object: a nonnegative integer or unbounded. Unbounded
// is an explicit sentinel, never a large number, so adapters that set "cap =
// infinity" cannot overflow arithmetic on loads.
class Cap {
public:
    constexpr Cap() : value_(0) {}
    constexpr Cap(std::int64_t v) : value_(v) {}  // NOLINT: implicit by design
    static constexpr Cap unbounded() { return Cap(kUnbounded, true); }

    constexpr bool is_unbounded() const { return value_ == kUnbounded; }
    constexpr std::int64_t value() const { return value_; }  // pre: bounded
    constexpr bool covers(std::int64_t load) const {
        return is_unbounded() || load <= value_;
    }

    friend constexpr bool operator==(Cap a, Cap b) { return a.value_ == b.value_; }

private:
    static constexpr std::int64_t kUnbounded =
        std::numeric_limits<std::int64_t>::max();
    constexpr Cap(std::int64_t v, bool) : value_(v) {}
    std::int64_t value_;
};

// min with unbounded acting as +infinity.
constexpr Cap cap_min(Cap a, Cap b) {
    if (a.is_unbounded()) return b;
    if (b.is_unbounded()) return a;
    return Cap(a.value() < b.value() ? a.value() : b.value());
}

// One capacity entry per object. edge_cap is indexed by the child endpoint of
// each edge; the slot at the root is unused (the root has no parent edge).
struct CapacityVector {
    std::vector<Cap> vertex_cap;
    std::vector<Cap> edge_cap;

    static CapacityVector uniform(const Tree& tree, Cap vertex, Cap edge);
    static CapacityVector all_unbounded(const Tree& tree);

    Cap at(const Tree& tree, ObjectId o) const;
};

// Connected vertex subset of a host tree. root_vertex is the unique vertex
// closest to the tree root; nonroot_leaf_count counts subtree leaves distinct
// from root_vertex; demand is the multiplicity in compact form.
struct Subtree {
    std::vector<Vertex> vertices;  // sorted ascending
    Vertex root_vertex = 0;
    int nonroot_leaf_count = 0;
    std::int64_t demand = 1;
    bool is_path = false;

    bool contains(Vertex v) const;
    // A directed path has its root as one of its endpoints.
    bool is_directed_path() const { return is_path && nonroot_leaf_count <= 1; }
};

// Validates connectivity, derives root_vertex, nonroot_leaf_count and the
// path flag. Throws std::invalid_argument on empty/disconnected vertex sets,
// out-of-range vertices, or nonpositive demand.
Subtree make_subtree(const Tree& tree, std::vector<Vertex> vertices,
                     std::int64_t demand = 1);

struct Instance {
    Tree tree;
    std::vector<Subtree> subtrees;
    CapacityVector capacities;

    Instance() = default;
    // Re-derives every subtree against the tree and checks capacity shapes,
    // so a constructed Instance always satisfies the type invariants.
    Instance(Tree tree, std::vector<Subtree> subtrees, CapacityVector capacities);

    int subtree_count() const { return static_cast<int>(subtrees.size()); }
    // Maximum nonroot_leaf_count over subtrees (0 for an empty list). Ratio
    // statements clamp this to at least 1.
    std::int64_t max_nonroot_leaves() const;
};

// Multiset of selected subtree indices, one multiplicity per subtree.
struct Solution {
    std::vector<std::int64_t> multiplicity;

    static Solution empty(std::size_t subtree_count) {
        return Solution{std::vector<std::int64_t>(subtree_count, 0)};
    }

    std::int64_t total() const {
        std::int64_t s = 0;
        for (auto m : multiplicity) s += m;
        return s;
    }
};

}  // namespace mstbl
