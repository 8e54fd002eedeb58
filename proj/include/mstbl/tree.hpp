#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace mstbl {

using Vertex = int;

// An object of a tree is a vertex or an edge. An edge is identified by its
// child endpoint, so the root's id never appears as an edge id.
enum class ObjKind : int { vertex = 0, edge = 1 };

struct ObjectId {
    ObjKind kind;
    Vertex id;

    friend auto operator<=>(const ObjectId&, const ObjectId&) = default;
};

inline ObjectId vertex_object(Vertex v) { return {ObjKind::vertex, v}; }
inline ObjectId edge_object(Vertex child) { return {ObjKind::edge, child}; }

// Immutable rooted tree on vertices 0..n-1. The root is its own parent.
class Tree {
public:
    Tree() = default;

    int vertex_count() const { return static_cast<int>(parent_.size()); }
    Vertex root() const { return root_; }
    Vertex parent(Vertex v) const { return parent_[v]; }
    const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }
    int depth(Vertex v) const { return depth_[v]; }
    bool is_leaf(Vertex v) const { return children_[v].empty(); }
    bool valid_vertex(Vertex v) const { return v >= 0 && v < vertex_count(); }

    std::vector<Vertex> leaves() const;
    // Vertices in post-order, children visited by ascending id; ends at root.
    std::vector<Vertex> default_post_order() const;

    friend Tree build_tree(const std::vector<Vertex>& parents, Vertex root);

private:
    Vertex root_ = 0;
    std::vector<Vertex> parent_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<int> depth_;
};

// Builds a Tree from a parent vector (parents[v] is the parent of v; the root
// maps to itself). Throws std::invalid_argument on cycles, out-of-range
// parents, or a root whose parent is not itself.
Tree build_tree(const std::vector<Vertex>& parents, Vertex root);

}  // namespace mstbl
