#include "mstbl/instance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mstbl {

CapacityVector CapacityVector::uniform(const Tree& tree, Cap vertex, Cap edge) {
    CapacityVector c;
    c.vertex_cap.assign(tree.vertex_count(), vertex);
    c.edge_cap.assign(tree.vertex_count(), edge);
    c.edge_cap[tree.root()] = Cap::unbounded();  // unused slot
    return c;
}

CapacityVector CapacityVector::all_unbounded(const Tree& tree) {
    return uniform(tree, Cap::unbounded(), Cap::unbounded());
}

Cap CapacityVector::at(const Tree& tree, ObjectId o) const {
    if (!tree.valid_vertex(o.id))
        throw std::invalid_argument("capacity lookup: vertex id out of range");
    if (o.kind == ObjKind::vertex) return vertex_cap[o.id];
    if (o.id == tree.root())
        throw std::invalid_argument("capacity lookup: the root has no parent edge");
    return edge_cap[o.id];
}

bool Subtree::contains(Vertex v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

Subtree make_subtree(const Tree& tree, std::vector<Vertex> vertices,
                     std::int64_t demand) {
    if (vertices.empty())
        throw std::invalid_argument("make_subtree: empty vertex set");
    if (demand <= 0)
        throw std::invalid_argument("make_subtree: demand must be positive");
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (Vertex v : vertices)
        if (!tree.valid_vertex(v))
            throw std::invalid_argument("make_subtree: vertex " +
                                        std::to_string(v) + " out of range");

    // A vertex subset is connected iff exactly one member is "topmost": the
    // tree root, or a vertex whose parent lies outside the set.
    Vertex top = -1;
    int top_count = 0;
    for (Vertex v : vertices) {
        bool is_top = (v == tree.root()) ||
                      !std::binary_search(vertices.begin(), vertices.end(),
                                          tree.parent(v));
        if (is_top) {
            top = v;
            ++top_count;
        }
    }
    if (top_count != 1)
        throw std::invalid_argument(
            "make_subtree: vertices do not induce a connected subtree");

    Subtree s;
    s.vertices = std::move(vertices);
    s.root_vertex = top;
    s.demand = demand;

    // Count children inside the set to derive leaves and the path flag.
    std::vector<int> child_count(s.vertices.size(), 0);
    auto index_of = [&](Vertex v) {
        return std::lower_bound(s.vertices.begin(), s.vertices.end(), v) -
               s.vertices.begin();
    };
    for (Vertex v : s.vertices)
        if (v != top) ++child_count[index_of(tree.parent(v))];

    int max_degree = 0;
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        Vertex v = s.vertices[i];
        int degree = child_count[i] + (v != top ? 1 : 0);
        max_degree = std::max(max_degree, degree);
        if (v != top && child_count[i] == 0) ++s.nonroot_leaf_count;
    }
    s.is_path = max_degree <= 2;
    return s;
}

Instance::Instance(Tree tree_in, std::vector<Subtree> subtrees_in,
                   CapacityVector capacities_in)
    : tree(std::move(tree_in)), capacities(std::move(capacities_in)) {
    const int n = tree.vertex_count();
    if (static_cast<int>(capacities.vertex_cap.size()) != n ||
        static_cast<int>(capacities.edge_cap.size()) != n)
        throw std::invalid_argument(
            "Instance: capacity vector size does not match the tree");
    subtrees.reserve(subtrees_in.size());
    for (std::size_t i = 0; i < subtrees_in.size(); ++i) {
        try {
            subtrees.push_back(make_subtree(tree, subtrees_in[i].vertices,
                                            subtrees_in[i].demand));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("Instance: subtree " + std::to_string(i) +
                                        ": " + e.what());
        }
    }
}

std::int64_t Instance::max_nonroot_leaves() const {
    std::int64_t m = 0;
    for (const auto& s : subtrees)
        m = std::max<std::int64_t>(m, s.nonroot_leaf_count);
    return m;
}

}  // namespace mstbl
