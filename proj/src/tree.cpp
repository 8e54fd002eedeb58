#include "mstbl/tree.hpp"

#include <stdexcept>
#include <string>

namespace mstbl {

std::vector<Vertex> Tree::leaves() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < vertex_count(); ++v)
        if (is_leaf(v)) out.push_back(v);
    return out;
}

std::vector<Vertex> Tree::default_post_order() const {
    std::vector<Vertex> order;
    order.reserve(vertex_count());
    // Iterative post-order: push children in reverse so ascending ids pop first.
    std::vector<std::pair<Vertex, bool>> stack;
    stack.emplace_back(root_, false);
    while (!stack.empty()) {
        auto [v, expanded] = stack.back();
        stack.pop_back();
        if (expanded) {
            order.push_back(v);
            continue;
        }
        stack.emplace_back(v, true);
        const auto& kids = children_[v];
        for (auto it = kids.rbegin(); it != kids.rend(); ++it)
            stack.emplace_back(*it, false);
    }
    return order;
}

Tree build_tree(const std::vector<Vertex>& parents, Vertex root) {
    const int n = static_cast<int>(parents.size());
    if (n == 0) throw std::invalid_argument("build_tree: empty parent list");
    if (root < 0 || root >= n)
        throw std::invalid_argument("build_tree: root id out of range");
    if (parents[root] != root)
        throw std::invalid_argument(
            "build_tree: root has a parent distinct from itself");
    for (Vertex v = 0; v < n; ++v)
        if (parents[v] < 0 || parents[v] >= n)
            throw std::invalid_argument("build_tree: parent of vertex " +
                                        std::to_string(v) + " out of range");

    Tree t;
    t.root_ = root;
    t.parent_ = parents;
    t.children_.assign(n, {});
    t.depth_.assign(n, -1);
    for (Vertex v = 0; v < n; ++v)
        if (v != root) t.children_[parents[v]].push_back(v);

    // Walk each vertex up to the root; a revisit of an in-progress vertex is a
    // cycle (which is also the only way a full parent vector can disconnect).
    enum : signed char { unvisited = 0, in_progress = 1, done = 2 };
    std::vector<signed char> state(n, unvisited);
    state[root] = done;
    t.depth_[root] = 0;
    std::vector<Vertex> path;
    for (Vertex v = 0; v < n; ++v) {
        if (state[v] != unvisited) continue;
        path.clear();
        Vertex u = v;
        while (state[u] == unvisited) {
            state[u] = in_progress;
            path.push_back(u);
            u = parents[u];
        }
        if (state[u] == in_progress)
            throw std::invalid_argument("build_tree: cycle detected at vertex " +
                                        std::to_string(u));
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            t.depth_[*it] = t.depth_[parents[*it]] + 1;
            state[*it] = done;
        }
    }
    return t;
}

}  // namespace mstbl
