#include "mstbl/greedy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mstbl {

namespace {

std::vector<Vertex> resolve_traversal(const Instance& instance,
                                      const OrderPolicy& policy) {
    const Tree& t = instance.tree;
    if (policy.vertex_traversal.empty()) return t.default_post_order();
    const auto& order = policy.vertex_traversal;
    const int n = t.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("order_subtrees: traversal has wrong length");
    std::vector<int> position(n, -1);
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        if (!t.valid_vertex(v) || position[v] != -1)
            throw std::invalid_argument(
                "order_subtrees: traversal is not a permutation of the vertices");
        position[v] = i;
    }
    for (Vertex v = 0; v < n; ++v)
        if (v != t.root() && position[t.parent(v)] <= position[v])
            throw std::invalid_argument(
                "order_subtrees: traversal is not a post-order (vertex " +
                std::to_string(t.parent(v)) + " precedes its child " +
                std::to_string(v) + ")");
    return order;
}

}  // namespace

std::vector<int> order_subtrees(const Instance& instance,
                                const OrderPolicy& policy) {
    const std::vector<Vertex> traversal = resolve_traversal(instance, policy);
    const int n = instance.subtree_count();

    std::vector<int> rank;
    if (policy.same_root_order == SameRootOrder::explicit_permutation) {
        if (static_cast<int>(policy.permutation.size()) != n)
            throw std::invalid_argument(
                "order_subtrees: permutation has wrong length");
        rank.assign(n, -1);
        for (int pos = 0; pos < n; ++pos) {
            int idx = policy.permutation[pos];
            if (idx < 0 || idx >= n || rank[idx] != -1)
                throw std::invalid_argument(
                    "order_subtrees: permutation is not a bijection");
            rank[idx] = pos;
        }
    }

    std::vector<std::vector<int>> by_root(instance.tree.vertex_count());
    for (int i = 0; i < n; ++i)
        by_root[instance.subtrees[i].root_vertex].push_back(i);

    std::vector<int> out;
    out.reserve(n);
    for (Vertex v : traversal) {
        auto& group = by_root[v];
        switch (policy.same_root_order) {
            case SameRootOrder::input:
                break;  // input index order already
            case SameRootOrder::fewest_nonroot_leaves:
                std::stable_sort(group.begin(), group.end(), [&](int a, int b) {
                    return instance.subtrees[a].nonroot_leaf_count <
                           instance.subtrees[b].nonroot_leaf_count;
                });
                break;
            case SameRootOrder::explicit_permutation:
                std::sort(group.begin(), group.end(),
                          [&](int a, int b) { return rank[a] < rank[b]; });
                break;
        }
        out.insert(out.end(), group.begin(), group.end());
    }
    return out;
}

GreedyResult bottom_up_greedy(const Instance& instance,
                              const OrderPolicy& policy) {
    GreedyResult result;
    result.trace.visit_order = order_subtrees(instance, policy);
    result.trace.decisions.assign(instance.subtree_count(), {});
    result.solution = Solution::empty(instance.subtrees.size());

    LoadVector loads = LoadVector::zeros(instance.tree);
    for (int idx : result.trace.visit_order) {
        const Subtree& s = instance.subtrees[idx];
        Cap residual = residual_min_capacity(instance, loads, idx);
        std::int64_t take = residual.is_unbounded()
                                ? s.demand
                                : std::min(s.demand, residual.value());
        GreedyDecision& decision = result.trace.decisions[idx];
        if (take > 0) {
            decision.accepted = take;
            result.solution.multiplicity[idx] = take;
            loads.add_subtree(s, take);
        } else {
            // First tight object of the subtree, vertices before edges.
            std::optional<ObjectId> blocking;
            for (Vertex v : s.vertices) {
                Cap c = instance.capacities.vertex_cap[v];
                if (!c.is_unbounded() && loads.vertex_load[v] >= c.value()) {
                    blocking = vertex_object(v);
                    break;
                }
            }
            if (!blocking) {
                for (Vertex v : s.vertices) {
                    if (v == s.root_vertex) continue;
                    Cap c = instance.capacities.edge_cap[v];
                    if (!c.is_unbounded() && loads.edge_load[v] >= c.value()) {
                        blocking = edge_object(v);
                        break;
                    }
                }
            }
            decision.blocking = blocking;
        }
    }
    return result;
}

}  // namespace mstbl
