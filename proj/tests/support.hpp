// Test-only oracles, independent of the solver code they check: plain
// exhaustive enumeration with direct load/constraint accounting.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "mstbl/bmatching.hpp"
#include "mstbl/generate.hpp"
#include "mstbl/instance.hpp"

namespace mstbl::test {

struct EnumeratedOpt {
    std::int64_t total = 0;
    std::vector<std::int64_t> multiplicity;  // lexicographically smallest
};

// Unpruned enumeration of every multiplicity vector; feasibility is checked
// against loads accumulated directly from the subtree vertex sets.
inline EnumeratedOpt enumerate_opt(const Instance& instance) {
    const int n = instance.subtree_count();
    const int vertices = instance.tree.vertex_count();
    std::vector<std::int64_t> vertex_load(vertices, 0), edge_load(vertices, 0);
    std::vector<std::int64_t> current(n, 0);
    EnumeratedOpt best;
    best.total = -1;

    auto feasible = [&]() {
        for (Vertex v = 0; v < vertices; ++v) {
            if (!instance.capacities.vertex_cap[v].covers(vertex_load[v]))
                return false;
            if (v != instance.tree.root() &&
                !instance.capacities.edge_cap[v].covers(edge_load[v]))
                return false;
        }
        return true;
    };
    auto add = [&](int i, std::int64_t m) {
        for (Vertex v : instance.subtrees[i].vertices) {
            vertex_load[v] += m;
            if (v != instance.subtrees[i].root_vertex) edge_load[v] += m;
        }
    };

    // Lexicographically increasing enumeration: the first vector attaining
    // the maximum total is the lexicographically smallest optimum.
    auto recurse = [&](auto&& self, int i, std::int64_t total) -> void {
        if (i == n) {
            if (feasible() && total > best.total) {
                best.total = total;
                best.multiplicity = current;
            }
            return;
        }
        for (std::int64_t m = 0; m <= instance.subtrees[i].demand; ++m) {
            current[i] = m;
            add(i, m);
            self(self, i + 1, total + m);
            add(i, -m);
            current[i] = 0;
        }
    };
    recurse(recurse, 0, 0);
    return best;
}

// Unpruned enumeration for the laminar b-matching problem with direct
// degree-sum checks.
inline EnumeratedOpt enumerate_bmatching(const LaminarBMatchingProblem& p) {
    const int n = static_cast<int>(p.edges.size());
    std::vector<std::int64_t> current(n, 0);
    EnumeratedOpt best;
    best.total = -1;

    auto feasible = [&]() {
        std::int64_t selected = 0;
        for (int i = 0; i < n; ++i) selected += current[i];
        if (!p.root_pair_bound.covers(selected)) return false;
        for (const LaminarSet& set : p.laminar_sets) {
            if (set.bound.is_unbounded()) continue;
            std::int64_t degree_sum = 0;
            for (int i = 0; i < n; ++i) {
                int c = 0;
                if (std::binary_search(set.nodes.begin(), set.nodes.end(),
                                       p.edges[i].u))
                    ++c;
                if (std::binary_search(set.nodes.begin(), set.nodes.end(),
                                       p.edges[i].v))
                    ++c;
                degree_sum += c * current[i];
            }
            if (degree_sum > set.bound.value()) return false;
        }
        return true;
    };

    auto recurse = [&](auto&& self, int i, std::int64_t total) -> void {
        if (i == n) {
            if (feasible() && total > best.total) {
                best.total = total;
                best.multiplicity = current;
            }
            return;
        }
        for (std::int64_t m = 0; m <= p.edges[i].multiplicity; ++m) {
            current[i] = m;
            self(self, i + 1, total + m);
            current[i] = 0;
        }
    };
    recurse(recurse, 0, 0);
    return best;
}

// Brute-force independence number of a simple graph (vertex count <= 20).
inline int independence_number(const SimpleGraph& g) {
    int best = 0;
    for (unsigned mask = 0; mask < (1u << g.vertex_count); ++mask) {
        bool independent = true;
        for (const auto& [u, v] : g.edges)
            if ((mask >> u & 1u) && (mask >> v & 1u)) {
                independent = false;
                break;
            }
        if (!independent) continue;
        best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

inline bool subtrees_intersect(const Subtree& a, const Subtree& b) {
    for (Vertex v : a.vertices)
        if (b.contains(v)) return true;
    return false;
}

// Random laminar b-matching problem built from the leaf-descendant sets of a
// random tree, so the family is laminar by construction.
inline LaminarBMatchingProblem random_bmatching_problem(Rng& rng,
                                                        int max_total_copies) {
    int internal = static_cast<int>(rng.uniform(1, 3));
    int node_count = static_cast<int>(rng.uniform(2, 6));
    // Tree over ids 0..internal-1 (internal) and internal..internal+nodes-1
    // (leaves hanging off random internal vertices).
    std::vector<int> parent(internal + node_count);
    parent[0] = 0;
    for (int v = 1; v < internal; ++v)
        parent[v] = static_cast<int>(rng.uniform(0, v - 1));
    for (int l = 0; l < node_count; ++l)
        parent[internal + l] = static_cast<int>(rng.uniform(0, internal - 1));

    LaminarBMatchingProblem p;
    for (int l = 0; l < node_count; ++l) p.node_ids.push_back(internal + l);

    std::vector<std::vector<int>> desc(internal + node_count);
    for (int l = 0; l < node_count; ++l) {
        int id = internal + l;
        desc[id] = {id};
        for (int v = parent[id];; v = parent[v]) {
            desc[v].push_back(id);
            if (v == 0) break;
        }
    }
    for (int v = 0; v < internal + node_count; ++v) {
        if (desc[v].empty()) continue;
        std::sort(desc[v].begin(), desc[v].end());
        desc[v].erase(std::unique(desc[v].begin(), desc[v].end()),
                      desc[v].end());
        Cap bound = rng.chance(0.15)
                        ? Cap::unbounded()
                        : Cap(rng.uniform(0, 4));
        p.laminar_sets.push_back({desc[v], bound});
    }

    std::int64_t copies = 0;
    int edge_count = static_cast<int>(rng.uniform(0, 5));
    for (int e = 0; e < edge_count && copies < max_total_copies; ++e) {
        int u = static_cast<int>(rng.uniform(0, node_count - 1));
        int v = static_cast<int>(rng.uniform(0, node_count - 2));
        if (v >= u) ++v;
        std::int64_t mult =
            std::min<std::int64_t>(rng.uniform(1, 3), max_total_copies - copies);
        copies += mult;
        p.edges.push_back({internal + u, internal + v, mult});
    }
    p.root_pair_bound =
        rng.chance(0.3) ? Cap::unbounded() : Cap(rng.uniform(0, 6));
    return p;
}

}  // namespace mstbl::test
