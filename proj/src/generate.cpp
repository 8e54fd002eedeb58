#include "mstbl/generate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mstbl {

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());  // full range
    // Rejection sampling to avoid modulo bias.
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t draw;
    do {
        draw = next();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % span);
}

double Rng::real01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

SimpleGraph SimpleGraph::make(int vertex_count,
                              std::vector<std::pair<int, int>> edges) {
    if (vertex_count <= 0)
        throw std::invalid_argument("SimpleGraph: vertex count must be positive");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("SimpleGraph: self-loop");
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("SimpleGraph: endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return SimpleGraph{vertex_count, std::move(edges)};
}

std::vector<Vertex> tree_path(const Tree& tree, Vertex a, Vertex b) {
    if (!tree.valid_vertex(a) || !tree.valid_vertex(b))
        throw std::invalid_argument("tree_path: vertex out of range");
    std::vector<Vertex> up_a, up_b;
    Vertex x = a, y = b;
    while (x != y) {
        if (tree.depth(x) >= tree.depth(y)) {
            up_a.push_back(x);
            x = tree.parent(x);
        } else {
            up_b.push_back(y);
            y = tree.parent(y);
        }
    }
    up_a.push_back(x);  // the meeting vertex
    up_a.insert(up_a.end(), up_b.rbegin(), up_b.rend());
    return up_a;
}

namespace {

Tree random_tree(Rng& rng, int n) {
    std::vector<Vertex> parents(n);
    parents[0] = 0;
    for (Vertex v = 1; v < n; ++v)
        parents[v] = static_cast<Vertex>(rng.uniform(0, v - 1));
    return build_tree(parents, 0);
}

std::vector<Vertex> random_connected_set(Rng& rng, const Tree& tree,
                                         int target_size) {
    std::vector<char> in_set(tree.vertex_count(), 0);
    std::vector<Vertex> set, frontier;
    auto add = [&](Vertex v) {
        in_set[v] = 1;
        set.push_back(v);
        if (v != tree.root() && !in_set[tree.parent(v)])
            frontier.push_back(tree.parent(v));
        for (Vertex c : tree.children(v))
            if (!in_set[c]) frontier.push_back(c);
    };
    add(static_cast<Vertex>(rng.uniform(0, tree.vertex_count() - 1)));
    while (static_cast<int>(set.size()) < target_size && !frontier.empty()) {
        std::size_t pick =
            static_cast<std::size_t>(rng.uniform(0, frontier.size() - 1));
        Vertex v = frontier[pick];
        frontier[pick] = frontier.back();
        frontier.pop_back();
        if (in_set[v]) continue;
        add(v);
    }
    return set;
}

// Random descendant reached by a downward walk; may return v itself.
Vertex random_descendant(Rng& rng, const Tree& tree, Vertex v,
                         double continue_prob) {
    Vertex cur = v;
    while (!tree.children(cur).empty() && rng.chance(continue_prob)) {
        const auto& kids = tree.children(cur);
        cur = kids[static_cast<std::size_t>(rng.uniform(0, kids.size() - 1))];
    }
    return cur;
}

std::vector<Vertex> draw_subtree_vertices(Rng& rng, const Tree& tree,
                                          InstanceShape shape) {
    const int n = tree.vertex_count();
    switch (shape) {
        case InstanceShape::paths_only: {
            if (n == 1) return {0};
            Vertex u = static_cast<Vertex>(rng.uniform(0, n - 1));
            Vertex v;
            do {
                v = static_cast<Vertex>(rng.uniform(0, n - 1));
            } while (v == u);
            return tree_path(tree, u, v);
        }
        case InstanceShape::general_subtrees: {
            int target = static_cast<int>(rng.uniform(1, n));
            return random_connected_set(rng, tree, target);
        }
        case InstanceShape::directed_paths: {
            Vertex u = static_cast<Vertex>(rng.uniform(0, n - 1));
            Vertex v = random_descendant(rng, tree, u, 0.8);
            return tree_path(tree, u, v);
        }
        case InstanceShape::root_crossing_paths: {
            const auto& top = tree.children(tree.root());
            if (top.size() >= 2 && rng.chance(0.5)) {
                std::size_t i =
                    static_cast<std::size_t>(rng.uniform(0, top.size() - 1));
                std::size_t j =
                    static_cast<std::size_t>(rng.uniform(0, top.size() - 2));
                if (j >= i) ++j;
                Vertex a = random_descendant(rng, tree, top[i], 0.8);
                Vertex b = random_descendant(rng, tree, top[j], 0.8);
                return tree_path(tree, a, b);
            }
            Vertex u = static_cast<Vertex>(rng.uniform(0, n - 1));
            Vertex v = random_descendant(rng, tree, u, 0.8);
            return tree_path(tree, u, v);
        }
    }
    throw std::logic_error("draw_subtree_vertices: unknown shape");
}

Cap draw_capacity(Rng& rng, const GenConfig& config, std::int64_t lo,
                  std::int64_t hi) {
    if (config.unbounded_fraction > 0 && rng.chance(config.unbounded_fraction))
        return Cap::unbounded();
    return Cap(rng.uniform(lo, hi));
}

}  // namespace

Instance random_instance(const GenConfig& config) {
    if (config.tree_size_range.first < 1 ||
        config.tree_size_range.first > config.tree_size_range.second)
        throw std::invalid_argument("random_instance: bad tree size range");
    if (config.subtree_count_range.first < 0 ||
        config.subtree_count_range.first > config.subtree_count_range.second)
        throw std::invalid_argument("random_instance: bad subtree count range");
    if (config.demand_range.first < 1 ||
        config.demand_range.first > config.demand_range.second)
        throw std::invalid_argument("random_instance: bad demand range");
    if (config.capacity_range &&
        (config.capacity_range->first < 0 ||
         config.capacity_range->first > config.capacity_range->second))
        throw std::invalid_argument("random_instance: bad capacity range");

    Rng rng(config.seed);
    const int n = static_cast<int>(
        rng.uniform(config.tree_size_range.first, config.tree_size_range.second));
    Tree tree = random_tree(rng, n);
    const int count = static_cast<int>(rng.uniform(
        config.subtree_count_range.first, config.subtree_count_range.second));

    std::vector<Subtree> subtrees;
    subtrees.reserve(count);
    std::int64_t covered = 0;  // total vertex memberships, for auto capacities
    for (int i = 0; i < count; ++i) {
        std::vector<Vertex> vertices =
            draw_subtree_vertices(rng, tree, config.shape);
        std::int64_t demand =
            rng.uniform(config.demand_range.first, config.demand_range.second);
        covered += static_cast<std::int64_t>(vertices.size());
        subtrees.push_back(make_subtree(tree, std::move(vertices), demand));
    }

    std::int64_t lo, hi;
    if (config.capacity_range) {
        lo = config.capacity_range->first;
        hi = config.capacity_range->second;
    } else {
        std::int64_t expected = (covered + n - 1) / n;  // ceil(mean load)
        lo = 1;
        hi = std::max<std::int64_t>(2, 2 * expected);
    }
    CapacityVector caps;
    caps.vertex_cap.reserve(n);
    caps.edge_cap.reserve(n);
    for (Vertex v = 0; v < n; ++v)
        caps.vertex_cap.push_back(draw_capacity(rng, config, lo, hi));
    for (Vertex v = 0; v < n; ++v)
        caps.edge_cap.push_back(v == tree.root()
                                    ? Cap::unbounded()
                                    : draw_capacity(rng, config, lo, hi));
    return Instance(std::move(tree), std::move(subtrees), std::move(caps));
}

Instance mis_to_star(const SimpleGraph& graph) {
    const int m = static_cast<int>(graph.edges.size());
    std::vector<Vertex> parents(m + 1, 0);
    Tree star = build_tree(parents, 0);

    std::vector<Subtree> substars;
    substars.reserve(graph.vertex_count);
    for (int v = 0; v < graph.vertex_count; ++v) {
        std::vector<Vertex> vertices{0};
        for (int j = 0; j < m; ++j)
            if (graph.edges[j].first == v || graph.edges[j].second == v)
                vertices.push_back(j + 1);  // leaf j+1 stands for edge j
        substars.push_back(make_subtree(star, std::move(vertices), 1));
    }

    CapacityVector caps = CapacityVector::uniform(star, Cap(1), Cap(1));
    caps.vertex_cap[0] = Cap::unbounded();
    return Instance(std::move(star), std::move(substars), std::move(caps));
}

Instance mcf_to_instance(const Tree& tree,
                         const std::vector<Commodity>& commodities,
                         const std::vector<Cap>& edge_caps) {
    if (static_cast<int>(edge_caps.size()) != tree.vertex_count())
        throw std::invalid_argument(
            "mcf_to_instance: edge capacity vector size does not match the tree");
    std::vector<Subtree> paths;
    paths.reserve(commodities.size());
    for (std::size_t i = 0; i < commodities.size(); ++i) {
        const Commodity& c = commodities[i];
        if (!tree.valid_vertex(c.source) || !tree.valid_vertex(c.target))
            throw std::invalid_argument("mcf_to_instance: commodity " +
                                        std::to_string(i) +
                                        " has an unknown vertex");
        if (c.source == c.target)
            throw std::invalid_argument("mcf_to_instance: commodity " +
                                        std::to_string(i) +
                                        " has equal endpoints");
        paths.push_back(
            make_subtree(tree, tree_path(tree, c.source, c.target), c.demand));
    }
    CapacityVector caps;
    caps.vertex_cap.assign(tree.vertex_count(), Cap::unbounded());
    caps.edge_cap = edge_caps;
    caps.edge_cap[tree.root()] = Cap::unbounded();
    return Instance(tree, std::move(paths), std::move(caps));
}

Instance chordal_mkc_to_instance(const Tree& tree,
                                 std::vector<Subtree> representation,
                                 std::int64_t k) {
    if (k < 1)
        throw std::invalid_argument("chordal_mkc_to_instance: k must be >= 1");
    CapacityVector caps =
        CapacityVector::uniform(tree, Cap(k), Cap::unbounded());
    return Instance(tree, std::move(representation), std::move(caps));
}

Instance tightness_instance(int m) {
    if (m < 1)
        throw std::invalid_argument("tightness_instance: m must be >= 1");
    std::vector<Vertex> parents(m + 1, 0);
    Tree star = build_tree(parents, 0);

    std::vector<Subtree> subtrees;
    std::vector<Vertex> whole(m + 1);
    for (int v = 0; v <= m; ++v) whole[v] = v;
    subtrees.push_back(make_subtree(star, std::move(whole), 1));
    for (Vertex leaf = 1; leaf <= m; ++leaf)
        subtrees.push_back(make_subtree(star, {0, leaf}, 1));

    CapacityVector caps = CapacityVector::uniform(star, Cap(1), Cap(1));
    caps.vertex_cap[0] = Cap(m);
    return Instance(std::move(star), std::move(subtrees), std::move(caps));
}

}  // namespace mstbl
