#include <stdexcept>

#include "doctest.h"
#include "mstbl/generate.hpp"
#include "mstbl/load.hpp"

using namespace mstbl;

namespace {

Tree star4() { return build_tree({0, 0, 0, 0}, 0); }

Instance star4_instance(std::vector<Subtree> subtrees, Cap center_cap,
                        Cap other_cap) {
    Tree t = star4();
    CapacityVector caps = CapacityVector::uniform(t, other_cap, other_cap);
    caps.vertex_cap[0] = center_cap;
    return Instance(t, std::move(subtrees), std::move(caps));
}

}  // namespace

TEST_CASE("build_tree basic shapes") {
    Tree single = build_tree({0}, 0);
    CHECK(single.vertex_count() == 1);
    CHECK(single.root() == 0);
    CHECK(single.is_leaf(0));

    Tree star = star4();
    CHECK(star.vertex_count() == 4);
    CHECK(star.children(0).size() == 3);
    CHECK(star.depth(3) == 1);

    // Non-trivial root.
    Tree rooted = build_tree({1, 1}, 1);
    CHECK(rooted.root() == 1);
    CHECK(rooted.parent(0) == 1);
}

TEST_CASE("build_tree rejects malformed input") {
    CHECK_THROWS_AS(build_tree({0, 2, 1}, 0), std::invalid_argument);  // cycle
    CHECK_THROWS_AS(build_tree({1, 0}, 0), std::invalid_argument);  // bad root
    CHECK_THROWS_AS(build_tree({0, 5}, 0), std::invalid_argument);  // range
    CHECK_THROWS_AS(build_tree({0, 1}, 0), std::invalid_argument);  // self-loop
    CHECK_THROWS_AS(build_tree({}, 0), std::invalid_argument);
}

TEST_CASE("make_subtree derives root and leaf count") {
    Tree star = star4();
    Subtree whole = make_subtree(star, {0, 1, 2, 3});
    CHECK(whole.root_vertex == 0);
    CHECK(whole.nonroot_leaf_count == 3);
    CHECK_FALSE(whole.is_path);

    Subtree edge = make_subtree(star, {0, 1});
    CHECK(edge.root_vertex == 0);
    CHECK(edge.nonroot_leaf_count == 1);
    CHECK(edge.is_path);
    CHECK(edge.is_directed_path());

    Subtree crossing = make_subtree(star, {1, 0, 2});
    CHECK(crossing.root_vertex == 0);
    CHECK(crossing.nonroot_leaf_count == 2);
    CHECK(crossing.is_path);
    CHECK_FALSE(crossing.is_directed_path());

    Subtree point = make_subtree(star, {2});
    CHECK(point.root_vertex == 2);
    CHECK(point.nonroot_leaf_count == 0);
    CHECK(point.is_directed_path());

    CHECK_THROWS_AS(make_subtree(star, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_subtree(star, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_subtree(star, {0, 1}, 0), std::invalid_argument);

    // T-shape on a deeper tree: two bottom leaves but not a path.
    Tree deep = build_tree({0, 0, 1, 1, 2}, 0);
    Subtree tee = make_subtree(deep, {1, 2, 3, 4});
    CHECK(tee.root_vertex == 1);
    CHECK(tee.nonroot_leaf_count == 2);
    CHECK_FALSE(tee.is_path);
}

TEST_CASE("load_vector examples") {
    Tree star = star4();
    std::vector<Subtree> subtrees{make_subtree(star, {0, 1}),
                                  make_subtree(star, {0, 2})};
    Instance inst = star4_instance(subtrees, Cap::unbounded(), Cap::unbounded());

    LoadVector empty = load_vector(inst, Solution::empty(2));
    CHECK(empty.max_vertex_load() == 0);
    CHECK(empty.max_edge_load() == 0);

    LoadVector both = load_vector(inst, Solution{{1, 1}});
    CHECK(both.at(vertex_object(0)) == 2);
    CHECK(both.at(edge_object(1)) == 1);
    CHECK(both.at(edge_object(2)) == 1);
    CHECK(both.at(vertex_object(3)) == 0);
    CHECK(both.max_vertex_load() == 2);
    CHECK(both.max_edge_load() == 1);

    Instance scaled = star4_instance({make_subtree(star, {0, 1}, 5)},
                                     Cap::unbounded(), Cap::unbounded());
    LoadVector five = load_vector(scaled, Solution{{5}});
    CHECK(five.at(vertex_object(0)) == 5);
    CHECK(five.at(edge_object(1)) == 5);

    CHECK_THROWS_AS(load_vector(inst, Solution{{1}}), std::invalid_argument);
    CHECK_THROWS_AS(load_vector(inst, Solution{{2, 0}}), std::invalid_argument);
}

TEST_CASE("is_feasible examples") {
    Tree star = star4();
    std::vector<Subtree> paths{make_subtree(star, {0, 1}),
                               make_subtree(star, {0, 2}),
                               make_subtree(star, {0, 3})};
    Instance inst = star4_instance(paths, Cap(2), Cap(1));

    CHECK(is_feasible(inst, Solution::empty(3)));
    CHECK(is_feasible(inst, Solution{{1, 1, 0}}));
    CHECK_FALSE(is_feasible(inst, Solution{{1, 1, 1}}));

    Instance zero = star4_instance({make_subtree(star, {0, 1})}, Cap(0), Cap(1));
    CHECK_FALSE(is_feasible(zero, Solution{{1}}));
}

TEST_CASE("residual_min_capacity examples") {
    Tree star = star4();
    Instance inst = star4_instance(
        {make_subtree(star, {0, 1}), make_subtree(star, {0, 2})}, Cap(3),
        Cap::unbounded());
    // Tighten: vertex 1 cap 5, edge 1 cap 2.
    inst.capacities.vertex_cap[1] = Cap(5);
    inst.capacities.edge_cap[1] = Cap(2);

    Cap r = residual_min_capacity(inst, Solution::empty(2), 0);
    CHECK_FALSE(r.is_unbounded());
    CHECK(r.value() == 2);

    // Load the center to its capacity through the other path.
    inst.capacities.vertex_cap[0] = Cap(1);
    Cap tight = residual_min_capacity(inst, Solution{{0, 1}}, 0);
    CHECK(tight.value() == 0);

    Instance open = star4_instance({make_subtree(star, {0, 1})},
                                   Cap::unbounded(), Cap::unbounded());
    CHECK(residual_min_capacity(open, Solution::empty(1), 0).is_unbounded());

    CHECK_THROWS_AS(residual_min_capacity(open, Solution::empty(1), 7),
                    std::invalid_argument);
}

TEST_CASE("overloaded_objects examples") {
    Tree star = star4();
    Instance inst = star4_instance(
        {make_subtree(star, {0, 1}), make_subtree(star, {0, 2})}, Cap(1),
        Cap(1));
    CHECK(overloaded_objects(inst, Solution{{1, 0}}).empty());

    auto over = overloaded_objects(inst, Solution{{1, 1}});
    REQUIRE(over.size() == 1);
    CHECK(over[0].first == vertex_object(0));
    CHECK(over[0].second == 1);

    Instance multi = star4_instance({make_subtree(star, {0, 1}, 3)}, Cap(1),
                                    Cap(1));
    auto excesses = overloaded_objects(multi, Solution{{3}});
    REQUIRE(excesses.size() == 3);  // vertices 0, 1 and edge 1
    for (const auto& [object, excess] : excesses) CHECK(excess == 2);
    CHECK(excesses[0].first == vertex_object(0));
    CHECK(excesses[2].first == edge_object(1));
}

TEST_CASE("load properties on random instances") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        GenConfig config;
        config.seed = seed;
        config.shape = InstanceShape::general_subtrees;
        config.tree_size_range = {2, 10};
        config.subtree_count_range = {1, 8};
        config.capacity_range = {{0, 3}};
        config.demand_range = {1, 3};
        Instance inst = random_instance(config);

        Rng rng(seed * 77 + 1);
        auto random_selection = [&]() {
            Solution s = Solution::empty(inst.subtrees.size());
            for (int i = 0; i < inst.subtree_count(); ++i)
                s.multiplicity[i] = rng.uniform(0, inst.subtrees[i].demand);
            return s;
        };

        Solution a = random_selection(), b = random_selection();
        // overloaded_objects empty iff feasible
        CHECK(overloaded_objects(inst, a).empty() == is_feasible(inst, a));

        // additivity of loads
        Solution sum = Solution::empty(inst.subtrees.size());
        bool in_demand = true;
        for (std::size_t i = 0; i < sum.multiplicity.size(); ++i) {
            sum.multiplicity[i] = a.multiplicity[i] + b.multiplicity[i];
            if (sum.multiplicity[i] > inst.subtrees[i].demand) in_demand = false;
        }
        if (in_demand) {
            LoadVector la = load_vector(inst, a), lb = load_vector(inst, b),
                       ls = load_vector(inst, sum);
            for (Vertex v = 0; v < inst.tree.vertex_count(); ++v) {
                CHECK(ls.vertex_load[v] == la.vertex_load[v] + lb.vertex_load[v]);
                CHECK(ls.edge_load[v] == la.edge_load[v] + lb.edge_load[v]);
            }
        }

        // induced edge count and single-vertex subtrees
        for (int i = 0; i < inst.subtree_count(); ++i) {
            Solution unit = Solution::empty(inst.subtrees.size());
            unit.multiplicity[i] = 1;
            LoadVector lv = load_vector(inst, unit);
            std::int64_t edges = 0, max_edge = 0;
            for (Vertex v = 0; v < inst.tree.vertex_count(); ++v) {
                edges += lv.edge_load[v];
                max_edge = std::max(max_edge, lv.edge_load[v]);
            }
            CHECK(edges ==
                  static_cast<std::int64_t>(inst.subtrees[i].vertices.size()) - 1);
            if (inst.subtrees[i].vertices.size() == 1) CHECK(max_edge == 0);
        }

        // L_V / L_E match the maxima of the map
        LoadVector lv = load_vector(inst, a);
        std::int64_t max_v = 0, max_e = 0;
        for (Vertex v = 0; v < inst.tree.vertex_count(); ++v) {
            max_v = std::max(max_v, lv.vertex_load[v]);
            max_e = std::max(max_e, lv.edge_load[v]);
        }
        CHECK(lv.max_vertex_load() == max_v);
        CHECK(lv.max_edge_load() == max_e);
    }
}
