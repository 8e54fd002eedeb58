#include "mstbl/load.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mstbl {

LoadVector LoadVector::zeros(const Tree& tree) {
    LoadVector lv;
    lv.vertex_load.assign(tree.vertex_count(), 0);
    lv.edge_load.assign(tree.vertex_count(), 0);
    return lv;
}

std::int64_t LoadVector::max_vertex_load() const {
    std::int64_t m = 0;
    for (auto x : vertex_load) m = std::max(m, x);
    return m;
}

std::int64_t LoadVector::max_edge_load() const {
    std::int64_t m = 0;
    for (auto x : edge_load) m = std::max(m, x);
    return m;
}

void LoadVector::add_subtree(const Subtree& s, std::int64_t multiplicity) {
    for (Vertex v : s.vertices) {
        vertex_load[v] += multiplicity;
        if (v != s.root_vertex) edge_load[v] += multiplicity;
    }
}

void validate_selection(const Instance& instance, const Solution& selection) {
    if (selection.multiplicity.size() != instance.subtrees.size())
        throw std::invalid_argument("selection: wrong number of multiplicities");
    for (std::size_t i = 0; i < selection.multiplicity.size(); ++i) {
        std::int64_t m = selection.multiplicity[i];
        if (m < 0 || m > instance.subtrees[i].demand)
            throw std::invalid_argument("selection: multiplicity of subtree " +
                                        std::to_string(i) +
                                        " outside [0, demand]");
    }
}

LoadVector load_vector(const Instance& instance, const Solution& selection) {
    validate_selection(instance, selection);
    LoadVector lv = LoadVector::zeros(instance.tree);
    for (std::size_t i = 0; i < selection.multiplicity.size(); ++i)
        if (selection.multiplicity[i] > 0)
            lv.add_subtree(instance.subtrees[i], selection.multiplicity[i]);
    return lv;
}

bool is_feasible(const Instance& instance, const LoadVector& loads) {
    const Tree& t = instance.tree;
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
        if (!instance.capacities.vertex_cap[v].covers(loads.vertex_load[v]))
            return false;
        if (v != t.root() &&
            !instance.capacities.edge_cap[v].covers(loads.edge_load[v]))
            return false;
    }
    return true;
}

bool is_feasible(const Instance& instance, const Solution& selection) {
    return is_feasible(instance, load_vector(instance, selection));
}

Cap residual_min_capacity(const Instance& instance, const LoadVector& loads,
                          int index) {
    if (index < 0 || index >= instance.subtree_count())
        throw std::invalid_argument("residual_min_capacity: index out of range");
    const Subtree& s = instance.subtrees[index];
    Cap best = Cap::unbounded();
    auto tighten = [&](Cap cap, std::int64_t load) {
        if (cap.is_unbounded()) return;
        std::int64_t residual = std::max<std::int64_t>(0, cap.value() - load);
        best = cap_min(best, Cap(residual));
    };
    for (Vertex v : s.vertices) {
        tighten(instance.capacities.vertex_cap[v], loads.vertex_load[v]);
        if (v != s.root_vertex)
            tighten(instance.capacities.edge_cap[v], loads.edge_load[v]);
    }
    return best;
}

Cap residual_min_capacity(const Instance& instance, const Solution& selection,
                          int index) {
    return residual_min_capacity(instance, load_vector(instance, selection),
                                 index);
}

std::vector<std::pair<ObjectId, std::int64_t>> overloaded_objects(
    const Instance& instance, const Solution& selection) {
    LoadVector lv = load_vector(instance, selection);
    const Tree& t = instance.tree;
    std::vector<std::pair<ObjectId, std::int64_t>> out;
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
        Cap c = instance.capacities.vertex_cap[v];
        if (!c.covers(lv.vertex_load[v]))
            out.emplace_back(vertex_object(v), lv.vertex_load[v] - c.value());
    }
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
        if (v == t.root()) continue;
        Cap c = instance.capacities.edge_cap[v];
        if (!c.covers(lv.edge_load[v]))
            out.emplace_back(edge_object(v), lv.edge_load[v] - c.value());
    }
    return out;
}

}  // namespace mstbl
