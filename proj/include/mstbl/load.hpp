#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mstbl/instance.hpp"

namespace mstbl {

// Per-object load induced by a selection. edge_load is indexed by the child
// endpoint; the root slot stays 0.
struct LoadVector {
    std::vector<std::int64_t> vertex_load;
    std::vector<std::int64_t> edge_load;

    static LoadVector zeros(const Tree& tree);

    std::int64_t at(ObjectId o) const {
        return o.kind == ObjKind::vertex ? vertex_load[o.id] : edge_load[o.id];
    }
    std::int64_t max_vertex_load() const;  // L_V
    std::int64_t max_edge_load() const;    // L_E

    // A subtree loads every vertex of its set and the parent edge of every
    // member except its own root.
    void add_subtree(const Subtree& s, std::int64_t multiplicity);
};

// Throws std::invalid_argument if the selection has the wrong length or a
// multiplicity outside [0, demand].
void validate_selection(const Instance& instance, const Solution& selection);

LoadVector load_vector(const Instance& instance, const Solution& selection);

bool is_feasible(const Instance& instance, const Solution& selection);
bool is_feasible(const Instance& instance, const LoadVector& loads);

// Minimum remaining capacity over the objects of subtree `index` given the
// current selection; Cap::unbounded() when every object is unbounded.
Cap residual_min_capacity(const Instance& instance, const Solution& selection,
                          int index);
Cap residual_min_capacity(const Instance& instance, const LoadVector& loads,
                          int index);

// All objects with load above capacity, with their excess, sorted by
// ObjectId (vertices before edges, ids ascending). Empty iff feasible.
std::vector<std::pair<ObjectId, std::int64_t>> overloaded_objects(
    const Instance& instance, const Solution& selection);

}  // namespace mstbl
