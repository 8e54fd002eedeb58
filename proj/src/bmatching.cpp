#include "mstbl/bmatching.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace mstbl {

void LaminarBMatchingProblem::validate() const {
    std::unordered_map<int, int> node_index;
    for (std::size_t i = 0; i < node_ids.size(); ++i) {
        if (!node_index.emplace(node_ids[i], static_cast<int>(i)).second)
            throw std::invalid_argument("b-matching: duplicate node id");
    }
    for (const MultiEdge& e : edges) {
        if (!node_index.count(e.u) || !node_index.count(e.v))
            throw std::invalid_argument("b-matching: edge endpoint not a node");
        if (e.u == e.v)
            throw std::invalid_argument("b-matching: self-loop edge");
        if (e.multiplicity < 0)
            throw std::invalid_argument("b-matching: negative edge multiplicity");
    }
    for (const LaminarSet& s : laminar_sets) {
        for (int node : s.nodes)
            if (!node_index.count(node))
                throw std::invalid_argument("b-matching: set member not a node");
        if (!std::is_sorted(s.nodes.begin(), s.nodes.end()) ||
            std::adjacent_find(s.nodes.begin(), s.nodes.end()) != s.nodes.end())
            throw std::invalid_argument("b-matching: set nodes must be sorted "
                                        "and distinct");
    }
    // Any two sets must be disjoint or nested.
    for (std::size_t a = 0; a < laminar_sets.size(); ++a) {
        for (std::size_t b = a + 1; b < laminar_sets.size(); ++b) {
            const auto& x = laminar_sets[a].nodes;
            const auto& y = laminar_sets[b].nodes;
            std::size_t common = 0;
            for (int node : x)
                if (std::binary_search(y.begin(), y.end(), node)) ++common;
            if (common != 0 && common != std::min(x.size(), y.size()))
                throw std::invalid_argument(
                    "b-matching: set family is not laminar");
        }
    }
}

namespace {

struct MatchingSearch {
    const LaminarBMatchingProblem& problem;
    // membership[i][s] = how many endpoints of edge i lie in laminar set s
    // (only bounded sets are tracked).
    std::vector<std::vector<int>> membership;
    std::vector<int> bounded_sets;         // indices into laminar_sets
    std::vector<std::int64_t> residual;    // aligned with bounded_sets
    std::int64_t root_residual = 0;
    bool root_bounded = false;

    std::vector<std::int64_t> current;
    std::int64_t current_total = 0;
    std::vector<std::int64_t> best;
    std::int64_t best_total = -1;

    explicit MatchingSearch(const LaminarBMatchingProblem& p) : problem(p) {
        for (std::size_t s = 0; s < p.laminar_sets.size(); ++s) {
            if (p.laminar_sets[s].bound.is_unbounded()) continue;
            bounded_sets.push_back(static_cast<int>(s));
            residual.push_back(p.laminar_sets[s].bound.value());
        }
        membership.assign(p.edges.size(),
                          std::vector<int>(bounded_sets.size(), 0));
        for (std::size_t i = 0; i < p.edges.size(); ++i) {
            for (std::size_t k = 0; k < bounded_sets.size(); ++k) {
                const auto& nodes = p.laminar_sets[bounded_sets[k]].nodes;
                int count = 0;
                if (std::binary_search(nodes.begin(), nodes.end(),
                                       p.edges[i].u))
                    ++count;
                if (std::binary_search(nodes.begin(), nodes.end(),
                                       p.edges[i].v))
                    ++count;
                membership[i][k] = count;
            }
        }
        root_bounded = !p.root_pair_bound.is_unbounded();
        if (root_bounded) root_residual = p.root_pair_bound.value();
        current.assign(p.edges.size(), 0);
    }

    std::int64_t allowance(std::size_t i) const {
        std::int64_t allow = problem.edges[i].multiplicity;
        for (std::size_t k = 0; k < bounded_sets.size(); ++k) {
            int c = membership[i][k];
            if (c > 0) allow = std::min(allow, residual[k] / c);
        }
        if (root_bounded) allow = std::min(allow, root_residual);
        return allow;
    }

    std::int64_t remaining_bound(std::size_t from) const {
        std::int64_t sum = 0;
        for (std::size_t i = from; i < problem.edges.size(); ++i)
            sum += allowance(i);
        return sum;
    }

    void apply(std::size_t i, std::int64_t m) {
        for (std::size_t k = 0; k < bounded_sets.size(); ++k)
            residual[k] -= membership[i][k] * m;
        if (root_bounded) root_residual -= m;
        current[i] = m;
        current_total += m;
    }

    void undo(std::size_t i, std::int64_t m) {
        for (std::size_t k = 0; k < bounded_sets.size(); ++k)
            residual[k] += membership[i][k] * m;
        if (root_bounded) root_residual += m;
        current[i] = 0;
        current_total -= m;
    }

    // Pass 1: maximize the total, multiplicities high to low.
    void search_max(std::size_t i) {
        if (current_total + remaining_bound(i) <= best_total) return;
        if (i == problem.edges.size()) {
            best_total = current_total;
            best = current;
            return;
        }
        for (std::int64_t m = allowance(i); m >= 0; --m) {
            apply(i, m);
            search_max(i + 1);
            undo(i, m);
        }
    }

    // Pass 2: first vector reaching `target` in lexicographically increasing
    // enumeration is the lexicographically smallest optimum.
    bool search_lex(std::size_t i, std::int64_t target) {
        if (current_total + remaining_bound(i) < target) return false;
        if (i == problem.edges.size()) {
            if (current_total != target) return false;
            best = current;
            return true;
        }
        std::int64_t cap = allowance(i);
        for (std::int64_t m = 0; m <= cap; ++m) {
            apply(i, m);
            bool found = search_lex(i + 1, target);
            undo(i, m);
            if (found) return true;  // best was copied at the leaf
        }
        return false;
    }
};

}  // namespace

std::vector<std::int64_t> hierarchical_b_matching(
    const LaminarBMatchingProblem& problem, const SolveBudget& budget) {
    problem.validate();
    if (static_cast<int>(problem.node_ids.size()) > budget.max_node_count)
        throw BudgetExceeded("b-matching: node count exceeds budget");
    if (static_cast<int>(problem.edges.size()) > budget.max_subtree_count)
        throw BudgetExceeded("b-matching: edge record count exceeds budget");
    std::int64_t copies = 0;
    for (const auto& e : problem.edges) copies += e.multiplicity;
    if (copies > budget.max_expanded_copies)
        throw BudgetExceeded("b-matching: total edge multiplicity exceeds budget");

    MatchingSearch search(problem);
    search.search_max(0);
    std::int64_t opt = search.best_total;
    MatchingSearch lex(problem);
    lex.search_lex(0, opt);
    return lex.best;
}

}  // namespace mstbl
