#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mstbl/generate.hpp"
#include "mstbl/instance.hpp"

namespace mstbl {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Line-oriented instance format, fields in fixed order:
//
//   format_version: 1
//   root: 0
//   parents: 0 0 1 1
//   vertex_capacities: 3 unbounded 1 1
//   edge_capacities: 2 1 unbounded
//   subtree_count: 2
//   subtree 0: demand 3 vertices 0 1 2
//   subtree 1: demand 1 vertices 1 3
//
// edge_capacities lists one entry per non-root vertex in ascending id order.
// serialize/parse round-trip losslessly.
std::string serialize_instance(const Instance& instance);
Instance parse_instance(std::string_view text);

// Graph file: first line is the vertex count, then one "u v" pair per line.
SimpleGraph parse_simple_graph(std::string_view text);

}  // namespace mstbl
