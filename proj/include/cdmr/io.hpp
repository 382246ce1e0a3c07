#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cdmr/colouring.hpp"
#include "cdmr/graph.hpp"
#include "cdmr/matrix.hpp"
#include "cdmr/tree.hpp"
#include "cdmr/twosat.hpp"

// Plain-text formats. Every parser ignores blank lines and lines whose first
// non-blank character is '#', and throws ParseError carrying the 1-based line.
//
//   matrix     n rows of n whitespace-separated decimal integers (< 2^32)
//   graph      "graph <vertex_count> <anchor_count>" then one "u v" per edge
//   colouring  one "vertex colour" pair per line, every vertex exactly once
//
// Emitters write '\n' line endings and lexicographically sorted edges.

namespace cdmr {

RawMatrix parse_matrix(std::string_view text);
SimpleGraph parse_graph(std::string_view text);
/// k defaults to the largest colour present.
Colouring parse_colouring(std::string_view text, std::optional<std::uint32_t> k = std::nullopt);

std::string emit_matrix(const RawMatrix& m);
std::string emit_matrix(const DistanceMatrix& d);
std::string emit_graph(const SimpleGraph& g);
std::string emit_colouring(const Colouring& c);

/// Header "tree <vertex_count> <anchor_count>", then "u v doubled_weight" lines.
std::string emit_weighted_tree(const WeightedTree& t);

/// Graphviz rendering; anchors drawn as boxes, edges in emit_graph order.
std::string emit_dot(const SimpleGraph& g);

/// "p cnf <variables> <clauses>" then one zero-terminated clause per line.
std::string emit_dimacs(const TwoSatInstance& inst);

} // namespace cdmr
