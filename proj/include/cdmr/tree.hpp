#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cdmr/graph.hpp"
#include "cdmr/matrix.hpp"

namespace cdmr {

/// Edge of a weighted tree. Weights are stored doubled so that half-integer
/// weights stay exact: the real weight is doubled_weight / 2.
struct TreeEdge {
    std::uint32_t u;
    std::uint32_t v;
    std::uint32_t doubled_weight;

    friend auto operator<=>(const TreeEdge&, const TreeEdge&) = default;
};

/// Tree on vertices 1..vertex_count whose first anchor_count vertices are the
/// anchors; the others are Steiner vertices.
class WeightedTree {
public:
    /// Throws std::invalid_argument unless the edges form a spanning tree with
    /// positive weights. Edges are normalised to u < v and sorted.
    WeightedTree(std::uint32_t vertex_count, std::uint32_t anchor_count, std::vector<TreeEdge> edges);

    std::uint32_t vertex_count() const noexcept { return vertex_count_; }
    std::uint32_t anchor_count() const noexcept { return anchor_count_; }
    const std::vector<TreeEdge>& edges() const noexcept { return edges_; }
    std::uint32_t degree(std::uint32_t v) const;

    /// Doubled path length between every pair of anchors, row-major n x n.
    std::vector<std::uint64_t> anchor_path_lengths() const;

    friend bool operator==(const WeightedTree&, const WeightedTree&) = default;

private:
    std::uint32_t vertex_count_;
    std::uint32_t anchor_count_;
    std::vector<TreeEdge> edges_;
};

struct ZareckiiViolation {
    enum class Kind { ParityTriple, FourPoint, Metric };

    Kind kind;
    std::array<std::uint32_t, 4> witness{}; ///< 1-based; unused slots are 0

    friend bool operator==(const ZareckiiViolation&, const ZareckiiViolation&) = default;
};

const char* to_string(ZareckiiViolation::Kind kind) noexcept;

struct ZareckiiReport {
    bool holds = true;
    std::optional<ZareckiiViolation> violation;
};

/// Tree-metric certificate: every distinct triple has an even perimeter and
/// every distinct quadruple attains the maximum of its three pairing sums at
/// least twice. Triples are scanned before quadruples, both lexicographically.
/// The metric axioms themselves hold for any DistanceMatrix, so the Metric
/// kind is never reported here.
ZareckiiReport check_zareckii(const DistanceMatrix& d);

/// Suppresses Steiner vertices of degree <= 2: leaves are dropped and degree
/// two vertices are replaced by one edge carrying the summed weight. Surviving
/// Steiner vertices are renumbered contiguously, keeping their relative order.
WeightedTree canonical_transform(const WeightedTree& t);

/// The unique minimum weighted tree realising d, or std::nullopt if none exists.
/// Anchors are inserted one at a time at the attachment point given by the
/// smallest Gromov product over placed pairs; the result is transformed to
/// canonical form and verified against d.
std::optional<WeightedTree> build_weighted_tree(const DistanceMatrix& d);

/// The minimal unweighted tree realising d, or std::nullopt if d has no tree
/// realisation (no weighted tree, or some weight is not an integer).
std::optional<Realisation> solve_tree(const DistanceMatrix& d);

/// Replaces every edge of integer weight w by a path through w - 1 fresh
/// vertices, numbered after the tree's vertices in edge order. Throws
/// std::invalid_argument if some weight is not an integer.
SimpleGraph expand_tree(const WeightedTree& t);

} // namespace cdmr
