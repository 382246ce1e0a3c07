#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "cdmr/matrix.hpp"

namespace cdmr {

/// Hop distance that may be infinite. Addition saturates at infinity and
/// infinity compares greater than every finite value.
class Distance {
public:
    constexpr Distance() noexcept = default;
    constexpr explicit Distance(std::uint32_t hops) noexcept : finite_(true), hops_(hops) {}

    static constexpr Distance infinity() noexcept
    {
        Distance d;
        d.finite_ = false;
        return d;
    }

    constexpr bool is_finite() const noexcept { return finite_; }
    /// Precondition: is_finite().
    constexpr std::uint32_t value() const noexcept { return hops_; }

    friend constexpr Distance operator+(Distance a, Distance b) noexcept
    {
        if (!a.finite_ || !b.finite_)
            return infinity();
        return Distance(a.hops_ + b.hops_);
    }

    friend constexpr bool operator==(Distance a, Distance b) noexcept
    {
        return a.finite_ == b.finite_ && (!a.finite_ || a.hops_ == b.hops_);
    }

    friend constexpr std::strong_ordering operator<=>(Distance a, Distance b) noexcept
    {
        if (a.finite_ != b.finite_)
            return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
        if (!a.finite_)
            return std::strong_ordering::equal;
        return a.hops_ <=> b.hops_;
    }

    friend constexpr bool operator==(Distance a, std::uint32_t hops) noexcept { return a.finite_ && a.hops_ == hops; }

private:
    bool finite_ = true;
    std::uint32_t hops_ = 0;
};

/// n x n matrix of possibly infinite distances, 1-based.
class ExtendedDistances {
public:
    explicit ExtendedDistances(std::uint32_t n);

    std::uint32_t size() const noexcept { return n_; }
    Distance operator()(std::uint32_t i, std::uint32_t j) const { return entries_[(i - 1) * n_ + (j - 1)]; }
    void set(std::uint32_t i, std::uint32_t j, Distance d) { entries_[(i - 1) * n_ + (j - 1)] = d; }

    /// True iff every entry is finite and equals the corresponding entry of d.
    bool matches(const DistanceMatrix& d) const;

    friend bool operator==(const ExtendedDistances&, const ExtendedDistances&) = default;

private:
    std::uint32_t n_;
    std::vector<Distance> entries_;
};

struct Edge {
    std::uint32_t u;
    std::uint32_t v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Unweighted undirected simple graph on vertices 1..vertex_count. Vertices
/// 1..anchor_count are the anchors (the images of the matrix indices);
/// the rest are auxiliary.
class SimpleGraph {
public:
    SimpleGraph(std::uint32_t vertex_count, std::uint32_t anchor_count);

    std::uint32_t vertex_count() const noexcept { return static_cast<std::uint32_t>(adjacency_.size()); }
    std::uint32_t anchor_count() const noexcept { return anchor_count_; }
    bool is_anchor(std::uint32_t v) const noexcept { return v >= 1 && v <= anchor_count_; }

    /// Returns false if the edge was already present. Throws
    /// std::invalid_argument on self-loops or out-of-range endpoints.
    bool add_edge(std::uint32_t u, std::uint32_t v);
    bool has_edge(std::uint32_t u, std::uint32_t v) const;

    /// Sorted ascending.
    const std::vector<std::uint32_t>& neighbours(std::uint32_t v) const { return adjacency_[v - 1]; }
    std::uint32_t degree(std::uint32_t v) const { return static_cast<std::uint32_t>(adjacency_[v - 1].size()); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    /// Lexicographically sorted, u < v.
    std::vector<Edge> edges() const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    std::uint32_t anchor_count_;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<std::uint32_t>> adjacency_;
};

struct WeightedEdge {
    std::uint32_t u;
    std::uint32_t v;
    std::uint32_t weight;

    friend auto operator<=>(const WeightedEdge&, const WeightedEdge&) = default;
};

/// The q-skeleton of a distance matrix: an edge {i, j} of weight D_ij for
/// every pair with D_ij <= q.
struct WeightedSkeleton {
    std::uint32_t n;
    std::uint32_t q;
    std::vector<WeightedEdge> edges; ///< lexicographic, u < v

    friend bool operator==(const WeightedSkeleton&, const WeightedSkeleton&) = default;
};

/// A graph together with the matrix it realises. The anchor map is the
/// identity i -> v_i; construction goes through verify() only.
class Realisation {
public:
    static std::optional<Realisation> verify(SimpleGraph graph, DistanceMatrix matrix);

    const SimpleGraph& graph() const noexcept { return graph_; }
    const DistanceMatrix& matrix() const noexcept { return matrix_; }
    std::uint32_t extra_vertices() const noexcept { return graph_.vertex_count() - graph_.anchor_count(); }

private:
    Realisation(SimpleGraph g, DistanceMatrix d) : graph_(std::move(g)), matrix_(std::move(d)) {}

    SimpleGraph graph_;
    DistanceMatrix matrix_;
};

/// Hop distances between all pairs of vertices.
ExtendedDistances bfs_apsp(const SimpleGraph& g);

/// Hop distances between anchors only (BFS from each anchor).
ExtendedDistances anchor_distances(const SimpleGraph& g);

/// The graph on the n anchors with an edge wherever D_ij = 1.
SimpleGraph unit_graph(const DistanceMatrix& d);

/// Precondition: q >= 1.
WeightedSkeleton q_skeleton(const DistanceMatrix& d, std::uint32_t q);

/// Weighted shortest-path closure of the skeleton.
ExtendedDistances skeleton_distances(const WeightedSkeleton& s);

/// Least q such that the q-skeleton's shortest paths reproduce d.
std::uint32_t q_zero(const DistanceMatrix& d);

/// Replaces every skeleton edge of weight w by a path through w - 1 fresh
/// auxiliary vertices. Fresh vertices are numbered after the anchors,
/// consecutively in edge order, from the u end towards the v end.
SimpleGraph expand_elementary_paths(const WeightedSkeleton& s);

/// True iff g has d.size() anchors whose pairwise hop distances equal d.
bool verify_realisation(const SimpleGraph& g, const DistanceMatrix& d);

/// Subgraph induced on the anchors.
SimpleGraph anchor_induced_subgraph(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);

} // namespace cdmr
