#pragma once

#include <cstdint>
#include <optional>

#include "cdmr/graph.hpp"
#include "cdmr/matrix.hpp"
#include "cdmr/twosat.hpp"

namespace cdmr {

enum class Answer { Yes, No };

struct SolveOutcome {
    Answer answer = Answer::No;
    std::optional<Realisation> realisation; ///< present iff answer == Yes
    std::uint32_t extra_vertices_used = 0;

    static SolveOutcome no() { return {}; }
    static SolveOutcome yes(Realisation r)
    {
        auto extra = r.extra_vertices();
        return {Answer::Yes, std::move(r), extra};
    }
};

struct Bounds {
    std::uint32_t q0;
    std::uint32_t lower; ///< n + q0 - 1: no realisation has fewer vertices
    std::uint32_t upper; ///< vertices of the expanded q0-skeleton

    friend bool operator==(const Bounds&, const Bounds&) = default;
};

Bounds bounds(const DistanceMatrix& d);

/// Variable index of x_{i, n+j} for anchor i and extra vertex n+j (j = 1, 2).
constexpr std::uint32_t edge_variable(std::uint32_t n, std::uint32_t i, std::uint32_t j) noexcept
{
    return (j - 1) * n + i;
}

/// Adjacency constraints for one extra vertex.
TwoSatInstance build_phi1(const DistanceMatrix& d);

/// Adjacency constraints for two non-adjacent extra vertices.
TwoSatInstance build_phi2(const DistanceMatrix& d);

/// build_phi2 plus the constraints that apply when the two extra vertices are
/// adjacent to each other.
TwoSatInstance build_phi2_prime(const DistanceMatrix& d);

/// The unit graph of d plus `extras` new vertices n+1..n+extras, with anchor i
/// adjacent to n+j iff the assignment sets x_{i,n+j}. If link_extras, the
/// extra vertices n+1 and n+2 are joined.
SimpleGraph graph_from_assignment(const DistanceMatrix& d, const Assignment& a, std::uint32_t extras,
                                  bool link_extras);

/// Realisable on exactly n vertices?
SolveOutcome solve_k0(const DistanceMatrix& d);

/// Realisable on at most n + 1 vertices? Reports the smallest extra count.
SolveOutcome solve_k1(const DistanceMatrix& d);

/// Realisable on at most n + 2 vertices? Reports the smallest extra count.
SolveOutcome solve_k2(const DistanceMatrix& d);

/// Dispatches to solve_k0/1/2; throws std::invalid_argument for k > 2.
SolveOutcome solve_k(const DistanceMatrix& d, std::uint32_t k);

/// Default bound on the number of free edges solve_exact will search.
inline constexpr std::uint32_t default_search_guard = 30;

/// Number of candidate edges touching k extra vertices: n*k + k(k-1)/2.
std::uint64_t free_edge_count(std::uint32_t n, std::uint32_t k) noexcept;

/// Exhaustive search over every set of edges touching k extra vertices, with
/// the anchors' induced subgraph fixed to the unit graph. Candidate edge b of
/// the bitmask is the b-th pair (u, w) ordered by extra vertex w = n+1..n+k,
/// then by u ascending. Returns the witness with the smallest bitmask (extra
/// vertices may stay isolated, so this decides "at most n + k").
/// Throws SearchSpaceTooLarge if free_edge_count(n, k) > guard.
SolveOutcome solve_exact(const DistanceMatrix& d, std::uint32_t k, std::uint32_t guard = default_search_guard);

/// The bitmask solve_exact reports for a graph on n + k vertices.
std::uint64_t exact_bitmask(const SimpleGraph& g);

} // namespace cdmr
