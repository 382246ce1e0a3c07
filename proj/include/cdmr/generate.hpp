#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "cdmr/graph.hpp"
#include "cdmr/matrix.hpp"

namespace cdmr {

/// Seeded generator with platform-independent output: std::mt19937_64 (whose
/// sequence the standard fixes) and bounded draws by rejection sampling on the
/// raw 64-bit words. Standard distributions are avoided because their output
/// is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, bound). Precondition: bound > 0.
    std::uint64_t below(std::uint64_t bound);

    /// True with probability percent / 100.
    bool chance(std::uint32_t percent) { return below(100) < percent; }

private:
    std::mt19937_64 engine_;
};

/// Random tree (vertex v attaches to a uniform earlier vertex) plus each other
/// pair independently with probability edge_percent / 100. Every vertex is an anchor.
SimpleGraph random_connected_graph(Rng& rng, std::uint32_t vertices, std::uint32_t edge_percent);

/// Distances among `anchors` uniformly chosen vertices of a random connected
/// graph; anchor i of the matrix is the i-th chosen vertex.
DistanceMatrix random_metric(Rng& rng, std::uint32_t vertices, std::uint32_t anchors, std::uint32_t edge_percent);

/// Distances among `anchors` uniformly chosen vertices of a random tree.
DistanceMatrix random_tree_metric(Rng& rng, std::uint32_t anchors, std::uint32_t vertices);

/// Random tree on at most max_vertices vertices whose anchors include every
/// leaf and every degree-two vertex (so it is its own minimal realisation).
/// Anchors are numbered first.
SimpleGraph random_minimal_tree(Rng& rng, std::uint32_t max_vertices);

enum class GenMode { RandomMetric, RandomTreeMetric };

/// Parses "random-metric" / "random-tree-metric"; throws InvalidParams otherwise.
GenMode parse_gen_mode(std::string_view name);

struct GenParams {
    std::uint32_t vertices = 0; ///< 0: mode default
    std::uint32_t anchors = 0;
    std::uint32_t edge_percent = 30;
};

/// Deterministic for a fixed seed. Throws InvalidParams for out-of-range parameters.
DistanceMatrix generate(std::uint64_t seed, GenMode mode, const GenParams& params);

} // namespace cdmr
