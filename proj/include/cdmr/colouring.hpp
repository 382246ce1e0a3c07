#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cdmr/graph.hpp"
#include "cdmr/matrix.hpp"

namespace cdmr {

/// A connected graph whose every vertex is to be coloured.
class InputGraph {
public:
    /// Throws DisconnectedInput if g is not connected, std::invalid_argument
    /// if g has auxiliary (non-anchor) vertices.
    explicit InputGraph(SimpleGraph g);

    const SimpleGraph& graph() const noexcept { return graph_; }
    std::uint32_t vertex_count() const noexcept { return graph_.vertex_count(); }

private:
    SimpleGraph graph_;
};

/// Colours are 1..k, vertex v's colour at index v - 1.
struct Colouring {
    std::uint32_t k = 0;
    std::vector<std::uint32_t> colour;

    std::uint32_t of(std::uint32_t v) const { return colour[v - 1]; }
    /// Number of distinct colours actually used.
    std::uint32_t used() const;

    friend bool operator==(const Colouring&, const Colouring&) = default;
};

/// True iff c assigns every vertex a colour in [1, c.k] and adjacent vertices differ.
bool is_proper(const SimpleGraph& g, const Colouring& c);

/// The colourability gadget: every edge of the source is subdivided twice and
/// every non-adjacent pair gets a fresh common neighbour. The matrix adds one
/// further index n at distance 2 from the source vertices and 3 from the new ones.
struct GadgetInstance {
    InputGraph source;
    SimpleGraph gadget;     ///< vertices 1..n_g, the first n_c are the source's
    DistanceMatrix matrix;  ///< dimension n_g + 1
    /// Source edge -> (vertex next to edge.u, vertex next to edge.v).
    std::map<Edge, Edge> subdivision;
    /// Source non-edge -> its middle vertex.
    std::map<Edge, std::uint32_t> middle;

    std::uint32_t source_vertices() const noexcept { return source.vertex_count(); }
    std::uint32_t gadget_vertices() const noexcept { return gadget.vertex_count(); }
    std::uint32_t dimension() const noexcept { return matrix.size(); }
};

/// Gadget vertices are numbered source vertices first, then two subdivision
/// vertices per edge (edges lexicographic), then one middle vertex per
/// non-edge (non-edges lexicographic).
GadgetInstance reduce(const InputGraph& g);

/// Builds the realisation on n + k vertices in which extra vertex n + j is
/// adjacent to vertex n and to every source vertex of colour j.
/// Throws ImproperColouring unless c is proper for inst.source.
Realisation realise_from_colouring(const GadgetInstance& inst, const Colouring& c);

/// Colours each source vertex by the lowest-numbered extra vertex adjacent to
/// it (extra vertex n + j means colour j). Throws MalformedRealisation if some
/// source vertex has no such neighbour, the colour exceeds k, or the result is
/// not proper.
Colouring extract_colouring(const GadgetInstance& inst, const Realisation& r, std::uint32_t k);

/// A proper colouring with at most k colours, by backtracking with vertex 1
/// fixed to colour 1; std::nullopt if none exists.
std::optional<Colouring> find_colouring(const SimpleGraph& g, std::uint32_t k);

/// Largest vertex count chromatic_number_bruteforce accepts.
inline constexpr std::uint32_t chromatic_vertex_limit = 10;

/// Exhaustive chromatic number. Throws SearchSpaceTooLarge above
/// chromatic_vertex_limit vertices.
std::uint32_t chromatic_number_bruteforce(const InputGraph& g);

} // namespace cdmr
