#include "cdmr/colouring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "cdmr/errors.hpp"

namespace cdmr {

InputGraph::InputGraph(SimpleGraph g) : graph_(std::move(g))
{
    if (graph_.anchor_count() != graph_.vertex_count())
        throw std::invalid_argument("input graph must not have auxiliary vertices");
    if (!is_connected(graph_))
        throw DisconnectedInput("input graph is not connected");
}

std::uint32_t Colouring::used() const
{
    return static_cast<std::uint32_t>(std::set<std::uint32_t>(colour.begin(), colour.end()).size());
}

bool is_proper(const SimpleGraph& g, const Colouring& c)
{
    if (c.colour.size() != g.vertex_count())
        return false;
    if (std::any_of(c.colour.begin(), c.colour.end(), [&](std::uint32_t x) { return x < 1 || x > c.k; }))
        return false;
    const auto edges = g.edges();
    return std::none_of(edges.begin(), edges.end(), [&](const Edge& e) { return c.of(e.u) == c.of(e.v); });
}

GadgetInstance reduce(const InputGraph& input)
{
    const auto& src = input.graph();
    const auto nc = src.vertex_count();
    const auto edges = src.edges();
    std::vector<Edge> non_edges;
    for (std::uint32_t u = 1; u <= nc; ++u)
        for (std::uint32_t v = u + 1; v <= nc; ++v)
            if (!src.has_edge(u, v))
                non_edges.push_back({u, v});

    const auto ng = static_cast<std::uint32_t>(nc + 2 * edges.size() + non_edges.size());
    SimpleGraph gadget(ng, ng);
    std::map<Edge, Edge> subdivision;
    std::map<Edge, std::uint32_t> middle;

    std::uint32_t next = nc + 1;
    for (const auto& e : edges) {
        const auto a = next++, b = next++;
        gadget.add_edge(e.u, a);
        gadget.add_edge(a, b);
        gadget.add_edge(b, e.v);
        subdivision[e] = {a, b};
    }
    for (const auto& e : non_edges) {
        const auto m = next++;
        gadget.add_edge(e.u, m);
        gadget.add_edge(m, e.v);
        middle[e] = m;
    }

    const auto gd = bfs_apsp(gadget);
    const auto n = ng + 1;
    std::vector<std::uint32_t> entries(std::size_t{n} * n, 0);
    auto at = [&](std::uint32_t i, std::uint32_t j) -> std::uint32_t& { return entries[std::size_t{i - 1} * n + (j - 1)]; };
    for (std::uint32_t i = 1; i <= ng; ++i) {
        for (std::uint32_t j = 1; j <= ng; ++j)
            at(i, j) = gd(i, j).value();
        at(i, n) = at(n, i) = i <= nc ? 2 : 3;
    }

    return GadgetInstance{input, std::move(gadget), validated(RawMatrix(n, std::move(entries))),
                          std::move(subdivision), std::move(middle)};
}

Realisation realise_from_colouring(const GadgetInstance& inst, const Colouring& c)
{
    if (!is_proper(inst.source.graph(), c))
        throw ImproperColouring("colouring is not a proper " + std::to_string(c.k) + "-colouring of the input graph");

    const auto n = inst.dimension();
    SimpleGraph g(n + c.k, n);
    for (const auto& e : inst.gadget.edges())
        g.add_edge(e.u, e.v);
    for (std::uint32_t j = 1; j <= c.k; ++j)
        g.add_edge(n, n + j);
    for (std::uint32_t v = 1; v <= inst.source_vertices(); ++v)
        g.add_edge(v, n + c.of(v));

    auto r = Realisation::verify(std::move(g), inst.matrix);
    if (!r)
        throw std::logic_error("colouring construction failed to realise the gadget matrix");
    return std::move(*r);
}

Colouring extract_colouring(const GadgetInstance& inst, const Realisation& r, std::uint32_t k)
{
    const auto n = inst.dimension();
    const auto& g = r.graph();
    if (g.anchor_count() != n || !(r.matrix() == inst.matrix))
        throw MalformedRealisation("realisation is not of this gadget matrix");
    if (g.vertex_count() > n + k)
        throw MalformedRealisation("realisation uses more than " + std::to_string(k) + " extra vertices");

    Colouring c{k, std::vector<std::uint32_t>(inst.source_vertices(), 0)};
    for (std::uint32_t v = 1; v <= inst.source_vertices(); ++v) {
        const auto& nb = g.neighbours(v);
        auto it = std::upper_bound(nb.begin(), nb.end(), n);
        if (it == nb.end())
            throw MalformedRealisation("source vertex " + std::to_string(v) + " has no extra neighbour");
        c.colour[v - 1] = *it - n;
    }
    if (!is_proper(inst.source.graph(), c))
        throw MalformedRealisation("extracted colouring is not proper");
    return c;
}

namespace {

bool extend(const SimpleGraph& g, std::uint32_t v, std::uint32_t k, std::uint32_t highest, std::vector<std::uint32_t>& colour)
{
    if (v > g.vertex_count())
        return true;
    // A fresh colour is only ever tried as the next unused one.
    const auto limit = std::min(k, highest + 1);
    for (std::uint32_t c = 1; c <= limit; ++c) {
        const auto& nb = g.neighbours(v);
        if (std::any_of(nb.begin(), nb.end(), [&](std::uint32_t u) { return u < v && colour[u - 1] == c; }))
            continue;
        colour[v - 1] = c;
        if (extend(g, v + 1, k, std::max(highest, c), colour))
            return true;
    }
    colour[v - 1] = 0;
    return false;
}

} // namespace

std::optional<Colouring> find_colouring(const SimpleGraph& g, std::uint32_t k)
{
    if (k == 0)
        return std::nullopt;
    std::vector<std::uint32_t> colour(g.vertex_count(), 0);
    if (!extend(g, 1, k, 0, colour))
        return std::nullopt;
    return Colouring{k, std::move(colour)};
}

std::uint32_t chromatic_number_bruteforce(const InputGraph& g)
{
    const auto v = g.vertex_count();
    if (v > chromatic_vertex_limit)
        throw SearchSpaceTooLarge("chromatic number search limited to " + std::to_string(chromatic_vertex_limit) +
                                  " vertices");
    for (std::uint32_t k = 1; k <= v; ++k)
        if (find_colouring(g.graph(), k))
            return k;
    return v;
}

} // namespace cdmr
