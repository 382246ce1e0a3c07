#include "cdmr/generate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "cdmr/errors.hpp"

namespace cdmr {

std::uint64_t Rng::below(std::uint64_t bound)
{
    const auto max = std::numeric_limits<std::uint64_t>::max();
    const auto limit = max - (max % bound + 1) % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x > limit);
    return x % bound;
}

namespace {

SimpleGraph random_tree(Rng& rng, std::uint32_t vertices)
{
    SimpleGraph g(vertices, vertices);
    for (std::uint32_t v = 2; v <= vertices; ++v)
        g.add_edge(static_cast<std::uint32_t>(1 + rng.below(v - 1)), v);
    return g;
}

std::vector<std::uint32_t> shuffled(Rng& rng, std::uint32_t count)
{
    std::vector<std::uint32_t> order(count);
    std::iota(order.begin(), order.end(), 1u);
    for (std::uint32_t i = count; i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);
    return order;
}

DistanceMatrix distances_among(const SimpleGraph& g, const std::vector<std::uint32_t>& picks)
{
    const auto all = bfs_apsp(g);
    const auto n = static_cast<std::uint32_t>(picks.size());
    std::vector<std::uint32_t> entries(std::size_t{n} * n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            entries[std::size_t{i} * n + j] = all(picks[i], picks[j]).value();
    return validated(RawMatrix(n, std::move(entries)));
}

} // namespace

SimpleGraph random_connected_graph(Rng& rng, std::uint32_t vertices, std::uint32_t edge_percent)
{
    auto g = random_tree(rng, vertices);
    for (std::uint32_t u = 1; u <= vertices; ++u)
        for (std::uint32_t v = u + 1; v <= vertices; ++v)
            if (!g.has_edge(u, v) && rng.chance(edge_percent))
                g.add_edge(u, v);
    return g;
}

DistanceMatrix random_metric(Rng& rng, std::uint32_t vertices, std::uint32_t anchors, std::uint32_t edge_percent)
{
    auto g = random_connected_graph(rng, vertices, edge_percent);
    auto order = shuffled(rng, vertices);
    order.resize(anchors);
    return distances_among(g, order);
}

DistanceMatrix random_tree_metric(Rng& rng, std::uint32_t anchors, std::uint32_t vertices)
{
    auto g = random_tree(rng, vertices);
    auto order = shuffled(rng, vertices);
    order.resize(anchors);
    return distances_among(g, order);
}

SimpleGraph random_minimal_tree(Rng& rng, std::uint32_t max_vertices)
{
    const auto m = static_cast<std::uint32_t>(1 + rng.below(max_vertices));
    auto t = random_tree(rng, m);

    std::vector<bool> anchor(m + 1, false);
    for (std::uint32_t v = 1; v <= m; ++v)
        anchor[v] = t.degree(v) <= 2 || rng.chance(50);

    // Random labels: anchors take 1..n, Steiner vertices the rest.
    std::vector<std::uint32_t> anchors, steiner;
    for (auto v : shuffled(rng, m))
        (anchor[v] ? anchors : steiner).push_back(v);
    std::vector<std::uint32_t> label(m + 1, 0);
    std::uint32_t next = 1;
    for (auto v : anchors)
        label[v] = next++;
    for (auto v : steiner)
        label[v] = next++;

    SimpleGraph out(m, static_cast<std::uint32_t>(anchors.size()));
    for (const auto& e : t.edges())
        out.add_edge(label[e.u], label[e.v]);
    return out;
}

GenMode parse_gen_mode(std::string_view name)
{
    if (name == "random-metric")
        return GenMode::RandomMetric;
    if (name == "random-tree-metric")
        return GenMode::RandomTreeMetric;
    throw InvalidParams("unknown generator mode '" + std::string(name) + "'");
}

DistanceMatrix generate(std::uint64_t seed, GenMode mode, const GenParams& params)
{
    Rng rng(seed);
    if (params.anchors < 1)
        throw InvalidParams("--anchors must be at least 1");
    switch (mode) {
    case GenMode::RandomMetric: {
        const auto vertices = params.vertices ? params.vertices : params.anchors;
        if (params.anchors > vertices)
            throw InvalidParams("--anchors cannot exceed --vertices");
        if (params.edge_percent > 100)
            throw InvalidParams("--edge-percent must lie in [0, 100]");
        return random_metric(rng, vertices, params.anchors, params.edge_percent);
    }
    case GenMode::RandomTreeMetric: {
        const auto vertices = params.vertices ? params.vertices : 2 * params.anchors;
        if (params.anchors > vertices)
            throw InvalidParams("--anchors cannot exceed --vertices");
        return random_tree_metric(rng, params.anchors, vertices);
    }
    }
    throw InvalidParams("unknown generator mode");
}

} // namespace cdmr
