#include "cdmr/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace cdmr {

ExtendedDistances::ExtendedDistances(std::uint32_t n) : n_(n), entries_(std::size_t{n} * n, Distance::infinity())
{
    for (std::uint32_t i = 1; i <= n; ++i)
        set(i, i, Distance(0));
}

bool ExtendedDistances::matches(const DistanceMatrix& d) const
{
    if (d.size() != n_)
        return false;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (!(entries_[k] == d.entries()[k]))
            return false;
    return true;
}

SimpleGraph::SimpleGraph(std::uint32_t vertex_count, std::uint32_t anchor_count)
    : anchor_count_(anchor_count), adjacency_(vertex_count)
{
    if (anchor_count < 1 || anchor_count > vertex_count)
        throw std::invalid_argument("anchor count must lie in [1, vertex count]");
}

bool SimpleGraph::add_edge(std::uint32_t u, std::uint32_t v)
{
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 1 || v < 1 || u > vertex_count() || v > vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    auto& nu = adjacency_[u - 1];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        return false;
    nu.insert(it, v);
    auto& nv = adjacency_[v - 1];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
    return true;
}

bool SimpleGraph::has_edge(std::uint32_t u, std::uint32_t v) const
{
    if (u < 1 || v < 1 || u > vertex_count() || v > vertex_count())
        return false;
    return std::binary_search(adjacency_[u - 1].begin(), adjacency_[u - 1].end(), v);
}

std::vector<Edge> SimpleGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::uint32_t u = 1; u <= vertex_count(); ++u)
        for (std::uint32_t v : adjacency_[u - 1])
            if (u < v)
                out.push_back({u, v});
    return out;
}

std::optional<Realisation> Realisation::verify(SimpleGraph graph, DistanceMatrix matrix)
{
    if (!verify_realisation(graph, matrix))
        return std::nullopt;
    return Realisation(std::move(graph), std::move(matrix));
}

namespace {

std::vector<Distance> bfs_from(const SimpleGraph& g, std::uint32_t source)
{
    std::vector<Distance> dist(g.vertex_count(), Distance::infinity());
    std::queue<std::uint32_t> frontier;
    dist[source - 1] = Distance(0);
    frontier.push(source);
    while (!frontier.empty()) {
        auto u = frontier.front();
        frontier.pop();
        auto next = Distance(dist[u - 1].value() + 1);
        for (auto v : g.neighbours(u)) {
            if (!dist[v - 1].is_finite()) {
                dist[v - 1] = next;
                frontier.push(v);
            }
        }
    }
    return dist;
}

} // namespace

ExtendedDistances bfs_apsp(const SimpleGraph& g)
{
    const auto m = g.vertex_count();
    ExtendedDistances out(m);
    for (std::uint32_t s = 1; s <= m; ++s) {
        auto row = bfs_from(g, s);
        for (std::uint32_t t = 1; t <= m; ++t)
            out.set(s, t, row[t - 1]);
    }
    return out;
}

ExtendedDistances anchor_distances(const SimpleGraph& g)
{
    const auto n = g.anchor_count();
    ExtendedDistances out(n);
    for (std::uint32_t s = 1; s <= n; ++s) {
        auto row = bfs_from(g, s);
        for (std::uint32_t t = 1; t <= n; ++t)
            out.set(s, t, row[t - 1]);
    }
    return out;
}

SimpleGraph unit_graph(const DistanceMatrix& d)
{
    const auto n = d.size();
    SimpleGraph g(n, n);
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = i + 1; j <= n; ++j)
            if (d(i, j) == 1)
                g.add_edge(i, j);
    return g;
}

WeightedSkeleton q_skeleton(const DistanceMatrix& d, std::uint32_t q)
{
    if (q < 1)
        throw std::invalid_argument("skeleton threshold q must be positive");
    WeightedSkeleton s{d.size(), q, {}};
    for (std::uint32_t i = 1; i <= d.size(); ++i)
        for (std::uint32_t j = i + 1; j <= d.size(); ++j)
            if (d(i, j) <= q)
                s.edges.push_back({i, j, d(i, j)});
    return s;
}

ExtendedDistances skeleton_distances(const WeightedSkeleton& s)
{
    ExtendedDistances dist(s.n);
    for (const auto& e : s.edges) {
        Distance w(e.weight);
        if (w < dist(e.u, e.v)) {
            dist.set(e.u, e.v, w);
            dist.set(e.v, e.u, w);
        }
    }
    // Floyd-Warshall; n is the matrix dimension, small in practice.
    for (std::uint32_t k = 1; k <= s.n; ++k)
        for (std::uint32_t i = 1; i <= s.n; ++i) {
            auto dik = dist(i, k);
            if (!dik.is_finite())
                continue;
            for (std::uint32_t j = 1; j <= s.n; ++j) {
                auto via = dik + dist(k, j);
                if (via < dist(i, j))
                    dist.set(i, j, via);
            }
        }
    return dist;
}

std::uint32_t q_zero(const DistanceMatrix& d)
{
    const auto m = max_entry(d);
    for (std::uint32_t q = 1; q < m; ++q)
        if (skeleton_distances(q_skeleton(d, q)).matches(d))
            return q;
    // D^(m) = D always holds; m = 0 only for the 1x1 matrix.
    return std::max<std::uint32_t>(m, 1);
}

SimpleGraph expand_elementary_paths(const WeightedSkeleton& s)
{
    std::uint64_t total = s.n;
    for (const auto& e : s.edges)
        total += e.weight - 1;
    SimpleGraph g(static_cast<std::uint32_t>(total), s.n);

    std::uint32_t next = s.n + 1;
    for (const auto& e : s.edges) {
        std::uint32_t prev = e.u;
        for (std::uint32_t step = 1; step < e.weight; ++step) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, e.v);
    }
    return g;
}

bool verify_realisation(const SimpleGraph& g, const DistanceMatrix& d)
{
    if (g.anchor_count() != d.size())
        return false;
    return anchor_distances(g).matches(d);
}

SimpleGraph anchor_induced_subgraph(const SimpleGraph& g)
{
    const auto n = g.anchor_count();
    SimpleGraph out(n, n);
    for (const auto& e : g.edges())
        if (e.v <= n)
            out.add_edge(e.u, e.v);
    return out;
}

bool is_connected(const SimpleGraph& g)
{
    auto row = bfs_from(g, 1);
    return std::all_of(row.begin(), row.end(), [](Distance x) { return x.is_finite(); });
}

} // namespace cdmr
