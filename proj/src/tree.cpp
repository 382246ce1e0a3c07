#include "cdmr/tree.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>

namespace cdmr {

namespace {

using Adjacency = std::vector<std::map<std::uint32_t, std::uint32_t>>; // 0-based, neighbour -> doubled weight

Adjacency adjacency_of(std::uint32_t vertex_count, const std::vector<TreeEdge>& edges)
{
    Adjacency adj(vertex_count);
    for (const auto& e : edges) {
        adj[e.u - 1][e.v - 1] = e.doubled_weight;
        adj[e.v - 1][e.u - 1] = e.doubled_weight;
    }
    return adj;
}

std::vector<std::uint64_t> path_lengths_from(const Adjacency& adj, std::uint32_t source)
{
    constexpr auto unseen = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> dist(adj.size(), unseen);
    std::vector<std::uint32_t> stack{source};
    dist[source] = 0;
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (const auto& [v, w] : adj[u])
            if (dist[v] == unseen) {
                dist[v] = dist[u] + w;
                stack.push_back(v);
            }
    }
    return dist;
}

} // namespace

WeightedTree::WeightedTree(std::uint32_t vertex_count, std::uint32_t anchor_count, std::vector<TreeEdge> edges)
    : vertex_count_(vertex_count), anchor_count_(anchor_count), edges_(std::move(edges))
{
    if (anchor_count_ < 1 || anchor_count_ > vertex_count_)
        throw std::invalid_argument("anchor count must lie in [1, vertex count]");
    if (edges_.size() + 1 != vertex_count_)
        throw std::invalid_argument("a tree on V vertices has V - 1 edges");
    for (auto& e : edges_) {
        if (e.u == e.v || e.u < 1 || e.v < 1 || e.u > vertex_count_ || e.v > vertex_count_)
            throw std::invalid_argument("tree edge endpoint invalid");
        if (e.doubled_weight == 0)
            throw std::invalid_argument("tree edges must have positive weight");
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    auto reach = path_lengths_from(adjacency_of(vertex_count_, edges_), 0);
    if (std::any_of(reach.begin(), reach.end(),
                    [](std::uint64_t x) { return x == std::numeric_limits<std::uint64_t>::max(); }))
        throw std::invalid_argument("tree edges do not connect all vertices");
}

std::uint32_t WeightedTree::degree(std::uint32_t v) const
{
    return static_cast<std::uint32_t>(
        std::count_if(edges_.begin(), edges_.end(), [v](const TreeEdge& e) { return e.u == v || e.v == v; }));
}

std::vector<std::uint64_t> WeightedTree::anchor_path_lengths() const
{
    const auto adj = adjacency_of(vertex_count_, edges_);
    const auto n = anchor_count_;
    std::vector<std::uint64_t> out(std::size_t{n} * n);
    for (std::uint32_t s = 0; s < n; ++s) {
        auto row = path_lengths_from(adj, s);
        std::copy(row.begin(), row.begin() + n, out.begin() + std::size_t{s} * n);
    }
    return out;
}

const char* to_string(ZareckiiViolation::Kind kind) noexcept
{
    switch (kind) {
    case ZareckiiViolation::Kind::ParityTriple: return "ParityTriple";
    case ZareckiiViolation::Kind::FourPoint: return "FourPoint";
    case ZareckiiViolation::Kind::Metric: return "Metric";
    }
    return "?";
}

ZareckiiReport check_zareckii(const DistanceMatrix& d)
{
    const auto n = d.size();
    using Kind = ZareckiiViolation::Kind;

    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = i + 1; j <= n; ++j)
            for (std::uint32_t k = j + 1; k <= n; ++k)
                if ((std::uint64_t{d(i, j)} + d(j, k) + d(i, k)) % 2 != 0)
                    return {false, ZareckiiViolation{Kind::ParityTriple, {i, j, k, 0}}};

    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = i + 1; j <= n; ++j)
            for (std::uint32_t k = j + 1; k <= n; ++k)
                for (std::uint32_t l = k + 1; l <= n; ++l) {
                    const std::uint64_t a = std::uint64_t{d(i, j)} + d(k, l);
                    const std::uint64_t b = std::uint64_t{d(i, k)} + d(j, l);
                    const std::uint64_t c = std::uint64_t{d(i, l)} + d(j, k);
                    const auto top = std::max({a, b, c});
                    if ((a == top) + (b == top) + (c == top) < 2)
                        return {false, ZareckiiViolation{Kind::FourPoint, {i, j, k, l}}};
                }
    return {};
}

WeightedTree canonical_transform(const WeightedTree& t)
{
    const auto n = t.anchor_count();
    auto adj = adjacency_of(t.vertex_count(), t.edges());
    std::vector<bool> alive(t.vertex_count(), true);

    std::deque<std::uint32_t> pending;
    for (std::uint32_t v = n; v < t.vertex_count(); ++v)
        pending.push_back(v);

    while (!pending.empty()) {
        auto v = pending.front();
        pending.pop_front();
        if (!alive[v] || adj[v].size() > 2)
            continue;
        if (adj[v].size() <= 1) {
            for (const auto& [u, w] : adj[v]) {
                adj[u].erase(v);
                if (u >= n)
                    pending.push_back(u);
            }
            adj[v].clear();
            alive[v] = false;
        } else {
            auto [a, wa] = *adj[v].begin();
            auto [b, wb] = *std::next(adj[v].begin());
            adj[a].erase(v);
            adj[b].erase(v);
            adj[a][b] = wa + wb;
            adj[b][a] = wa + wb;
            adj[v].clear();
            alive[v] = false;
        }
    }

    std::vector<std::uint32_t> renumber(t.vertex_count(), 0);
    std::uint32_t next = 1;
    for (std::uint32_t v = 0; v < t.vertex_count(); ++v)
        if (alive[v])
            renumber[v] = next++;

    std::vector<TreeEdge> edges;
    for (std::uint32_t u = 0; u < t.vertex_count(); ++u)
        for (const auto& [v, w] : adj[u])
            if (u < v)
                edges.push_back({renumber[u], renumber[v], w});
    return WeightedTree(next - 1, n, std::move(edges));
}

namespace {

// Growing weighted tree used during insertion. Vertex ids are creation order.
class TreeBuilder {
public:
    explicit TreeBuilder(std::uint32_t n) : anchor_vertex_(n, none) {}

    std::uint32_t add_vertex()
    {
        adj_.emplace_back();
        anchor_of_.push_back(none);
        return static_cast<std::uint32_t>(adj_.size() - 1);
    }

    void link(std::uint32_t a, std::uint32_t b, std::uint64_t w)
    {
        adj_[a][b] = w;
        adj_[b][a] = w;
    }

    void place_anchor(std::uint32_t anchor, std::uint32_t vertex)
    {
        anchor_vertex_[anchor] = vertex;
        anchor_of_[vertex] = anchor;
    }

    std::uint32_t vertex_of(std::uint32_t anchor) const { return anchor_vertex_[anchor]; }
    bool hosts_anchor(std::uint32_t vertex) const { return anchor_of_[vertex] != none; }

    /// Vertices on the unique path from a to b, inclusive.
    std::vector<std::uint32_t> path(std::uint32_t a, std::uint32_t b) const
    {
        std::vector<std::uint32_t> parent(adj_.size(), none);
        std::vector<std::uint32_t> stack{a};
        parent[a] = a;
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (const auto& [v, w] : adj_[u])
                if (parent[v] == none) {
                    parent[v] = u;
                    stack.push_back(v);
                }
        }
        std::vector<std::uint32_t> out{b};
        while (out.back() != a)
            out.push_back(parent[out.back()]);
        std::reverse(out.begin(), out.end());
        return out;
    }

    std::uint64_t weight(std::uint32_t a, std::uint32_t b) const { return adj_[a].at(b); }

    void split(std::uint32_t a, std::uint32_t b, std::uint32_t mid, std::uint64_t wa)
    {
        const auto w = weight(a, b);
        adj_[a].erase(b);
        adj_[b].erase(a);
        link(a, mid, wa);
        link(mid, b, w - wa);
    }

    /// Anchors become vertices 1..n, Steiner vertices follow in creation order.
    std::optional<WeightedTree> finish() const
    {
        const auto n = static_cast<std::uint32_t>(anchor_vertex_.size());
        std::vector<std::uint32_t> label(adj_.size(), 0);
        std::uint32_t next = n + 1;
        for (std::uint32_t v = 0; v < adj_.size(); ++v)
            label[v] = hosts_anchor(v) ? anchor_of_[v] + 1 : next++;
        std::vector<TreeEdge> edges;
        for (std::uint32_t u = 0; u < adj_.size(); ++u)
            for (const auto& [v, w] : adj_[u])
                if (u < v) {
                    if (w > std::numeric_limits<std::uint32_t>::max())
                        return std::nullopt;
                    edges.push_back({label[u], label[v], static_cast<std::uint32_t>(w)});
                }
        return WeightedTree(static_cast<std::uint32_t>(adj_.size()), n, std::move(edges));
    }

private:
    static constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();

    std::vector<std::map<std::uint32_t, std::uint64_t>> adj_;
    std::vector<std::uint32_t> anchor_of_;
    std::vector<std::uint32_t> anchor_vertex_;
};

// Inserts anchor i (0-based) into a tree holding anchors 0..i-1. Returns false
// when the matrix cannot be a tree metric.
bool insert_anchor(TreeBuilder& tree, const DistanceMatrix& d, std::uint32_t i)
{
    auto D = [&](std::uint32_t a, std::uint32_t b) { return std::int64_t{d(a + 1, b + 1)}; };

    std::uint32_t best_j = 0, best_k = 1;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::uint32_t j = 0; j < i; ++j)
        for (std::uint32_t k = j + 1; k < i; ++k) {
            const auto g = D(i, j) + D(i, k) - D(j, k);
            if (g < best) {
                best = g;
                best_j = j;
                best_k = k;
            }
        }
    const auto attach = best;                                        // doubled distance from i to the j-k path
    const auto along = D(i, best_j) + D(best_j, best_k) - D(i, best_k); // doubled offset of the foot from j
    if (attach < 0 || along < 0)
        return false;

    auto route = tree.path(tree.vertex_of(best_j), tree.vertex_of(best_k));
    std::uint32_t foot = route.front();
    std::int64_t travelled = 0;
    bool found = along == 0;
    for (std::size_t s = 0; !found && s + 1 < route.size(); ++s) {
        const auto a = route[s], b = route[s + 1];
        const auto w = static_cast<std::int64_t>(tree.weight(a, b));
        if (along == travelled + w) {
            foot = b;
            found = true;
        } else if (along < travelled + w) {
            foot = tree.add_vertex();
            tree.split(a, b, foot, static_cast<std::uint64_t>(along - travelled));
            found = true;
        }
        travelled += w;
    }
    if (!found)
        return false;

    if (attach == 0) {
        if (tree.hosts_anchor(foot))
            return false;
        tree.place_anchor(i, foot);
        return true;
    }
    auto v = tree.add_vertex();
    tree.place_anchor(i, v);
    tree.link(foot, v, static_cast<std::uint64_t>(attach));
    return true;
}

} // namespace

std::optional<WeightedTree> build_weighted_tree(const DistanceMatrix& d)
{
    const auto n = d.size();
    TreeBuilder tree(n);
    tree.place_anchor(0, tree.add_vertex());
    if (n >= 2) {
        auto v = tree.add_vertex();
        tree.place_anchor(1, v);
        tree.link(tree.vertex_of(0), v, 2 * std::uint64_t{d(1, 2)});
    }
    for (std::uint32_t i = 2; i < n; ++i)
        if (!insert_anchor(tree, d, i))
            return std::nullopt;

    auto raw = tree.finish();
    if (!raw)
        return std::nullopt;
    auto canonical = canonical_transform(*raw);

    const auto lengths = canonical.anchor_path_lengths();
    for (std::uint32_t a = 1; a <= n; ++a)
        for (std::uint32_t b = 1; b <= n; ++b)
            if (lengths[std::size_t{a - 1} * n + (b - 1)] != 2 * std::uint64_t{d(a, b)})
                return std::nullopt;
    return canonical;
}

SimpleGraph expand_tree(const WeightedTree& t)
{
    std::uint64_t total = t.vertex_count();
    for (const auto& e : t.edges()) {
        if (e.doubled_weight % 2 != 0)
            throw std::invalid_argument("tree edge has a non-integer weight");
        total += e.doubled_weight / 2 - 1;
    }
    SimpleGraph g(static_cast<std::uint32_t>(total), t.anchor_count());
    std::uint32_t next = t.vertex_count() + 1;
    for (const auto& e : t.edges()) {
        std::uint32_t prev = e.u;
        for (std::uint32_t step = 1; step < e.doubled_weight / 2; ++step) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, e.v);
    }
    return g;
}

std::optional<Realisation> solve_tree(const DistanceMatrix& d)
{
    auto tree = build_weighted_tree(d);
    if (!tree)
        return std::nullopt;
    if (std::any_of(tree->edges().begin(), tree->edges().end(),
                    [](const TreeEdge& e) { return e.doubled_weight % 2 != 0; }))
        return std::nullopt;
    return Realisation::verify(expand_tree(*tree), d);
}

} // namespace cdmr
