#pragma once

// Reference implementations used as test oracles. Each one is deliberately
// naive and shares no code with the library beyond its plain data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cdmr/graph.hpp"
#include "cdmr/matrix.hpp"
#include "cdmr/twosat.hpp"

namespace oracle {

using Pair = std::pair<std::uint32_t, std::uint32_t>;
using Hops = std::vector<std::vector<std::uint64_t>>;

inline constexpr std::uint64_t inf = std::numeric_limits<std::uint64_t>::max() / 4;

inline cdmr::RawMatrix raw(std::initializer_list<std::initializer_list<std::uint32_t>> rows)
{
    std::vector<std::uint32_t> entries;
    for (const auto& r : rows)
        entries.insert(entries.end(), r.begin(), r.end());
    return cdmr::RawMatrix(static_cast<std::uint32_t>(rows.size()), std::move(entries));
}

inline cdmr::DistanceMatrix metric(std::initializer_list<std::initializer_list<std::uint32_t>> rows)
{
    return cdmr::validated(raw(rows));
}

inline cdmr::DistanceMatrix metric(std::uint32_t n, const std::vector<std::uint32_t>& entries)
{
    return cdmr::validated(cdmr::RawMatrix(n, entries));
}

inline cdmr::DistanceMatrix uniform(std::uint32_t n, std::uint32_t value)
{
    std::vector<std::uint32_t> e(std::size_t{n} * n, value);
    for (std::uint32_t i = 0; i < n; ++i)
        e[std::size_t{i} * n + i] = 0;
    return metric(n, e);
}

// Weighted Floyd-Warshall on vertices 1..v (index 0 unused).
inline Hops floyd(std::uint32_t v, const std::vector<std::pair<Pair, std::uint64_t>>& edges)
{
    Hops d(v + 1, std::vector<std::uint64_t>(v + 1, inf));
    for (std::uint32_t i = 1; i <= v; ++i)
        d[i][i] = 0;
    for (const auto& [e, w] : edges) {
        d[e.first][e.second] = std::min(d[e.first][e.second], w);
        d[e.second][e.first] = std::min(d[e.second][e.first], w);
    }
    for (std::uint32_t k = 1; k <= v; ++k)
        for (std::uint32_t i = 1; i <= v; ++i)
            for (std::uint32_t j = 1; j <= v; ++j)
                if (d[i][k] + d[k][j] < d[i][j])
                    d[i][j] = d[i][k] + d[k][j];
    return d;
}

inline Hops hops(std::uint32_t v, const std::vector<Pair>& edges)
{
    std::vector<std::pair<Pair, std::uint64_t>> w;
    for (const auto& e : edges)
        w.push_back({e, 1});
    return floyd(v, w);
}

inline std::vector<Pair> edge_list(const cdmr::SimpleGraph& g)
{
    std::vector<Pair> out;
    for (std::uint32_t u = 1; u <= g.vertex_count(); ++u)
        for (auto v : g.neighbours(u))
            if (u < v)
                out.push_back({u, v});
    return out;
}

inline Hops hops(const cdmr::SimpleGraph& g) { return hops(g.vertex_count(), edge_list(g)); }

inline bool realises(std::uint32_t v, const std::vector<Pair>& edges, const cdmr::DistanceMatrix& d)
{
    const auto h = hops(v, edges);
    for (std::uint32_t i = 1; i <= d.size(); ++i)
        for (std::uint32_t j = 1; j <= d.size(); ++j)
            if (h[i][j] != d(i, j))
                return false;
    return true;
}

inline bool realises(const cdmr::SimpleGraph& g, const cdmr::DistanceMatrix& d)
{
    return g.anchor_count() == d.size() && realises(g.vertex_count(), edge_list(g), d);
}

// Realisable on exactly n + k vertices? Flat enumeration of every edge set
// touching the k extra vertices, anchors joined exactly where D = 1.
inline bool realisable_with(const cdmr::DistanceMatrix& d, std::uint32_t k)
{
    const auto n = d.size();
    std::vector<Pair> fixed, free;
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = i + 1; j <= n; ++j)
            if (d(i, j) == 1)
                fixed.push_back({i, j});
    for (std::uint32_t w = n + 1; w <= n + k; ++w)
        for (std::uint32_t u = 1; u < w; ++u)
            free.push_back({u, w});
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
        auto edges = fixed;
        for (std::size_t b = 0; b < free.size(); ++b)
            if (mask >> b & 1)
                edges.push_back(free[b]);
        if (realises(n + k, edges, d))
            return true;
    }
    return false;
}

// Fewest extra vertices up to `limit`, or nullopt.
inline std::optional<std::uint32_t> min_extra(const cdmr::DistanceMatrix& d, std::uint32_t limit)
{
    for (std::uint32_t k = 0; k <= limit; ++k)
        if (realisable_with(d, k))
            return k;
    return std::nullopt;
}

inline std::vector<cdmr::Assignment> models(const cdmr::TwoSatInstance& inst)
{
    std::vector<cdmr::Assignment> out;
    const auto v = inst.variable_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v); ++mask) {
        cdmr::Assignment a(v);
        for (std::uint32_t i = 0; i < v; ++i)
            a[i] = mask >> i & 1;
        bool ok = true;
        for (const auto& [x, y] : inst.clauses())
            ok = ok && (a[x.variable - 1] != x.negated || a[y.variable - 1] != y.negated);
        if (ok)
            out.push_back(std::move(a));
    }
    return out;
}

inline bool satisfiable(const cdmr::TwoSatInstance& inst) { return !models(inst).empty(); }

// Smallest k admitting a proper colouring, by trying all k^v assignments.
inline std::uint32_t chromatic_number(std::uint32_t v, const std::vector<Pair>& edges)
{
    for (std::uint32_t k = 1;; ++k) {
        std::vector<std::uint32_t> c(v + 1, 0);
        std::uint64_t total = 1;
        for (std::uint32_t i = 0; i < v; ++i)
            total *= k;
        for (std::uint64_t code = 0; code < total; ++code) {
            auto x = code;
            for (std::uint32_t i = 1; i <= v; ++i) {
                c[i] = static_cast<std::uint32_t>(x % k);
                x /= k;
            }
            if (std::none_of(edges.begin(), edges.end(), [&](const Pair& e) { return c[e.first] == c[e.second]; }))
                return k;
        }
    }
}

// All connected graphs on 1..max_v vertices, one per isomorphism class.
inline std::vector<std::pair<std::uint32_t, std::vector<Pair>>> connected_graphs(std::uint32_t max_v)
{
    std::vector<std::pair<std::uint32_t, std::vector<Pair>>> out;
    for (std::uint32_t v = 1; v <= max_v; ++v) {
        std::vector<Pair> slots;
        for (std::uint32_t a = 1; a <= v; ++a)
            for (std::uint32_t b = a + 1; b <= v; ++b)
                slots.push_back({a, b});
        std::set<std::vector<bool>> seen;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
            std::vector<Pair> edges;
            for (std::size_t s = 0; s < slots.size(); ++s)
                if (mask >> s & 1)
                    edges.push_back(slots[s]);
            const auto h = hops(v, edges);
            bool connected = true;
            for (std::uint32_t i = 1; i <= v; ++i)
                connected = connected && h[1][i] < inf;
            if (!connected)
                continue;
            std::vector<std::uint32_t> perm(v);
            std::iota(perm.begin(), perm.end(), 1u);
            std::vector<bool> best;
            do {
                std::vector<bool> code(slots.size(), false);
                for (const auto& e : edges) {
                    auto a = perm[e.first - 1], b = perm[e.second - 1];
                    if (a > b)
                        std::swap(a, b);
                    code[std::find(slots.begin(), slots.end(), Pair{a, b}) - slots.begin()] = true;
                }
                if (best.empty() || code < best)
                    best = code;
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (seen.insert(best).second)
                out.push_back({v, edges});
        }
    }
    return out;
}

// Fewest vertices of a tree realising d, by decoding every Prufer sequence on
// up to max_v labelled vertices (anchors are 1..n).
inline std::optional<std::uint32_t> min_tree_vertices(const cdmr::DistanceMatrix& d, std::uint32_t max_v)
{
    for (std::uint32_t m = std::max<std::uint32_t>(d.size(), 1); m <= max_v; ++m) {
        if (m <= 2) {
            std::vector<Pair> edges;
            if (m == 2)
                edges.push_back({1, 2});
            if (realises(m, edges, d))
                return m;
            continue;
        }
        std::vector<std::uint32_t> seq(m - 2, 1);
        while (true) {
            std::vector<std::uint32_t> degree(m + 1, 1);
            for (auto x : seq)
                ++degree[x];
            std::vector<Pair> edges;
            for (auto x : seq) {
                std::uint32_t leaf = 1;
                while (degree[leaf] != 1)
                    ++leaf;
                edges.push_back({std::min(leaf, x), std::max(leaf, x)});
                --degree[leaf];
                --degree[x];
            }
            std::vector<std::uint32_t> last;
            for (std::uint32_t u = 1; u <= m; ++u)
                if (degree[u] == 1)
                    last.push_back(u);
            edges.push_back({last[0], last[1]});
            if (realises(m, edges, d))
                return m;
            std::size_t i = 0;
            while (i < seq.size() && seq[i] == m)
                seq[i++] = 1;
            if (i == seq.size())
                break;
            ++seq[i];
        }
    }
    return std::nullopt;
}

// Canonical string of a tree rooted at anchor 1 in which anchors keep their
// labels and every other vertex is anonymous. Equal strings mean an
// isomorphism fixing every anchor.
inline std::string anchored_tree_code(const cdmr::SimpleGraph& t)
{
    std::function<std::string(std::uint32_t, std::uint32_t)> code = [&](std::uint32_t v, std::uint32_t parent) {
        std::vector<std::string> kids;
        for (auto w : t.neighbours(v))
            if (w != parent)
                kids.push_back(code(w, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "(" + (t.is_anchor(v) ? std::to_string(v) : std::string("*"));
        for (const auto& k : kids)
            s += k;
        return s + ")";
    };
    return code(1, 0);
}

} // namespace oracle
