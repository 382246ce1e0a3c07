#include "cdmr/solvers.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "cdmr/errors.hpp"

namespace cdmr {

Bounds bounds(const DistanceMatrix& d)
{
    const auto n = d.size();
    const auto q0 = q_zero(d);
    std::uint32_t upper = n;
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = i + 1; j <= n; ++j)
            if (d(i, j) >= 2 && d(i, j) <= q0)
                upper += d(i, j) - 1;
    return {q0, n + q0 - 1, upper};
}

namespace {

// Anything beyond `threshold`, including unreachable.
bool exceeds(Distance x, std::uint32_t threshold) { return x > Distance(threshold); }

} // namespace

TwoSatInstance build_phi1(const DistanceMatrix& d)
{
    const auto n = d.size();
    const auto unit = anchor_distances(unit_graph(d));
    TwoSatInstance inst(n);
    auto x = [n](std::uint32_t i) { return edge_variable(n, i, 1); };

    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = i + 1; j <= n; ++j) {
            if (d(i, j) > 2) {
                inst.add_clause(Literal::neg(x(i)), Literal::neg(x(j)));
            } else if (d(i, j) == 2 && exceeds(unit(i, j), 2)) {
                inst.add_unit(Literal::pos(x(i)));
                inst.add_unit(Literal::pos(x(j)));
            }
        }
    return inst;
}

TwoSatInstance build_phi2(const DistanceMatrix& d)
{
    const auto n = d.size();
    const auto unit = anchor_distances(unit_graph(d));
    TwoSatInstance inst(2 * n);
    auto x = [n](std::uint32_t i, std::uint32_t j) { return edge_variable(n, i, j); };

    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = i + 1; j <= n; ++j) {
            if (d(i, j) > 2) {
                inst.add_clause(Literal::neg(x(i, 1)), Literal::neg(x(j, 1)));
                inst.add_clause(Literal::neg(x(i, 2)), Literal::neg(x(j, 2)));
            } else if (d(i, j) == 2 && exceeds(unit(i, j), 2)) {
                // (x_i1 & x_j1) | (x_i2 & x_j2), distributed
                inst.add_clause(Literal::pos(x(i, 1)), Literal::pos(x(i, 2)));
                inst.add_clause(Literal::pos(x(i, 1)), Literal::pos(x(j, 2)));
                inst.add_clause(Literal::pos(x(j, 1)), Literal::pos(x(i, 2)));
                inst.add_clause(Literal::pos(x(j, 1)), Literal::pos(x(j, 2)));
            }
        }
    return inst;
}

TwoSatInstance build_phi2_prime(const DistanceMatrix& d)
{
    const auto n = d.size();
    TwoSatInstance inst = build_phi2(d);
    const auto two_skeleton = skeleton_distances(q_skeleton(d, 2));
    auto x = [n](std::uint32_t i, std::uint32_t j) { return edge_variable(n, i, j); };

    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = i + 1; j <= n; ++j) {
            if (d(i, j) > 3) {
                inst.add_clause(Literal::neg(x(i, 1)), Literal::neg(x(j, 2)));
                inst.add_clause(Literal::neg(x(i, 2)), Literal::neg(x(j, 1)));
            } else if (d(i, j) == 3 && exceeds(two_skeleton(i, j), 3)) {
                // (x_i1 & x_j2) | (x_i2 & x_j1), distributed
                inst.add_clause(Literal::pos(x(i, 1)), Literal::pos(x(i, 2)));
                inst.add_clause(Literal::pos(x(j, 1)), Literal::pos(x(j, 2)));
                inst.add_clause(Literal::pos(x(i, 1)), Literal::pos(x(j, 1)));
                inst.add_clause(Literal::pos(x(i, 2)), Literal::pos(x(j, 2)));
            }
        }
    return inst;
}

SimpleGraph graph_from_assignment(const DistanceMatrix& d, const Assignment& a, std::uint32_t extras,
                                  bool link_extras)
{
    const auto n = d.size();
    if (a.size() != std::size_t{n} * extras)
        throw std::invalid_argument("assignment length does not match n * extras");
    SimpleGraph g(n + extras, n);
    for (const auto& e : unit_graph(d).edges())
        g.add_edge(e.u, e.v);
    for (std::uint32_t j = 1; j <= extras; ++j)
        for (std::uint32_t i = 1; i <= n; ++i)
            if (a[edge_variable(n, i, j) - 1])
                g.add_edge(i, n + j);
    if (link_extras && extras >= 2)
        g.add_edge(n + 1, n + 2);
    return g;
}

SolveOutcome solve_k0(const DistanceMatrix& d)
{
    if (auto r = Realisation::verify(unit_graph(d), d))
        return SolveOutcome::yes(std::move(*r));
    return SolveOutcome::no();
}

namespace {

std::optional<Realisation> try_formula(const DistanceMatrix& d, const TwoSatInstance& phi, std::uint32_t extras,
                                       bool link_extras)
{
    auto model = solve(phi);
    if (!model)
        return std::nullopt;
    return Realisation::verify(graph_from_assignment(d, *model, extras, link_extras), d);
}

} // namespace

SolveOutcome solve_k1(const DistanceMatrix& d)
{
    if (auto k0 = solve_k0(d); k0.answer == Answer::Yes)
        return k0;
    if (auto r = try_formula(d, build_phi1(d), 1, false))
        return SolveOutcome::yes(std::move(*r));
    return SolveOutcome::no();
}

SolveOutcome solve_k2(const DistanceMatrix& d)
{
    if (auto k1 = solve_k1(d); k1.answer == Answer::Yes)
        return k1;
    if (auto r = try_formula(d, build_phi2(d), 2, false))
        return SolveOutcome::yes(std::move(*r));
    if (auto r = try_formula(d, build_phi2_prime(d), 2, true))
        return SolveOutcome::yes(std::move(*r));
    return SolveOutcome::no();
}

SolveOutcome solve_k(const DistanceMatrix& d, std::uint32_t k)
{
    switch (k) {
    case 0: return solve_k0(d);
    case 1: return solve_k1(d);
    case 2: return solve_k2(d);
    default: throw std::invalid_argument("polynomial solver only covers k in {0, 1, 2}");
    }
}

std::uint64_t free_edge_count(std::uint32_t n, std::uint32_t k) noexcept
{
    return std::uint64_t{n} * k + (k == 0 ? 0 : std::uint64_t{k} * (k - 1) / 2);
}

namespace {

using Mask = std::uint64_t;

// Branch-and-bound over the candidate edges, highest bit first and 0 before
// 1, so the first leaf reached is the smallest verifying bitmask. Two bounds
// prune: the graph of edges fixed so far can only lose distance as edges are
// added, and the graph with every undecided edge present can only gain.
class ExactSearch {
public:
    ExactSearch(const DistanceMatrix& d, std::uint32_t k) : n_(d.size()), m_(d.size() + k)
    {
        for (std::uint32_t w = n_; w < m_; ++w)
            for (std::uint32_t u = 0; u < w; ++u)
                candidates_.push_back({u, w});

        base_.assign(m_, 0);
        for (std::uint32_t i = 0; i < n_; ++i)
            for (std::uint32_t j = 0; j < n_; ++j)
                if (i != j && d(i + 1, j + 1) == 1)
                    base_[i] |= Mask{1} << j;

        max_level_ = max_entry(d);
        within_.assign(std::size_t{n_} * (max_level_ + 1), 0);
        for (std::uint32_t s = 0; s < n_; ++s)
            for (std::uint32_t t = 0; t < n_; ++t)
                for (std::uint32_t level = d(s + 1, t + 1); level <= max_level_; ++level)
                    within_[s * (max_level_ + 1) + level] |= Mask{1} << t;
        anchors_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    }

    std::optional<Mask> run()
    {
        lower_ = base_;
        upper_ = base_;
        for (const auto& c : candidates_)
            link(upper_, c);
        if (!lower_ok(lower_) || !upper_ok(upper_))
            return std::nullopt;
        chosen_ = 0;
        if (descend(static_cast<int>(candidates_.size()) - 1))
            return chosen_;
        return std::nullopt;
    }

private:
    struct Candidate {
        std::uint32_t u, w; // 0-based
    };

    static void link(std::vector<Mask>& adj, Candidate c)
    {
        adj[c.u] |= Mask{1} << c.w;
        adj[c.w] |= Mask{1} << c.u;
    }
    static void unlink(std::vector<Mask>& adj, Candidate c)
    {
        adj[c.u] &= ~(Mask{1} << c.w);
        adj[c.w] &= ~(Mask{1} << c.u);
    }

    Mask within(std::uint32_t s, std::uint32_t level) const
    {
        return within_[s * (max_level_ + 1) + std::min(level, max_level_)];
    }

    // Every anchor reached within `level` hops must have D <= level.
    bool lower_ok(const std::vector<Mask>& adj) const
    {
        for (std::uint32_t s = 0; s < n_; ++s) {
            Mask seen = Mask{1} << s, frontier = seen;
            for (std::uint32_t level = 1; frontier && level <= max_level_; ++level) {
                frontier = expand(adj, frontier) & ~seen;
                seen |= frontier;
                if ((seen & anchors_) & ~within(s, level))
                    return false;
            }
        }
        return true;
    }

    // Every anchor with D <= level must be reached within `level` hops.
    bool upper_ok(const std::vector<Mask>& adj) const
    {
        for (std::uint32_t s = 0; s < n_; ++s) {
            Mask seen = Mask{1} << s, frontier = seen;
            for (std::uint32_t level = 1; level <= max_level_; ++level) {
                frontier = expand(adj, frontier) & ~seen;
                seen |= frontier;
                if (within(s, level) & ~seen)
                    return false;
            }
        }
        return true;
    }

    static Mask expand(const std::vector<Mask>& adj, Mask frontier)
    {
        Mask next = 0;
        while (frontier) {
            next |= adj[std::countr_zero(frontier)];
            frontier &= frontier - 1;
        }
        return next;
    }

    bool descend(int bit)
    {
        if (bit < 0)
            return true; // both bounds hold and the graphs coincide
        const auto c = candidates_[bit];

        unlink(upper_, c);
        if (upper_ok(upper_) && descend(bit - 1))
            return true;
        link(upper_, c);

        link(lower_, c);
        chosen_ |= Mask{1} << bit;
        if (lower_ok(lower_) && descend(bit - 1))
            return true;
        chosen_ &= ~(Mask{1} << bit);
        unlink(lower_, c);
        return false;
    }

    std::uint32_t n_, m_;
    std::uint32_t max_level_ = 0;
    Mask anchors_ = 0;
    std::vector<Candidate> candidates_;
    std::vector<Mask> base_, lower_, upper_;
    std::vector<Mask> within_;
    Mask chosen_ = 0;
};

} // namespace

SolveOutcome solve_exact(const DistanceMatrix& d, std::uint32_t k, std::uint32_t guard)
{
    const auto n = d.size();
    const auto free = free_edge_count(n, k);
    if (free > guard || free > 63 || std::uint64_t{n} + k > 64)
        throw SearchSpaceTooLarge("exact search over " + std::to_string(free) + " free edges exceeds the guard of " +
                                  std::to_string(guard));

    auto mask = ExactSearch(d, k).run();
    if (!mask)
        return SolveOutcome::no();

    // Isolated extras of the minimal witness always form a suffix (swapping an
    // isolated extra with a later used one gives a smaller bitmask); drop them.
    std::uint32_t used = 0, bit = 0;
    for (std::uint32_t w = n + 1; w <= n + k; ++w) {
        bool any = false;
        for (std::uint32_t u = 1; u < w; ++u, ++bit)
            any = any || ((*mask >> bit) & 1);
        if (any)
            used = w - n;
    }

    SimpleGraph g(n + used, n);
    for (const auto& e : unit_graph(d).edges())
        g.add_edge(e.u, e.v);
    bit = 0;
    for (std::uint32_t w = n + 1; w <= n + k; ++w)
        for (std::uint32_t u = 1; u < w; ++u, ++bit)
            if ((*mask >> bit) & 1)
                g.add_edge(u, w);

    auto r = Realisation::verify(std::move(g), d);
    if (!r)
        throw std::logic_error("exact search produced a graph that does not verify");
    return SolveOutcome::yes(std::move(*r));
}

std::uint64_t exact_bitmask(const SimpleGraph& g)
{
    const auto n = g.anchor_count();
    std::uint64_t mask = 0, bit = 0;
    for (std::uint32_t w = n + 1; w <= g.vertex_count(); ++w)
        for (std::uint32_t u = 1; u < w; ++u, ++bit)
            if (g.has_edge(u, w))
                mask |= std::uint64_t{1} << bit;
    return mask;
}

} // namespace cdmr
