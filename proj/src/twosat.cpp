#include "cdmr/twosat.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cdmr {

void TwoSatInstance::add_clause(Literal a, Literal b)
{
    if (a.variable < 1 || a.variable > variable_count_ || b.variable < 1 || b.variable > variable_count_)
        throw std::invalid_argument("literal references an undeclared variable");
    clauses_.emplace_back(a, b);
}

namespace {

// Negative literal of a variable gets the even node so that DFS roots visit it
// first; with no constraints that makes every variable false.
std::uint32_t node_of(Literal l) noexcept { return 2 * (l.variable - 1) + (l.negated ? 0 : 1); }

struct ImplicationGraph {
    std::vector<std::uint32_t> offsets;
    std::vector<std::uint32_t> targets;

    explicit ImplicationGraph(const TwoSatInstance& inst)
    {
        const std::uint32_t nodes = 2 * inst.variable_count();
        offsets.assign(nodes + 1, 0);
        for (const auto& [a, b] : inst.clauses()) {
            ++offsets[node_of(~a) + 1];
            ++offsets[node_of(~b) + 1];
        }
        for (std::uint32_t i = 0; i < nodes; ++i)
            offsets[i + 1] += offsets[i];
        targets.resize(offsets.back());
        auto fill = offsets;
        for (const auto& [a, b] : inst.clauses()) {
            targets[fill[node_of(~a)]++] = node_of(b);
            targets[fill[node_of(~b)]++] = node_of(a);
        }
    }
};

// Iterative Tarjan. Component ids are assigned in completion order, which is
// a reverse topological order of the condensation.
std::vector<std::uint32_t> tarjan_components(const ImplicationGraph& g, std::uint32_t nodes)
{
    constexpr auto unvisited = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> index(nodes, unvisited), low(nodes, 0), comp(nodes, unvisited);
    std::vector<std::uint32_t> stack, next_edge(nodes, 0);
    std::vector<std::uint32_t> call;
    std::uint32_t counter = 0, components = 0;

    for (std::uint32_t root = 0; root < nodes; ++root) {
        if (index[root] != unvisited)
            continue;
        call.push_back(root);
        index[root] = low[root] = counter++;
        next_edge[root] = g.offsets[root];
        stack.push_back(root);

        while (!call.empty()) {
            auto v = call.back();
            if (next_edge[v] < g.offsets[v + 1]) {
                auto w = g.targets[next_edge[v]++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    next_edge[w] = g.offsets[w];
                    stack.push_back(w);
                    call.push_back(w);
                } else if (comp[w] == unvisited) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            call.pop_back();
            if (!call.empty())
                low[call.back()] = std::min(low[call.back()], low[v]);
            if (low[v] == index[v]) {
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    comp[w] = components;
                } while (w != v);
                ++components;
            }
        }
    }
    return comp;
}

} // namespace

std::optional<Assignment> solve(const TwoSatInstance& inst)
{
    const std::uint32_t nodes = 2 * inst.variable_count();
    ImplicationGraph graph(inst);
    auto comp = tarjan_components(graph, nodes);

    Assignment a(inst.variable_count(), false);
    for (std::uint32_t v = 1; v <= inst.variable_count(); ++v) {
        auto cpos = comp[node_of(Literal::pos(v))];
        auto cneg = comp[node_of(Literal::neg(v))];
        if (cpos == cneg)
            return std::nullopt;
        a[v - 1] = cpos < cneg;
    }
    return a;
}

bool check(const TwoSatInstance& inst, const Assignment& a)
{
    return std::all_of(inst.clauses().begin(), inst.clauses().end(),
                       [&](const Clause& c) { return value_of(a, c.first) || value_of(a, c.second); });
}

} // namespace cdmr
