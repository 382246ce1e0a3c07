#include "cdmr/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

#include "cdmr/errors.hpp"

namespace cdmr {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Non-blank, non-comment lines split into tokens.
std::vector<Line> content_lines(std::string_view text)
{
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        auto end = text.find('\n');
        auto raw = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        ++number;

        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && is_space(raw[i]))
                ++i;
            auto start = i;
            while (i < raw.size() && !is_space(raw[i]))
                ++i;
            if (i > start)
                line.tokens.push_back(raw.substr(start, i - start));
        }
        if (line.tokens.empty() || line.tokens.front().front() == '#')
            continue;
        out.push_back(std::move(line));
    }
    return out;
}

std::uint32_t parse_u32(std::string_view token, std::size_t line)
{
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError(line, "integer '" + std::string(token) + "' does not fit in 32 bits");
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    return value;
}

} // namespace

RawMatrix parse_matrix(std::string_view text)
{
    auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError(1, "empty matrix");
    const auto n = lines.size();
    std::vector<std::uint32_t> entries;
    entries.reserve(n * n);
    for (const auto& line : lines) {
        if (line.tokens.size() != n)
            throw ParseError(line.number, "row has " + std::to_string(line.tokens.size()) + " entries, expected " +
                                              std::to_string(n));
        for (auto token : line.tokens)
            entries.push_back(parse_u32(token, line.number));
    }
    return RawMatrix(static_cast<std::uint32_t>(n), std::move(entries));
}

SimpleGraph parse_graph(std::string_view text)
{
    auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError(1, "missing 'graph <vertex_count> <anchor_count>' header");
    const auto& header = lines.front();
    if (header.tokens.size() != 3 || header.tokens[0] != "graph")
        throw ParseError(header.number, "expected 'graph <vertex_count> <anchor_count>'");
    const auto vertices = parse_u32(header.tokens[1], header.number);
    const auto anchors = parse_u32(header.tokens[2], header.number);
    if (anchors < 1 || anchors > vertices)
        throw ParseError(header.number, "anchor count must lie in [1, vertex count]");

    SimpleGraph g(vertices, anchors);
    for (auto it = lines.begin() + 1; it != lines.end(); ++it) {
        if (it->tokens.size() != 2)
            throw ParseError(it->number, "expected an edge 'u v'");
        const auto u = parse_u32(it->tokens[0], it->number);
        const auto v = parse_u32(it->tokens[1], it->number);
        if (u < 1 || v < 1 || u > vertices || v > vertices)
            throw ParseError(it->number, "edge endpoint out of range");
        if (u == v)
            throw ParseError(it->number, "self-loop");
        if (!g.add_edge(u, v))
            throw ParseError(it->number, "duplicate edge");
    }
    return g;
}

Colouring parse_colouring(std::string_view text, std::optional<std::uint32_t> k)
{
    auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError(1, "empty colouring");
    const auto count = lines.size();
    std::vector<std::uint32_t> colour(count, 0);
    std::uint32_t highest = 0;
    for (const auto& line : lines) {
        if (line.tokens.size() != 2)
            throw ParseError(line.number, "expected 'vertex colour'");
        const auto v = parse_u32(line.tokens[0], line.number);
        const auto c = parse_u32(line.tokens[1], line.number);
        if (v < 1 || v > count)
            throw ParseError(line.number, "vertex out of range 1.." + std::to_string(count));
        if (colour[v - 1] != 0)
            throw ParseError(line.number, "vertex " + std::to_string(v) + " coloured twice");
        if (c < 1)
            throw ParseError(line.number, "colours start at 1");
        colour[v - 1] = c;
        highest = std::max(highest, c);
    }
    if (k && highest > *k)
        throw ParseError(lines.back().number, "colour exceeds k = " + std::to_string(*k));
    return Colouring{k.value_or(highest), std::move(colour)};
}

std::string emit_matrix(const RawMatrix& m)
{
    std::string out;
    for (std::uint32_t i = 1; i <= m.size(); ++i) {
        for (std::uint32_t j = 1; j <= m.size(); ++j) {
            if (j > 1)
                out += ' ';
            out += std::to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string emit_matrix(const DistanceMatrix& d) { return emit_matrix(d.raw()); }

std::string emit_graph(const SimpleGraph& g)
{
    std::string out = "graph " + std::to_string(g.vertex_count()) + " " + std::to_string(g.anchor_count()) + "\n";
    for (const auto& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

std::string emit_colouring(const Colouring& c)
{
    std::string out;
    for (std::uint32_t v = 1; v <= c.colour.size(); ++v)
        out += std::to_string(v) + " " + std::to_string(c.of(v)) + "\n";
    return out;
}

std::string emit_weighted_tree(const WeightedTree& t)
{
    std::string out = "tree " + std::to_string(t.vertex_count()) + " " + std::to_string(t.anchor_count()) + "\n";
    for (const auto& e : t.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + std::to_string(e.doubled_weight) + "\n";
    return out;
}

std::string emit_dot(const SimpleGraph& g)
{
    std::string out = "graph realisation {\n";
    for (std::uint32_t v = 1; v <= g.vertex_count(); ++v) {
        out += "  " + std::to_string(v);
        out += g.is_anchor(v) ? " [shape=box, label=\"v" + std::to_string(v) + "\"];\n"
                              : " [shape=circle, label=\"\"];\n";
    }
    for (const auto& e : g.edges())
        out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
    out += "}\n";
    return out;
}

std::string emit_dimacs(const TwoSatInstance& inst)
{
    std::string out = "p cnf " + std::to_string(inst.variable_count()) + " " + std::to_string(inst.clauses().size()) + "\n";
    auto lit = [](Literal l) { return (l.negated ? "-" : "") + std::to_string(l.variable); };
    for (const auto& [a, b] : inst.clauses())
        out += lit(a) + " " + lit(b) + " 0\n";
    return out;
}

} // namespace cdmr
