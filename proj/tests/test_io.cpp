#include <gtest/gtest.h>

#include "cdmr/errors.hpp"
#include "cdmr/generate.hpp"
#include "cdmr/io.hpp"
#include "support.hpp"

using namespace cdmr;

namespace {

std::size_t parse_error_line(const std::function<void()>& f)
{
    try {
        f();
    } catch (const ParseError& e) {
        return e.line();
    }
    ADD_FAILURE() << "no ParseError thrown";
    return 0;
}

} // namespace

TEST(ParseMatrix, Examples)
{
    EXPECT_EQ(parse_matrix("0 2 2\n2 0 2\n2 2 0\n"), oracle::raw({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}));
    EXPECT_EQ(parse_error_line([] { parse_matrix("0 1\n1 0 0\n"); }), 2u);
}

TEST(ParseMatrix, CommentsBlankLinesAndSpacing)
{
    EXPECT_EQ(parse_matrix("# a comment\n\n  0\t1 \r\n\n1 0\n# end"), oracle::raw({{0, 1}, {1, 0}}));
}

TEST(ParseMatrix, Errors)
{
    EXPECT_EQ(parse_error_line([] { parse_matrix("\n# only comments\n"); }), 1u);
    EXPECT_EQ(parse_error_line([] { parse_matrix("0 1\n-1 0\n"); }), 2u);
    EXPECT_EQ(parse_error_line([] { parse_matrix("0 x\n1 0\n"); }), 1u);
    EXPECT_EQ(parse_error_line([] { parse_matrix("0 4294967296\n1 0\n"); }), 1u);
    EXPECT_EQ(parse_error_line([] { parse_matrix("0 1\n\n1\n"); }), 3u);
    EXPECT_NO_THROW(parse_matrix("0 4294967295\n1 0\n"));
}

TEST(ParseGraph, HeaderAndEdges)
{
    const auto g = parse_graph("graph 4 3\n3 4\n# comment\n1 4\n2 4\n");
    EXPECT_EQ(g.vertex_count(), 4u);
    EXPECT_EQ(g.anchor_count(), 3u);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 4}, {2, 4}, {3, 4}}));
}

TEST(ParseGraph, Errors)
{
    EXPECT_EQ(parse_error_line([] { parse_graph(""); }), 1u);
    EXPECT_EQ(parse_error_line([] { parse_graph("grph 2 2\n"); }), 1u);
    EXPECT_EQ(parse_error_line([] { parse_graph("graph 2 3\n"); }), 1u);
    EXPECT_EQ(parse_error_line([] { parse_graph("graph 2 0\n"); }), 1u);
    EXPECT_EQ(parse_error_line([] { parse_graph("graph 3 3\n1 2\n1 4\n"); }), 3u);
    EXPECT_EQ(parse_error_line([] { parse_graph("graph 3 3\n2 2\n"); }), 2u);
    EXPECT_EQ(parse_error_line([] { parse_graph("graph 3 3\n1 2\n\n2 1\n"); }), 4u);
    EXPECT_EQ(parse_error_line([] { parse_graph("graph 3 3\n1 2 3\n"); }), 2u);
}

TEST(ParseColouring, Examples)
{
    EXPECT_EQ(parse_colouring("2 1\n1 2\n"), (Colouring{2, {2, 1}}));
    EXPECT_EQ(parse_colouring("1 1\n", 3u), (Colouring{3, {1}}));
    EXPECT_EQ(parse_error_line([] { parse_colouring("1 1\n1 2\n"); }), 2u);
    EXPECT_EQ(parse_error_line([] { parse_colouring("1 1\n3 2\n"); }), 2u);
    EXPECT_EQ(parse_error_line([] { parse_colouring("1 0\n"); }), 1u);
    EXPECT_EQ(parse_error_line([] { parse_colouring("1 4\n", 3u); }), 1u);
}

TEST(Emit, Formats)
{
    SimpleGraph star(4, 3);
    star.add_edge(4, 3);
    star.add_edge(1, 4);
    star.add_edge(2, 4);
    EXPECT_EQ(emit_graph(star), "graph 4 3\n1 4\n2 4\n3 4\n");
    EXPECT_EQ(emit_dot(star), "graph realisation {\n"
                              "  1 [shape=box, label=\"v1\"];\n"
                              "  2 [shape=box, label=\"v2\"];\n"
                              "  3 [shape=box, label=\"v3\"];\n"
                              "  4 [shape=circle, label=\"\"];\n"
                              "  1 -- 4;\n  2 -- 4;\n  3 -- 4;\n}\n");
    EXPECT_EQ(emit_matrix(oracle::uniform(2, 3)), "0 3\n3 0\n");
    EXPECT_EQ(emit_colouring(Colouring{2, {2, 1}}), "1 2\n2 1\n");
    EXPECT_EQ(emit_weighted_tree(WeightedTree(3, 2, {{2, 3, 1}, {1, 3, 3}})), "tree 3 2\n1 3 3\n2 3 1\n");

    TwoSatInstance inst(3);
    inst.add_clause(Literal::pos(1), Literal::neg(3));
    inst.add_unit(Literal::neg(2));
    EXPECT_EQ(emit_dimacs(inst), "p cnf 3 2\n1 -3 0\n-2 -2 0\n");
}

TEST(RoundTripProperty, ParseEmitIdentity)
{
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto v = static_cast<std::uint32_t>(1 + rng.below(10));
        auto g0 = random_connected_graph(rng, v, static_cast<std::uint32_t>(rng.below(50)));
        SimpleGraph g(v, static_cast<std::uint32_t>(1 + rng.below(v)));
        for (const auto& e : g0.edges())
            g.add_edge(e.u, e.v);
        EXPECT_EQ(parse_graph(emit_graph(g)), g);

        const auto d = random_metric(rng, v, static_cast<std::uint32_t>(1 + rng.below(v)), 30);
        EXPECT_EQ(parse_matrix(emit_matrix(d)), d.raw());
        EXPECT_EQ(emit_matrix(parse_matrix(emit_matrix(d))), emit_matrix(d));

        Colouring c{5, {}};
        for (std::uint32_t i = 0; i < v; ++i)
            c.colour.push_back(static_cast<std::uint32_t>(1 + rng.below(5)));
        EXPECT_EQ(parse_colouring(emit_colouring(c), 5u), c);
    }
}

TEST(Rng, StableSequence)
{
    // First outputs of the standard 64-bit Mersenne Twister seeded with 5489.
    Rng rng(5489);
    EXPECT_EQ(rng.below(std::numeric_limits<std::uint64_t>::max()), 14514284786278117030ull);
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i)
        EXPECT_EQ(a.below(1000), b.below(1000));
}

TEST(Generate, DeterministicAndValid)
{
    const GenParams p{6, 4, 30};
    EXPECT_EQ(generate(1, GenMode::RandomMetric, p), generate(1, GenMode::RandomMetric, p));
    EXPECT_EQ(generate(1, GenMode::RandomMetric, p).size(), 4u);
    EXPECT_EQ(generate(1, GenMode::RandomTreeMetric, GenParams{0, 5, 0}).size(), 5u);
    EXPECT_EQ(parse_gen_mode("random-tree-metric"), GenMode::RandomTreeMetric);
}

TEST(Generate, InvalidParams)
{
    EXPECT_THROW(generate(1, GenMode::RandomMetric, GenParams{3, 4, 30}), InvalidParams);
    EXPECT_THROW(generate(1, GenMode::RandomMetric, GenParams{3, 0, 30}), InvalidParams);
    EXPECT_THROW(generate(1, GenMode::RandomMetric, GenParams{3, 2, 101}), InvalidParams);
    EXPECT_THROW(generate(1, GenMode::RandomTreeMetric, GenParams{2, 3, 0}), InvalidParams);
    EXPECT_THROW(parse_gen_mode("grid"), InvalidParams);
}

TEST(Generate, MinimalTreesHaveAnchoredLeaves)
{
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const auto t = random_minimal_tree(rng, 12);
        EXPECT_LE(t.vertex_count(), 12u);
        EXPECT_EQ(t.edge_count() + 1, t.vertex_count());
        EXPECT_TRUE(is_connected(t));
        for (std::uint32_t v = t.anchor_count() + 1; v <= t.vertex_count(); ++v)
            EXPECT_GE(t.degree(v), 3u);
    }
}
