#include "cdmr/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "cdmr/colouring.hpp"
#include "cdmr/errors.hpp"
#include "cdmr/generate.hpp"
#include "cdmr/io.hpp"
#include "cdmr/solvers.hpp"
#include "cdmr/tree.hpp"

namespace cdmr {

namespace {

struct Summary {
    int code;
    const char* verdict;
    std::uint32_t vertices = 0;
    std::uint32_t extra = 0;
};

Summary yes(std::uint32_t vertices, std::uint32_t extra) { return {exit_yes, "YES", vertices, extra}; }
Summary no() { return {exit_no, "NO"}; }

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text))
        throw Error("cannot write '" + path + "'");
}

class InvalidMatrix : public Error {
public:
    using Error::Error;
};

DistanceMatrix load_matrix(const std::string& path)
{
    auto result = validate(parse_matrix(read_file(path)));
    if (auto* e = std::get_if<ValidationError>(&result))
        throw InvalidMatrix("not a distance matrix: " + e->describe());
    return std::get<DistanceMatrix>(std::move(result));
}

struct Options {
    std::string matrix;
    std::string graph;
    std::string second;
    std::string out_path;
    std::string cnf_path;
    std::uint32_t k = 0;
    std::uint32_t guard = default_search_guard;
    std::uint64_t seed = 0;
    std::string mode;
    GenParams gen;
    bool all = false;
    bool dot = false;
    bool certify = false;
    bool weighted = false;
};

class Runner {
public:
    Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

    void deliver(const std::string& text) const
    {
        if (opt_.out_path.empty())
            out_ << text;
        else
            write_file(opt_.out_path, text);
    }

    void deliver(const SimpleGraph& g) const { deliver(opt_.dot ? emit_dot(g) : emit_graph(g)); }

    // Re-checks a realisation before reporting YES.
    Summary realised(const SimpleGraph& g, const DistanceMatrix& d) const
    {
        if (!verify_realisation(g, d))
            throw std::logic_error("constructed graph does not realise the matrix");
        out_ << "YES: realised on " << g.vertex_count() << " vertices (" << g.vertex_count() - d.size()
             << " extra)\n";
        deliver(g);
        return yes(g.vertex_count(), g.vertex_count() - d.size());
    }

    Summary validate_cmd() const
    {
        auto raw = parse_matrix(read_file(opt_.matrix));
        auto errors = validate_all(raw);
        if (!opt_.all && errors.size() > 1)
            errors.resize(1);
        if (errors.empty()) {
            out_ << "valid: " << raw.size() << "x" << raw.size() << " distance matrix\n";
            return yes(raw.size(), 0);
        }
        for (const auto& e : errors)
            out_ << "invalid: " << e.describe() << "\n";
        return {exit_invalid, "ERROR"};
    }

    Summary solve_cmd() const
    {
        const auto d = load_matrix(opt_.matrix);
        if (!opt_.cnf_path.empty()) {
            if (opt_.k == 0)
                throw InvalidParams("--dump-cnf needs --k 1 or --k 2");
            std::string text = opt_.k == 1 ? emit_dimacs(build_phi1(d))
                                           : "c extra vertices not adjacent\n" + emit_dimacs(build_phi2(d)) +
                                                 "c extra vertices adjacent\n" + emit_dimacs(build_phi2_prime(d));
            write_file(opt_.cnf_path, text);
        }
        auto outcome = solve_k(d, opt_.k);
        if (outcome.answer == Answer::No) {
            out_ << "NO: no realisation on at most " << d.size() + opt_.k << " vertices\n";
            return no();
        }
        return realised(outcome.realisation->graph(), d);
    }

    Summary solve_exact_cmd() const
    {
        const auto d = load_matrix(opt_.matrix);
        auto outcome = solve_exact(d, opt_.k, opt_.guard);
        if (outcome.answer == Answer::No) {
            out_ << "NO: no realisation on at most " << d.size() + opt_.k << " vertices\n";
            return no();
        }
        return realised(outcome.realisation->graph(), d);
    }

    Summary bounds_cmd() const
    {
        const auto d = load_matrix(opt_.matrix);
        const auto b = bounds(d);
        out_ << "q0=" << b.q0 << " lower=" << b.lower << " upper=" << b.upper << "\n";
        const auto g = expand_elementary_paths(q_skeleton(d, b.q0));
        if (g.vertex_count() != b.upper)
            throw std::logic_error("expanded skeleton size differs from the upper bound");
        return realised(g, d);
    }

    Summary tree_cmd() const
    {
        const auto d = load_matrix(opt_.matrix);
        std::optional<ZareckiiReport> report;
        if (opt_.certify) {
            report = check_zareckii(d);
            out_ << "certificate: ";
            if (report->holds) {
                out_ << "holds\n";
            } else {
                const auto& v = *report->violation;
                out_ << "violated (" << to_string(v.kind);
                for (auto w : v.witness)
                    if (w)
                        out_ << ' ' << w;
                out_ << ")\n";
            }
        }
        auto r = solve_tree(d);
        if (report && report->holds != r.has_value())
            throw std::logic_error("tree certificate disagrees with tree construction");
        if (!r) {
            out_ << "NO: not realisable by a tree\n";
            return no();
        }
        if (!opt_.weighted)
            return realised(r->graph(), d);

        const auto t = *build_weighted_tree(d);
        if (!verify_realisation(expand_tree(t), d))
            throw std::logic_error("weighted tree does not realise the matrix");
        out_ << "YES: weighted tree on " << t.vertex_count() << " vertices\n";
        deliver(emit_weighted_tree(t));
        return yes(r->graph().vertex_count(), r->extra_vertices());
    }

    Summary reduce_cmd() const
    {
        const auto inst = reduce(InputGraph(parse_graph(read_file(opt_.graph))));
        out_ << "gadget: " << inst.gadget_vertices() << " vertices, matrix dimension " << inst.dimension() << "\n";
        deliver(emit_matrix(inst.matrix));
        return yes(inst.dimension(), 0);
    }

    Summary colour_realise_cmd() const
    {
        const auto inst = reduce(InputGraph(parse_graph(read_file(opt_.graph))));
        const auto colouring = parse_colouring(read_file(opt_.second));
        if (colouring.colour.size() != inst.source_vertices())
            throw ImproperColouring("colouring covers " + std::to_string(colouring.colour.size()) +
                                    " vertices, graph has " + std::to_string(inst.source_vertices()));
        const auto r = realise_from_colouring(inst, colouring);
        return realised(r.graph(), inst.matrix);
    }

    Summary extract_colouring_cmd() const
    {
        const auto inst = reduce(InputGraph(parse_graph(read_file(opt_.graph))));
        auto r = Realisation::verify(parse_graph(read_file(opt_.second)), inst.matrix);
        if (!r)
            throw MalformedRealisation("graph does not realise the gadget matrix");
        const auto c = extract_colouring(inst, *r, opt_.k);
        out_ << "YES: proper colouring with " << c.used() << " colours\n";
        deliver(emit_colouring(c));
        return yes(r->graph().vertex_count(), r->extra_vertices());
    }

    Summary verify_cmd() const
    {
        const auto d = load_matrix(opt_.matrix);
        const auto g = parse_graph(read_file(opt_.graph));
        if (!verify_realisation(g, d)) {
            out_ << "NO: graph does not realise the matrix\n";
            return no();
        }
        out_ << "YES: graph realises the matrix\n";
        return yes(g.vertex_count(), g.vertex_count() - d.size());
    }

    Summary gen_cmd() const
    {
        if (opt_.mode == "reduction") {
            if (opt_.graph.empty())
                throw InvalidParams("reduction mode needs --input <graph>");
            const auto inst = reduce(InputGraph(parse_graph(read_file(opt_.graph))));
            deliver(emit_matrix(inst.matrix));
            return yes(inst.dimension(), 0);
        }
        const auto d = generate(opt_.seed, parse_gen_mode(opt_.mode), opt_.gen);
        deliver(emit_matrix(d));
        return yes(d.size(), 0);
    }

private:
    const Options& opt_;
    std::ostream& out_;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Combinatorial distance matrix realisation", "cdmr"};
    app.require_subcommand(1);
    Options opt;
    std::function<Summary(const Runner&)> action;

    auto on = [&](CLI::App* sub, Summary (Runner::*fn)() const) {
        sub->callback([&action, fn] { action = [fn](const Runner& r) { return (r.*fn)(); }; });
    };
    auto out_flag = [&](CLI::App* sub) { sub->add_option("--out", opt.out_path, "Write the artifact to this file"); };

    auto* validate_sub = app.add_subcommand("validate", "Check the distance matrix axioms");
    validate_sub->add_option("matrix", opt.matrix)->required();
    validate_sub->add_flag("--all", opt.all, "Report every violation");
    on(validate_sub, &Runner::validate_cmd);

    auto* solve_sub = app.add_subcommand("solve", "Decide realisability on at most n + k vertices, k <= 2");
    solve_sub->add_option("matrix", opt.matrix)->required();
    solve_sub->add_option("--k", opt.k)->required()->check(CLI::Range(0, 2));
    out_flag(solve_sub);
    solve_sub->add_flag("--dot", opt.dot, "Emit Graphviz");
    solve_sub->add_option("--dump-cnf", opt.cnf_path, "Write the clause sets in DIMACS form");
    on(solve_sub, &Runner::solve_cmd);

    auto* exact_sub = app.add_subcommand("solve-exact", "Exhaustive search over edges touching k extra vertices");
    exact_sub->add_option("matrix", opt.matrix)->required();
    exact_sub->add_option("--k", opt.k)->required();
    exact_sub->add_option("--guard", opt.guard, "Largest number of free edges searched")
        ->check(CLI::Range(0, 63));
    out_flag(exact_sub);
    exact_sub->add_flag("--dot", opt.dot, "Emit Graphviz");
    on(exact_sub, &Runner::solve_exact_cmd);

    auto* bounds_sub = app.add_subcommand("bounds", "Report q0 and the vertex bounds, emit the skeleton expansion");
    bounds_sub->add_option("matrix", opt.matrix)->required();
    out_flag(bounds_sub);
    bounds_sub->add_flag("--dot", opt.dot, "Emit Graphviz");
    on(bounds_sub, &Runner::bounds_cmd);

    auto* tree_sub = app.add_subcommand("tree", "Minimal tree realisation");
    tree_sub->add_option("matrix", opt.matrix)->required();
    tree_sub->add_flag("--certify", opt.certify, "Also run the four-point certificate and cross-check");
    tree_sub->add_flag("--weighted", opt.weighted, "Emit the weighted tree (doubled weights)");
    out_flag(tree_sub);
    tree_sub->add_flag("--dot", opt.dot, "Emit Graphviz");
    on(tree_sub, &Runner::tree_cmd);

    auto* reduce_sub = app.add_subcommand("reduce", "Colourability gadget matrix of a connected graph");
    reduce_sub->add_option("graph", opt.graph)->required();
    out_flag(reduce_sub);
    on(reduce_sub, &Runner::reduce_cmd);

    auto* realise_sub = app.add_subcommand("colour-realise", "Realisation of the gadget matrix from a colouring");
    realise_sub->add_option("graph", opt.graph)->required();
    realise_sub->add_option("colouring", opt.second)->required();
    out_flag(realise_sub);
    realise_sub->add_flag("--dot", opt.dot, "Emit Graphviz");
    on(realise_sub, &Runner::colour_realise_cmd);

    auto* extract_sub = app.add_subcommand("extract-colouring", "Colouring read off a gadget realisation");
    extract_sub->add_option("graph", opt.graph)->required();
    extract_sub->add_option("realisation", opt.second)->required();
    extract_sub->add_option("--k", opt.k)->required();
    out_flag(extract_sub);
    on(extract_sub, &Runner::extract_colouring_cmd);

    auto* verify_sub = app.add_subcommand("verify", "Check that a graph realises a matrix");
    verify_sub->add_option("matrix", opt.matrix)->required();
    verify_sub->add_option("graph", opt.graph)->required();
    on(verify_sub, &Runner::verify_cmd);

    auto* gen_sub = app.add_subcommand("gen", "Seeded instance generator");
    gen_sub->add_option("--seed", opt.seed)->required();
    gen_sub->add_option("--mode", opt.mode)
        ->required()
        ->check(CLI::IsMember({"random-metric", "random-tree-metric", "reduction"}));
    gen_sub->add_option("--vertices", opt.gen.vertices);
    gen_sub->add_option("--anchors", opt.gen.anchors);
    gen_sub->add_option("--edge-percent", opt.gen.edge_percent);
    gen_sub->add_option("--input", opt.graph, "Graph for reduction mode");
    out_flag(gen_sub);
    on(gen_sub, &Runner::gen_cmd);

    auto finish = [&](const Summary& s) {
        out << "verdict=" << s.verdict << " vertices=" << s.vertices << " extra=" << s.extra << "\n";
        return s.code;
    };
    auto fail = [&](int code, const std::string& message) {
        err << "error: " << message << "\n";
        return finish({code, "ERROR"});
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e, out, err);
        return fail(exit_invalid, e.what());
    }

    try {
        return finish(action(Runner(opt, out)));
    } catch (const SearchSpaceTooLarge& e) {
        return fail(exit_too_large, e.what());
    } catch (const InvalidMatrix& e) {
        out << "invalid: " << e.what() << "\n";
        return fail(exit_invalid, e.what());
    } catch (const Error& e) {
        return fail(exit_invalid, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(exit_invalid, e.what());
    } catch (const std::exception& e) {
        return fail(exit_invalid, std::string("internal: ") + e.what());
    }
}

} // namespace cdmr
