#include "graphcone/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphcone/decompose.hpp"
#include "graphcone/errors.hpp"
#include "graphcone/generators.hpp"
#include "graphcone/hilbert.hpp"
#include "graphcone/mutation.hpp"
#include "graphcone/networks.hpp"
#include "graphcone/series.hpp"

namespace graphcone {

namespace {

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TrivalentGraph load_graph(const std::string& path) {
    return parse_graph(slurp_file(path));
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

std::vector<MutationStep> parse_steps(std::istream& in) {
    std::vector<MutationStep> steps;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword) || keyword[0] == '#')
            continue;
        MutationStep step;
        if (keyword != "mutate" || !(ls >> step.edge >> step.variant))
            throw ParseError("steps line " + std::to_string(lineno) +
                             ": expected 'mutate <edge> <variant>'");
        steps.push_back(std::move(step));
    }
    return steps;
}

void print_steps(std::ostream& out, const std::vector<MutationStep>& steps) {
    for (const MutationStep& s : steps)
        out << "mutate " << s.edge << ' ' << s.variant << '\n';
}

void print_table(std::ostream& out, const HilbertTable& t, const std::string& format) {
    if (format == "json") {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& [key, c] : t.counts)
            entries.push_back({key.first, key.second, c});
        nlohmann::json j;
        j["D"] = t.D;
        j["axes"] = t.axes;
        j["entries"] = entries;
        out << j.dump() << '\n';
        return;
    }
    for (const auto& [key, c] : t.counts) {
        out << "m=" << key.first;
        if (!t.axes.empty()) {
            out << " k=(";
            for (size_t i = 0; i < key.second.size(); ++i)
                out << (i ? "," : "") << key.second[i];
            out << ')';
        }
        out << ": " << c << '\n';
    }
}

struct HilbertArgs {
    std::string file;
    long long max_degree = 7;
    std::string method = "brute";
    std::string format = "table";
    std::string leaves;
    bool paper_literal = false;
    int threads = 1;
};

void run_hilbert(const HilbertArgs& a, std::ostream& out) {
    TrivalentGraph g = load_graph(a.file);
    std::vector<std::string> axes = split_commas(a.leaves);
    EnumOptions opts;
    opts.threads = a.threads;
    HilbertTable t;
    if (a.method == "brute") {
        t = hilbert_brute(g, a.max_degree, axes, opts);
    } else if (a.method == "compose") {
        t = hilbert_compose(g, a.max_degree, axes, opts);
    } else if (a.method == "series") {
        auto p = builtin_presentation(g, a.paper_literal);
        if (!p)
            throw DomainError("no built-in complete-intersection presentation for this graph; "
                              "use --method brute or compose");
        for (const std::string& axis : axes)
            if (std::find(p->axes.begin(), p->axes.end(), axis) == p->axes.end())
                throw DomainError("'" + axis + "' is not a leaf");
        t = marginalize(ci_series(p->gens, p->rels, a.max_degree, p->axes), axes);
    } else {
        throw ParseError("unknown method '" + a.method + "'");
    }
    print_table(out, t, a.format);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
    CLI::App app{"graphcone: lattice cones, semigroup generators and Hilbert tables "
                 "of trivalent graph models"};
    app.require_subcommand(1);

    std::string file, file2, element, edge_arg;
    int variant = 0;
    long long degree_cap = 4;
    bool strict = false, steps_only = false;
    std::string replay_path;
    std::vector<std::string> lhs, rhs;
    std::string leaves1, leaves2;
    HilbertArgs hargs;

    CLI::App* info = app.add_subcommand("info", "topological invariants and edge classes");
    info->add_option("file", file)->required();

    CLI::App* networks = app.add_subcommand("networks", "degree-1 cone points");
    networks->add_option("file", file)->required();

    CLI::App* generators = app.add_subcommand("generators", "minimal semigroup generators");
    generators->add_option("file", file)->required();
    generators->add_option("--degree-cap", degree_cap, "saturation cap for two or more cycles");

    CLI::App* decompose_cmd = app.add_subcommand("decompose", "write an element as generators");
    decompose_cmd->add_option("file", file)->required();
    decompose_cmd->add_option("--element", element, "deg=<m>;<edge>=<int>,...")->required();

    CLI::App* hilbert = app.add_subcommand("hilbert", "multigraded Hilbert table");
    hilbert->add_option("file", hargs.file)->required();
    hilbert->add_option("--max-degree", hargs.max_degree, "truncation bound D");
    hilbert->add_option("--method", hargs.method, "brute | compose | series");
    hilbert->add_option("--format", hargs.format, "table | json");
    hilbert->add_option("--leaves", hargs.leaves, "comma-separated leaf axes");
    hilbert->add_flag("--paper-literal", hargs.paper_literal,
                      "use the legacy balloon series form (undercounts; for comparison)");
    hilbert->add_option("--threads", hargs.threads, "enumeration threads");

    CLI::App* mutate_cmd = app.add_subcommand("mutate", "mutate along an edge or replay steps");
    mutate_cmd->add_option("file", file)->required();
    mutate_cmd->add_option("edge", edge_arg);
    mutate_cmd->add_option("variant", variant);
    mutate_cmd->add_option("--replay", replay_path, "steps file ('-' for standard input)");

    CLI::App* normalize = app.add_subcommand("normalize", "caterpillar-with-loops normal form");
    normalize->add_option("file", file)->required();
    normalize->add_flag("--steps", steps_only, "print the mutation steps instead of the graph");
    normalize->add_flag("--strict", strict, "fail on disconnected input");

    CLI::App* verify = app.add_subcommand("verify-equivalence",
                                          "compare multigraded tables of two graphs");
    verify->add_option("file1", file)->required();
    verify->add_option("file2", file2)->required();
    verify->add_option("--max-degree", hargs.max_degree);
    verify->add_option("--leaves1", leaves1, "leaf axes of the first graph");
    verify->add_option("--leaves2", leaves2, "leaf axes of the second graph");

    CLI::App* relation = app.add_subcommand("relation", "check a semigroup identity");
    relation->add_option("file", file)->required();
    relation->add_option("--lhs", lhs, "left-hand elements")->required();
    relation->add_option("--rhs", rhs, "right-hand elements")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (info->parsed()) {
            TrivalentGraph g = load_graph(file);
            GraphInvariants inv = invariants(g);
            out << "V=" << inv.num_vertices << " E=" << inv.num_edges << " n=" << inv.num_leaves
                << " g=" << inv.betti << " comp=" << inv.num_components << " dim=" << inv.dim_model
                << '\n';
        } else if (networks->parsed()) {
            TrivalentGraph g = load_graph(file);
            for (const Network& n : enumerate_networks(g))
                out << format_element(g, network_element(g, n)) << '\n';
        } else if (generators->parsed()) {
            TrivalentGraph g = load_graph(file);
            GeneratorSet set = minimal_generators(g, degree_cap);
            for (size_t i = 0; i < set.generators.size();) {
                long long d = set.generators[i].degree;
                size_t j = i;
                while (j < set.generators.size() && set.generators[j].degree == d)
                    ++j;
                out << "# degree " << d << ": " << (j - i) << " generators\n";
                for (; i < j; ++i)
                    out << format_element(g, set.generators[i]) << '\n';
            }
            if (set.truncation_warning)
                out << "# warning: generators found at the degree cap " << set.degree_cap
                    << "; higher degrees may hold more\n";
        } else if (decompose_cmd->parsed()) {
            TrivalentGraph g = load_graph(file);
            Decomposition dec = decompose(g, parse_element(g, element));
            for (const ConeElement& part : dec.parts)
                out << format_element(g, part) << '\n';
        } else if (hilbert->parsed()) {
            run_hilbert(hargs, out);
        } else if (mutate_cmd->parsed()) {
            TrivalentGraph g = load_graph(file);
            if (!replay_path.empty()) {
                std::vector<MutationStep> steps;
                if (replay_path == "-") {
                    steps = parse_steps(in);
                } else {
                    std::istringstream stream(slurp_file(replay_path));
                    steps = parse_steps(stream);
                }
                out << format_graph(replay(g, steps));
            } else {
                if (edge_arg.empty() || variant == 0)
                    throw ParseError("mutate needs '<edge> <variant>' or --replay");
                out << format_graph(mutate(g, MutationStep{edge_arg, variant}));
            }
        } else if (normalize->parsed()) {
            TrivalentGraph g = load_graph(file);
            NormalFormResult nf = caterpillar_normal_form(g, strict);
            if (steps_only)
                print_steps(out, nf.steps);
            else
                out << format_graph(nf.graph);
        } else if (verify->parsed()) {
            TrivalentGraph g1 = load_graph(file);
            TrivalentGraph g2 = load_graph(file2);
            MutationInvarianceReport rep = verify_mutation_invariance(
                g1, g2, hargs.max_degree, split_commas(leaves1), split_commas(leaves2));
            if (rep.equal)
                out << "equal up to D=" << hargs.max_degree << '\n';
            else
                out << "not equal: " << rep.report << '\n';
        } else if (relation->parsed()) {
            TrivalentGraph g = load_graph(file);
            std::vector<ConeElement> left, right;
            for (const std::string& s : lhs)
                left.push_back(parse_element(g, s));
            for (const std::string& s : rhs)
                right.push_back(parse_element(g, s));
            out << (verify_relation(g, left, right) ? "relation holds\n" : "relation fails\n");
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace graphcone
