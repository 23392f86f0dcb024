#include <pcn/cli.hpp>
#include <pcn/errors.hpp>
#include <pcn/families.hpp>
#include <pcn/harness.hpp>
#include <pcn/io.hpp>
#include <pcn/patterns.hpp>
#include <pcn/solver.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <ostream>

namespace pcn::cli
{
    using nlohmann::json;

    namespace
    {
        /// Bad input data, reported with the usage exit code.
        class UsageError : public std::runtime_error
        {
        public:
            using std::runtime_error::runtime_error;
        };

        auto env_time_budget() -> std::optional<double>
        {
            const char * raw = std::getenv("PCN_TIME_BUDGET");
            if (! raw || ! *raw)
                return std::nullopt;
            try {
                std::size_t used = 0;
                double v = std::stod(raw, &used);
                if (used != std::string(raw).size() || v < 0)
                    throw std::invalid_argument(raw);
                return v;
            }
            catch (const std::exception &) {
                throw UsageError(std::string("PCN_TIME_BUDGET must be a non-negative number of seconds, got '") + raw + "'");
            }
        }

        auto resolve_budget(const std::optional<double> & flag, double fallback) -> double
        {
            if (flag)
                return *flag;
            return env_time_budget().value_or(fallback);
        }

        auto load_graph(const std::string & path) -> Graph
        {
            return graph_from_json(read_json_file(path));
        }

        auto load_coloring(const std::string & path) -> NamedColoring
        {
            return coloring_from_json(read_json_file(path));
        }

        void emit(const std::string & path, const std::string & content, std::ostream & out)
        {
            if (path.empty() || path == "-")
                out << content;
            else
                write_file_atomic(path, content);
        }

        void print_violations(const VerificationReport & report, std::ostream & out)
        {
            for (const auto & v : report.violations)
                out << v.u << ' ' << v.v << ' ' << v.color << ' ' << v.distance << '\n';
        }

        struct ChiArgs
        {
            std::string graph;
            std::optional<double> budget;
            OrderStrategy order = OrderStrategy::DegreeDesc;
            bool parallel = false;
            std::string witness;
        };

        auto cmd_chi(const ChiArgs & a, std::ostream & out) -> int
        {
            auto g = load_graph(a.graph);
            SolveOptions opts;
            opts.time_budget = resolve_budget(a.budget, 0.0);
            opts.order = a.order;
            opts.parallel = a.parallel;
            auto r = packing_chromatic_number(g, opts);
            if (! a.witness.empty())
                write_file_atomic(a.witness, coloring_to_json(g.name(), r.witness).dump(2) + "\n");
            if (r.exact()) {
                out << "chi=" << r.chi() << '\n';
                return exit_code::ok;
            }
            out << "bounds=[" << r.lower << ',' << r.upper << "]\n";
            return exit_code::timeout;
        }

        struct PatternArgs
        {
            std::string name;
            int n = 0;
            int p = 2;
            int m = 1;
            std::string base;
            std::string out;
            std::string graph_out;
        };

        auto cmd_pattern(const PatternArgs & a, std::ostream & out) -> int
        {
            PatternParams params{a.n, a.p, a.m, std::nullopt};
            if (! a.base.empty())
                params.base = parse_family_spec(a.base);
            auto pc = make_pattern(a.name, params);

            if (! a.graph_out.empty())
                write_file_atomic(a.graph_out, graph_to_json(pc.graph).dump(2) + "\n");
            auto text = coloring_to_json(pc.graph.name(), pc.coloring).dump(2) + "\n";
            if (a.out.empty())
                out << text;
            else
                write_file_atomic(a.out, text);

            out << "graph=" << pc.graph.name() << '\n';
            out << "k=" << pc.coloring.k() << '\n';
            out << "valid=" << (pc.report.valid ? "true" : "false") << '\n';
            print_violations(pc.report, out);
            return pc.report.valid ? exit_code::ok : exit_code::invalid_coloring;
        }

        auto cmd_verify(const std::string & graph_path, const std::string & coloring_path, std::ostream & out, std::ostream & err) -> int
        {
            auto g = load_graph(graph_path);
            auto named = load_coloring(coloring_path);
            if (named.coloring.size() != g.order())
                throw UsageError("colouring has " + std::to_string(named.coloring.size()) + " entries but the graph has " +
                    std::to_string(g.order()) + " vertices");
            if (! named.graph_name.empty() && ! g.name().empty() && named.graph_name != g.name())
                err << "warning: colouring was made for '" << named.graph_name << "', graph is '" << g.name() << "'\n";
            auto report = verify(g, named.coloring);
            out << "valid=" << (report.valid ? "true" : "false") << '\n';
            print_violations(report, out);
            return report.valid ? exit_code::ok : exit_code::invalid_coloring;
        }

        struct CheckArgs
        {
            std::string suite = "all";
            int max_n = 23;
            int max_m = 3;
            std::optional<double> budget;
            bool parallel = false;
            std::string report;
        };

        auto cmd_check(const CheckArgs & a, std::ostream & out) -> int
        {
            SuiteOptions o;
            o.suite = a.suite;
            o.max_n = a.max_n;
            o.max_m = a.max_m;
            o.solver.time_budget = resolve_budget(a.budget, o.solver.time_budget);
            o.solver.parallel = a.parallel;
            auto ids = suite_claim_ids();
            if (o.suite != "all" && std::find(ids.begin(), ids.end(), o.suite) == ids.end())
                throw UsageError("unknown suite '" + o.suite + "'");

            auto results = run_suite(o);
            json report = json::array();
            for (const auto & r : results)
                report.push_back(claim_to_json(r));
            write_file_atomic(a.report, report.dump(2) + "\n");
            out << format_table(results);
            return suite_exit_code(results);
        }
    }

    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Packing colourings of finite super subdivisions and neighbourhood coronas", "pcn"};
        app.require_subcommand(1);

        std::string spec, construct_out;
        auto * construct = app.add_subcommand("construct", "Build a graph from a family spec and write it as JSON");
        construct->add_option("spec", spec, "Family spec, e.g. fssd(corona(complete:3,path:2),m=1)")->required();
        construct->add_option("-o,--out", construct_out, "Output file (default: standard output)");

        ChiArgs chi_args;
        static const std::map<std::string, OrderStrategy> orders = {
            {"degree", OrderStrategy::DegreeDesc}, {"ecc", OrderStrategy::EccentricityAsc}, {"input", OrderStrategy::Input}};
        auto * chi = app.add_subcommand("chi", "Compute the packing chromatic number of a graph");
        chi->add_option("graph", chi_args.graph, "Graph JSON file")->required();
        chi->add_option("--time-budget", chi_args.budget, "Seconds; 0 means unlimited (default: $PCN_TIME_BUDGET or 0)")->check(CLI::NonNegativeNumber);
        chi->add_option("--order", chi_args.order, "Branching order")->transform(CLI::CheckedTransformer(orders, CLI::ignore_case));
        chi->add_flag("--parallel", chi_args.parallel, "Split the search over threads");
        chi->add_option("--witness", chi_args.witness, "Write the best colouring found to this file");

        std::string verify_graph, verify_coloring;
        auto * verify_cmd = app.add_subcommand("verify", "Check a colouring against a graph");
        verify_cmd->add_option("graph", verify_graph, "Graph JSON file")->required();
        verify_cmd->add_option("coloring", verify_coloring, "Colouring JSON file")->required();

        PatternArgs pattern_args;
        auto * pattern = app.add_subcommand("pattern", "Emit one of the explicit colourings");
        pattern->add_option("name", pattern_args.name, "Pattern name")->required()->check(CLI::IsMember(pattern_names()));
        pattern->add_option("--n", pattern_args.n, "Order of the base graph");
        pattern->add_option("--p", pattern_args.p, "Path order for corona patterns")->check(CLI::Range(2, 1 << 20));
        pattern->add_option("--m", pattern_args.m, "Subdivision multiplicity")->check(CLI::Range(1, 1 << 20));
        pattern->add_option("--base", pattern_args.base, "Base family spec (fssd-bipartite)");
        pattern->add_option("-o,--out", pattern_args.out, "Colouring output file (default: standard output)");
        pattern->add_option("--graph-out", pattern_args.graph_out, "Also write the coloured graph");

        CheckArgs check_args;
        auto * check = app.add_subcommand("check", "Run the claim suite and write a JSON report");
        check->add_option("--suite", check_args.suite, "all or a claim id");
        check->add_option("--max-n", check_args.max_n, "Largest base order in the grid")->check(CLI::Range(3, 1000));
        check->add_option("--max-m", check_args.max_m, "Largest multiplicity in the grid")->check(CLI::Range(1, 1000));
        check->add_option("--time-budget", check_args.budget, "Seconds per solver call (default: $PCN_TIME_BUDGET or 60)")->check(CLI::NonNegativeNumber);
        check->add_flag("--parallel", check_args.parallel, "Split solver searches over threads");
        check->add_option("--report", check_args.report, "Report JSON file")->required();

        std::string dot_graph, dot_out, dot_coloring;
        auto * dot = app.add_subcommand("export-dot", "Write a graph in Graphviz DOT format");
        dot->add_option("graph", dot_graph, "Graph JSON file")->required();
        dot->add_option("-o,--out", dot_out, "Output file (default: standard output)");
        dot->add_option("--coloring", dot_coloring, "Colouring JSON file to annotate vertices with");

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp & e) {
            app.exit(e, out, err);
            return exit_code::ok;
        }
        catch (const CLI::CallForAllHelp & e) {
            app.exit(e, out, err);
            return exit_code::ok;
        }
        catch (const CLI::ParseError & e) {
            err << "error: " << e.what() << '\n';
            return exit_code::usage;
        }

        try {
            if (*construct) {
                auto built = generate(parse_family_spec(spec));
                emit(construct_out, graph_to_json(built.graph).dump(2) + "\n", out);
                if (! construct_out.empty())
                    out << "graph=" << built.graph.name() << "\nn=" << built.graph.order() << "\nedges=" << built.graph.size() << '\n';
                return exit_code::ok;
            }
            if (*chi)
                return cmd_chi(chi_args, out);
            if (*verify_cmd)
                return cmd_verify(verify_graph, verify_coloring, out, err);
            if (*pattern)
                return cmd_pattern(pattern_args, out);
            if (*check)
                return cmd_check(check_args, out);
            if (*dot) {
                auto g = load_graph(dot_graph);
                std::optional<PackingColoring> c;
                if (! dot_coloring.empty()) {
                    c = load_coloring(dot_coloring).coloring;
                    if (c->size() != g.order())
                        throw UsageError("colouring size does not match the graph");
                }
                emit(dot_out, to_dot(g, c), out);
                return exit_code::ok;
            }
        }
        catch (const IoError & e) {
            err << "error: " << e.what() << '\n';
            return exit_code::io;
        }
        catch (const std::invalid_argument & e) {
            // Malformed specs, graphs, colourings and out-of-range parameters.
            err << "error: " << e.what() << '\n';
            return exit_code::usage;
        }
        catch (const UsageError & e) {
            err << "error: " << e.what() << '\n';
            return exit_code::usage;
        }
        return exit_code::usage;
    }
}
