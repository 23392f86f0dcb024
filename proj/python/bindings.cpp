#include <pcn/errors.hpp>
#include <pcn/families.hpp>
#include <pcn/harness.hpp>
#include <pcn/io.hpp>
#include <pcn/patterns.hpp>
#include <pcn/solver.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <numeric>

namespace py = pybind11;
using namespace pcn;

namespace
{
    auto parse_order(const std::string & name) -> OrderStrategy
    {
        for (auto s : {OrderStrategy::DegreeDesc, OrderStrategy::EccentricityAsc, OrderStrategy::Input})
            if (order_strategy_name(s) == name)
                return s;
        throw InvalidSpec("order must be one of degree, ecc, input; got '" + name + "'");
    }

    auto options(double time_budget, const std::string & order, bool parallel) -> SolveOptions
    {
        if (time_budget < 0)
            throw InvalidSpec("time_budget must be non-negative");
        SolveOptions o;
        o.time_budget = time_budget;
        o.order = parse_order(order);
        o.parallel = parallel;
        return o;
    }

    auto colors_of(const PackingColoring & c) -> std::vector<int>
    {
        return {c.colors().begin(), c.colors().end()};
    }

    auto report_dict(const VerificationReport & r) -> py::dict
    {
        py::list violations;
        for (const auto & v : r.violations)
            violations.append(py::make_tuple(v.u, v.v, v.color, v.distance));
        py::dict out;
        out["valid"] = r.valid;
        out["violations"] = violations;
        out["colors_used"] = std::vector<int>(r.colors_used.begin(), r.colors_used.end());
        return out;
    }

    auto edge_list(const Graph & g) -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> out;
        for (auto e : g.edges())
            out.emplace_back(e.u, e.v);
        return out;
    }
}

PYBIND11_MODULE(_pcn, m)
{
    m.doc() = "Packing colourings of finite super subdivisions and neighbourhood coronas";

    auto value_error = py::handle(PyExc_ValueError);
    py::register_exception<InvalidGraph>(m, "InvalidGraph", value_error);
    py::register_exception<InvalidSpec>(m, "InvalidSpec", value_error);
    py::register_exception<InvalidColoring>(m, "InvalidColoring", value_error);
    py::register_exception<LabelNotFound>(m, "LabelNotFound", PyExc_KeyError);
    py::register_exception<SizeExceeded>(m, "SizeExceeded", value_error);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("name", &Graph::name)
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("__len__", &Graph::order)
        .def("edges", &edge_list)
        .def("neighbours", [](const Graph & g, VertexId v) {
            auto n = g.neighbours(v);
            return std::vector<VertexId>(n.begin(), n.end());
        })
        .def("degree", &Graph::degree)
        .def("labels", [](const Graph & g) {
            std::vector<std::string> out;
            for (const auto & l : g.labels())
                out.push_back(l.render());
            return out;
        })
        .def("label", [](const Graph & g, VertexId v) { return g.label(v).render(); })
        .def("to_json", [](const Graph & g) { return graph_to_json(g).dump(); })
        .def_static("from_json", [](const std::string & text) {
            try {
                return graph_from_json(nlohmann::json::parse(text));
            }
            catch (const nlohmann::json::parse_error & e) {
                throw InvalidGraph(e.what());
            }
        })
        .def("to_dot", [](const Graph & g, std::optional<std::vector<int>> colors) {
            std::optional<PackingColoring> c;
            if (colors)
                c = PackingColoring(*colors);
            return to_dot(g, c);
        }, py::arg("colors") = py::none())
        .def("stats", [](const Graph & g) {
            auto s = stats(g);
            py::dict out;
            out["diameter"] = s.diameter;
            out["clique_number"] = s.clique_number;
            out["min_degree"] = s.min_degree;
            out["is_bipartite"] = s.is_bipartite;
            out["is_connected"] = s.is_connected;
            return out;
        })
        .def("distances", [](const Graph & g) {
            auto d = all_pairs_distances(g);
            std::vector<std::vector<std::optional<int>>> out(g.order());
            for (VertexId u = 0; u < g.order(); ++u)
                for (int x : d.row(u))
                    out[u].push_back(x == DistanceMatrix::unreachable ? std::nullopt : std::optional<int>(x));
            return out;
        })
        .def("__eq__", [](const Graph & a, const Graph & b) { return a == b; })
        .def("__repr__", [](const Graph & g) {
            return "<Graph " + g.name() + " n=" + std::to_string(g.order()) + " edges=" + std::to_string(g.size()) + ">";
        });

    m.def("graph", [](const std::string & spec) { return generate(parse_family_spec(spec)).graph; }, py::arg("spec"),
        "Build a graph from the family mini-language, e.g. 'fssd(corona(complete:3,path:2),m=1)'.");
    m.def("from_edges", [](int n, const std::vector<std::pair<int, int>> & edges, const std::string & name) {
        std::vector<Edge> e;
        for (auto [u, v] : edges)
            e.push_back({u, v});
        return build_graph(n, e, std::nullopt, name);
    }, py::arg("n"), py::arg("edges"), py::arg("name") = "");
    m.def("fssd", &fssd, py::arg("graph"), py::arg("m"));
    m.def("neighborhood_corona", &neighborhood_corona, py::arg("graph"), py::arg("attached"));
    m.def("splitting", &splitting, py::arg("graph"));

    m.def("verify", [](const Graph & g, const std::vector<int> & colors) { return report_dict(verify(g, PackingColoring(colors))); },
        py::arg("graph"), py::arg("colors"));
    m.def("lift_to_fssd", [](const Graph & g, const std::vector<int> & colors, int mult) {
        return colors_of(lift_to_fssd(g, PackingColoring(colors), mult));
    }, py::arg("graph"), py::arg("colors"), py::arg("m"));
    m.def("greedy_coloring", [](const Graph & g, std::optional<std::vector<VertexId>> order) {
        std::vector<VertexId> o(g.order());
        if (order)
            o = *order;
        else
            std::iota(o.begin(), o.end(), 0);
        return colors_of(greedy_coloring(g, o));
    }, py::arg("graph"), py::arg("order") = py::none());

    m.def("packing_chromatic_number", [](const Graph & g, double time_budget, const std::string & order, bool parallel) {
        auto opts = options(time_budget, order, parallel);
        SolveResult r;
        {
            py::gil_scoped_release release;
            r = packing_chromatic_number(g, opts);
        }
        py::list probes;
        for (const auto & p : r.probes)
            probes.append(py::make_tuple(p.k, std::string(decide_status_name(p.status))));
        py::dict out;
        out["exact"] = r.exact();
        out["chi"] = r.exact() ? py::object(py::int_(r.chi())) : py::object(py::none());
        out["lower"] = r.lower;
        out["upper"] = r.upper;
        out["witness"] = colors_of(r.witness);
        out["probes"] = probes;
        out["nodes"] = r.nodes_explored;
        out["elapsed"] = r.elapsed;
        return out;
    }, py::arg("graph"), py::arg("time_budget") = 0.0, py::arg("order") = "degree", py::arg("parallel") = false);

    m.def("decide_k", [](const Graph & g, int k, double time_budget, const std::string & order, bool parallel) {
        auto opts = options(time_budget, order, parallel);
        DecideResult r;
        {
            py::gil_scoped_release release;
            r = decide_k(g, k, opts);
        }
        py::dict out;
        out["status"] = std::string(decide_status_name(r.status));
        out["witness"] = r.witness ? py::object(py::cast(colors_of(*r.witness))) : py::object(py::none());
        out["nodes"] = r.nodes;
        return out;
    }, py::arg("graph"), py::arg("k"), py::arg("time_budget") = 0.0, py::arg("order") = "degree", py::arg("parallel") = false);

    m.def("brute_force_chi", &brute_force_chi, py::arg("graph"), py::arg("cap") = py::none());

    m.def("pattern_names", &pattern_names);
    m.def("pattern", [](const std::string & name, int n, int p, int mult, std::optional<std::string> base) {
        PatternParams params{n, p, mult, std::nullopt};
        if (base)
            params.base = parse_family_spec(*base);
        auto pc = make_pattern(name, params);
        return py::make_tuple(pc.graph, colors_of(pc.coloring), report_dict(pc.report));
    }, py::arg("name"), py::arg("n") = 0, py::arg("p") = 2, py::arg("m") = 1, py::arg("base") = py::none());

    m.def("suite_claim_ids", &suite_claim_ids);
    m.def("_run_suite_json", [](const std::string & suite, int max_n, int max_m, double time_budget, bool parallel) {
        SuiteOptions o;
        o.suite = suite;
        o.max_n = max_n;
        o.max_m = max_m;
        o.solver.time_budget = time_budget;
        o.solver.parallel = parallel;
        std::vector<ClaimResult> results;
        {
            py::gil_scoped_release release;
            results = run_suite(o);
        }
        nlohmann::json out = nlohmann::json::array();
        for (const auto & r : results)
            out.push_back(claim_to_json(r));
        return out.dump();
    }, py::arg("suite") = "all", py::arg("max_n") = 23, py::arg("max_m") = 3, py::arg("time_budget") = 60.0, py::arg("parallel") = false);
}
