// Acceptance criteria, one line each. Exit status is non-zero if any fails.

#include "support.hpp"

#include <pcn/families.hpp>
#include <pcn/harness.hpp>
#include <pcn/io.hpp>
#include <pcn/patterns.hpp>
#include <pcn/solver.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace pcn;

namespace
{
    struct Outcome
    {
        bool pass = true;
        std::ostringstream detail;

        void expect(bool ok, const std::string & what)
        {
            if (! ok) {
                if (pass)
                    detail << "first failure: ";
                else
                    detail << "; ";
                detail << what;
            }
            pass = pass && ok;
        }
    };

    auto exact_chi(const Graph & g, double budget = 0) -> std::optional<int>
    {
        SolveOptions o;
        o.time_budget = budget;
        auto r = packing_chromatic_number(g, o);
        if (! r.exact() || ! verify(g, r.witness).valid)
            return std::nullopt;
        return r.chi();
    }

    auto name_of(int n, int m, const std::string & base) -> std::string
    {
        return "fssd(" + base + ":" + std::to_string(n) + ",m=" + std::to_string(m) + ")";
    }

    void expect_claim(Outcome & o, const ClaimResult & r)
    {
        o.expect(r.verdict == Verdict::Pass, r.claim + " on " + r.instance + " gave " + std::string(verdict_name(r.verdict)) +
                (r.note.empty() ? "" : " (" + r.note + ")"));
    }

    void criterion_1(Outcome & o)
    {
        for (int n : {3, 4, 8, 5, 6, 7, 9}) {
            int expected = (n == 3 || n == 4 || n == 8) ? 3 : 4;
            auto got = exact_chi(cycle_graph(n));
            o.expect(got == expected, "chi(C_" + std::to_string(n) + ") != " + std::to_string(expected));
        }
        o.detail << "C_3..C_9 match";
    }

    void criterion_2(Outcome & o)
    {
        for (int n = 3; n <= 5; ++n)
            for (int m = 1; m <= 2; ++m) {
                auto r = check_exact_value(ExactClaim::FssdComplete, {n, 0, m, {}}, {600, false});
                expect_claim(o, r);
                o.expect(r.observed["pattern_colors"] == n + 1, "witness for " + name_of(n, m, "complete") + " does not use n+1 colours");
            }
        o.detail << "6 instances certified at n+1 and refuted at n";
    }

    void criterion_3(Outcome & o)
    {
        for (int n = 3; n <= 8; ++n)
            for (int m = 1; m <= 2; ++m) {
                expect_claim(o, check_exact_value(ExactClaim::FssdCycle, {n, 0, m, {}}, {120, false}));
                auto got = exact_chi(fssd(cycle_graph(n), m));
                o.expect(got == (n % 2 == 0 ? 3 : 4), "solver disagrees on " + name_of(n, m, "cycle"));
            }
        o.detail << "12 instances";
    }

    void criterion_4(Outcome & o)
    {
        o.expect(exact_chi(fssd(complete_graph(2), 1)) == 2, "chi(FSSD_1(K_2)) != 2");
        for (int m = 2; m <= 4; ++m)
            o.expect(exact_chi(fssd(complete_graph(2), m)) == 3, "chi(FSSD_" + std::to_string(m) + "(K_2)) != 3");
        o.detail << "2 < 3 = 3 = 3";
    }

    void criterion_5(Outcome & o)
    {
        auto g = fssd(petersen_graph(), 1);
        SolveOptions opts;
        opts.time_budget = 600;
        auto r = packing_chromatic_number(g, opts);
        o.expect(r.exact(), "solver did not finish within 10 minutes");
        o.expect(verify(g, r.witness).valid, "witness does not verify");
        if (r.exact()) {
            o.expect(r.chi() == 5, "chi(FSSD_1(P)) = " + std::to_string(r.chi()));
            o.detail << "chi=" << r.chi() << ", " << r.nodes_explored << " nodes";
        }
    }

    void criterion_6(Outcome & o)
    {
        auto three = pattern_fssd_kn_corona(3, 2, 1);
        o.expect(three.report.valid && three.coloring.k() == 6, "K_3 corona pattern is not a valid 6-colouring");
        SolveOptions opts;
        opts.time_budget = 900;
        auto lower = decide_k(three.graph, 5, opts);
        o.expect(lower.status == DecideStatus::Infeasible, "decide_k(5) on FSSD_1(K_3*P_2) is " + std::string(decide_status_name(lower.status)));

        auto start = std::chrono::steady_clock::now();
        auto four = pattern_fssd_kn_corona(4, 2, 1);
        double pattern_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.expect(four.report.valid && four.coloring.k() == 7, "K_4 corona pattern is not a valid 7-colouring");
        o.expect(pattern_time < 1.0, "K_4 pattern took longer than 1 s");
        opts.time_budget = 300;
        auto lower4 = decide_k(four.graph, 6, opts);
        o.expect(lower4.status != DecideStatus::Feasible, "FSSD_1(K_4*P_2) has a 6-colouring");
        o.detail << "n=3: 6 verified, k=5 infeasible; n=4: 7 verified, k=6 "
                 << (lower4.status == DecideStatus::Infeasible ? "infeasible" : "skipped-budget");
    }

    void criterion_7(Outcome & o)
    {
        int checked = 0;
        for (int n = 3; n <= 23; ++n)
            for (int p = 2; p <= 3; ++p)
                for (int m = 1; m <= 2; ++m) {
                    auto r = check_upper_bound_cn_corona(n, p, m);
                    expect_claim(o, r);
                    ++checked;
                }
        o.detail << checked << " instances, n = 3..23, all within the table";
    }

    void criterion_8(Outcome & o)
    {
        for (int n = 3; n <= 6; ++n)
            for (int m = 1; m <= 2; ++m)
                expect_claim(o, check_exact_value(ExactClaim::SplitCycle, {n, 0, m, {}}, {300, false}));
        for (int n = 3; n <= 4; ++n)
            expect_claim(o, check_exact_value(ExactClaim::SplitComplete, {n, 0, 1, {}}, {300, false}));
        o.detail << "10 instances certified";
    }

    auto family_graphs_up_to(int max_vertices) -> std::vector<Graph>
    {
        std::vector<std::string> specs;
        for (int n = 1; n <= max_vertices; ++n) {
            specs.push_back("path:" + std::to_string(n));
            specs.push_back("complete:" + std::to_string(n));
            specs.push_back("star:" + std::to_string(n));
            if (n >= 3)
                specs.push_back("cycle:" + std::to_string(n));
            for (int b = n; n + b <= max_vertices; ++b)
                specs.push_back("bipartite:" + std::to_string(n) + "x" + std::to_string(b));
        }
        for (const char * s : {"split(path:2)", "split(path:3)", "split(complete:3)", "split(cycle:3)", "corona(complete:2,path:2)",
                 "corona(path:2,complete:2)", "corona(path:3,complete:1)", "fssd(complete:2,m=1)", "fssd(complete:2,m=2)",
                 "fssd(complete:2,m=3)", "fssd(complete:2,m=4)", "fssd(complete:2,m=5)", "fssd(path:3,m=1)", "fssd(path:3,m=2)",
                 "fssd(path:4,m=1)", "fssd(complete:3,m=1)", "fssd(star:3,m=1)", "fssd(split(complete:2),m=1)"})
            specs.push_back(s);

        std::vector<Graph> out;
        for (const auto & s : specs) {
            auto g = generate(parse_family_spec(s)).graph;
            if (g.order() <= max_vertices && stats(g).is_connected)
                out.push_back(std::move(g));
        }
        return out;
    }

    void criterion_9(Outcome & o)
    {
        int agreements = 0;
        auto family = family_graphs_up_to(7);
        for (const auto & g : family) {
            o.expect(exact_chi(g) == brute_force_chi(g), "solver and brute force disagree on " + g.name());
            ++agreements;
        }
        auto random = random_bases(50, 9, 20200207);
        for (const auto & g : random) {
            o.expect(exact_chi(g) == brute_force_chi(g), "solver and brute force disagree on " + g.name());
            ++agreements;
        }

        std::mt19937_64 rng(61);
        int hereditary = 0;
        for (const auto & g : random) {
            auto whole = exact_chi(g);
            std::vector<VertexId> keep;
            for (VertexId v = 0; v < g.order(); ++v)
                if (rng() % 3)
                    keep.push_back(v);
            if (keep.empty())
                continue;
            auto part = induced_subgraph(g, keep);
            o.expect(exact_chi(part.graph) <= whole, "induced subgraph of " + g.name() + " needs more colours");
            ++hereditary;
        }

        auto bases = random_bases(20, 8, 20200208);
        int sandwiches = 0, chains = 0;
        for (const auto & g : bases) {
            std::optional<int> prev;
            for (int m = 1; m <= 2; ++m) {
                expect_claim(o, check_bounds(g, m, {120, false}));
                ++sandwiches;
                auto now = exact_chi(fssd(g, m));
                o.expect(now.has_value(), "no exact value for " + g.name());
                if (prev && now)
                    o.expect(*prev <= *now, "chi(FSSD_m) decreased on " + g.name());
                prev = now;
            }
            ++chains;
        }
        for (const char * s : {"complete:2", "complete:3", "cycle:4", "path:4"})
            expect_claim(o, check_stabilization(parse_family_spec(s), {120, false}));

        o.detail << agreements << " oracle agreements (" << family.size() << " family, " << random.size() << " random), " << hereditary
                 << " hereditary, " << sandwiches << " sandwiches, " << chains << " monotone chains, 4 stabilizations";
    }

    void criterion_10(Outcome & o)
    {
        std::vector<std::string> specs = {"path:6", "cycle:9", "complete:5", "star:4", "petersen", "bipartite:3x4", "split(cycle:6)",
            "split(complete:4)", "corona(complete:3,path:2)", "corona(cycle:5,path:3)", "corona(complete:1,path:3)",
            "fssd(complete:4,m=2)", "fssd(petersen,m=1)", "fssd(corona(complete:3,path:2),m=1)", "fssd(corona(cycle:9,path:2),m=2)",
            "fssd(split(cycle:5),m=3)", "fssd(split(complete:4),m=1)", "fssd(star:3,m=2)"};
        for (const auto & s : specs) {
            auto g = generate(parse_family_spec(s)).graph;
            auto j = graph_to_json(g);
            o.expect(graph_from_json(nlohmann::json::parse(j.dump())) == g, "JSON round-trip changed " + s);
        }

        int runs = 0;
        for (const char * s : {"fssd(petersen,m=1)", "fssd(corona(complete:3,path:2),m=1)", "fssd(split(cycle:5),m=2)", "petersen"}) {
            auto g = generate(parse_family_spec(s)).graph;
            auto a = packing_chromatic_number(g), b = packing_chromatic_number(g);
            o.expect(a.exact() && b.exact() && a.chi() == b.chi() && a.witness == b.witness, std::string("non-deterministic result on ") + s);
            ++runs;
        }
        o.detail << specs.size() << " families round-tripped, " << runs << " repeated solves identical";
    }

    struct Criterion
    {
        int id;
        const char * title;
        double limit_seconds;
        std::function<void(Outcome &)> run;
    };
}

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "cycle baselines", 1, criterion_1},
        {2, "FSSD of complete graphs", 120, criterion_2},
        {3, "FSSD of cycles", 120, criterion_3},
        {4, "K_2 strict increase", 1, criterion_4},
        {5, "Petersen subdivision", 600, criterion_5},
        {6, "K_n corona value", 900 + 300, criterion_6},
        {7, "C_n corona upper bounds", 60, criterion_7},
        {8, "splitting graphs", 600, criterion_8},
        {9, "property suites", 0, criterion_9},
        {10, "round-trip and determinism", 0, criterion_10},
    };

    int failures = 0;
    for (const auto & c : criteria) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        }
        catch (const std::exception & e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && elapsed > c.limit_seconds)
            o.expect(false, "took " + std::to_string(elapsed) + " s");
        failures += ! o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title << "  [" << std::fixed
                  << std::setprecision(3) << elapsed << " s]  " << o.detail.str() << std::endl;
    }
    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
