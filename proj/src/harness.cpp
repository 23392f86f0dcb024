#include <pcn/errors.hpp>
#include <pcn/harness.hpp>
#include <pcn/io.hpp>
#include <pcn/patterns.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

namespace pcn
{
    using nlohmann::json;

    namespace
    {
        auto probes_json(const std::vector<Probe> & probes) -> json
        {
            json out = json::array();
            for (const auto & p : probes)
                out.push_back({{"k", p.k}, {"status", decide_status_name(p.status)}});
            return out;
        }

        auto solve_json(const SolveResult & r) -> json
        {
            json out = {{"status", r.exact() ? "exact" : "timeout-with-bounds"}, {"lower", r.lower}, {"upper", r.upper},
                {"probes", probes_json(r.probes)}, {"nodes", r.nodes_explored}};
            if (r.exact())
                out["chi"] = r.upper;
            return out;
        }

        auto violations_json(const VerificationReport & report) -> json
        {
            json out = json::array();
            for (const auto & v : report.violations)
                out.push_back({v.u, v.v, v.color, v.distance});
            return out;
        }

        auto counterexample(const Graph & g, const PackingColoring & c, const VerificationReport & report) -> json
        {
            return {{"graph", graph_to_json(g)}, {"coloring", coloring_to_json(g.name(), c)}, {"violations", violations_json(report)}};
        }

        auto colors_json(const PackingColoring & c) -> json
        {
            return std::vector<int>(c.colors().begin(), c.colors().end());
        }

        auto solve(const Graph & g, const HarnessOptions & opts) -> SolveResult
        {
            return packing_chromatic_number(g, opts.solve_options());
        }

        auto describe(const Graph & g) -> std::string
        {
            return g.name().empty() ? "graph(n=" + std::to_string(g.order()) + ")" : g.name();
        }

        void require(bool condition, const std::string & message)
        {
            if (! condition)
                throw InvalidSpec(message);
        }
    }

    auto verdict_name(Verdict v) -> std::string_view
    {
        switch (v) {
            case Verdict::Pass: return "pass";
            case Verdict::Fail: return "fail";
            case Verdict::SkippedBudget: return "skipped-budget";
        }
        return "?";
    }

    auto claim_to_json(const ClaimResult & r) -> json
    {
        return {{"claim", r.claim}, {"instance", r.instance}, {"expected", r.expected}, {"observed", r.observed},
            {"verdict", verdict_name(r.verdict)}, {"note", r.note}, {"certificate", r.certificate}};
    }

    auto HarnessOptions::solve_options() const -> SolveOptions
    {
        SolveOptions o;
        o.time_budget = time_budget;
        o.parallel = parallel;
        return o;
    }

    auto check_bounds(const Graph & base, int m, const HarnessOptions & opts) -> ClaimResult
    {
        auto st = stats(base);
        require(st.is_connected && base.order() >= 3, "bounds check needs a connected base with at least 3 vertices");

        ClaimResult r;
        r.claim = "prop-bounds";
        r.instance = "fssd(" + describe(base) + ",m=" + std::to_string(m) + ")";
        r.expected = "omega(G)+1 <= chi(FSSD_m(G)) <= chi(G)+1";

        auto base_chi = solve(base, opts);
        auto sub = fssd(base, m);
        auto sub_chi = solve(sub, opts);
        r.observed = {{"omega", st.clique_number}, {"chi_base", solve_json(base_chi)}, {"chi_fssd", solve_json(sub_chi)}};
        r.certificate = {{"base_witness", colors_json(base_chi.witness)}, {"fssd_witness", colors_json(sub_chi.witness)}};

        if (! base_chi.exact() || ! sub_chi.exact()) {
            // Bounds can still refute the sandwich without exact values.
            if (sub_chi.upper < st.clique_number + 1 || sub_chi.lower > base_chi.upper + 1)
                r.verdict = Verdict::Fail;
            else
                r.verdict = Verdict::SkippedBudget;
            return r;
        }
        int lo = st.clique_number + 1, mid = sub_chi.chi(), hi = base_chi.chi() + 1;
        r.observed["sandwich"] = {lo, mid, hi};
        r.verdict = (lo <= mid && mid <= hi) ? Verdict::Pass : Verdict::Fail;
        if (r.verdict == Verdict::Fail)
            r.certificate["fssd_graph"] = graph_to_json(sub);
        return r;
    }

    auto check_bounds(const FamilySpec & base, int m, const HarnessOptions & opts) -> ClaimResult
    {
        return check_bounds(generate(base).graph, m, opts);
    }

    auto check_stabilization(const Graph & base, const HarnessOptions & opts) -> ClaimResult
    {
        auto st = stats(base);
        require(st.is_connected && st.min_degree >= 1, "stabilization check needs a connected base with an edge");

        ClaimResult r;
        r.claim = "prop-stabilization";
        r.instance = describe(base);

        auto base_chi = solve(base, opts);
        if (! base_chi.exact()) {
            r.verdict = Verdict::SkippedBudget;
            r.observed = {{"chi_base", solve_json(base_chi)}};
            return r;
        }
        const int chi = base_chi.chi(), delta = st.min_degree;
        const int threshold = chi / delta + 1;
        r.expected = {{"threshold_m", threshold}, {"relation", "chi(FSSD_m0) = chi(FSSD_m0+1); non-decreasing in m"}};

        json chain = json::array();
        std::vector<int> values;
        for (int m = 1; m <= threshold + 1; ++m) {
            auto res = solve(fssd(base, m), opts);
            if (! res.exact()) {
                r.verdict = Verdict::SkippedBudget;
                r.note = "solver budget exhausted at m=" + std::to_string(m);
                r.observed = {{"chi_base", chi}, {"min_degree", delta}, {"chi_by_m", chain}};
                return r;
            }
            values.push_back(res.chi());
            chain.push_back(res.chi());
            r.certificate["witness_m" + std::to_string(m)] = colors_json(res.witness);
        }
        r.observed = {{"chi_base", chi}, {"min_degree", delta}, {"chi_by_m", chain}};

        bool monotone = std::is_sorted(values.begin(), values.end());
        bool stable = values[threshold - 1] == values[threshold];
        r.verdict = monotone && stable ? Verdict::Pass : Verdict::Fail;
        if (! monotone)
            r.note = "chi(FSSD_m) decreased along m";
        else if (! stable)
            r.note = "chi(FSSD_m) changed between m0 and m0+1";
        return r;
    }

    auto check_stabilization(const FamilySpec & base, const HarnessOptions & opts) -> ClaimResult
    {
        return check_stabilization(generate(base).graph, opts);
    }

    auto exact_claim_name(ExactClaim c) -> std::string_view
    {
        switch (c) {
            case ExactClaim::FssdComplete: return "fssd-complete";
            case ExactClaim::FssdCycle: return "fssd-cycle";
            case ExactClaim::FssdBipartite: return "fssd-bipartite";
            case ExactClaim::KnCorona: return "kn-corona";
            case ExactClaim::SplitCycle: return "split-cycle";
            case ExactClaim::SplitComplete: return "split-complete";
        }
        return "?";
    }

    auto exact_claim_from_name(std::string_view name) -> std::optional<ExactClaim>
    {
        for (auto c : {ExactClaim::FssdComplete, ExactClaim::FssdCycle, ExactClaim::FssdBipartite, ExactClaim::KnCorona,
                 ExactClaim::SplitCycle, ExactClaim::SplitComplete})
            if (exact_claim_name(c) == name)
                return c;
        return std::nullopt;
    }

    auto exact_claim_value(ExactClaim claim, const ExactParams & p) -> int
    {
        require(p.m >= 1, "m must be at least 1");
        switch (claim) {
            case ExactClaim::FssdComplete:
                require(p.n >= 3, "fssd-complete holds for n >= 3");
                return p.n + 1;
            case ExactClaim::FssdCycle:
                require(p.n >= 3, "fssd-cycle holds for n >= 3");
                return p.n % 2 == 0 ? 3 : 4;
            case ExactClaim::FssdBipartite:
                require(p.base.has_value(), "fssd-bipartite needs a base graph");
                return 3;
            case ExactClaim::KnCorona:
                require(p.n >= 3 && p.p >= 2, "kn-corona holds for n >= 3, p >= 2");
                return p.n + 3;
            case ExactClaim::SplitCycle:
                require(p.n >= 3, "split-cycle holds for n >= 3");
                return p.n % 2 == 0 ? 3 : 5;
            case ExactClaim::SplitComplete:
                require(p.n >= 3, "split-complete holds for n >= 3");
                return p.n + 2;
        }
        return 0;
    }

    auto check_exact_value(ExactClaim claim, const ExactParams & params, const HarnessOptions & opts) -> ClaimResult
    {
        const int expected = exact_claim_value(claim, params);

        PatternColoring pattern;
        switch (claim) {
            case ExactClaim::FssdComplete: pattern = pattern_fssd_complete(params.n, params.m); break;
            case ExactClaim::FssdCycle: pattern = pattern_fssd_cycle(params.n, params.m); break;
            case ExactClaim::FssdBipartite: {
                auto base = generate(*params.base).graph;
                require(base.order() >= 3 && bipartition(base).has_value(), "fssd-bipartite needs a bipartite base with at least 3 vertices");
                pattern = pattern_fssd_bipartite(base, params.m);
                pattern.graph = pattern.graph.with_name(FamilySpec::fssd(*params.base, params.m).to_string());
                break;
            }
            case ExactClaim::KnCorona: pattern = pattern_fssd_kn_corona(params.n, params.p, params.m); break;
            case ExactClaim::SplitCycle: pattern = pattern_fssd_splitting_cycle(params.n, params.m); break;
            case ExactClaim::SplitComplete: pattern = pattern_fssd_splitting_complete(params.n, params.m); break;
        }

        ClaimResult r;
        r.claim = std::string(exact_claim_name(claim));
        r.instance = pattern.graph.name();
        r.expected = expected;

        const bool upper_ok = pattern.report.valid && pattern.coloring.k() <= expected;
        r.observed = {{"pattern_colors", pattern.coloring.k()}, {"pattern_valid", pattern.report.valid}};
        r.certificate = {{"upper", colors_json(pattern.coloring)}};
        if (! upper_ok) {
            r.verdict = Verdict::Fail;
            r.note = pattern.report.valid ? "pattern uses more colours than the claimed value" : "pattern colouring does not verify";
            r.certificate = counterexample(pattern.graph, pattern.coloring, pattern.report);
            return r;
        }

        auto lower = decide_k(pattern.graph, expected - 1, opts.solve_options());
        r.observed["lower_probe"] = {{"k", expected - 1}, {"status", decide_status_name(lower.status)}, {"nodes", lower.nodes}};
        r.certificate["lower"] = {{"k", expected - 1}, {"status", decide_status_name(lower.status)}};
        switch (lower.status) {
            case DecideStatus::Infeasible:
                r.verdict = Verdict::Pass;
                r.observed["chi"] = expected;
                break;
            case DecideStatus::Feasible: {
                r.verdict = Verdict::Fail;
                r.note = "found a packing colouring with fewer colours than claimed";
                auto report = verify(pattern.graph, *lower.witness);
                r.certificate = counterexample(pattern.graph, *lower.witness, report);
                break;
            }
            case DecideStatus::Timeout:
                r.verdict = Verdict::SkippedBudget;
                r.note = "upper bound certified; lower side ran out of budget";
                break;
        }
        return r;
    }

    auto check_upper_bound_cn_corona(int n, int p, int m) -> ClaimResult
    {
        auto pattern = pattern_fssd_cn_corona(n, p, m);
        const int bound = cn_corona_color_bound(n);

        ClaimResult r;
        r.claim = "cn-corona-upper";
        r.instance = pattern.graph.name();
        r.expected = {{"max_colors", bound}};
        r.observed = {{"colors", pattern.coloring.k()}, {"valid", pattern.report.valid}};
        if (n >= 4) {
            auto dp = cn_corona_digit_pattern(n);
            r.observed["rule"] = dp.rule;
            r.observed["originals"] = dp.assemble();
        }
        if (! pattern.report.valid) {
            r.verdict = Verdict::Fail;
            const auto & v = pattern.report.violations.front();
            r.note = "published pattern clashes: " + pattern.graph.label(v.u).render() + " and " + pattern.graph.label(v.v).render() +
                " share colour " + std::to_string(v.color) + " at distance " + std::to_string(v.distance);
            r.certificate = counterexample(pattern.graph, pattern.coloring, pattern.report);
        }
        else if (pattern.coloring.k() > bound) {
            r.verdict = Verdict::Fail;
            r.note = "pattern exceeds the colour-count table";
        }
        else {
            r.verdict = Verdict::Pass;
            r.certificate = {{"coloring", colors_json(pattern.coloring)}};
        }
        return r;
    }

    auto check_lemma_witnesses(int n, int p, int m, const HarnessOptions & opts) -> ClaimResult
    {
        require(n >= 3 && p >= 2 && m >= 1, "lemma check needs n >= 3, p >= 2, m >= 1");
        auto g = generate(FamilySpec::fssd(FamilySpec::corona(FamilySpec::complete(n), FamilySpec::path(p)), m)).graph;
        auto dist = all_pairs_distances(g);

        ClaimResult r;
        r.claim = "lemma-witnesses";
        r.instance = g.name();
        r.expected = "no witness with k <= n+3 colours u_i or v_{i,g} with 1";
        r.verdict = Verdict::Pass;

        json probes = json::array();
        bool any_witness = false;
        for (int k = n + 3; k >= 1; --k) {
            auto out = decide_k(g, dist, k, opts.solve_options());
            probes.push_back({{"k", k}, {"status", decide_status_name(out.status)}});
            if (out.status == DecideStatus::Infeasible)
                break;
            if (out.status == DecideStatus::Timeout) {
                if (! any_witness)
                    r.verdict = Verdict::SkippedBudget;
                r.note = "budget exhausted at k=" + std::to_string(k);
                break;
            }
            any_witness = true;
            const auto & w = *out.witness;
            for (VertexId v = 0; v < g.order(); ++v) {
                auto kind = g.label(v).kind();
                if ((kind == LabelKind::Original || kind == LabelKind::CopyVertex) && w[v] == 1) {
                    r.verdict = Verdict::Fail;
                    r.note = "witness at k=" + std::to_string(k) + " colours " + g.label(v).render() + " with 1";
                    r.certificate = counterexample(g, w, verify(dist, w));
                    break;
                }
            }
            if (r.verdict == Verdict::Fail)
                break;
            r.certificate["witness_k" + std::to_string(k)] = colors_json(w);
        }
        r.observed = {{"probes", probes}};
        return r;
    }

    auto scan_fssd_gap(const std::vector<Graph> & sample, int m_max, const HarnessOptions & opts) -> GapScanReport
    {
        require(m_max >= 1, "scan needs m_max >= 1");
        GapScanReport report{m_max, {}};
        for (const auto & base : sample) {
            require(base.order() <= 8, "scan bases are limited to 8 vertices");
            GapRow row{describe(base), {}, {}};
            for (int m = 1; m <= m_max; ++m) {
                auto res = solve(fssd(base, m), opts);
                row.chi_by_m.push_back(res.exact() ? std::optional<int>(res.chi()) : std::nullopt);
            }
            for (int m = 1; m < m_max; ++m)
                if (row.chi_by_m[m - 1] && row.chi_by_m[m] && *row.chi_by_m[m - 1] < *row.chi_by_m[m])
                    row.increases_at.push_back(m);
            report.rows.push_back(std::move(row));
        }
        return report;
    }

    auto gap_scan_to_json(const GapScanReport & report) -> json
    {
        json rows = json::array();
        for (const auto & row : report.rows) {
            json values = json::array();
            for (const auto & v : row.chi_by_m)
                values.push_back(v ? json(*v) : json(nullptr));
            rows.push_back({{"base", row.base}, {"chi_by_m", values}, {"increases_at", row.increases_at}});
        }
        return {{"m_max", report.m_max}, {"rows", rows}};
    }

    auto random_bases(int count, int max_vertices, std::uint64_t seed) -> std::vector<Graph>
    {
        require(max_vertices >= 4, "random bases need at least 4 vertices");
        std::mt19937_64 rng(seed);
        constexpr double densities[] = {0.3, 0.4, 0.5, 0.6};
        std::vector<Graph> result;
        for (int i = 0; i < count; ++i) {
            int n = 4 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices - 3));
            double p = densities[rng() % 4];
            result.push_back(random_connected_graph(n, p, rng()));
        }
        return result;
    }

    namespace
    {
        using Runner = std::function<void(const SuiteOptions &, std::vector<ClaimResult> &)>;

        auto clip(int limit, int cap) -> int
        {
            return std::min(limit, cap);
        }

        void run_cycle_baseline(const SuiteOptions & o, std::vector<ClaimResult> & out)
        {
            for (int n = 3; n <= clip(o.max_n, 12); ++n) {
                auto g = cycle_graph(n);
                auto res = solve(g, o.solver);
                int expected = (n == 3 || n % 4 == 0) ? 3 : 4;
                ClaimResult r{"cycle-baseline", g.name(), expected, solve_json(res), Verdict::Pass, {}, {{"witness", colors_json(res.witness)}}};
                if (! res.exact())
                    r.verdict = Verdict::SkippedBudget;
                else if (res.chi() != expected)
                    r.verdict = Verdict::Fail;
                out.push_back(std::move(r));
            }
        }

        auto bound_bases(const SuiteOptions & o) -> std::vector<Graph>
        {
            std::vector<Graph> bases;
            for (const char * s : {"complete:3", "complete:4", "complete:5", "cycle:4", "cycle:5", "cycle:6", "path:3", "path:4", "star:3", "petersen"})
                bases.push_back(generate(parse_family_spec(s)).graph);
            for (auto & g : random_bases(10, 8, o.seed))
                bases.push_back(std::move(g));
            return bases;
        }

        void run_bounds(const SuiteOptions & o, std::vector<ClaimResult> & out)
        {
            for (const auto & base : bound_bases(o))
                for (int m = 1; m <= clip(o.max_m, 2); ++m)
                    out.push_back(check_bounds(base, m, o.solver));
        }

        void run_stabilization(const SuiteOptions & o, std::vector<ClaimResult> & out)
        {
            for (const char * s : {"complete:2", "complete:3", "cycle:4", "path:4", "cycle:5", "star:3"})
                out.push_back(check_stabilization(parse_family_spec(s), o.solver));
        }

        void run_hereditary(const SuiteOptions & o, std::vector<ClaimResult> & out)
        {
            std::vector<Graph> graphs;
            for (const char * s : {"fssd(complete:4,m=1)", "fssd(cycle:5,m=2)", "split(cycle:5)", "petersen", "corona(complete:3,path:2)"})
                graphs.push_back(generate(parse_family_spec(s)).graph);
            for (auto & g : random_bases(4, 8, o.seed + 1))
                graphs.push_back(std::move(g));

            std::mt19937_64 rng(o.seed + 2);
            for (const auto & g : graphs) {
                auto whole = solve(g, o.solver);
                ClaimResult r{"prop-hereditary", describe(g), "chi(H) <= chi(G) for induced H", json::array(), Verdict::Pass, {}, json::object()};
                if (! whole.exact()) {
                    r.verdict = Verdict::SkippedBudget;
                    out.push_back(std::move(r));
                    continue;
                }
                for (int trial = 0; trial < 3; ++trial) {
                    std::vector<VertexId> keep;
                    for (VertexId v = 0; v < g.order(); ++v)
                        if (rng() % 3 != 0)
                            keep.push_back(v);
                    if (keep.empty())
                        keep.push_back(0);
                    auto sub = induced_subgraph(g, keep);
                    auto part = solve(sub.graph, o.solver);
                    r.observed.push_back({{"kept", keep}, {"chi_sub", part.exact() ? json(part.chi()) : json(nullptr)}, {"chi", whole.chi()}});
                    if (! part.exact()) {
                        if (part.lower > whole.chi())
                            r.verdict = Verdict::Fail;
                        else if (r.verdict == Verdict::Pass)
                            r.verdict = Verdict::SkippedBudget;
                    }
                    else if (part.chi() > whole.chi()) {
                        r.verdict = Verdict::Fail;
                        r.certificate = {{"kept", keep}, {"sub_witness", colors_json(part.witness)}};
                    }
                }
                out.push_back(std::move(r));
            }
        }

        void run_exact(ExactClaim claim, const SuiteOptions & o, std::vector<ClaimResult> & out)
        {
            switch (claim) {
                case ExactClaim::FssdComplete:
                    for (int n = 3; n <= clip(o.max_n, 6); ++n)
                        for (int m = 1; m <= clip(o.max_m, 2); ++m)
                            out.push_back(check_exact_value(claim, {n, 0, m, {}}, o.solver));
                    break;
                case ExactClaim::FssdCycle:
                    for (int n = 3; n <= clip(o.max_n, 8); ++n)
                        for (int m = 1; m <= clip(o.max_m, 3); ++m)
                            out.push_back(check_exact_value(claim, {n, 0, m, {}}, o.solver));
                    break;
                case ExactClaim::FssdBipartite:
                    for (const char * s : {"path:3", "path:5", "cycle:4", "cycle:6", "star:3", "star:5", "bipartite:2x3", "bipartite:3x3"})
                        for (int m = 1; m <= clip(o.max_m, 3); ++m)
                            out.push_back(check_exact_value(claim, {0, 0, m, parse_family_spec(s)}, o.solver));
                    break;
                case ExactClaim::KnCorona:
                    for (int n = 3; n <= clip(o.max_n, 6); ++n)
                        for (int p = 2; p <= 3; ++p)
                            for (int m = 1; m <= clip(o.max_m, 2); ++m)
                                out.push_back(check_exact_value(claim, {n, p, m, {}}, o.solver));
                    break;
                case ExactClaim::SplitCycle:
                    for (int n = 3; n <= clip(o.max_n, 8); ++n)
                        for (int m = 1; m <= clip(o.max_m, 2); ++m)
                            out.push_back(check_exact_value(claim, {n, 0, m, {}}, o.solver));
                    break;
                case ExactClaim::SplitComplete:
                    for (int n = 3; n <= clip(o.max_n, 6); ++n)
                        for (int m = 1; m <= clip(o.max_m, 2); ++m)
                            out.push_back(check_exact_value(claim, {n, 0, m, {}}, o.solver));
                    break;
            }
        }

        void run_cn_corona(const SuiteOptions & o, std::vector<ClaimResult> & out)
        {
            for (int n = 3; n <= clip(o.max_n, 23); ++n)
                for (int p = 2; p <= 3; ++p)
                    for (int m = 1; m <= clip(o.max_m, 3); ++m)
                        out.push_back(check_upper_bound_cn_corona(n, p, m));
        }

        void run_lemma(const SuiteOptions & o, std::vector<ClaimResult> & out)
        {
            out.push_back(check_lemma_witnesses(3, 2, 1, o.solver));
            if (o.max_m >= 2)
                out.push_back(check_lemma_witnesses(3, 2, 2, o.solver));
            out.push_back(check_lemma_witnesses(3, 3, 1, o.solver));
            if (o.max_n >= 4)
                out.push_back(check_lemma_witnesses(4, 2, 1, o.solver));
        }

        void run_remark_k2(const SuiteOptions & o, std::vector<ClaimResult> & out)
        {
            auto scan = scan_fssd_gap({complete_graph(2)}, 4, o.solver);
            const auto & row = scan.rows.front();
            ClaimResult r{"remark-k2", "fssd(complete:2,m=1..4)", {{"chi_by_m", {2, 3, 3, 3}}, {"increases_at", {1}}},
                gap_scan_to_json(scan)["rows"][0], Verdict::Pass, {}, json::object()};
            bool complete = std::all_of(row.chi_by_m.begin(), row.chi_by_m.end(), [](const auto & v) { return v.has_value(); });
            if (! complete)
                r.verdict = Verdict::SkippedBudget;
            else if (row.chi_by_m != std::vector<std::optional<int>>{2, 3, 3, 3} || row.increases_at != std::vector<int>{1})
                r.verdict = Verdict::Fail;
            out.push_back(std::move(r));
        }

        void run_remark_petersen(const SuiteOptions & o, std::vector<ClaimResult> & out)
        {
            auto p = petersen_graph();
            auto first = solve(fssd(p, 1), o.solver);
            ClaimResult r{"remark-petersen", "fssd(petersen,m=1)", 5, solve_json(first), Verdict::Pass, {}, {{"witness", colors_json(first.witness)}}};
            if (! first.exact())
                r.verdict = Verdict::SkippedBudget;
            else if (first.chi() != 5)
                r.verdict = Verdict::Fail;
            out.push_back(std::move(r));

            // chi(FSSD_m(P)) = chi(FSSD_{m+1}(P)) >= 6 for m >= 2.
            ClaimResult s{"remark-petersen", "fssd(petersen,m=2.." + std::to_string(std::max(3, clip(o.max_m, 3))) + ")",
                ">= 6 and constant in m", json::array(), Verdict::Pass, {}, json::object()};
            std::vector<int> values;
            for (int m = 2; m <= std::max(3, clip(o.max_m, 3)); ++m) {
                auto res = solve(fssd(p, m), o.solver);
                s.observed.push_back(solve_json(res));
                if (! res.exact()) {
                    if (res.upper < 6)
                        s.verdict = Verdict::Fail;
                    else if (s.verdict == Verdict::Pass)
                        s.verdict = Verdict::SkippedBudget;
                    continue;
                }
                values.push_back(res.chi());
                s.certificate["witness_m" + std::to_string(m)] = colors_json(res.witness);
            }
            if (s.verdict != Verdict::Fail && ! values.empty()) {
                bool ok = std::all_of(values.begin(), values.end(), [&](int v) { return v >= 6 && v == values.front(); });
                if (! ok)
                    s.verdict = Verdict::Fail;
            }
            out.push_back(std::move(s));
        }

        void run_gap_scan(const SuiteOptions & o, std::vector<ClaimResult> & out)
        {
            std::vector<Graph> sample;
            for (const char * s : {"complete:2", "path:3", "path:4", "complete:3", "cycle:4", "cycle:5", "star:3", "complete:4", "bipartite:2x3"})
                sample.push_back(generate(parse_family_spec(s)).graph);
            for (auto & g : random_bases(6, 8, o.seed + 3))
                sample.push_back(std::move(g));

            auto scan = scan_fssd_gap(sample, clip(o.max_m, 3), o.solver);
            auto rows = gap_scan_to_json(scan)["rows"];
            for (std::size_t i = 0; i < scan.rows.size(); ++i) {
                const auto & row = scan.rows[i];
                ClaimResult r{"scan-fssd-gap", row.base, "tabulate only", rows[i], Verdict::Pass, {}, json::object()};
                if (std::any_of(row.chi_by_m.begin(), row.chi_by_m.end(), [](const auto & v) { return ! v; }))
                    r.verdict = Verdict::SkippedBudget;
                for (int m : row.increases_at)
                    r.note += (r.note.empty() ? "strict increase at m=" : ",") + std::to_string(m);
                if (std::any_of(row.increases_at.begin(), row.increases_at.end(), [](int m) { return m >= 2; }))
                    r.note += " (beyond m=1)";
                out.push_back(std::move(r));
            }
        }

        auto runners() -> const std::vector<std::pair<std::string, Runner>> &
        {
            static const std::vector<std::pair<std::string, Runner>> table = {
                {"cycle-baseline", run_cycle_baseline},
                {"prop-hereditary", run_hereditary},
                {"prop-bounds", run_bounds},
                {"prop-stabilization", run_stabilization},
                {"fssd-complete", [](const SuiteOptions & o, auto & out) { run_exact(ExactClaim::FssdComplete, o, out); }},
                {"fssd-cycle", [](const SuiteOptions & o, auto & out) { run_exact(ExactClaim::FssdCycle, o, out); }},
                {"fssd-bipartite", [](const SuiteOptions & o, auto & out) { run_exact(ExactClaim::FssdBipartite, o, out); }},
                {"kn-corona", [](const SuiteOptions & o, auto & out) { run_exact(ExactClaim::KnCorona, o, out); }},
                {"split-cycle", [](const SuiteOptions & o, auto & out) { run_exact(ExactClaim::SplitCycle, o, out); }},
                {"split-complete", [](const SuiteOptions & o, auto & out) { run_exact(ExactClaim::SplitComplete, o, out); }},
                {"cn-corona-upper", run_cn_corona},
                {"lemma-witnesses", run_lemma},
                {"remark-k2", run_remark_k2},
                {"remark-petersen", run_remark_petersen},
                {"scan-fssd-gap", run_gap_scan},
            };
            return table;
        }
    }

    auto suite_claim_ids() -> std::vector<std::string>
    {
        std::vector<std::string> ids;
        for (const auto & [id, _] : runners())
            ids.push_back(id);
        return ids;
    }

    auto run_suite(const SuiteOptions & o) -> std::vector<ClaimResult>
    {
        if (o.max_n < 3 || o.max_m < 1)
            throw std::invalid_argument("suite needs max-n >= 3 and max-m >= 1");
        std::vector<ClaimResult> results;
        bool matched = false;
        for (const auto & [id, run] : runners())
            if (o.suite == "all" || o.suite == id) {
                matched = true;
                run(o, results);
            }
        if (! matched)
            throw std::invalid_argument("unknown suite '" + o.suite + "'");
        return results;
    }

    auto format_table(const std::vector<ClaimResult> & results) -> std::string
    {
        auto shorten = [](std::string s, std::size_t width) {
            if (s.size() > width)
                s = s.substr(0, width - 3) + "...";
            return s;
        };

        std::ostringstream out;
        out << std::left << std::setw(20) << "claim" << std::setw(42) << "instance" << std::setw(16) << "verdict" << "note\n";
        std::map<Verdict, int> tally;
        for (const auto & r : results) {
            ++tally[r.verdict];
            out << std::left << std::setw(20) << r.claim << std::setw(42) << shorten(r.instance, 40) << std::setw(16)
                << verdict_name(r.verdict) << r.note << '\n';
        }
        out << "verdicts=pass:" << tally[Verdict::Pass] << ",fail:" << tally[Verdict::Fail] << ",skipped:" << tally[Verdict::SkippedBudget] << '\n';
        return out.str();
    }

    auto suite_exit_code(const std::vector<ClaimResult> & results) -> int
    {
        bool fail = false, skip = false;
        for (const auto & r : results) {
            fail |= r.verdict == Verdict::Fail;
            skip |= r.verdict == Verdict::SkippedBudget;
        }
        return fail ? 4 : skip ? 5 : 0;
    }
}
