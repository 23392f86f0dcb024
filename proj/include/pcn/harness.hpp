#pragma once

#include <pcn/families.hpp>
#include <pcn/graph.hpp>
#include <pcn/solver.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pcn
{
    enum class Verdict
    {
        Pass,
        Fail,
        SkippedBudget
    };

    auto verdict_name(Verdict v) -> std::string_view;

    /// Outcome of one claim on one instance. `certificate` holds the
    /// machine-checkable evidence: verified colourings, solver probes, or on
    /// failure the counterexample (graph plus colouring or violating pairs).
    struct ClaimResult
    {
        std::string claim;
        std::string instance;
        nlohmann::json expected;
        nlohmann::json observed;
        Verdict verdict = Verdict::Pass;
        std::string note;
        nlohmann::json certificate;
    };

    auto claim_to_json(const ClaimResult & r) -> nlohmann::json;

    struct HarnessOptions
    {
        /// Seconds per solver call; 0 = unlimited.
        double time_budget = 60.0;
        bool parallel = false;

        auto solve_options() const -> SolveOptions;
    };

    /// omega(G) + 1 <= chi(FSSD_m(G)) <= chi(G) + 1; G connected, |V| >= 3.
    auto check_bounds(const Graph & base, int m, const HarnessOptions & opts = {}) -> ClaimResult;
    auto check_bounds(const FamilySpec & base, int m, const HarnessOptions & opts = {}) -> ClaimResult;

    /// With m0 the least integer above chi(G)/delta(G):
    /// chi(FSSD_m0) = chi(FSSD_{m0+1}), and chi(FSSD_m) is non-decreasing up to m0.
    auto check_stabilization(const Graph & base, const HarnessOptions & opts = {}) -> ClaimResult;
    auto check_stabilization(const FamilySpec & base, const HarnessOptions & opts = {}) -> ClaimResult;

    enum class ExactClaim
    {
        FssdComplete,
        FssdCycle,
        FssdBipartite,
        KnCorona,
        SplitCycle,
        SplitComplete
    };

    auto exact_claim_name(ExactClaim c) -> std::string_view;
    auto exact_claim_from_name(std::string_view name) -> std::optional<ExactClaim>;

    struct ExactParams
    {
        int n = 0;
        int p = 0;
        int m = 1;
        /// Base graph for FssdBipartite.
        std::optional<FamilySpec> base;
    };

    /// Closed-form value the claim asserts.
    auto exact_claim_value(ExactClaim claim, const ExactParams & params) -> int;

    /// Upper side: the matching pattern colouring verifies with the expected
    /// number of colours. Lower side: decide_k(expected - 1) is infeasible.
    auto check_exact_value(ExactClaim claim, const ExactParams & params, const HarnessOptions & opts = {}) -> ClaimResult;

    /// The C_n * P_p pattern verifies and respects the colour-count table.
    auto check_upper_bound_cn_corona(int n, int p, int m) -> ClaimResult;

    /// Solver witnesses on FSSD_m(K_n * P_p) with k <= n + 3 never colour a
    /// u_i or v_{i,g} with 1. Necessary-condition check only.
    auto check_lemma_witnesses(int n, int p, int m, const HarnessOptions & opts = {}) -> ClaimResult;

    struct GapRow
    {
        std::string base;
        /// chi(FSSD_m(base)) for m = 1..m_max; nullopt where the solver ran out of budget.
        std::vector<std::optional<int>> chi_by_m;
        /// Each m with chi(FSSD_m) < chi(FSSD_{m+1}).
        std::vector<int> increases_at;
    };

    struct GapScanReport
    {
        int m_max = 0;
        std::vector<GapRow> rows;
    };

    /// Tabulates chi(FSSD_m(G)) for m = 1..m_max and flags strict increases.
    auto scan_fssd_gap(const std::vector<Graph> & sample, int m_max, const HarnessOptions & opts = {}) -> GapScanReport;
    auto gap_scan_to_json(const GapScanReport & report) -> nlohmann::json;

    /// Seeded connected G(n, p) bases with 4..max_vertices vertices.
    auto random_bases(int count, int max_vertices, std::uint64_t seed) -> std::vector<Graph>;

    struct SuiteOptions
    {
        std::string suite = "all";
        int max_n = 23;
        int max_m = 3;
        HarnessOptions solver;
        std::uint64_t seed = 20200207;
    };

    auto suite_claim_ids() -> std::vector<std::string>;

    /// Runs one claim family (or "all") over its default grid, clipped by
    /// max_n / max_m. Throws std::invalid_argument on an unknown suite id.
    auto run_suite(const SuiteOptions & opts) -> std::vector<ClaimResult>;

    auto format_table(const std::vector<ClaimResult> & results) -> std::string;

    /// 0 all pass, 4 any fail, 5 no failures but some skipped.
    auto suite_exit_code(const std::vector<ClaimResult> & results) -> int;
}
