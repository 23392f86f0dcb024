#pragma once

#include <pcn/coloring.hpp>
#include <pcn/graph.hpp>

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace pcn
{
    enum class OrderStrategy
    {
        DegreeDesc,
        EccentricityAsc,
        Input
    };

    auto order_strategy_name(OrderStrategy s) -> std::string_view;

    struct SolveOptions
    {
        /// Wall-clock seconds for the whole call; 0 means unlimited.
        double time_budget = 0.0;
        OrderStrategy order = OrderStrategy::DegreeDesc;
        bool parallel = false;
        /// Highest k probed; reaching it without a colouring yields bounds.
        std::optional<int> k_upper_cap;
    };

    enum class DecideStatus
    {
        Feasible,
        Infeasible,
        Timeout
    };

    auto decide_status_name(DecideStatus s) -> std::string_view;

    struct DecideResult
    {
        DecideStatus status = DecideStatus::Timeout;
        std::optional<PackingColoring> witness;
        std::uint64_t nodes = 0;
    };

    /// Is there a packing colouring with colours in 1..k? Exhaustive
    /// backtracking; Infeasible is a proof, Timeout is never reported as
    /// Infeasible.
    auto decide_k(const Graph & g, const DistanceMatrix & dist, int k, const SolveOptions & opts = {}) -> DecideResult;
    auto decide_k(const Graph & g, int k, const SolveOptions & opts = {}) -> DecideResult;

    enum class SolveStatus
    {
        Exact,
        TimeoutWithBounds
    };

    struct Probe
    {
        int k;
        DecideStatus status;
    };

    struct SolveResult
    {
        SolveStatus status = SolveStatus::TimeoutWithBounds;
        int lower = 0;
        int upper = 0;
        /// Always verifies; uses at most `upper` colours.
        PackingColoring witness;
        std::vector<Probe> probes;
        std::uint64_t nodes_explored = 0;
        double elapsed = 0.0;

        auto exact() const -> bool { return status == SolveStatus::Exact; }
        /// The packing chromatic number; throws std::logic_error unless exact.
        auto chi() const -> int;
    };

    /// Smallest k with a packing k-colouring. Probes k upward from a trivial
    /// lower bound, seeded with a greedy upper bound; components are solved
    /// independently and the maximum taken.
    auto packing_chromatic_number(const Graph & g, const SolveOptions & opts = {}) -> SolveResult;

    /// Independent oracle: plain lexicographic enumeration of colourings
    /// over its own Floyd-Warshall distances. |V| <= 12.
    auto brute_force_chi(const Graph & g, std::optional<int> cap = std::nullopt) -> int;

    /// Static vertex order used for greedy seeding and search tie-breaks.
    auto vertex_order(const Graph & g, const DistanceMatrix & dist, OrderStrategy strategy) -> std::vector<VertexId>;
}
