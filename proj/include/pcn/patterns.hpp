#pragma once

#include <pcn/coloring.hpp>
#include <pcn/families.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pcn
{
    /// A constructed instance together with an explicit colouring of it and
    /// the verifier's verdict on that colouring. Construction never fails
    /// silently: a colouring that does not verify is returned with its
    /// violations in `report`.
    struct PatternColoring
    {
        Graph graph;
        PackingColoring coloring;
        VerificationReport report;
    };

    /// FSSD_m(G), G bipartite: subdivided -> 1, side of vertex 0 -> 2, other side -> 3.
    auto pattern_fssd_bipartite(const Graph & g, int m) -> PatternColoring;

    /// FSSD_m(K_n) coloured by lifting the all-distinct colouring of K_n.
    auto pattern_fssd_complete(int n, int m) -> PatternColoring;

    /// FSSD_m(C_n): bipartite pattern for even n, originals 2,3,...,2,3,4 for odd n.
    auto pattern_fssd_cycle(int n, int m) -> PatternColoring;

    /// FSSD_m(K_n * P_p): u_i -> i + 3, path copies alternate 2,3 from v_{i,1}, rest 1.
    auto pattern_fssd_kn_corona(int n, int p, int m) -> PatternColoring;

    /// Colour sequence for u_1..u_n in FSSD_m(C_n * P_p), assembled as
    /// prefix + block^r + suffix per residue class of n mod 6, with the
    /// special tables for n in {4, 5, 7, 8, 11}.
    struct DigitPattern
    {
        std::string rule;
        std::vector<int> prefix;
        std::vector<int> block;
        int repeats = 0;
        std::vector<int> suffix;

        auto assemble() const -> std::vector<int>;
    };

    /// n >= 4. Throws std::logic_error if the assembled length differs from n.
    auto cn_corona_digit_pattern(int n) -> DigitPattern;

    /// Colour-count bound: 6 for n = 3, 8 for n in {5, 7, 11}, 7 otherwise.
    auto cn_corona_color_bound(int n) -> int;

    /// FSSD_m(C_n * P_p); n = 3 reuses the K_3 colouring.
    auto pattern_fssd_cn_corona(int n, int p, int m) -> PatternColoring;

    /// FSSD_m(S'(C_n)): even n mirrors u_i's 2,3 colour onto v_i; odd n
    /// alternates u_1..u_{n-1} (copied to v_i), then u_n -> 4, v_n -> 5.
    auto pattern_fssd_splitting_cycle(int n, int m) -> PatternColoring;

    /// FSSD_m(S'(K_n)): v_i -> 2, u_i -> i + 2, rest 1.
    auto pattern_fssd_splitting_complete(int n, int m) -> PatternColoring;

    struct PatternParams
    {
        int n = 0;
        int p = 2;
        int m = 1;
        /// Base graph for fssd-bipartite.
        std::optional<FamilySpec> base;
    };

    /// fssd-bipartite, fssd-complete, fssd-cycle, kn-corona, cn-corona,
    /// split-cycle, split-complete.
    auto pattern_names() -> std::vector<std::string>;

    /// Dispatch by name; throws InvalidSpec for unknown names or bad parameters.
    auto make_pattern(std::string_view name, const PatternParams & params) -> PatternColoring;
}
