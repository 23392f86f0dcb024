#pragma once

#include <pcn/graph.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pcn
{
    /// Recursive description of a graph family instance.
    ///
    /// Textual form (case-insensitive, whitespace ignored):
    ///   complete:4  cycle:7  path:5  star:6  petersen  bipartite:2x3
    ///   corona(<spec>,<spec>)  split(<spec>)  fssd(<spec>,m=2)
    struct FamilySpec
    {
        enum class Kind
        {
            Path,
            Cycle,
            Complete,
            Star,
            Petersen,
            CompleteBipartite,
            NeighborhoodCorona,
            Splitting,
            Fssd
        };

        Kind kind = Kind::Complete;
        /// n for the primitive families (Star: number of leaves), a for
        /// CompleteBipartite, multiplicity m for Fssd.
        int first = 0;
        /// b for CompleteBipartite.
        int second = 0;
        std::vector<FamilySpec> children;

        static auto path(int n) -> FamilySpec { return {Kind::Path, n, 0, {}}; }
        static auto cycle(int n) -> FamilySpec { return {Kind::Cycle, n, 0, {}}; }
        static auto complete(int n) -> FamilySpec { return {Kind::Complete, n, 0, {}}; }
        static auto star(int leaves) -> FamilySpec { return {Kind::Star, leaves, 0, {}}; }
        static auto petersen() -> FamilySpec { return {Kind::Petersen, 0, 0, {}}; }
        static auto complete_bipartite(int a, int b) -> FamilySpec { return {Kind::CompleteBipartite, a, b, {}}; }
        static auto corona(FamilySpec base, FamilySpec attach) -> FamilySpec { return {Kind::NeighborhoodCorona, 0, 0, {std::move(base), std::move(attach)}}; }
        static auto splitting(FamilySpec base) -> FamilySpec { return {Kind::Splitting, 0, 0, {std::move(base)}}; }
        static auto fssd(FamilySpec base, int m) -> FamilySpec { return {Kind::Fssd, m, 0, {std::move(base)}}; }

        /// Canonical text in the mini-language; parse(to_string()) round-trips.
        auto to_string() const -> std::string;

        auto operator==(const FamilySpec &) const -> bool = default;
    };

    auto parse_family_spec(std::string_view text) -> FamilySpec;

    struct FamilyMeta
    {
        int expected_vertices = 0;
        std::size_t expected_edges = 0;
        std::string provenance;
    };

    struct GeneratedFamily
    {
        Graph graph;
        FamilyMeta meta;
    };

    /// Builds the instance and checks it against the closed-form vertex and
    /// edge counts; throws InvalidSpec on bad parameters.
    auto generate(const FamilySpec & spec) -> GeneratedFamily;
    auto expected_counts(const FamilySpec & spec) -> FamilyMeta;

    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto complete_graph(int n) -> Graph;
    auto star_graph(int leaves) -> Graph;
    auto petersen_graph() -> Graph;
    auto complete_bipartite_graph(int a, int b) -> Graph;

    /// Replaces every edge u_i u_j by m common neighbours u_{i,j}^1..u_{i,j}^m.
    ///
    /// Original vertices keep their ids and labels; the new vertices follow
    /// in (edge, k) order. When the input carries corona labels the new
    /// vertices get the specialised names v_{i,g,h}^k, s_{j,i,g}^k and
    /// s_{i,j}^k; any other labelling is first reset to u_1..u_n.
    auto fssd(const Graph & g, int m) -> Graph;

    /// One copy of g plus |V(g)| copies of h, copy i joined to N_g(u_i).
    /// Base vertices are relabelled u_1..u_n; copy vertices are v_{i,g},
    /// or v_i when h has a single vertex.
    auto neighborhood_corona(const Graph & g, const Graph & h) -> Graph;

    /// neighborhood_corona(g, K_1).
    auto splitting(const Graph & g) -> Graph;

    /// Id of the vertex carrying `label`; throws LabelNotFound.
    auto locate(const Graph & g, const VertexLabel & label) -> VertexId;

    /// Seeded Erdos-Renyi G(n, p), resampled until connected. Platform
    /// independent for a given seed.
    auto random_connected_graph(int n, double p, std::uint64_t seed) -> Graph;
}
