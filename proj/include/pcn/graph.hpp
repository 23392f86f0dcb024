#pragma once

#include <pcn/label.hpp>

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pcn
{
    /// Dense vertex index: a graph on n vertices uses exactly 0..n-1.
    using VertexId = int;

    struct Edge
    {
        VertexId u;
        VertexId v;

        auto operator<=>(const Edge &) const = default;
    };

    /// Immutable simple undirected graph with one label per vertex.
    class Graph
    {
    public:
        Graph() = default;

        auto order() const -> int { return static_cast<int>(adjacency_.size()); }
        auto size() const -> std::size_t { return edge_count_; }

        auto neighbours(VertexId v) const -> std::span<const VertexId> { return adjacency_.at(v); }
        auto degree(VertexId v) const -> int { return static_cast<int>(adjacency_.at(v).size()); }
        auto adjacent(VertexId u, VertexId v) const -> bool;

        auto label(VertexId v) const -> const VertexLabel & { return labels_.at(v); }
        auto labels() const -> std::span<const VertexLabel> { return labels_; }
        auto find(const VertexLabel & label) const -> std::optional<VertexId>;

        /// Canonical edge list, u < v, sorted.
        auto edges() const -> std::vector<Edge>;

        auto name() const -> const std::string & { return name_; }
        auto with_name(std::string name) const -> Graph;

        auto operator==(const Graph & other) const -> bool;

    private:
        friend auto build_graph(int, std::span<const Edge>, std::optional<std::vector<VertexLabel>>, std::string) -> Graph;

        std::vector<std::vector<VertexId>> adjacency_;
        std::vector<VertexLabel> labels_;
        std::map<VertexLabel, VertexId> by_label_;
        std::size_t edge_count_ = 0;
        std::string name_;
    };

    /// Validating constructor. Default labels are Original(i+1).
    auto build_graph(int n, std::span<const Edge> edges,
        std::optional<std::vector<VertexLabel>> labels = std::nullopt, std::string name = {}) -> Graph;

    /// All-pairs hop distances, n x n, row-major.
    class DistanceMatrix
    {
    public:
        static constexpr int unreachable = std::numeric_limits<int>::max();

        DistanceMatrix() = default;
        DistanceMatrix(int n, std::vector<int> data) : n_(n), data_(std::move(data)) {}

        auto order() const -> int { return n_; }
        auto operator()(VertexId u, VertexId v) const -> int { return data_[static_cast<std::size_t>(u) * n_ + v]; }
        auto row(VertexId u) const -> std::span<const int> { return {data_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)}; }

        /// Largest finite entry.
        auto max_finite() const -> int;
        auto connected() const -> bool;

    private:
        int n_ = 0;
        std::vector<int> data_;
    };

    auto all_pairs_distances(const Graph & g) -> DistanceMatrix;

    struct GraphStats
    {
        std::optional<int> diameter;    ///< nullopt when disconnected
        int clique_number = 0;
        int min_degree = 0;
        bool is_bipartite = false;
        /// Side of each vertex (0/1) when bipartite.
        std::optional<std::vector<int>> bipartition;
        bool is_connected = false;
    };

    auto stats(const Graph & g) -> GraphStats;

    /// Exact clique number via pivoting Bron-Kerbosch.
    auto clique_number(const Graph & g) -> int;

    /// Two-colouring by BFS, per component; nullopt on an odd cycle.
    auto bipartition(const Graph & g) -> std::optional<std::vector<int>>;

    /// Connected components, each sorted, ordered by smallest member.
    auto components(const Graph & g) -> std::vector<std::vector<VertexId>>;

    struct InducedSubgraph
    {
        Graph graph;
        /// original_id[new id] = id in the parent graph.
        std::vector<VertexId> original_id;
    };

    /// Subgraph induced on `keep`, ids re-densified in increasing parent-id order.
    auto induced_subgraph(const Graph & g, std::span<const VertexId> keep) -> InducedSubgraph;
}
