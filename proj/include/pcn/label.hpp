#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace pcn
{
    /// Vertex naming scheme for subdivisions and neighborhood coronas.
    ///
    /// Symbol correspondence (all indices 1-based):
    ///   Original(i)                  u_i
    ///   SubdividedEdge(i, j, k)      u_{i,j}^k     common neighbour of u_i, u_j
    ///   CopyVertex(i, g)             v_{i,g}       g-th vertex of the i-th attached copy
    ///   CopyEdgeSubdivided(i,g,h,k)  v_{i,g,h}^k   common neighbour of v_{i,g}, v_{i,h}
    ///   Connector(j, i, g, k)        s_{j,i,g}^k   common neighbour of u_j, v_{i,g}
    ///   SplitCopy(i)                 v_i           single-vertex copy
    ///   SplitConnector(i, j, k)      s_{i,j}^k     common neighbour of u_i, v_j
    enum class LabelKind
    {
        Original,
        SubdividedEdge,
        CopyVertex,
        CopyEdgeSubdivided,
        Connector,
        SplitCopy,
        SplitConnector
    };

    auto label_kind_name(LabelKind kind) -> std::string_view;
    auto label_kind_from_name(std::string_view name) -> std::optional<LabelKind>;
    auto label_kind_arity(LabelKind kind) -> std::size_t;

    class VertexLabel
    {
    public:
        static auto original(int i) -> VertexLabel;
        static auto subdivided_edge(int i, int j, int k) -> VertexLabel;
        static auto copy_vertex(int i, int g) -> VertexLabel;
        static auto copy_edge_subdivided(int i, int g, int h, int k) -> VertexLabel;
        static auto connector(int j, int i, int g, int k) -> VertexLabel;
        static auto split_copy(int i) -> VertexLabel;
        static auto split_connector(int i, int j, int k) -> VertexLabel;

        /// Generic constructor used by deserialisation; applies the same
        /// canonicalisation and checks as the named factories.
        static auto make(LabelKind kind, std::span<const int> indices) -> VertexLabel;

        auto kind() const -> LabelKind { return kind_; }
        auto indices() const -> std::span<const int> { return {indices_.data(), label_kind_arity(kind_)}; }
        auto index(std::size_t pos) const -> int { return indices_.at(pos); }

        /// u_1, u_{1,2}^3, s_{2,1,1}^1, ...
        auto render() const -> std::string;

        /// Originals, copy vertices and split copies: the vertices of the
        /// graph before subdivision.
        auto is_primary() const -> bool;

        auto operator<=>(const VertexLabel &) const = default;
        auto operator==(const VertexLabel &) const -> bool = default;

    private:
        VertexLabel(LabelKind kind, std::array<int, 4> indices) : kind_(kind), indices_(indices) {}

        LabelKind kind_ = LabelKind::Original;
        std::array<int, 4> indices_{};
    };
}
