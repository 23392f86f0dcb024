#include <pcn/errors.hpp>
#include <pcn/label.hpp>

#include <algorithm>
#include <sstream>
#include <utility>

namespace pcn
{
    namespace
    {
        struct KindInfo
        {
            LabelKind kind;
            std::string_view name;
            std::size_t arity;
        };

        constexpr std::array<KindInfo, 7> kinds{{
            {LabelKind::Original, "original", 1},
            {LabelKind::SubdividedEdge, "subdivided_edge", 3},
            {LabelKind::CopyVertex, "copy_vertex", 2},
            {LabelKind::CopyEdgeSubdivided, "copy_edge_subdivided", 4},
            {LabelKind::Connector, "connector", 4},
            {LabelKind::SplitCopy, "split_copy", 1},
            {LabelKind::SplitConnector, "split_connector", 3},
        }};

        auto info(LabelKind kind) -> const KindInfo &
        {
            return kinds[static_cast<std::size_t>(kind)];
        }

        void require_positive(std::initializer_list<int> values)
        {
            for (int v : values)
                if (v < 1)
                    throw InvalidGraph("vertex label indices are 1-based, got " + std::to_string(v));
        }

        void require_distinct(int a, int b, const char * what)
        {
            if (a == b)
                throw InvalidGraph(std::string(what) + " label needs distinct endpoints, got " + std::to_string(a) + " twice");
        }
    }

    auto label_kind_name(LabelKind kind) -> std::string_view
    {
        return info(kind).name;
    }

    auto label_kind_from_name(std::string_view name) -> std::optional<LabelKind>
    {
        for (const auto & k : kinds)
            if (k.name == name)
                return k.kind;
        return std::nullopt;
    }

    auto label_kind_arity(LabelKind kind) -> std::size_t
    {
        return info(kind).arity;
    }

    auto VertexLabel::original(int i) -> VertexLabel
    {
        require_positive({i});
        return {LabelKind::Original, {i, 0, 0, 0}};
    }

    auto VertexLabel::subdivided_edge(int i, int j, int k) -> VertexLabel
    {
        require_positive({i, j, k});
        require_distinct(i, j, "subdivided-edge");
        if (i > j)
            std::swap(i, j);
        return {LabelKind::SubdividedEdge, {i, j, k, 0}};
    }

    auto VertexLabel::copy_vertex(int i, int g) -> VertexLabel
    {
        require_positive({i, g});
        return {LabelKind::CopyVertex, {i, g, 0, 0}};
    }

    auto VertexLabel::copy_edge_subdivided(int i, int g, int h, int k) -> VertexLabel
    {
        require_positive({i, g, h, k});
        require_distinct(g, h, "copy-edge");
        if (g > h)
            std::swap(g, h);
        return {LabelKind::CopyEdgeSubdivided, {i, g, h, k}};
    }

    auto VertexLabel::connector(int j, int i, int g, int k) -> VertexLabel
    {
        require_positive({j, i, g, k});
        require_distinct(i, j, "connector");
        return {LabelKind::Connector, {j, i, g, k}};
    }

    auto VertexLabel::split_copy(int i) -> VertexLabel
    {
        require_positive({i});
        return {LabelKind::SplitCopy, {i, 0, 0, 0}};
    }

    auto VertexLabel::split_connector(int i, int j, int k) -> VertexLabel
    {
        require_positive({i, j, k});
        require_distinct(i, j, "split-connector");
        return {LabelKind::SplitConnector, {i, j, k, 0}};
    }

    auto VertexLabel::make(LabelKind kind, std::span<const int> idx) -> VertexLabel
    {
        if (idx.size() != label_kind_arity(kind))
            throw InvalidGraph("label kind '" + std::string(label_kind_name(kind)) + "' takes " +
                std::to_string(label_kind_arity(kind)) + " indices, got " + std::to_string(idx.size()));

        switch (kind) {
            case LabelKind::Original: return original(idx[0]);
            case LabelKind::SubdividedEdge: return subdivided_edge(idx[0], idx[1], idx[2]);
            case LabelKind::CopyVertex: return copy_vertex(idx[0], idx[1]);
            case LabelKind::CopyEdgeSubdivided: return copy_edge_subdivided(idx[0], idx[1], idx[2], idx[3]);
            case LabelKind::Connector: return connector(idx[0], idx[1], idx[2], idx[3]);
            case LabelKind::SplitCopy: return split_copy(idx[0]);
            case LabelKind::SplitConnector: return split_connector(idx[0], idx[1], idx[2]);
        }
        throw InvalidGraph("unknown label kind");
    }

    auto VertexLabel::is_primary() const -> bool
    {
        return kind_ == LabelKind::Original || kind_ == LabelKind::CopyVertex || kind_ == LabelKind::SplitCopy;
    }

    auto VertexLabel::render() const -> std::string
    {
        std::ostringstream out;
        const auto & x = indices_;
        switch (kind_) {
            case LabelKind::Original: out << "u_" << x[0]; break;
            case LabelKind::SubdividedEdge: out << "u_{" << x[0] << ',' << x[1] << "}^" << x[2]; break;
            case LabelKind::CopyVertex: out << "v_{" << x[0] << ',' << x[1] << '}'; break;
            case LabelKind::CopyEdgeSubdivided: out << "v_{" << x[0] << ',' << x[1] << ',' << x[2] << "}^" << x[3]; break;
            case LabelKind::Connector: out << "s_{" << x[0] << ',' << x[1] << ',' << x[2] << "}^" << x[3]; break;
            case LabelKind::SplitCopy: out << "v_" << x[0]; break;
            case LabelKind::SplitConnector: out << "s_{" << x[0] << ',' << x[1] << "}^" << x[2]; break;
        }
        return out.str();
    }
}
