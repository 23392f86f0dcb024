#include <doctest.h>

#include <pcn/errors.hpp>
#include <pcn/label.hpp>

#include <vector>

using namespace pcn;

TEST_CASE("labels render in subscript/superscript notation")
{
    CHECK(VertexLabel::original(1).render() == "u_1");
    CHECK(VertexLabel::subdivided_edge(1, 2, 3).render() == "u_{1,2}^3");
    CHECK(VertexLabel::copy_vertex(1, 2).render() == "v_{1,2}");
    CHECK(VertexLabel::copy_edge_subdivided(1, 1, 2, 1).render() == "v_{1,1,2}^1");
    CHECK(VertexLabel::connector(2, 1, 1, 1).render() == "s_{2,1,1}^1");
    CHECK(VertexLabel::split_copy(1).render() == "v_1");
    CHECK(VertexLabel::split_connector(1, 2, 1).render() == "s_{1,2}^1");
}

TEST_CASE("edge endpoints are canonicalised")
{
    CHECK(VertexLabel::subdivided_edge(3, 1, 2) == VertexLabel::subdivided_edge(1, 3, 2));
    CHECK(VertexLabel::copy_edge_subdivided(2, 3, 1, 1) == VertexLabel::copy_edge_subdivided(2, 1, 3, 1));
    // Connectors are directed: original first, then the copy.
    CHECK(VertexLabel::split_connector(4, 2, 1) != VertexLabel::split_connector(2, 4, 1));
    CHECK(VertexLabel::connector(1, 2, 1, 1) != VertexLabel::connector(2, 1, 1, 1));
}

TEST_CASE("malformed labels are rejected")
{
    CHECK_THROWS_AS(VertexLabel::original(0), InvalidGraph);
    CHECK_THROWS_AS(VertexLabel::subdivided_edge(2, 2, 1), InvalidGraph);
    CHECK_THROWS_AS(VertexLabel::subdivided_edge(1, 2, 0), InvalidGraph);
    CHECK_THROWS_AS(VertexLabel::copy_edge_subdivided(1, 2, 2, 1), InvalidGraph);
    std::vector<int> wrong_arity{1, 2};
    CHECK_THROWS_AS(VertexLabel::make(LabelKind::Original, wrong_arity), InvalidGraph);
}

TEST_CASE("kind names round-trip and arities match the index lists")
{
    for (auto kind : {LabelKind::Original, LabelKind::SubdividedEdge, LabelKind::CopyVertex, LabelKind::CopyEdgeSubdivided,
             LabelKind::Connector, LabelKind::SplitCopy, LabelKind::SplitConnector}) {
        auto name = label_kind_name(kind);
        REQUIRE(label_kind_from_name(name).has_value());
        CHECK(*label_kind_from_name(name) == kind);
    }
    CHECK_FALSE(label_kind_from_name("nope").has_value());
    CHECK(VertexLabel::connector(2, 1, 1, 1).indices().size() == 4);
    CHECK(VertexLabel::split_copy(3).indices().size() == 1);
}

TEST_CASE("make agrees with the named factories")
{
    std::vector<int> idx{2, 1, 3};
    CHECK(VertexLabel::make(LabelKind::SubdividedEdge, idx) == VertexLabel::subdivided_edge(1, 2, 3));
    CHECK(VertexLabel::original(4).is_primary());
    CHECK(VertexLabel::copy_vertex(1, 1).is_primary());
    CHECK_FALSE(VertexLabel::subdivided_edge(1, 2, 1).is_primary());
}
