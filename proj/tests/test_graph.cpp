#include <doctest.h>

#include "support.hpp"

#include <pcn/errors.hpp>
#include <pcn/families.hpp>
#include <pcn/graph.hpp>

using namespace pcn;

TEST_CASE("build_graph accepts simple graphs and rejects malformed input")
{
    std::vector<Edge> triangle{{0, 1}, {1, 2}, {2, 0}};
    auto g = build_graph(3, triangle);
    CHECK(g.order() == 3);
    CHECK(g.size() == 3);
    CHECK(g.adjacent(2, 0));
    CHECK(g.label(0) == VertexLabel::original(1));

    auto single = build_graph(1, {});
    CHECK(single.order() == 1);
    CHECK(single.size() == 0);

    std::vector<Edge> dup{{0, 1}, {0, 1}};
    CHECK_THROWS_AS(build_graph(4, dup), InvalidGraph);
    std::vector<Edge> reversed_dup{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(build_graph(4, reversed_dup), InvalidGraph);
    std::vector<Edge> loop{{2, 2}};
    CHECK_THROWS_AS(build_graph(4, loop), InvalidGraph);
    std::vector<Edge> out_of_range{{0, 4}};
    CHECK_THROWS_AS(build_graph(4, out_of_range), InvalidGraph);
    std::vector<VertexLabel> same{VertexLabel::original(1), VertexLabel::original(1)};
    CHECK_THROWS_AS(build_graph(2, {}, same), InvalidGraph);
    std::vector<VertexLabel> short_list{VertexLabel::original(1)};
    CHECK_THROWS_AS(build_graph(2, {}, short_list), InvalidGraph);
}

TEST_CASE("edges are canonical and graphs compare structurally")
{
    std::vector<Edge> a{{2, 1}, {0, 1}};
    std::vector<Edge> b{{1, 0}, {1, 2}};
    auto g = build_graph(3, a), h = build_graph(3, b);
    CHECK(g == h);
    for (auto e : g.edges())
        CHECK(e.u < e.v);
    CHECK(g.find(VertexLabel::original(3)) == 2);
    CHECK_FALSE(g.find(VertexLabel::original(9)).has_value());
}

TEST_CASE("distances on small instances")
{
    auto c6 = cycle_graph(6);
    auto d = all_pairs_distances(c6);
    CHECK(d(0, 3) == 3);
    CHECK(d(1, 4) == 3);
    CHECK(d.max_finite() == 3);

    auto f = fssd(complete_graph(3), 2);
    auto df = all_pairs_distances(f);
    auto u1 = locate(f, VertexLabel::original(1)), u2 = locate(f, VertexLabel::original(2));
    CHECK(df(u1, u2) == 2);
    for (int k = 1; k <= 2; ++k) {
        auto mid = locate(f, VertexLabel::subdivided_edge(1, 2, k));
        CHECK(df(u1, mid) == 1);
        CHECK(df(mid, u2) == 1);
    }

    std::vector<Edge> two{{0, 1}, {2, 3}};
    auto split = build_graph(4, two);
    auto ds = all_pairs_distances(split);
    CHECK(ds(0, 2) == DistanceMatrix::unreachable);
    CHECK_FALSE(ds.connected());
    CHECK_FALSE(stats(split).diameter.has_value());
}

TEST_CASE("stats on named graphs")
{
    auto k5 = stats(complete_graph(5));
    CHECK(k5.clique_number == 5);
    CHECK(k5.min_degree == 4);
    CHECK(k5.diameter == 1);

    auto c7 = stats(cycle_graph(7));
    CHECK(c7.clique_number == 2);
    CHECK_FALSE(c7.is_bipartite);
    CHECK(c7.diameter == 3);

    auto s = fssd(complete_graph(3), 1);
    auto st = stats(s);
    CHECK(st.is_bipartite);
    CHECK(st.diameter == 3);
    CHECK(test::distance_profile(s) == test::distance_profile(cycle_graph(6)));
    CHECK(test::degree_sequence(s) == test::degree_sequence(cycle_graph(6)));

    CHECK(stats(build_graph(3, {})).clique_number == 1);
    CHECK(stats(petersen_graph()).clique_number == 2);
    CHECK(stats(petersen_graph()).diameter == 2);
}

TEST_CASE("bipartition splits every edge")
{
    auto part = bipartition(complete_bipartite_graph(2, 3));
    REQUIRE(part.has_value());
    auto g = complete_bipartite_graph(2, 3);
    for (auto e : g.edges())
        CHECK((*part)[e.u] != (*part)[e.v]);
    CHECK_FALSE(bipartition(cycle_graph(5)).has_value());
}

TEST_CASE("components and induced subgraphs")
{
    std::vector<Edge> e{{0, 1}, {3, 4}};
    auto comps = components(build_graph(5, e));
    CHECK(comps.size() == 3);

    std::vector<VertexId> three{0, 1, 3};
    auto k3 = induced_subgraph(complete_graph(4), three);
    CHECK(k3.graph.order() == 3);
    CHECK(k3.graph.size() == 3);
    CHECK(k3.original_id == three);

    std::vector<VertexId> alternate{0, 2, 4};
    auto iso = induced_subgraph(cycle_graph(6), alternate);
    CHECK(iso.graph.size() == 0);

    // Originals plus the k=1 subdivided vertex on each edge of FSSD_2(C_5) form C_10.
    auto s = fssd(cycle_graph(5), 2);
    std::vector<VertexId> all;
    for (VertexId v = 0; v < s.order(); ++v)
        if (s.label(v).kind() == LabelKind::Original || s.label(v).index(2) == 1)
            all.push_back(v);
    REQUIRE(all.size() == 10);
    auto c10 = induced_subgraph(s, all);
    CHECK(test::degree_sequence(c10.graph) == test::degree_sequence(cycle_graph(10)));
    CHECK(test::distance_profile(c10.graph) == test::distance_profile(cycle_graph(10)));

    std::vector<VertexId> none;
    CHECK_THROWS_AS(induced_subgraph(cycle_graph(4), none), InvalidGraph);
    std::vector<VertexId> twice{1, 1};
    CHECK_THROWS_AS(induced_subgraph(cycle_graph(4), twice), InvalidGraph);
    std::vector<VertexId> outside{7};
    CHECK_THROWS_AS(induced_subgraph(cycle_graph(4), outside), InvalidGraph);
}

TEST_CASE("property: BFS distances agree with Floyd-Warshall and are metric")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + static_cast<int>(rng() % 14);
        auto g = test::random_graph(n, 0.1 + 0.05 * (trial % 10), rng);
        auto d = all_pairs_distances(g);
        auto oracle = test::floyd(g);
        for (int u = 0; u < n; ++u) {
            CHECK(d(u, u) == 0);
            for (int v = 0; v < n; ++v) {
                REQUIRE(d(u, v) == oracle[u][v]);
                CHECK(d(u, v) == d(v, u));
                if (u != v && g.adjacent(u, v))
                    CHECK(d(u, v) == 1);
                if (u != v && ! g.adjacent(u, v))
                    CHECK(d(u, v) >= 2);
            }
        }
    }
}

TEST_CASE("property: clique number matches brute force over subsets")
{
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 8; ++n)
        CHECK(stats(complete_graph(n)).clique_number == n);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 11);
        auto g = test::random_graph(n, 0.5, rng);
        int best = 0;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            bool clique = true;
            for (int a = 0; a < n && clique; ++a)
                for (int b = a + 1; b < n && clique; ++b)
                    if ((mask >> a & 1) && (mask >> b & 1) && ! g.adjacent(a, b))
                        clique = false;
            if (clique)
                best = std::max(best, std::popcount(mask));
        }
        CHECK(clique_number(g) == best);
        if (stats(g).is_bipartite)
            CHECK(stats(g).clique_number <= 2);
    }
}

TEST_CASE("property: induced subgraphs never grow cliques or shrink distances")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 12);
        auto g = test::random_connected(n, 0.3, rng);
        std::vector<VertexId> keep;
        for (int v = 0; v < n; ++v)
            if (rng() % 2)
                keep.push_back(v);
        if (keep.empty())
            keep.push_back(0);
        auto sub = induced_subgraph(g, keep);
        CHECK(clique_number(sub.graph) <= clique_number(g));
        auto dg = all_pairs_distances(g), ds = all_pairs_distances(sub.graph);
        for (int a = 0; a < sub.graph.order(); ++a)
            for (int b = 0; b < sub.graph.order(); ++b)
                CHECK(ds(a, b) >= dg(sub.original_id[a], sub.original_id[b]));
    }
}
