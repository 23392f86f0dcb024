#pragma once

#include <pcn/graph.hpp>

#include <algorithm>
#include <climits>
#include <random>
#include <vector>

namespace pcn::test
{
    /// Floyd-Warshall over the adjacency test; independent of the BFS code.
    inline auto floyd(const Graph & g) -> std::vector<std::vector<int>>
    {
        const int n = g.order();
        const int inf = INT_MAX / 4;
        std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u == v)
                    d[u][v] = 0;
                else if (g.adjacent(u, v))
                    d[u][v] = 1;
        for (int k = 0; k < n; ++k)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    d[a][b] = std::min(d[a][b], d[a][k] + d[k][b]);
        for (auto & row : d)
            for (auto & x : row)
                if (x >= inf)
                    x = DistanceMatrix::unreachable;
        return d;
    }

    /// Sorted multiset of finite pairwise distances (u < v).
    inline auto distance_profile(const Graph & g) -> std::vector<int>
    {
        auto d = floyd(g);
        std::vector<int> out;
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                out.push_back(d[u][v]);
        std::sort(out.begin(), out.end());
        return out;
    }

    inline auto degree_sequence(const Graph & g) -> std::vector<int>
    {
        std::vector<int> out;
        for (VertexId v = 0; v < g.order(); ++v)
            out.push_back(g.degree(v));
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Erdos-Renyi G(n, p); may be disconnected.
    inline auto random_graph(int n, double p, std::mt19937_64 & rng) -> Graph
    {
        std::bernoulli_distribution coin(p);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    edges.push_back({u, v});
        return build_graph(n, edges);
    }

    /// Random spanning tree plus G(n, p) extras; always connected.
    inline auto random_connected(int n, double p, std::mt19937_64 & rng) -> Graph
    {
        std::bernoulli_distribution coin(p);
        std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
        std::vector<Edge> edges;
        auto add = [&](int u, int v) {
            if (u > v)
                std::swap(u, v);
            if (u == v || has[u][v])
                return;
            has[u][v] = true;
            edges.push_back({u, v});
        };
        for (int v = 1; v < n; ++v)
            add(v, static_cast<int>(rng() % static_cast<unsigned>(v)));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    add(u, v);
        return build_graph(n, edges);
    }
}

#include <pcn/coloring.hpp>

namespace pcn::test
{
    /// Pairwise check straight from the definition, on Floyd-Warshall distances.
    inline auto packing_valid(const Graph & g, std::span<const int> colors) -> bool
    {
        auto d = floyd(g);
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (colors[u] == colors[v] && d[u][v] <= colors[u])
                    return false;
        return true;
    }

    inline auto max_color(std::span<const int> colors) -> int
    {
        return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
    }
}

namespace pcn::test
{
    inline auto grid(int rows, int cols) -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                int v = i * cols + j;
                if (j + 1 < cols)
                    edges.push_back({v, v + 1});
                if (i + 1 < rows)
                    edges.push_back({v, v + cols});
            }
        return build_graph(rows * cols, edges);
    }
}
