#include <pcn/coloring.hpp>
#include <pcn/errors.hpp>

#include <algorithm>

namespace pcn
{
    PackingColoring::PackingColoring(std::vector<int> colors) : colors_(std::move(colors))
    {
        for (std::size_t v = 0; v < colors_.size(); ++v)
            if (colors_[v] < 1)
                throw InvalidColoring("vertex " + std::to_string(v) + " has colour " + std::to_string(colors_[v]) + "; colours start at 1");
        if (! colors_.empty())
            k_ = *std::max_element(colors_.begin(), colors_.end());
    }

    auto PackingColoring::color_class(int color) const -> std::vector<VertexId>
    {
        std::vector<VertexId> members;
        for (VertexId v = 0; v < size(); ++v)
            if (colors_[v] == color)
                members.push_back(v);
        return members;
    }

    auto verify(const DistanceMatrix & dist, const PackingColoring & c) -> VerificationReport
    {
        if (c.size() != dist.order())
            throw InvalidColoring("colouring covers " + std::to_string(c.size()) + " vertices, graph has " + std::to_string(dist.order()));

        VerificationReport report;
        const int n = dist.order();
        for (VertexId u = 0; u < n; ++u) {
            report.colors_used.insert(c[u]);
            for (VertexId v = u + 1; v < n; ++v)
                if (c[u] == c[v] && dist(u, v) <= c[u])
                    report.violations.push_back({u, v, c[u], dist(u, v)});
        }
        report.valid = report.violations.empty();
        return report;
    }

    auto verify(const Graph & g, const PackingColoring & c) -> VerificationReport
    {
        if (c.size() != g.order())
            throw InvalidColoring("colouring covers " + std::to_string(c.size()) + " vertices, graph has " + std::to_string(g.order()));
        return verify(all_pairs_distances(g), c);
    }

    auto lift_to_fssd(const Graph & base, const PackingColoring & c, int m) -> PackingColoring
    {
        if (m < 1)
            throw InvalidSpec("multiplicity must be at least 1");
        auto report = verify(base, c);
        if (! report.valid)
            throw InvalidColoring("cannot lift an invalid colouring: vertices " + std::to_string(report.violations.front().u) +
                " and " + std::to_string(report.violations.front().v) + " clash");

        std::vector<int> lifted;
        lifted.reserve(base.order() + static_cast<std::size_t>(m) * base.size());
        for (int color : c.colors())
            lifted.push_back(color + 1);
        lifted.resize(base.order() + static_cast<std::size_t>(m) * base.size(), 1);
        return PackingColoring(std::move(lifted));
    }

    auto greedy_coloring(const DistanceMatrix & dist, std::span<const VertexId> order) -> PackingColoring
    {
        const int n = dist.order();
        std::vector<int> seen(n, 0);
        if (static_cast<int>(order.size()) != n)
            throw std::invalid_argument("greedy order must be a permutation of the vertices");
        for (VertexId v : order) {
            if (v < 0 || v >= n || seen[v])
                throw std::invalid_argument("greedy order must be a permutation of the vertices");
            seen[v] = 1;
        }

        std::vector<int> colors(n, 0);
        std::vector<VertexId> done;
        done.reserve(n);
        for (VertexId v : order) {
            int color = 1;
            for (bool clash = true; clash; ) {
                clash = false;
                for (VertexId w : done)
                    if (colors[w] == color && dist(v, w) <= color) {
                        clash = true;
                        ++color;
                        break;
                    }
            }
            colors[v] = color;
            done.push_back(v);
        }
        return PackingColoring(std::move(colors));
    }

    auto greedy_coloring(const Graph & g, std::span<const VertexId> order) -> PackingColoring
    {
        return greedy_coloring(all_pairs_distances(g), order);
    }
}
