#pragma once

#include <pcn/graph.hpp>

#include <set>
#include <span>
#include <vector>

namespace pcn
{
    /// Total assignment vertex -> colour in 1..k. The class of colour i must
    /// be an i-packing: members pairwise at distance > i.
    class PackingColoring
    {
    public:
        PackingColoring() = default;
        explicit PackingColoring(std::vector<int> colors);

        auto size() const -> int { return static_cast<int>(colors_.size()); }
        auto operator[](VertexId v) const -> int { return colors_.at(v); }
        auto colors() const -> std::span<const int> { return colors_; }

        /// Largest colour used.
        auto k() const -> int { return k_; }

        auto color_class(int color) const -> std::vector<VertexId>;

        auto operator==(const PackingColoring &) const -> bool = default;

    private:
        std::vector<int> colors_;
        int k_ = 0;
    };

    struct Violation
    {
        VertexId u;
        VertexId v;
        int color;
        int distance;

        auto operator==(const Violation &) const -> bool = default;
    };

    struct VerificationReport
    {
        bool valid = true;
        std::vector<Violation> violations;
        std::set<int> colors_used;
    };

    /// Checks every same-coloured pair against its distance. Throws
    /// InvalidColoring when the colouring is not total on g.
    auto verify(const Graph & g, const PackingColoring & c) -> VerificationReport;
    auto verify(const DistanceMatrix & dist, const PackingColoring & c) -> VerificationReport;

    /// Colouring of fssd(base, m): subdivided vertices get 1, u_i gets c(u_i) + 1.
    auto lift_to_fssd(const Graph & base, const PackingColoring & c, int m) -> PackingColoring;

    /// First-fit along `order`, smallest feasible colour first.
    auto greedy_coloring(const Graph & g, std::span<const VertexId> order) -> PackingColoring;
    auto greedy_coloring(const DistanceMatrix & dist, std::span<const VertexId> order) -> PackingColoring;
}
