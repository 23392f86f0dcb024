#include <pcn/errors.hpp>
#include <pcn/graph.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace pcn
{
    auto Graph::adjacent(VertexId u, VertexId v) const -> bool
    {
        const auto & nu = adjacency_.at(u);
        return std::binary_search(nu.begin(), nu.end(), v);
    }

    auto Graph::find(const VertexLabel & label) const -> std::optional<VertexId>
    {
        auto it = by_label_.find(label);
        if (it == by_label_.end())
            return std::nullopt;
        return it->second;
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        result.reserve(edge_count_);
        for (VertexId u = 0; u < order(); ++u)
            for (VertexId v : adjacency_[u])
                if (u < v)
                    result.push_back({u, v});
        return result;
    }

    auto Graph::with_name(std::string name) const -> Graph
    {
        Graph copy = *this;
        copy.name_ = std::move(name);
        return copy;
    }

    auto Graph::operator==(const Graph & other) const -> bool
    {
        return adjacency_ == other.adjacency_ && labels_ == other.labels_ && name_ == other.name_;
    }

    auto build_graph(int n, std::span<const Edge> edges, std::optional<std::vector<VertexLabel>> labels, std::string name) -> Graph
    {
        if (n < 0)
            throw InvalidGraph("vertex count must be non-negative");

        Graph g;
        g.name_ = std::move(name);
        g.adjacency_.resize(n);

        std::set<std::pair<VertexId, VertexId>> seen;
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw InvalidGraph("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an id out of range 0.." + std::to_string(n - 1));
            if (u == v)
                throw InvalidGraph("loop at vertex " + std::to_string(u));
            if (! seen.emplace(std::min(u, v), std::max(u, v)).second)
                throw InvalidGraph("duplicate edge (" + std::to_string(std::min(u, v)) + "," + std::to_string(std::max(u, v)) + ")");
            g.adjacency_[u].push_back(v);
            g.adjacency_[v].push_back(u);
        }
        for (auto & nb : g.adjacency_)
            std::sort(nb.begin(), nb.end());
        g.edge_count_ = seen.size();

        if (labels) {
            if (static_cast<int>(labels->size()) != n)
                throw InvalidGraph("expected " + std::to_string(n) + " labels, got " + std::to_string(labels->size()));
            g.labels_ = std::move(*labels);
        }
        else {
            g.labels_.reserve(n);
            for (int i = 0; i < n; ++i)
                g.labels_.push_back(VertexLabel::original(i + 1));
        }

        for (VertexId v = 0; v < n; ++v)
            if (! g.by_label_.emplace(g.labels_[v], v).second)
                throw InvalidGraph("duplicate label " + g.labels_[v].render() + " on vertices " +
                    std::to_string(g.by_label_[g.labels_[v]]) + " and " + std::to_string(v));

        return g;
    }

    auto DistanceMatrix::max_finite() const -> int
    {
        int best = 0;
        for (int d : data_)
            if (d != unreachable)
                best = std::max(best, d);
        return best;
    }

    auto DistanceMatrix::connected() const -> bool
    {
        return std::none_of(data_.begin(), data_.end(), [](int d) { return d == unreachable; });
    }

    auto all_pairs_distances(const Graph & g) -> DistanceMatrix
    {
        const int n = g.order();
        std::vector<int> data(static_cast<std::size_t>(n) * n, DistanceMatrix::unreachable);
        std::vector<VertexId> queue(n);

        for (VertexId s = 0; s < n; ++s) {
            int * row = data.data() + static_cast<std::size_t>(s) * n;
            row[s] = 0;
            std::size_t head = 0, tail = 0;
            queue[tail++] = s;
            while (head < tail) {
                VertexId u = queue[head++];
                for (VertexId w : g.neighbours(u))
                    if (row[w] == DistanceMatrix::unreachable) {
                        row[w] = row[u] + 1;
                        queue[tail++] = w;
                    }
            }
        }
        return {n, std::move(data)};
    }

    namespace
    {
        // Tomita-style pivoting over sorted vectors; instances are small.
        void expand_clique(const Graph & g, std::vector<VertexId> & r, std::vector<VertexId> p, std::vector<VertexId> x, int & best)
        {
            if (p.empty() && x.empty()) {
                best = std::max(best, static_cast<int>(r.size()));
                return;
            }
            if (static_cast<int>(r.size() + p.size()) <= best)
                return;

            VertexId pivot = -1;
            std::size_t pivot_hits = 0;
            for (const auto * set : {&p, &x})
                for (VertexId u : *set) {
                    auto nu = g.neighbours(u);
                    std::size_t hits = 0;
                    for (VertexId v : p)
                        if (std::binary_search(nu.begin(), nu.end(), v))
                            ++hits;
                    if (pivot == -1 || hits > pivot_hits) {
                        pivot = u;
                        pivot_hits = hits;
                    }
                }

            std::vector<VertexId> candidates;
            auto np = g.neighbours(pivot);
            std::set_difference(p.begin(), p.end(), np.begin(), np.end(), std::back_inserter(candidates));

            for (VertexId v : candidates) {
                auto nv = g.neighbours(v);
                std::vector<VertexId> p2, x2;
                std::set_intersection(p.begin(), p.end(), nv.begin(), nv.end(), std::back_inserter(p2));
                std::set_intersection(x.begin(), x.end(), nv.begin(), nv.end(), std::back_inserter(x2));
                r.push_back(v);
                expand_clique(g, r, std::move(p2), std::move(x2), best);
                r.pop_back();
                p.erase(std::lower_bound(p.begin(), p.end(), v));
                x.insert(std::lower_bound(x.begin(), x.end(), v), v);
            }
        }
    }

    auto clique_number(const Graph & g) -> int
    {
        if (g.order() == 0)
            return 0;
        std::vector<VertexId> p(g.order());
        std::iota(p.begin(), p.end(), 0);
        std::vector<VertexId> r;
        int best = 0;
        expand_clique(g, r, std::move(p), {}, best);
        return best;
    }

    auto bipartition(const Graph & g) -> std::optional<std::vector<int>>
    {
        const int n = g.order();
        std::vector<int> side(n, -1);
        std::deque<VertexId> queue;
        for (VertexId s = 0; s < n; ++s) {
            if (side[s] != -1)
                continue;
            side[s] = 0;
            queue.push_back(s);
            while (! queue.empty()) {
                VertexId u = queue.front();
                queue.pop_front();
                for (VertexId w : g.neighbours(u)) {
                    if (side[w] == -1) {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    }
                    else if (side[w] == side[u])
                        return std::nullopt;
                }
            }
        }
        return side;
    }

    auto components(const Graph & g) -> std::vector<std::vector<VertexId>>
    {
        const int n = g.order();
        std::vector<int> seen(n, 0);
        std::vector<std::vector<VertexId>> result;
        for (VertexId s = 0; s < n; ++s) {
            if (seen[s])
                continue;
            std::vector<VertexId> comp{s};
            seen[s] = 1;
            for (std::size_t head = 0; head < comp.size(); ++head)
                for (VertexId w : g.neighbours(comp[head]))
                    if (! seen[w]) {
                        seen[w] = 1;
                        comp.push_back(w);
                    }
            std::sort(comp.begin(), comp.end());
            result.push_back(std::move(comp));
        }
        return result;
    }

    auto stats(const Graph & g) -> GraphStats
    {
        GraphStats s;
        auto dist = all_pairs_distances(g);
        s.is_connected = dist.connected();
        if (s.is_connected)
            s.diameter = dist.max_finite();
        s.clique_number = clique_number(g);
        s.min_degree = 0;
        for (VertexId v = 0; v < g.order(); ++v)
            s.min_degree = (v == 0) ? g.degree(v) : std::min(s.min_degree, g.degree(v));
        s.bipartition = bipartition(g);
        s.is_bipartite = s.bipartition.has_value();
        return s;
    }

    auto induced_subgraph(const Graph & g, std::span<const VertexId> keep) -> InducedSubgraph
    {
        if (keep.empty())
            throw InvalidGraph("induced subgraph needs at least one vertex");

        std::vector<VertexId> ids(keep.begin(), keep.end());
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
            throw InvalidGraph("induced subgraph vertex set has repeated ids");
        if (ids.front() < 0 || ids.back() >= g.order())
            throw InvalidGraph("induced subgraph vertex id out of range");

        std::vector<VertexId> new_id(g.order(), -1);
        for (std::size_t i = 0; i < ids.size(); ++i)
            new_id[ids[i]] = static_cast<VertexId>(i);

        std::vector<Edge> edges;
        std::vector<VertexLabel> labels;
        for (VertexId u : ids) {
            labels.push_back(g.label(u));
            for (VertexId w : g.neighbours(u))
                if (u < w && new_id[w] != -1)
                    edges.push_back({new_id[u], new_id[w]});
        }

        return {build_graph(static_cast<int>(ids.size()), edges, std::move(labels), g.name()), std::move(ids)};
    }
}
