#include <pcn/errors.hpp>
#include <pcn/solver.hpp>

#include <algorithm>
#include <atomic>
#include <bitset>
#include <chrono>
#include <future>
#include <numeric>

namespace pcn
{
    namespace
    {
        using Clock = std::chrono::steady_clock;

        // Colours below the diameter live in per-vertex bitsets; colours at or
        // above it conflict with every other vertex, so each is used at most
        // once and they are interchangeable. Those are only counted.
        constexpr int max_small_colors = 255;
        using ColorSet = std::bitset<max_small_colors + 1>;

        struct Deadline
        {
            std::optional<Clock::time_point> at;

            static auto after(double seconds) -> Deadline
            {
                if (seconds <= 0.0)
                    return {};
                return {Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds))};
            }

            auto passed() const -> bool { return at && Clock::now() >= *at; }
        };

        // Immutable per-instance tables for one connected graph.
        struct Instance
        {
            int n = 0;
            int k = 0;
            int big_from = 1;     // first colour that is unique-use
            int big_count = 0;    // number of unique-use colours within 1..k
            ColorSet small_mask;
            std::vector<std::vector<VertexId>> by_distance;   // others, nearest first
            std::vector<std::vector<int>> within;              // within[v][d] = #others at distance <= d
            std::vector<std::vector<VertexId>> closed_nbhd;
            std::vector<int> rank;

            Instance(const Graph & g, const DistanceMatrix & dist, int colours, const std::vector<VertexId> & order)
                : n(g.order()), k(colours)
            {
                const int diam = dist.max_finite();
                big_from = std::max(diam, 1);
                big_count = std::max(0, k - big_from + 1);
                const int small_top = std::min(k, big_from - 1);
                if (small_top > max_small_colors)
                    throw std::length_error("more than " + std::to_string(max_small_colors) + " colours below the diameter");
                for (int c = 1; c <= small_top; ++c)
                    small_mask.set(c);

                by_distance.resize(n);
                within.resize(n);
                closed_nbhd.resize(n);
                rank.resize(n);
                for (int i = 0; i < n; ++i)
                    rank[order[i]] = i;
                for (VertexId v = 0; v < n; ++v) {
                    auto & others = by_distance[v];
                    for (VertexId w = 0; w < n; ++w)
                        if (w != v)
                            others.push_back(w);
                    std::stable_sort(others.begin(), others.end(), [&](VertexId a, VertexId b) { return dist(v, a) < dist(v, b); });
                    within[v].assign(diam + 1, 0);
                    for (VertexId w : others)
                        ++within[v][dist(v, w)];
                    std::partial_sum(within[v].begin(), within[v].end(), within[v].begin());
                    closed_nbhd[v].push_back(v);
                    for (VertexId w : g.neighbours(v))
                        closed_nbhd[v].push_back(w);
                }
            }
        };

        class Search
        {
        public:
            Search(const Instance & inst, Deadline deadline, std::atomic<bool> & stop)
                : inst_(&inst), deadline_(deadline), stop_(&stop), domain_(inst.n, inst.small_mask), color_(inst.n, 0)
            {
            }

            auto run() -> DecideStatus
            {
                if (! consistent())
                    return DecideStatus::Infeasible;
                if (solve())
                    return DecideStatus::Feasible;
                return interrupted_ ? DecideStatus::Timeout : DecideStatus::Infeasible;
            }

            // Root split for parallel search: each branch is an independent Search.
            auto branch_vertex() const -> VertexId { return select(); }
            auto values(VertexId v) const -> std::vector<int>
            {
                std::vector<int> result;
                for (int c = 1; c <= inst_->k && c < inst_->big_from; ++c)
                    if (domain_[v].test(c))
                        result.push_back(c);
                if (big_used_ < inst_->big_count)
                    result.push_back(inst_->big_from + big_used_);
                return result;
            }

            auto run_branch(VertexId v, int c) -> DecideStatus
            {
                if (! consistent() || ! assign(v, c) || ! consistent())
                    return DecideStatus::Infeasible;
                return run();
            }

            auto colors() const -> const std::vector<int> & { return color_; }
            auto nodes() const -> std::uint64_t { return nodes_; }

        private:
            const Instance * inst_;
            Deadline deadline_;
            std::atomic<bool> * stop_;
            std::vector<ColorSet> domain_;
            std::vector<int> color_;
            std::vector<std::pair<VertexId, int>> trail_;
            int big_used_ = 0;
            int assigned_ = 0;
            std::uint64_t nodes_ = 0;
            bool interrupted_ = false;

            auto big_left() const -> int { return inst_->big_count - big_used_; }

            auto options(VertexId v) const -> std::size_t
            {
                return domain_[v].count() + (big_left() > 0 ? 1 : 0);
            }

            auto select() const -> VertexId
            {
                VertexId best = -1;
                std::size_t best_size = 0;
                for (VertexId v = 0; v < inst_->n; ++v) {
                    if (color_[v] != 0)
                        continue;
                    auto s = options(v);
                    if (best == -1 || s < best_size || (s == best_size && inst_->rank[v] < inst_->rank[best])) {
                        best = v;
                        best_size = s;
                    }
                }
                return best;
            }

            auto assign(VertexId v, int c) -> bool
            {
                color_[v] = c;
                ++assigned_;
                if (c >= inst_->big_from) {
                    ++big_used_;
                    return true;
                }
                const auto & others = inst_->by_distance[v];
                const int reach = inst_->within[v][std::min<std::size_t>(c, inst_->within[v].size() - 1)];
                bool ok = true;
                for (int idx = 0; idx < reach; ++idx) {
                    VertexId w = others[idx];
                    if (color_[w] == 0 && domain_[w].test(c)) {
                        domain_[w].reset(c);
                        trail_.emplace_back(w, c);
                        if (domain_[w].none() && big_left() == 0)
                            ok = false;
                    }
                }
                return ok;
            }

            void undo(VertexId v, std::size_t mark)
            {
                if (color_[v] >= inst_->big_from)
                    --big_used_;
                color_[v] = 0;
                --assigned_;
                while (trail_.size() > mark) {
                    auto [w, c] = trail_.back();
                    trail_.pop_back();
                    domain_[w].set(c);
                }
            }

            // Pigeonhole checks. Unique-use colours: vertices with no small
            // colour left need distinct big ones. Closed neighbourhoods: all
            // members are pairwise within distance 2, so colours >= 2 appear at
            // most once there; members that cannot take 1 need distinct colours.
            auto consistent() const -> bool
            {
                int starved = 0;
                for (VertexId v = 0; v < inst_->n; ++v)
                    if (color_[v] == 0 && domain_[v].none())
                        ++starved;
                if (starved > big_left())
                    return false;

                for (VertexId x = 0; x < inst_->n; ++x) {
                    int members = 0;
                    ColorSet pool;
                    for (VertexId w : inst_->closed_nbhd[x])
                        if (color_[w] == 0 && ! domain_[w].test(1)) {
                            ++members;
                            pool |= domain_[w];
                        }
                    if (members > 1 && static_cast<std::size_t>(members) > pool.count() + big_left())
                        return false;
                }
                return true;
            }

            auto solve() -> bool
            {
                ++nodes_;
                if (stop_->load(std::memory_order_relaxed) || ((nodes_ & 1023) == 0 && deadline_.passed())) {
                    interrupted_ = true;
                    return false;
                }
                if (assigned_ == inst_->n)
                    return true;

                VertexId v = select();
                for (int c : values(v)) {
                    auto mark = trail_.size();
                    if (assign(v, c) && consistent() && solve())
                        return true;
                    undo(v, mark);
                    if (interrupted_)
                        return false;
                }
                return false;
            }
        };

        struct ComponentOutcome
        {
            DecideStatus status;
            std::vector<int> colors;
            std::uint64_t nodes;
        };

        auto decide_connected(const Graph & g, const DistanceMatrix & dist, int k, OrderStrategy strategy, bool parallel, Deadline deadline)
            -> ComponentOutcome
        {
            const int n = g.order();
            if (n == 0)
                return {DecideStatus::Feasible, {}, 0};
            if (k < 1)
                return {DecideStatus::Infeasible, {}, 0};
            // Colours above n are never needed.
            k = std::min(k, n);

            Instance inst(g, dist, k, vertex_order(g, dist, strategy));
            std::atomic<bool> stop{false};
            Search root(inst, deadline, stop);

            if (! parallel) {
                auto status = root.run();
                return {status, status == DecideStatus::Feasible ? root.colors() : std::vector<int>{}, root.nodes()};
            }

            VertexId v = root.branch_vertex();
            std::vector<std::future<std::pair<DecideStatus, Search>>> jobs;
            for (int c : root.values(v))
                jobs.push_back(std::async(std::launch::async, [&inst, deadline, &stop, v, c] {
                    Search s(inst, deadline, stop);
                    auto status = s.run_branch(v, c);
                    if (status == DecideStatus::Feasible)
                        stop.store(true);
                    return std::make_pair(status, std::move(s));
                }));

            ComponentOutcome out{DecideStatus::Infeasible, {}, 0};
            bool timed_out = false;
            for (auto & job : jobs) {
                auto [status, search] = job.get();
                out.nodes += search.nodes();
                if (status == DecideStatus::Feasible && out.status != DecideStatus::Feasible) {
                    out.status = DecideStatus::Feasible;
                    out.colors = search.colors();
                }
                else if (status == DecideStatus::Timeout)
                    timed_out = true;
            }
            if (out.status != DecideStatus::Feasible && timed_out)
                out.status = DecideStatus::Timeout;
            return out;
        }

        struct Part
        {
            Graph graph;
            DistanceMatrix dist;
            std::vector<VertexId> ids;
        };

        auto split(const Graph & g, const DistanceMatrix & dist) -> std::vector<Part>
        {
            std::vector<Part> parts;
            auto comps = components(g);
            if (comps.size() <= 1) {
                std::vector<VertexId> ids(g.order());
                std::iota(ids.begin(), ids.end(), 0);
                parts.push_back({g, dist, std::move(ids)});
                return parts;
            }
            for (auto & comp : comps) {
                auto sub = induced_subgraph(g, comp);
                const int s = sub.graph.order();
                std::vector<int> data(static_cast<std::size_t>(s) * s);
                for (int a = 0; a < s; ++a)
                    for (int b = 0; b < s; ++b)
                        data[static_cast<std::size_t>(a) * s + b] = dist(sub.original_id[a], sub.original_id[b]);
                parts.push_back({std::move(sub.graph), DistanceMatrix(s, std::move(data)), std::move(sub.original_id)});
            }
            return parts;
        }

        auto trivial_lower_bound(const Graph & g) -> int
        {
            if (g.order() == 0)
                return 0;
            int max_degree = 0;
            for (VertexId v = 0; v < g.order(); ++v)
                max_degree = std::max(max_degree, g.degree(v));
            if (max_degree == 0)
                return 1;
            // A connected graph is 2-colourable in this sense only if it is a star.
            return max_degree == g.order() - 1 && g.size() == static_cast<std::size_t>(g.order() - 1) ? 2 : 3;
        }

        auto seconds_since(Clock::time_point start) -> double
        {
            return std::chrono::duration<double>(Clock::now() - start).count();
        }
    }

    auto order_strategy_name(OrderStrategy s) -> std::string_view
    {
        switch (s) {
            case OrderStrategy::DegreeDesc: return "degree";
            case OrderStrategy::EccentricityAsc: return "ecc";
            case OrderStrategy::Input: return "input";
        }
        return "?";
    }

    auto decide_status_name(DecideStatus s) -> std::string_view
    {
        switch (s) {
            case DecideStatus::Feasible: return "feasible";
            case DecideStatus::Infeasible: return "infeasible";
            case DecideStatus::Timeout: return "timeout";
        }
        return "?";
    }

    auto vertex_order(const Graph & g, const DistanceMatrix & dist, OrderStrategy strategy) -> std::vector<VertexId>
    {
        std::vector<VertexId> order(g.order());
        std::iota(order.begin(), order.end(), 0);
        switch (strategy) {
            case OrderStrategy::Input:
                break;
            case OrderStrategy::DegreeDesc:
                std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
                break;
            case OrderStrategy::EccentricityAsc: {
                std::vector<int> ecc(g.order(), 0);
                for (VertexId v = 0; v < g.order(); ++v)
                    for (int d : dist.row(v))
                        if (d != DistanceMatrix::unreachable)
                            ecc[v] = std::max(ecc[v], d);
                std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
                    if (ecc[a] != ecc[b])
                        return ecc[a] < ecc[b];
                    return g.degree(a) > g.degree(b);
                });
                break;
            }
        }
        return order;
    }

    auto decide_k(const Graph & g, const DistanceMatrix & dist, int k, const SolveOptions & opts) -> DecideResult
    {
        if (k < 1)
            throw std::invalid_argument("decide_k needs k >= 1");
        if (dist.order() != g.order())
            throw std::invalid_argument("distance matrix does not match the graph");

        auto deadline = Deadline::after(opts.time_budget);
        DecideResult result{DecideStatus::Feasible, std::nullopt, 0};
        std::vector<int> colors(g.order(), 0);
        for (auto & part : split(g, dist)) {
            auto out = decide_connected(part.graph, part.dist, k, opts.order, opts.parallel, deadline);
            result.nodes += out.nodes;
            if (out.status != DecideStatus::Feasible) {
                result.status = out.status;
                if (out.status == DecideStatus::Infeasible)
                    return result;
                continue;
            }
            for (std::size_t i = 0; i < part.ids.size(); ++i)
                colors[part.ids[i]] = out.colors[i];
        }
        if (result.status == DecideStatus::Feasible)
            result.witness = PackingColoring(std::move(colors));
        return result;
    }

    auto decide_k(const Graph & g, int k, const SolveOptions & opts) -> DecideResult
    {
        return decide_k(g, all_pairs_distances(g), k, opts);
    }

    auto SolveResult::chi() const -> int
    {
        if (! exact())
            throw std::logic_error("search did not finish: chi lies in [" + std::to_string(lower) + ", " + std::to_string(upper) + "]");
        return upper;
    }

    auto packing_chromatic_number(const Graph & g, const SolveOptions & opts) -> SolveResult
    {
        const auto start = Clock::now();
        const auto deadline = Deadline::after(opts.time_budget);
        auto dist = all_pairs_distances(g);

        SolveResult result;
        result.status = SolveStatus::Exact;
        std::vector<int> colors(g.order(), 1);

        for (auto & part : split(g, dist)) {
            auto order = vertex_order(part.graph, part.dist, opts.order);
            auto greedy = greedy_coloring(part.dist, order);
            int lower = trivial_lower_bound(part.graph);
            int upper = greedy.k();
            std::vector<int> best(greedy.colors().begin(), greedy.colors().end());
            bool exact = true;

            for (int k = lower; k < upper; ++k) {
                if (opts.k_upper_cap && k > *opts.k_upper_cap) {
                    exact = false;
                    break;
                }
                auto out = decide_connected(part.graph, part.dist, k, opts.order, opts.parallel, deadline);
                result.nodes_explored += out.nodes;
                result.probes.push_back({k, out.status});
                if (out.status == DecideStatus::Infeasible) {
                    lower = k + 1;
                    continue;
                }
                if (out.status == DecideStatus::Feasible) {
                    upper = k;
                    best = std::move(out.colors);
                }
                else
                    exact = false;
                break;
            }
            if (exact)
                lower = upper;

            for (std::size_t i = 0; i < part.ids.size(); ++i)
                colors[part.ids[i]] = best[i];
            if (! exact)
                result.status = SolveStatus::TimeoutWithBounds;
            result.lower = std::max(result.lower, lower);
            result.upper = std::max(result.upper, upper);
        }

        result.witness = PackingColoring(std::move(colors));
        result.elapsed = seconds_since(start);
        return result;
    }

    auto brute_force_chi(const Graph & g, std::optional<int> cap) -> int
    {
        const int n = g.order();
        if (n > 12)
            throw SizeExceeded("brute force is limited to 12 vertices, got " + std::to_string(n));
        if (n == 0)
            return 0;
        const int limit = cap.value_or(n);

        constexpr int inf = 1 << 20;
        std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
        for (int v = 0; v < n; ++v) {
            d[v][v] = 0;
            for (VertexId w : g.neighbours(v))
                d[v][w] = 1;
        }
        for (int m = 0; m < n; ++m)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    d[a][b] = std::min(d[a][b], d[a][m] + d[m][b]);

        std::vector<int> c(n, 0);
        for (int k = 1; k <= limit; ++k) {
            // Odometer over 1..k per vertex, rejecting a prefix as soon as
            // its newest vertex clashes with an earlier one.
            int pos = 0;
            c.assign(n, 0);
            while (pos >= 0) {
                if (++c[pos] > k) {
                    c[pos] = 0;
                    --pos;
                    continue;
                }
                bool clash = false;
                for (int q = 0; q < pos && ! clash; ++q)
                    clash = c[q] == c[pos] && d[q][pos] <= c[pos];
                if (clash)
                    continue;
                if (pos + 1 == n) {
                    if (verify(g, PackingColoring(c)).valid)
                        return k;
                    continue;
                }
                ++pos;
            }
        }
        throw std::invalid_argument("no packing colouring with at most " + std::to_string(limit) + " colours");
    }
}
