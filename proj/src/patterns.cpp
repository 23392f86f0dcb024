#include <pcn/errors.hpp>
#include <pcn/patterns.hpp>

#include <functional>

namespace pcn
{
    namespace
    {
        void require(bool condition, const std::string & message)
        {
            if (! condition)
                throw InvalidSpec(message);
        }

        auto finish(Graph graph, std::vector<int> colors) -> PatternColoring
        {
            PackingColoring coloring(std::move(colors));
            auto report = verify(graph, coloring);
            return {std::move(graph), std::move(coloring), std::move(report)};
        }

        auto color_by_label(const FamilySpec & spec, const std::function<int(const VertexLabel &)> & rule) -> PatternColoring
        {
            auto graph = generate(spec).graph;
            std::vector<int> colors;
            colors.reserve(graph.order());
            for (const auto & label : graph.labels())
                colors.push_back(rule(label));
            return finish(std::move(graph), std::move(colors));
        }

        auto alternating(int position) -> int
        {
            return position % 2 == 1 ? 2 : 3;
        }

        auto digits(std::string_view s) -> std::vector<int>
        {
            std::vector<int> result;
            for (char c : s)
                if (c != ' ')
                    result.push_back(c - '0');
            return result;
        }

        auto corona_on_originals(const FamilySpec & spec, const std::vector<int> & original_colors) -> PatternColoring
        {
            return color_by_label(spec, [&](const VertexLabel & l) {
                switch (l.kind()) {
                    case LabelKind::Original: return original_colors.at(l.index(0) - 1);
                    case LabelKind::CopyVertex: return alternating(l.index(1));
                    default: return 1;
                }
            });
        }
    }

    auto pattern_fssd_bipartite(const Graph & g, int m) -> PatternColoring
    {
        auto sides = bipartition(g);
        if (! sides)
            throw InvalidGraph(g.name() + " is not bipartite");
        require(m >= 1, "fssd needs m >= 1");

        auto graph = fssd(g, m);
        std::vector<int> colors(graph.order(), 1);
        for (VertexId v = 0; v < g.order(); ++v)
            colors[v] = (*sides)[v] == 0 ? 2 : 3;
        return finish(std::move(graph), std::move(colors));
    }

    auto pattern_fssd_complete(int n, int m) -> PatternColoring
    {
        require(n >= 1 && m >= 1, "fssd-complete needs n >= 1, m >= 1");
        auto spec = FamilySpec::fssd(FamilySpec::complete(n), m);
        return color_by_label(spec, [](const VertexLabel & l) { return l.kind() == LabelKind::Original ? l.index(0) + 1 : 1; });
    }

    auto pattern_fssd_cycle(int n, int m) -> PatternColoring
    {
        require(n >= 3 && m >= 1, "fssd-cycle needs n >= 3, m >= 1");
        if (n % 2 == 0) {
            auto result = pattern_fssd_bipartite(cycle_graph(n), m);
            result.graph = result.graph.with_name(FamilySpec::fssd(FamilySpec::cycle(n), m).to_string());
            return result;
        }
        auto spec = FamilySpec::fssd(FamilySpec::cycle(n), m);
        return color_by_label(spec, [n](const VertexLabel & l) {
            if (l.kind() != LabelKind::Original)
                return 1;
            return l.index(0) == n ? 4 : alternating(l.index(0));
        });
    }

    auto pattern_fssd_kn_corona(int n, int p, int m) -> PatternColoring
    {
        require(n >= 3 && p >= 2 && m >= 1, "kn-corona needs n >= 3, p >= 2, m >= 1");
        std::vector<int> originals;
        for (int i = 1; i <= n; ++i)
            originals.push_back(i + 3);
        return corona_on_originals(FamilySpec::fssd(FamilySpec::corona(FamilySpec::complete(n), FamilySpec::path(p)), m), originals);
    }

    auto DigitPattern::assemble() const -> std::vector<int>
    {
        std::vector<int> result = prefix;
        for (int r = 0; r < repeats; ++r)
            result.insert(result.end(), block.begin(), block.end());
        result.insert(result.end(), suffix.begin(), suffix.end());
        return result;
    }

    auto cn_corona_digit_pattern(int n) -> DigitPattern
    {
        require(n >= 4, "digit patterns cover n >= 4");

        DigitPattern p;
        auto whole = [&](std::string rule, std::string_view seq) {
            p.rule = std::move(rule);
            p.prefix = digits(seq);
        };

        if (n == 4)
            whole("n=4", "4567");
        else if (n == 5)
            whole("n=5", "45678");
        else if (n == 7)
            whole("n=7", "4564578");
        else if (n == 8)
            whole("n=8", "75467456");
        else if (n == 11)
            whole("n=11", "75465745648");
        else
            switch (n % 6) {
                case 0:
                    p = {"n=0 mod 6", {}, digits("456 457"), n / 6, {}};
                    break;
                case 1:
                    p = {"n=1 mod 6", digits("754 657 456 7456"), digits("457 456"), (n - 13) / 6, {}};
                    break;
                case 2:
                    p = {"n=2 mod 6", digits("754 657 456 74564"), digits("754 654"), (n - 14) / 6, {}};
                    break;
                case 3:
                    p = {"n=3 mod 6", digits("4657"), digits("456 457"), (n - 9) / 6, digits("456 75")};
                    break;
                case 4:
                    p = {"n=4 mod 6", {}, digits("456 457"), (n - 4) / 6, digits("4567")};
                    break;
                case 5:
                    p = {"n=5 mod 6", digits("754 657 456"), digits("457 456"), (n - 17) / 6, digits("754 67546")};
                    break;
            }

        if (p.repeats < 0 || static_cast<int>(p.assemble().size()) != n)
            throw std::logic_error("digit pattern '" + p.rule + "' does not cover n = " + std::to_string(n));
        return p;
    }

    auto cn_corona_color_bound(int n) -> int
    {
        if (n == 3)
            return 6;
        if (n == 5 || n == 7 || n == 11)
            return 8;
        return 7;
    }

    auto pattern_fssd_cn_corona(int n, int p, int m) -> PatternColoring
    {
        require(n >= 3 && p >= 2 && m >= 1, "cn-corona needs n >= 3, p >= 2, m >= 1");
        auto spec = FamilySpec::fssd(FamilySpec::corona(FamilySpec::cycle(n), FamilySpec::path(p)), m);
        if (n == 3)
            return corona_on_originals(spec, {4, 5, 6});
        return corona_on_originals(spec, cn_corona_digit_pattern(n).assemble());
    }

    auto pattern_fssd_splitting_cycle(int n, int m) -> PatternColoring
    {
        require(n >= 3 && m >= 1, "split-cycle needs n >= 3, m >= 1");
        auto spec = FamilySpec::fssd(FamilySpec::splitting(FamilySpec::cycle(n)), m);
        const bool odd = n % 2 == 1;
        return color_by_label(spec, [n, odd](const VertexLabel & l) {
            bool original = l.kind() == LabelKind::Original;
            if (! original && l.kind() != LabelKind::SplitCopy)
                return 1;
            int i = l.index(0);
            if (odd && i == n)
                return original ? 4 : 5;
            return alternating(i);
        });
    }

    auto pattern_fssd_splitting_complete(int n, int m) -> PatternColoring
    {
        require(n >= 3 && m >= 1, "split-complete needs n >= 3, m >= 1");
        auto spec = FamilySpec::fssd(FamilySpec::splitting(FamilySpec::complete(n)), m);
        return color_by_label(spec, [](const VertexLabel & l) {
            switch (l.kind()) {
                case LabelKind::SplitCopy: return 2;
                case LabelKind::Original: return l.index(0) + 2;
                default: return 1;
            }
        });
    }
}

namespace pcn
{
    auto pattern_names() -> std::vector<std::string>
    {
        return {"fssd-bipartite", "fssd-complete", "fssd-cycle", "kn-corona", "cn-corona", "split-cycle", "split-complete"};
    }

    auto make_pattern(std::string_view name, const PatternParams & params) -> PatternColoring
    {
        if (name == "fssd-bipartite") {
            require(params.base.has_value(), "pattern fssd-bipartite needs a base graph");
            auto pc = pattern_fssd_bipartite(generate(*params.base).graph, params.m);
            pc.graph = pc.graph.with_name(FamilySpec::fssd(*params.base, params.m).to_string());
            return pc;
        }
        require(params.n >= 3, "pattern " + std::string(name) + " needs n >= 3");
        if (name == "fssd-complete")
            return pattern_fssd_complete(params.n, params.m);
        if (name == "fssd-cycle")
            return pattern_fssd_cycle(params.n, params.m);
        if (name == "kn-corona")
            return pattern_fssd_kn_corona(params.n, params.p, params.m);
        if (name == "cn-corona")
            return pattern_fssd_cn_corona(params.n, params.p, params.m);
        if (name == "split-cycle")
            return pattern_fssd_splitting_cycle(params.n, params.m);
        if (name == "split-complete")
            return pattern_fssd_splitting_complete(params.n, params.m);
        throw InvalidSpec("unknown pattern '" + std::string(name) + "'");
    }
}
