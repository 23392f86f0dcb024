#include <pcn/errors.hpp>
#include <pcn/families.hpp>

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace pcn
{
    namespace
    {
        void require(bool condition, const std::string & message)
        {
            if (! condition)
                throw InvalidSpec(message);
        }

        auto from_edges(int n, const std::vector<Edge> & edges, std::string name) -> Graph
        {
            return build_graph(n, edges, std::nullopt, std::move(name));
        }

        auto relabelled_plain(const Graph & g) -> Graph
        {
            auto edges = g.edges();
            return build_graph(g.order(), edges, std::nullopt, g.name());
        }

        // Label of the k-th common neighbour of a and b, if the pair fits the
        // corona naming scheme.
        auto subdivision_label(const VertexLabel & a, const VertexLabel & b, int k) -> std::optional<VertexLabel>
        {
            using K = LabelKind;
            if (a.kind() == K::Original && b.kind() == K::Original)
                return VertexLabel::subdivided_edge(a.index(0), b.index(0), k);
            if (a.kind() == K::CopyVertex && b.kind() == K::CopyVertex && a.index(0) == b.index(0))
                return VertexLabel::copy_edge_subdivided(a.index(0), a.index(1), b.index(1), k);
            if (a.kind() == K::Original && b.kind() == K::CopyVertex && a.index(0) != b.index(0))
                return VertexLabel::connector(a.index(0), b.index(0), b.index(1), k);
            if (a.kind() == K::CopyVertex && b.kind() == K::Original)
                return subdivision_label(b, a, k);
            if (a.kind() == K::Original && b.kind() == K::SplitCopy && a.index(0) != b.index(0))
                return VertexLabel::split_connector(a.index(0), b.index(0), k);
            if (a.kind() == K::SplitCopy && b.kind() == K::Original)
                return subdivision_label(b, a, k);
            return std::nullopt;
        }

        auto subdivision_labels(const Graph & g, int m) -> std::optional<std::vector<VertexLabel>>
        {
            std::vector<VertexLabel> labels(g.labels().begin(), g.labels().end());
            for (auto [u, v] : g.edges())
                for (int k = 1; k <= m; ++k) {
                    auto l = subdivision_label(g.label(u), g.label(v), k);
                    if (! l)
                        return std::nullopt;
                    labels.push_back(*l);
                }
            return labels;
        }

        class SpecParser
        {
        public:
            explicit SpecParser(std::string_view text)
            {
                for (char c : text)
                    if (! std::isspace(static_cast<unsigned char>(c)))
                        text_.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
            }

            auto parse() -> FamilySpec
            {
                auto spec = parse_spec();
                if (pos_ != text_.size())
                    fail("trailing characters");
                return spec;
            }

        private:
            std::string text_;
            std::size_t pos_ = 0;

            [[noreturn]] void fail(const std::string & what) const
            {
                throw InvalidSpec("family spec '" + text_ + "': " + what + " at offset " + std::to_string(pos_));
            }

            auto accept(std::string_view token) -> bool
            {
                if (text_.compare(pos_, token.size(), token) == 0) {
                    pos_ += token.size();
                    return true;
                }
                return false;
            }

            void expect(std::string_view token)
            {
                if (! accept(token))
                    fail("expected '" + std::string(token) + "'");
            }

            auto number() -> int
            {
                std::size_t start = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
                if (start == pos_)
                    fail("expected a number");
                if (pos_ - start > 6)
                    fail("number too large");
                return std::stoi(text_.substr(start, pos_ - start));
            }

            auto parse_spec() -> FamilySpec
            {
                if (accept("complete:"))
                    return FamilySpec::complete(number());
                if (accept("cycle:"))
                    return FamilySpec::cycle(number());
                if (accept("path:"))
                    return FamilySpec::path(number());
                if (accept("star:"))
                    return FamilySpec::star(number());
                if (accept("bipartite:")) {
                    int a = number();
                    expect("x");
                    return FamilySpec::complete_bipartite(a, number());
                }
                if (accept("petersen"))
                    return FamilySpec::petersen();
                if (accept("corona(")) {
                    auto base = parse_spec();
                    expect(",");
                    auto attach = parse_spec();
                    expect(")");
                    return FamilySpec::corona(std::move(base), std::move(attach));
                }
                if (accept("split(")) {
                    auto base = parse_spec();
                    expect(")");
                    return FamilySpec::splitting(std::move(base));
                }
                if (accept("fssd(")) {
                    auto base = parse_spec();
                    expect(",");
                    expect("m=");
                    int m = number();
                    expect(")");
                    return FamilySpec::fssd(std::move(base), m);
                }
                fail("unknown family");
            }
        };

        void validate(const FamilySpec & spec)
        {
            using K = FamilySpec::Kind;
            switch (spec.kind) {
                case K::Path: require(spec.first >= 1, "path needs n >= 1"); break;
                case K::Cycle: require(spec.first >= 3, "cycle needs n >= 3, got " + std::to_string(spec.first)); break;
                case K::Complete: require(spec.first >= 1, "complete graph needs n >= 1"); break;
                case K::Star: require(spec.first >= 1, "star needs at least one leaf"); break;
                case K::Petersen: break;
                case K::CompleteBipartite: require(spec.first >= 1 && spec.second >= 1, "complete bipartite needs a, b >= 1"); break;
                case K::NeighborhoodCorona: require(spec.children.size() == 2, "corona takes two operands"); break;
                case K::Splitting: require(spec.children.size() == 1, "split takes one operand"); break;
                case K::Fssd:
                    require(spec.children.size() == 1, "fssd takes one operand");
                    require(spec.first >= 1, "fssd needs m >= 1, got " + std::to_string(spec.first));
                    break;
            }
        }
    }

    auto FamilySpec::to_string() const -> std::string
    {
        switch (kind) {
            case Kind::Path: return "path:" + std::to_string(first);
            case Kind::Cycle: return "cycle:" + std::to_string(first);
            case Kind::Complete: return "complete:" + std::to_string(first);
            case Kind::Star: return "star:" + std::to_string(first);
            case Kind::Petersen: return "petersen";
            case Kind::CompleteBipartite: return "bipartite:" + std::to_string(first) + "x" + std::to_string(second);
            case Kind::NeighborhoodCorona: return "corona(" + children.at(0).to_string() + "," + children.at(1).to_string() + ")";
            case Kind::Splitting: return "split(" + children.at(0).to_string() + ")";
            case Kind::Fssd: return "fssd(" + children.at(0).to_string() + ",m=" + std::to_string(first) + ")";
        }
        return {};
    }

    auto parse_family_spec(std::string_view text) -> FamilySpec
    {
        auto spec = SpecParser(text).parse();
        validate(spec);
        return spec;
    }

    auto path_graph(int n) -> Graph
    {
        require(n >= 1, "path needs n >= 1");
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i)
            edges.push_back({i, i + 1});
        return from_edges(n, edges, "path:" + std::to_string(n));
    }

    auto cycle_graph(int n) -> Graph
    {
        require(n >= 3, "cycle needs n >= 3, got " + std::to_string(n));
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            edges.push_back({i, (i + 1) % n});
        return from_edges(n, edges, "cycle:" + std::to_string(n));
    }

    auto complete_graph(int n) -> Graph
    {
        require(n >= 1, "complete graph needs n >= 1");
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                edges.push_back({i, j});
        return from_edges(n, edges, "complete:" + std::to_string(n));
    }

    auto star_graph(int leaves) -> Graph
    {
        require(leaves >= 1, "star needs at least one leaf");
        std::vector<Edge> edges;
        for (int i = 1; i <= leaves; ++i)
            edges.push_back({0, i});
        return from_edges(leaves + 1, edges, "star:" + std::to_string(leaves));
    }

    auto petersen_graph() -> Graph
    {
        // Outer 5-cycle on 0..4, inner pentagram on 5..9, spokes i -- i+5.
        std::vector<Edge> edges;
        for (int i = 0; i < 5; ++i) {
            edges.push_back({i, (i + 1) % 5});
            edges.push_back({5 + i, 5 + (i + 2) % 5});
            edges.push_back({i, i + 5});
        }
        return from_edges(10, edges, "petersen");
    }

    auto complete_bipartite_graph(int a, int b) -> Graph
    {
        require(a >= 1 && b >= 1, "complete bipartite needs a, b >= 1");
        std::vector<Edge> edges;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                edges.push_back({i, a + j});
        return from_edges(a + b, edges, "bipartite:" + std::to_string(a) + "x" + std::to_string(b));
    }

    auto fssd(const Graph & g, int m) -> Graph
    {
        require(m >= 1, "fssd needs m >= 1, got " + std::to_string(m));

        auto labels = subdivision_labels(g, m);
        const Graph & base = labels ? g : relabelled_plain(g);
        if (! labels)
            labels = subdivision_labels(base, m);

        const int n = base.order();
        std::vector<Edge> edges;
        edges.reserve(2 * m * base.size());
        int next = n;
        for (auto [u, v] : base.edges())
            for (int k = 1; k <= m; ++k) {
                edges.push_back({u, next});
                edges.push_back({v, next});
                ++next;
            }

        return build_graph(next, edges, std::move(labels), "fssd(" + g.name() + ",m=" + std::to_string(m) + ")");
    }

    auto neighborhood_corona(const Graph & g, const Graph & h) -> Graph
    {
        require(g.order() >= 1, "corona base needs at least one vertex");
        const int n1 = g.order(), n2 = h.order();

        std::vector<VertexLabel> labels;
        labels.reserve(n1 + n1 * n2);
        for (int i = 0; i < n1; ++i)
            labels.push_back(VertexLabel::original(i + 1));
        for (int i = 0; i < n1; ++i)
            for (int x = 0; x < n2; ++x)
                labels.push_back(n2 == 1 ? VertexLabel::split_copy(i + 1) : VertexLabel::copy_vertex(i + 1, x + 1));

        auto copy_id = [&](int i, int x) { return n1 + i * n2 + x; };

        std::vector<Edge> edges = g.edges();
        auto h_edges = h.edges();
        for (int i = 0; i < n1; ++i) {
            for (int x = 0; x < n2; ++x)
                for (VertexId w : g.neighbours(i))
                    edges.push_back({w, copy_id(i, x)});
            for (auto [a, b] : h_edges)
                edges.push_back({copy_id(i, a), copy_id(i, b)});
        }

        return build_graph(n1 + n1 * n2, edges, std::move(labels), "corona(" + g.name() + "," + h.name() + ")");
    }

    auto splitting(const Graph & g) -> Graph
    {
        return neighborhood_corona(g, complete_graph(1)).with_name("split(" + g.name() + ")");
    }

    auto locate(const Graph & g, const VertexLabel & label) -> VertexId
    {
        auto id = g.find(label);
        if (! id)
            throw LabelNotFound("no vertex labelled " + label.render() + " in " + g.name());
        return *id;
    }

    auto expected_counts(const FamilySpec & spec) -> FamilyMeta
    {
        validate(spec);
        using K = FamilySpec::Kind;
        const auto n = static_cast<std::size_t>(spec.first);
        switch (spec.kind) {
            case K::Path: return {spec.first, n - 1, "path P_n: n vertices, n-1 edges"};
            case K::Cycle: return {spec.first, n, "cycle C_n: n vertices, n edges"};
            case K::Complete: return {spec.first, n * (n - 1) / 2, "complete K_n: n(n-1)/2 edges"};
            case K::Star: return {spec.first + 1, n, "star K_{1,n}: n leaves"};
            case K::Petersen: return {10, 15, "Petersen graph"};
            case K::CompleteBipartite:
                return {spec.first + spec.second, n * static_cast<std::size_t>(spec.second), "complete bipartite K_{a,b}"};
            case K::NeighborhoodCorona: {
                auto g = expected_counts(spec.children[0]), h = expected_counts(spec.children[1]);
                auto n1 = static_cast<std::size_t>(g.expected_vertices), n2 = static_cast<std::size_t>(h.expected_vertices);
                return {static_cast<int>(n1 + n1 * n2), g.expected_edges * (2 * n2 + 1) + n1 * h.expected_edges,
                    "neighborhood corona: n1 + n1 n2 vertices, m1 (2 n2 + 1) + n1 m2 edges"};
            }
            case K::Splitting: {
                auto g = expected_counts(spec.children[0]);
                return {2 * g.expected_vertices, 3 * g.expected_edges, "splitting graph: corona with K_1, n2 = 1, m2 = 0"};
            }
            case K::Fssd: {
                auto g = expected_counts(spec.children[0]);
                return {static_cast<int>(g.expected_vertices + n * g.expected_edges), 2 * n * g.expected_edges,
                    "finite super subdivision: |V| + m|E| vertices, 2m|E| edges"};
            }
        }
        return {};
    }

    namespace
    {
        auto build(const FamilySpec & spec) -> Graph
        {
            using K = FamilySpec::Kind;
            switch (spec.kind) {
                case K::Path: return path_graph(spec.first);
                case K::Cycle: return cycle_graph(spec.first);
                case K::Complete: return complete_graph(spec.first);
                case K::Star: return star_graph(spec.first);
                case K::Petersen: return petersen_graph();
                case K::CompleteBipartite: return complete_bipartite_graph(spec.first, spec.second);
                case K::NeighborhoodCorona: return neighborhood_corona(build(spec.children[0]), build(spec.children[1]));
                case K::Splitting: return splitting(build(spec.children[0]));
                case K::Fssd: return fssd(build(spec.children[0]), spec.first);
            }
            throw InvalidSpec("unknown family kind");
        }
    }

    auto generate(const FamilySpec & spec) -> GeneratedFamily
    {
        auto meta = expected_counts(spec);
        auto graph = build(spec).with_name(spec.to_string());
        if (graph.order() != meta.expected_vertices || graph.size() != meta.expected_edges)
            throw std::logic_error("generated " + spec.to_string() + " has " + std::to_string(graph.order()) + " vertices / " +
                std::to_string(graph.size()) + " edges, expected " + std::to_string(meta.expected_vertices) + " / " +
                std::to_string(meta.expected_edges));
        return {std::move(graph), std::move(meta)};
    }

    namespace
    {
        auto format_probability(double p) -> std::string
        {
            std::ostringstream out;
            out << p;
            return out.str();
        }
    }

    auto random_connected_graph(int n, double p, std::uint64_t seed) -> Graph
    {
        require(n >= 1, "random graph needs n >= 1");
        require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
        if (n > 1)
            require(p > 0.0, "p = 0 never yields a connected graph");

        std::mt19937_64 rng(seed);
        for (int attempt = 0; attempt < 100000; ++attempt) {
            std::vector<Edge> edges;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    // 53-bit uniform in [0, 1); avoids implementation-defined distributions
                    double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                    if (x < p)
                        edges.push_back({i, j});
                }
            auto g = from_edges(n, edges, "random(n=" + std::to_string(n) + ",p=" + format_probability(p) + ",seed=" + std::to_string(seed) + ")");
            if (components(g).size() == 1)
                return g;
        }
        throw InvalidSpec("could not sample a connected graph; p too small");
    }
}
