#include <pcn/errors.hpp>
#include <pcn/io.hpp>

#include <fstream>
#include <sstream>
#include <unistd.h>

namespace pcn
{
    using nlohmann::json;

    auto label_to_json(const VertexLabel & label) -> json
    {
        auto idx = label.indices();
        return {{"kind", label_kind_name(label.kind())}, {"indices", std::vector<int>(idx.begin(), idx.end())}};
    }

    auto label_from_json(const json & j) -> VertexLabel
    {
        if (! j.is_object() || ! j.contains("kind") || ! j.contains("indices"))
            throw InvalidGraph("label must be an object with 'kind' and 'indices'");
        auto kind = label_kind_from_name(j.at("kind").get<std::string>());
        if (! kind)
            throw InvalidGraph("unknown label kind '" + j.at("kind").get<std::string>() + "'");
        auto idx = j.at("indices").get<std::vector<int>>();
        return VertexLabel::make(*kind, idx);
    }

    auto graph_to_json(const Graph & g) -> json
    {
        json labels = json::array();
        for (const auto & l : g.labels())
            labels.push_back(label_to_json(l));
        json edges = json::array();
        for (auto [u, v] : g.edges())
            edges.push_back({u, v});
        return {{"name", g.name()}, {"n", g.order()}, {"labels", std::move(labels)}, {"edges", std::move(edges)}};
    }

    auto graph_from_json(const json & j) -> Graph
    {
        try {
            if (! j.is_object())
                throw InvalidGraph("graph JSON must be an object");
            int n = j.at("n").get<int>();
            std::vector<Edge> edges;
            for (const auto & e : j.at("edges")) {
                if (! e.is_array() || e.size() != 2)
                    throw InvalidGraph("edges must be [u, v] pairs");
                edges.push_back({e[0].get<int>(), e[1].get<int>()});
            }
            std::optional<std::vector<VertexLabel>> labels;
            if (j.contains("labels") && ! j.at("labels").is_null()) {
                labels.emplace();
                for (const auto & l : j.at("labels"))
                    labels->push_back(label_from_json(l));
            }
            return build_graph(n, edges, std::move(labels), j.value("name", std::string{}));
        }
        catch (const json::exception & e) {
            throw InvalidGraph(std::string("malformed graph JSON: ") + e.what());
        }
    }

    auto coloring_to_json(const std::string & graph_name, const PackingColoring & c) -> json
    {
        return {{"graph_name", graph_name}, {"n", c.size()}, {"k", c.k()},
            {"colors", std::vector<int>(c.colors().begin(), c.colors().end())}};
    }

    auto coloring_from_json(const json & j) -> NamedColoring
    {
        try {
            auto colors = j.at("colors").get<std::vector<int>>();
            if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(colors.size()))
                throw InvalidColoring("coloring JSON: 'n' does not match the number of colours");
            PackingColoring c(std::move(colors));
            if (j.contains("k") && j.at("k").get<int>() != c.k())
                throw InvalidColoring("coloring JSON: 'k' is " + std::to_string(j.at("k").get<int>()) +
                    " but the largest colour is " + std::to_string(c.k()));
            return {j.value("graph_name", std::string{}), std::move(c)};
        }
        catch (const json::exception & e) {
            throw InvalidColoring(std::string("malformed coloring JSON: ") + e.what());
        }
    }

    namespace
    {
        auto quoted(const std::string & s) -> std::string
        {
            std::string out = "\"";
            for (char ch : s) {
                if (ch == '"' || ch == '\\')
                    out.push_back('\\');
                out.push_back(ch);
            }
            return out + "\"";
        }
    }

    auto to_dot(const Graph & g, const std::optional<PackingColoring> & c) -> std::string
    {
        if (c && c->size() != g.order())
            throw InvalidColoring("colouring does not match the graph");

        std::ostringstream out;
        out << "graph " << quoted(g.name().empty() ? "G" : g.name()) << " {\n";
        for (VertexId v = 0; v < g.order(); ++v) {
            std::string text = g.label(v).render();
            if (c)
                text += " : " + std::to_string((*c)[v]);
            out << "  " << v << " [label=" << quoted(text) << "];\n";
        }
        for (auto [u, v] : g.edges())
            out << "  " << u << " -- " << v << ";\n";
        out << "}\n";
        return out.str();
    }

    auto read_text_file(const std::filesystem::path & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw IoError("cannot open " + path.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        if (in.bad())
            throw IoError("error reading " + path.string());
        return buf.str();
    }

    auto read_json_file(const std::filesystem::path & path) -> json
    {
        auto text = read_text_file(path);
        try {
            return json::parse(text);
        }
        catch (const json::parse_error & e) {
            throw IoError(path.string() + " is not valid JSON: " + e.what());
        }
    }

    void write_file_atomic(const std::filesystem::path & path, const std::string & content)
    {
        auto tmp = path;
        tmp += ".tmp." + std::to_string(::getpid());
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (! out)
                throw IoError("cannot write " + tmp.string());
            out << content;
            out.flush();
            if (! out)
                throw IoError("error writing " + tmp.string());
        }
        std::error_code ec;
        std::filesystem::rename(tmp, path, ec);
        if (ec) {
            std::filesystem::remove(tmp, ec);
            throw IoError("cannot move output into place at " + path.string());
        }
    }
}
