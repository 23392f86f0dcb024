#pragma once

#include <pcn/coloring.hpp>
#include <pcn/graph.hpp>

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

namespace pcn
{
    class IoError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    auto label_to_json(const VertexLabel & label) -> nlohmann::json;
    auto label_from_json(const nlohmann::json & j) -> VertexLabel;

    /// {"name", "n", "labels": [{"kind", "indices"}...], "edges": [[u, v]...]} with u < v.
    auto graph_to_json(const Graph & g) -> nlohmann::json;
    /// Throws InvalidGraph on schema or structural errors.
    auto graph_from_json(const nlohmann::json & j) -> Graph;

    struct NamedColoring
    {
        std::string graph_name;
        PackingColoring coloring;
    };

    /// {"graph_name", "n", "k", "colors": [...]}, colours indexed by vertex id.
    auto coloring_to_json(const std::string & graph_name, const PackingColoring & c) -> nlohmann::json;
    auto coloring_from_json(const nlohmann::json & j) -> NamedColoring;

    /// Undirected DOT; node labels are rendered vertex labels, with the
    /// colour appended when one is given.
    auto to_dot(const Graph & g, const std::optional<PackingColoring> & c = std::nullopt) -> std::string;

    auto read_text_file(const std::filesystem::path & path) -> std::string;
    auto read_json_file(const std::filesystem::path & path) -> nlohmann::json;

    /// Writes to a sibling temporary file and renames it into place.
    void write_file_atomic(const std::filesystem::path & path, const std::string & content);
}
