#pragma once

#include "json.hpp"
#include "pentaforge/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace pentaforge {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// "p <n>" header, one "e <u> <v>" per edge, '#' comments.
Graph parse_graph_text(std::string_view text);
std::string format_graph_text(const Graph& g, const std::string& comment = {});

Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

// Picks the JSON reader when the first non-blank character is '{'.
Graph parse_graph_any(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

std::string to_dot(const Graph& g);

}  // namespace pentaforge
