#include "pentaforge/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace pentaforge {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string_view text;
    int column;
};

std::vector<Token> split(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

long parse_int(const Token& t, int line) {
    long v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size() || v < 0)
        throw ParseError("expected non-negative integer, got '" + std::string(t.text) + "'", line, t.column);
    return v;
}

}  // namespace

Graph parse_graph_text(std::string_view text) {
    int n = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto toks = split(line);
        if (toks.empty()) {
            if (end == text.size()) break;
            continue;
        }
        if (toks[0].text == "p") {
            if (n >= 0) throw ParseError("duplicate 'p' line", line_no, toks[0].column);
            if (toks.size() != 2) throw ParseError("'p' line takes one argument", line_no, toks[0].column);
            n = static_cast<int>(parse_int(toks[1], line_no));
        } else if (toks[0].text == "e") {
            if (n < 0) throw ParseError("edge before 'p' line", line_no, toks[0].column);
            if (toks.size() != 3) throw ParseError("'e' line takes two arguments", line_no, toks[0].column);
            long u = parse_int(toks[1], line_no), v = parse_int(toks[2], line_no);
            if (u >= n) throw ParseError("vertex id out of range", line_no, toks[1].column);
            if (v >= n) throw ParseError("vertex id out of range", line_no, toks[2].column);
            if (u == v) throw ParseError("self-loop", line_no, toks[0].column);
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        } else {
            throw ParseError("unknown line kind '" + std::string(toks[0].text) + "'", line_no, toks[0].column);
        }
        if (end == text.size()) break;
    }
    if (n < 0) throw ParseError("missing 'p' line", line_no, 1);
    return Graph::from_edge_list(n, edges);
}

std::string format_graph_text(const Graph& g, const std::string& comment) {
    std::ostringstream out;
    if (!comment.empty()) out << "# " << comment << '\n';
    out << "p " << g.n() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph JSON needs 'n' and 'edges'", 1, 1);
    if (!j["n"].is_number_integer() || j["n"].get<long>() < 0) throw ParseError("'n' must be a non-negative integer", 1, 1);
    int n = j["n"].get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("edge must be a pair of integers", 1, 1);
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph::from_edge_list(n, edges);
    } catch (const GraphError& err) {
        throw ParseError(err.what(), 1, 1);
    }
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.n()}, {"edges", edges}};
}

Graph parse_graph_any(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(e.what(), 1, static_cast<int>(e.byte));
        }
        return graph_from_json(j);
    }
    return parse_graph_text(text);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

Graph read_graph_file(const std::string& path) { return parse_graph_any(read_file(path)); }

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace pentaforge
