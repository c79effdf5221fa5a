#pragma once

#include "json.hpp"
#include "pentaforge/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace pentaforge {

// embedding[p] is the host vertex that pattern vertex p maps to.
using Embedding = std::vector<int>;

enum class Pattern { FourK1, TwoP3, C4, C6, C7, T0, T1, Pentagon3 };
inline constexpr int kPatternCount = 8;
inline constexpr std::array<Pattern, kPatternCount> kAllPatterns = {
    Pattern::FourK1, Pattern::TwoP3, Pattern::C4, Pattern::C6,
    Pattern::C7,     Pattern::T0,    Pattern::T1, Pattern::Pentagon3};

std::string pattern_name(Pattern p);
std::optional<Pattern> pattern_from_name(const std::string& name);
const Graph& pattern_graph(Pattern p);

Graph cycle_graph(int k);
// Layout: apex 0, b_i = i, c_i = t + i (1-based i).
Graph pentagon_graph(int t);
// Vertex order a1, b1, b1', b2, b3, c1, c1', c2, c3.
Graph t0_graph();
// t0_graph() plus vertex 9 adjacent to a1, b1, b2, b3, c1, c2, c3.
Graph t1_graph();

bool verify_embedding(const Graph& host, const Graph& pattern, const Embedding& e);
std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);

struct ForbiddenProfile {
    std::array<std::optional<Embedding>, kPatternCount> witness;
    bool in_class = false;     // (2P3, C4, C6)-free
    bool in_class_57 = false;  // additionally (C7, T0)-free

    const std::optional<Embedding>& get(Pattern p) const { return witness[static_cast<int>(p)]; }
    bool has(Pattern p) const { return get(p).has_value(); }
};

ForbiddenProfile forbidden_profile(const Graph& g);
nlohmann::ordered_json profile_to_json(const ForbiddenProfile& p);

// First forbidden pattern among C4, 2P3, C6 present in g.
std::optional<std::pair<Pattern, Embedding>> class_violation(const ForbiddenProfile& p);

// Each hole starts at its least vertex, second vertex smaller than the last.
std::vector<std::vector<int>> holes(const Graph& g, int max_len);
bool is_chordal(const Graph& g);

struct PentagonWitness {
    int t = 0;
    Embedding embedding;  // a, b_1..b_t, c_1..c_t
};
std::optional<PentagonWitness> largest_pentagon_t(const Graph& g);

bool t0_precheck(const Graph& g);

}  // namespace pentaforge
