#pragma once

#include "json.hpp"
#include "pentaforge/graph.hpp"
#include "pentaforge/kexpr.hpp"
#include "pentaforge/patterns.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pentaforge {

// Raised by the exact oracle above its size limit and by the DP above its state limit.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotInClassError : public std::runtime_error {
public:
    NotInClassError(Pattern p, Embedding w);
    Pattern pattern;
    Embedding witness;
};

struct ColoringResult {
    int chi = 0;
    std::vector<int> assignment;  // assignment[v] in 1..chi
};

bool is_proper_coloring(const Graph& g, const std::vector<int>& assignment, int k);

// DSATUR greedy; colors start at 1.
std::vector<int> greedy_coloring(const Graph& g);

constexpr int kExactLimit = 24;

std::optional<std::vector<int>> k_coloring_exact(const Graph& g, int k, int max_n = kExactLimit);
ColoringResult chromatic_exact(const Graph& g, int max_n = kExactLimit);

struct PeelTrace {
    std::vector<std::pair<int, int>> removed;  // (vertex, degree at removal), in removal order
    VertexSet core;                            // remaining vertices, ascending
};

PeelTrace peel_simplicial(const Graph& g);

constexpr std::size_t kStateLimit = 2'000'000;

// Colors indexed like eval(e).graph, i.e. by intro order.
std::optional<std::vector<int>> k_coloring_cwd(const KExpr& e, int k, std::size_t state_limit = kStateLimit);
bool k_colorable_cwd(const KExpr& e, int k, std::size_t state_limit = kStateLimit);

// Throws NotInClassError outside the class.
ColoringResult chromatic_structured(const Graph& g);

nlohmann::ordered_json coloring_to_json(const ColoringResult& r);

}  // namespace pentaforge
