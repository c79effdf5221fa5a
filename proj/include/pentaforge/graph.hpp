#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pentaforge {

using Row = boost::dynamic_bitset<std::uint64_t>;
using VertexSet = std::vector<int>;
using Edge = std::pair<int, int>;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertices 0..n-1, immutable once built.
class Graph {
public:
    Graph() = default;

    // Rejects out-of-range ids and self-loops; duplicate edges are merged.
    static Graph from_edge_list(int n, const std::vector<Edge>& edges);

    int n() const { return static_cast<int>(rows_.size()); }
    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    const Row& row(int v) const { return rows_[v]; }
    int degree(int v) const { return static_cast<int>(rows_[v].count()); }
    VertexSet neighbors(int v) const;
    std::vector<Edge> edges() const;
    std::size_t edge_count() const;

    Row empty_set() const { return Row(rows_.size()); }
    Row full_set() const { Row r(rows_.size()); r.set(); return r; }

    // Vertex i of the result is vs[i].
    Graph induced(const VertexSet& vs) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

private:
    friend class GraphBuilder;
    std::vector<Row> rows_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    GraphBuilder& add_edge(int u, int v);
    GraphBuilder& add_clique(const VertexSet& vs);
    GraphBuilder& join(const VertexSet& xs, const VertexSet& ys);
    int n() const { return static_cast<int>(rows_.size()); }
    Graph build() const;

private:
    std::vector<Row> rows_;
};

VertexSet to_vertices(const Row& r);
Row to_row(int n, const VertexSet& vs);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> anticomponents(const Graph& g);
bool is_connected(const Graph& g);
bool is_anticonnected(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& vs);
bool is_stable(const Graph& g, const VertexSet& vs);
bool is_complete_to(const Graph& g, const VertexSet& xs, const VertexSet& ys);
bool is_anticomplete_to(const Graph& g, const VertexSet& xs, const VertexSet& ys);

bool is_simplicial(const Graph& g, int v);
VertexSet simplicial_vertices(const Graph& g);
VertexSet universal_vertices(const Graph& g);

// Classes of N[x] = N[y], ordered by smallest member.
std::vector<VertexSet> true_twin_classes(const Graph& g);

struct TwinQuotient {
    Graph quotient;
    std::vector<VertexSet> classes;  // classes[i] is the blow-up of quotient vertex i
};
TwinQuotient contract_twins(const Graph& g);

// Clique separator via a minimal triangulation (MCS-M).
std::optional<VertexSet> clique_cutset(const Graph& g);
// Exhaustive fallback over all minimal separators.
std::optional<VertexSet> clique_cutset_exhaustive(const Graph& g);
std::vector<VertexSet> minimal_separators(const Graph& g);

// mapping[v] is the image in h of vertex v of g.
std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h);

VertexSet maximum_clique(const Graph& g);
int clique_number(const Graph& g);

}  // namespace pentaforge
