#pragma once

#include "pentaforge/graph.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pentaforge {

class KExprError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class KOp { Intro, Union, Join, Rename };

struct KNode;
using KExpr = std::shared_ptr<const KNode>;

// Intro: (a = label, name). Join: a-b. Rename: a -> b. Union: left, right.
struct KNode {
    KOp op;
    int a = 0, b = 0;
    std::string name;
    KExpr left, right;
};

KExpr k_intro(int label, std::string name);
KExpr k_union(KExpr l, KExpr r);
KExpr k_join(int i, int j, KExpr e);
KExpr k_rename(int from, int to, KExpr e);

bool same_tree(const KExpr& x, const KExpr& y);
std::size_t node_count(const KExpr& e);

// Canonical form: single spaces, no trailing newline.
std::string to_text(const KExpr& e);
// Throws ParseError (see io.hpp) with a 1-based line and column.
KExpr parse_kexpr(std::string_view text);

struct LabeledGraph {
    Graph graph;                     // vertex k is the k-th introduced vertex, left to right
    std::vector<std::string> names;  // names[k]
    std::vector<int> labels;         // labels[k]
};

// Throws KExprError on duplicate vertex names.
LabeledGraph eval(const KExpr& e);

// Number of distinct labels appearing anywhere in e.
int width(const KExpr& e);
// Distinct labels carried by some vertex at the root, ascending.
std::vector<int> root_labels(const KExpr& e);

// Applies an injective label map everywhere (labels missing from the map are kept).
KExpr relabel_labels(const KExpr& e, const std::map<int, int>& perm);

// Drops joins and renames that act on labels absent at that point.
KExpr prune_noops(const KExpr& e);

// True iff the names are exactly the decimal ids in vs and the edges equal g[vs].
bool matches_induced(const LabeledGraph& lg, const Graph& g, const VertexSet& vs);

}  // namespace pentaforge
