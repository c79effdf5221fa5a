#pragma once

#include "pentaforge/certificate.hpp"
#include "pentaforge/kexpr.hpp"
#include "pentaforge/recognizer.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pentaforge {

// B_i, C_i cliques; B's pairwise anticomplete; C's pairwise complete;
// B_i anticomplete to C_j for i != j; B_i -> C_i neighborhoods nested.
struct SpikePartition {
    std::vector<VertexSet> B, C;
};

std::vector<std::string> spike_failures(const Graph& g, const SpikePartition& p);

// Complete graph on the given vertices, each with its label. Vertex names are the ids.
KExpr expr_complete(const std::vector<std::pair<int, int>>& labeled);

KExpr expr_spike(const Graph& g, const SpikePartition& p, int blabel, int clabel);

// Builders for a verified certificate of the matching kind; the expression covers
// only the core. Throw KExprError on a wrong kind or a certificate that fails to verify.
KExpr expr_villa(const Graph& g, const Certificate& cert);
KExpr expr_mansion(const Graph& g, const Certificate& cert);
KExpr expr_basket(const Graph& g, const Certificate& cert);
KExpr expr_crown(const Graph& g, const Certificate& cert);
KExpr expr_thickened(const Graph& g, const Certificate& cert);

// Unchecked core dispatch.
KExpr expr_core(const Graph& g, const Core& core);

// Adds each listed vertex as a universal vertex named by its id.
KExpr expr_add_universal(const KExpr& e, const VertexSet& universals);
// Adds m universal vertices with fresh names (next decimal ids when all names are decimal).
KExpr expr_add_universal(const KExpr& e, int m);

// Introduces vertices in the given order, one class label per distinct future neighborhood.
KExpr linear_expr(const Graph& g, const VertexSet& order);
int linear_width(const Graph& g, const VertexSet& order);

// Concatenation of the blocks in the order minimizing linear_width (exhaustive up to 10 blocks).
VertexSet best_block_order(const Graph& g, const std::vector<VertexSet>& blocks);

VertexSet crown_order(const Graph& g, const CrownCore& c);

int width_bound(const Core& core);

struct ExprResult {
    ClassifyOutcome outcome;
    KExpr expr;  // null unless outcome is InClassNoSimplicial on a nonempty graph
};

ExprResult expr_for(const Graph& g);

}  // namespace pentaforge
