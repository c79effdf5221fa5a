#pragma once

#include "pentaforge/certificate.hpp"
#include "pentaforge/graph.hpp"
#include "pentaforge/patterns.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace pentaforge {

// Raised when an in-class graph without simplicial vertices matches no structure.
class InternalContradiction : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;
};

VerifyReport verify_certificate(const Graph& g, const Certificate& cert);

// Clauses of the t-frame definition for the given partition.
std::vector<std::string> frame_failures(const Graph& g, const VertexSet& A, const std::vector<VertexSet>& B,
                                        const std::vector<VertexSet>& C);
// Structural conclusions a maximal frame must satisfy in the 57-class: cliques,
// the A-to-B nesting shape, and the nested B_i/C_i chains in both directions.
std::vector<std::string> frame_conclusion_failures(const Graph& g, const VertexSet& A, const std::vector<VertexSet>& B,
                                                   const std::vector<VertexSet>& C);

struct FrameDecomposition {
    int t = 0;
    VertexSet A;
    std::vector<VertexSet> B, C;
    std::vector<VertexSet> D, F, X;  // one per index
    VertexSet Y, Z, W;
    VertexSet unassigned;  // outside vertices matching no residue definition
};

FrameDecomposition grow_maximal_frame(const Graph& g, const PentagonWitness& seed);

// Basket, villa or mansion read off a decomposition; absent if the residues rule it out.
std::optional<Certificate> assemble_from_frame(const Graph& g, const FrameDecomposition& f);

std::optional<Certificate> recognize_crown(const Graph& g);
std::optional<Certificate> recognize_thickening(const Graph& g);

// Name of the first library base isomorphic to g.
std::optional<std::string> match_base(const Graph& g);

struct InClassNoSimplicial {
    Certificate cert;
};
struct HasSimplicial {
    int vertex;
};
struct NotInClass {
    Pattern pattern;
    Embedding witness;
};
using ClassifyOutcome = std::variant<InClassNoSimplicial, HasSimplicial, NotInClass>;

// Throws InternalContradiction when no branch yields a verifying certificate.
ClassifyOutcome classify(const Graph& g);
ClassifyOutcome classify(const Graph& g, const ForbiddenProfile& profile);

nlohmann::ordered_json outcome_to_json(const ClassifyOutcome& o);

}  // namespace pentaforge
