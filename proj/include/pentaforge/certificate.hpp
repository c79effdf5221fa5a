#pragma once

#include "json.hpp"
#include "pentaforge/graph.hpp"

#include <array>
#include <string>
#include <variant>
#include <vector>

namespace pentaforge {

// All part indices (i*, j*) are 0-based.

struct VillaCore {
    VertexSet A;
    std::vector<VertexSet> B, C;
    int t() const { return static_cast<int>(B.size()); }
};

struct MansionCore {
    VertexSet A;
    std::vector<VertexSet> B, C;
    VertexSet F, X, Y;
    int jstar = 0;
    int t() const { return static_cast<int>(B.size()); }
};

struct BasketCore {
    VertexSet A;
    std::array<VertexSet, 3> B, C;
    VertexSet F;
    int istar = 0;
    int jstar = 0;
};

struct CrownCore {
    std::array<VertexSet, 5> X;
    int istar = 0;
};

struct ThickenedCore {
    std::string base;
    std::vector<VertexSet> classes;  // classes[i] blows up base vertex i
};

struct CompleteCore {
    VertexSet vertices;
};

using Core = std::variant<VillaCore, MansionCore, BasketCore, CrownCore, ThickenedCore, CompleteCore>;

struct Certificate {
    VertexSet universals;
    Core core;
};

std::string core_kind(const Core& core);
VertexSet core_vertices(const Core& core);

nlohmann::ordered_json certificate_to_json(const Certificate& c);
// Throws std::invalid_argument on schema violations.
Certificate certificate_from_json(const nlohmann::json& j);

// Rewrites every vertex id v as to_host[v].
Certificate relabel(const Certificate& c, const std::vector<int>& to_host);

}  // namespace pentaforge
