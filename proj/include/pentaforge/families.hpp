#pragma once

#include "pentaforge/certificate.hpp"
#include "pentaforge/graph.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pentaforge {

class FamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// entry k = size of the target-clique prefix adjacent to source vertex k
using Staircase = std::vector<int>;

struct VillaParams {
    int t = 3;
    int a = 1;
    std::vector<int> b, c;
    std::vector<Staircase> chains;  // B_i -> C_i, floor 1
};

struct MansionParams {
    VillaParams villa;
    int f = 1, x = 0, y = 0;
    int jstar = 0;
};

struct BasketParams {
    int a = 1;
    std::array<int, 3> b{1, 1, 1}, c{1, 1, 1};
    int f = 0;
    int istar = 0, jstar = 0;
    Staircase a_chain;  // A -> B_{istar}, floor 0
};

struct RingParams {
    std::vector<int> sizes;
    std::vector<Staircase> stairs;  // stairs[i]: X_i -> X_{i+1}, floor 1
};

struct CrownParams {
    RingParams ring;
    int istar = 0;
};

struct Generated {
    Graph graph;
    Certificate cert;
};

Graph pentagon(int t);
Generated villa(const VillaParams& p);
Generated mansion(const MansionParams& p);
Generated basket(const BasketParams& p);

struct RingGraph {
    Graph graph;
    std::vector<VertexSet> parts;
};
RingGraph ring(const RingParams& p);
// Ring chain condition for the given partition (k >= 4 parts, cyclic).
bool is_ring_partition(const Graph& g, const std::vector<VertexSet>& parts);
Generated crown(const CrownParams& p);
RingGraph hyperhole(int k, const std::vector<int>& sizes);

struct Thickened {
    Graph graph;
    std::vector<VertexSet> classes;
};
Thickened thicken(const Graph& base, const std::vector<int>& mult);
Graph add_universal(const Graph& g, int m);

struct NamedGraph {
    std::string name;
    Graph graph;
};
const std::vector<NamedGraph>& base_library();
const NamedGraph* find_base(const std::string& name);

// Full staircase of the given length.
Staircase full_staircase(int length, int value);

using Rng = std::mt19937_64;
Staircase random_staircase(Rng& rng, int length, int full, int floor);

// Tags: pentagon, villa, mansion, basket, crown, hyperhole, thicken.
// A nonzero t fixes the number of pairs (pentagon, villa, mansion only).
Generated random_member(const std::string& tag, int budget, Rng& rng, int t = 0);
int minimum_budget(const std::string& tag);
RingGraph random_ring(int k, int budget, Rng& rng);

}  // namespace pentaforge
