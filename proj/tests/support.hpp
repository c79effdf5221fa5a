#pragma once

#include "pentaforge/families.hpp"
#include "pentaforge/kexpr.hpp"

#include <numeric>
#include <random>
#include <string>

namespace support {

using namespace pentaforge;

inline Graph random_graph(Rng& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

inline VertexSet all_of(const Graph& g) {
    VertexSet vs(g.n());
    std::iota(vs.begin(), vs.end(), 0);
    return vs;
}

inline Graph toggle_edge(const Graph& g, int u, int v) {
    std::vector<Edge> edges;
    bool found = false;
    for (auto e : g.edges()) {
        if ((e.first == u && e.second == v) || (e.first == v && e.second == u)) found = true;
        else edges.push_back(e);
    }
    if (!found) edges.emplace_back(u, v);
    return Graph::from_edge_list(g.n(), edges);
}

// Random well-formed tree over labels 1..w with n uniquely named vertices.
class KExprGen {
public:
    KExprGen(Rng& rng, int w) : rng_(rng), w_(w) {}

    KExpr make(int n) {
        next_ = 0;
        return build(n);
    }

private:
    Rng& rng_;
    int w_;
    int next_ = 0;

    int label() { return std::uniform_int_distribution<int>(1, w_)(rng_); }

    KExpr build(int n) {
        KExpr e;
        if (n == 1) {
            e = k_intro(label(), "v" + std::to_string(next_++));
        } else {
            int left = std::uniform_int_distribution<int>(1, n - 1)(rng_);
            e = k_union(build(left), build(n - left));
        }
        int ops = std::uniform_int_distribution<int>(0, 3)(rng_);
        for (int i = 0; i < ops && w_ > 1; ++i) {
            int a = label(), b = label();
            if (a == b) continue;
            e = std::uniform_int_distribution<int>(0, 2)(rng_) ? k_join(a, b, e) : k_rename(a, b, e);
        }
        return e;
    }
};

}  // namespace support
