#include "base_facts.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "pentaforge/cliquewidth.hpp"
#include "pentaforge/coloring.hpp"
#include "pentaforge/families.hpp"
#include "support.hpp"

using namespace pentaforge;

namespace {

Graph complete(int n) {
    GraphBuilder b(n);
    b.add_clique(support::all_of(Graph::from_edge_list(n, {})));
    return b.build();
}

}  // namespace

TEST_CASE("exact chromatic numbers") {
    CHECK(chromatic_exact(cycle_graph(5)).chi == 3);
    CHECK(chromatic_exact(complete(6)).chi == 6);
    CHECK(chromatic_exact(pentagon(3)).chi == 3);
    CHECK(chromatic_exact(Graph::from_edge_list(0, {})).chi == 0);
    CHECK(chromatic_exact(Graph::from_edge_list(3, {})).chi == 1);
    CHECK_FALSE(k_coloring_exact(cycle_graph(5), 2).has_value());
    CHECK_THROWS_AS(chromatic_exact(cycle_graph(25)), GuardExceeded);

    Rng rng(1);
    for (int i = 0; i < 40; ++i) {
        Graph g = support::random_graph(rng, 9, 0.5);
        auto r = chromatic_exact(g);
        CHECK(r.chi == oracle::chromatic(g));
        CHECK(is_proper_coloring(g, r.assignment, r.chi));
    }
}

TEST_CASE("greedy coloring is proper") {
    Rng rng(2);
    for (int i = 0; i < 30; ++i) {
        Graph g = support::random_graph(rng, 15, 0.4);
        auto c = greedy_coloring(g);
        int k = c.empty() ? 0 : *std::max_element(c.begin(), c.end());
        CHECK(is_proper_coloring(g, c, k));
        CHECK(k >= oracle::chromatic(g));
    }
    CHECK_FALSE(is_proper_coloring(complete(2), {1, 1}, 1));
    CHECK_FALSE(is_proper_coloring(complete(2), {1, 3}, 2));
}

TEST_CASE("simplicial peeling") {
    auto k4 = peel_simplicial(complete(4));
    CHECK(k4.core.empty());
    CHECK(k4.removed.size() == 4);
    CHECK(k4.removed[0] == std::pair<int, int>{0, 3});

    auto c5 = peel_simplicial(cycle_graph(5));
    CHECK(c5.removed.empty());
    CHECK(c5.core == VertexSet{0, 1, 2, 3, 4});

    // pentagon(3) with pendant-like simplicial vertices attached to c_1 and to {c_1, c_2}
    Graph p = pentagon(3);
    GraphBuilder b(9);
    for (auto [u, v] : p.edges()) b.add_edge(u, v);
    b.add_edge(7, 4);
    b.add_edge(8, 4).add_edge(8, 5);
    Graph g = b.build();
    auto t = peel_simplicial(g);
    CHECK(t.removed.size() == 2);
    CHECK(t.removed[0].first == 7);
    CHECK(t.removed[1].first == 8);
    CHECK(t.core == VertexSet{0, 1, 2, 3, 4, 5, 6});
}

TEST_CASE("dp on small expressions") {
    auto c5 = hyperhole(5, {1, 1, 1, 1, 1});
    CrownCore core;
    for (int i = 0; i < 5; ++i) core.X[i] = c5.parts[i];
    auto e = expr_crown(c5.graph, Certificate{{}, core});
    CHECK_FALSE(k_colorable_cwd(e, 2));
    CHECK(k_colorable_cwd(e, 3));
    auto w = k_coloring_cwd(e, 3);
    REQUIRE(w.has_value());
    CHECK(is_proper_coloring(eval(e).graph, *w, 3));

    CHECK(k_colorable_cwd(parse_kexpr("(v 1 a)"), 1));
    CHECK_FALSE(k_colorable_cwd(parse_kexpr("(j 1 2 (u (v 1 a) (v 2 b)))"), 1));

    Rng rng(3);
    for (int i = 0; i < 10; ++i) {
        auto v = random_member("villa", 14, rng);
        auto ve = expr_villa(v.graph, v.cert);
        int omega = static_cast<int>(maximum_clique(v.graph).size());
        CHECK_FALSE(k_colorable_cwd(ve, omega - 1));
    }
}

TEST_CASE("dp agrees with the oracle") {
    Rng rng(4);
    for (int i = 0; i < 150; ++i) {
        auto e = support::KExprGen(rng, 1 + i % 4).make(2 + i % 11);
        Graph g = eval(e).graph;
        for (int k = 1; k <= 4; ++k) {
            auto w = k_coloring_cwd(e, k);
            CHECK(w.has_value() == oracle::k_colorable(g, k));
            if (w) CHECK(is_proper_coloring(g, *w, k));
        }
    }
}

TEST_CASE("structured coloring examples") {
    CHECK(chromatic_structured(add_universal(cycle_graph(5), 2)).chi == 5);
    CHECK(chromatic_structured(cycle_graph(5)).chi == 3);
    CHECK(chromatic_structured(pentagon(3)).chi == 3);
    CHECK(chromatic_structured(complete(6)).chi == 6);
    CHECK(chromatic_structured(Graph::from_edge_list(0, {})).chi == 0);
    try {
        chromatic_structured(cycle_graph(4));
        FAIL("C4 accepted");
    } catch (const NotInClassError& e) {
        CHECK(e.pattern == Pattern::C4);
        CHECK(verify_embedding(cycle_graph(4), cycle_graph(4), e.witness));
    }
    auto j = coloring_to_json(chromatic_structured(cycle_graph(5)));
    CHECK(j["chi"] == 3);
    CHECK(j["assignment"].size() == 5);
}

TEST_CASE("structured coloring of the bases") {
    for (const auto& f : base_facts()) {
        Graph g = find_base(f.name)->graph;
        auto r = chromatic_structured(g);
        CHECK_MESSAGE(r.chi == f.chi, f.name);
        CHECK(is_proper_coloring(g, r.assignment, r.chi));
        CHECK(static_cast<int>(maximum_clique(g).size()) == f.omega);
    }
}

TEST_CASE("structured coloring matches the exact oracle") {
    Rng rng(5);
    for (const char* tag : {"villa", "mansion", "basket", "crown", "thicken"}) {
        for (int i = 0; i < 8; ++i) {
            auto gen = random_member(tag, 16, rng);
            Graph g = add_universal(gen.graph, i % 2);
            auto r = chromatic_structured(g);
            CHECK_MESSAGE(r.chi == chromatic_exact(g).chi, tag);
            CHECK(is_proper_coloring(g, r.assignment, r.chi));
        }
    }
}

TEST_CASE("simplicial and universal rules") {
    Rng rng(6);
    int tested = 0;
    for (int i = 0; i < 400 && tested < 30; ++i) {
        Graph g = support::random_graph(rng, 9, 0.6);
        auto simp = simplicial_vertices(g);
        if (simp.empty()) continue;
        ++tested;
        int v = simp[0];
        VertexSet rest;
        for (int u = 0; u < g.n(); ++u)
            if (u != v) rest.push_back(u);
        CHECK(oracle::chromatic(g) == std::max(g.degree(v) + 1, oracle::chromatic(g.induced(rest))));
    }
    CHECK(tested >= 10);
    for (int i = 0; i < 20; ++i) {
        Graph g = support::random_graph(rng, 8, 0.4);
        int m = i % 3;
        CHECK(chromatic_exact(add_universal(g, m)).chi == oracle::chromatic(g) + m);
    }
}
