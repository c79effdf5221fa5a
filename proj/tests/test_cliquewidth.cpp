#include "doctest.h"
#include "pentaforge/cliquewidth.hpp"
#include "pentaforge/families.hpp"
#include "pentaforge/recognizer.hpp"
#include "support.hpp"

using namespace pentaforge;

namespace {

bool exact(const KExpr& e, const Graph& g, const VertexSet& vs) { return matches_induced(eval(e), g, vs); }

Graph complete(int n) {
    GraphBuilder b(n);
    b.add_clique(support::all_of(Graph::from_edge_list(n, {})));
    return b.build();
}

std::vector<int> labels_by_name(const LabeledGraph& lg) {
    std::vector<int> out(lg.names.size());
    for (std::size_t k = 0; k < lg.names.size(); ++k) out[std::stoi(lg.names[k])] = lg.labels[k];
    return out;
}

}  // namespace

TEST_CASE("complete graphs") {
    auto k3 = expr_complete({{0, 1}, {1, 1}, {2, 2}});
    CHECK(exact(k3, complete(3), {0, 1, 2}));
    CHECK(labels_by_name(eval(k3)) == std::vector<int>{1, 1, 2});
    CHECK(width(k3) <= 3);

    auto k4 = expr_complete({{0, 1}, {1, 1}, {2, 1}, {3, 1}});
    CHECK(exact(k4, complete(4), {0, 1, 2, 3}));
    CHECK(width(k4) <= 2);

    auto k3b = expr_complete({{0, 1}, {1, 2}, {2, 3}});
    CHECK(labels_by_name(eval(k3b)) == std::vector<int>{1, 2, 3});
    CHECK(width(k3b) <= 4);

    CHECK(width(expr_complete({{0, 7}})) == 1);
}

TEST_CASE("spikes") {
    GraphBuilder b(2);
    b.add_edge(0, 1);
    Graph p2 = b.build();
    SpikePartition one{{{0}}, {{1}}};
    CHECK(spike_failures(p2, one).empty());
    auto e1 = expr_spike(p2, one, 1, 2);
    CHECK(exact(e1, p2, {0, 1}));
    CHECK(labels_by_name(eval(e1)) == std::vector<int>{1, 2});

    // B = {0, 1}, C = {2}, chain (1, 0)
    Graph g = Graph::from_edge_list(3, {{0, 1}, {0, 2}});
    SpikePartition two{{{0, 1}}, {{2}}};
    auto e2 = expr_spike(g, two, 3, 1);
    CHECK(exact(e2, g, {0, 1, 2}));
    CHECK(width(e2) <= 4);
    CHECK(labels_by_name(eval(e2)) == std::vector<int>{3, 3, 1});

    // t = 3, all parts of size 2, complete chains
    GraphBuilder h(12);
    SpikePartition three;
    VertexSet all_c;
    for (int i = 0; i < 3; ++i) {
        VertexSet bi{4 * i, 4 * i + 1}, ci{4 * i + 2, 4 * i + 3};
        h.add_clique(bi).add_clique(ci).join(bi, ci);
        all_c.insert(all_c.end(), ci.begin(), ci.end());
        three.B.push_back(bi);
        three.C.push_back(ci);
    }
    h.add_clique(all_c);
    Graph s3 = h.build();
    CHECK(spike_failures(s3, three).empty());
    auto e3 = expr_spike(s3, three, 1, 2);
    CHECK(exact(e3, s3, support::all_of(s3)));
    CHECK(width(e3) <= 4);

    SpikePartition wrong{{{0}, {1}}, {{2}, {3}}};
    CHECK_FALSE(spike_failures(s3, wrong).empty());
}

TEST_CASE("villa builder") {
    Rng seed(1);
    auto gen = random_member("pentagon", 7, seed, 3);
    auto e = expr_villa(gen.graph, gen.cert);
    CHECK(exact(e, gen.graph, support::all_of(gen.graph)));
    CHECK(width(e) <= 4);

    Rng rng(12);
    for (int i = 0; i < 20; ++i) {
        auto v = random_member("villa", 20, rng, 4);
        auto ve = expr_villa(v.graph, v.cert);
        CHECK(exact(ve, v.graph, support::all_of(v.graph)));
        CHECK(width(ve) <= 4);
    }
    CHECK_THROWS_AS(expr_mansion(gen.graph, gen.cert), KExprError);
}

TEST_CASE("mansion builder") {
    MansionParams m;
    m.villa.t = 3;
    m.villa.b = {1, 1, 1};
    m.villa.c = {1, 1, 1};
    m.villa.chains = {{1}, {1}, {1}};
    for (int xy = 0; xy < 4; ++xy) {
        m.x = xy & 1;
        m.y = xy >> 1;
        auto g = mansion(m);
        auto e = expr_mansion(g.graph, g.cert);
        CHECK(exact(e, g.graph, support::all_of(g.graph)));
        CHECK(width(e) <= 5);
    }
    Rng rng(13);
    for (int i = 0; i < 20; ++i) {
        auto g = random_member("mansion", 22, rng);
        auto e = expr_mansion(g.graph, g.cert);
        CHECK(exact(e, g.graph, support::all_of(g.graph)));
        CHECK(width(e) <= 5);
    }
}

TEST_CASE("basket and crown builders") {
    Rng rng(14);
    for (int i = 0; i < 20; ++i) {
        auto b = random_member("basket", 18, rng);
        auto be = expr_basket(b.graph, b.cert);
        CHECK(exact(be, b.graph, support::all_of(b.graph)));
        CHECK(width(be) <= 5);

        auto c = random_member("crown", 15, rng);
        auto ce = expr_crown(c.graph, c.cert);
        CHECK(exact(ce, c.graph, support::all_of(c.graph)));
        CHECK(width(ce) <= 5);
    }
    auto c5 = hyperhole(5, {1, 1, 1, 1, 1});
    CrownCore core;
    for (int i = 0; i < 5; ++i) core.X[i] = c5.parts[i];
    Certificate cert{{}, core};
    auto e = expr_crown(c5.graph, cert);
    CHECK(exact(e, c5.graph, {0, 1, 2, 3, 4}));
    CHECK(width(e) <= 4);

    Certificate broken = cert;
    std::swap(std::get<CrownCore>(broken.core).X[0], std::get<CrownCore>(broken.core).X[1]);
    CHECK_THROWS_AS(expr_crown(c5.graph, broken), KExprError);
}

TEST_CASE("thickened builder") {
    const auto* t0 = find_base("T0");
    auto th = thicken(t0->graph, std::vector<int>(9, 2));
    Certificate cert{{}, ThickenedCore{"T0", th.classes}};
    auto e = expr_thickened(th.graph, cert);
    CHECK(exact(e, th.graph, support::all_of(th.graph)));
    CHECK(width(e) <= 10);

    for (const auto& b : base_library()) {
        auto one = thicken(b.graph, std::vector<int>(b.graph.n(), 1));
        Certificate c{{}, ThickenedCore{b.name, one.classes}};
        auto be = expr_thickened(one.graph, c);
        CHECK(exact(be, one.graph, support::all_of(one.graph)));
        CHECK_MESSAGE(width(be) <= b.graph.n() + 1, b.name);
    }
}

TEST_CASE("universal vertices") {
    auto k1 = expr_complete({{0, 1}});
    auto k2 = expr_add_universal(k1, 1);
    CHECK(exact(k2, complete(2), {0, 1}));
    CHECK(width(k2) == 2);
    CHECK(width(expr_add_universal(k1, 0)) <= 2);

    auto c5 = hyperhole(5, {1, 1, 1, 1, 1});
    CrownCore core;
    for (int i = 0; i < 5; ++i) core.X[i] = c5.parts[i];
    auto ce = expr_crown(c5.graph, Certificate{{}, core});
    auto up = expr_add_universal(ce, 3);
    Graph target = add_universal(c5.graph, 3);
    CHECK(exact(up, target, support::all_of(target)));
    CHECK(width(up) <= std::max(width(ce), 2));

    Rng rng(15);
    for (int i = 0; i < 100; ++i) {
        auto e = support::KExprGen(rng, 1 + i % 4).make(1 + i % 9);
        int m = i % 4;
        auto u = expr_add_universal(e, m);
        CHECK(eval(u).graph == add_universal(eval(e).graph, m));
        CHECK(width(u) <= std::max(width(e), 2));
    }
}

TEST_CASE("linear expressions") {
    Rng rng(16);
    for (int i = 0; i < 40; ++i) {
        Graph g = support::random_graph(rng, 8, 0.5);
        auto order = support::all_of(g);
        std::shuffle(order.begin(), order.end(), rng);
        auto e = linear_expr(g, order);
        CHECK(exact(e, g, support::all_of(g)));
        CHECK(width(e) == linear_width(g, order));
    }
}

TEST_CASE("expr_for dispatch") {
    Rng rng(17);
    for (const char* tag : {"villa", "mansion", "basket", "crown", "thicken"}) {
        for (int i = 0; i < 6; ++i) {
            auto gen = random_member(tag, 16, rng);
            Graph g = add_universal(gen.graph, i % 3);
            auto r = expr_for(g);
            REQUIRE_MESSAGE(std::holds_alternative<InClassNoSimplicial>(r.outcome), tag);
            REQUIRE(r.expr);
            CHECK(exact(r.expr, g, support::all_of(g)));
            const auto& core = std::get<InClassNoSimplicial>(r.outcome).cert.core;
            CHECK(width(r.expr) <= std::max(width_bound(core), 2));
        }
    }
    auto none = expr_for(Graph::from_edge_list(0, {}));
    CHECK(std::holds_alternative<InClassNoSimplicial>(none.outcome));
    CHECK_FALSE(none.expr);

    auto bad = expr_for(cycle_graph(4));
    CHECK(std::holds_alternative<NotInClass>(bad.outcome));
    CHECK_FALSE(bad.expr);
}
