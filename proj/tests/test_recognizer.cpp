#include "doctest.h"
#include "pentaforge/families.hpp"
#include "pentaforge/recognizer.hpp"
#include "support.hpp"

using namespace pentaforge;

namespace {

Graph complete(int n) {
    GraphBuilder b(n);
    b.add_clique(support::all_of(Graph::from_edge_list(n, {})));
    return b.build();
}

// Random relabeling of g, returning the graph and the map old -> new.
std::pair<Graph, std::vector<int>> shuffle(const Graph& g, Rng& rng) {
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return {Graph::from_edge_list(g.n(), edges), perm};
}

}  // namespace

TEST_CASE("classify small graphs") {
    auto k4 = classify(complete(4));
    REQUIRE(std::holds_alternative<HasSimplicial>(k4));
    CHECK(std::get<HasSimplicial>(k4).vertex == 0);

    auto c4 = classify(cycle_graph(4));
    REQUIRE(std::holds_alternative<NotInClass>(c4));
    CHECK(std::get<NotInClass>(c4).pattern == Pattern::C4);
    CHECK(verify_embedding(cycle_graph(4), cycle_graph(4), std::get<NotInClass>(c4).witness));

    auto c6 = classify(cycle_graph(6));
    REQUIRE(std::holds_alternative<NotInClass>(c6));

    auto c5 = classify(cycle_graph(5));
    REQUIRE(std::holds_alternative<InClassNoSimplicial>(c5));
    CHECK(verify_certificate(cycle_graph(5), std::get<InClassNoSimplicial>(c5).cert).ok);

    Graph empty = Graph::from_edge_list(0, {});
    auto e = classify(empty);
    REQUIRE(std::holds_alternative<InClassNoSimplicial>(e));
    CHECK(verify_certificate(empty, std::get<InClassNoSimplicial>(e).cert).ok);
    CHECK_FALSE(verify_certificate(complete(1), Certificate{{}, CompleteCore{}}).ok);

    auto c7 = classify(cycle_graph(7));
    REQUIRE(std::holds_alternative<InClassNoSimplicial>(c7));
    const auto& th = std::get<ThickenedCore>(std::get<InClassNoSimplicial>(c7).cert.core);
    CHECK(th.base == "M0-y0-y3-z0-z3-z4");
}

TEST_CASE("universal vertices are stripped") {
    Graph g = add_universal(pentagon(3), 2);
    auto o = classify(g);
    REQUIRE(std::holds_alternative<InClassNoSimplicial>(o));
    const auto& cert = std::get<InClassNoSimplicial>(o).cert;
    CHECK(cert.universals == VertexSet{7, 8});
    CHECK(core_kind(cert.core) == "villa");
    CHECK(verify_certificate(g, cert).ok);

    auto k = classify(complete(3));
    CHECK(std::holds_alternative<HasSimplicial>(k));
}

TEST_CASE("three-pentagon frame") {
    auto seed = largest_pentagon_t(pentagon(3));
    REQUIRE(seed.has_value());
    auto f = grow_maximal_frame(pentagon(3), *seed);
    CHECK(f.t == 3);
    CHECK(f.A.size() == 1);
    CHECK(f.unassigned.empty());
    CHECK(frame_failures(pentagon(3), f.A, f.B, f.C).empty());
    auto cert = assemble_from_frame(pentagon(3), f);
    REQUIRE(cert.has_value());
    CHECK(core_kind(cert->core) == "villa");
}

TEST_CASE("frame clause detection") {
    Graph g = pentagon(3);
    // a = 0, b_i = i, c_i = 3 + i
    CHECK(frame_failures(g, {0}, {{1}, {2}, {3}}, {{4}, {5}, {6}}).empty());
    CHECK_FALSE(frame_failures(g, {0}, {{1}, {2}, {3}}, {{5}, {4}, {6}}).empty());
    CHECK_FALSE(frame_failures(g, {0}, {{1}, {2}}, {{4}, {5}}).empty());
}

TEST_CASE("mansion residues") {
    MansionParams m;
    m.villa.t = 3;
    m.villa.b = {1, 1, 1};
    m.villa.c = {1, 1, 1};
    m.villa.chains = {{1}, {1}, {1}};
    m.f = 1;
    m.x = 1;
    m.y = 1;
    auto gen = mansion(m);
    auto o = classify(gen.graph);
    REQUIRE(std::holds_alternative<InClassNoSimplicial>(o));
    const auto& cert = std::get<InClassNoSimplicial>(o).cert;
    CHECK(core_kind(cert.core) == "mansion");
    CHECK(verify_certificate(gen.graph, cert).ok);
}

TEST_CASE("classification round trip over shuffled members") {
    Rng rng(515);
    for (const char* tag : {"pentagon", "villa", "mansion", "basket", "crown", "thicken"}) {
        for (int i = 0; i < 12; ++i) {
            auto gen = random_member(tag, 16, rng);
            auto [g, perm] = shuffle(gen.graph, rng);
            auto o = classify(g);
            if (!simplicial_vertices(g).empty()) {
                CHECK(std::holds_alternative<HasSimplicial>(o));
                continue;
            }
            REQUIRE_MESSAGE(std::holds_alternative<InClassNoSimplicial>(o), tag);
            const auto& cert = std::get<InClassNoSimplicial>(o).cert;
            CHECK_MESSAGE(verify_certificate(g, cert).ok, tag);
            CHECK(certificate_from_json(certificate_to_json(cert)).universals == cert.universals);
            CHECK(verify_certificate(g, certificate_from_json(certificate_to_json(cert))).ok);
            // the generator's own certificate, moved to the shuffled ids, verifies as well
            CHECK(verify_certificate(g, relabel(gen.cert, perm)).ok);
        }
    }
}

TEST_CASE("corrupted certificates are rejected") {
    Rng rng(88);
    for (const char* tag : {"villa", "mansion", "basket", "crown", "thicken"}) {
        auto gen = random_member(tag, 14, rng);
        REQUIRE(verify_certificate(gen.graph, gen.cert).ok);
        auto vs = core_vertices(gen.cert.core);
        REQUIRE(vs.size() >= 2);
        // some transposition of core vertices must break the certificate
        int rejected = 0;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                std::vector<int> swap(gen.graph.n());
                std::iota(swap.begin(), swap.end(), 0);
                std::swap(swap[vs[i]], swap[vs[j]]);
                rejected += !verify_certificate(gen.graph, relabel(gen.cert, swap)).ok;
            }
        CHECK_MESSAGE(rejected > 0, std::string(tag));

        std::vector<int> merge(gen.graph.n());
        std::iota(merge.begin(), merge.end(), 0);
        merge[vs[0]] = vs[1];
        CHECK_FALSE(verify_certificate(gen.graph, relabel(gen.cert, merge)).ok);

        Certificate missing = gen.cert;
        missing.universals.push_back(gen.graph.n());
        CHECK_FALSE(verify_certificate(gen.graph, missing).ok);
    }
}

TEST_CASE("perturbed members are handled honestly") {
    Rng rng(919);
    int outside = 0;
    for (int i = 0; i < 60; ++i) {
        auto gen = random_member(i % 2 ? "villa" : "basket", 13, rng);
        int u = static_cast<int>(rng() % gen.graph.n());
        int v = static_cast<int>(rng() % gen.graph.n());
        if (u == v) continue;
        Graph g = support::toggle_edge(gen.graph, u, v);
        auto o = classify(g);
        if (auto* bad = std::get_if<NotInClass>(&o)) {
            ++outside;
            CHECK(verify_embedding(g, pattern_graph(bad->pattern), bad->witness));
        } else if (auto* ok = std::get_if<InClassNoSimplicial>(&o)) {
            CHECK(verify_certificate(g, ok->cert).ok);
        } else {
            CHECK_FALSE(simplicial_vertices(g).empty());
        }
    }
    CHECK(outside > 0);
}

TEST_CASE("thickening and base matching") {
    for (const auto& b : base_library()) {
        auto name = match_base(b.graph);
        REQUIRE(name.has_value());
        CHECK(is_isomorphic(find_base(*name)->graph, b.graph).has_value());
    }
    CHECK_FALSE(match_base(cycle_graph(5)).has_value());
    auto th = thicken(find_base("T0")->graph, std::vector<int>(9, 2));
    auto cert = recognize_thickening(th.graph);
    REQUIRE(cert.has_value());
    CHECK(std::get<ThickenedCore>(cert->core).base == "T0");
    CHECK(verify_certificate(th.graph, *cert).ok);
}

TEST_CASE("outcome json") {
    auto j = outcome_to_json(classify(cycle_graph(4)));
    CHECK(j["outcome"] == "not_in_class");
    CHECK(j["pattern"] == "C4");
    CHECK(outcome_to_json(classify(complete(2)))["outcome"] == "has_simplicial");
}
