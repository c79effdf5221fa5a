#include "base_facts.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "pentaforge/families.hpp"
#include "pentaforge/patterns.hpp"
#include "support.hpp"

#include <set>

using namespace pentaforge;

namespace {

std::vector<Pattern> present(const ForbiddenProfile& p) {
    std::vector<Pattern> out;
    for (Pattern q : kAllPatterns)
        if (p.has(q)) out.push_back(q);
    return out;
}

Graph complete(int n) {
    GraphBuilder b(n);
    b.add_clique(support::all_of(Graph::from_edge_list(n, {})));
    return b.build();
}

}  // namespace

TEST_CASE("pattern graphs") {
    CHECK(pattern_graph(Pattern::FourK1).edge_count() == 0);
    CHECK(pattern_graph(Pattern::TwoP3).n() == 6);
    CHECK(pattern_graph(Pattern::TwoP3).edge_count() == 4);
    CHECK(pattern_graph(Pattern::Pentagon3).n() == 7);
    CHECK(pattern_graph(Pattern::Pentagon3).edge_count() == 9);
    CHECK(t0_graph().edge_count() == 14);
    CHECK(t1_graph().edge_count() == 21);
    for (Pattern p : kAllPatterns) CHECK(pattern_from_name(pattern_name(p)) == p);
    CHECK_FALSE(pattern_from_name("K5").has_value());
}

TEST_CASE("find_induced examples") {
    auto e = find_induced(cycle_graph(5), Graph::from_edge_list(3, {{0, 1}, {1, 2}}));
    REQUIRE(e.has_value());
    CHECK(verify_embedding(cycle_graph(5), Graph::from_edge_list(3, {{0, 1}, {1, 2}}), *e));
    CHECK_FALSE(find_induced(cycle_graph(7), pattern_graph(Pattern::TwoP3)).has_value());
    auto p = find_induced(t0_graph(), pattern_graph(Pattern::Pentagon3));
    REQUIRE(p.has_value());
    CHECK(verify_embedding(t0_graph(), pattern_graph(Pattern::Pentagon3), *p));
}

TEST_CASE("find_induced agrees with exhaustive search") {
    Rng rng(1234);
    const std::vector<Pattern> pats = {Pattern::FourK1, Pattern::TwoP3, Pattern::C4, Pattern::C6, Pattern::C7};
    for (int i = 0; i < 200; ++i) {
        int n = 6 + static_cast<int>(rng() % 7);
        Graph g = support::random_graph(rng, n, 0.3 + 0.4 * (i % 3) / 2.0);
        for (Pattern p : pats) {
            auto found = find_induced(g, pattern_graph(p));
            CHECK(found.has_value() == oracle::contains_induced(g, pattern_graph(p)));
            if (found) CHECK(verify_embedding(g, pattern_graph(p), *found));
        }
    }
}

TEST_CASE("forbidden profile examples") {
    auto c4 = forbidden_profile(cycle_graph(4));
    CHECK(present(c4) == std::vector<Pattern>{Pattern::C4});
    CHECK_FALSE(c4.in_class);

    auto c7 = forbidden_profile(cycle_graph(7));
    CHECK(present(c7) == std::vector<Pattern>{Pattern::C7});
    CHECK(c7.in_class);
    CHECK_FALSE(c7.in_class_57);

    auto p3 = forbidden_profile(pentagon(3));
    CHECK(present(p3) == std::vector<Pattern>{Pattern::Pentagon3});
    CHECK(p3.in_class);
    CHECK(p3.in_class_57);

    auto j = profile_to_json(c4);
    CHECK(j["C4"].is_array());
    CHECK(j["C6"].is_null());
    CHECK(j["in_class"] == false);

    auto v = class_violation(c4);
    REQUIRE(v.has_value());
    CHECK(v->first == Pattern::C4);
}

TEST_CASE("hole enumeration") {
    auto c5 = holes(cycle_graph(5), 5);
    REQUIRE(c5.size() == 1);
    CHECK(c5[0].size() == 5);
    CHECK(holes(complete(4), 4).empty());
    auto p = holes(pentagon(3), 7);
    CHECK(p.size() == 3);
    for (const auto& h : p) CHECK(h.size() == 5);

    Rng rng(99);
    for (int i = 0; i < 60; ++i) {
        Graph g = support::random_graph(rng, 5 + static_cast<int>(rng() % 7), 0.4);
        std::set<VertexSet> mine;
        for (auto h : holes(g, g.n())) {
            std::sort(h.begin(), h.end());
            CHECK(mine.insert(h).second);
        }
        CHECK(mine == oracle::hole_sets(g, g.n()));
        CHECK(is_chordal(g) == mine.empty());
    }
}

TEST_CASE("hole counts of the library bases") {
    for (const auto& f : base_facts()) {
        const auto* b = find_base(f.name);
        REQUIRE(b != nullptr);
        int five = 0, seven = 0;
        for (const auto& h : holes(b->graph, 12)) {
            five += h.size() == 5;
            seven += h.size() == 7;
            CHECK((h.size() == 5 || h.size() == 7));
        }
        CHECK_MESSAGE(five == f.holes5, f.name);
        CHECK_MESSAGE(seven == f.holes7, f.name);
    }
}

TEST_CASE("class members have only 5- and 7-holes") {
    Rng rng(7);
    for (const char* tag : {"villa", "mansion", "basket", "crown", "thicken"}) {
        for (int i = 0; i < 10; ++i) {
            auto gen = random_member(tag, 14, rng);
            auto prof = forbidden_profile(gen.graph);
            REQUIRE(prof.in_class);
            for (const auto& h : holes(gen.graph, gen.graph.n())) {
                CHECK((h.size() == 5 || h.size() == 7));
                if (prof.in_class_57) CHECK(h.size() == 5);
            }
        }
    }
}

TEST_CASE("chordality") {
    CHECK(is_chordal(complete(4)));
    CHECK_FALSE(is_chordal(cycle_graph(5)));
    Rng rng(31);
    for (int i = 0; i < 10; ++i) {
        auto gen = random_member("villa", 16, rng);
        const auto& v = std::get<VillaCore>(gen.cert.core);
        VertexSet rest;
        for (int x = 0; x < gen.graph.n(); ++x)
            if (std::find(v.A.begin(), v.A.end(), x) == v.A.end()) rest.push_back(x);
        CHECK(is_chordal(gen.graph.induced(rest)));
    }
}

TEST_CASE("largest pentagon") {
    auto three = largest_pentagon_t(pentagon(3));
    REQUIRE(three.has_value());
    CHECK(three->t == 3);
    auto four = largest_pentagon_t(pentagon(4));
    REQUIRE(four.has_value());
    CHECK(four->t == 4);
    CHECK(verify_embedding(pentagon(4), pentagon_graph(4), four->embedding));
    CHECK_FALSE(largest_pentagon_t(cycle_graph(5)).has_value());
}

TEST_CASE("T0 precheck") {
    Rng rng(2);
    for (int i = 0; i < 10; ++i) CHECK(t0_precheck(random_member("villa", 15, rng).graph));
    CHECK_FALSE(t0_precheck(t0_graph()));
    CHECK(t0_precheck(complete(5)));
    for (int i = 0; i < 100; ++i) {
        Graph g = support::random_graph(rng, 10, 0.5);
        if (t0_precheck(g)) CHECK_FALSE(find_induced(g, t0_graph()).has_value());
    }
}
