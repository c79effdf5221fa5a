#include "doctest.h"
#include "oracles.hpp"
#include "pentaforge/io.hpp"
#include "pentaforge/kexpr.hpp"
#include "support.hpp"

#include <map>
#include <set>

using namespace pentaforge;

TEST_CASE("eval examples") {
    auto k2 = eval(parse_kexpr("(j 1 2 (u (v 1 a) (v 2 b)))"));
    CHECK(k2.graph == Graph::from_edge_list(2, {{0, 1}}));
    CHECK(k2.names == std::vector<std::string>{"a", "b"});
    CHECK(k2.labels == std::vector<int>{1, 2});
    CHECK(width(parse_kexpr("(j 1 2 (u (v 1 a) (v 2 b)))")) == 2);

    auto renamed = eval(parse_kexpr("(r 2 1 (j 1 2 (u (v 1 a) (v 2 b))))"));
    CHECK(renamed.graph.edge_count() == 1);
    CHECK(renamed.labels == std::vector<int>{1, 1});

    auto one = parse_kexpr("(v 1 a)");
    CHECK(one->op == KOp::Intro);
    CHECK(one->a == 1);
    CHECK(one->name == "a");

    auto two = eval(parse_kexpr("(u (v 1 a) (v 1 b))"));
    CHECK(two.graph.edge_count() == 0);
    CHECK(two.labels == std::vector<int>{1, 1});
}

TEST_CASE("join only touches labels present at that node") {
    auto lg = eval(parse_kexpr("(u (j 1 2 (u (v 1 a) (v 2 b))) (v 2 c))"));
    CHECK(lg.graph == Graph::from_edge_list(3, {{0, 1}}));
    auto later = eval(parse_kexpr("(j 1 2 (u (r 2 3 (j 1 2 (u (v 1 a) (v 2 b)))) (v 2 c)))"));
    CHECK(later.graph == Graph::from_edge_list(3, {{0, 1}, {0, 2}}));
    CHECK(later.labels == std::vector<int>{1, 3, 2});
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(k_intro(0, "a"), KExprError);
    CHECK_THROWS_AS(k_intro(1, ""), KExprError);
    CHECK_THROWS_AS(k_intro(1, "a-b"), KExprError);
    CHECK_THROWS_AS(k_join(1, 1, k_intro(1, "a")), KExprError);
    CHECK_THROWS_AS(k_rename(2, 2, k_intro(1, "a")), KExprError);
    CHECK_THROWS_AS(eval(k_union(k_intro(1, "a"), k_intro(2, "a"))), KExprError);
}

TEST_CASE("malformed input reports positions") {
    struct Case {
        const char* text;
        int line, col;
    };
    const Case cases[] = {
        {"(j 1 1 (v 1 a))", 1, 2},
        {"(v 0 a)", 1, 4},
        {"(v 1 a", 1, 1},
        {"(x 1 a)", 1, 2},
        {"(v 1 a) (v 2 b)", 1, 9},
        {"(u (v 1 a) (v 1 a))", 1, 17},
        {"", 1, 1},
        {"(v 1 a)\n(", 2, 1},
        {"(v 1\n  a-b)", 2, 4},
    };
    for (const auto& c : cases) {
        try {
            parse_kexpr(c.text);
            FAIL("accepted: " << c.text);
        } catch (const ParseError& e) {
            CHECK_MESSAGE(e.line() == c.line, c.text);
            CHECK_MESSAGE(e.column() == c.col, c.text);
        }
    }
}

TEST_CASE("canonical text") {
    auto e = parse_kexpr("  (j 1   2\n (u\t(v 1 a)\n(v 2 b) ) )  ");
    CHECK(to_text(e) == "(j 1 2 (u (v 1 a) (v 2 b)))");
    CHECK(same_tree(parse_kexpr(to_text(e)), e));
    CHECK(node_count(e) == 4);
}

TEST_CASE("random round trips") {
    Rng rng(6060);
    for (int i = 0; i < 300; ++i) {
        int w = 1 + static_cast<int>(rng() % 5);
        auto e = support::KExprGen(rng, w).make(1 + static_cast<int>(rng() % 12));
        auto text = to_text(e);
        auto back = parse_kexpr(text);
        CHECK(same_tree(back, e));
        CHECK(to_text(back) == text);
        CHECK(width(e) <= w);
        CHECK(eval(back).graph == eval(e).graph);
    }
}

TEST_CASE("label helpers") {
    auto e = parse_kexpr("(r 3 2 (j 1 3 (u (v 1 a) (v 3 b))))");
    CHECK(width(e) == 3);
    CHECK(root_labels(e) == std::vector<int>{1, 2});
    auto moved = relabel_labels(e, {{1, 4}, {2, 1}, {3, 2}});
    CHECK(to_text(moved) == "(r 2 1 (j 4 2 (u (v 4 a) (v 2 b))))");
    CHECK(eval(moved).graph == eval(e).graph);
    CHECK(root_labels(moved) == std::vector<int>{1, 4});

    auto noisy = parse_kexpr("(j 5 6 (r 7 1 (j 1 2 (u (v 1 a) (v 2 b)))))");
    auto pruned = prune_noops(noisy);
    CHECK(to_text(pruned) == "(j 1 2 (u (v 1 a) (v 2 b)))");
    CHECK(width(pruned) == 2);

    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        auto r = support::KExprGen(rng, 4).make(8);
        auto p = prune_noops(r);
        CHECK(eval(p).graph == eval(r).graph);
        CHECK(eval(p).labels == eval(r).labels);
        CHECK(width(p) <= width(r));
    }
}

TEST_CASE("matches_induced") {
    Graph p3 = Graph::from_edge_list(4, {{0, 1}, {1, 3}});
    auto lg = eval(parse_kexpr("(j 1 2 (u (v 1 1) (u (v 2 0) (v 2 3))))"));
    CHECK(matches_induced(lg, p3, {0, 1, 3}));
    CHECK_FALSE(matches_induced(lg, p3, {0, 1, 2}));
    CHECK_FALSE(matches_induced(lg, Graph::from_edge_list(4, {{0, 1}}), {0, 1, 3}));
}

namespace {

struct Sim {
    std::map<std::string, int> label;
    std::set<std::pair<std::string, std::string>> edges;
};

Sim simulate(const KExpr& e) {
    Sim s;
    switch (e->op) {
        case KOp::Intro:
            s.label[e->name] = e->a;
            break;
        case KOp::Union: {
            s = simulate(e->left);
            Sim r = simulate(e->right);
            s.label.insert(r.label.begin(), r.label.end());
            s.edges.insert(r.edges.begin(), r.edges.end());
            break;
        }
        case KOp::Join:
            s = simulate(e->left);
            for (auto& [x, lx] : s.label)
                for (auto& [y, ly] : s.label)
                    if (lx == e->a && ly == e->b) s.edges.insert(std::minmax(x, y));
            break;
        case KOp::Rename:
            s = simulate(e->left);
            for (auto& [x, lx] : s.label)
                if (lx == e->a) lx = e->b;
            break;
    }
    return s;
}

}  // namespace

TEST_CASE("evaluation agrees with a direct simulation") {
    Rng rng(77);
    for (int i = 0; i < 100; ++i) {
        auto e = support::KExprGen(rng, 1 + i % 4).make(1 + i % 10);
        auto lg = eval(e);
        Sim s = simulate(e);
        REQUIRE(lg.names.size() == s.label.size());
        std::set<std::pair<std::string, std::string>> mine;
        for (auto [u, v] : lg.graph.edges()) mine.insert(std::minmax(lg.names[u], lg.names[v]));
        CHECK(mine == s.edges);
        for (std::size_t k = 0; k < lg.names.size(); ++k) CHECK(lg.labels[k] == s.label.at(lg.names[k]));
    }
}
