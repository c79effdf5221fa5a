#include "pentaforge/families.hpp"

#include "pentaforge/patterns.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pentaforge {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw FamilyError(msg);
}

void check_staircase(const Staircase& s, int length, int full, int floor, const std::string& what) {
    require(static_cast<int>(s.size()) == length, what + ": staircase length must equal the source clique size");
    require(length == 0 || s[0] == full, what + ": first staircase entry must be full");
    for (std::size_t k = 0; k < s.size(); ++k) {
        require(s[k] >= floor && s[k] <= full, what + ": staircase entry out of range");
        require(k == 0 || s[k] <= s[k - 1], what + ": staircase must be nonincreasing");
    }
}

VertexSet block(int& next, int size) {
    VertexSet out(size);
    std::iota(out.begin(), out.end(), next);
    next += size;
    return out;
}

void add_staircase(GraphBuilder& b, const VertexSet& src, const VertexSet& dst, const Staircase& s) {
    for (std::size_t k = 0; k < src.size(); ++k)
        for (int m = 0; m < s[k]; ++m) b.add_edge(src[k], dst[m]);
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Every part starts at `floor`; `extra` further vertices land on uniformly random parts.
std::vector<int> spread(Rng& rng, int parts, int extra, const std::vector<int>& floor) {
    std::vector<int> sizes = floor;
    for (int i = 0; i < extra; ++i) ++sizes[uniform(rng, 0, parts - 1)];
    return sizes;
}

}  // namespace

Staircase full_staircase(int length, int value) { return Staircase(length, value); }

Staircase random_staircase(Rng& rng, int length, int full, int floor) {
    Staircase s;
    if (length == 0) return s;
    s.push_back(full);
    int rest = length - 1;
    int m = full - floor + 1;
    // Uniform multiset of size `rest` over m values via a uniform (rest)-subset of m+rest-1 slots.
    std::vector<int> slots(m + rest - 1);
    std::iota(slots.begin(), slots.end(), 0);
    std::vector<int> pick;
    std::sample(slots.begin(), slots.end(), std::back_inserter(pick), rest, rng);
    std::sort(pick.begin(), pick.end());
    std::vector<int> values;
    for (int j = 0; j < rest; ++j) values.push_back(floor + pick[j] - j);
    std::sort(values.rbegin(), values.rend());
    s.insert(s.end(), values.begin(), values.end());
    return s;
}

Graph pentagon(int t) {
    require(t >= 3, "pentagon needs t >= 3");
    return pentagon_graph(t);
}

Generated villa(const VillaParams& p) {
    require(p.t >= 3, "villa needs t >= 3");
    require(static_cast<int>(p.b.size()) == p.t && static_cast<int>(p.c.size()) == p.t &&
                static_cast<int>(p.chains.size()) == p.t,
            "villa: one size and chain per index");
    require(p.a >= 1, "villa: A must be nonempty");
    for (int i = 0; i < p.t; ++i) {
        require(p.b[i] >= 1 && p.c[i] >= 1, "villa: B_i and C_i must be nonempty");
        check_staircase(p.chains[i], p.b[i], p.c[i], 1, "villa chain " + std::to_string(i));
    }
    int n = p.a + std::accumulate(p.b.begin(), p.b.end(), 0) + std::accumulate(p.c.begin(), p.c.end(), 0);
    GraphBuilder g(n);
    int next = 0;
    VillaCore core;
    core.A = block(next, p.a);
    for (int i = 0; i < p.t; ++i) core.B.push_back(block(next, p.b[i]));
    for (int i = 0; i < p.t; ++i) core.C.push_back(block(next, p.c[i]));
    g.add_clique(core.A);
    VertexSet all_c;
    for (int i = 0; i < p.t; ++i) {
        g.add_clique(core.B[i]);
        g.join(core.A, core.B[i]);
        add_staircase(g, core.B[i], core.C[i], p.chains[i]);
        all_c.insert(all_c.end(), core.C[i].begin(), core.C[i].end());
    }
    g.add_clique(all_c);
    return {g.build(), Certificate{{}, core}};
}

Generated mansion(const MansionParams& p) {
    const auto& v = p.villa;
    require(p.f >= 1, "mansion: F must be nonempty");
    require(p.x >= 0 && p.y >= 0, "mansion: X and Y sizes must be non-negative");
    require(p.jstar >= 0 && p.jstar < v.t, "mansion: jstar out of range");
    auto base = villa(v);
    require(v.chains[p.jstar] == full_staircase(v.b[p.jstar], v.c[p.jstar]),
            "mansion: B_jstar must be complete to C_jstar");
    const auto& vc = std::get<VillaCore>(base.cert.core);
    int n0 = base.graph.n();
    GraphBuilder g(n0 + p.f + p.x + p.y);
    for (auto [a, b] : base.graph.edges()) g.add_edge(a, b);
    int next = n0;
    MansionCore core{vc.A, vc.B, vc.C, block(next, p.f), block(next, p.x), block(next, p.y), p.jstar};
    g.add_clique(core.F);
    g.add_clique(core.X);
    g.add_clique(core.Y);
    g.join(core.F, core.A);
    for (int i = 0; i < v.t; ++i) {
        if (i == p.jstar) continue;
        g.join(core.F, core.B[i]);
        g.join(core.F, core.C[i]);
    }
    g.join(core.X, core.A);
    g.join(core.X, core.B[p.jstar]);
    g.join(core.F, core.X);
    g.join(core.F, core.Y);
    for (const auto& c : core.C) g.join(core.Y, c);
    return {g.build(), Certificate{{}, core}};
}

Generated basket(const BasketParams& p) {
    require(p.a >= 1, "basket: A must be nonempty");
    for (int i = 0; i < 3; ++i) require(p.b[i] >= 1 && p.c[i] >= 1, "basket: B_i and C_i must be nonempty");
    require(p.f >= 0, "basket: F size must be non-negative");
    require(p.istar >= 0 && p.istar < 3 && p.jstar >= 0 && p.jstar < 3, "basket: istar/jstar out of range");
    check_staircase(p.a_chain, p.a, p.b[p.istar], 0, "basket chain");
    int n = p.a + p.f;
    for (int i = 0; i < 3; ++i) n += p.b[i] + p.c[i];
    GraphBuilder g(n);
    int next = 0;
    BasketCore core;
    core.A = block(next, p.a);
    for (int i = 0; i < 3; ++i) core.B[i] = block(next, p.b[i]);
    for (int i = 0; i < 3; ++i) core.C[i] = block(next, p.c[i]);
    core.F = block(next, p.f);
    core.istar = p.istar;
    core.jstar = p.jstar;
    g.add_clique(core.A);
    g.add_clique(core.F);
    VertexSet all_c;
    for (int i = 0; i < 3; ++i) {
        g.add_clique(core.B[i]);
        g.join(core.B[i], core.C[i]);
        all_c.insert(all_c.end(), core.C[i].begin(), core.C[i].end());
        if (i == p.istar)
            add_staircase(g, core.A, core.B[i], p.a_chain);
        else
            g.join(core.A, core.B[i]);
    }
    g.add_clique(all_c);
    g.join(core.F, core.A);
    for (int i = 0; i < 3; ++i) {
        if (i == p.jstar) continue;
        g.join(core.F, core.B[i]);
        g.join(core.F, core.C[i]);
    }
    return {g.build(), Certificate{{}, core}};
}

bool is_ring_partition(const Graph& g, const std::vector<VertexSet>& parts) {
    int k = static_cast<int>(parts.size());
    if (k < 4) return false;
    std::vector<int> owner(g.n(), -1);
    for (int i = 0; i < k; ++i) {
        if (parts[i].empty()) return false;
        for (int v : parts[i]) {
            if (v < 0 || v >= g.n() || owner[v] >= 0) return false;
            owner[v] = i;
        }
    }
    if (std::count(owner.begin(), owner.end(), -1) != 0) return false;
    for (int i = 0; i < k; ++i) {
        Row own = to_row(g.n(), parts[i]);
        Row span = own | to_row(g.n(), parts[(i + k - 1) % k]) | to_row(g.n(), parts[(i + 1) % k]);
        std::vector<Row> closed;
        for (int u : parts[i]) {
            Row c = g.row(u);
            c.set(u);
            if (!own.is_subset_of(c) || !c.is_subset_of(span)) return false;
            closed.push_back(c);
        }
        std::sort(closed.begin(), closed.end(), [](const Row& x, const Row& y) { return x.count() > y.count(); });
        if (closed[0] != span) return false;
        for (std::size_t j = 1; j < closed.size(); ++j)
            if (!closed[j].is_subset_of(closed[j - 1])) return false;
    }
    return true;
}

RingGraph ring(const RingParams& p) {
    int k = static_cast<int>(p.sizes.size());
    require(k >= 4, "ring needs k >= 4");
    require(static_cast<int>(p.stairs.size()) == k, "ring: one staircase per part");
    for (int i = 0; i < k; ++i) {
        require(p.sizes[i] >= 1, "ring: parts must be nonempty");
    }
    for (int i = 0; i < k; ++i)
        check_staircase(p.stairs[i], p.sizes[i], p.sizes[(i + 1) % k], 1, "ring staircase " + std::to_string(i));
    GraphBuilder g(std::accumulate(p.sizes.begin(), p.sizes.end(), 0));
    int next = 0;
    RingGraph out;
    for (int i = 0; i < k; ++i) out.parts.push_back(block(next, p.sizes[i]));
    for (int i = 0; i < k; ++i) {
        g.add_clique(out.parts[i]);
        add_staircase(g, out.parts[i], out.parts[(i + 1) % k], p.stairs[i]);
    }
    out.graph = g.build();
    require(is_ring_partition(out.graph, out.parts), "ring: chain condition failed after construction");
    return out;
}

Generated crown(const CrownParams& p) {
    require(p.ring.sizes.size() == 5, "crown needs exactly five parts");
    require(p.istar >= 0 && p.istar < 5, "crown: istar out of range");
    int lo = (p.istar + 3) % 5;  // boundary X_{i*-2} -> X_{i*-1}
    int hi = (p.istar + 1) % 5;  // boundary X_{i*+1} -> X_{i*+2}
    for (int j : {lo, hi})
        require(p.ring.stairs.at(j) == full_staircase(p.ring.sizes[j], p.ring.sizes[(j + 1) % 5]),
                "crown: forced boundary " + std::to_string(j) + " must be complete");
    auto r = ring(p.ring);
    CrownCore core;
    for (int i = 0; i < 5; ++i) core.X[i] = r.parts[i];
    core.istar = p.istar;
    return {r.graph, Certificate{{}, core}};
}

RingGraph hyperhole(int k, const std::vector<int>& sizes) {
    require(static_cast<int>(sizes.size()) == k, "hyperhole: one size per part");
    RingParams p;
    p.sizes = sizes;
    for (int i = 0; i < k; ++i) {
        require(sizes[i] >= 1, "hyperhole: parts must be nonempty");
        p.stairs.push_back(full_staircase(sizes[i], sizes[(i + 1) % k]));
    }
    return ring(p);
}

Thickened thicken(const Graph& base, const std::vector<int>& mult) {
    require(static_cast<int>(mult.size()) == base.n(), "thicken: one multiplicity per base vertex");
    for (int m : mult) require(m >= 1, "thicken: multiplicities must be positive");
    Thickened out;
    int next = 0;
    for (int m : mult) out.classes.push_back(block(next, m));
    GraphBuilder g(next);
    for (const auto& c : out.classes) g.add_clique(c);
    for (auto [u, v] : base.edges()) g.join(out.classes[u], out.classes[v]);
    out.graph = g.build();
    return out;
}

Graph add_universal(const Graph& g, int m) {
    require(m >= 0, "add_universal: m must be non-negative");
    GraphBuilder b(g.n() + m);
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (int i = 0; i < m; ++i)
        for (int v = 0; v < g.n() + i; ++v) b.add_edge(g.n() + i, v);
    return b.build();
}

const std::vector<NamedGraph>& base_library() {
    static const std::vector<NamedGraph> lib = [] {
        std::vector<NamedGraph> out;
        // M0 vertex names: x0..x6 then the optional vertices below.
        const std::vector<std::pair<std::string, std::vector<int>>> extra = {
            {"y0", {0, 1, 4}}, {"y3", {3, 4, 0}}, {"z0", {0, 1, 2, 3, 4}}, {"z3", {3, 4, 5, 6, 0}}, {"z4", {4, 5, 6, 0, 1}}};
        for (int mask = 0; mask < 32; ++mask) {
            std::vector<int> kept;
            std::string name = "M0";
            for (int i = 0; i < 5; ++i) {
                if (mask & (1 << i))
                    name += "-" + extra[i].first;
                else
                    kept.push_back(i);
            }
            GraphBuilder b(7 + static_cast<int>(kept.size()));
            for (int i = 0; i < 7; ++i) b.add_edge(i, (i + 1) % 7);
            for (std::size_t j = 0; j < kept.size(); ++j) {
                for (int x : extra[kept[j]].second) b.add_edge(7 + static_cast<int>(j), x);
                for (std::size_t l = j + 1; l < kept.size(); ++l)
                    b.add_edge(7 + static_cast<int>(j), 7 + static_cast<int>(l));
            }
            out.push_back({name, b.build()});
        }
        auto m1 = [] {
            GraphBuilder b(9);  // x0..x6, y0 = 7, z2 = 8
            for (int i = 0; i < 7; ++i) b.add_edge(i, (i + 1) % 7);
            for (int x : {0, 1, 4}) b.add_edge(7, x);
            for (int x : {2, 3, 4, 5, 6}) b.add_edge(8, x);
            return b;
        };
        out.push_back({"M1", m1().build()});
        {
            GraphBuilder b(10);  // x0..x6, y0 = 7, z1 = 8, z2 = 9
            auto base = m1().build();
            for (auto [u, v] : base.edges()) b.add_edge(u == 8 ? 9 : u, v == 8 ? 9 : v);
            for (int x : {1, 2, 3, 4, 5}) b.add_edge(8, x);
            b.add_edge(8, 7).add_edge(8, 9);
            out.push_back({"M2", b.build()});
        }
        {
            GraphBuilder b(10);  // x0..x6, y0 = 7, z2 = 8, z3 = 9
            for (auto [u, v] : m1().build().edges()) b.add_edge(u, v);
            for (int x : {3, 4, 5, 6, 0}) b.add_edge(9, x);
            b.add_edge(9, 7).add_edge(9, 8);
            out.push_back({"M3", b.build()});
        }
        out.push_back({"T0", t0_graph()});
        out.push_back({"T1", t1_graph()});
        return out;
    }();
    return lib;
}

const NamedGraph* find_base(const std::string& name) {
    for (const auto& b : base_library())
        if (b.name == name) return &b;
    return nullptr;
}

int minimum_budget(const std::string& tag) {
    static const std::map<std::string, int> mins = {{"pentagon", 7}, {"villa", 7},     {"mansion", 8}, {"basket", 7},
                                                    {"crown", 5},    {"hyperhole", 5}, {"thicken", 7}};
    auto it = mins.find(tag);
    if (it == mins.end()) throw FamilyError("unknown family tag '" + tag + "'");
    return it->second;
}

Generated random_member(const std::string& tag, int budget, Rng& rng, int t_fixed) {
    int need = minimum_budget(tag);
    if (budget < need)
        throw FamilyError(tag + " needs a budget of at least " + std::to_string(need) + " vertices");
    if (t_fixed) {
        if (tag != "pentagon" && tag != "villa" && tag != "mansion")
            throw FamilyError("t applies only to pentagon, villa and mansion");
        int least = 2 * t_fixed + 1 + (tag == "mansion" ? 1 : 0);
        if (t_fixed < 3) throw FamilyError("t must be at least 3");
        if (budget < least)
            throw FamilyError("t = " + std::to_string(t_fixed) + " needs a budget of at least " + std::to_string(least));
    }

    if (tag == "pentagon") {
        int t = t_fixed ? t_fixed : uniform(rng, 3, std::min(8, (budget - 1) / 2));
        VillaParams p;
        p.t = t;
        p.b.assign(t, 1);
        p.c.assign(t, 1);
        p.chains.assign(t, Staircase{1});
        return villa(p);
    }
    if (tag == "villa" || tag == "mansion") {
        bool is_mansion = tag == "mansion";
        int reserve = is_mansion ? 1 : 0;
        int t = t_fixed ? t_fixed : uniform(rng, 3, std::max(3, std::min(6, (budget - 1 - reserve) / 2)));
        int parts = 2 * t + 1 + (is_mansion ? 3 : 0);
        std::vector<int> floor(parts, 1);
        if (is_mansion) floor[parts - 2] = floor[parts - 1] = 0;  // X, Y
        int base = std::accumulate(floor.begin(), floor.end(), 0);
        auto sizes = spread(rng, parts, uniform(rng, 0, budget - base), floor);
        VillaParams v;
        v.t = t;
        v.a = sizes[0];
        v.b.assign(sizes.begin() + 1, sizes.begin() + 1 + t);
        v.c.assign(sizes.begin() + 1 + t, sizes.begin() + 1 + 2 * t);
        int jstar = is_mansion ? uniform(rng, 0, t - 1) : -1;
        for (int i = 0; i < t; ++i)
            v.chains.push_back(i == jstar ? full_staircase(v.b[i], v.c[i]) : random_staircase(rng, v.b[i], v.c[i], 1));
        if (!is_mansion) return villa(v);
        MansionParams m;
        m.villa = v;
        m.f = sizes[2 * t + 1];
        m.x = sizes[2 * t + 2];
        m.y = sizes[2 * t + 3];
        m.jstar = jstar;
        return mansion(m);
    }
    if (tag == "basket") {
        std::vector<int> floor(8, 1);
        floor[7] = 0;
        auto sizes = spread(rng, 8, uniform(rng, 0, budget - 7), floor);
        BasketParams p;
        p.a = sizes[0];
        for (int i = 0; i < 3; ++i) {
            p.b[i] = sizes[1 + i];
            p.c[i] = sizes[4 + i];
        }
        p.f = sizes[7];
        p.istar = uniform(rng, 0, 2);
        p.jstar = uniform(rng, 0, 2);
        p.a_chain = random_staircase(rng, p.a, p.b[p.istar], 0);
        return basket(p);
    }
    if (tag == "crown" || tag == "hyperhole") {
        auto sizes = spread(rng, 5, uniform(rng, 0, budget - 5), std::vector<int>(5, 1));
        CrownParams p;
        p.ring.sizes = sizes;
        p.istar = tag == "crown" ? uniform(rng, 0, 4) : 0;
        int lo = (p.istar + 3) % 5, hi = (p.istar + 1) % 5;
        for (int i = 0; i < 5; ++i) {
            int full = sizes[(i + 1) % 5];
            bool forced = tag == "hyperhole" || i == lo || i == hi;
            p.ring.stairs.push_back(forced ? full_staircase(sizes[i], full) : random_staircase(rng, sizes[i], full, 1));
        }
        return crown(p);
    }
    // thicken
    std::vector<const NamedGraph*> fitting;
    for (const auto& b : base_library())
        if (b.graph.n() <= budget) fitting.push_back(&b);
    const NamedGraph* base = fitting[uniform(rng, 0, static_cast<int>(fitting.size()) - 1)];
    int n0 = base->graph.n();
    std::vector<int> mult(n0, 1);
    int extra = uniform(rng, 0, std::min(budget - n0, 2 * n0));
    for (int i = 0; i < extra; ++i) {
        int v = uniform(rng, 0, n0 - 1);
        if (mult[v] < 3) ++mult[v];
    }
    auto th = thicken(base->graph, mult);
    return {th.graph, Certificate{{}, ThickenedCore{base->name, th.classes}}};
}

RingGraph random_ring(int k, int budget, Rng& rng) {
    require(k >= 4, "ring needs k >= 4");
    require(budget >= k, "ring needs a budget of at least k vertices");
    auto sizes = spread(rng, k, uniform(rng, 0, budget - k), std::vector<int>(k, 1));
    RingParams p;
    p.sizes = sizes;
    for (int i = 0; i < k; ++i) p.stairs.push_back(random_staircase(rng, sizes[i], sizes[(i + 1) % k], 1));
    return ring(p);
}

}  // namespace pentaforge
