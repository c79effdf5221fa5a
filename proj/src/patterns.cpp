#include "bits.hpp"
#include "pentaforge/patterns.hpp"

#include <algorithm>

namespace pentaforge {

using detail::for_each_bit;

namespace {

Graph build_pattern(Pattern p) {
    switch (p) {
        case Pattern::FourK1:
            return GraphBuilder(4).build();
        case Pattern::TwoP3:
            return Graph::from_edge_list(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
        case Pattern::C4:
            return cycle_graph(4);
        case Pattern::C6:
            return cycle_graph(6);
        case Pattern::C7:
            return cycle_graph(7);
        case Pattern::T0:
            return t0_graph();
        case Pattern::T1:
            return t1_graph();
        case Pattern::Pentagon3:
            return pentagon_graph(3);
    }
    return {};
}

}  // namespace

std::string pattern_name(Pattern p) {
    switch (p) {
        case Pattern::FourK1: return "4K1";
        case Pattern::TwoP3: return "2P3";
        case Pattern::C4: return "C4";
        case Pattern::C6: return "C6";
        case Pattern::C7: return "C7";
        case Pattern::T0: return "T0";
        case Pattern::T1: return "T1";
        case Pattern::Pentagon3: return "3-pentagon";
    }
    return "?";
}

std::optional<Pattern> pattern_from_name(const std::string& name) {
    for (Pattern p : kAllPatterns)
        if (pattern_name(p) == name) return p;
    return std::nullopt;
}

const Graph& pattern_graph(Pattern p) {
    static const std::array<Graph, kPatternCount> graphs = [] {
        std::array<Graph, kPatternCount> out;
        for (Pattern q : kAllPatterns) out[static_cast<int>(q)] = build_pattern(q);
        return out;
    }();
    return graphs[static_cast<int>(p)];
}

Graph cycle_graph(int k) {
    GraphBuilder b(k);
    for (int i = 0; i < k; ++i) b.add_edge(i, (i + 1) % k);
    return b.build();
}

Graph pentagon_graph(int t) {
    GraphBuilder b(2 * t + 1);
    for (int i = 1; i <= t; ++i) {
        b.add_edge(0, i);
        b.add_edge(i, t + i);
        for (int j = i + 1; j <= t; ++j) b.add_edge(t + i, t + j);
    }
    return b.build();
}

Graph t0_graph() {
    enum { a1, b1, b1p, b2, b3, c1, c1p, c2, c3 };
    return Graph::from_edge_list(9, {{a1, b1}, {a1, b1p}, {a1, b2}, {a1, b3}, {b1, b1p}, {b1, c1}, {b1p, c1p},
                                     {c1, c2}, {c1, c3}, {c1p, c2}, {c1p, c3}, {c2, c3}, {b2, c2}, {b3, c3}});
}

Graph t1_graph() {
    GraphBuilder b(10);
    for (auto [u, v] : t0_graph().edges()) b.add_edge(u, v);
    for (int v : {0, 1, 3, 4, 5, 7, 8}) b.add_edge(9, v);
    return b.build();
}

bool verify_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
    if (static_cast<int>(e.size()) != pattern.n()) return false;
    for (int v : e)
        if (v < 0 || v >= host.n()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            if (e[i] == e[j]) return false;
            if (host.adjacent(e[i], e[j]) != pattern.adjacent(static_cast<int>(i), static_cast<int>(j))) return false;
        }
    return true;
}

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
    int k = pattern.n(), n = host.n();
    if (k == 0) return Embedding{};
    if (k > n) return std::nullopt;

    // Pattern order: each next vertex has the most already-placed neighbors.
    std::vector<int> order;
    Row placed(k);
    while (static_cast<int>(order.size()) < k) {
        int best = -1;
        std::size_t best_links = 0;
        for (int v = 0; v < k; ++v) {
            if (placed.test(v)) continue;
            std::size_t links = (pattern.row(v) & placed).count();
            if (best < 0 || links > best_links ||
                (links == best_links && pattern.degree(v) > pattern.degree(best))) {
                best = v;
                best_links = links;
            }
        }
        order.push_back(best);
        placed.set(best);
    }

    std::vector<Row> fits(k, Row(n));
    for (int p = 0; p < k; ++p)
        for (int v = 0; v < n; ++v)
            if (host.degree(v) >= pattern.degree(p) && n - 1 - host.degree(v) >= k - 1 - pattern.degree(p))
                fits[p].set(v);

    Embedding map(k, -1);
    Row used(n);
    auto extend = [&](auto&& self, int depth) -> bool {
        if (depth == k) return true;
        int p = order[depth];
        Row cand = fits[p] - used;
        for (int d = 0; d < depth && cand.any(); ++d) {
            int q = order[d];
            if (pattern.adjacent(p, q))
                cand &= host.row(map[q]);
            else
                cand -= host.row(map[q]);
        }
        for (auto v = cand.find_first(); v != Row::npos; v = cand.find_next(v)) {
            map[p] = static_cast<int>(v);
            used.set(v);
            if (self(self, depth + 1)) return true;
            used.reset(v);
        }
        map[p] = -1;
        return false;
    };
    if (!extend(extend, 0)) return std::nullopt;
    return map;
}

ForbiddenProfile forbidden_profile(const Graph& g) {
    ForbiddenProfile p;
    for (Pattern q : {Pattern::FourK1, Pattern::C4, Pattern::TwoP3, Pattern::C6, Pattern::C7, Pattern::Pentagon3,
                      Pattern::T0, Pattern::T1})
        p.witness[static_cast<int>(q)] = find_induced(g, pattern_graph(q));
    p.in_class = !p.has(Pattern::TwoP3) && !p.has(Pattern::C4) && !p.has(Pattern::C6);
    p.in_class_57 = p.in_class && !p.has(Pattern::C7) && !p.has(Pattern::T0);
    return p;
}

nlohmann::ordered_json profile_to_json(const ForbiddenProfile& p) {
    nlohmann::ordered_json j;
    for (Pattern q : kAllPatterns) {
        const auto& w = p.get(q);
        j[pattern_name(q)] = w ? nlohmann::ordered_json(*w) : nlohmann::ordered_json(nullptr);
    }
    j["in_class"] = p.in_class;
    j["in_class_57"] = p.in_class_57;
    return j;
}

std::optional<std::pair<Pattern, Embedding>> class_violation(const ForbiddenProfile& p) {
    for (Pattern q : {Pattern::C4, Pattern::TwoP3, Pattern::C6})
        if (p.has(q)) return std::make_pair(q, *p.get(q));
    return std::nullopt;
}

std::vector<std::vector<int>> holes(const Graph& g, int max_len) {
    std::vector<std::vector<int>> out;
    int n = g.n();
    std::vector<int> path;
    for (int s = 0; s < n; ++s) {
        Row allowed(n);
        for (int v = s + 1; v < n; ++v) allowed.set(v);
        path.assign(1, s);
        // blocked: closed neighborhoods of path vertices other than s and the last one
        auto extend = [&](auto&& self, const Row& blocked) -> void {
            int last = path.back();
            Row cand = g.row(last) & allowed;
            cand -= blocked;
            for_each_bit(cand, [&](int w) {
                if (std::find(path.begin(), path.end(), w) != path.end()) return;
                int len = static_cast<int>(path.size()) + 1;
                bool closes = path.size() >= 2 && g.adjacent(w, s);
                if (closes) {
                    if (len >= 4 && path[1] < w) {
                        auto cyc = path;
                        cyc.push_back(w);
                        out.push_back(std::move(cyc));
                    }
                    return;
                }
                if (len >= max_len) return;
                Row next = blocked;
                if (path.size() >= 2) {
                    next |= g.row(last);
                    next.set(last);
                }
                path.push_back(w);
                self(self, next);
                path.pop_back();
            });
        };
        extend(extend, Row(n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_chordal(const Graph& g) {
    VertexSet alive(g.n());
    for (int v = 0; v < g.n(); ++v) alive[v] = v;
    while (!alive.empty()) {
        Graph h = g.induced(alive);
        auto simp = simplicial_vertices(h);
        if (simp.empty()) return false;
        alive.erase(alive.begin() + simp[0]);
    }
    return true;
}

std::optional<PentagonWitness> largest_pentagon_t(const Graph& g) {
    int n = g.n();
    PentagonWitness best;
    best.t = 2;
    std::vector<int> bs, cs;
    for (int a = 0; a < n; ++a) {
        Row far = g.full_set() - g.row(a);
        far.reset(a);
        auto grow = [&](auto&& self, const Row& cand_b, const Row& cand_c) -> void {
            int t = static_cast<int>(bs.size());
            if (t > best.t) {
                best.t = t;
                best.embedding.assign(1, a);
                best.embedding.insert(best.embedding.end(), bs.begin(), bs.end());
                best.embedding.insert(best.embedding.end(), cs.begin(), cs.end());
            }
            if (t + static_cast<int>(std::min(cand_b.count(), cand_c.count())) <= best.t) return;
            for_each_bit(cand_b, [&](int b) {
                Row cc = cand_c & g.row(b);
                for_each_bit(cc, [&](int c) {
                    Row nb = cand_b;
                    for (auto i = nb.find_first(); i != Row::npos && static_cast<int>(i) <= b; i = nb.find_next(i))
                        nb.reset(i);
                    nb -= g.row(b);
                    nb -= g.row(c);
                    Row nc = cand_c & g.row(c);
                    nc -= g.row(b);
                    bs.push_back(b);
                    cs.push_back(c);
                    self(self, nb, nc);
                    bs.pop_back();
                    cs.pop_back();
                });
            });
        };
        grow(grow, g.row(a), far);
    }
    if (best.t < 3) return std::nullopt;
    return best;
}

bool t0_precheck(const Graph& g) {
    VertexSet s;
    for (int v = 0; v < g.n(); ++v) {
        auto nb = g.neighbors(v);
        bool found = false;
        for (std::size_t i = 0; i < nb.size() && !found; ++i)
            for (std::size_t j = i + 1; j < nb.size() && !found; ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < nb.size(); ++k)
                    if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) {
                        found = true;
                        break;
                    }
            }
        if (found) s.push_back(v);
    }
    return is_clique(g, s);
}

}  // namespace pentaforge
