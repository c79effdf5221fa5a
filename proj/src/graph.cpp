#include "bits.hpp"
#include "pentaforge/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pentaforge {

using detail::for_each_bit;

namespace {

// Vertices reachable from `start` inside `allowed` (start is included).
Row reach(const Graph& g, int start, const Row& allowed) {
    Row seen(g.n());
    std::vector<int> stack{start};
    seen.set(start);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        Row next = g.row(v) & allowed;
        next -= seen;
        for_each_bit(next, [&](int u) {
            seen.set(u);
            stack.push_back(u);
        });
    }
    return seen;
}

std::vector<Row> components_within(const Graph& g, Row rest) {
    std::vector<Row> out;
    while (rest.any()) {
        Row c = reach(g, static_cast<int>(rest.find_first()), rest);
        rest -= c;
        out.push_back(std::move(c));
    }
    return out;
}

Row open_neighborhood(const Graph& g, const Row& s) {
    Row r(g.n());
    for_each_bit(s, [&](int v) { r |= g.row(v); });
    r -= s;
    return r;
}

bool row_is_clique(const Graph& g, const Row& s) {
    bool ok = true;
    for_each_bit(s, [&](int v) {
        Row rest = s;
        rest.reset(v);
        if (!rest.is_subset_of(g.row(v))) ok = false;
    });
    return ok;
}

bool separates(const Graph& g, const Row& s) {
    Row rest = g.full_set() - s;
    if (rest.none()) return false;
    return reach(g, static_cast<int>(rest.find_first()), rest) != rest;
}

}  // namespace

VertexSet to_vertices(const Row& r) {
    VertexSet out;
    out.reserve(r.count());
    for_each_bit(r, [&](int v) { out.push_back(v); });
    return out;
}

Row to_row(int n, const VertexSet& vs) {
    Row r(n);
    for (int v : vs) r.set(v);
    return r;
}

GraphBuilder::GraphBuilder(int n) {
    if (n < 0) throw GraphError("negative vertex count");
    rows_.assign(n, Row(n));
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
    int n = this->n();
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                         std::to_string(n));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    rows_[u].set(v);
    rows_[v].set(u);
    return *this;
}

GraphBuilder& GraphBuilder::add_clique(const VertexSet& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) add_edge(vs[i], vs[j]);
    return *this;
}

GraphBuilder& GraphBuilder::join(const VertexSet& xs, const VertexSet& ys) {
    for (int x : xs)
        for (int y : ys) add_edge(x, y);
    return *this;
}

Graph GraphBuilder::build() const {
    Graph g;
    g.rows_ = rows_;
    return g;
}

Graph Graph::from_edge_list(int n, const std::vector<Edge>& edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

VertexSet Graph::neighbors(int v) const { return to_vertices(rows_[v]); }

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n(); ++u)
        for (auto v = rows_[u].find_next(u); v != Row::npos; v = rows_[u].find_next(v))
            out.emplace_back(u, static_cast<int>(v));
    return out;
}

std::size_t Graph::edge_count() const {
    std::size_t s = 0;
    for (const auto& r : rows_) s += r.count();
    return s / 2;
}

Graph Graph::induced(const VertexSet& vs) const {
    GraphBuilder b(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (adjacent(vs[i], vs[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    return b.build();
}

Graph complement(const Graph& g) {
    GraphBuilder b(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    return b.build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    GraphBuilder gb(a.n() + b.n());
    for (auto [u, v] : a.edges()) gb.add_edge(u, v);
    for (auto [u, v] : b.edges()) gb.add_edge(u + a.n(), v + a.n());
    return gb.build();
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    for (const auto& c : components_within(g, g.full_set())) out.push_back(to_vertices(c));
    return out;
}

std::vector<VertexSet> anticomponents(const Graph& g) { return components(complement(g)); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }
bool is_anticonnected(const Graph& g) { return anticomponents(g).size() <= 1; }

bool is_clique(const Graph& g, const VertexSet& vs) { return row_is_clique(g, to_row(g.n(), vs)); }

bool is_stable(const Graph& g, const VertexSet& vs) {
    Row s = to_row(g.n(), vs);
    for (int v : vs)
        if (g.row(v).intersects(s)) return false;
    return true;
}

bool is_complete_to(const Graph& g, const VertexSet& xs, const VertexSet& ys) {
    Row y = to_row(g.n(), ys);
    for (int x : xs)
        if (!y.is_subset_of(g.row(x))) return false;
    return true;
}

bool is_anticomplete_to(const Graph& g, const VertexSet& xs, const VertexSet& ys) {
    Row y = to_row(g.n(), ys);
    for (int x : xs)
        if (g.row(x).intersects(y)) return false;
    return true;
}

bool is_simplicial(const Graph& g, int v) { return row_is_clique(g, g.row(v)); }

VertexSet simplicial_vertices(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.n(); ++v)
        if (is_simplicial(g, v)) out.push_back(v);
    return out;
}

VertexSet universal_vertices(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == g.n() - 1) out.push_back(v);
    return out;
}

std::vector<VertexSet> true_twin_classes(const Graph& g) {
    std::map<Row, VertexSet> by_closed;
    std::vector<Row> order;
    for (int v = 0; v < g.n(); ++v) {
        Row closed = g.row(v);
        closed.set(v);
        auto [it, fresh] = by_closed.try_emplace(closed);
        if (fresh) order.push_back(closed);
        it->second.push_back(v);
    }
    std::vector<VertexSet> out;
    for (const auto& key : order) out.push_back(by_closed[key]);
    return out;
}

TwinQuotient contract_twins(const Graph& g) {
    TwinQuotient q;
    q.classes = true_twin_classes(g);
    GraphBuilder b(static_cast<int>(q.classes.size()));
    for (std::size_t i = 0; i < q.classes.size(); ++i)
        for (std::size_t j = i + 1; j < q.classes.size(); ++j)
            if (g.adjacent(q.classes[i][0], q.classes[j][0])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    q.quotient = b.build();
    return q;
}

std::optional<VertexSet> clique_cutset(const Graph& g) {
    int n = g.n();
    if (n == 0) return std::nullopt;
    if (!is_connected(g)) return VertexSet{};

    // MCS-M: produces a minimal elimination ordering and the fill.
    std::vector<int> weight(n, 0), number(n, -1);
    std::vector<Row> h(n);
    for (int v = 0; v < n; ++v) h[v] = g.row(v);
    Row unnumbered = g.full_set();
    for (int i = n - 1; i >= 0; --i) {
        int v = -1;
        for_each_bit(unnumbered, [&](int u) {
            if (v < 0 || weight[u] > weight[v]) v = u;
        });
        unnumbered.reset(v);
        std::set<int> levels;
        for_each_bit(unnumbered, [&](int u) { levels.insert(weight[u]); });
        std::vector<int> bumped;
        for (int k : levels) {
            Row inner(n);
            for_each_bit(unnumbered, [&](int u) {
                if (weight[u] < k) inner.set(u);
            });
            Row allowed = inner;
            allowed.set(v);
            Row seen = reach(g, v, allowed);
            Row touch = open_neighborhood(g, seen);
            for_each_bit(unnumbered, [&](int u) {
                if (weight[u] == k && touch.test(u)) bumped.push_back(u);
            });
        }
        for (int u : bumped) {
            ++weight[u];
            h[u].set(v);
            h[v].set(u);
        }
        number[v] = i;
    }

    std::vector<int> by_number(n);
    for (int v = 0; v < n; ++v) by_number[number[v]] = v;
    std::set<Row> tried;
    for (int i = 0; i < n; ++i) {
        int v = by_number[i];
        Row madj(n);
        for_each_bit(h[v], [&](int u) {
            if (number[u] > i) madj.set(u);
        });
        if (madj.none() || !tried.insert(madj).second) continue;
        if (row_is_clique(g, madj) && separates(g, madj)) return to_vertices(madj);
    }
    return std::nullopt;
}

std::vector<VertexSet> minimal_separators(const Graph& g) {
    int n = g.n();
    std::set<Row> found;
    std::vector<Row> queue;
    auto add_from = [&](const Row& removed) {
        for (const auto& c : components_within(g, g.full_set() - removed)) {
            Row s = open_neighborhood(g, c);
            if (s.none()) continue;
            // s separates c from the rest iff some vertex lies outside c ∪ s
            Row covered = c | s;
            if (covered.count() == static_cast<std::size_t>(n)) continue;
            if (found.insert(s).second) queue.push_back(s);
        }
    };
    for (int v = 0; v < n; ++v) {
        Row closed = g.row(v);
        closed.set(v);
        add_from(closed);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Row s = queue[qi];
        for_each_bit(s, [&](int x) { add_from(s | g.row(x)); });
    }
    std::vector<VertexSet> out;
    for (const auto& s : found) out.push_back(to_vertices(s));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<VertexSet> clique_cutset_exhaustive(const Graph& g) {
    if (g.n() == 0) return std::nullopt;
    if (!is_connected(g)) return VertexSet{};
    for (const auto& s : minimal_separators(g))
        if (is_clique(g, s)) return s;
    return std::nullopt;
}

std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h) {
    int n = g.n();
    if (n != h.n() || g.edge_count() != h.edge_count()) return std::nullopt;
    auto signature = [](const Graph& x, int v) {
        std::vector<int> ds;
        for (int u : x.neighbors(v)) ds.push_back(x.degree(u));
        std::sort(ds.begin(), ds.end());
        ds.insert(ds.begin(), x.degree(v));
        return ds;
    };
    std::vector<std::vector<int>> sg(n), sh(n);
    for (int v = 0; v < n; ++v) {
        sg[v] = signature(g, v);
        sh[v] = signature(h, v);
    }
    {
        auto a = sg, b = sh;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    // Order g's vertices so each one has as many earlier neighbors as possible.
    std::vector<int> order;
    Row placed(n);
    while (static_cast<int>(order.size()) < n) {
        int best = -1;
        std::size_t best_links = 0;
        for (int v = 0; v < n; ++v) {
            if (placed.test(v)) continue;
            std::size_t links = (g.row(v) & placed).count();
            if (best < 0 || links > best_links || (links == best_links && g.degree(v) > g.degree(best))) {
                best = v;
                best_links = links;
            }
        }
        order.push_back(best);
        placed.set(best);
    }

    std::vector<int> map(n, -1);
    Row used(n);
    auto extend = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == order.size()) return true;
        int v = order[depth];
        for (int w = 0; w < n; ++w) {
            if (used.test(w) || sg[v] != sh[w]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                int u = order[k];
                if (g.adjacent(u, v) != h.adjacent(map[u], w)) ok = false;
            }
            if (!ok) continue;
            map[v] = w;
            used.set(w);
            if (self(self, depth + 1)) return true;
            used.reset(w);
            map[v] = -1;
        }
        return false;
    };
    if (!extend(extend, 0)) return std::nullopt;
    return map;
}

VertexSet maximum_clique(const Graph& g) {
    VertexSet best, cur;
    auto expand = [&](auto&& self, Row cand) -> void {
        if (cand.none()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        if (cur.size() + cand.count() <= best.size()) return;
        // pivot on the candidate with most neighbors inside cand
        int pivot = -1;
        std::size_t pc = 0;
        for_each_bit(cand, [&](int u) {
            std::size_t c = (g.row(u) & cand).count();
            if (pivot < 0 || c > pc) {
                pivot = u;
                pc = c;
            }
        });
        Row branch = cand - g.row(pivot);
        for_each_bit(branch, [&](int v) {
            if (!cand.test(v)) return;
            cur.push_back(v);
            self(self, cand & g.row(v));
            cur.pop_back();
            cand.reset(v);
        });
    };
    expand(expand, g.full_set());
    std::sort(best.begin(), best.end());
    return best;
}

int clique_number(const Graph& g) { return static_cast<int>(maximum_clique(g).size()); }

}  // namespace pentaforge
