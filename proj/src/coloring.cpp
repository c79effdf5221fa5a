#include "pentaforge/coloring.hpp"

#include "pentaforge/cliquewidth.hpp"
#include "pentaforge/recognizer.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>

namespace pentaforge {

NotInClassError::NotInClassError(Pattern p, Embedding w)
    : std::runtime_error("graph contains an induced " + pattern_name(p)), pattern(p), witness(std::move(w)) {}

bool is_proper_coloring(const Graph& g, const std::vector<int>& assignment, int k) {
    if (static_cast<int>(assignment.size()) != g.n()) return false;
    for (int c : assignment)
        if (c < 1 || c > k) return false;
    for (auto [u, v] : g.edges())
        if (assignment[u] == assignment[v]) return false;
    return true;
}

std::vector<int> greedy_coloring(const Graph& g) {
    int n = g.n();
    std::vector<int> color(n, 0);
    std::vector<std::vector<char>> seen(n, std::vector<char>(n + 2, 0));
    std::vector<int> sat(n, 0);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            if (pick < 0 || sat[v] > sat[pick] || (sat[v] == sat[pick] && g.degree(v) > g.degree(pick))) pick = v;
        }
        int c = 1;
        while (seen[pick][c]) ++c;
        color[pick] = c;
        for (int u : g.neighbors(pick))
            if (!seen[u][c]) seen[u][c] = 1, ++sat[u];
    }
    return color;
}

namespace {

struct ExactSearch {
    const Graph& g;
    int k;
    std::vector<int> color;
    std::vector<std::vector<int>> forbid;  // forbid[v][c]: colored neighbors with color c

    bool run(int colored, int used) {
        int n = g.n();
        if (colored == n) return true;
        int pick = -1, best_sat = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            int s = 0;
            for (int c = 1; c <= k; ++c) s += forbid[v][c] > 0;
            if (s > best_sat || (s == best_sat && g.degree(v) > g.degree(pick))) pick = v, best_sat = s;
        }
        if (best_sat == k) return false;
        int top = std::min(k, used + 1);
        for (int c = 1; c <= top; ++c) {
            if (forbid[pick][c]) continue;
            color[pick] = c;
            for (int u : g.neighbors(pick)) ++forbid[u][c];
            if (run(colored + 1, std::max(used, c))) return true;
            for (int u : g.neighbors(pick)) --forbid[u][c];
            color[pick] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> k_coloring_exact(const Graph& g, int k, int max_n) {
    if (g.n() > max_n)
        throw GuardExceeded("exact coloring limited to " + std::to_string(max_n) + " vertices, got " +
                            std::to_string(g.n()));
    if (g.n() == 0) return std::vector<int>{};
    if (k < 1) return std::nullopt;
    ExactSearch s{g, k, std::vector<int>(g.n(), 0), std::vector<std::vector<int>>(g.n(), std::vector<int>(k + 1, 0))};
    if (!s.run(0, 0)) return std::nullopt;
    return s.color;
}

ColoringResult chromatic_exact(const Graph& g, int max_n) {
    if (g.n() > max_n)
        throw GuardExceeded("exact coloring limited to " + std::to_string(max_n) + " vertices, got " +
                            std::to_string(g.n()));
    if (g.n() == 0) return {0, {}};
    auto greedy = greedy_coloring(g);
    int upper = *std::max_element(greedy.begin(), greedy.end());
    for (int k = clique_number(g); k < upper; ++k)
        if (auto c = k_coloring_exact(g, k, max_n)) return {k, *c};
    return {upper, greedy};
}

PeelTrace peel_simplicial(const Graph& g) {
    PeelTrace out;
    Row alive = g.full_set();
    auto simplicial_in = [&](int v) {
        Row nb = g.row(v) & alive;
        for (auto u = nb.find_first(); u != Row::npos; u = nb.find_next(u)) {
            Row closed = g.row(static_cast<int>(u));
            closed.set(u);
            if (!nb.is_subset_of(closed)) return false;
        }
        return true;
    };
    for (bool found = true; found;) {
        found = false;
        for (auto v = alive.find_first(); v != Row::npos; v = alive.find_next(v)) {
            int x = static_cast<int>(v);
            if (simplicial_in(x)) {
                out.removed.emplace_back(x, static_cast<int>((g.row(x) & alive).count()));
                alive.reset(v);
                found = true;
                break;
            }
        }
    }
    out.core = to_vertices(alive);
    return out;
}

namespace {

using Mask = std::uint16_t;
using State = std::vector<Mask>;  // one mask per color, sorted

struct StateHash {
    std::size_t operator()(const State& s) const {
        std::size_t h = s.size();
        for (Mask m : s) h = h * 1000003u ^ m;
        return h;
    }
};

struct Flat {
    KOp op;
    int a = 0, b = 0;  // compressed labels
    int left = -1, right = -1;
    Mask live = 0;
    int vertex = -1;  // intro order index
};

struct NodeStates {
    std::vector<State> states;
    std::vector<std::pair<int, int>> origin;
};

class CwdColoring {
public:
    CwdColoring(const KExpr& e, int k, std::size_t limit) : k_(k), limit_(limit) {
        std::map<int, int> ids;
        collect(e, ids);
        if (ids.size() > 16) throw GuardExceeded("coloring DP supports at most 16 labels");
        int next = 0;
        for (auto& kv : ids) kv.second = next++;
        root_ = flatten(e, ids);
        assign_live(root_, 0);
    }

    std::optional<std::vector<int>> solve() {
        if (k_ < 1) return std::nullopt;
        states_.resize(nodes_.size());
        for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) compute(i);
        if (states_[root_].states.empty()) return std::nullopt;
        std::vector<int> color(vertices_, 1);
        State target = states_[root_].states.front();
        replay(root_, 0, target, color);
        return color;
    }

private:
    int k_;
    std::size_t limit_;
    std::vector<Flat> nodes_;  // children precede parents
    std::vector<NodeStates> states_;
    int root_ = -1;
    int vertices_ = 0;

    static void collect(const KExpr& e, std::map<int, int>& ids) {
        if (e->op != KOp::Union) ids.emplace(e->a, 0);
        if (e->op == KOp::Join || e->op == KOp::Rename) ids.emplace(e->b, 0);
        if (e->left) collect(e->left, ids);
        if (e->right) collect(e->right, ids);
    }

    int flatten(const KExpr& e, const std::map<int, int>& ids) {
        Flat f{e->op};
        if (e->op != KOp::Union) f.a = ids.at(e->a);
        if (e->op == KOp::Join || e->op == KOp::Rename) f.b = ids.at(e->b);
        if (e->op == KOp::Intro) f.vertex = vertices_++;
        if (e->left) f.left = flatten(e->left, ids);
        if (e->right) f.right = flatten(e->right, ids);
        nodes_.push_back(f);
        return static_cast<int>(nodes_.size()) - 1;
    }

    void assign_live(int root, Mask live) {
        std::vector<std::pair<int, Mask>> stack{{root, live}};
        while (!stack.empty()) {
            auto [i, l] = stack.back();
            stack.pop_back();
            Flat& f = nodes_[i];
            f.live = l;
            switch (f.op) {
                case KOp::Intro:
                    break;
                case KOp::Union:
                    stack.emplace_back(f.left, l);
                    stack.emplace_back(f.right, l);
                    break;
                case KOp::Join:
                    stack.emplace_back(f.left, static_cast<Mask>(l | 1u << f.a | 1u << f.b));
                    break;
                case KOp::Rename: {
                    Mask c = static_cast<Mask>(l & ~(1u << f.a));
                    if (l >> f.b & 1u) c |= static_cast<Mask>(1u << f.a);
                    stack.emplace_back(f.left, c);
                    break;
                }
            }
        }
    }

    // Image of a child mask at node i (join, rename, or union restriction).
    Mask lift(const Flat& f, Mask m) const {
        if (f.op == KOp::Rename && (m >> f.a & 1u)) m = static_cast<Mask>((m & ~(1u << f.a)) | 1u << f.b);
        return static_cast<Mask>(m & f.live);
    }

    void add(std::unordered_map<State, int, StateHash>& index, NodeStates& ns, State s, std::pair<int, int> from) {
        std::sort(s.begin(), s.end());
        if (index.emplace(s, static_cast<int>(ns.states.size())).second) {
            ns.states.push_back(std::move(s));
            ns.origin.push_back(from);
            if (ns.states.size() > limit_) throw GuardExceeded("coloring DP state limit exceeded");
        }
    }

    void compute(int i) {
        const Flat& f = nodes_[i];
        NodeStates& ns = states_[i];
        std::unordered_map<State, int, StateHash> index;
        switch (f.op) {
            case KOp::Intro: {
                State s(k_, 0);
                s[k_ - 1] = static_cast<Mask>((1u << f.a) & f.live);
                add(index, ns, s, {-1, -1});
                break;
            }
            case KOp::Join: {
                const auto& child = states_[f.left].states;
                for (int x = 0; x < static_cast<int>(child.size()); ++x) {
                    bool ok = std::none_of(child[x].begin(), child[x].end(),
                                           [&](Mask m) { return (m >> f.a & 1u) && (m >> f.b & 1u); });
                    if (!ok) continue;
                    State s = child[x];
                    for (Mask& m : s) m = lift(f, m);
                    add(index, ns, s, {x, -1});
                }
                break;
            }
            case KOp::Rename: {
                const auto& child = states_[f.left].states;
                for (int x = 0; x < static_cast<int>(child.size()); ++x) {
                    State s = child[x];
                    for (Mask& m : s) m = lift(f, m);
                    add(index, ns, s, {x, -1});
                }
                break;
            }
            case KOp::Union: {
                const auto& L = states_[f.left].states;
                const auto& R = states_[f.right].states;
                for (int x = 0; x < static_cast<int>(L.size()); ++x)
                    for (int y = 0; y < static_cast<int>(R.size()); ++y) {
                        std::vector<char> used(k_, 0);
                        State cur(k_);
                        // L[x] sorted: equal left masks take nondecreasing right indices.
                        std::function<void(int, int)> rec = [&](int p, int min_q) {
                            if (p == k_) {
                                add(index, ns, cur, {x, y});
                                return;
                            }
                            int start = (p > 0 && L[x][p] == L[x][p - 1]) ? min_q : 0;
                            Mask prev_r = 0;
                            bool have_prev = false;
                            for (int q = start; q < k_; ++q) {
                                if (used[q]) continue;
                                if (have_prev && R[y][q] == prev_r) continue;
                                have_prev = true;
                                prev_r = R[y][q];
                                used[q] = 1;
                                cur[p] = static_cast<Mask>((L[x][p] | R[y][q]) & f.live);
                                rec(p + 1, q + 1);
                                used[q] = 0;
                            }
                        };
                        rec(0, 0);
                    }
                break;
            }
        }
    }

    // target: color-indexed masks at node i matching states_[i].states[idx] as a multiset.
    void replay(int i, int idx, const State& target, std::vector<int>& color) {
        const Flat& f = nodes_[i];
        const auto& from = states_[i].origin[idx];
        switch (f.op) {
            case KOp::Intro: {
                int c = 0;
                for (int x = 0; x < k_; ++x)
                    if (target[x]) c = x;
                color[f.vertex] = c + 1;
                return;
            }
            case KOp::Join:
            case KOp::Rename: {
                const State& child = states_[f.left].states[from.first];
                State t(k_);
                std::vector<char> used(k_, 0);
                for (int c = 0; c < k_; ++c)
                    for (int x = 0; x < k_; ++x)
                        if (!used[x] && lift(f, child[x]) == target[c]) {
                            used[x] = 1;
                            t[c] = child[x];
                            break;
                        }
                replay(f.left, from.first, t, color);
                return;
            }
            case KOp::Union: {
                const State& L = states_[f.left].states[from.first];
                const State& R = states_[f.right].states[from.second];
                State tl(k_), tr(k_);
                std::vector<char> ul(k_, 0), ur(k_, 0);
                std::function<bool(int)> rec = [&](int c) {
                    if (c == k_) return true;
                    for (int x = 0; x < k_; ++x) {
                        if (ul[x]) continue;
                        for (int y = 0; y < k_; ++y) {
                            if (ur[y] || static_cast<Mask>((L[x] | R[y]) & f.live) != target[c]) continue;
                            ul[x] = ur[y] = 1;
                            tl[c] = L[x];
                            tr[c] = R[y];
                            if (rec(c + 1)) return true;
                            ul[x] = ur[y] = 0;
                        }
                    }
                    return false;
                };
                if (!rec(0)) throw std::logic_error("coloring replay lost its union matching");
                replay(f.left, from.first, tl, color);
                replay(f.right, from.second, tr, color);
                return;
            }
        }
    }
};

}  // namespace

std::optional<std::vector<int>> k_coloring_cwd(const KExpr& e, int k, std::size_t state_limit) {
    if (!e) throw KExprError("empty expression");
    return CwdColoring(e, k, state_limit).solve();
}

bool k_colorable_cwd(const KExpr& e, int k, std::size_t state_limit) {
    return k_coloring_cwd(e, k, state_limit).has_value();
}

namespace {

// Coloring of an in-class graph without simplicial vertices, colors 1..chi.
ColoringResult color_core(const Graph& h) {
    auto outcome = classify(h);
    const auto* in = std::get_if<InClassNoSimplicial>(&outcome);
    if (!in) throw InternalContradiction("peeled core does not classify as a structured graph");
    const Certificate& cert = in->cert;
    VertexSet inner = core_vertices(cert.core);
    std::sort(inner.begin(), inner.end());
    std::vector<int> color(h.n(), 0);
    int chi_inner = 0;
    if (std::holds_alternative<CompleteCore>(cert.core)) {
        for (int v : inner) color[v] = ++chi_inner;
    } else {
        Graph q = h.induced(inner);
        auto greedy = greedy_coloring(q);
        int upper = *std::max_element(greedy.begin(), greedy.end());
        std::vector<int> local;
        // Expression over the host ids of h; eval order maps back through names.
        KExpr e = expr_core(h, cert.core);
        auto lg = eval(e);
        int found = upper;
        for (int k = clique_number(q); k < upper; ++k) {
            if (auto c = k_coloring_cwd(e, k)) {
                found = k;
                for (std::size_t x = 0; x < c->size(); ++x) color[std::stoi(lg.names[x])] = (*c)[x];
                break;
            }
        }
        if (found == upper)
            for (std::size_t x = 0; x < inner.size(); ++x) color[inner[x]] = greedy[x];
        chi_inner = found;
    }
    int next = chi_inner;
    for (int u : cert.universals) color[u] = ++next;
    return {next, color};
}

}  // namespace

ColoringResult chromatic_structured(const Graph& g) {
    auto profile = forbidden_profile(g);
    if (auto bad = class_violation(profile)) throw NotInClassError(bad->first, bad->second);
    if (g.n() == 0) return {0, {}};
    PeelTrace trace = peel_simplicial(g);
    int chi = 0;
    for (auto [v, d] : trace.removed) chi = std::max(chi, d + 1);
    std::vector<int> color(g.n(), 0);
    if (!trace.core.empty()) {
        Graph h = g.induced(trace.core);
        auto core = color_core(h);
        chi = std::max(chi, core.chi);
        for (std::size_t x = 0; x < trace.core.size(); ++x) color[trace.core[x]] = core.assignment[x];
    }
    for (auto it = trace.removed.rbegin(); it != trace.removed.rend(); ++it) {
        int v = it->first;
        std::vector<char> taken(chi + 2, 0);
        for (int u : g.neighbors(v))
            if (color[u]) taken[color[u]] = 1;
        int c = 1;
        while (taken[c]) ++c;
        if (c > chi) throw InternalContradiction("peel reassembly exceeded the chromatic bound");
        color[v] = c;
    }
    return {chi, color};
}

nlohmann::ordered_json coloring_to_json(const ColoringResult& r) {
    nlohmann::ordered_json assignment = nlohmann::ordered_json::object();
    for (std::size_t v = 0; v < r.assignment.size(); ++v) assignment[std::to_string(v)] = r.assignment[v];
    return {{"chi", r.chi}, {"assignment", assignment}};
}

}  // namespace pentaforge
