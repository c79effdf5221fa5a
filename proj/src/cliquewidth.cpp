#include "pentaforge/cliquewidth.hpp"

#include "pentaforge/families.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <set>
#include <unordered_set>

namespace pentaforge {

namespace {

std::string name_of(int v) { return std::to_string(v); }

KExpr unite(KExpr acc, KExpr x) { return acc ? k_union(std::move(acc), std::move(x)) : std::move(x); }

VertexSet concat(std::initializer_list<const VertexSet*> parts) {
    VertexSet out;
    for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
}

int count_into(const Graph& g, int v, const Row& target) { return static_cast<int>((g.row(v) & target).count()); }

// Bijection on labels 1..limit extending `wanted`.
std::map<int, int> extend_perm(const std::map<int, int>& wanted, int limit) {
    std::map<int, int> out = wanted;
    std::set<int> used_targets;
    for (auto [a, b] : wanted) used_targets.insert(b), limit = std::max({limit, a, b});
    int next = 1;
    for (int a = 1; a <= limit; ++a) {
        if (out.count(a)) continue;
        while (used_targets.count(next)) ++next;
        out[a] = next;
        used_targets.insert(next);
    }
    return out;
}

KExpr permute(const KExpr& e, const std::map<int, int>& wanted) {
    int top = 0;
    for (int l : root_labels(e)) top = std::max(top, l);
    std::set<int> all;
    auto rec = [&](auto&& self, const KExpr& x) -> void {
        if (!x) return;
        all.insert(x->a);
        if (x->op != KOp::Intro) all.insert(x->b);
        self(self, x->left);
        self(self, x->right);
    };
    rec(rec, e);
    all.erase(0);
    if (!all.empty()) top = std::max(top, *all.rbegin());
    auto perm = extend_perm(wanted, top);
    for (auto it = perm.begin(); it != perm.end();) it = it->first == it->second ? perm.erase(it) : std::next(it);
    return perm.empty() ? e : relabel_labels(e, perm);
}

// One spike pair (B, C) with B labeled 1 and C labeled 2.
KExpr spike_pair(const Graph& g, VertexSet B, const VertexSet& C) {
    Row crow = to_row(g.n(), C);
    if (B.empty()) {
        std::vector<std::pair<int, int>> lab;
        for (int c : C) lab.emplace_back(c, 2);
        return expr_complete(lab);
    }
    std::stable_sort(B.begin(), B.end(),
                     [&](int x, int y) { return count_into(g, x, crow) > count_into(g, y, crow); });
    int b1 = B.front();
    VertexSet B1(B.begin() + 1, B.end());
    Row nb1 = g.row(b1) & crow;
    Row nB1 = g.empty_set();
    for (int b : B1) nB1 |= g.row(b) & crow;
    VertexSet C2, C1, C0;
    for (int c : C) {
        if (nB1.test(c)) C2.push_back(c);
        else if (nb1.test(c)) C1.push_back(c);
        else C0.push_back(c);
    }
    KExpr e;
    if (B1.empty()) {
        std::vector<std::pair<int, int>> lab;
        for (int c : C1) lab.emplace_back(c, 2);
        for (int c : C0) lab.emplace_back(c, 3);
        if (!lab.empty()) e = expr_complete(lab);
        e = unite(e, k_intro(1, name_of(b1)));
        e = k_join(1, 2, e);
        e = k_rename(3, 2, e);
        return e;
    }
    if (C2.empty()) {
        std::vector<std::pair<int, int>> lab;
        for (int b : B1) lab.emplace_back(b, 1);
        e = expr_complete(lab);
    } else {
        e = spike_pair(g, B1, C2);
    }
    std::vector<std::pair<int, int>> top{{b1, 3}};
    for (int c : C1) top.emplace_back(c, 4);
    e = k_union(e, expr_complete(top));
    e = k_join(3, 1, e);
    e = k_join(3, 2, e);
    e = k_join(4, 2, e);
    e = k_rename(3, 1, e);
    e = k_rename(4, 2, e);
    if (!C0.empty()) {
        std::vector<std::pair<int, int>> rest;
        for (int c : C0) rest.emplace_back(c, 3);
        e = k_union(e, expr_complete(rest));
        e = k_join(3, 2, e);
        e = k_rename(3, 2, e);
    }
    return e;
}

// Spike with B labeled 1 and C labeled 2.
KExpr spike_12(const Graph& g, const SpikePartition& p) {
    KExpr e;
    for (std::size_t i = 0; i < p.B.size(); ++i) {
        if (p.B[i].empty() && p.C[i].empty()) continue;
        KExpr next = spike_pair(g, p.B[i], p.C[i]);
        if (!e) {
            e = next;
            continue;
        }
        next = relabel_labels(next, {{2, 3}, {3, 2}});
        e = k_union(e, next);
        e = k_join(2, 3, e);
        e = k_rename(3, 2, e);
    }
    return e;
}

std::vector<std::pair<int, int>> all_labeled(const VertexSet& vs, int label) {
    std::vector<std::pair<int, int>> out;
    for (int v : vs) out.emplace_back(v, label);
    return out;
}

KExpr villa_expr(const Graph& g, const VillaCore& c) {
    KExpr e = k_union(expr_complete(all_labeled(c.A, 1)), expr_spike(g, {c.B, c.C}, 2, 3));
    return prune_noops(k_join(1, 2, e));
}

KExpr mansion_expr(const Graph& g, const MansionCore& c) {
    int j = c.jstar;
    SpikePartition rest;
    for (int i = 0; i < c.t(); ++i) {
        if (i == j) continue;
        rest.B.push_back(c.B[i]);
        rest.C.push_back(c.C[i]);
    }
    // L1: B\Bj=1, C\Cj=2, F=3, Bj=4, Cj=5
    auto bc = all_labeled(c.B[j], 4);
    for (int v : c.C[j]) bc.emplace_back(v, 5);
    KExpr e = k_union(expr_spike(g, rest, 1, 2), expr_complete(bc));
    if (!c.F.empty()) e = k_union(e, expr_complete(all_labeled(c.F, 3)));
    e = k_join(3, 1, e);
    e = k_join(3, 2, e);
    e = k_join(5, 2, e);
    // L2: C=2, Y=5
    e = k_rename(5, 2, e);
    if (!c.Y.empty()) {
        e = k_union(e, expr_complete(all_labeled(c.Y, 5)));
        e = k_join(5, 2, e);
        e = k_join(5, 3, e);
    }
    // L3: Y joins C; Bj joins F; A=4
    e = k_rename(5, 2, e);
    e = k_rename(4, 3, e);
    e = k_union(e, expr_complete(all_labeled(c.A, 4)));
    e = k_join(4, 1, e);
    e = k_join(4, 3, e);
    if (!c.X.empty()) {
        e = k_union(e, expr_complete(all_labeled(c.X, 5)));
        e = k_join(5, 3, e);
        e = k_join(5, 4, e);
    }
    return prune_noops(e);
}

// Order of P and Q with q before p iff q ~ p; needs a chain between P and Q.
VertexSet chain_interleave(const Graph& g, VertexSet P, const VertexSet& Q) {
    Row qrow = to_row(g.n(), Q);
    std::stable_sort(P.begin(), P.end(), [&](int x, int y) { return g.degree(x) < g.degree(y); });
    std::stable_sort(P.begin(), P.end(),
                     [&](int x, int y) { return count_into(g, x, qrow) < count_into(g, y, qrow); });
    VertexSet out;
    Row pending = qrow;
    for (int p : P) {
        for (int q : Q)
            if (pending.test(q) && g.adjacent(p, q)) out.push_back(q), pending.reset(q);
        out.push_back(p);
    }
    for (int q : Q)
        if (pending.test(q)) out.push_back(q);
    return out;
}

KExpr basket_expr(const Graph& g, const BasketCore& c) {
    int is = c.istar;
    std::vector<VertexSet> rest;
    for (int i = 0; i < 3; ++i) {
        if (i != is && !c.B[i].empty()) rest.push_back(c.B[i]);
        if (!c.C[i].empty()) rest.push_back(c.C[i]);
    }
    if (!c.F.empty()) rest.push_back(c.F);
    VertexSet best;
    int best_w = std::numeric_limits<int>::max();
    for (int orient = 0; orient < 2; ++orient) {
        auto blocks = rest;
        blocks.push_back(orient == 0 ? chain_interleave(g, c.A, c.B[is]) : chain_interleave(g, c.B[is], c.A));
        VertexSet order = best_block_order(g, blocks);
        int w = linear_width(g, order);
        if (w < best_w) best_w = w, best = order;
    }
    return linear_expr(g, best);
}

KExpr thickened_expr(const Graph& g, const ThickenedCore& c) {
    return linear_expr(g, best_block_order(g, c.classes));
}

KExpr core_expr(const Graph& g, const Core& core) {
    return std::visit(
        [&](const auto& c) -> KExpr {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, VillaCore>) return villa_expr(g, c);
            else if constexpr (std::is_same_v<T, MansionCore>) return mansion_expr(g, c);
            else if constexpr (std::is_same_v<T, BasketCore>) return basket_expr(g, c);
            else if constexpr (std::is_same_v<T, CrownCore>) return linear_expr(g, crown_order(g, c));
            else if constexpr (std::is_same_v<T, ThickenedCore>) return thickened_expr(g, c);
            else return expr_complete(all_labeled(c.vertices, 1));
        },
        core);
}

void check_bound(const KExpr& e, const Core& core) {
    int w = width(e), bound = width_bound(core);
    if (w > bound)
        throw InternalContradiction(core_kind(core) + " expression uses " + std::to_string(w) + " labels, bound is " +
                                    std::to_string(bound));
}

template <class T>
KExpr checked(const Graph& g, const Certificate& cert, const char* kind) {
    if (!std::holds_alternative<T>(cert.core))
        throw KExprError(std::string("expected a ") + kind + " certificate, got " + core_kind(cert.core));
    auto report = verify_certificate(g, cert);
    if (!report.ok) throw KExprError("certificate does not verify: " + report.failures.front());
    KExpr e = core_expr(g, cert.core);
    check_bound(e, cert.core);
    return e;
}

// Futures of processed vertices, deduplicated.
int class_count(const Graph& g, const VertexSet& processed, const Row& unproc) {
    std::vector<Row> fut;
    fut.reserve(processed.size());
    for (int v : processed) fut.push_back(g.row(v) & unproc);
    std::sort(fut.begin(), fut.end());
    return static_cast<int>(std::unique(fut.begin(), fut.end()) - fut.begin());
}

// Peak label count while appending `block` after `processed`.
int block_peak(const Graph& g, VertexSet processed, Row unproc, const VertexSet& block) {
    int peak = 0;
    for (int v : block) {
        peak = std::max(peak, class_count(g, processed, unproc) + 1);
        processed.push_back(v);
        unproc.reset(v);
    }
    return peak;
}

}  // namespace

std::vector<std::string> spike_failures(const Graph& g, const SpikePartition& p) {
    std::vector<std::string> out;
    if (p.B.size() != p.C.size() || p.B.empty()) {
        out.push_back("spike needs t >= 1 pairs");
        return out;
    }
    int t = static_cast<int>(p.B.size());
    for (int i = 0; i < t; ++i) {
        auto idx = std::to_string(i);
        if (!is_clique(g, p.B[i])) out.push_back("B" + idx + " is not a clique");
        if (!is_clique(g, p.C[i])) out.push_back("C" + idx + " is not a clique");
        for (int j = 0; j < t; ++j) {
            if (i == j) continue;
            if (i < j && !is_anticomplete_to(g, p.B[i], p.B[j])) out.push_back("B" + idx + " meets B" + std::to_string(j));
            if (i < j && !is_complete_to(g, p.C[i], p.C[j])) out.push_back("C" + idx + " misses C" + std::to_string(j));
            if (!is_anticomplete_to(g, p.B[i], p.C[j])) out.push_back("B" + idx + " meets C" + std::to_string(j));
        }
        Row crow = to_row(g.n(), p.C[i]);
        for (int x : p.B[i])
            for (int y : p.B[i]) {
                Row nx = g.row(x) & crow, ny = g.row(y) & crow;
                if (!nx.is_subset_of(ny) && !ny.is_subset_of(nx)) {
                    out.push_back("B" + idx + " -> C" + idx + " is not nested");
                    goto next;
                }
            }
    next:;
    }
    return out;
}

KExpr expr_complete(const std::vector<std::pair<int, int>>& labeled) {
    if (labeled.empty()) throw KExprError("complete graph needs at least one vertex");
    std::set<int> C;
    for (auto [v, l] : labeled) C.insert(l);
    int spare = 1;
    while (C.count(spare)) ++spare;
    KExpr e = k_intro(labeled[0].second, name_of(labeled[0].first));
    std::set<int> present{labeled[0].second};
    for (std::size_t k = 1; k < labeled.size(); ++k) {
        auto [v, l] = labeled[k];
        e = k_union(e, k_intro(spare, name_of(v)));
        for (int p : present) e = k_join(spare, p, e);
        e = k_rename(spare, l, e);
        present.insert(l);
    }
    return e;
}

KExpr expr_spike(const Graph& g, const SpikePartition& p, int blabel, int clabel) {
    if (blabel == clabel) throw KExprError("spike needs distinct B and C labels");
    KExpr e = spike_12(g, p);
    if (!e) throw KExprError("empty spike");
    return prune_noops(permute(e, {{1, blabel}, {2, clabel}}));
}

KExpr expr_villa(const Graph& g, const Certificate& cert) { return checked<VillaCore>(g, cert, "villa"); }
KExpr expr_mansion(const Graph& g, const Certificate& cert) { return checked<MansionCore>(g, cert, "mansion"); }
KExpr expr_basket(const Graph& g, const Certificate& cert) { return checked<BasketCore>(g, cert, "basket"); }
KExpr expr_crown(const Graph& g, const Certificate& cert) { return checked<CrownCore>(g, cert, "crown"); }
KExpr expr_thickened(const Graph& g, const Certificate& cert) {
    return checked<ThickenedCore>(g, cert, "thickened");
}

KExpr expr_core(const Graph& g, const Core& core) { return core_expr(g, core); }

KExpr expr_add_universal(const KExpr& e, const VertexSet& universals) {
    if (universals.empty()) return e;
    auto roots = root_labels(e);
    int a = roots.front();
    std::set<int> used;
    auto rec = [&](auto&& self, const KExpr& x) -> void {
        if (!x) return;
        used.insert(x->a);
        if (x->op != KOp::Intro) used.insert(x->b);
        self(self, x->left);
        self(self, x->right);
    };
    rec(rec, e);
    used.erase(0);
    int b = a + 1;
    for (int l : used)
        if (l != a) {
            b = l;
            break;
        }
    KExpr out = e;
    for (int l : roots)
        if (l != a) out = k_rename(l, a, out);
    for (int u : universals) {
        out = k_union(out, k_intro(b, name_of(u)));
        out = k_join(a, b, out);
        out = k_rename(b, a, out);
    }
    return out;
}

KExpr expr_add_universal(const KExpr& e, int m) {
    if (m < 0) throw KExprError("m must be non-negative");
    if (m == 0) return e;
    auto lg = eval(e);
    std::unordered_set<std::string> names(lg.names.begin(), lg.names.end());
    bool decimal = true;
    long top = -1;
    for (const auto& s : lg.names) {
        long v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size()) {
            decimal = false;
            break;
        }
        top = std::max(top, v);
    }
    std::vector<std::string> fresh;
    for (long k = 0; static_cast<int>(fresh.size()) < m; ++k) {
        std::string s = decimal ? std::to_string(top + 1 + k) : "u" + std::to_string(k);
        if (!names.count(s)) fresh.push_back(s);
    }
    // Same scheme as above, with explicit names.
    auto roots = root_labels(e);
    int a = roots.front();
    int b = a + 1;
    std::set<int> used;
    auto rec = [&](auto&& self, const KExpr& x) -> void {
        if (!x) return;
        used.insert(x->a);
        if (x->op != KOp::Intro) used.insert(x->b);
        self(self, x->left);
        self(self, x->right);
    };
    rec(rec, e);
    for (int l : used)
        if (l != 0 && l != a) {
            b = l;
            break;
        }
    KExpr out = e;
    for (int l : roots)
        if (l != a) out = k_rename(l, a, out);
    for (const auto& s : fresh) {
        out = k_union(out, k_intro(b, s));
        out = k_join(a, b, out);
        out = k_rename(b, a, out);
    }
    return out;
}

KExpr linear_expr(const Graph& g, const VertexSet& order) {
    if (order.empty()) throw KExprError("empty vertex order");
    struct Cls {
        Row future;
        int label;
    };
    Row unproc = to_row(g.n(), order);
    std::vector<Cls> cls;
    KExpr e;
    for (int v : order) {
        std::set<int> used;
        for (const auto& c : cls) used.insert(c.label);
        int fresh = 1;
        while (used.count(fresh)) ++fresh;
        e = unite(e, k_intro(fresh, name_of(v)));
        for (const auto& c : cls)
            if (c.future.test(v)) e = k_join(fresh, c.label, e);
        unproc.reset(v);
        for (auto& c : cls) c.future.reset(v);
        cls.push_back({g.row(v) & unproc, fresh});
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size();) {
                if (cls[i].future == cls[j].future) {
                    e = k_rename(cls[j].label, cls[i].label, e);
                    cls.erase(cls.begin() + static_cast<long>(j));
                } else {
                    ++j;
                }
            }
    }
    return e;
}

int linear_width(const Graph& g, const VertexSet& order) {
    Row unproc = to_row(g.n(), order);
    return block_peak(g, {}, unproc, order);
}

VertexSet best_block_order(const Graph& g, const std::vector<VertexSet>& blocks) {
    std::vector<VertexSet> bl;
    for (const auto& b : blocks)
        if (!b.empty()) bl.push_back(b);
    int k = static_cast<int>(bl.size());
    VertexSet all;
    for (const auto& b : bl) all.insert(all.end(), b.begin(), b.end());
    Row scope = to_row(g.n(), all);
    auto state = [&](unsigned mask, VertexSet& processed, Row& unproc) {
        processed.clear();
        unproc = scope;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1u)
                for (int v : bl[i]) processed.push_back(v), unproc.reset(v);
    };
    std::vector<int> order_idx;
    if (k <= 10) {
        unsigned full = (1u << k) - 1;
        std::vector<int> best(full + 1, std::numeric_limits<int>::max()), choice(full + 1, -1);
        best[0] = 0;
        VertexSet processed;
        Row unproc;
        for (unsigned mask = 0; mask < full; ++mask) {
            if (best[mask] == std::numeric_limits<int>::max()) continue;
            state(mask, processed, unproc);
            for (int i = 0; i < k; ++i) {
                if (mask >> i & 1u) continue;
                int w = std::max(best[mask], block_peak(g, processed, unproc, bl[i]));
                unsigned nm = mask | 1u << i;
                if (w < best[nm]) best[nm] = w, choice[nm] = i;
            }
        }
        for (unsigned mask = full; mask;) {
            int i = choice[mask];
            order_idx.push_back(i);
            mask &= ~(1u << i);
        }
        std::reverse(order_idx.begin(), order_idx.end());
    } else {
        unsigned mask = 0;
        VertexSet processed;
        Row unproc;
        for (int step = 0; step < k; ++step) {
            state(mask, processed, unproc);
            int pick = -1, pick_peak = 0, pick_after = 0;
            for (int i = 0; i < k; ++i) {
                if (mask >> i & 1u) continue;
                int peak = block_peak(g, processed, unproc, bl[i]);
                VertexSet p2 = processed;
                Row u2 = unproc;
                for (int v : bl[i]) p2.push_back(v), u2.reset(v);
                int after = class_count(g, p2, u2);
                if (pick < 0 || peak < pick_peak || (peak == pick_peak && after < pick_after))
                    pick = i, pick_peak = peak, pick_after = after;
            }
            order_idx.push_back(pick);
            mask |= 1u << pick;
        }
    }
    VertexSet out;
    for (int i : order_idx) out.insert(out.end(), bl[i].begin(), bl[i].end());
    return out;
}

VertexSet crown_order(const Graph& g, const CrownCore& c) {
    auto X = [&](int i) -> const VertexSet& { return c.X[((c.istar + i) % 5 + 5) % 5]; };
    VertexSet q = concat({&X(1), &X(4)});
    VertexSet out = chain_interleave(g, X(0), q);
    VertexSet tail = chain_interleave(g, X(3), X(2));
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

int width_bound(const Core& core) {
    return std::visit(
        [](const auto& c) -> int {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, VillaCore>) return 4;
            else if constexpr (std::is_same_v<T, ThickenedCore>) return static_cast<int>(c.classes.size()) + 1;
            else if constexpr (std::is_same_v<T, CompleteCore>) return 2;
            else return 5;
        },
        core);
}

ExprResult expr_for(const Graph& g) {
    ExprResult r{classify(g), nullptr};
    if (g.n() == 0) return r;
    if (const auto* in = std::get_if<InClassNoSimplicial>(&r.outcome)) {
        KExpr core = core_expr(g, in->cert.core);
        check_bound(core, in->cert.core);
        r.expr = expr_add_universal(core, in->cert.universals);
    }
    return r;
}

}  // namespace pentaforge
