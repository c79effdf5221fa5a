#include "pentaforge/recognizer.hpp"

#include "bits.hpp"
#include "pentaforge/families.hpp"

#include <algorithm>

namespace pentaforge {

using detail::for_each_bit;
using detail::overloaded;

namespace {

struct Checker {
    const Graph& g;
    std::vector<std::string> out;

    void expect(bool ok, const std::string& msg) {
        if (!ok) out.push_back(msg);
    }
    Row row(const VertexSet& s) const { return to_row(g.n(), s); }
    void nonempty(const VertexSet& s, const std::string& name) { expect(!s.empty(), name + " is empty"); }
    void clique(const VertexSet& s, const std::string& name) { expect(is_clique(g, s), name + " is not a clique"); }
    void complete(const VertexSet& x, const VertexSet& y, const std::string& nx, const std::string& ny) {
        expect(is_complete_to(g, x, y), nx + " is not complete to " + ny);
    }
    void anticomplete(const VertexSet& x, const VertexSet& y, const std::string& nx, const std::string& ny) {
        expect(is_anticomplete_to(g, x, y), nx + " is not anticomplete to " + ny);
    }
};

std::string idx(const std::string& base, int i) { return base + "_" + std::to_string(i); }

VertexSet merged(const std::vector<VertexSet>& parts, int skip = -1) {
    VertexSet out;
    for (int i = 0; i < static_cast<int>(parts.size()); ++i)
        if (i != skip) out.insert(out.end(), parts[i].begin(), parts[i].end());
    return out;
}

// Neighborhoods of src inside dst form a chain; optionally the largest is all of dst
// and the smallest is nonempty.
bool nested(const Graph& g, const VertexSet& src, const VertexSet& dst, bool top_full, bool bottom_nonempty) {
    if (src.empty()) return true;
    Row target = to_row(g.n(), dst);
    std::vector<Row> nbs;
    for (int s : src) nbs.push_back(g.row(s) & target);
    std::sort(nbs.begin(), nbs.end(), [](const Row& a, const Row& b) { return a.count() > b.count(); });
    for (std::size_t k = 1; k < nbs.size(); ++k)
        if (!nbs[k].is_subset_of(nbs[k - 1])) return false;
    if (top_full && nbs.front() != target) return false;
    if (bottom_nonempty && nbs.back().none()) return false;
    return true;
}

void check_villa_parts(Checker& ck, const VertexSet& A, const std::vector<VertexSet>& B, const std::vector<VertexSet>& C) {
    int t = static_cast<int>(B.size());
    ck.expect(t >= 3, "villa needs t >= 3");
    ck.expect(C.size() == B.size(), "villa needs as many C parts as B parts");
    if (C.size() != B.size()) return;
    ck.nonempty(A, "A");
    ck.clique(A, "A");
    for (int i = 0; i < t; ++i) {
        ck.nonempty(B[i], idx("B", i));
        ck.nonempty(C[i], idx("C", i));
        ck.clique(B[i], idx("B", i));
        ck.clique(C[i], idx("C", i));
        ck.complete(A, B[i], "A", idx("B", i));
        ck.anticomplete(A, C[i], "A", idx("C", i));
        for (int j = 0; j < t; ++j) {
            if (j == i) continue;
            if (j > i) {
                ck.anticomplete(B[i], B[j], idx("B", i), idx("B", j));
                ck.complete(C[i], C[j], idx("C", i), idx("C", j));
            }
            ck.anticomplete(B[i], C[j], idx("B", i), idx("C", j));
        }
        ck.expect(nested(ck.g, B[i], C[i], true, true), idx("B", i) + " -> " + idx("C", i) + " neighborhoods are not a full nested chain");
    }
}

void check_core(Checker& ck, const VillaCore& v) { check_villa_parts(ck, v.A, v.B, v.C); }

void check_core(Checker& ck, const MansionCore& m) {
    check_villa_parts(ck, m.A, m.B, m.C);
    int t = m.t();
    if (m.C.size() != m.B.size()) return;
    ck.expect(m.jstar >= 0 && m.jstar < t, "jstar out of range");
    if (m.jstar < 0 || m.jstar >= t) return;
    int j = m.jstar;
    ck.nonempty(m.F, "F");
    ck.clique(m.F, "F");
    ck.clique(m.X, "X");
    ck.clique(m.Y, "Y");
    ck.complete(m.F, m.A, "F", "A");
    for (int i = 0; i < t; ++i) {
        if (i == j) continue;
        ck.complete(m.F, m.B[i], "F", idx("B", i));
        ck.complete(m.F, m.C[i], "F", idx("C", i));
        ck.anticomplete(m.X, m.B[i], "X", idx("B", i));
    }
    ck.anticomplete(m.F, m.B[j], "F", idx("B", j));
    ck.anticomplete(m.F, m.C[j], "F", idx("C", j));
    ck.complete(m.B[j], m.C[j], idx("B", j), idx("C", j));
    ck.complete(m.X, m.A, "X", "A");
    ck.complete(m.X, m.B[j], "X", idx("B", j));
    VertexSet all_c = merged(m.C), all_b = merged(m.B);
    ck.anticomplete(m.X, all_c, "X", "C");
    ck.complete(m.F, m.X, "F", "X");
    ck.complete(m.F, m.Y, "F", "Y");
    ck.anticomplete(m.X, m.Y, "X", "Y");
    ck.complete(m.Y, all_c, "Y", "C");
    ck.anticomplete(m.Y, m.A, "Y", "A");
    ck.anticomplete(m.Y, all_b, "Y", "B");
}

void check_core(Checker& ck, const BasketCore& b) {
    ck.nonempty(b.A, "A");
    ck.clique(b.A, "A");
    ck.clique(b.F, "F");
    ck.expect(b.istar >= 0 && b.istar < 3, "istar out of range");
    ck.expect(b.jstar >= 0 && b.jstar < 3, "jstar out of range");
    if (b.istar < 0 || b.istar >= 3 || b.jstar < 0 || b.jstar >= 3) return;
    VertexSet rest = b.A;
    for (int i = 0; i < 3; ++i) {
        ck.nonempty(b.B[i], idx("B", i));
        ck.nonempty(b.C[i], idx("C", i));
        ck.clique(b.B[i], idx("B", i));
        ck.clique(b.C[i], idx("C", i));
        ck.complete(b.B[i], b.C[i], idx("B", i), idx("C", i));
        ck.anticomplete(b.A, b.C[i], "A", idx("C", i));
        for (int j = 0; j < 3; ++j) {
            if (j == i) continue;
            if (j > i) {
                ck.anticomplete(b.B[i], b.B[j], idx("B", i), idx("B", j));
                ck.complete(b.C[i], b.C[j], idx("C", i), idx("C", j));
            }
            ck.anticomplete(b.B[i], b.C[j], idx("B", i), idx("C", j));
        }
        if (i != b.istar) ck.complete(b.A, b.B[i], "A", idx("B", i));
        if (i != b.jstar) {
            rest.insert(rest.end(), b.B[i].begin(), b.B[i].end());
            rest.insert(rest.end(), b.C[i].begin(), b.C[i].end());
        }
    }
    ck.expect(nested(ck.g, b.A, b.B[b.istar], true, false), "A -> B_istar neighborhoods are not a full nested chain");
    ck.complete(b.F, rest, "F", "the parts outside B_jstar, C_jstar");
    ck.anticomplete(b.F, b.B[b.jstar], "F", idx("B", b.jstar));
    ck.anticomplete(b.F, b.C[b.jstar], "F", idx("C", b.jstar));
}

void check_core(Checker& ck, const CrownCore& c) {
    VertexSet all;
    for (const auto& x : c.X) all.insert(all.end(), x.begin(), x.end());
    std::vector<int> local(ck.g.n(), -1);
    for (std::size_t k = 0; k < all.size(); ++k) local[all[k]] = static_cast<int>(k);
    std::vector<VertexSet> parts;
    for (const auto& x : c.X) {
        VertexSet p;
        for (int v : x) p.push_back(local[v]);
        parts.push_back(p);
    }
    ck.expect(is_ring_partition(ck.g.induced(all), parts), "parts do not form a ring partition");
    ck.expect(c.istar >= 0 && c.istar < 5, "istar out of range");
    if (c.istar < 0 || c.istar >= 5) return;
    auto at = [&](int d) { return c.X[((c.istar + d) % 5 + 5) % 5]; };
    ck.complete(at(-1), at(-2), "X_{i*-1}", "X_{i*-2}");
    ck.complete(at(1), at(2), "X_{i*+1}", "X_{i*+2}");
}

void check_core(Checker& ck, const ThickenedCore& t) {
    const NamedGraph* base = find_base(t.base);
    ck.expect(base != nullptr, "unknown base '" + t.base + "'");
    if (!base) return;
    ck.expect(static_cast<int>(t.classes.size()) == base->graph.n(), "class count differs from base size");
    if (static_cast<int>(t.classes.size()) != base->graph.n()) return;
    for (int u = 0; u < base->graph.n(); ++u) {
        ck.nonempty(t.classes[u], idx("class", u));
        ck.clique(t.classes[u], idx("class", u));
        for (int v = u + 1; v < base->graph.n(); ++v) {
            if (base->graph.adjacent(u, v))
                ck.complete(t.classes[u], t.classes[v], idx("class", u), idx("class", v));
            else
                ck.anticomplete(t.classes[u], t.classes[v], idx("class", u), idx("class", v));
        }
    }
}

void check_core(Checker& ck, const CompleteCore& c) {
    if (ck.g.n() > 0) ck.nonempty(c.vertices, "complete core");
    ck.clique(c.vertices, "complete core");
}

}  // namespace

VerifyReport verify_certificate(const Graph& g, const Certificate& cert) {
    Checker ck{g, {}};
    int n = g.n();
    VertexSet core = core_vertices(cert.core);
    std::vector<int> seen(n, 0);
    bool ids_ok = true;
    for (const VertexSet* s : std::initializer_list<const VertexSet*>{&cert.universals, &core})
        for (int v : *s) {
            if (v < 0 || v >= n) {
                ck.expect(false, "vertex id " + std::to_string(v) + " out of range");
                ids_ok = false;
            } else if (seen[v]++) {
                ck.expect(false, "vertex " + std::to_string(v) + " listed twice");
                ids_ok = false;
            }
        }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) {
            ck.expect(false, "vertex " + std::to_string(v) + " not covered");
            ids_ok = false;
        }
    if (!ids_ok) return {false, ck.out};

    for (int u : cert.universals) ck.expect(g.degree(u) == n - 1, "vertex " + std::to_string(u) + " is not universal");
    if (!std::holds_alternative<CompleteCore>(cert.core)) {
        ck.expect(core.size() >= 2, "core has fewer than two vertices");
        VertexSet sorted = core;
        std::sort(sorted.begin(), sorted.end());
        ck.expect(is_anticonnected(g.induced(sorted)), "core is not anticonnected");
    }
    std::visit([&](const auto& c) { check_core(ck, c); }, cert.core);
    return {ck.out.empty(), ck.out};
}

std::vector<std::string> frame_failures(const Graph& g, const VertexSet& A, const std::vector<VertexSet>& B,
                                        const std::vector<VertexSet>& C) {
    Checker ck{g, {}};
    int t = static_cast<int>(B.size());
    ck.expect(t >= 3, "frame needs t >= 3");
    ck.expect(C.size() == B.size(), "frame needs as many C parts as B parts");
    if (C.size() != B.size()) return ck.out;
    ck.nonempty(A, "A");
    for (int a : A) {
        int hit = 0;
        for (const auto& b : B) hit += (g.row(a) & ck.row(b)).any() ? 1 : 0;
        ck.expect(hit >= 2, "vertex " + std::to_string(a) + " of A sees fewer than two B parts");
    }
    for (int i = 0; i < t; ++i) {
        ck.nonempty(B[i], idx("B", i));
        ck.nonempty(C[i], idx("C", i));
        ck.anticomplete(A, C[i], "A", idx("C", i));
        for (int j = 0; j < t; ++j) {
            if (j == i) continue;
            if (j > i) {
                ck.anticomplete(B[i], B[j], idx("B", i), idx("B", j));
                ck.complete(C[i], C[j], idx("C", i), idx("C", j));
            }
            ck.anticomplete(B[i], C[j], idx("B", i), idx("C", j));
        }
        Row a = ck.row(A), bi = ck.row(B[i]), ci = ck.row(C[i]);
        for (int b : B[i]) {
            ck.expect((g.row(b) & a).any(), "vertex " + std::to_string(b) + " of " + idx("B", i) + " has no neighbor in A");
            ck.expect((g.row(b) & ci).any(), "vertex " + std::to_string(b) + " of " + idx("B", i) + " has no neighbor in " + idx("C", i));
        }
        for (int c : C[i])
            ck.expect((g.row(c) & bi).any(), "vertex " + std::to_string(c) + " of " + idx("C", i) + " has no neighbor in " + idx("B", i));
    }
    return ck.out;
}

std::vector<std::string> frame_conclusion_failures(const Graph& g, const VertexSet& A, const std::vector<VertexSet>& B,
                                                   const std::vector<VertexSet>& C) {
    Checker ck{g, {}};
    int t = static_cast<int>(B.size());
    if (C.size() != B.size()) return {"frame needs as many C parts as B parts"};
    ck.clique(A, "A");
    for (int i = 0; i < t; ++i) {
        ck.clique(B[i], idx("B", i));
        ck.clique(C[i], idx("C", i));
    }
    VertexSet all_b = merged(B);
    if (!is_complete_to(g, A, all_b)) {
        ck.expect(t == 3, "A is not complete to B but t != 3");
        bool shaped = false;
        for (int s = 0; s < t && !shaped; ++s)
            shaped = is_complete_to(g, A, merged(B, s)) && nested(g, A, B[s], true, false);
        ck.expect(shaped, "A -> B neighborhoods do not have the nested shape");
        for (int i = 0; i < t; ++i) ck.complete(B[i], C[i], idx("B", i), idx("C", i));
    }
    for (int i = 0; i < t; ++i) {
        ck.expect(nested(g, B[i], C[i], true, true), idx("B", i) + " -> " + idx("C", i) + " chain broken");
        ck.expect(nested(g, C[i], B[i], true, true), idx("C", i) + " -> " + idx("B", i) + " chain broken");
    }
    return ck.out;
}

FrameDecomposition grow_maximal_frame(const Graph& g, const PentagonWitness& seed) {
    int n = g.n(), t = seed.t;
    Row a_row(n), b_all(n), c_all(n), frame(n);
    std::vector<Row> b_row(t, Row(n)), c_row(t, Row(n));
    a_row.set(seed.embedding[0]);
    for (int i = 0; i < t; ++i) {
        b_row[i].set(seed.embedding[1 + i]);
        c_row[i].set(seed.embedding[1 + t + i]);
    }
    auto refresh = [&] {
        b_all.reset();
        c_all.reset();
        for (int i = 0; i < t; ++i) {
            b_all |= b_row[i];
            c_all |= c_row[i];
        }
        frame = a_row | b_all | c_all;
    };
    refresh();

    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (frame.test(v)) continue;
            const Row& nv = g.row(v);
            int hit = 0;
            for (int i = 0; i < t; ++i) hit += (nv & b_row[i]).any() ? 1 : 0;
            if (hit >= 2 && !(nv & c_all).any()) {
                a_row.set(v);
                refresh();
                changed = true;
                continue;
            }
            bool placed = false;
            for (int i = 0; i < t && !placed; ++i) {
                Row other_b = b_all - b_row[i], other_c = c_all - c_row[i];
                if ((nv & a_row).any() && (nv & c_row[i]).any() && !(nv & other_b).any() && !(nv & other_c).any()) {
                    b_row[i].set(v);
                    placed = true;
                }
            }
            for (int i = 0; i < t && !placed; ++i) {
                Row other_b = b_all - b_row[i], other_c = c_all - c_row[i];
                if ((nv & b_row[i]).any() && other_c.is_subset_of(nv) && !(nv & a_row).any() && !(nv & other_b).any()) {
                    c_row[i].set(v);
                    placed = true;
                }
            }
            if (placed) {
                refresh();
                changed = true;
            }
        }
    }

    FrameDecomposition f;
    f.t = t;
    f.A = to_vertices(a_row);
    for (int i = 0; i < t; ++i) {
        f.B.push_back(to_vertices(b_row[i]));
        f.C.push_back(to_vertices(c_row[i]));
    }
    f.D.assign(t, {});
    f.F.assign(t, {});
    f.X.assign(t, {});
    for (int v = 0; v < n; ++v) {
        if (frame.test(v)) continue;
        Row nq = g.row(v) & frame;
        if (nq == frame) {
            f.W.push_back(v);
            continue;
        }
        bool placed = false;
        for (int i = 0; i < t && !placed; ++i) {
            if (nq == (b_row[i] | c_row[i])) {
                f.D[i].push_back(v);
                placed = true;
            } else if (nq == (a_row | (b_all - b_row[i]) | (c_all - c_row[i]))) {
                f.F[i].push_back(v);
                placed = true;
            } else if (b_row[i].is_subset_of(nq) && nq.is_subset_of(a_row | b_row[i])) {
                f.X[i].push_back(v);
                placed = true;
            }
        }
        if (placed) continue;
        if (nq.any() && nq.is_subset_of(c_all))
            f.Y.push_back(v);
        else if (nq.is_subset_of(a_row))
            f.Z.push_back(v);
        else
            f.unassigned.push_back(v);
    }
    return f;
}

std::optional<Certificate> assemble_from_frame(const Graph& g, const FrameDecomposition& f) {
    if (!f.unassigned.empty() || !f.W.empty() || !f.Z.empty()) return std::nullopt;
    for (const auto& d : f.D)
        if (!d.empty()) return std::nullopt;
    std::vector<int> with_f;
    for (int i = 0; i < f.t; ++i)
        if (!f.F[i].empty()) with_f.push_back(i);
    if (with_f.size() > 1) return std::nullopt;
    int j = with_f.empty() ? -1 : with_f[0];
    for (int i = 0; i < f.t; ++i)
        if (i != j && !f.X[i].empty()) return std::nullopt;
    if (j < 0 && !f.Y.empty()) return std::nullopt;

    int incomplete = -1;
    for (int i = 0; i < f.t; ++i)
        if (!is_complete_to(g, f.A, f.B[i])) incomplete = i;

    Certificate cert;
    if (incomplete >= 0) {
        if (f.t != 3 || !f.Y.empty() || (j >= 0 && !f.X[j].empty())) return std::nullopt;
        BasketCore b;
        b.A = f.A;
        for (int i = 0; i < 3; ++i) {
            b.B[i] = f.B[i];
            b.C[i] = f.C[i];
        }
        b.istar = incomplete;
        b.jstar = j >= 0 ? j : 0;
        if (j >= 0) b.F = f.F[j];
        cert.core = b;
    } else if (j < 0) {
        cert.core = VillaCore{f.A, f.B, f.C};
    } else {
        cert.core = MansionCore{f.A, f.B, f.C, f.F[j], f.X[j], f.Y, j};
    }
    if (!verify_certificate(g, cert).ok) return std::nullopt;
    return cert;
}

std::optional<Certificate> recognize_crown(const Graph& g) {
    int n = g.n();
    if (n < 5) return std::nullopt;
    for (const auto& h : holes(g, 5)) {
        if (h.size() != 5) continue;
        std::array<VertexSet, 5> parts;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            auto pos = std::find(h.begin(), h.end(), v);
            if (pos != h.end()) {
                parts[pos - h.begin()].push_back(v);
                continue;
            }
            int mask = 0;
            for (int p = 0; p < 5; ++p)
                if (g.adjacent(v, h[p])) mask |= 1 << p;
            int where = -1;
            for (int i = 0; i < 5; ++i) {
                int want = (1 << i) | (1 << ((i + 1) % 5)) | (1 << ((i + 4) % 5));
                if (mask == want) where = i;
            }
            if (where < 0)
                ok = false;
            else
                parts[where].push_back(v);
        }
        if (!ok) continue;
        for (int istar = 0; istar < 5; ++istar) {
            Certificate cert{{}, CrownCore{parts, istar}};
            if (verify_certificate(g, cert).ok) return cert;
        }
    }
    return std::nullopt;
}

namespace {

std::optional<std::pair<const NamedGraph*, std::vector<int>>> match_base_mapping(const Graph& g) {
    for (const auto& b : base_library()) {
        if (b.graph.n() != g.n() || b.graph.edge_count() != g.edge_count()) continue;
        if (auto m = is_isomorphic(g, b.graph)) return std::make_pair(&b, *m);
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::string> match_base(const Graph& g) {
    auto m = match_base_mapping(g);
    if (!m) return std::nullopt;
    return m->first->name;
}

std::optional<Certificate> recognize_thickening(const Graph& g) {
    auto tq = contract_twins(g);
    auto m = match_base_mapping(tq.quotient);
    if (!m) return std::nullopt;
    const auto& [base, map] = *m;
    ThickenedCore core;
    core.base = base->name;
    core.classes.assign(base->graph.n(), {});
    for (int q = 0; q < tq.quotient.n(); ++q) core.classes[map[q]] = tq.classes[q];
    Certificate cert{{}, core};
    if (!verify_certificate(g, cert).ok) return std::nullopt;
    return cert;
}

ClassifyOutcome classify(const Graph& g) { return classify(g, forbidden_profile(g)); }

ClassifyOutcome classify(const Graph& g, const ForbiddenProfile& profile) {
    if (auto bad = class_violation(profile)) return NotInClass{bad->first, bad->second};
    if (g.n() == 0) return InClassNoSimplicial{Certificate{{}, CompleteCore{}}};
    auto simp = simplicial_vertices(g);
    if (!simp.empty()) return HasSimplicial{simp.front()};

    VertexSet universals = universal_vertices(g);
    Row u_row = to_row(g.n(), universals);
    VertexSet rest;
    for (int v = 0; v < g.n(); ++v)
        if (!u_row.test(v)) rest.push_back(v);
    Graph inner = g.induced(rest);
    if (!is_anticonnected(inner))
        throw InternalContradiction("graph without universal vertices has several nontrivial anticomponents");

    std::optional<Certificate> local;
    if (profile.has(Pattern::C7) || profile.has(Pattern::T0)) {
        local = recognize_thickening(inner);
        if (!local) throw InternalContradiction("contains C7 or T0 but its twin quotient matches no base");
    } else if (profile.has(Pattern::Pentagon3)) {
        auto seed = largest_pentagon_t(inner);
        if (!seed) throw InternalContradiction("3-pentagon lost after removing universal vertices");
        auto frame = grow_maximal_frame(inner, *seed);
        if (!frame.unassigned.empty())
            throw InternalContradiction("vertex " + std::to_string(rest[frame.unassigned.front()]) +
                                        " fits no residue set of the maximal frame");
        local = assemble_from_frame(inner, frame);
        if (!local) throw InternalContradiction("maximal frame and residues do not assemble into a basket, villa or mansion");
    } else {
        local = recognize_crown(inner);
        if (!local) throw InternalContradiction("3-pentagon-free member is not a 5-crown");
    }
    Certificate cert = relabel(*local, rest);
    cert.universals = universals;
    auto report = verify_certificate(g, cert);
    if (!report.ok) throw InternalContradiction("assembled certificate fails: " + report.failures.front());
    return InClassNoSimplicial{cert};
}

nlohmann::ordered_json outcome_to_json(const ClassifyOutcome& o) {
    nlohmann::ordered_json j;
    std::visit(overloaded{[&](const InClassNoSimplicial& c) {
                              j["outcome"] = "in_class_no_simplicial";
                              j["certificate"] = certificate_to_json(c.cert);
                          },
                          [&](const HasSimplicial& h) {
                              j["outcome"] = "has_simplicial";
                              j["vertex"] = h.vertex;
                          },
                          [&](const NotInClass& n) {
                              j["outcome"] = "not_in_class";
                              j["pattern"] = pattern_name(n.pattern);
                              j["witness"] = n.witness;
                          }},
               o);
    return j;
}

}  // namespace pentaforge
