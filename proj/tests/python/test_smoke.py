import itertools

import networkx as nx
import pytest

import pentaforge as pf


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_graph_basics():
    g = pf.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert g.n == 5
    assert len(g.edges()) == 5
    assert g.adjacent(0, 4)
    assert g.neighbors(0) == [1, 4]
    assert pf.parse_graph(pf.format_graph(g)) == g


def test_base_library():
    names = pf.base_names()
    assert len(names) == 37
    assert pf.base_graph("M0").n == 12
    for name in names:
        g = pf.base_graph(name)
        assert pf.match_base(g) is not None


def test_generate_and_classify():
    g, cert = pf.generate("villa", 15, 7)
    assert pf.forbidden_profile(g)["in_class"]
    ok, failures = pf.verify_certificate(g, cert)
    assert ok and not failures
    out = pf.classify(g)
    assert out["outcome"] == "in_class_no_simplicial"
    assert pf.verify_certificate(g, out["certificate"])[0]


def test_not_in_class():
    c4 = pf.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    out = pf.classify(c4)
    assert out["outcome"] == "not_in_class"
    assert out["pattern"] == "C4"


def test_holes_match_networkx():
    g, _ = pf.generate("crown", 12, 3)
    mine = sorted(sorted(h) for h in pf.holes(g, g.n))
    ref = sorted(sorted(c) for c in nx.chordless_cycles(to_nx(g)) if len(c) >= 4)
    assert mine == ref


def test_cwd_and_kexpr():
    g, _ = pf.generate("mansion", 14, 2)
    res = pf.cwd(g)
    assert res["width"] <= 5
    h, names, labels = pf.kexpr_eval(res["expr"])
    assert h.n == g.n and len(names) == len(labels) == g.n
    assert res["verified"]
    assert pf.kexpr_width(res["expr"]) == res["width"]
    assert pf.kexpr_canonical(" (v  1 a) ") == "(v 1 a)"
    with pytest.raises(Exception):
        pf.kexpr_canonical("(j 1 1 (v 1 a))")


def brute_chi(g):
    h = to_nx(g)
    for k in range(1, g.n + 1):
        for colors in itertools.product(range(k), repeat=g.n):
            if all(colors[u] != colors[v] for u, v in h.edges()):
                return k
    return 0


def test_coloring():
    c5u = pf.add_universal(pf.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]), 1)
    chi, assignment = pf.chromatic_number(c5u)
    assert chi == 4 == brute_chi(c5u)
    assert all(assignment[u] != assignment[v] for u, v in c5u.edges())
    assert pf.chromatic_exact(c5u)[0] == 4
    assert pf.k_colorable("(j 1 2 (u (v 1 a) (v 2 b)))", 2)
    assert not pf.k_colorable("(j 1 2 (u (v 1 a) (v 2 b)))", 1)
