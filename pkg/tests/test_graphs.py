import pytest
from hypothesis import given, strategies as st

from wadgelab.errors import InvalidGraph, OutOfRange, OutOfWindow
from wadgelab.graphs import (ColoredGraph, Reduction, build_Gn, compose, graph_from_colors, identity_reduction,
                             induced_subgraph, inclusion, validate_reduction)
from wadgelab.sequences import block_parity, Parity, from_delta


def test_identity_sequence_colors():
    g = build_Gn((0, 1, 2, 3), 6)
    assert g.vertex_colors == (1, 0, 0, 1, 1, 0, 0)
    assert g.edge_colors == (1, 0, 1, 0, 1, 0)


def test_other_examples():
    assert build_Gn((0, 1, 3), 5).vertex_colors == (1, 0, 0, 1, 0, 1)
    g = build_Gn((0, 5), 1)
    assert (g.vertex_colors, g.edge_colors) == ((1, 0), (1,))


def test_truncation_limit():
    build_Gn((0, 1, 3), 7)
    with pytest.raises(OutOfWindow):
        build_Gn((0, 1, 3), 8)


def test_graph_invariants():
    with pytest.raises(InvalidGraph):
        ColoredGraph(0, 0, (1,), ())
    with pytest.raises(InvalidGraph):
        ColoredGraph(0, 1, (1, 2), (0,))


seqs = st.lists(st.integers(1, 6), min_size=1, max_size=8).map(from_delta)


@given(seqs)
def test_colors_alternate_inside_arrows(s):
    g = build_Gn(s)
    for t in range(len(s) - 1):
        lo, hi = s.arrow(t)
        for v in range(lo, min(hi, g.hi)):
            assert g.vertex_color(v) != g.vertex_color(v + 1)
    for e in g.edges:
        assert g.edge_color(e) == (1 if e % 2 == 0 else 0)
    for v in g.vertices:
        even = block_parity(s, v // 2) is Parity.EVEN
        assert g.vertex_color(v) == (int(even) if v % 2 == 0 else int(not even))


def test_validate_examples():
    g = build_Gn((0, 1, 2, 3), 6)
    assert validate_reduction(identity_reduction(g)).ok
    I = graph_from_colors((1, 1), (1,))
    gm = build_Gn((0, 1, 3))
    assert validate_reduction(Reduction(I, gm, {0: 0, 1: 0}, {0: 0})).ok
    rep = validate_reduction(Reduction(I, gm, {0: 0, 1: 2}, {0: 0}))
    assert {"endpoint", "adjacency"} <= rep.clauses()


def test_validate_clauses():
    gm = build_Gn((0, 1, 3))
    I = graph_from_colors((1, 0), (1,))
    assert validate_reduction(Reduction(I, gm, {0: 0, 1: 1}, {0: 0})).ok
    assert "vertex-color" in validate_reduction(Reduction(I, gm, {0: 1, 1: 1}, {0: 0})).clauses()
    assert "edge-color" in validate_reduction(Reduction(I, gm, {0: 0, 1: 1}, {0: 1})).clauses()
    assert "totality" in validate_reduction(Reduction(I, gm, {0: 0}, {0: 0})).clauses()
    assert "vertex-range" in validate_reduction(Reduction(I, gm, {0: 0, 1: 99}, {0: 0})).clauses()
    J = graph_from_colors((1, 0, 1), (1, 0))
    r = Reduction(J, gm, {0: 0, 1: 1, 2: 3}, {0: 0, 1: 2})
    assert "adjacency" in validate_reduction(r).clauses()
    assert "interval-image" in validate_reduction(r).clauses()


def test_induced_subgraph():
    g = build_Gn((0, 1, 2, 3), 6)
    assert induced_subgraph(g, 0, 6) == g
    h = induced_subgraph(g, 2, 3)
    assert (h.vertex_colors, h.edge_colors) == ((0, 1), (1,))
    with pytest.raises(OutOfRange):
        induced_subgraph(g, 2, 2)


def test_compose_with_inclusion():
    g = build_Gn((0, 1, 3, 6))
    sub = induced_subgraph(g, 2, 7)
    r = compose(identity_reduction(sub), inclusion(sub, g))
    assert validate_reduction(r).ok


def test_edge_normalization():
    g = build_Gn((0, 1, 3))
    r = Reduction(g, g, {v: v for v in g.vertices}, {(e + 1, e): (e, e + 1) for e in g.edges})
    assert r.emap == {e: e for e in g.edges}
