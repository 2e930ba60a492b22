from collections import defaultdict
from itertools import product

import pytest

from wadgelab.errors import PremiseNotSatisfied, TruncationTooSmall
from wadgelab.graphs import ColoredGraph, Reduction, build_Gn, validate_reduction
from wadgelab.unfoldings import (Case, Unfolding, Walk, all_walks, base_unfolding, conclusion_edges,
                                 enumerate_unfoldings, extend_unfolding, iter_walks, relation_classes,
                                 sim_relation)


def test_base_unfolding_relation():
    for l in (0, 1, 2):
        x = base_unfolding((0, 1, 2, 3), (0, 1, 2, 3), l)
        assert x.valid
        rel = sim_relation(x)
        b = x.g.vmap[0]
        assert rel.vertex_pairs == {(0, b)}
        assert rel.edge_pairs == {((0, 1), (2 * l, 2 * l + 1))}
    assert base_unfolding((0, 1, 2, 3), (0, 1, 2, 3), 0).g.vmap == {0: 0, 1: 0}


def test_identity_relation_is_diagonal():
    w = Walk(tuple((v, v) for v in range(4)), tuple((e, e) for e in range(3)))
    x = Unfolding.from_walk((0, 1, 2, 3), (0, 1, 2, 3), w, 3, 3)
    assert x.valid
    assert sim_relation(x).vertex_pairs == {(v, v) for v in range(4)}


def test_extend_spec_example():
    x = base_unfolding((0, 1, 2, 3), (0, 1, 2, 3), 0)
    y = extend_unfolding(x, 1, 1, Case.DOWN_DOWN)
    assert y.valid
    rel = sim_relation(y)
    assert ((1, 2), (1, 2)) in rel.edge_pairs
    assert sim_relation(x).edge_pairs <= rel.edge_pairs
    assert y.ran_f == {0, 1} and y.ran_g == {0, 1}
    assert len(y.domain) == len(x.domain) + 2


def test_extend_errors():
    x = base_unfolding((0, 1, 2, 3), (0, 1, 2, 3), 0)
    with pytest.raises(PremiseNotSatisfied):
        extend_unfolding(x, 1, 1, Case.UP_UP)
    with pytest.raises(PremiseNotSatisfied):
        extend_unfolding(x, 0, 0, Case.DOWN_DOWN)
    with pytest.raises(PremiseNotSatisfied):
        extend_unfolding(x, 1, 2, Case.DOWN_DOWN)
    y = base_unfolding((0, 1, 2, 3), (0, 1, 2, 3), 0, hi_m=1, hi_n=1)
    with pytest.raises(TruncationTooSmall):
        extend_unfolding(y, 1, 1, Case.DOWN_DOWN)


def test_extend_all_cases_small():
    m = n = (0, 1, 2, 3)
    seen = set()
    for verts, edges in all_walks(m, n, 4):
        x = Unfolding.from_walk(m, n, Walk(verts, edges))
        for case in Case:
            for k in range(1, x.gm.hi + 1):
                for l in range(1, x.gn.hi + 1):
                    try:
                        y = extend_unfolding(x, k, l, case)
                    except (PremiseNotSatisfied, TruncationTooSmall):
                        continue
                    seen.add(case)
                    assert y.valid
                    assert conclusion_edges(case, k, l) in sim_relation(y).edge_pairs
                    assert y.ran_f == x.ran_f | {k} and y.ran_g == x.ran_g | {l}
    assert seen == set(Case)


def test_enumerate_examples():
    assert list(enumerate_unfoldings((0, 1, 2), (0, 1, 2), 1, 4)) == []
    base = base_unfolding((0, 1, 2, 3), (0, 1, 2, 3), 0)
    keys = {x.key() for x in enumerate_unfoldings((0, 1, 2, 3), (0, 1, 2, 3), 0, 2)}
    assert base.key() in keys


def test_enumeration_order_and_validity():
    xs = list(enumerate_unfoldings((0, 1, 3), (0, 2, 5), 0, 4))
    sizes = [len(x.domain) for x in xs]
    assert sizes == sorted(sizes)
    for size in set(sizes):
        labels = [x.walk.label() for x in xs if len(x.domain) == size]
        assert labels == sorted(labels) and len(set(labels)) == len(labels)
    assert all(x.valid for x in xs)
    assert all((0, 0) in sim_relation(x).vertex_pairs for x in xs)


def _naive_reductions(size, g: ColoredGraph):
    """All reductions from some colored path on [0, size-1] into g, grouped by the path's colors."""
    out = defaultdict(list)
    for vm in product(g.vertices, repeat=size):
        vcols = tuple(g.vertex_color(v) for v in vm)
        for em in product(g.edges, repeat=size - 1):
            ecols = tuple(g.edge_color(e) for e in em)
            dom = ColoredGraph(0, size - 1, vcols, ecols)
            r = Reduction(dom, g, dict(enumerate(vm)), dict(enumerate(em)))
            if validate_reduction(r).ok:
                out[(vcols, ecols)].append((vm, em))
    return out


@pytest.mark.parametrize("m, n, hm, hn, l, forbid", [
    ((0, 1, 2, 3), (0, 1, 2, 3), 4, 4, 0, None),
    ((0, 1, 3), (0, 2, 5), 5, 5, 0, None),
    ((0, 1, 3), (0, 2, 5), 5, 5, 3, None),
    ((0, 1, 3), (0, 1, 3), 5, 5, 0, 2),
])
def test_enumeration_count_matches_naive_generator(m, n, hm, hn, l, forbid):
    gm, gn = build_Gn(m, hm), build_Gn(n, hn)
    expected = set()
    for size in (2, 3, 4):
        fs, gs = _naive_reductions(size, gm), _naive_reductions(size, gn)
        for colors, flist in fs.items():
            for (fv, fe), (gv, ge) in product(flist, gs.get(colors, [])):
                if forbid in fv:
                    continue
                if any(fv[j] == 0 and gv[j] == l for j in range(size)):
                    expected.add((fv, gv, fe, ge))
    got = list(enumerate_unfoldings(m, n, l, 4, forbid, hi_m=hm, hi_n=hn))
    keys = {(tuple(x.f.vmap[v] for v in x.domain.vertices), tuple(x.g.vmap[v] for v in x.domain.vertices),
             tuple(x.f.emap[e] for e in x.domain.edges), tuple(x.g.emap[e] for e in x.domain.edges))
            for x in got}
    assert len(got) == len(keys) == len(expected)
    assert keys == expected


def test_all_walks_counts_every_start():
    m = n = (0, 1, 3)
    total = sum(1 for _ in all_walks(m, n, 4))
    per_seed = 0
    gm, gn = build_Gn(m), build_Gn(n)
    for a in gm.vertices:
        for b in gn.vertices:
            per_seed += sum(1 for _ in iter_walks(m, n, b, 4, seed_k=a, anchored=True))
    assert total == per_seed


def test_relation_classes_partition():
    m = n = (0, 1, 3)
    classes = relation_classes(m, n, 5)
    assert sum(c for _, c in classes.values()) == sum(1 for _ in all_walks(m, n, 5))
    for (vp, ep), (w, _) in classes.items():
        assert frozenset(w.vertices) == vp and frozenset(w.edges) == ep


def test_forbid_keeps_vertex_out():
    for x in enumerate_unfoldings((0, 1, 3), (0, 1, 3), 0, 5, 2):
        assert 2 not in x.ran_f
