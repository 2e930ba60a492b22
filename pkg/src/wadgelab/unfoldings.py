"""Unfoldings of two sequence graphs, the relation they induce, and their enumeration.

An unfolding is a finite colored path ``I`` with two reductions ``f: I -> G_m``
and ``g: I -> G_n``.  Internally it is often handled as a *synchronized walk*:
the list of vertex pairs ``(f(i), g(i))`` along the domain together with the
edge pairs ``(f(i,i+1), g(i,i+1))`` between them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .errors import PremiseNotSatisfied, SeedInvalid, TruncationTooSmall
from .graphs import ColoredGraph, Reduction, build_Gn, edge_pair, validate_reduction
from .sequences import IndexSequence, Parity, as_sequence, block_parity

Pair = tuple[int, int]


@dataclass(frozen=True)
class Walk:
    """Synchronized walk: ``k`` vertex pairs and ``k - 1`` edge pairs (edges keyed by left end)."""

    vertices: tuple[Pair, ...]
    edges: tuple[Pair, ...]

    def __post_init__(self):
        if len(self.vertices) < 2 or len(self.edges) != len(self.vertices) - 1:
            raise ValueError("a walk needs at least two vertex pairs and one edge pair per step")

    def __len__(self):
        return len(self.vertices)

    def label(self) -> tuple[int, ...]:
        """Flat step labels used for the deterministic enumeration order."""
        out: list[int] = []
        for i, (a, b) in enumerate(self.vertices):
            out += (a, b)
            if i < len(self.edges):
                out += self.edges[i]
        return tuple(out)

    def reversed(self) -> "Walk":
        return Walk(self.vertices[::-1], self.edges[::-1])


@dataclass(frozen=True)
class Unfolding:
    domain: ColoredGraph
    f: Reduction
    g: Reduction
    m: IndexSequence
    n: IndexSequence

    @classmethod
    def from_walk(cls, m, n, walk: Walk, hi_m: int | None = None, hi_n: int | None = None,
                  lo: int = 0, gm: ColoredGraph | None = None, gn: ColoredGraph | None = None):
        """Assemble an unfolding whose domain colors are read off the ``f`` side."""
        m, n = as_sequence(m), as_sequence(n)
        gm = gm or build_Gn(m, hi_m)
        gn = gn or build_Gn(n, hi_n)
        k = len(walk.vertices)
        vcols = tuple(gm.vertex_color(a) for a, _ in walk.vertices)
        ecols = tuple(gm.edge_color(ea) for ea, _ in walk.edges)
        domain = ColoredGraph(lo, lo + k - 1, vcols, ecols)
        f = Reduction(domain, gm, {lo + i: a for i, (a, _) in enumerate(walk.vertices)},
                      {lo + i: ea for i, (ea, _) in enumerate(walk.edges)})
        g = Reduction(domain, gn, {lo + i: b for i, (_, b) in enumerate(walk.vertices)},
                      {lo + i: eb for i, (_, eb) in enumerate(walk.edges)})
        return cls(domain, f, g, m, n)

    @cached_property
    def walk(self) -> Walk:
        d = self.domain
        return Walk(tuple((self.f.vmap[v], self.g.vmap[v]) for v in d.vertices),
                    tuple((self.f.emap[e], self.g.emap[e]) for e in d.edges))

    @property
    def gm(self) -> ColoredGraph:
        return self.f.target

    @property
    def gn(self) -> ColoredGraph:
        return self.g.target

    def canonical(self) -> "Unfolding":
        """Same unfolding with its domain shifted to start at 0."""
        if self.domain.lo == 0:
            return self
        return Unfolding.from_walk(self.m, self.n, self.walk, gm=self.gm, gn=self.gn)

    def key(self):
        """Identity up to an integer shift of the domain."""
        return (self.m, self.n, self.gm.hi, self.gn.hi, self.walk.label(),
                self.domain.vertex_colors, self.domain.edge_colors)

    @property
    def ran_f(self) -> set[int]:
        return set(self.f.vmap.values())

    @property
    def ran_g(self) -> set[int]:
        return set(self.g.vmap.values())

    def validate(self):
        """Reports for ``f`` and ``g``, plus a check that both share the domain."""
        rf, rg = validate_reduction(self.f), validate_reduction(self.g)
        return rf, rg

    @property
    def valid(self) -> bool:
        rf, rg = self.validate()
        return rf.ok and rg.ok and self.f.source == self.g.source == self.domain


@dataclass(frozen=True)
class SimRelation:
    vertex_pairs: frozenset[Pair]
    edge_pairs: frozenset[tuple[Pair, Pair]]

    def related(self, k: int, l: int) -> bool:
        return (k, l) in self.vertex_pairs

    def edges_related(self, e, e2) -> bool:
        return (tuple(e), tuple(e2)) in self.edge_pairs


def sim_relation(x: Unfolding) -> SimRelation:
    d = x.domain
    vp = frozenset((x.f.vmap[j], x.g.vmap[j]) for j in d.vertices)
    ep = frozenset((edge_pair(x.f.emap[u]), edge_pair(x.g.emap[u])) for u in d.edges)
    return SimRelation(vp, ep)


def base_unfolding(m, n, l: int, hi_m: int | None = None, hi_n: int | None = None) -> Unfolding:
    """Two-vertex unfolding relating ``(0, 1)`` in ``G_m`` to the first edge of block ``l`` of ``G_n``.

    ``f`` sends both vertices to 0; ``g`` sends both to ``2l`` when ``l`` is in an
    even block of ``n`` and to ``2l + 1`` otherwise.  Both vertices and the edge
    have color 1.
    """
    n = as_sequence(n)
    b = 2 * l if block_parity(n, l) is Parity.EVEN else 2 * l + 1
    walk = Walk(((0, b), (0, b)), ((0, 2 * l),))
    return Unfolding.from_walk(m, n, walk, hi_m, hi_n)


class Case(enum.IntEnum):
    """Premise shapes of the extension step, numbered as in the lemma."""

    UP_UP = 1        # (k,k+1) ~ (l,l+1)   gives (k-1,k) ~ (l-1,l)
    DOWN_DOWN = 2    # (k-1,k) ~ (l-1,l)   gives (k,k+1) ~ (l,l+1)
    UP_DOWN = 3      # (k,k+1) ~ (l-1,l)   gives (k-1,k) ~ (l,l+1)
    DOWN_UP = 4      # (k-1,k) ~ (l,l+1)   gives (k,k+1) ~ (l-1,l)


# (premise uses the upper edge on the f side, premise uses the upper edge on the g side)
_UPPER = {Case.UP_UP: (True, True), Case.DOWN_DOWN: (False, False),
          Case.UP_DOWN: (True, False), Case.DOWN_UP: (False, True)}


def premise_edges(case: Case, k: int, l: int) -> tuple[Pair, Pair]:
    uf, ug = _UPPER[Case(case)]
    return ((k, k + 1) if uf else (k - 1, k)), ((l, l + 1) if ug else (l - 1, l))


def conclusion_edges(case: Case, k: int, l: int) -> tuple[Pair, Pair]:
    uf, ug = _UPPER[Case(case)]
    return ((k - 1, k) if uf else (k, k + 1)), ((l - 1, l) if ug else (l, l + 1))


def extend_unfolding(x: Unfolding, k: int, l: int, case) -> Unfolding:
    """Insert a stationary step at ``(k, l)`` that realizes the case's conclusion edge pair.

    The domain edge ``(j, j+1)`` carrying the premise pair is doubled and a new
    edge between the copies is sent to the other edges at ``k`` and ``l``.  The
    domain grows from ``[u, u*]`` to ``[u-1, u*+1]``.
    """
    case = Case(case)
    gm, gn = x.gm, x.gn
    if k <= 0 or l <= 0:
        raise PremiseNotSatisfied(f"k and l must be positive, got k={k}, l={l}")
    if not (gm.has_vertex(k) and gn.has_vertex(l)):
        raise TruncationTooSmall(f"({k},{l}) lies outside the truncations")
    if gm.vertex_color(k) != gn.vertex_color(l):
        raise PremiseNotSatisfied(f"colors differ: c_m({k})={gm.vertex_color(k)}, c_n({l})={gn.vertex_color(l)}")
    pf, pg = premise_edges(case, k, l)
    cf, cg = conclusion_edges(case, k, l)
    if not (gm.has_edge(pf) and gn.has_edge(pg)):
        raise PremiseNotSatisfied(f"premise edges {pf}, {pg} are not in the truncations")
    d = x.domain
    j = next((u for u in d.edges if x.f.emap[u] == pf[0] and x.g.emap[u] == pg[0]), None)
    if j is None:
        raise PremiseNotSatisfied(f"{pf} ~ {pg} does not hold")
    if not (gm.has_edge(cf) and gn.has_edge(cg)):
        raise TruncationTooSmall(f"conclusion edges {cf}, {cg} exceed the truncations")

    lo, hi = d.lo - 1, d.hi + 1
    vcol, ecol, fv, gv, fe, ge = {}, {}, {}, {}, {}, {}
    for i in range(lo, hi + 1):
        if i <= j - 1:
            src = i + 1
        elif i >= j + 2:
            src = i - 1
        else:
            src = None
        if src is None:
            vcol[i], fv[i], gv[i] = gm.vertex_color(k), k, l
        else:
            vcol[i], fv[i], gv[i] = d.vertex_color(src), x.f.vmap[src], x.g.vmap[src]
    for i in range(lo, hi):
        if i <= j - 1:
            src = i + 1
        elif i >= j + 1:
            src = i - 1
        else:
            src = None
        if src is None:
            ecol[i] = 1 - gm.edge_color(pf)
            fe[i], ge[i] = cf[0], cg[0]
        else:
            ecol[i], fe[i], ge[i] = d.edge_color(src), x.f.emap[src], x.g.emap[src]
    domain = ColoredGraph.from_maps(lo, hi, vcol, ecol)
    return Unfolding(domain, Reduction(domain, gm, fv, fe), Reduction(domain, gn, gv, ge), x.m, x.n)


def _truncations(m, n, hi_m, hi_n):
    m, n = as_sequence(m), as_sequence(n)
    return m, n, build_Gn(m, hi_m), build_Gn(n, hi_n)


def _steps(gm: ColoredGraph, gn: ColoredGraph, a: int, b: int, f_ok, g_ok):
    """All single steps out of ``(a, b)`` allowed by the reduction clauses.

    For every edge at ``a`` and every edge at ``b`` of equal color, the next
    vertex pair ranges over endpoint pairs of equal color.
    """
    out = []
    for ea in gm.incident_edges(a):
        ca = gm.edge_color(ea)
        for eb in gn.incident_edges(b):
            if gn.edge_color(eb) != ca:
                continue
            for a2 in (ea, ea + 1):
                if not f_ok(a2):
                    continue
                for b2 in (eb, eb + 1):
                    if g_ok(b2) and gm.vertex_color(a2) == gn.vertex_color(b2):
                        out.append((ea, eb, a2, b2))
    out.sort()
    return out


def _window(window, graph):
    lo, hi = window if window is not None else (graph.lo, graph.hi)
    return lambda v: lo <= v <= hi


def iter_walks(m, n, l: int, max_domain: int, forbid_f_vertex: int | None = None, *,
               hi_m: int | None = None, hi_n: int | None = None, seed_k: int = 0,
               anchored: bool = False, simple: bool = False, f_window=None, g_window=None,
               forbid_g_vertex: int | None = None) -> Iterator[Walk]:
    """Synchronized walks behind :func:`enumerate_unfoldings`, in the same order."""
    m, n, gm, gn = _truncations(m, n, hi_m, hi_n)
    seed = (seed_k, l)
    fin, gin = _window(f_window, gm), _window(g_window, gn)
    f_ok = lambda v: fin(v) and v != forbid_f_vertex  # noqa: E731
    g_ok = lambda v: gin(v) and v != forbid_g_vertex  # noqa: E731
    if not (gm.has_vertex(seed_k) and gn.has_vertex(l) and f_ok(seed_k) and g_ok(l)):
        return
    if gm.vertex_color(seed_k) != gn.vertex_color(l):
        return
    cache: dict[Pair, list] = {}

    def steps(a, b):
        key = (a, b)
        if key not in cache:
            cache[key] = _steps(gm, gn, a, b, f_ok, g_ok)
        return cache[key]

    # forward extensions of the seed, grouped by number of steps
    def extend(prefixes):
        out = []
        for verts, edges in prefixes:
            a, b = verts[-1]
            for ea, eb, a2, b2 in steps(a, b):
                if simple and (a2, b2) in verts:
                    continue
                out.append((verts + ((a2, b2),), edges + ((ea, eb),)))
        return out

    layers = [[((seed,), ())]]
    for _ in range(max_domain - 1):
        layers.append(extend(layers[-1]))

    for size in range(2, max_domain + 1):
        found = []
        if anchored:
            found = [Walk(v, e) for v, e in layers[size - 1]]
        else:
            # the seed sits at its first occurrence p; the part before it avoids the seed
            for p in range(size):
                left = [(v, e) for v, e in layers[p] if seed not in v[1:]]
                right = layers[size - 1 - p]
                for lv, le in left:
                    rv_pre, re_pre = lv[::-1], le[::-1]
                    for rv, re in right:
                        found.append(Walk(rv_pre + rv[1:], re_pre + re))
        found.sort(key=Walk.label)
        yield from found


def enumerate_unfoldings(m, n, l: int, max_domain: int, forbid_f_vertex: int | None = None, *,
                         hi_m: int | None = None, hi_n: int | None = None, seed_k: int = 0,
                         anchored: bool = False, simple: bool = False, f_window=None,
                         g_window=None, forbid_g_vertex: int | None = None) -> Iterator[Unfolding]:
    """Every unfolding up to domain shift with at most ``max_domain`` vertices through ``(seed_k, l)``.

    The stream is ordered by domain size, then lexicographically on the walk.
    ``forbid_f_vertex`` keeps that vertex out of ``ran(f)``.  ``anchored``
    keeps only unfoldings whose first domain vertex is the seed (every
    unfolding through the seed splits into two of those) and ``simple`` drops
    walks that revisit a vertex pair.  ``f_window`` and
    ``g_window`` confine the ranges to vertex intervals.
    ``forbid_g_vertex`` is an experimental g-side analogue of the forbid constraint.
    """
    m, n, gm, gn = _truncations(m, n, hi_m, hi_n)
    for w in iter_walks(m, n, l, max_domain, forbid_f_vertex, hi_m=gm.hi, hi_n=gn.hi,
                        seed_k=seed_k, anchored=anchored, simple=simple, f_window=f_window,
                        g_window=g_window, forbid_g_vertex=forbid_g_vertex):
        yield Unfolding.from_walk(m, n, w, gm=gm, gn=gn)


def enumerated_coverage(m, n, l: int, max_domain: int, forbid_f_vertex: int | None = None, *,
                        hi_m: int | None = None, hi_n: int | None = None) -> frozenset[int]:
    """Union of ``ran(f)`` over the enumeration stream; the oracle side of coverage.

    Only anchored walks without repeated vertex pairs are visited.  That loses
    nothing: a walk through the seed splits at the seed into two anchored
    walks, and every vertex pair on an anchored walk is the end of a shorter
    repetition-free anchored walk.
    """
    m, n, gm, gn = _truncations(m, n, hi_m, hi_n)
    if gm.vertex_color(0) != gn.vertex_color(l):
        raise SeedInvalid(f"c_m(0)={gm.vertex_color(0)} differs from c_n({l})={gn.vertex_color(l)}")
    out: set[int] = set()
    for w in iter_walks(m, n, l, max_domain, forbid_f_vertex, hi_m=gm.hi, hi_n=gn.hi,
                         anchored=True, simple=True):
        out.update(a for a, _ in w.vertices)
    return frozenset(out)


def all_walks(m, n, max_domain: int, *, hi_m: int | None = None, hi_n: int | None = None,
              f_window=None, g_window=None) -> Iterator[tuple[tuple[Pair, ...], tuple[Pair, ...]]]:
    """Every synchronized walk with 2..max_domain vertex pairs inside the windows, any start.

    Yields ``(vertex_pairs, edge_pairs)`` tuples depth first; each unfolding up
    to domain shift appears exactly once.
    """
    m, n, gm, gn = _truncations(m, n, hi_m, hi_n)
    f_ok, g_ok = _window(f_window, gm), _window(g_window, gn)
    cache: dict[Pair, list] = {}

    def steps(a, b):
        if (a, b) not in cache:
            cache[(a, b)] = _steps(gm, gn, a, b, f_ok, g_ok)
        return cache[(a, b)]

    starts = [(a, b) for a in gm.vertices if f_ok(a) for b in gn.vertices
              if g_ok(b) and gm.vertex_color(a) == gn.vertex_color(b)]
    for s in starts:
        stack = [((s,), ())]
        while stack:
            verts, edges = stack.pop()
            if len(verts) >= 2:
                yield verts, edges
            if len(verts) < max_domain:
                a, b = verts[-1]
                for ea, eb, a2, b2 in reversed(steps(a, b)):
                    stack.append((verts + ((a2, b2),), edges + ((ea, eb),)))


def relation_classes(m, n, max_domain: int, **kw) -> dict:
    """Group :func:`all_walks` by the relation they induce.

    Returns ``{(vertex_pairs, edge_pairs): (first walk, number of walks)}``.
    Any statement that only depends on ``~_xi`` can be checked once per class.
    """
    out: dict = {}
    for verts, edges in all_walks(m, n, max_domain, **kw):
        key = (frozenset(verts), frozenset(edges))
        hit = out.get(key)
        if hit is None:
            out[key] = (Walk(verts, edges), 1)
        else:
            out[key] = (hit[0], hit[1] + 1)
    return out
