"""Coverage of U-sets by reachability in the synchronized product graph.

States are color-matched vertex pairs ``(a, b)`` of the two truncated graphs.
Two states are adjacent when one step of an unfolding can move between them:
each side moves to a neighbour along the joining edge or stays put on an
incident edge, and the two edges used have the same color.  The union of
``ran(f)`` over all unfoldings through a seed is the first projection of the
seed's connected component.
"""

from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import SeedInvalid
from .graphs import ColoredGraph, build_Gn
from .sequences import IndexSequence, as_sequence

State = tuple[int, int]


def _moves(g: ColoredGraph, v: int) -> list[tuple[int, int]]:
    """(next vertex, edge color) options for one side of a step."""
    out = []
    for w in (v - 1, v + 1):
        if g.has_vertex(w):
            out.append((w, g.edge_color((min(v, w), min(v, w) + 1))))
    for e in g.incident_edges(v):
        out.append((v, g.edge_color(e)))
    return out


class ProductGraph:
    def __init__(self, m, n, hi_m: int | None = None, hi_n: int | None = None,
                 forbid_f_vertex: int | None = None, forbid_g_vertex: int | None = None):
        self.m, self.n = as_sequence(m), as_sequence(n)
        self.gm = build_Gn(self.m, hi_m)
        self.gn = build_Gn(self.n, hi_n)
        self.forbid_f_vertex = forbid_f_vertex
        self.forbid_g_vertex = forbid_g_vertex
        self._moves_m = {a: _moves(self.gm, a) for a in self.gm.vertices}
        self._moves_n = {b: _moves(self.gn, b) for b in self.gn.vertices}

    def is_state(self, s: State) -> bool:
        a, b = s
        return (self.gm.has_vertex(a) and self.gn.has_vertex(b)
                and a != self.forbid_f_vertex and b != self.forbid_g_vertex
                and self.gm.vertex_color(a) == self.gn.vertex_color(b))

    def neighbours(self, s: State) -> set[State]:
        """Adjacent states, including ``s`` itself when a stationary step exists."""
        a, b = s
        out = set()
        for a2, ca in self._moves_m[a]:
            for b2, cb in self._moves_n[b]:
                if ca == cb and self.is_state((a2, b2)):
                    out.add((a2, b2))
        return out

    def component(self, seed: State, max_steps: int | None = None) -> set[State]:
        """States reachable from ``seed`` (within ``max_steps`` steps when given).

        A seed with no step at all lies on no unfolding; the result is then empty.
        """
        if not self.is_state(seed) or not self.neighbours(seed):
            return set()
        seen = {seed}
        frontier = deque([(seed, 0)])
        while frontier:
            s, d = frontier.popleft()
            if max_steps is not None and d >= max_steps:
                continue
            for t in self.neighbours(s):
                if t not in seen:
                    seen.add(t)
                    frontier.append((t, d + 1))
        return seen

    def reachable(self, seed: State, target: State) -> bool:
        return target in self.component(seed)


@dataclass(frozen=True)
class CoverageReport:
    m: IndexSequence
    n: IndexSequence
    l: int
    forbid: int | None
    hi_m: int
    hi_n: int
    vertices: frozenset[int]
    max_steps: int | None = None

    @property
    def interval(self) -> tuple[int, int] | None:
        if not self.vertices:
            return None
        return min(self.vertices), max(self.vertices)

    @property
    def full(self) -> bool:
        return self.interval == (0, self.hi_m)

    @property
    def proper(self) -> bool:
        """Nonempty initial interval strictly inside the truncation."""
        return bool(self.vertices) and not self.full

    def __str__(self):
        seq = lambda s: ",".join(map(str, s))  # noqa: E731
        forbid = "-" if self.forbid is None else str(self.forbid)
        iv = self.interval
        shown = "[]" if iv is None else f"[{iv[0]},{iv[1]}]"
        return (f"coverage m={seq(self.m)} n={seq(self.n)} l={self.l} forbid={forbid} "
                f"hi={self.hi_m} -> {shown}")


def coverage_report(m, n, l: int, forbid_f_vertex: int | None = None, *,
                    hi_m: int | None = None, hi_n: int | None = None,
                    max_steps: int | None = None,
                    forbid_g_vertex: int | None = None) -> CoverageReport:
    pg = ProductGraph(m, n, hi_m, hi_n, forbid_f_vertex, forbid_g_vertex)
    if not pg.gn.has_vertex(l):
        raise SeedInvalid(f"seed {l} outside G_n truncation [0,{pg.gn.hi}]")
    if pg.gm.vertex_color(0) != pg.gn.vertex_color(l):
        raise SeedInvalid(f"c_m(0)={pg.gm.vertex_color(0)} differs from c_n({l})={pg.gn.vertex_color(l)}")
    comp = pg.component((0, l), max_steps)
    verts = frozenset(a for a, _ in comp)
    if verts:
        lo, hi = min(verts), max(verts)
        assert lo == 0 and verts == frozenset(range(lo, hi + 1)), f"coverage {sorted(verts)} is not an interval"
    return CoverageReport(pg.m, pg.n, l, forbid_f_vertex, pg.gm.hi, pg.gn.hi, verts, max_steps)


def coverage(m, n, l: int, forbid_f_vertex: int | None = None, *,
             hi_m: int | None = None, hi_n: int | None = None,
             max_steps: int | None = None, forbid_g_vertex: int | None = None) -> frozenset[int]:
    """Union of ``ran(f)`` over all unfoldings through ``(0, l)`` within the truncations."""
    return coverage_report(m, n, l, forbid_f_vertex, hi_m=hi_m, hi_n=hi_n,
                           max_steps=max_steps, forbid_g_vertex=forbid_g_vertex).vertices


def admissible_seeds(m, n, hi_n: int | None = None, upto: int | None = None) -> list[int]:
    """Seeds ``l`` of ``G_n`` with the color of vertex 0 of ``G_m`` (that is, color 1)."""
    gn = build_Gn(as_sequence(n), hi_n)
    top = gn.hi if upto is None else min(upto, gn.hi)
    return [l for l in range(0, top + 1) if gn.vertex_color(l) == 1]


def workers_from_env(default: int = 1) -> int:
    try:
        return max(1, int(os.environ.get("WADGELAB_WORKERS", default)))
    except ValueError:
        return default


def coverage_many(jobs, workers: int | None = None) -> list[CoverageReport]:
    """Coverage for several ``(m, n, l, forbid)`` jobs; results keep the job order."""
    workers = workers or workers_from_env()
    run = lambda job: coverage_report(*job)  # noqa: E731
    if workers == 1:
        return [run(j) for j in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, jobs))
