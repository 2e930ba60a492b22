"""Colored interval graphs, the graphs built from index sequences, and reductions.

A colored graph has an integer interval ``[lo, hi]`` as vertex set and the
successor pairs ``(i, i + 1)`` as edges; vertices and edges carry colors in
{0, 1}.  Edges are keyed by their left endpoint throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import InvalidGraph, OutOfRange, OutOfWindow
from .sequences import Parity, as_sequence, block_parity


def edge_key(edge) -> int:
    """Normalize ``(i, i+1)``, ``(i+1, i)`` or a bare left index to the left index."""
    if isinstance(edge, int):
        return edge
    a, b = edge
    if abs(a - b) != 1:
        raise InvalidGraph(f"{edge!r} is not a successor pair")
    return min(a, b)


def edge_pair(left: int) -> tuple[int, int]:
    return (left, left + 1)


@dataclass(frozen=True)
class ColoredGraph:
    lo: int
    hi: int
    vertex_colors: tuple[int, ...]
    edge_colors: tuple[int, ...]

    def __post_init__(self):
        if self.hi - self.lo < 1:
            raise InvalidGraph(f"vertex interval [{self.lo},{self.hi}] has fewer than 2 vertices")
        if len(self.vertex_colors) != self.hi - self.lo + 1:
            raise InvalidGraph("vertex colors must cover the whole interval")
        if len(self.edge_colors) != self.hi - self.lo:
            raise InvalidGraph("edge colors must cover every successor pair")
        for c in self.vertex_colors + self.edge_colors:
            if c not in (0, 1):
                raise InvalidGraph(f"color {c!r} is not 0 or 1")

    @classmethod
    def from_maps(cls, lo: int, hi: int, vertex_color: Mapping[int, int],
                  edge_color: Mapping) -> "ColoredGraph":
        ecol = {edge_key(e): c for e, c in edge_color.items()}
        try:
            return cls(lo, hi,
                       tuple(vertex_color[v] for v in range(lo, hi + 1)),
                       tuple(ecol[i] for i in range(lo, hi)))
        except KeyError as exc:
            raise InvalidGraph(f"color map is not total: missing {exc.args[0]!r}") from None

    def __len__(self):
        return self.hi - self.lo + 1

    @property
    def vertices(self) -> range:
        return range(self.lo, self.hi + 1)

    @property
    def edges(self) -> range:
        """Left endpoints of all edges."""
        return range(self.lo, self.hi)

    def has_vertex(self, v: int) -> bool:
        return self.lo <= v <= self.hi

    def has_edge(self, e) -> bool:
        i = edge_key(e)
        return self.lo <= i < self.hi

    def vertex_color(self, v: int) -> int:
        if not self.has_vertex(v):
            raise OutOfRange(f"vertex {v} outside [{self.lo},{self.hi}]")
        return self.vertex_colors[v - self.lo]

    def edge_color(self, e) -> int:
        i = edge_key(e)
        if not self.lo <= i < self.hi:
            raise OutOfRange(f"edge ({i},{i + 1}) outside [{self.lo},{self.hi}]")
        return self.edge_colors[i - self.lo]

    def incident_edges(self, v: int) -> list[int]:
        return [i for i in (v - 1, v) if self.lo <= i < self.hi]

    def shifted(self, offset: int) -> "ColoredGraph":
        return ColoredGraph(self.lo + offset, self.hi + offset, self.vertex_colors, self.edge_colors)


def build_Gn(seq, hi: int | None = None) -> ColoredGraph:
    """Truncation ``[0, hi]`` of the colored graph attached to ``seq``.

    Vertices ``2j`` and ``2j+1`` get colors ``(1, 0)`` when ``j`` lies in an
    even block and ``(0, 1)`` when it lies in an odd block; edge ``(j, j+1)``
    has color 1 exactly when ``j`` is even.
    """
    seq = as_sequence(seq)
    if hi is None:
        hi = seq.default_hi
    if hi < 1:
        raise InvalidGraph("truncation must contain at least two vertices")
    limit = 2 * seq.last + 1
    if hi > limit:
        raise OutOfWindow(f"hi={hi} needs block parities past the prefix; at most {limit}")
    vcols = []
    for v in range(hi + 1):
        even_block = block_parity(seq, v // 2) is Parity.EVEN
        vcols.append(int(even_block) if v % 2 == 0 else int(not even_block))
    ecols = tuple(1 if j % 2 == 0 else 0 for j in range(hi))
    return ColoredGraph(0, hi, tuple(vcols), ecols)


def induced_subgraph(g: ColoredGraph, lo2: int, hi2: int) -> ColoredGraph:
    if hi2 - lo2 < 1:
        raise OutOfRange(f"[{lo2},{hi2}] has fewer than 2 vertices")
    if lo2 < g.lo or hi2 > g.hi:
        raise OutOfRange(f"[{lo2},{hi2}] is not inside [{g.lo},{g.hi}]")
    return ColoredGraph(
        lo2, hi2,
        g.vertex_colors[lo2 - g.lo:hi2 - g.lo + 1],
        g.edge_colors[lo2 - g.lo:hi2 - g.lo],
    )


@dataclass(frozen=True)
class Reduction:
    source: ColoredGraph
    target: ColoredGraph
    vmap: Mapping[int, int]
    emap: Mapping[int, int]  # left endpoint -> left endpoint

    def __init__(self, source, target, vmap, emap):
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "vmap", dict(vmap))
        object.__setattr__(self, "emap", {
            (e if type(e) is int else edge_key(e)): (img if type(img) is int else edge_key(img))
            for e, img in emap.items()})

    def __hash__(self):
        return hash((self.source, self.target, tuple(sorted(self.vmap.items())),
                     tuple(sorted(self.emap.items()))))

    def __call__(self, v: int) -> int:
        return self.vmap[v]

    def edge(self, e) -> tuple[int, int]:
        return edge_pair(self.emap[edge_key(e)])

    @property
    def range(self) -> set[int]:
        return set(self.vmap.values())


@dataclass(frozen=True)
class Violation:
    clause: str
    where: str
    detail: str

    def __str__(self):
        return f"{self.clause} at {self.where}: {self.detail}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def clauses(self) -> set[str]:
        return {v.clause for v in self.violations}

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "OK"
        return "\n".join(str(v) for v in self.violations)


def validate_reduction(r: Reduction) -> ValidationReport:
    """Check every defining clause of a reduction plus the facts derived from them."""
    src, tgt = r.source, r.target
    out: list[Violation] = []

    def bad(clause, where, detail):
        out.append(Violation(clause, where, detail))

    vmap, emap = r.vmap, r.emap
    slo, tlo, thi = src.lo, tgt.lo, tgt.hi
    svc, sec, tvc, tec = src.vertex_colors, src.edge_colors, tgt.vertex_colors, tgt.edge_colors
    for v in src.vertices:
        img = vmap.get(v)
        if img is None:
            bad("totality", f"vertex {v}", "vertex map undefined")
            continue
        if not tlo <= img <= thi:
            bad("vertex-range", f"vertex {v}", f"image {img} is not a target vertex")
        elif svc[v - slo] != tvc[img - tlo]:
            bad("vertex-color", f"vertex {v}",
                f"color {svc[v - slo]} mapped to vertex {img} of color {tvc[img - tlo]}")
    for v in vmap:
        if not src.has_vertex(v):
            bad("totality", f"vertex {v}", "vertex map defined outside the source")
    for e in src.edges:
        img = emap.get(e)
        if img is None:
            bad("totality", f"edge ({e},{e + 1})", "edge map undefined")
            continue
        if not tlo <= img < thi:
            bad("edge-range", f"edge ({e},{e + 1})", f"image ({img},{img + 1}) is not a target edge")
            continue
        if sec[e - slo] != tec[img - tlo]:
            bad("edge-color", f"edge ({e},{e + 1})",
                f"color {sec[e - slo]} mapped to ({img},{img + 1}) of color {tec[img - tlo]}")
        a, b = vmap.get(e), vmap.get(e + 1)
        if a is None or b is None:
            continue
        if (a != img and a != img + 1) or (b != img and b != img + 1):
            bad("endpoint", f"edge ({e},{e + 1})", f"images {a},{b} are not both endpoints of ({img},{img + 1})")
        if abs(a - b) > 1:
            bad("adjacency", f"edge ({e},{e + 1})", f"images {a},{b} are not adjacent or equal")
        elif a != b and img != min(a, b):
            bad("forced-edge", f"edge ({e},{e + 1})", f"distinct images {a},{b} force edge ({min(a, b)},{min(a, b) + 1})")
    for e in r.emap:
        if not src.has_edge(e):
            bad("totality", f"edge ({e},{e + 1})", "edge map defined outside the source")
    image = set(r.vmap.values())
    if image and image != set(range(min(image), max(image) + 1)):
        gaps = sorted(set(range(min(image), max(image) + 1)) - image)
        bad("interval-image", "image", f"image {sorted(image)} misses {gaps}")
    return ValidationReport(out)


def identity_reduction(g: ColoredGraph) -> Reduction:
    return Reduction(g, g, {v: v for v in g.vertices}, {e: e for e in g.edges})


def inclusion(sub: ColoredGraph, g: ColoredGraph) -> Reduction:
    """Inclusion of an induced subgraph ``sub`` into ``g``."""
    return Reduction(sub, g, {v: v for v in sub.vertices}, {e: e for e in sub.edges})


def compose(first: Reduction, second: Reduction) -> Reduction:
    """``second`` after ``first``; defined where the images of ``first`` lie in ``second``'s source."""
    vmap = {v: second.vmap[img] for v, img in first.vmap.items() if img in second.vmap}
    emap = {e: second.emap[img] for e, img in first.emap.items() if img in second.emap}
    return Reduction(first.source, second.target, vmap, emap)


def graph_from_colors(vertex_colors: Iterable[int], edge_colors: Iterable[int], lo: int = 0) -> ColoredGraph:
    vc = tuple(vertex_colors)
    return ColoredGraph(lo, lo + len(vc) - 1, vc, tuple(edge_colors))
