"""Annulus blocks around a center and the walks traced by radius profiles.

A ladder fixes radii ``0 = r_0 < r_1 < ... < r_T < r_outer``.  The annulus
between ``r_t`` and ``r_{t+1}`` plays the role of the edge ``(t, t+1)`` of the
sequence graph and the rung ``r_t`` the role of vertex ``t``: D blocks sit on
edges ``(2j, 2j+1)``, E blocks on ``(2j+1, 2j+2)``, and a rung belongs to a D
block exactly when its vertex has color 1.

All radii are :class:`fractions.Fraction`; there is no floating point here.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyViolation, OutOfLadder, OutOfWindow
from .graphs import build_Gn
from .sequences import Parity, as_sequence, parity_or_none
from .unfoldings import SimRelation, Unfolding, Walk, sim_relation


def rational(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class RadiusLadder:
    r_outer: Fraction
    rungs: tuple[Fraction, ...]

    def __init__(self, r_outer, rungs):
        r_outer = rational(r_outer)
        rungs = tuple(rational(r) for r in rungs)
        if not rungs or rungs[0] != 0:
            raise OutOfLadder("the first rung must be 0")
        if any(a >= b for a, b in zip(rungs, rungs[1:])):
            raise OutOfLadder("rungs must be strictly increasing")
        if rungs[-1] >= r_outer:
            raise OutOfLadder(f"rung {rungs[-1]} is not below r_outer={r_outer}")
        object.__setattr__(self, "r_outer", r_outer)
        object.__setattr__(self, "rungs", rungs)

    @classmethod
    def integers(cls, top: int, r_outer=None) -> "RadiusLadder":
        """Rungs ``0, 1, ..., top``."""
        return cls(top + 1 if r_outer is None else r_outer, range(top + 1))

    @property
    def T(self) -> int:
        return len(self.rungs) - 1

    def locate(self, r) -> tuple[int, bool]:
        """``(t, on_rung)``: ``r == r_t`` or ``r_t < r < r_{t+1}``."""
        r = rational(r)
        if r < 0 or r >= self.r_outer:
            raise OutOfLadder(f"radius {r} outside [0,{self.r_outer})")
        t = bisect.bisect_right(self.rungs, r) - 1
        if self.rungs[t] == r:
            return t, True
        if t == self.T:
            raise OutOfLadder(f"radius {r} lies above the last rung r_{t}={self.rungs[t]}")
        return t, False


@dataclass(frozen=True)
class BlockLabel:
    kind: str            # "D" or "E"
    index: int
    left: int            # rung indices bounding the annulus
    right: int
    left_closed: bool | None   # None: the prefix does not decide
    right_closed: bool | None
    on_rung: int | None = None

    @property
    def edge(self) -> tuple[int, int]:
        """Edge of the sequence graph standing for this block."""
        return (self.left, self.right)

    def __str__(self):
        br = {True: ("[", "]"), False: ("(", ")"), None: ("?", "?")}
        s = f"{self.kind}({self.index}) {br[self.left_closed][0]}{self.left},{self.right}{br[self.right_closed][1]}"
        return s if self.on_rung is None else f"{s} rung={self.on_rung}"


def _even(p: Parity | None) -> bool | None:
    return None if p is None else p is Parity.EVEN


def block_label(seq, kind: str, j: int, on_rung: int | None = None) -> BlockLabel:
    """Label of ``D(j)`` or ``E(j)`` with its boundary flags."""
    seq = as_sequence(seq)
    ej = _even(parity_or_none(seq, j))
    if kind == "D":
        return BlockLabel("D", j, 2 * j, 2 * j + 1, ej, None if ej is None else not ej, on_rung)
    if kind == "E":
        ej1 = _even(parity_or_none(seq, j + 1))
        return BlockLabel("E", j, 2 * j + 1, 2 * j + 2, ej, None if ej1 is None else not ej1, on_rung)
    raise ValueError(f"unknown block kind {kind!r}")


def rung_block(seq, t: int) -> tuple[str, int]:
    """Block owning rung ``t >= 1``."""
    j, odd_rung = divmod(t, 2)
    p = parity_or_none(seq, j)
    if p is None:
        raise OutOfWindow(f"rung {t} needs the parity of {j}, beyond the prefix")
    if odd_rung:
        return ("E", j) if p is Parity.EVEN else ("D", j)
    return ("D", j) if p is Parity.EVEN else ("E", j - 1)


def classify_radius(ladder: RadiusLadder, seq, r) -> BlockLabel:
    """Unique D/E block containing radius ``r`` (the center lies in ``D(0)``)."""
    seq = as_sequence(seq)
    t, on = ladder.locate(r)
    if t == 0:
        return block_label(seq, "D", 0)
    if not on:
        kind = "D" if t % 2 == 0 else "E"
        return block_label(seq, kind, t // 2 if kind == "D" else (t - 1) // 2)
    kind, j = rung_block(seq, t)
    return block_label(seq, kind, j, on_rung=t)


def smallest_open_interval(ladder: RadiusLadder, r) -> tuple[int, int]:
    """Least ``(i, j)`` with ``r`` in the open rung interval ``(r_i, r_j)``; the center counts as inside ``(r_0, r_1)``."""
    t, on = ladder.locate(r)
    if t == 0:
        return (0, 1)
    if on:
        if t + 1 > ladder.T:
            raise OutOfLadder(f"no rung above r_{t}")
        return (t - 1, t + 1)
    return (t, t + 1)


def compatible(x_label: BlockLabel, fx_label: BlockLabel, rel: SimRelation) -> bool:
    if x_label.kind != fx_label.kind:
        return False
    return (x_label.edge, fx_label.edge) in rel.edge_pairs


# profiles


@dataclass(frozen=True)
class Profile:
    """Piecewise-linear radii along an arc parameterized by ``[0, 1]``.

    ``points`` holds ``(parameter, alpha_radius, beta_radius)``: the distance
    of the arc point from the center on the input side, and the distance of
    its image from the center on the output side.
    """

    points: tuple[tuple[Fraction, Fraction, Fraction], ...]

    def __init__(self, points):
        pts = tuple(tuple(rational(v) for v in p) for p in points)
        if len(pts) < 2:
            raise ValueError("a profile needs at least two breakpoints")
        if pts[0][0] != 0 or pts[-1][0] != 1:
            raise ValueError("parameters must run from 0 to 1")
        if any(a[0] >= b[0] for a, b in zip(pts, pts[1:])):
            raise ValueError("parameters must be strictly increasing")
        if any(min(p[1], p[2]) < 0 for p in pts):
            raise ValueError("radii must be nonnegative")
        object.__setattr__(self, "points", pts)

    @classmethod
    def identity(cls, radii) -> "Profile":
        radii = [rational(r) for r in radii]
        k = len(radii) - 1
        return cls([(Fraction(i, k), r, r) for i, r in enumerate(radii)])

    def at(self, p) -> tuple[Fraction, Fraction]:
        p = rational(p)
        for (p0, a0, b0), (p1, a1, b1) in zip(self.points, self.points[1:]):
            if p0 <= p <= p1:
                u = (p - p0) / (p1 - p0)
                return a0 + u * (a1 - a0), b0 + u * (b1 - b0)
        raise ValueError(f"parameter {p} outside [0,1]")


def _crossings(p0, p1, r0, r1, rungs) -> list[Fraction]:
    lo, hi = min(r0, r1), max(r0, r1)
    out = []
    for r in rungs:
        if lo <= r <= hi and r0 != r1:
            out.append(p0 + (r - r0) / (r1 - r0) * (p1 - p0))
    return out


def sample_parameters(profile: Profile, alpha: RadiusLadder, beta: RadiusLadder) -> list[Fraction]:
    """Breakpoints, rung crossings on either side, and midpoints between them."""
    events = set()
    for (p0, a0, b0), (p1, a1, b1) in zip(profile.points, profile.points[1:]):
        events.update((p0, p1))
        events.update(_crossings(p0, p1, a0, a1, alpha.rungs))
        events.update(_crossings(p0, p1, b0, b1, beta.rungs))
    ev = sorted(events)
    out = [ev[0]]
    for a, b in zip(ev, ev[1:]):
        out += [(a + b) / 2, b]
    return out


@dataclass
class WalkExtraction:
    samples: list[tuple[Fraction, BlockLabel, BlockLabel]]
    transitions: list[tuple[Fraction, tuple, tuple]]
    walk: Walk
    unfolding: Unfolding


def _pick_endpoint(edge, color, graph, radius, ladder) -> int | None:
    """Endpoint of ``edge`` with the given vertex color, nearest to ``radius``."""
    options = [v for v in edge if graph.vertex_color(v) == color]
    if not options:
        return None
    return min(options, key=lambda v: (abs(ladder.rungs[v] - radius) if v <= ladder.T else 0, v))


def extract_walk(profile: Profile, m, n, alpha: RadiusLadder, beta: RadiusLadder | None = None) -> WalkExtraction:
    """Sweep the profile and assemble the unfolding it traces.

    Raises :class:`ConsistencyViolation` at the first sampled parameter where
    one side lies in a D block and the other in an E block, or where two
    consecutive block pairs cannot be joined by a color-matched vertex pair.
    """
    m, n = as_sequence(m), as_sequence(n)
    beta = beta or alpha
    params = sample_parameters(profile, alpha, beta)
    samples = []
    for p in params:
        ra, rb = profile.at(p)
        la, lb = classify_radius(alpha, m, ra), classify_radius(beta, n, rb)
        if la.kind != lb.kind:
            raise ConsistencyViolation(p, la, lb)
        samples.append((p, la, lb))

    # consecutive distinct block pairs, remembered with the first parameter showing them
    runs: list[tuple[Fraction, tuple, tuple]] = []
    for p, la, lb in samples:
        pair = (la.edge, lb.edge)
        if not runs or runs[-1][1:] != pair:
            runs.append((p, *pair))
    need_a = max(v for _, ea, _ in runs for v in ea)
    need_b = max(v for _, _, eb in runs for v in eb)
    gm = build_Gn(m, max(m.default_hi, need_a))
    gn = build_Gn(n, max(n.default_hi, need_b))

    verts: list[tuple[int, int]] = []
    edges = [(ea[0], eb[0]) for _, ea, eb in runs]
    # ends: rung positions when the arc ends on rungs, else nearest color-matched endpoints
    verts.append(_end_pair(profile, runs[0][0], runs[0][1], runs[0][2], gm, gn, alpha, beta, samples[0]))
    for (p, ea, eb), (_, ea0, eb0) in zip(runs[1:], runs):
        ra, rb = profile.at(p)
        shared_a = set(ea0) & set(ea) if ea0 != ea else None
        shared_b = set(eb0) & set(eb) if eb0 != eb else None
        if shared_a == set() or shared_b == set():
            raise ConsistencyViolation(p, f"edge {ea0}->{ea}", f"edge {eb0}->{eb}")
        a = shared_a.pop() if shared_a else None
        b = shared_b.pop() if shared_b else None
        if a is None:
            a = _pick_endpoint(ea, gn.vertex_color(b), gm, ra, alpha)
        if b is None:
            b = _pick_endpoint(eb, gm.vertex_color(a), gn, rb, beta)
        if a is None or b is None or gm.vertex_color(a) != gn.vertex_color(b):
            raise ConsistencyViolation(p, f"edge {ea0}->{ea}", f"edge {eb0}->{eb}")
        verts.append((a, b))
    verts.append(_end_pair(profile, Fraction(1), runs[-1][1], runs[-1][2], gm, gn, alpha, beta, samples[-1]))

    walk = Walk(tuple(verts), tuple(edges))
    x = Unfolding.from_walk(m, n, walk, gm=gm, gn=gn)
    transitions = [(p, ea, eb) for p, ea, eb in runs]
    return WalkExtraction(samples, transitions, walk, x)


def _end_pair(profile, p, ea, eb, gm, gn, alpha, beta, sample):
    ra, rb = profile.at(p)
    _, la, lb = sample
    a_opts = [la.on_rung] if la.on_rung is not None else list(ea)
    b_opts = [lb.on_rung] if lb.on_rung is not None else list(eb)
    if la.on_rung is None and ra == 0:
        a_opts = [0]
    if lb.on_rung is None and rb == 0:
        b_opts = [0]
    best = None
    for a in a_opts:
        for b in b_opts:
            if gm.vertex_color(a) != gn.vertex_color(b):
                continue
            score = (abs(alpha.rungs[a] - ra) + abs(beta.rungs[b] - rb), a, b)
            if best is None or score < best[0]:
                best = (score, (a, b))
    if best is None:
        raise ConsistencyViolation(p, la, lb)
    return best[1]


def check_extraction(ex: WalkExtraction) -> list[str]:
    """Problems with an extraction: invalid reductions or incompatible samples."""
    out = []
    rf, rg = ex.unfolding.validate()
    out += [f"f: {v}" for v in rf.violations] + [f"g: {v}" for v in rg.violations]
    rel = sim_relation(ex.unfolding)
    for p, la, lb in ex.samples:
        if not compatible(la, lb, rel):
            out.append(f"labels {la} / {lb} at {p} are not compatible")
    return out
