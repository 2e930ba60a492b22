"""Closed formulas for unfoldings whose ``f`` side stays inside one arrow.

Inside an arrow the vertex colors alternate, so ``f`` and ``g`` move in
lockstep up to a sign.  When ``g`` runs over several arrows the position of
``f`` is an alternating sum of arrow lengths.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PreconditionViolated
from .graphs import Reduction, induced_subgraph, validate_reduction
from .unfoldings import Unfolding


@dataclass
class FormulaReport:
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    composites: dict[str, Reduction] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, msg: str):
        self.failures.append(msg)

    def __str__(self):
        head = f"{'pass' if self.ok else 'fail'} checked={self.checked}"
        return "\n".join([head] + self.failures + self.notes)


def _inside(values, lo, hi) -> bool:
    return all(lo <= v <= hi for v in values)


def _composite(x: Unfolding, forward: bool, report: FormulaReport) -> Reduction | None:
    """``f g^-1`` (forward) or ``g f^-1`` restricted to the induced graphs on the ranges."""
    src_map, dst_map = (x.g, x.f) if forward else (x.f, x.g)
    name = "fg^-1" if forward else "gf^-1"
    rng = set(src_map.vmap.values())
    lo, hi = min(rng), max(rng)
    if lo == hi:
        report.notes.append(f"{name}: range is the single vertex {lo}, nothing to compose")
        return None
    vmap: dict[int, set[int]] = {}
    for v in x.domain.vertices:
        vmap.setdefault(src_map.vmap[v], set()).add(dst_map.vmap[v])
    emap: dict[int, set[int]] = {}
    for e in x.domain.edges:
        se = src_map.emap[e]
        if lo <= se < hi:
            emap.setdefault(se, set()).add(dst_map.emap[e])
    for b, imgs in sorted(vmap.items()):
        if len(imgs) > 1:
            report.fail(f"{name} not single valued at vertex {b}: {sorted(imgs)}")
    for b, imgs in sorted(emap.items()):
        if len(imgs) > 1:
            report.fail(f"{name} not single valued at edge ({b},{b + 1}): {sorted(imgs)}")
    dst_rng = set(dst_map.vmap.values())
    dlo, dhi = min(dst_rng), max(dst_rng)
    if dlo == dhi:
        report.fail(f"{name}: {lo}..{hi} collapses onto the single vertex {dlo}")
        return None
    source = induced_subgraph(src_map.target, lo, hi)
    target = induced_subgraph(dst_map.target, dlo, dhi)
    r = Reduction(source, target, {b: min(i) for b, i in vmap.items()},
                  {b: min(i) for b, i in emap.items()})
    rep = validate_reduction(r)
    for v in rep.violations:
        report.fail(f"{name}: {v}")
    report.composites[name] = r
    return r


def check_within_arrow(x: Unfolding, s: int, t: int) -> FormulaReport:
    """Check ``f(i) - f(j) = (-1)^(s+t) (g(i) - g(j))`` and that both composites are reductions."""
    lo_f, hi_f = x.m.arrow(s)
    lo_g, hi_g = x.n.arrow(t)
    if not _inside(x.ran_f, lo_f, hi_f):
        raise PreconditionViolated(f"ran(f)={sorted(x.ran_f)} leaves arrow {s} = [{lo_f},{hi_f}]")
    if not _inside(x.ran_g, lo_g, hi_g):
        raise PreconditionViolated(f"ran(g)={sorted(x.ran_g)} leaves arrow {t} = [{lo_g},{hi_g}]")
    rep = FormulaReport()
    sign = -1 if (s + t) % 2 else 1
    f, g = x.f.vmap, x.g.vmap
    dom = list(x.domain.vertices)
    for i in dom:
        for j in dom:
            rep.checked += 1
            if f[i] - f[j] != sign * (g[i] - g[j]):
                rep.fail(f"(*) fails at i={i}, j={j}: f diff {f[i] - f[j]}, g diff {g[i] - g[j]}, sign {sign}")
    _composite(x, True, rep)
    _composite(x, False, rep)
    return rep


def sum_terms(n, ga: int, t: int, w: int) -> tuple[list[int], list[int], list[int]]:
    """``b_u`` for t..w, ``p_u`` for t..w-1 and ``Sigma_v`` for t..w (lists indexed from t)."""
    b = [ga] + [2 * n[u] for u in range(t + 1, w + 1)]
    p = [b[k + 1] - b[k] - 1 for k in range(len(b) - 1)]
    sigma = [0]
    for k, pu in enumerate(p):
        u = t + k
        sigma.append(sigma[-1] + (-1) ** u * pu)
    return b, p, sigma


def check_sum_formula(x: Unfolding, a: int, s: int, t: int, w: int) -> FormulaReport:
    """Check the alternating-sum formula for ``f`` and, for ``v = w - 1``, the distance bounds."""
    m, n = x.m, x.n
    f, g = x.f.vmap, x.g.vmap
    if a not in f:
        raise PreconditionViolated(f"{a} is not a domain vertex")
    lo_f, hi_f = m.arrow(s)
    if not _inside(x.ran_f, lo_f, hi_f):
        raise PreconditionViolated(f"ran(f)={sorted(x.ran_f)} leaves arrow {s} = [{lo_f},{hi_f}]")
    if w <= t:
        raise PreconditionViolated(f"need w > t, got t={t}, w={w}")
    if w >= len(n):
        raise PreconditionViolated(f"2n_{w} lies beyond the prefix of n")
    lo_t, hi_t = n.arrow(t)
    if not lo_t <= g[a] <= hi_t:
        raise PreconditionViolated(f"g(a)={g[a]} is not in arrow {t} = [{lo_t},{hi_t}]")
    top = 2 * n[w] - 1
    if not _inside(x.ran_g, g[a], top):
        raise PreconditionViolated(f"ran(g)={sorted(x.ran_g)} is not inside [{g[a]},{top}]")

    b, p, sigma = sum_terms(n, g[a], t, w)
    rep = FormulaReport()
    sgn_s = -1 if s % 2 else 1
    for i in x.domain.vertices:
        k = max(k for k in range(len(b) - 1) if b[k] <= g[i])
        v, j = t + k, g[i] - b[k]
        predicted = f[a] + sgn_s * (sigma[k] + (-1) ** v * j)
        rep.checked += 1
        if f[i] != predicted:
            rep.fail(f"(*_i) fails at i={i}: g(i)={g[i]} (v={v}, j={j}) predicts {predicted}, f(i)={f[i]}")

    if m.delta_increasing and n.delta_increasing:
        v = w - 1
        pv = p[v - t]
        spread = max(x.ran_f) - min(x.ran_f)
        rep.checked += 1
        if spread > pv:
            rep.fail(f"distance: |f(i)-f(i*)| reaches {spread} > p_{v}={pv}")
        if max(x.ran_g) < top:
            rep.checked += 1
            if spread >= pv:
                rep.fail(f"strict distance: |f(i)-f(i*)| reaches {spread} >= p_{v}={pv} with ran(g) below {top}")
    else:
        rep.notes.append("distance bounds skipped: differences not strictly increasing")
    return rep


def sum_formula_instances(x: Unfolding):
    """All ``(a, s, t, w)`` for which the sum formula applies to ``x``.

    ``a`` ranges over domain vertices where ``g`` is minimal.
    """
    m, n = x.m, x.n
    rf = x.ran_f
    s = m.arrow_of(min(rf))
    if m.arrow_of(max(rf)) != s:
        return []
    gmin, gmax = min(x.ran_g), max(x.ran_g)
    t = n.arrow_of(gmin)
    out = []
    for a in x.domain.vertices:
        if x.g.vmap[a] != gmin:
            continue
        for w in range(t + 1, len(n)):
            if gmax <= 2 * n[w] - 1:
                out.append((a, s, t, w))
    return out
