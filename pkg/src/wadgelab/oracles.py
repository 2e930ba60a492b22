"""Bounded verification campaigns for the lemmas about unfoldings.

A campaign expands a corpus of sequence pairs into independent instances,
checks each one and reports ``instance <id> <pass|fail>`` lines.  Instance
ids are built from the inputs, and reports list instances sorted by id, so the
outcome does not depend on corpus order or on the number of workers.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import BoundsTooTight, PremiseNotSatisfied, TruncationTooSmall
from .formats import dump_unfolding
from .formulas import check_sum_formula, check_within_arrow, sum_formula_instances
from .graphs import build_Gn
from .product import ProductGraph, admissible_seeds, coverage_report, workers_from_env
from .sequences import IndexSequence, TailKind, as_sequence, delta, e_tail_check, p_value
from .unfoldings import (Case, Unfolding, all_walks, conclusion_edges, extend_unfolding,
                         premise_edges, relation_classes, sim_relation, Walk)

LEMMAS = ("extend", "within_arrow", "sum_formula", "distance", "tail_from_coverage",
          "parity_claim", "phi_psi_equal")


@dataclass(frozen=True)
class Bounds:
    max_domain: int = 10
    hi: int | None = None           # cap on both truncations; default 2*last-1
    max_shift: int | None = None    # default: longer Delta prefix
    min_overlap: int = 2
    seed_arrows: int = 2            # seeds l <= 2 n_{seed_arrows}

    def __post_init__(self):
        if self.max_domain < 2 or self.min_overlap < 1 or self.seed_arrows < 1:
            raise ValueError("bounds must be positive")


@dataclass(frozen=True)
class Campaign:
    lemma_id: str
    corpus: tuple[tuple[IndexSequence, IndexSequence], ...]
    bounds: Bounds = Bounds()

    def __init__(self, lemma_id, corpus, bounds: Bounds | None = None):
        if lemma_id not in LEMMAS:
            raise ValueError(f"unknown lemma {lemma_id!r}; choose from {', '.join(LEMMAS)}")
        pairs = sorted({(as_sequence(m), as_sequence(n)) for m, n in corpus},
                       key=lambda p: (p[0].values, p[1].values))
        object.__setattr__(self, "lemma_id", lemma_id)
        object.__setattr__(self, "corpus", tuple(pairs))
        object.__setattr__(self, "bounds", bounds or Bounds())


@dataclass
class InstanceResult:
    id: str
    ok: bool
    objects: int = 0
    notes: list[str] = field(default_factory=list)
    certificate: list[str] = field(default_factory=list)


@dataclass
class CampaignReport:
    lemma_id: str
    instances: list[InstanceResult]
    wall_time: float
    notes: list[str] = field(default_factory=list)

    @property
    def instances_checked(self) -> int:
        return len(self.instances)

    @property
    def failures(self) -> list[InstanceResult]:
        return [r for r in self.instances if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = []
        for r in self.instances:
            out.append(f"instance {r.id} {'pass' if r.ok else 'fail'} objects={r.objects}")
            for note in r.notes:
                out.append(f"  note: {note}")
            if not r.ok:
                m, n = _pair_of(r.id)
                out.append(f"  replay: wadgelab campaign --lemma {self.lemma_id} "
                           f"--pair \"{m} | {n}\" --only '{r.id}'")
                out += ["  " + c for c in r.certificate]
        out += [f"note: {n}" for n in self.notes]
        out.append(f"campaign {self.lemma_id} checked={self.instances_checked} "
                   f"failures={len(self.failures)} time={self.wall_time:.2f}s")
        return out

    def __str__(self):
        return "\n".join(self.lines())


def _seq_id(s) -> str:
    return ",".join(map(str, s))


def _pair_of(instance_id: str) -> tuple[str, str]:
    parts = dict(p.split("=", 1) for p in instance_id.split("/"))
    return parts["m"].replace(",", " "), parts["n"].replace(",", " ")


def _truncation(seq: IndexSequence, b: Bounds) -> int:
    hi = seq.default_hi
    return hi if b.hi is None else min(hi, b.hi)


# instance generators: each returns [(id, function name, args)]

def _instances(c: Campaign) -> list[tuple[str, str, tuple]]:
    out = []
    b = c.bounds
    for m, n in c.corpus:
        base = f"m={_seq_id(m)}/n={_seq_id(n)}"
        hm, hn = _truncation(m, b), _truncation(n, b)
        if c.lemma_id == "extend":
            for case in Case:
                out.append((f"{base}/case={int(case)}", "extend", (m, n, hm, hn, b.max_domain, int(case))))
        elif c.lemma_id == "within_arrow":
            for s in range(len(m) - 1):
                for t in range(len(n) - 1):
                    if m.arrow(s)[1] <= hm and n.arrow(t)[1] <= hn:
                        out.append((f"{base}/s={s}/t={t}", "within_arrow",
                                    (m, n, hm, hn, b.max_domain, s, t)))
        elif c.lemma_id in ("sum_formula", "distance"):
            for s in range(len(m) - 1):
                if m.arrow(s)[1] <= hm:
                    out.append((f"{base}/s={s}", "sum_formula",
                                (m, n, hm, hn, b.max_domain, s, c.lemma_id)))
        else:
            upto = 2 * n[min(b.seed_arrows, len(n) - 1)]
            for l in admissible_seeds(m, n, hn, upto):
                out.append((f"{base}/l={l}", c.lemma_id, (m, n, hm, hn, l, b)))
    return out


def _certificate(x: Unfolding, problems) -> list[str]:
    return list(problems)[:5] + dump_unfolding(x).rstrip("\n").split("\n")


def _run_extend(m, n, hm, hn, max_domain, case) -> InstanceResult:
    case = Case(case)
    gm, gn = build_Gn(m, hm), build_Gn(n, hn)
    res = InstanceResult("", True)
    for verts, edges in all_walks(m, n, max_domain, hi_m=hm, hi_n=hn):
        x = None
        pairs = set(edges)
        for ea, eb in pairs:
            # the premise edge pair (ea, eb) fixes k and l for this case
            for k in (ea, ea + 1):
                for l in (eb, eb + 1):
                    if k <= 0 or l <= 0 or gm.vertex_color(k) != gn.vertex_color(l):
                        continue
                    pf, pg = premise_edges(case, k, l)
                    if (pf[0], pg[0]) != (ea, eb):
                        continue
                    cf, cg = conclusion_edges(case, k, l)
                    if not (gm.has_edge(cf) and gn.has_edge(cg)):
                        continue
                    x = x or Unfolding.from_walk(m, n, Walk(verts, edges), gm=gm, gn=gn)
                    res.objects += 1
                    problems = _extend_problems(x, k, l, case)
                    if problems:
                        res.ok = False
                        if not res.certificate:
                            res.certificate = [f"k={k} l={l}"] + _certificate(x, problems)
    if res.objects == 0:
        raise BoundsTooTight(f"case {int(case)} is never instantiated with domain <= {max_domain}")
    return res


def _extend_problems(x: Unfolding, k: int, l: int, case: Case) -> list[str]:
    try:
        y = extend_unfolding(x, k, l, case)
    except (PremiseNotSatisfied, TruncationTooSmall) as exc:
        return [f"extension refused: {exc}"]
    out = []
    rf, rg = y.validate()
    out += [f"f*: {v}" for v in rf.violations] + [f"g*: {v}" for v in rg.violations]
    old, new = sim_relation(x), sim_relation(y)
    if not (old.vertex_pairs <= new.vertex_pairs and old.edge_pairs <= new.edge_pairs):
        out.append("x* loses pairs of x")
    if conclusion_edges(case, k, l) not in new.edge_pairs:
        out.append(f"conclusion {conclusion_edges(case, k, l)} missing")
    if y.ran_f != x.ran_f | {k}:
        out.append(f"ran(f*)={sorted(y.ran_f)} != ran(f)+{{{k}}}")
    if y.ran_g != x.ran_g | {l}:
        out.append(f"ran(g*)={sorted(y.ran_g)} != ran(g)+{{{l}}}")
    if len(y.domain) != len(x.domain) + 2:
        out.append("domain did not grow by two vertices")
    return out


def _run_within_arrow(m, n, hm, hn, max_domain, s, t) -> InstanceResult:
    res = InstanceResult("", True)
    classes = relation_classes(m, n, max_domain, hi_m=hm, hi_n=hn,
                               f_window=m.arrow(s), g_window=n.arrow(t))
    for walk, count in classes.values():
        x = Unfolding.from_walk(m, n, walk, hm, hn)
        res.objects += count
        rep = check_within_arrow(x, s, t)
        if not rep.ok:
            res.ok = False
            res.certificate = res.certificate or _certificate(x, rep.failures)
    res.notes.append(f"{len(classes)} distinct relations")
    return res


def _run_sum_formula(m, n, hm, hn, max_domain, s, which) -> InstanceResult:
    res = InstanceResult("", True)
    if which == "distance" and not (m.delta_increasing and n.delta_increasing):
        raise BoundsTooTight("the distance bounds need strictly increasing differences")
    classes = relation_classes(m, n, max_domain, hi_m=hm, hi_n=hn, f_window=m.arrow(s))
    for walk, count in classes.values():
        x = Unfolding.from_walk(m, n, walk, hm, hn)
        for args in sum_formula_instances(x):
            rep = check_sum_formula(x, *args)
            res.objects += count
            fails = [f for f in rep.failures if f.startswith(("distance", "strict")) == (which == "distance")]
            if fails:
                res.ok = False
                res.certificate = res.certificate or [f"a,s,t,w={args}"] + _certificate(x, fails)
    return res


def _tail_verdict(m, n, b: Bounds):
    dm, dn = delta(m), delta(n)
    shift = b.max_shift if b.max_shift is not None else max(len(dm), len(dn))
    return e_tail_check(dm, dn, shift, b.min_overlap)


def _run_tail(m, n, hm, hn, l, b: Bounds) -> InstanceResult:
    res = InstanceResult("", True, objects=1)
    verdict = _tail_verdict(m, n, b)
    rep = coverage_report(m, n, l, hi_m=hm, hi_n=hn)
    res.notes.append(f"{verdict}; {rep}")
    if verdict.kind is TailKind.INEQUIVALENT:
        if not rep.proper:
            res.ok = False
            res.certificate = [f"inequivalent pair but coverage {rep.interval} is not a proper initial interval"]
    elif m == n and l == 0 and not rep.full:
        res.ok = False
        res.certificate = [f"identical sequences but coverage {rep.interval} is not full"]
    else:
        res.notes.append("hypothesis vacuous: pair is not window-inequivalent")
    return res


def _full_coverage(m, n, hm, hn, l) -> ProductGraph | None:
    pg = ProductGraph(m, n, hm, hn)
    rep = coverage_report(m, n, l, hi_m=hm, hi_n=hn)
    return pg if rep.full else None


def phi_psi(m, n, l: int):
    """``(Phi, Psi, p, q)``: index lists ``[u, ...]``, ``[v, ...]`` for the seed ``l`` and the arrow lengths."""
    m, n = as_sequence(m), as_sequence(n)
    t = n.arrow_of(l)
    p = [p_value(m, u) for u in range(len(m) - 1)]
    q = [p_value(n, v) for v in range(len(n) - 1)]
    floor = max(p[0], q[t])
    return [u for u in range(len(p)) if p[u] > floor], [v for v in range(len(q)) if q[v] > floor], p, q


def _run_parity(m, n, hm, hn, l, b: Bounds) -> InstanceResult:
    res = InstanceResult("", True)
    if not (m.delta_increasing and n.delta_increasing):
        res.notes.append("skipped: differences not strictly increasing")
        return res
    pg = _full_coverage(m, n, hm, hn, l)
    if pg is None:
        res.notes.append("hypothesis not met: coverage is not full")
        return res
    comp = pg.component((0, l))
    phi, psi, p, q = phi_psi(m, n, l)
    for (U, P, Q, flip) in ((phi, p, q, False), (psi, q, p, True)):
        for u in U:
            v = next((v for v in range(len(Q)) if P[u] <= Q[v]), None)
            if v is None:
                continue
            mu, nv = (n, m) if flip else (m, n)
            a, bb = 2 * mu[u + 1] - 1, 2 * nv[v] + P[u]
            state = (bb, a) if flip else (a, bb)
            if state[0] > hm or state[1] > hn:
                continue
            res.objects += 1
            if state not in comp or (u - v) % 2:
                res.ok = False
                side = "Psi" if flip else "Phi"
                res.certificate.append(f"{side}: u={u} v={v} state {state} reachable={state in comp}")
    return res


def _run_phi_psi(m, n, hm, hn, l, b: Bounds) -> InstanceResult:
    res = InstanceResult("", True)
    if not (m.delta_increasing and n.delta_increasing):
        res.notes.append("skipped: differences not strictly increasing")
        return res
    if _full_coverage(m, n, hm, hn, l) is None:
        res.notes.append("hypothesis not met: coverage is not full")
        return res
    phi, psi, p, q = phi_psi(m, n, l)
    ps, qs = [p[u] for u in phi], [q[v] for v in psi]
    k = min(len(ps), len(qs))
    res.objects = k
    if ps[:k] != qs[:k]:
        res.ok = False
        res.certificate = [f"Phi={ps} Psi={qs} disagree on the common window"]
    res.notes.append(f"Phi={ps} Psi={qs}")
    return res


_RUNNERS = {"extend": _run_extend, "within_arrow": _run_within_arrow, "sum_formula": _run_sum_formula,
            "tail_from_coverage": _run_tail, "parity_claim": _run_parity, "phi_psi_equal": _run_phi_psi}


def _run_one(job) -> InstanceResult:
    iid, name, args = job
    try:
        r = _RUNNERS[name](*args)
    except BoundsTooTight as exc:
        r = InstanceResult(iid, False, certificate=[f"BoundsTooTight: {exc}"])
    r.id = iid
    return r


def run_campaign(c: Campaign, workers: int | None = None, only: str | None = None) -> CampaignReport:
    workers = workers or workers_from_env()
    start = time.perf_counter()
    jobs = sorted(_instances(c), key=lambda j: j[0])
    if only is not None:
        jobs = [j for j in jobs if j[0] == only]
    if not jobs:
        raise BoundsTooTight(f"campaign {c.lemma_id} has no instance within the bounds")
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    notes = []
    if all(r.objects == 0 for r in results):
        notes.append("no instance met its hypothesis; nothing was checked")
        for r in results:
            r.ok = False
            r.certificate.append("BoundsTooTight: hypothesis never instantiated")
    return CampaignReport(c.lemma_id, results, time.perf_counter() - start, notes)
