"""Acceptance criteria, each checked at its stated bound and time limit.

Every criterion records one ``PASS``/``FAIL`` line; they are printed at the end
of the pytest run and also when this file is executed directly.
"""

from __future__ import annotations

import sys
import time
from fractions import Fraction as F
from itertools import combinations
from pathlib import Path

import pytest

from wadgelab import formats
from wadgelab.annuli import Profile, RadiusLadder, block_label, check_extraction, classify_radius, extract_walk
from wadgelab.cli import main as cli_main
from wadgelab.errors import ConsistencyViolation
from wadgelab.oracles import Bounds, Campaign, run_campaign
from wadgelab.product import admissible_seeds, coverage
from wadgelab.render import parse_rendering, render_annuli
from wadgelab.sequences import Parity, TailKind, block_parity, delta, e_tail_check, generate_inequivalent_family
from wadgelab.unfoldings import enumerated_coverage

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
RESULTS: list[str] = []


def _pairs(name):
    return formats.parse_corpus((CORPUS / f"{name}.txt").read_text())


def _campaign_ok(lemma, pairs, **bounds):
    rep = run_campaign(Campaign(lemma, pairs, Bounds(**bounds)))
    bad = [r.id for r in rep.failures]
    return rep, bad


# criteria: each returns (ok, detail)

def c1_graph_coloring():
    import io
    from contextlib import redirect_stdout

    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli_main(["graph", "--seq", "0 1 2 3", "--hi", "6"])
    g = formats.parse_graph(buf.getvalue())
    vc = tuple(g.vertex_color(v) for v in g.vertices)
    ec = tuple(g.edge_color(e) for e in g.edges)
    ok = code == 0 and vc == (1, 0, 0, 1, 1, 0, 0) and ec == (1, 0, 1, 0, 1, 0)
    return ok, f"vertex colors {vc}, edge colors {ec}"


def c2_block_rungs():
    seq, lad = (0, 1, 2), RadiusLadder.integers(5, 6)
    labels = {t: classify_radius(lad, seq, t) for t in range(1, 6)}
    d = {t for t, lab in labels.items() if lab.kind == "D"}
    e = {t for t, lab in labels.items() if lab.kind == "E"}
    # flags: D(j) is [..) for Even j and (..] for Odd j; E(j) is closed on the
    # left for Even j and on the right when j+1 is Odd
    ev = lambda k: block_parity(seq, k) is Parity.EVEN
    flags_ok = all(
        (lab.left_closed, lab.right_closed) == (
            (ev(j), not ev(j)) if lab.kind == "D" else (ev(j), not ev(j + 1)))
        for lab in labels.values() for j in [lab.index] if lab.right < 5)
    flags_ok &= block_label(seq, "E", 2).right_closed is None
    render_ok = True
    for fmt in ("ascii", "svg"):
        parsed = parse_rendering(render_annuli(lad, seq, 5, fmt))
        render_ok &= all(parsed[t][0] == ("solid" if t in d else "dashed") for t in range(1, 6))
    ok = d == {3, 4} and e == {1, 2, 5} and flags_ok and render_ok
    return ok, f"D rungs {sorted(d)}, E rungs {sorted(e)}, flags {'ok' if flags_ok else 'wrong'}, render {'agrees' if render_ok else 'disagrees'}"


def _members(r, seq, lad):
    """Independent membership: left rungs of the blocks whose flagged interval contains r.

    Flags straight from the definition: D(j) is [..) when j is Even and (..]
    when Odd; E(j) is closed on the left when j is Even and on the right when
    j+1 is Odd.  The center belongs to D(0).
    """
    even = [block_parity(seq, k) is Parity.EVEN for k in range(len(seq))]
    hits = []
    for j in range(len(seq)):
        blocks = [(2 * j, 2 * j + 1, even[j], not even[j])]
        if j + 1 < len(seq):
            blocks.append((2 * j + 1, 2 * j + 2, even[j], not even[j + 1]))
        elif 2 * j + 1 <= lad.T:
            blocks.append((2 * j + 1, None, even[j], None))
        for left, right, lc, rc in blocks:
            if right is not None and right > lad.T:
                continue
            lo = lad.rungs[left]
            hi = lad.rungs[right] if right is not None else lad.r_outer
            inside = lo < r < hi or (r == lo and (lc or r == 0)) or (r == hi and right is not None and rc)
            if inside:
                hits.append(left)
    return hits


def c3_partition():
    seqs = formats.parse_sequences((CORPUS / "sequences.txt").read_text())
    violations = points = 0
    for seq in seqs:
        T = 2 * (len(seq) - 1) + 1
        lad = RadiusLadder(F(T * (T + 3) + 4, 4), [F(t * (t + 3), 4) for t in range(T + 1)])
        top = lad.rungs[-1]
        # 10,000 evenly spaced radii from the center to the last rung, then every rung
        grid = [top * F(i, 9_999) for i in range(10_000)]
        for r in grid + list(lad.rungs):
            points += 1
            lab = classify_radius(lad, seq, r)
            hi = lad.rungs[lab.right] if lab.right <= lad.T else lad.r_outer
            if _members(r, seq, lad) != [lab.left] or not lad.rungs[lab.left] <= r <= hi:
                violations += 1
    return violations == 0 and len(seqs) == 20, f"{len(seqs)} sequences, 10000-point grid plus rungs, {points} radii, {violations} violations"


def c4_sentinel():
    checks = mismatches = 0
    for m, n in _pairs("sentinel"):
        assert max(m.default_hi, n.default_hi) <= 20
        for l in admissible_seeds(m, n):
            for K in range(2, 11):
                checks += 1
                mismatches += enumerated_coverage(m, n, l, K) != coverage(m, n, l, max_steps=K - 1)
            # long walks against unbounded search
            checks += 1
            mismatches += enumerated_coverage(m, n, l, 60) != coverage(m, n, l)
    return mismatches == 0, f"{checks} comparisons, {mismatches} mismatches"


def c5_extend():
    pairs = _pairs("extend")
    rep, bad = _campaign_ok("extend", pairs, max_domain=6)
    objs = sum(r.objects for r in rep.instances)
    return rep.ok and len(pairs) >= 2, f"{len(pairs)} pairs, {rep.instances_checked} instances, {objs} extensions, failures {bad}"


def c6_within_arrow():
    pairs = _pairs("within_arrow")
    rep, bad = _campaign_ok("within_arrow", pairs, max_domain=10)
    combos = set()
    for r in rep.instances:
        parts = dict(p.split("=") for p in r.id.split("/"))
        if r.objects:
            combos.add((int(parts["s"]) % 2, int(parts["t"]) % 2))
    objs = sum(r.objects for r in rep.instances)
    return rep.ok and len(combos) == 4 and len(pairs) >= 3, \
        f"{len(pairs)} pairs, parity combos {sorted(combos)}, {objs} unfoldings, failures {bad}"


def c7_sum_formula():
    pairs = _pairs("sum_formula")
    assert [(tuple(m), tuple(n)) for m, n in pairs] == [((0, 1, 3, 6), (0, 1, 3, 6))]
    ok, parts = True, []
    for lemma in ("sum_formula", "distance"):
        rep, bad = _campaign_ok(lemma, pairs, max_domain=10)
        ok &= rep.ok
        parts.append(f"{lemma} {sum(r.objects for r in rep.instances)} instances checked, failures {bad}")
    return ok, "; ".join(parts)


def c8_tail():
    pairs = _pairs("tail")
    ineq = [(m, n) for m, n in pairs
            if e_tail_check(delta(m), delta(n), max(len(m), len(n)), 2).kind is TailKind.INEQUIVALENT]
    named = any(tuple(delta(m)) == (1, 2, 3, 4, 5, 6) and tuple(delta(n)) == (1, 3, 5, 7, 9, 11) for m, n in ineq)
    same = [(m, n) for m, n in pairs if m == n]
    rep, bad = _campaign_ok("tail_from_coverage", pairs)
    full = all(coverage(m, n, 0) == frozenset(range(m.default_hi + 1)) for m, n in same)
    ok = rep.ok and len(ineq) >= 5 and named and same and full
    return ok, f"{len(ineq)} inequivalent pairs, {len(same)} identical pairs, {rep.instances_checked} seeds, failures {bad}"


def c9_family():
    fam = generate_inequivalent_family(5, 6)
    verdicts = [e_tail_check(delta(a), delta(b), 6, 2).kind for a, b in combinations(fam, 2)]
    ok = len(fam) == 5 and all(len(s) == 6 for s in fam) and len(verdicts) == 10 and \
        all(v is TailKind.INEQUIVALENT for v in verdicts)
    return ok, f"{len(fam)} sequences, {sum(v is TailKind.INEQUIVALENT for v in verdicts)}/10 pairs inequivalent"


def c10_profiles():
    seq = (0, 1, 2, 3, 4, 5)
    lad = RadiusLadder.integers(9, 10)
    ident = extract_walk(Profile.identity([0, 9]), seq, seq, lad)
    zig = extract_walk(Profile([(0, 0, 0), (F(7, 18), F(7, 2), F(7, 2)), (F(11, 18), F(11, 2), F(3, 2)),
                                (F(17, 18), F(17, 2), F(9, 2)), (1, 9, 5)]), seq, seq, lad)
    good = not check_extraction(ident) and not check_extraction(zig)
    try:
        extract_walk(Profile([(0, 0, 0), (1, F(5, 2), F(3, 2))]), seq, seq, lad)
        at = None
    except ConsistencyViolation as exc:
        at = exc.parameter
    return good and at == F(2, 5), f"identity and zigzag {'valid' if good else 'invalid'}, violation at {at}"


CRITERIA = [
    (1, "graph coloring of 0 1 2 3", c1_graph_coloring, 1),
    (2, "blocks and rendering of 0 1 2", c2_block_rungs, 1),
    (3, "partition property", c3_partition, 30),
    (4, "engine/oracle equivalence", c4_sentinel, 300),
    (5, "extend closure", c5_extend, 120),
    (6, "within-arrow formula", c6_within_arrow, 120),
    (7, "sum formula and distance bounds", c7_sum_formula, 120),
    (8, "tail contrapositive", c8_tail, 60),
    (9, "family generation", c9_family, 1),
    (10, "profile round-trip", c10_profiles, 1),
]


def run_criterion(num, name, fn, limit):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < limit
    line = f"{'PASS' if ok else 'FAIL'} criterion {num} ({name}): {detail}; {elapsed:.2f}s (limit {limit}s)"
    RESULTS.append(line)
    print(line)
    return ok, line


@pytest.mark.parametrize("num, name, fn, limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, name, fn, limit):
    ok, line = run_criterion(num, name, fn, limit)
    assert ok, line


if __name__ == "__main__":
    sys.exit(0 if all([run_criterion(*c)[0] for c in CRITERIA]) else 1)
