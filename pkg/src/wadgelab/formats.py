"""Plain-text formats for sequences, graphs, reductions, unfoldings, ladders and profiles.

Every ``dump_*`` has a matching ``parse_*`` that rebuilds an equal object.
Blank lines and lines starting with ``#`` are ignored by the parsers.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .annuli import Profile, RadiusLadder
from .errors import FormatError, InvalidSequence
from .graphs import ColoredGraph, Reduction
from .sequences import IndexSequence
from .unfoldings import Unfolding


def _lines(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line.split())
    return out


def _int(tok: str, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"{what}: expected an integer, got {tok!r}") from None


def _frac(tok: str) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"expected a rational p/q, got {tok!r}") from None


# sequences

def parse_sequence(text: str) -> IndexSequence:
    try:
        return IndexSequence(_int(t, "sequence") for t in text.replace(",", " ").split())
    except InvalidSequence as exc:
        raise FormatError(str(exc)) from None


def parse_sequences(text: str) -> list[IndexSequence]:
    return [parse_sequence(" ".join(f)) for f in _lines(text)]


def dump_sequences(seqs) -> str:
    return "".join(" ".join(map(str, s)) + "\n" for s in seqs)


def parse_corpus(text: str) -> list[tuple[IndexSequence, IndexSequence]]:
    """Pairs from a corpus file.

    A line ``m | n`` is an explicit pair; the plain sequence lines are
    additionally paired all with all (ordered, including each with itself).
    """
    pairs, singles = [], []
    for f in _lines(text):
        line = " ".join(f)
        if "|" in line:
            a, b = line.split("|", 1)
            pairs.append((parse_sequence(a), parse_sequence(b)))
        else:
            singles.append(parse_sequence(line))
    pairs += list(product(singles, singles))
    return pairs


def dump_corpus(pairs) -> str:
    return "".join(f"{' '.join(map(str, m))} | {' '.join(map(str, n))}\n" for m, n in pairs)


# graphs

def dump_graph(g: ColoredGraph) -> str:
    out = [f"graph {g.lo} {g.hi}"]
    out += [f"v {v} {g.vertex_color(v)}" for v in g.vertices]
    out += [f"e {e} {g.edge_color(e)}" for e in g.edges]
    return "\n".join(out) + "\n"


def _graph_from(rows: list[list[str]]) -> ColoredGraph:
    head = rows[0]
    if head[0] != "graph" or len(head) != 3:
        raise FormatError(f"expected 'graph lo hi', got {' '.join(head)!r}")
    lo, hi = _int(head[1], "graph lo"), _int(head[2], "graph hi")
    vc, ec = {}, {}
    for r in rows[1:]:
        if r[0] not in ("v", "e") or len(r) != 3:
            raise FormatError(f"unexpected line in graph block: {' '.join(r)!r}")
        (vc if r[0] == "v" else ec)[_int(r[1], r[0])] = _int(r[2], "color")
    return ColoredGraph.from_maps(lo, hi, vc, ec)


def parse_graph(text: str) -> ColoredGraph:
    rows = _lines(text)
    if not rows:
        raise FormatError("empty graph file")
    return _graph_from(rows)


# reductions

def dump_reduction(r: Reduction) -> str:
    out = ["reduction", "source", dump_graph(r.source).rstrip("\n"), "target", dump_graph(r.target).rstrip("\n")]
    out += [f"f {v} {r.vmap[v]}" for v in sorted(r.vmap)]
    out += [f"fe {e} {r.emap[e]}" for e in sorted(r.emap)]
    return "\n".join(out) + "\n"


def parse_reduction(text: str) -> Reduction:
    rows = _lines(text)
    if not rows or rows[0] != ["reduction"]:
        raise FormatError("a reduction file starts with 'reduction'")
    graphs, maps = [], {"f": {}, "fe": {}}
    section = None
    block: list[list[str]] = []
    for r in rows[1:]:
        if r[0] in ("source", "target"):
            section = r[0]
            block = []
            graphs.append(block)
        elif r[0] in maps:
            maps[r[0]][_int(r[1], r[0])] = _int(r[2], r[0])
        elif section is not None:
            block.append(r)
        else:
            raise FormatError(f"unexpected line {' '.join(r)!r}")
    if len(graphs) != 2:
        raise FormatError("need a source and a target graph")
    return Reduction(_graph_from(graphs[0]), _graph_from(graphs[1]), maps["f"], maps["fe"])


# unfoldings

def dump_unfolding(x: Unfolding) -> str:
    out = ["unfolding",
           "m " + " ".join(map(str, x.m)),
           "n " + " ".join(map(str, x.n)),
           f"hi {x.gm.hi} {x.gn.hi}",
           dump_graph(x.domain).rstrip("\n")]
    d = x.domain
    out += [f"f {v} {x.f.vmap[v]}" for v in d.vertices]
    out += [f"g {v} {x.g.vmap[v]}" for v in d.vertices]
    out += [f"fe {e} {x.f.emap[e]}" for e in d.edges]
    out += [f"ge {e} {x.g.emap[e]}" for e in d.edges]
    return "\n".join(out) + "\n"


def parse_unfolding(text: str) -> Unfolding:
    from .graphs import build_Gn

    rows = _lines(text)
    if not rows or rows[0] != ["unfolding"]:
        raise FormatError("an unfolding file starts with 'unfolding'")
    m = n = hi = None
    graph_rows: list[list[str]] = []
    maps = {"f": {}, "g": {}, "fe": {}, "ge": {}}
    for r in rows[1:]:
        key = r[0]
        if key == "m":
            m = parse_sequence(" ".join(r[1:]))
        elif key == "n":
            n = parse_sequence(" ".join(r[1:]))
        elif key == "hi":
            hi = (_int(r[1], "hi"), _int(r[2], "hi"))
        elif key in maps:
            if len(r) != 3:
                raise FormatError(f"bad map line {' '.join(r)!r}")
            maps[key][_int(r[1], key)] = _int(r[2], key)
        elif key in ("graph", "v", "e"):
            graph_rows.append(r)
        else:
            raise FormatError(f"unexpected line {' '.join(r)!r}")
    if m is None or n is None or hi is None or not graph_rows:
        raise FormatError("unfolding needs m, n, hi and a domain graph")
    domain = _graph_from(graph_rows)
    gm, gn = build_Gn(m, hi[0]), build_Gn(n, hi[1])
    return Unfolding(domain, Reduction(domain, gm, maps["f"], maps["fe"]),
                     Reduction(domain, gn, maps["g"], maps["ge"]), m, n)


# ladders and profiles

def dump_ladder(ladder: RadiusLadder) -> str:
    out = [f"ladder {ladder.r_outer}"]
    out += [f"rung {t} {r}" for t, r in enumerate(ladder.rungs)]
    return "\n".join(out) + "\n"


def parse_ladder(text: str) -> RadiusLadder:
    rows = _lines(text)
    if not rows or rows[0][0] != "ladder" or len(rows[0]) != 2:
        raise FormatError("a ladder file starts with 'ladder <r_outer>'")
    rungs = {}
    for r in rows[1:]:
        if r[0] != "rung" or len(r) != 3:
            raise FormatError(f"unexpected line {' '.join(r)!r}")
        rungs[_int(r[1], "rung")] = _frac(r[2])
    if sorted(rungs) != list(range(len(rungs))):
        raise FormatError("rung indices must be 0, 1, 2, ... without gaps")
    return RadiusLadder(_frac(rows[0][1]), [rungs[t] for t in range(len(rungs))])


def dump_profile(p: Profile) -> str:
    out = ["profile"] + [f"pt {t} {a} {b}" for t, a, b in p.points]
    return "\n".join(out) + "\n"


def parse_profile(text: str) -> Profile:
    """``pt <parameter> <alpha> <beta>``; with a single radius, ``pt <parameter> <beta>`` takes the parameter as alpha radius."""
    rows = _lines(text)
    if not rows or rows[0] != ["profile"]:
        raise FormatError("a profile file starts with 'profile'")
    pts = []
    for r in rows[1:]:
        if r[0] != "pt" or len(r) not in (3, 4):
            raise FormatError(f"unexpected line {' '.join(r)!r}")
        vals = [_frac(t) for t in r[1:]]
        pts.append(tuple(vals) if len(vals) == 3 else (vals[0], vals[0], vals[1]))
    try:
        return Profile(pts)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
