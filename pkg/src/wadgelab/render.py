"""Concentric-circle pictures of the D/E blocks of a ladder."""

from __future__ import annotations

from dataclasses import dataclass

from .annuli import RadiusLadder, classify_radius
from .errors import OutOfLadder
from .sequences import as_sequence

SHADE = "#f2f2f2"


@dataclass(frozen=True)
class Ring:
    rung: int
    radius: object
    line: str      # "solid" (rung in a D block) or "dashed"
    fill: str      # "shaded" when the annulus just inside the rung is a D block
    rung_label: str
    annulus_label: str


def rings(ladder: RadiusLadder, seq, hi_block: int) -> list[Ring]:
    """Rungs ``1..hi_block`` with their line style and the shading of the annulus below each."""
    seq = as_sequence(seq)
    if not 1 <= hi_block <= ladder.T:
        raise OutOfLadder(f"hi_block={hi_block} outside 1..{ladder.T}")
    out = []
    for t in range(1, hi_block + 1):
        rl = classify_radius(ladder, seq, ladder.rungs[t])
        mid = (ladder.rungs[t - 1] + ladder.rungs[t]) / 2
        al = classify_radius(ladder, seq, mid)
        out.append(Ring(t, ladder.rungs[t], "solid" if rl.kind == "D" else "dashed",
                        "shaded" if al.kind == "D" else "plain", str(rl), str(al)))
    return out


def _ascii(rs: list[Ring], center: str) -> str:
    lines = [f"center r=0 {center}"]
    for r in rs:
        lines.append(f"annulus ({r.rung - 1},{r.rung}) {r.fill:6} {r.annulus_label}")
        lines.append(f"rung {r.rung} r={r.radius} {r.line:6} {r.rung_label}")
    return "\n".join(lines) + "\n"


def _svg(rs: list[Ring], size: int = 400) -> str:
    outer = max(r.radius for r in rs)
    scale = (size / 2 - 10) / outer
    c = size / 2
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    # outermost first so that inner discs paint over the annuli they enclose
    for r in reversed(rs):
        fill = SHADE if r.fill == "shaded" else "white"
        dash = ' stroke-dasharray="6,4"' if r.line == "dashed" else ""
        parts.append(
            f'<circle class="rung {r.line} {r.fill}" data-rung="{r.rung}" cx="{c:g}" cy="{c:g}" '
            f'r="{float(r.radius) * scale:.3f}" fill="{fill}" stroke="black"{dash}/>'
        )
    parts.append(f'<circle class="center" cx="{c:g}" cy="{c:g}" r="2" fill="black"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_annuli(ladder: RadiusLadder, seq, hi_block: int, format: str = "ascii") -> str:
    rs = rings(ladder, seq, hi_block)
    if format == "ascii":
        return _ascii(rs, str(classify_radius(ladder, seq, 0)))
    if format == "svg":
        return _svg(rs)
    raise ValueError(f"unknown format {format!r}")


def parse_rendering(doc: str) -> dict[int, tuple[str, str]]:
    """Read ``{rung: (line, fill)}`` back out of either rendering."""
    out: dict[int, list[str]] = {}
    if doc.lstrip().startswith("<?xml"):
        import xml.etree.ElementTree as ET

        root = ET.fromstring(doc.split("?>", 1)[1])
        for el in root:
            cls = el.get("class", "").split()
            if cls and cls[0] == "rung":
                out[int(el.get("data-rung"))] = [cls[1], cls[2]]
        return {k: tuple(v) for k, v in out.items()}
    fills = {}
    for line in doc.splitlines():
        f = line.split()
        if f[0] == "annulus":
            fills[int(f[1].strip("()").split(",")[1])] = f[2]
        elif f[0] == "rung":
            out[int(f[1])] = [f[3]]
    return {k: (v[0], fills[k]) for k, v in out.items()}
