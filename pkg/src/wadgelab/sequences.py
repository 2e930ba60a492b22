"""Index sequences, their difference sequences, and finite-window tail equivalence.

An index sequence is a finite prefix ``n_0 = 0 < n_1 < ... < n_{L-1}`` of a
strictly increasing sequence of naturals.  Its blocks ``[n_i, n_{i+1})`` are
called even or odd according to the parity of ``i``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import Infeasible, InvalidSequence, OutOfWindow


class Parity(enum.Enum):
    EVEN = 0
    ODD = 1

    @classmethod
    def of(cls, i: int) -> "Parity":
        return cls.EVEN if i % 2 == 0 else cls.ODD

    def __str__(self):
        return self.name.capitalize()


@dataclass(frozen=True)
class IndexSequence:
    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        vals = tuple(int(v) for v in values)
        if len(vals) < 2:
            raise InvalidSequence(f"need at least two entries, got {vals}")
        if vals[0] != 0:
            raise InvalidSequence(f"sequence must start at 0, got {vals}")
        for a, b in zip(vals, vals[1:]):
            if not a < b:
                raise InvalidSequence(f"sequence must be strictly increasing: {vals}")
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __str__(self):
        return " ".join(map(str, self.values))

    @property
    def last(self) -> int:
        return self.values[-1]

    @property
    def delta_increasing(self) -> bool:
        d = delta(self).diffs
        return all(a < b for a, b in zip(d, d[1:]))

    @property
    def default_hi(self) -> int:
        """Default truncation of the associated colored graph."""
        return 2 * self.values[-1] - 1

    def arrow(self, t: int) -> tuple[int, int]:
        """Vertex interval ``[2 n_t, 2 n_{t+1} - 1]`` of the graph built from this sequence."""
        if not 0 <= t < len(self.values) - 1:
            raise OutOfWindow(f"arrow {t} needs n_{t + 1}, prefix has {len(self.values)} entries")
        return 2 * self.values[t], 2 * self.values[t + 1] - 1

    def arrow_of(self, vertex: int) -> int:
        """Index t of the arrow containing ``vertex``."""
        return block_index(self, vertex // 2)


def as_sequence(seq) -> IndexSequence:
    return seq if isinstance(seq, IndexSequence) else IndexSequence(seq)


@dataclass(frozen=True)
class DeltaSequence:
    diffs: tuple[int, ...]

    def __init__(self, diffs: Iterable[int]):
        d = tuple(int(x) for x in diffs)
        if any(x < 1 for x in d):
            raise InvalidSequence(f"differences must be positive: {d}")
        object.__setattr__(self, "diffs", d)

    def __len__(self):
        return len(self.diffs)

    def __getitem__(self, i):
        return self.diffs[i]

    def __iter__(self):
        return iter(self.diffs)


def delta(seq) -> DeltaSequence:
    v = as_sequence(seq).values
    return DeltaSequence(b - a for a, b in zip(v, v[1:]))


def from_delta(diffs: Iterable[int]) -> IndexSequence:
    """Prefix sums starting at 0; inverse of :func:`delta`."""
    out = [0]
    for d in diffs:
        out.append(out[-1] + d)
    return IndexSequence(out)


def block_index(seq, k: int) -> int:
    """Return ``i`` with ``n_i <= k < n_{i+1}``.

    ``k`` equal to the last prefix value is still determined: whatever the
    next value is, it exceeds ``k``.
    """
    v = as_sequence(seq).values
    if k < 0:
        raise OutOfWindow(f"negative index {k}")
    if k > v[-1]:
        raise OutOfWindow(f"{k} lies beyond the prefix ending at {v[-1]}")
    lo, hi = 0, len(v) - 1
    # largest i with v[i] <= k
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if v[mid] <= k:
            lo = mid
        else:
            hi = mid - 1
    return lo


def block_parity(seq, k: int) -> Parity:
    return Parity.of(block_index(seq, k))


def parity_or_none(seq, k: int) -> Parity | None:
    try:
        return block_parity(seq, k)
    except OutOfWindow:
        return None


def p_value(seq, u: int) -> int:
    """``2 (n_{u+1} - n_u) - 1``: the number of steps needed to cross arrow ``u``."""
    v = as_sequence(seq).values
    if not 0 <= u < len(v) - 1:
        raise OutOfWindow(f"p_{u} needs n_{u + 1}; prefix has {len(v)} entries")
    return 2 * (v[u + 1] - v[u]) - 1


class TailKind(enum.Enum):
    EQUIVALENT = "EquivalentOnWindow"
    INEQUIVALENT = "InequivalentOnWindow"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class TailVerdict:
    kind: TailKind
    max_shift: int
    min_overlap: int
    shift: int | None = None
    start: int | None = None

    @property
    def equivalent(self) -> bool:
        return self.kind is TailKind.EQUIVALENT

    def __str__(self):
        if self.kind is TailKind.EQUIVALENT:
            return f"{self.kind.value}(j={self.shift}, i0={self.start})"
        return self.kind.value


def _agreeing_start(a: Sequence[int], b: Sequence[int], j: int) -> tuple[int, int] | None:
    """Least ``i0`` such that ``a[i] == b[i + j]`` from ``i0`` to the end of the overlap.

    Returns ``(i0, overlap_length)`` or None when the last aligned entries differ.
    """
    first = max(0, -j)
    end = min(len(a), len(b) - j)
    if end <= first:
        return None
    i0 = end
    while i0 > first and a[i0 - 1] == b[i0 - 1 + j]:
        i0 -= 1
    if i0 == end:
        return None
    return i0, end - i0


def e_tail_check(a, b, max_shift: int, min_overlap: int) -> TailVerdict:
    """Decide tail equivalence of two finite prefixes within a window.

    A shift ``j`` is accepted when ``a[i] == b[i + j]`` holds on an aligned
    overlap of at least ``min_overlap`` entries running up to the end of the
    shorter side.  Among accepted shifts the least ``|j|`` wins, then the
    smaller ``j``; ``start`` is the least ``i0`` for that shift.
    """
    if min_overlap < 1:
        raise ValueError("min_overlap must be at least 1")
    a = tuple(a)
    b = tuple(b)
    if len(a) < min_overlap or len(b) < min_overlap:
        return TailVerdict(TailKind.UNDETERMINED, max_shift, min_overlap)
    for j in sorted(range(-max_shift, max_shift + 1), key=lambda s: (abs(s), s)):
        hit = _agreeing_start(a, b, j)
        if hit is not None and hit[1] >= min_overlap:
            return TailVerdict(TailKind.EQUIVALENT, max_shift, min_overlap, shift=j, start=hit[0])
    return TailVerdict(TailKind.INEQUIVALENT, max_shift, min_overlap)


def generate_inequivalent_family(count: int, length: int) -> list[IndexSequence]:
    """Deterministic family of pairwise tail-inequivalent index sequences.

    Member ``k`` has differences ``count * (i + 1) + k``; the members'
    difference values lie in distinct residue classes mod ``count``, so no two
    difference prefixes share even a single aligned entry.
    """
    if count < 1:
        raise ValueError("count must be positive")
    if length < 2:
        raise ValueError("length must be at least 2")
    if length < 3 and count > 1:
        # a single difference can never witness inequivalence at overlap 2
        raise Infeasible(f"no two sequences of length {length} are window-inequivalent", maximum=1)
    family = [from_delta(count * (i + 1) + k for i in range(length - 1)) for k in range(count)]
    for s, t in combinations(family, 2):
        verdict = e_tail_check(delta(s), delta(t), max_shift=length, min_overlap=2)
        assert verdict.kind is TailKind.INEQUIVALENT, (s, t, verdict)
    return family
