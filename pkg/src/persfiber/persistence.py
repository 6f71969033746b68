"""Degree-0 persistence of a critical sequence by direct sublevel sweep.

The sweep processes critical values in ascending order, keeping the live
components of the sublevel set as a left-to-right list. A minimum opens a
component; a maximum merges the two components flanking it, and the younger
one (larger birth) dies there. The rank function is computed by simulating
the sublevel sets themselves, independently of any barcode, so the two can
be played against each other in tests.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    Barcode,
    CriticalSequence,
    Height,
    ValidationError,
    validate_barcode,
)


class BadPair(ValidationError):
    """rank(f, r, t) needs r <= t."""


@dataclass
class _Component:
    """One live component of the sublevel set: its birth and covered span."""

    birth: Height
    birth_pos: int  # 1-based position of the minimum that opened it
    lo: int         # leftmost covered sequence position
    hi: int         # rightmost covered sequence position


def barcode_of_sequence(f: CriticalSequence) -> tuple[Barcode, dict[int, int]]:
    """Sweep f bottom to top; return its barcode and which minimum owns which bar.

    The second value maps the 1-based sequence position of each local minimum
    to the 1-based index of its bar in the sorted barcode. The minimum that
    opened the surviving component owns the infinite bar.
    """
    live: list[_Component] = []
    raw: list[tuple[Height, Height, int]] = []  # (birth, death, birth_pos)
    for pos, y in sorted(enumerate(f.values, 1), key=lambda pv: pv[1]):
        if pos % 2 == 1:
            at = 0
            while at < len(live) and live[at].lo < pos:
                at += 1
            live.insert(at, _Component(y, pos, pos, pos))
        else:
            j = 0
            while live[j].hi != pos - 1:
                j += 1
            left, right = live[j], live[j + 1]
            elder, younger = (left, right) if left.birth < right.birth else (right, left)
            raw.append((younger.birth, y, younger.birth_pos))
            elder.lo, elder.hi = left.lo, right.hi
            live[j] = elder
            del live[j + 1]
    survivor = live[0]
    raw.append((survivor.birth, math.inf, survivor.birth_pos))
    barcode = validate_barcode((b, d) for b, d, _ in raw)
    index_of_birth = {bar.birth: bar.index for bar in barcode.bars}
    leaf_to_bar = {pos: index_of_birth[b] for b, _, pos in raw}
    return barcode, leaf_to_bar


def _level_components(f: CriticalSequence, level: Height) -> list[list[int]]:
    """Components of the sublevel set at `level`, as lists of minimum positions."""
    comps: list[list[int]] = []
    cur: list[int] | None = None
    for i, y in enumerate(f.values, 1):
        if i % 2 == 1:
            if y <= level:
                if cur is None:
                    cur = []
                cur.append(i)
        elif y > level and cur is not None:
            comps.append(cur)
            cur = None
    if cur is not None:
        comps.append(cur)
    return comps


def rank(f: CriticalSequence, r: Height, t: Height) -> int:
    """Number of components at level t that contain a component at level r.

    Computed by simulating both sublevel sets directly, never via the barcode:
    a component at t contains some component at r exactly when one of its
    minima sits at or below r.
    """
    if not r <= t:
        raise BadPair(f"need r <= t, got r={r!r}, t={t!r}")
    vals = f.values
    return sum(
        1 for comp in _level_components(f, t) if any(vals[i - 1] <= r for i in comp)
    )


def graph_equivalent(f: CriticalSequence, g: CriticalSequence) -> bool:
    """Same function up to orientation-preserving reparametrization of [0, 1]."""
    return f.values == g.values
