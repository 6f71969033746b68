"""Brute-force ground truth for the counting and enumeration machinery.

all_functions and brute_fiber know nothing about attachment plans or
counting formulas: they generate every alternating arrangement of the given
values, keep the ones the sequence validator accepts, and filter by sweep
barcode. verify() is the one place both routes meet; it reports the formula,
the plan enumeration, and the brute force side by side.
"""
from __future__ import annotations

from itertools import permutations
from typing import Iterable

from . import fiber
from .core import (
    Barcode,
    CriticalSequence,
    DuplicateValue,
    Height,
    ValidationError,
    canonical_form,
    validate_critical_sequence,
)
from .persistence import barcode_of_sequence
from .trees import forget_chirality

MAX_MINIMA = 6  # 6! * 5! = 86_400 candidates; beyond that brute force stops being quick


class CardinalityMismatch(ValidationError):
    """A sequence alternates only if |minima| == |maxima| + 1 >= 2."""


class ScaleCapExceeded(ValidationError):
    """Brute force is deliberately capped at MAX_MINIMA minima."""


def all_functions(minima: Iterable[Height], maxima: Iterable[Height]) -> list[CriticalSequence]:
    """Every valid critical sequence using the given values, sorted.

    Tries all |minima|! * |maxima|! interleavings and keeps the ones that
    pass the sequence validator.
    """
    mins = tuple(sorted(minima))
    maxs = tuple(sorted(maxima))
    if len(mins) != len(maxs) + 1 or len(mins) < 2:
        raise CardinalityMismatch(
            f"need one more minimum than maxima and at least 2 minima, got {len(mins)} and {len(maxs)}"
        )
    if len(mins) > MAX_MINIMA:
        raise ScaleCapExceeded(f"brute force is capped at {MAX_MINIMA} minima, got {len(mins)}")
    pool = list(mins) + list(maxs)
    if len(set(pool)) != len(pool):
        raise DuplicateValue("minima and maxima must be pairwise distinct overall")
    out = []
    for pm in permutations(mins):
        for px in permutations(maxs):
            vals = [None] * (len(pm) + len(px))
            vals[0::2] = pm
            vals[1::2] = px
            if all(px[i] > pm[i] and px[i] > pm[i + 1] for i in range(len(px))):
                out.append(validate_critical_sequence(vals))
    out.sort(key=lambda s: s.values)
    return out


def brute_fiber(b: Barcode) -> list[CriticalSequence]:
    """Every function realizing b, found by filtering all_functions by sweep.

    The barcode's births are the candidate minima and its finite deaths the
    maxima; nothing from the plan enumeration is consulted.
    """
    candidates = all_functions(b.births, b.finite_deaths)
    return [f for f in candidates if barcode_of_sequence(f)[0] == b]


def verify(b: Barcode) -> dict:
    """Play formula, plan enumeration and brute force against each other.

    The partition check recomputes the brute fiber of every barcode arising
    from b's critical values and confirms those fibers are disjoint and cover
    all_functions exactly.
    """
    cmts = fiber.enumerate_cmts(b)
    mts = fiber.enumerate_merge_trees(b)
    dedup = len({canonical_form(forget_chirality(t)) for t in cmts})
    brute = brute_fiber(b)

    candidates = all_functions(b.births, b.finite_deaths)
    by_barcode: dict[Barcode, list[CriticalSequence]] = {}
    for f in candidates:
        by_barcode.setdefault(barcode_of_sequence(f)[0], []).append(f)
    covered: set[tuple] = set()
    total = 0
    disjoint = True
    for arising in by_barcode:
        for f in brute_fiber(arising):
            total += 1
            if f.values in covered:
                disjoint = False
            covered.add(f.values)
    partition_check = (
        disjoint and total == len(candidates) and covered == {f.values for f in candidates}
    )

    formula_cmt = fiber.count_cmts(b)
    formula_mt = fiber.count_merge_trees(b)
    return {
        "formula_cmt_count": formula_cmt,
        "enumerated_cmt_count": len(cmts),
        "brute_count": len(brute),
        "formula_mt_count": formula_mt,
        "enumerated_mt_count": len(mts),
        "dedup_mt_from_cmts": dedup,
        "all_equal": (
            formula_cmt == len(cmts) == len(brute)
            and formula_mt == len(mts) == dedup
        ),
        "partition_check": partition_check,
    }
