"""Merge trees of critical sequences and the elder rule on them.

A sequence becomes a chiral merge tree by joining, for each maximum in
ascending order, the subtrees immediately left and right of it. The elder
rule walks any merge tree bottom-up: at each internal vertex the child
subtree holding the larger minimum dies there, emitting a bar, and the
smaller minimum survives upward. In-order traversal inverts the
construction, which is what makes function reconstruction possible.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    Barcode,
    ChiralMergeTree,
    CriticalSequence,
    Height,
    Interval,
    KindMismatch,
    MergeTree,
    Tree,
    ValidationError,
    height_token,
    validate_barcode,
    validate_critical_sequence,
)


class TooSmall(ValidationError):
    """Reconstruction needs a tree with at least three vertices."""


@dataclass
class ElderDecomposition:
    """How the elder rule split a tree into bar-owning monotone chains.

    `leaf_to_bar` maps each leaf height to its bar. `elder_survivor` maps each
    internal vertex height to the leaf height whose chain survives (the elder,
    smaller side); the other child's chain dies there.
    """

    leaf_to_bar: dict[Height, Interval]
    elder_survivor: dict[Height, Height]


def merge_tree_of_sequence(f: CriticalSequence) -> ChiralMergeTree:
    """Join subtrees across each maximum of f, lowest maximum first."""
    roots: list[tuple[ChiralMergeTree, int, int]] = []  # (subtree, lo, hi)
    for pos, y in sorted(enumerate(f.values, 1), key=lambda pv: pv[1]):
        if pos % 2 == 1:
            at = 0
            while at < len(roots) and roots[at][1] < pos:
                at += 1
            roots.insert(at, (ChiralMergeTree(y), pos, pos))
        else:
            j = 0
            while roots[j][2] != pos - 1:
                j += 1
            (left, lo, _), (right, _, hi) = roots[j], roots[j + 1]
            roots[j] = (ChiralMergeTree(y, left, right), lo, hi)
            del roots[j + 1]
    return roots[0][0]


def elder_rule(t: MergeTree) -> tuple[Barcode, ElderDecomposition]:
    """Bottom-up elder rule: the younger side of every vertex dies there.

    Returns the barcode together with the decomposition into monotone chains.
    The chain of the global minimum survives every merge and owns the
    infinite bar.
    """
    if not isinstance(t, MergeTree):
        raise KindMismatch(f"elder_rule takes an unordered MergeTree, got {type(t).__name__}")
    raw: list[tuple[Height, Height]] = []
    survivor: dict[Height, Height] = {}

    def walk(node: MergeTree) -> Height:
        if node.is_leaf:
            return node.height
        a, b = (walk(c) for c in node.children)
        elder, younger = (a, b) if a < b else (b, a)
        raw.append((younger, node.height))
        survivor[node.height] = elder
        return elder

    global_min = walk(t)
    raw.append((global_min, math.inf))
    barcode = validate_barcode(raw, generic=True)
    bar_of_birth = {bar.birth: bar for bar in barcode.bars}
    leaf_to_bar = {leaf.height: bar_of_birth[leaf.height] for leaf in t.leaves()}
    return barcode, ElderDecomposition(leaf_to_bar, survivor)


def forget_chirality(t: ChiralMergeTree) -> MergeTree:
    """Drop the left/right order, keeping heights and adjacency."""
    if not isinstance(t, ChiralMergeTree):
        raise KindMismatch(f"forget_chirality takes a ChiralMergeTree, got {type(t).__name__}")
    if t.is_leaf:
        return MergeTree(t.height)
    return MergeTree(t.height, (forget_chirality(t.left), forget_chirality(t.right)))


def chiral_elder_map(t: ChiralMergeTree) -> Barcode:
    """Barcode of a chiral tree: the elder rule after forgetting chirality."""
    barcode, _ = elder_rule(forget_chirality(t))
    return barcode


def in_order(t: ChiralMergeTree) -> list[ChiralMergeTree]:
    """Left subtree, vertex, right subtree; leaves land at the odd positions."""
    if not isinstance(t, ChiralMergeTree):
        raise KindMismatch(f"in_order takes a ChiralMergeTree, got {type(t).__name__}")
    out: list[ChiralMergeTree] = []

    def walk(node: ChiralMergeTree) -> None:
        if not node.is_leaf:
            walk(node.left)
        out.append(node)
        if not node.is_leaf:
            walk(node.right)

    walk(t)
    return out


def cmt_to_sequence(t: ChiralMergeTree) -> CriticalSequence:
    """In-order heights of t, validated as a critical sequence.

    Inverse of merge_tree_of_sequence. A lone leaf has no alternating
    realization, hence TooSmall below three vertices.
    """
    vertices = in_order(t)
    if len(vertices) < 3:
        raise TooSmall(f"need at least 3 vertices to realize a function, got {len(vertices)}")
    return validate_critical_sequence(tuple(v.height for v in vertices))


def to_dot(t: Tree) -> str:
    """Graphviz text for either tree kind.

    Chiral trees pin the child order with invisible same-rank edges so the
    drawing is faithful to the chirality.
    """
    lines = ["digraph mergetree {", "  node [shape=circle];"]
    counter = 0

    def fresh() -> str:
        nonlocal counter
        name = f"v{counter}"
        counter += 1
        return name

    def walk(node: Tree) -> str:
        name = fresh()
        lines.append(f'  {name} [label="{height_token(node.height)}"];')
        kids = (node.left, node.right) if isinstance(node, ChiralMergeTree) else node.children
        kid_names = []
        for kid in kids:
            if kid is None:
                continue
            kid_names.append(walk(kid))
        for kn in kid_names:
            lines.append(f"  {name} -> {kn};")
        if isinstance(node, ChiralMergeTree) and len(kid_names) == 2:
            lines.append(
                f"  {{ rank=same; {kid_names[0]} -> {kid_names[1]} [style=invis]; }}"
            )
        return name

    if not isinstance(t, (MergeTree, ChiralMergeTree)):
        raise KindMismatch(f"not a merge tree: {t!r}")
    walk(t)
    lines.append("}")
    return "\n".join(lines) + "\n"
