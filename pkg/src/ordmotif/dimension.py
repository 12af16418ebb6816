"""Scaling dimension: fewest scales whose semi-product fully measures a context.

A full scale-measure into a semi-product decomposes into one map per
component, each a scale-measure on its own, whose attribute-extent
preimages jointly meet-generate the extent system. Every extent is an
intersection of meet-irreducible ones, so the search reduces to covering
the irreducibles with per-map preimage families. The problem is hard in
general, hence the hard caps on object count and tuple length.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .context import FormalContext

MAX_OBJECTS = 8
MAX_TUPLE_LENGTH = 4


def meet_irreducible_extents(context: FormalContext) -> list[int]:
    """Extents that are not intersections of strictly larger extents."""
    extents = set(context.extents())
    top = context.object_mask
    out = []
    for e in extents:
        if e == top:
            continue
        meet = top
        for f in extents:
            if f != e and f & e == e:
                meet &= f
        if meet != e:
            out.append(e)
    return sorted(out)


def _measure_coverages(
    context: FormalContext, scale: FormalContext, irreducibles: frozenset[int]
) -> set[frozenset[int]]:
    """Irreducibles reachable per valid map from the context onto ``scale``.

    Enumerates all maps; keeps those whose attribute-extent preimages are
    extents, and records which irreducibles appear among the preimages.
    """
    n = len(context.objects)
    extent_set = set(context.extents())
    out: set[frozenset[int]] = set()
    for assignment in product(range(len(scale.objects)), repeat=n):
        hit = []
        ok = True
        for col in scale.cols:
            pre = 0
            for g in range(n):
                if col >> assignment[g] & 1:
                    pre |= 1 << g
            if pre not in extent_set:
                ok = False
                break
            if pre in irreducibles:
                hit.append(pre)
        if ok:
            out.add(frozenset(hit))
    return out


def scaling_dimension(
    context: FormalContext,
    scales: Sequence[FormalContext],
    max_d: int = MAX_TUPLE_LENGTH,
) -> int | None:
    """Least d <= ``max_d`` admitting a full measure into a d-fold semi-product.

    Scales may repeat within a tuple. Returns ``None`` when no tuple of
    length up to ``max_d`` works.
    """
    if len(context.objects) > MAX_OBJECTS:
        raise ValueError(f"scaling dimension search is capped at {MAX_OBJECTS} objects")
    if not 1 <= max_d <= MAX_TUPLE_LENGTH:
        raise ValueError(f"max_d must be between 1 and {MAX_TUPLE_LENGTH}")
    if not scales:
        raise ValueError("the scale family must not be empty")

    irreducibles = frozenset(meet_irreducible_extents(context))
    coverages: set[frozenset[int]] = set()
    for scale in scales:
        coverages |= _measure_coverages(context, scale, irreducibles)
    if not coverages:
        return None
    # Dominated coverage sets never help a smallest tuple.
    maximal = [
        c for c in coverages if not any(c < other for other in coverages)
    ]
    maximal.sort(key=lambda c: (-len(c), sorted(c)))

    target = irreducibles

    def search(missing: frozenset[int], budget: int, start: int) -> bool:
        if not missing:
            return True
        if budget == 0:
            return False
        for i in range(start, len(maximal)):
            gain = missing & maximal[i]
            if gain:
                if search(missing - maximal[i], budget - 1, i + 1):
                    return True
        return False

    for d in range(1, max_d + 1):
        if search(target, d, 0):
            return d
    return None
