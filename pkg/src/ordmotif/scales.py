"""Standard scale contexts and the operations that combine them.

The five families live on the ground set [n] = {1, ..., n}:

* nominal        ([n], [n], =)
* ordinal        ([n], [n], <=)
* interordinal   ([n], [n], <=) | ([n], [n], >=)
* contranominal  ([n], [n], !=)
* crown          ([n], [n], J) with a J b iff a = b, b = a + 1, or (a, b) = (n, 1)
"""

from __future__ import annotations

import enum
from typing import Sequence

from .context import FormalContext


class ScaleFamily(enum.IntEnum):
    """The five families; numeric order doubles as the covering tie-break rank."""

    NOMINAL = 1
    ORDINAL = 2
    INTERORDINAL = 3
    CONTRANOMINAL = 4
    CROWN = 5

    def __str__(self) -> str:
        return self.name.lower()

    @classmethod
    def from_name(cls, name: str) -> "ScaleFamily":
        try:
            return cls[name.strip().upper()]
        except KeyError:
            names = ", ".join(str(f) for f in cls)
            raise ValueError(f"unknown scale family {name!r}; expected one of: {names}") from None


#: Smallest size at which each family is defined.
FAMILY_MIN_SIZE = {
    ScaleFamily.NOMINAL: 1,
    ScaleFamily.ORDINAL: 1,
    ScaleFamily.INTERORDINAL: 1,
    ScaleFamily.CONTRANOMINAL: 1,
    ScaleFamily.CROWN: 3,
}


def _check_size(family: ScaleFamily, n: int) -> None:
    if n < FAMILY_MIN_SIZE[family]:
        raise ValueError(f"{family} scale needs size >= {FAMILY_MIN_SIZE[family]}, got {n}")


def build_scale(family: ScaleFamily, n: int) -> FormalContext:
    """The standard scale of the given family and size, objects labelled 1..n."""
    _check_size(family, n)
    labels = tuple(str(i + 1) for i in range(n))
    if family is ScaleFamily.NOMINAL:
        rows = [1 << g for g in range(n)]
        return FormalContext.from_rows(labels, labels, rows)
    if family is ScaleFamily.ORDINAL:
        # object g has attribute m iff g <= m: row g covers bits g..n-1
        full = (1 << n) - 1
        rows = [full & ~((1 << g) - 1) for g in range(n)]
        return FormalContext.from_rows(labels, labels, rows)
    if family is ScaleFamily.INTERORDINAL:
        att = tuple(f"≤{i + 1}" for i in range(n)) + tuple(
            f"≥{i + 1}" for i in range(n)
        )
        full = (1 << n) - 1
        rows = []
        for g in range(n):
            le = full & ~((1 << g) - 1)  # g <= m
            ge = (1 << (g + 1)) - 1  # g >= m
            rows.append(le | ge << n)
        return FormalContext.from_rows(labels, att, rows)
    if family is ScaleFamily.CONTRANOMINAL:
        full = (1 << n) - 1
        rows = [full & ~(1 << g) for g in range(n)]
        return FormalContext.from_rows(labels, labels, rows)
    # crown: object a is incident with attributes a and a+1 (cyclically)
    rows = [(1 << g) | (1 << ((g + 1) % n)) for g in range(n)]
    return FormalContext.from_rows(labels, labels, rows)


def scale_extents(family: ScaleFamily, n: int) -> list[int]:
    """Extent system of ``build_scale(family, n)`` in closed form.

    Bit i of each mask stands for scale object i + 1. Order is deterministic
    but otherwise arbitrary; callers compare as sets.
    """
    _check_size(family, n)
    full = (1 << n) - 1
    if family is ScaleFamily.NOMINAL:
        if n == 1:
            return [full]
        return [0] + [1 << g for g in range(n)] + [full]
    if family is ScaleFamily.ORDINAL:
        return [(1 << k) - 1 for k in range(1, n + 1)]
    if family is ScaleFamily.INTERORDINAL:
        if n == 1:
            return [full]
        out = [0]
        for a in range(n):
            for b in range(a, n):
                out.append(((1 << (b + 1)) - 1) & ~((1 << a) - 1))
        return out
    if family is ScaleFamily.CONTRANOMINAL:
        return list(range(1 << n))
    out = [0, full]
    out.extend(1 << g for g in range(n))
    out.extend((1 << g) | (1 << ((g + 1) % n)) for g in range(n))
    return out


def expected_extent_count(family: ScaleFamily, n: int) -> int:
    """Number of extents of the standard scale of the given family and size."""
    _check_size(family, n)
    if family is ScaleFamily.NOMINAL:
        return 1 if n == 1 else n + 2
    if family is ScaleFamily.ORDINAL:
        return n
    if family is ScaleFamily.INTERORDINAL:
        return 1 if n == 1 else n * (n + 1) // 2 + 1
    if family is ScaleFamily.CONTRANOMINAL:
        return 2**n
    return 8 if n == 3 else 2 * n + 2


def _merge_attribute_labels(per_context: list[tuple[str, ...]]) -> list[str]:
    # keep labels as-is, suffixing later duplicates with #2, #3, ...
    seen: dict[str, int] = {}
    merged: list[str] = []
    for labels in per_context:
        for lab in labels:
            count = seen.get(lab, 0) + 1
            seen[lab] = count
            merged.append(lab if count == 1 else f"{lab}#{count}")
    return merged


def apposition(*contexts: FormalContext) -> FormalContext:
    """Glue contexts over a common object list by concatenating attributes."""
    if not contexts:
        raise ValueError("apposition needs at least one context")
    first = contexts[0]
    for other in contexts[1:]:
        if other.objects != first.objects:
            raise ValueError("apposition requires identical object lists")
    attributes = _merge_attribute_labels([k.attributes for k in contexts])
    rows = []
    for g in range(len(first.objects)):
        row = 0
        shift = 0
        for k in contexts:
            row |= k.rows[g] << shift
            shift += len(k.attributes)
        rows.append(row)
    return FormalContext.from_rows(first.objects, tuple(attributes), tuple(rows))


def semiproduct(contexts: Sequence[FormalContext]) -> FormalContext:
    """Semi-product: tuple objects, tagged disjoint attribute union.

    A tuple is incident with attribute ``j:m`` iff its j-th component is
    incident with ``m`` in operand ``j`` (1-based). The semi-product of a
    single context is that context itself.
    """
    if not contexts:
        raise ValueError("semiproduct needs at least one context")
    if len(contexts) == 1:
        return contexts[0]
    shapes = [list(range(len(k.objects))) for k in contexts]
    tuples: list[tuple[int, ...]] = [()]
    for component in shapes:
        tuples = [t + (g,) for t in tuples for g in component]
    objects = tuple(
        "(" + ",".join(contexts[j].objects[g] for j, g in enumerate(t)) + ")"
        for t in tuples
    )
    attributes = tuple(
        f"{j + 1}:{m}" for j, k in enumerate(contexts) for m in k.attributes
    )
    rows = []
    for t in tuples:
        row = 0
        shift = 0
        for j, k in enumerate(contexts):
            row |= k.rows[t[j]] << shift
            shift += len(k.attributes)
        rows.append(row)
    return FormalContext.from_rows(objects, attributes, tuple(rows))
