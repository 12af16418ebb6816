"""Formal contexts over finite object and attribute sets.

Objects and attributes are label tuples; incidence is stored as one int
bitmask per object row (and per attribute column). Object sets and
attribute sets are plain ints throughout, extents included.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bitsets import bits, compress, mask_of


class UnclarifiedObjectsError(ValueError):
    """Raised where pairwise distinct object rows are required."""

    def __init__(self, first: str, second: str):
        super().__init__(
            f"objects {first!r} and {second!r} have identical rows; clarify first"
        )
        self.pair = (first, second)


@dataclass(frozen=True)
class Concept:
    """A formal concept: extent and intent bitmasks, each the derivation of the other."""

    extent: int
    intent: int


@dataclass(frozen=True)
class ClarificationMap:
    """Maps each kept object index to the labels it absorbed.

    ``groups[g]`` lists the original labels merged into clarified object ``g``,
    representative first. The groups partition the original object list.
    """

    groups: dict[int, tuple[str, ...]]

    def label(self, g: int, sep: str = "/") -> str:
        return sep.join(self.groups[g])


class FormalContext:
    """Immutable (G, M, I) triple with bitmask derivation operators."""

    __slots__ = ("objects", "attributes", "rows", "cols", "_extents")

    def __init__(
        self,
        objects: Sequence[str],
        attributes: Sequence[str],
        incidence: Sequence[Sequence[int]],
    ):
        rows = []
        for row in incidence:
            if len(row) != len(attributes):
                raise ValueError(
                    f"row width {len(row)} does not match {len(attributes)} attributes"
                )
            rows.append(mask_of(m for m, v in enumerate(row) if v))
        self._init(tuple(objects), tuple(attributes), tuple(rows))

    @classmethod
    def from_rows(
        cls, objects: Sequence[str], attributes: Sequence[str], rows: Sequence[int]
    ) -> "FormalContext":
        self = object.__new__(cls)
        self._init(tuple(objects), tuple(attributes), tuple(rows))
        return self

    def _init(self, objects, attributes, rows):
        for kind, labels in (("object", objects), ("attribute", attributes)):
            seen: set[str] = set()
            for lab in labels:
                if lab in seen:
                    raise ValueError(f"duplicate {kind} label {lab!r}")
                seen.add(lab)
        if len(rows) != len(objects):
            raise ValueError(f"{len(rows)} rows for {len(objects)} objects")
        limit = 1 << len(attributes)
        for r in rows:
            if not 0 <= r < limit:
                raise ValueError("row mask exceeds attribute count")
        cols = [0] * len(attributes)
        for g, r in enumerate(rows):
            for m in bits(r):
                cols[m] |= 1 << g
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "attributes", attributes)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", tuple(cols))
        object.__setattr__(self, "_extents", None)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("FormalContext is immutable")

    # -- basic shape ---------------------------------------------------

    @property
    def object_mask(self) -> int:
        return (1 << len(self.objects)) - 1

    @property
    def attribute_mask(self) -> int:
        return (1 << len(self.attributes)) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalContext):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.attributes == other.attributes
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.objects, self.attributes, self.rows))

    def __repr__(self) -> str:
        return f"FormalContext({len(self.objects)} objects, {len(self.attributes)} attributes)"

    # -- derivation ----------------------------------------------------

    def derive_objects(self, object_set: int) -> int:
        """Attributes shared by every object in ``object_set``."""
        out = self.attribute_mask
        for g in bits(object_set):
            out &= self.rows[g]
        return out

    def derive_attributes(self, attribute_set: int) -> int:
        """Objects incident with every attribute in ``attribute_set``."""
        out = self.object_mask
        for m in bits(attribute_set):
            out &= self.cols[m]
        return out

    def object_closure(self, object_set: int) -> int:
        return self.derive_attributes(self.derive_objects(object_set))

    def is_extent(self, object_set: int) -> bool:
        return self.object_closure(object_set) == object_set

    # -- global structure ----------------------------------------------

    def extents(self) -> tuple[int, ...]:
        """All extents, enumerated once each in ascending lectic order.

        Ganter's NextClosure over the object closure operator; the result is
        cached since the context is immutable.
        """
        if self._extents is None:
            object.__setattr__(self, "_extents", tuple(self._next_closure_run()))
        return self._extents

    def _next_closure_run(self):
        n = len(self.objects)
        a = self.object_closure(0)
        while a is not None:
            yield a
            a = self._next_closure(a, n)

    def _next_closure(self, a: int, n: int) -> int | None:
        for i in range(n - 1, -1, -1):
            bit = 1 << i
            if a & bit:
                a &= ~bit
            else:
                b = self.object_closure(a | bit)
                if not (b & ~a) & (bit - 1):
                    return b
        return None

    def concepts(self) -> list[Concept]:
        return [Concept(e, self.derive_objects(e)) for e in self.extents()]

    # -- derived contexts ------------------------------------------------

    def transpose(self) -> "FormalContext":
        """Swap objects with attributes; incidence rows become columns."""
        return FormalContext.from_rows(self.attributes, self.objects, self.cols)

    def induced_subcontext(self, object_set: int, attribute_set: int | None = None) -> "FormalContext":
        """Restrict to the given objects (and attributes; all by default)."""
        if attribute_set is None:
            attribute_set = self.attribute_mask
        obj_pos = list(bits(object_set))
        att_pos = list(bits(attribute_set))
        return FormalContext.from_rows(
            tuple(self.objects[g] for g in obj_pos),
            tuple(self.attributes[m] for m in att_pos),
            tuple(compress(self.rows[g] & attribute_set, att_pos) for g in obj_pos),
        )


def require_clarified(context: FormalContext) -> None:
    """Raise :class:`UnclarifiedObjectsError` unless all object rows differ."""
    seen: dict[int, int] = {}
    for g, row in enumerate(context.rows):
        if row in seen:
            raise UnclarifiedObjectsError(
                context.objects[seen[row]], context.objects[g]
            )
        seen[row] = g


def clarify_objects(context: FormalContext) -> tuple[FormalContext, ClarificationMap]:
    """Merge objects with identical rows, keeping the first of each group.

    Returns the clarified context together with a map from new object index
    to the tuple of original labels it represents.
    """
    order: list[int] = []
    members: dict[int, list[str]] = {}
    first_at: dict[int, int] = {}
    for g, row in enumerate(context.rows):
        if row not in first_at:
            first_at[row] = len(order)
            order.append(g)
            members[first_at[row]] = []
        members[first_at[row]].append(context.objects[g])
    clarified = FormalContext.from_rows(
        tuple(context.objects[g] for g in order),
        context.attributes,
        tuple(context.rows[g] for g in order),
    )
    groups = {i: tuple(labels) for i, labels in members.items()}
    return clarified, ClarificationMap(groups)


def subcontext_extents(context: FormalContext, object_set: int) -> set[int]:
    """Extents of ``context[H, M]`` as masks over the original indices.

    Uses the restriction law: they are exactly the sets ``H & E`` for
    extents ``E`` of the full context.
    """
    return {e & object_set for e in context.extents()}


def closure_within(context: FormalContext, subset: int, object_set: int) -> int:
    """Closure of ``subset`` inside the induced subcontext on ``object_set``."""
    return context.object_closure(subset) & object_set


