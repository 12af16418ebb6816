"""Rebuilding a context from a complete motif covering.

Each motif contributes one block over the original objects with one
column per extent of its scale: the object is incident iff it lies in
the closure of the preimage of that scale extent. Columns for attribute
extents keep the attribute's label; the remaining scale extents get
starred labels. Attribute columns alone would not suffice: the closure
of an intersection of preimages can be strictly smaller than the
intersection of their closures, so covered extents reachable only
through the scale's top or bottom would go missing. With one column per
scale extent the apposition of all blocks has exactly the extents of
the source context, hence the same local full scale-measures.
"""

from __future__ import annotations

from typing import Sequence

from .bitsets import bits
from .context import FormalContext
from .covering import covered_extents
from .recognition import Motif
from .scales import build_scale, scale_extents, apposition


class IncompleteCoveringError(ValueError):
    """The motifs do not cover the whole extent system."""

    def __init__(self, uncovered: int):
        super().__init__(f"covering misses {uncovered} extents")
        self.uncovered = uncovered


def build_basis(context: FormalContext, motifs: Sequence[Motif]) -> FormalContext:
    """Apposition of the per-motif blocks; requires a complete covering."""
    if not motifs:
        raise IncompleteCoveringError(len(set(context.extents())))
    covered: set[int] = set()
    for m in motifs:
        covered |= covered_extents(context, m)
    missing = set(context.extents()) - covered
    if missing:
        raise IncompleteCoveringError(len(missing))

    blocks = []
    for number, motif in enumerate(motifs, start=1):
        scale = build_scale(motif.family, motif.size)
        extras = sorted(set(scale_extents(motif.family, motif.size)) - set(scale.cols))
        labels = [f"{number}:{label}" for label in scale.attributes]
        labels.extend(f"{number}:*{j}" for j in range(1, len(extras) + 1))
        columns = []
        for e in list(scale.cols) + extras:
            pre = 0
            for i in bits(e):
                pre |= 1 << motif.domain[i]
            columns.append(context.object_closure(pre))
        rows = [0] * len(context.objects)
        for m_idx, column in enumerate(columns):
            for g in bits(column):
                rows[g] |= 1 << m_idx
        blocks.append(
            FormalContext.from_rows(context.objects, tuple(labels), tuple(rows))
        )
    return apposition(*blocks)
