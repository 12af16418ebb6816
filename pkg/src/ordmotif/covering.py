"""Greedy selection of motifs to cover the extent system of a context.

A motif covers the closures of the preimages of its scale's extents. The
standard heuristic picks the largest marginal gain per step; the normalized
one divides the gain by the motif's own extent count, favouring small
motifs that are covered in full. Scores are exact fractions so ties break
deterministically: smaller family rank first, then the lexicographically
smallest sorted domain.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .bitsets import bits
from .context import FormalContext
from .recognition import Motif, realized_families
from .scales import ScaleFamily, expected_extent_count, scale_extents


class HeuristicKind(enum.Enum):
    STANDARD = "standard"
    NORMALIZED = "normalized"


@dataclass(frozen=True)
class CoveringStep:
    """One greedy selection: the motif, its gain, and the running total.

    ``families`` lists every family the selected domain realizes, which is
    what fractional attribution and rendering consume. ``tie_count`` is the
    number of candidates that shared the winning score.
    """

    motif: Motif
    families: tuple[ScaleFamily, ...]
    new_extents: int
    cumulative: int
    tie_count: int = 1


def covered_extents(context: FormalContext, motif: Motif) -> frozenset[int]:
    """Closures in ``context`` of the preimages of the motif's scale extents."""
    out = set()
    for e in scale_extents(motif.family, motif.size):
        pre = 0
        for i in bits(e):
            pre |= 1 << motif.domain[i]
        out.add(context.object_closure(pre))
    return frozenset(out)


def _canonical_order(motifs: Iterable[Motif]) -> list[Motif]:
    return sorted(motifs, key=lambda m: (m.family, tuple(sorted(m.domain))))


def greedy_cover(
    context: FormalContext,
    motifs: Sequence[Motif],
    k: int,
    heuristic: HeuristicKind = HeuristicKind.STANDARD,
) -> list[CoveringStep]:
    """Select up to ``k`` motifs greedily; stops early once nothing gains."""
    if k < 0:
        raise ValueError("step count must be nonnegative")
    pool = _canonical_order(motifs)
    covers = [covered_extents(context, m) for m in pool]
    denominators = [expected_extent_count(m.family, m.size) for m in pool]
    covered: set[int] = set()
    steps: list[CoveringStep] = []
    for _ in range(k):
        best: Fraction | None = None
        best_at = -1
        ties = 0
        for i, cov in enumerate(covers):
            gain = len(cov - covered)
            if gain == 0:
                continue
            score = (
                Fraction(gain)
                if heuristic is HeuristicKind.STANDARD
                else Fraction(gain, denominators[i])
            )
            if best is None or score > best:
                best, best_at, ties = score, i, 1
            elif score == best:
                ties += 1
        if best is None:
            break
        chosen = pool[best_at]
        gain = len(covers[best_at] - covered)
        covered |= covers[best_at]
        steps.append(
            CoveringStep(
                motif=chosen,
                families=realized_families(context, chosen.domain),
                new_extents=gain,
                cumulative=len(covered),
                tie_count=ties,
            )
        )
    return steps


def family_ratios(
    steps: Sequence[CoveringStep], up_to: int | None = None
) -> dict[ScaleFamily, Fraction]:
    """Fractional family attribution over the first ``up_to`` selections.

    A motif realizing q families contributes 1/q to each, so the returned
    fractions sum to one whenever any step is counted.
    """
    counted = steps[: up_to if up_to is not None else len(steps)]
    out = {f: Fraction(0) for f in ScaleFamily}
    if not counted:
        return out
    for step in counted:
        share = Fraction(1, len(step.families) * len(counted))
        for f in step.families:
            out[f] += share
    return out


def coverage_curve(steps: Sequence[CoveringStep]) -> list[tuple[int, int, int]]:
    """Rows of (step number, newly covered, cumulative), 1-based steps."""
    return [(i, s.new_extents, s.cumulative) for i, s in enumerate(steps, start=1)]


def ratio_curve(steps: Sequence[CoveringStep]) -> list[tuple[int, dict[ScaleFamily, Fraction]]]:
    """Family ratios after each prefix of the selection."""
    return [(i, family_ratios(steps, i)) for i in range(1, len(steps) + 1)]
