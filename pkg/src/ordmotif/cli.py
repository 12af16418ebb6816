"""Command line front end for the motif pipeline.

Subcommands: ``concepts``, ``motifs``, ``cover``, ``explain``, ``basis``
and ``scaling-dim``. Inputs are Burmeister ``.cxt`` or CSV context
files; outputs are plain text, JSON (``--json``) or CSV side files.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .basis import IncompleteCoveringError, build_basis
from .context import ClarificationMap, FormalContext, clarify_objects
from .covering import (
    CoveringStep,
    HeuristicKind,
    coverage_curve,
    greedy_cover,
    ratio_curve,
)
from .dimension import scaling_dimension
from .enumeration import (
    DEFAULT_CROWN_SIZE_CAP,
    EnumerationConfig,
    enumerate_motifs,
    motif_stats,
    stats_table,
)
from .explain import explain_covering
from .io import ParseError, load_context, to_burmeister
from .recognition import Motif
from .scales import ScaleFamily, build_scale

SCHEMA_VERSION = 1


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("path", type=Path, help="context file (.cxt or .csv)")
    p.add_argument(
        "--transpose", action="store_true", help="swap objects and attributes first"
    )
    p.add_argument(
        "--clarify", action="store_true", help="merge objects with identical rows"
    )


def _add_enumeration_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--families",
        default=",".join(str(f) for f in ScaleFamily),
        help="comma separated family names (default: all five)",
    )
    p.add_argument("--min-size", type=int, default=None, help="smallest domain size")
    p.add_argument("--max-size", type=int, default=None, help="largest domain size")
    p.add_argument(
        "--crown-cap",
        type=int,
        default=DEFAULT_CROWN_SIZE_CAP,
        help=f"crown search size cap (default {DEFAULT_CROWN_SIZE_CAP})",
    )
def _add_pool_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--all-motifs",
        action="store_true",
        help="admit non-maximal motifs as candidates (default: maximal only)",
    )


def _add_cover_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=int, default=10, help="number of greedy steps")
    p.add_argument(
        "--heuristic",
        choices=[h.value for h in HeuristicKind],
        default=HeuristicKind.STANDARD.value,
    )


def _load(args: argparse.Namespace) -> tuple[FormalContext, Optional[ClarificationMap]]:
    context = load_context(args.path)
    if args.transpose:
        context = context.transpose()
    clarification = None
    if args.clarify:
        context, clarification = clarify_objects(context)
    return context, clarification


def _config(args: argparse.Namespace) -> EnumerationConfig:
    families = tuple(
        ScaleFamily.from_name(part) for part in args.families.split(",") if part
    )
    return EnumerationConfig.with_sizes(
        families=families,
        min_size=args.min_size,
        max_size=args.max_size,
        crown_size_cap=args.crown_cap,
    )


def _enumerate(args: argparse.Namespace, context: FormalContext) -> list[Motif]:
    inventory = enumerate_motifs(context, _config(args))
    return inventory.all_motifs(maximal_only=not args.all_motifs)


def _labels(
    context: FormalContext, clarification: Optional[ClarificationMap]
) -> list[str]:
    if clarification is None:
        return list(context.objects)
    return [clarification.label(g) for g in range(len(context.objects))]


def _extent_labels(context: FormalContext, extent: int) -> list[str]:
    return [context.objects[g] for g in range(len(context.objects)) if extent >> g & 1]


def _emit_json(payload: dict) -> None:
    payload = {"schema_version": SCHEMA_VERSION, **payload}
    print(json.dumps(payload, indent=2))


def cmd_concepts(args: argparse.Namespace) -> int:
    context, _ = _load(args)
    extents = context.extents()
    if args.json:
        payload: dict = {"command": "concepts", "count": len(extents)}
        if args.list:
            payload["extents"] = [_extent_labels(context, e) for e in extents]
        _emit_json(payload)
        return 0
    print(f"{len(extents)} extents")
    if args.list:
        for e in extents:
            print("{" + ", ".join(_extent_labels(context, e)) + "}")
    return 0


def cmd_motifs(args: argparse.Namespace) -> int:
    context, _ = _load(args)
    inventory = enumerate_motifs(context, _config(args))
    if args.json:
        stats = motif_stats(inventory)
        motifs = inventory.all_motifs(maximal_only=args.maximal_only)
        _emit_json(
            {
                "command": "motifs",
                "stats": {
                    str(f): {"total": t, "maximal": mx, "largest": lg}
                    for f, (t, mx, lg) in stats.items()
                },
                "motifs": [
                    {
                        "family": str(m.family),
                        "domain": [context.objects[g] for g in m.domain],
                    }
                    for m in motifs
                ],
            }
        )
        return 0
    print(stats_table(inventory))
    return 0


def _run_cover(
    args: argparse.Namespace,
) -> tuple[FormalContext, Optional[ClarificationMap], list[CoveringStep]]:
    context, clarification = _load(args)
    motifs = _enumerate(args, context)
    steps = greedy_cover(context, motifs, args.k, HeuristicKind(args.heuristic))
    return context, clarification, steps


def _write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def cmd_cover(args: argparse.Namespace) -> int:
    context, clarification, steps = _run_cover(args)
    labels = _labels(context, clarification)
    total = len(context.extents())
    if args.coverage_csv:
        _write_csv(
            args.coverage_csv,
            ["step", "new_extents", "cumulative"],
            [list(row) for row in coverage_curve(steps)],
        )
    if args.ratios_csv:
        rows = []
        for step, ratios in ratio_curve(steps):
            rows.append([step] + [f"{float(ratios[f]):.6f}" for f in ScaleFamily])
        _write_csv(
            args.ratios_csv, ["step"] + [str(f) for f in ScaleFamily], rows
        )
    if args.json:
        _emit_json(
            {
                "command": "cover",
                "heuristic": args.heuristic,
                "total_extents": total,
                "steps": [
                    {
                        "family": str(s.motif.family),
                        "families": [str(f) for f in s.families],
                        "domain": [labels[g] for g in s.motif.domain],
                        "new_extents": s.new_extents,
                        "cumulative": s.cumulative,
                        "tie_count": s.tie_count,
                    }
                    for s in steps
                ],
            }
        )
        return 0
    for i, s in enumerate(steps, 1):
        names = ", ".join(labels[g] for g in s.motif.domain)
        print(
            f"step {i}: {s.motif.family} {{{names}}}"
            f" new={s.new_extents} cumulative={s.cumulative}"
        )
    covered = steps[-1].cumulative if steps else 0
    print(f"covered {covered} of {total} extents")
    return 0


def cmd_explain(args: argparse.Namespace) -> int:
    context, clarification, steps = _run_cover(args)
    doc = explain_covering(context, steps, clarification=clarification)
    if args.json:
        _emit_json(
            {
                "command": "explain",
                "heuristic": args.heuristic,
                "entries": [
                    {
                        "text": e.text,
                        "family": str(e.motif.family),
                        "families_rendered": [str(f) for f in e.families_rendered],
                        "domain": [context.objects[g] for g in e.motif.domain],
                    }
                    for e in doc.entries
                ],
            }
        )
        return 0
    print(doc.to_text())
    return 0


def cmd_basis(args: argparse.Namespace) -> int:
    context, _ = _load(args)
    motifs = _enumerate(args, context)
    basis = build_basis(context, motifs)
    text = to_burmeister(basis)
    if args.output:
        args.output.write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    return 0


def _parse_scale_spec(spec: str) -> FormalContext:
    name, sep, size = spec.partition(":")
    if not sep:
        raise ValueError(f"scale spec {spec!r} must look like 'ordinal:4'")
    return build_scale(ScaleFamily.from_name(name), int(size))


def cmd_scaling_dim(args: argparse.Namespace) -> int:
    context, _ = _load(args)
    scales = [_parse_scale_spec(s) for s in args.scales.split(",") if s]
    d = scaling_dimension(context, scales, max_d=args.max_d)
    if args.json:
        _emit_json(
            {"command": "scaling-dim", "dimension": d, "max_d": args.max_d}
        )
        return 0
    if d is None:
        print(f"unknown (no full measure with at most {args.max_d} scales)")
    else:
        print(d)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordmotif", description="Ordinal motifs in formal contexts"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("concepts", help="count (and list) the extents")
    _add_input_flags(p)
    p.add_argument("--list", action="store_true", help="print every extent")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_concepts)

    p = sub.add_parser("motifs", help="enumerate motifs and tabulate counts")
    _add_input_flags(p)
    _add_enumeration_flags(p)
    p.add_argument(
        "--maximal-only", action="store_true", help="list only maximal motifs"
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_motifs)

    p = sub.add_parser("cover", help="greedy extent covering by motifs")
    _add_input_flags(p)
    _add_enumeration_flags(p)
    _add_pool_flag(p)
    _add_cover_flags(p)
    p.add_argument("--coverage-csv", type=Path, help="write the coverage curve")
    p.add_argument("--ratios-csv", type=Path, help="write per-step family ratios")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("explain", help="textual explanations for a covering")
    _add_input_flags(p)
    _add_enumeration_flags(p)
    _add_pool_flag(p)
    _add_cover_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("basis", help="fold a complete covering into one context")
    _add_input_flags(p)
    _add_enumeration_flags(p)
    _add_pool_flag(p)
    p.add_argument("--output", type=Path, help="write Burmeister output here")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("scaling-dim", help="least number of scales that fully measure")
    _add_input_flags(p)
    p.add_argument(
        "--scales",
        required=True,
        help="comma separated specs like 'ordinal:4,nominal:2'",
    )
    p.add_argument("--max-d", type=int, default=4, help="search cap (default 4)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scaling_dim)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ParseError, IncompleteCoveringError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
