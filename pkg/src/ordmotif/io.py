"""Reading and writing formal contexts in Burmeister (.cxt) and CSV form.

Burmeister layout::

    B
    <optional name line>
    <object count>
    <attribute count>
    <blank line>
    <object names, one per line>
    <attribute names, one per line>
    <incidence rows of '.' and 'X', one per object>

CSV layout: header row of attribute names (first cell is a corner label and
is ignored), then one row per object holding its name followed by 0/1 cells.
"""

from __future__ import annotations

import csv
import io as _io
from pathlib import Path

from .context import FormalContext


class ParseError(ValueError):
    """Context input rejected; ``line`` is 1-based where it applies."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


def _int_line(lines: list[str], i: int, what: str) -> int:
    if i >= len(lines):
        raise ParseError(f"missing {what}", len(lines))
    try:
        value = int(lines[i].strip())
    except ValueError:
        raise ParseError(f"expected {what}, got {lines[i]!r}", i + 1) from None
    if value < 0:
        raise ParseError(f"{what} must be nonnegative", i + 1)
    return value


def parse_burmeister(text: str) -> FormalContext:
    lines = text.splitlines()
    if not lines or lines[0].strip() != "B":
        raise ParseError("expected header 'B'", 1)

    # The name line is optional. Without it the two counts follow 'B'
    # directly and the separator blank comes third.
    def looks_like_counts(i: int) -> bool:
        try:
            int(lines[i].strip())
            int(lines[i + 1].strip())
        except (ValueError, IndexError):
            return False
        return i + 2 < len(lines) and lines[i + 2].strip() == ""

    if looks_like_counts(1):
        counts_at = 1
    else:
        counts_at = 2  # line 2 is the context name, which we do not keep
    n_objects = _int_line(lines, counts_at, "object count")
    n_attributes = _int_line(lines, counts_at + 1, "attribute count")
    sep = counts_at + 2
    if sep >= len(lines) or lines[sep].strip() != "":
        raise ParseError("expected blank line after counts", sep + 1)

    need = sep + 1 + n_objects + n_attributes + n_objects
    if len(lines) < need:
        raise ParseError(
            f"truncated input: expected at least {need} lines, got {len(lines)}",
            len(lines),
        )
    at = sep + 1
    objects = [lines[at + i].rstrip("\r") for i in range(n_objects)]
    at += n_objects
    attributes = [lines[at + i].rstrip("\r") for i in range(n_attributes)]
    at += n_attributes

    incidence = []
    for i in range(n_objects):
        raw = lines[at + i].rstrip("\r")
        if len(raw) != n_attributes:
            raise ParseError(
                f"row width {len(raw)} does not match attribute count {n_attributes}",
                at + i + 1,
            )
        row = []
        for ch in raw:
            if ch == "X":
                row.append(1)
            elif ch == ".":
                row.append(0)
            else:
                raise ParseError(f"incidence character {ch!r} is not '.' or 'X'", at + i + 1)
        incidence.append(row)
    try:
        return FormalContext(objects, attributes, incidence)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def to_burmeister(context: FormalContext) -> str:
    out = ["B", ""]
    out.append(str(len(context.objects)))
    out.append(str(len(context.attributes)))
    out.append("")
    out.extend(context.objects)
    out.extend(context.attributes)
    for row in context.rows:
        out.append(
            "".join("X" if row >> m & 1 else "." for m in range(len(context.attributes)))
        )
    return "\n".join(out) + "\n"


def parse_csv(text: str) -> FormalContext:
    reader = csv.reader(_io.StringIO(text))
    table = list(reader)
    if not table:
        raise ParseError("empty CSV input", 1)
    attributes = table[0][1:]
    objects = []
    incidence = []
    for i, row in enumerate(table[1:], start=2):
        if len(row) != len(attributes) + 1:
            raise ParseError(
                f"row has {len(row)} cells, expected {len(attributes) + 1}", i
            )
        objects.append(row[0])
        cells = []
        for cell in row[1:]:
            cell = cell.strip()
            if cell not in ("0", "1"):
                raise ParseError(f"cell {cell!r} is not 0 or 1", i)
            cells.append(int(cell))
        incidence.append(cells)
    try:
        return FormalContext(objects, attributes, incidence)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def to_csv(context: FormalContext) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + list(context.attributes))
    for g, row in enumerate(context.rows):
        writer.writerow(
            [context.objects[g]]
            + [str(row >> m & 1) for m in range(len(context.attributes))]
        )
    return buf.getvalue()


_FORMATS = ("burmeister", "csv")


def parse_context(data: str | bytes, fmt: str) -> FormalContext:
    """Parse ``data`` in the named format ('burmeister' or 'csv')."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    if fmt == "burmeister":
        return parse_burmeister(data)
    if fmt == "csv":
        return parse_csv(data)
    raise ParseError(f"unknown format {fmt!r}; expected one of {_FORMATS}")


def format_for_path(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix == ".cxt":
        return "burmeister"
    if suffix == ".csv":
        return "csv"
    raise ParseError(f"cannot infer format from suffix {suffix!r}; pass it explicitly")


def load_context(path: str | Path, fmt: str | None = None) -> FormalContext:
    return parse_context(Path(path).read_bytes(), fmt or format_for_path(path))


def save_context(context: FormalContext, path: str | Path, fmt: str | None = None) -> None:
    fmt = fmt or format_for_path(path)
    if fmt == "burmeister":
        Path(path).write_text(to_burmeister(context), encoding="utf-8")
    elif fmt == "csv":
        Path(path).write_text(to_csv(context), encoding="utf-8")
    else:
        raise ParseError(f"unknown format {fmt!r}; expected one of {_FORMATS}")
