"""Reading and writing structure files.

Text format, hand-editable:

    elements: e a b c
    op dot:
    e a b c
    a e c b
    b c e a
    c b a e
    op odot:
    ...
    e: e

One or two named operation tables; the optional trailing line pins the
distinguished element.  The JSON mirror uses the same field names:

    {"elements": [...], "ops": [{"name": "dot", "table": [[...], ...]}], "e": "e"}

Tables are written with element labels, not indices, in both formats.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError
from .joined import JoinedStructure
from .tables import FiniteGroup, FiniteMagma, FiniteSemigroup, Table


@dataclass(frozen=True)
class MagmaFile:
    """Parsed structure file: labels, named tables, optional joiner."""

    elements: tuple[str, ...]
    ops: tuple[tuple[str, Table], ...]
    e: int | None

    @property
    def n(self) -> int:
        return len(self.elements)

    def magma(self, which: int = 0) -> FiniteMagma:
        return FiniteMagma(self.elements, self.ops[which][1])

    def semigroup(self, which: int = 0) -> FiniteSemigroup:
        return FiniteSemigroup(self.magma(which))

    def group(self, which: int = 0) -> FiniteGroup:
        return FiniteGroup(self.semigroup(which))

    def joined(self) -> JoinedStructure:
        if len(self.ops) != 2:
            raise ParseError("a joined structure needs exactly two operation tables")
        if self.e is None:
            raise ParseError("a joined structure needs a distinguished element line")
        return JoinedStructure(self.elements, self.ops[0][1], self.ops[1][1], self.e)


def parse_text(text: str) -> MagmaFile:
    """Parse the text format; errors carry 1-based line numbers."""
    lines = text.splitlines()
    elements: tuple[str, ...] | None = None
    ops: list[tuple[str, Table]] = []
    e: int | None = None
    index: dict[str, int] = {}

    i = 0
    while i < len(lines):
        line = lines[i].strip()
        lineno = i + 1
        i += 1
        if not line or line.startswith("#"):
            continue
        if line.startswith("elements:"):
            if elements is not None:
                raise ParseError("duplicate elements line", lineno)
            labels = line[len("elements:"):].split()
            if not labels:
                raise ParseError("elements line lists no labels", lineno)
            if len(set(labels)) != len(labels):
                raise ParseError("element labels are not distinct", lineno)
            elements = tuple(labels)
            index = {lab: k for k, lab in enumerate(labels)}
            continue
        if line.startswith("op ") and line.endswith(":"):
            if elements is None:
                raise ParseError("operation table before elements line", lineno)
            name = line[3:-1].strip()
            if not name:
                raise ParseError("operation needs a name", lineno)
            n = len(elements)
            rows = []
            for r in range(n):
                if i >= len(lines):
                    raise ParseError(f"table {name!r} ends after {r} of {n} rows", lineno)
                rowline = lines[i].strip()
                rowno = i + 1
                i += 1
                cells = rowline.split()
                if len(cells) != n:
                    raise ParseError(
                        f"row has {len(cells)} entries, expected {n}", rowno, 1
                    )
                row = []
                for c, cell in enumerate(cells):
                    if cell not in index:
                        raise ParseError(f"unknown label {cell!r}", rowno, c + 1)
                    row.append(index[cell])
                rows.append(tuple(row))
            ops.append((name, tuple(rows)))
            continue
        if line.startswith("e:"):
            if elements is None:
                raise ParseError("distinguished element before elements line", lineno)
            label = line[2:].strip()
            if label not in index:
                raise ParseError(f"unknown label {label!r}", lineno)
            e = index[label]
            continue
        raise ParseError(f"unrecognized line {line!r}", lineno)

    if elements is None:
        raise ParseError("missing elements line")
    if not ops:
        raise ParseError("no operation tables")
    if len(ops) > 2:
        raise ParseError("at most two operation tables are supported")
    if len({name for name, _ in ops}) != len(ops):
        raise ParseError("operation names are not distinct")
    return MagmaFile(elements, tuple(ops), e)


def parse_json_text(text: str) -> MagmaFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    try:
        elements = tuple(str(x) for x in data["elements"])
    except (KeyError, TypeError):
        raise ParseError("missing or malformed elements field") from None
    if len(set(elements)) != len(elements):
        raise ParseError("element labels are not distinct")
    index = {lab: k for k, lab in enumerate(elements)}
    n = len(elements)
    ops = []
    for op in data.get("ops", []):
        name = op.get("name")
        rows = op.get("table")
        if not isinstance(name, str) or not isinstance(rows, list) or len(rows) != n:
            raise ParseError(f"malformed table for op {name!r}")
        table = []
        for row in rows:
            if not isinstance(row, list) or len(row) != n:
                raise ParseError(f"malformed row in op {name!r}")
            try:
                table.append(tuple(index[cell] for cell in row))
            except KeyError as exc:
                raise ParseError(f"unknown label {exc.args[0]!r} in op {name!r}") from None
        ops.append((name, tuple(table)))
    if not ops:
        raise ParseError("no operation tables")
    if len(ops) > 2:
        raise ParseError("at most two operation tables are supported")
    e = None
    if data.get("e") is not None:
        label = str(data["e"])
        if label not in index:
            raise ParseError(f"unknown label {label!r} for e")
        e = index[label]
    return MagmaFile(elements, tuple(ops), e)


def parse_path(path: str | Path) -> MagmaFile:
    """Parse a structure file; .json goes through the JSON reader."""
    p = Path(path)
    text = p.read_text()
    if p.suffix == ".json":
        return parse_json_text(text)
    return parse_text(text)


def to_text(mf: MagmaFile) -> str:
    lines = ["elements: " + " ".join(mf.elements)]
    for name, table in mf.ops:
        lines.append(f"op {name}:")
        for row in table:
            lines.append(" ".join(mf.elements[v] for v in row))
    if mf.e is not None:
        lines.append(f"e: {mf.elements[mf.e]}")
    return "\n".join(lines) + "\n"


def to_json(mf: MagmaFile) -> str:
    data = {
        "elements": list(mf.elements),
        "ops": [
            {"name": name, "table": [[mf.elements[v] for v in row] for row in table]}
            for name, table in mf.ops
        ],
        "e": None if mf.e is None else mf.elements[mf.e],
    }
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def file_of_joined(j: JoinedStructure, first: str = "dot", second: str = "odot") -> MagmaFile:
    return MagmaFile(j.names, ((first, j.dot), (second, j.odot)), j.e)


def file_of_semigroup(s: FiniteSemigroup, name: str = "dot", e: int | None = None) -> MagmaFile:
    return MagmaFile(s.names, ((name, s.table),), e)
