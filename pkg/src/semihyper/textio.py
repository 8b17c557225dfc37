"""The ``.shr`` structure-definition format.

Line-oriented grammar::

    semihyperring NAME
    elements: l0 l1 ... lk
    zero: l0
    unity: lj                 (optional)
    add: (a,b) = {x,y,...}    (one cell per line)
    mul: (a,b) = c            (one cell per line)

Labels match ``[A-Za-z0-9_.]+``.  Blank lines and ``#`` comments are
ignored.  The addition is commutative, so either triangle may be given and
the mirror cell is filled in; declaring both with different values is a
conflict.  Zero-row addition cells default to ``(0,x) = {x}`` and the zero
row and column of the multiplication default to zero; every other cell must
be declared.  The canonical serialization emits elements in index order,
only the upper add triangle, no defaulted cells, and sets sorted by element
index, so parse(serialize(S)) reproduces the tables exactly.
"""

from __future__ import annotations

import re

from .core import AxiomReport, PreconditionError, Semihyperring

LABEL_RE = r"[A-Za-z0-9_.]+"


class ParseError(ValueError):
    """Base for structure-file errors; carries a 1-based line and column."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        place = ""
        if line is not None:
            place = f" (line {line}" + (f", col {col}" if col is not None else "") + ")"
        super().__init__(message + place)
        self.line = line
        self.col = col


class SyntaxParseError(ParseError):
    """A line does not match the grammar."""


class MissingDeclarationError(ParseError):
    """A required declaration (header, elements, zero) is absent."""


class DuplicateLabelError(ParseError):
    """An element label is declared twice."""


class UndeclaredLabelError(ParseError):
    """A label is used without being declared."""


class MissingCellError(ParseError):
    """A table cell is still undefined after defaulting."""


class EmptySetError(ParseError):
    """An addition cell was declared as the empty set."""


class ConflictingCellError(ParseError):
    """A cell is declared twice, or clashes with its commutative mirror."""


class AxiomError(ValueError):
    """Parsed structure fails axiom verification; the report is attached."""

    def __init__(self, message: str, report: AxiomReport):
        super().__init__(message)
        self.report = report


_HEADER = re.compile(rf"^\s*semihyperring\s+({LABEL_RE})\s*$")
_ELEMENTS = re.compile(r"^\s*elements\s*:\s*(.*?)\s*$")
_ZERO = re.compile(rf"^\s*zero\s*:\s*({LABEL_RE})\s*$")
_UNITY = re.compile(rf"^\s*unity\s*:\s*({LABEL_RE})\s*$")
_ADD = re.compile(
    rf"^\s*add\s*:\s*\(\s*({LABEL_RE})\s*,\s*({LABEL_RE})\s*\)\s*=\s*\{{(.*?)\}}\s*$")
_MUL = re.compile(
    rf"^\s*mul\s*:\s*\(\s*({LABEL_RE})\s*,\s*({LABEL_RE})\s*\)\s*=\s*({LABEL_RE})\s*$")
_LABEL_ONLY = re.compile(rf"^{LABEL_RE}$")


def _strip_comment(raw: str) -> str:
    pos = raw.find("#")
    return raw if pos < 0 else raw[:pos]


def parse_table(text: str) -> Semihyperring:
    """Parse without enforcing the axioms; structural errors still raise."""
    name = None
    labels = None
    index = {}
    zero_label = None
    unity_label = None
    add_cells = {}  # (i, j) -> (frozenset, line)
    mul_cells = {}  # (i, j) -> (value, line)
    header_line = None

    def lookup(label, line, col):
        if label not in index:
            raise UndeclaredLabelError(f"label {label!r} is not declared", line, col)
        return index[label]

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        first_col = len(line) - len(line.lstrip()) + 1
        if name is None:
            m = _HEADER.match(line)
            if not m:
                raise SyntaxParseError(
                    "expected a 'semihyperring NAME' header", lineno, first_col)
            name = m.group(1)
            header_line = lineno
            continue
        m = _ELEMENTS.match(line)
        if m:
            if labels is not None:
                raise ConflictingCellError("elements declared twice", lineno, first_col)
            parts = m.group(1).split()
            if not parts:
                raise SyntaxParseError("elements line declares no labels", lineno, first_col)
            labels = []
            for part in parts:
                if not _LABEL_ONLY.match(part):
                    raise SyntaxParseError(f"bad element label {part!r}", lineno, first_col)
                if part in index:
                    raise DuplicateLabelError(
                        f"element label {part!r} declared twice", lineno, first_col)
                index[part] = len(labels)
                labels.append(part)
            continue
        if labels is None:
            raise MissingDeclarationError(
                "elements must be declared before other lines", lineno, first_col)
        m = _ZERO.match(line)
        if m:
            if zero_label is not None:
                raise ConflictingCellError("zero declared twice", lineno, first_col)
            zero_label = m.group(1)
            lookup(zero_label, lineno, line.find(zero_label) + 1)
            continue
        m = _UNITY.match(line)
        if m:
            if unity_label is not None:
                raise ConflictingCellError("unity declared twice", lineno, first_col)
            unity_label = m.group(1)
            lookup(unity_label, lineno, line.find(unity_label) + 1)
            continue
        m = _ADD.match(line)
        if m:
            a = lookup(m.group(1), lineno, m.start(1) + 1)
            b = lookup(m.group(2), lineno, m.start(2) + 1)
            body = m.group(3).strip()
            if not body:
                raise EmptySetError(
                    f"addition cell ({m.group(1)},{m.group(2)}) is empty",
                    lineno, m.start(3) + 1)
            members = set()
            for part in body.split(","):
                part = part.strip()
                if not _LABEL_ONLY.match(part):
                    raise SyntaxParseError(f"bad set member {part!r}", lineno, m.start(3) + 1)
                members.add(lookup(part, lineno, m.start(3) + 1))
            cell = frozenset(members)
            for key in ((a, b), (b, a)):
                existing = add_cells.get(key)
                if existing is not None and existing[0] != cell:
                    raise ConflictingCellError(
                        f"addition cell ({m.group(1)},{m.group(2)}) conflicts with "
                        f"line {existing[1]}", lineno, first_col)
            add_cells.setdefault((a, b), (cell, lineno))
            add_cells.setdefault((b, a), (cell, lineno))
            continue
        m = _MUL.match(line)
        if m:
            a = lookup(m.group(1), lineno, m.start(1) + 1)
            b = lookup(m.group(2), lineno, m.start(2) + 1)
            c = lookup(m.group(3), lineno, m.start(3) + 1)
            if (a, b) in mul_cells:
                raise ConflictingCellError(
                    f"multiplication cell ({m.group(1)},{m.group(2)}) declared twice",
                    lineno, first_col)
            mul_cells[(a, b)] = (c, lineno)
            continue
        raise SyntaxParseError("unrecognized line", lineno, first_col)

    if name is None:
        raise MissingDeclarationError("empty document: no 'semihyperring NAME' header")
    if labels is None:
        raise MissingDeclarationError("no elements declared", header_line)
    if zero_label is None:
        raise MissingDeclarationError("no zero declared", header_line)

    n = len(labels)
    zero = index[zero_label]
    unity = index[unity_label] if unity_label is not None else None

    add = [[None] * n for _ in range(n)]
    mul = [[None] * n for _ in range(n)]
    for (a, b), (cell, _) in add_cells.items():
        add[a][b] = cell
    for (a, b), (c, _) in mul_cells.items():
        mul[a][b] = c
    for x in range(n):
        if add[zero][x] is None:
            add[zero][x] = frozenset((x,))
        if add[x][zero] is None:
            add[x][zero] = frozenset((x,))
        if mul[zero][x] is None:
            mul[zero][x] = zero
        if mul[x][zero] is None:
            mul[x][zero] = zero
    for a in range(n):
        for b in range(n):
            if add[a][b] is None:
                raise MissingCellError(
                    f"addition cell ({labels[a]},{labels[b]}) is missing")
            if mul[a][b] is None:
                raise MissingCellError(
                    f"multiplication cell ({labels[a]},{labels[b]}) is missing")

    return Semihyperring(add, mul, zero=zero, unity=unity, name=name, labels=labels)


def parse_structure(text: str) -> Semihyperring:
    """Parse and verify; raises AxiomError (report attached) when invalid."""
    S = parse_table(text)
    if not S.is_valid:
        first = S.axiom_report.first_failure()
        witness = ",".join(S.labels[i] for i in first.witness)
        raise AxiomError(
            f"structure {S.name} violates {first.axiom} at ({witness})",
            S.axiom_report)
    return S


def serialize_structure(S: Semihyperring) -> str:
    """Canonical text form; parsing it reproduces the tables exactly."""
    for label in S.labels + (S.name,):
        if not _LABEL_ONLY.match(label):
            raise PreconditionError(f"label {label!r} cannot be serialized")
    lines = [f"semihyperring {S.name}",
             "elements: " + " ".join(S.labels),
             f"zero: {S.labels[S.zero]}"]
    if S.unity is not None:
        lines.append(f"unity: {S.labels[S.unity]}")
    z = S.zero
    for i in range(S.order):
        if i == z:
            continue
        for j in range(i, S.order):
            if j == z:
                continue
            cell = ",".join(S.labels[t] for t in sorted(S.add[i][j]))
            lines.append(f"add: ({S.labels[i]},{S.labels[j]}) = {{{cell}}}")
    for i in range(S.order):
        if i == z:
            continue
        for j in range(S.order):
            if j == z:
                continue
            lines.append(f"mul: ({S.labels[i]},{S.labels[j]}) = {S.labels[S.mul[i][j]]}")
    return "\n".join(lines) + "\n"
