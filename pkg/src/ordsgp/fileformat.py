"""Line-based document format for structures.

Ordered semigroup (.osg):

    kind: osg
    elements: 2
    names: zero one        # optional
    table:
    0 0
    0 1
    order:
    0 1

The order block lists the non-reflexive pairs a b meaning a <= b;
reflexive pairs are implied.  An unordered semigroup (.sgp) is the same
document with ``kind: sgp`` and no order block.  '#' starts a comment,
blank lines are ignored.

Canonical serialization uses single spaces, sorted order pairs, and a
trailing newline, so parse(serialize(S)) = S and serialize(parse(text))
reproduces canonical text byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteSemigroup, OrderedSemigroup, validate_semigroup, validate_structure
from .errors import ParseError


@dataclass(frozen=True)
class StructureDocument:
    """The document model: header, table rows, order pairs.

    Comments are discarded at parse time; canonical text has none, so
    canonical documents round-trip bit-exactly.
    """

    kind: str
    size: int
    names: tuple[str, ...] | None
    table: tuple[tuple[int, ...], ...]
    order_pairs: tuple[tuple[int, int], ...]

    def to_text(self) -> str:
        out = [f"kind: {self.kind}", f"elements: {self.size}"]
        if self.names is not None:
            out.append("names: " + " ".join(self.names))
        out.append("table:")
        for row in self.table:
            out.append(" ".join(str(v) for v in row))
        if self.kind == "osg":
            out.append("order:")
            for a, b in sorted(self.order_pairs):
                out.append(f"{a} {b}")
        return "\n".join(out) + "\n"


def _logical_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _take(lines, what: str):
    try:
        return next(lines)
    except StopIteration:
        raise ParseError(0, f"unexpected end of document, expected {what}") from None


def _expect_key(lineno: int, line: str, key: str) -> str:
    prefix = key + ":"
    if not line.startswith(prefix):
        raise ParseError(lineno, f"expected '{key}:', got {line!r}")
    return line[len(prefix):].strip()


def _int_in_range(lineno: int, token: str, bound: int, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(lineno, f"{what} must be an integer, got {token!r}") from None
    if not 0 <= value < bound:
        raise ParseError(lineno, f"{what} {value} out of range 0..{bound - 1}")
    return value


def document_from_text(text: str) -> StructureDocument:
    """Parse document text; syntax errors carry the offending line number."""
    lines = _logical_lines(text)

    lineno, line = _take(lines, "'kind:'")
    kind = _expect_key(lineno, line, "kind")
    if kind not in ("osg", "sgp"):
        raise ParseError(lineno, f"kind must be 'osg' or 'sgp', got {kind!r}")

    lineno, line = _take(lines, "'elements:'")
    raw = _expect_key(lineno, line, "elements")
    try:
        size = int(raw)
    except ValueError:
        raise ParseError(lineno, f"elements must be an integer, got {raw!r}") from None
    if size < 1:
        raise ParseError(lineno, "elements must be positive")

    lineno, line = _take(lines, "'names:' or 'table:'")
    names = None
    if line.startswith("names:"):
        tokens = _expect_key(lineno, line, "names").split()
        if len(tokens) != size:
            raise ParseError(lineno, f"expected {size} names, got {len(tokens)}")
        names = tuple(tokens)
        lineno, line = _take(lines, "'table:'")

    if line != "table:":
        raise ParseError(lineno, f"expected 'table:', got {line!r}")
    table = []
    for _ in range(size):
        lineno, line = _take(lines, "a table row")
        tokens = line.split()
        if len(tokens) != size:
            raise ParseError(lineno, f"table row needs {size} entries, got {len(tokens)}")
        table.append(tuple(_int_in_range(lineno, t, size, "table entry") for t in tokens))

    if kind == "sgp":
        leftover = next(lines, None)
        if leftover is not None:
            raise ParseError(leftover[0], f"unexpected content: {leftover[1]!r}")
        return StructureDocument("sgp", size, names, tuple(table), ())

    lineno, line = _take(lines, "'order:'")
    if line != "order:":
        raise ParseError(lineno, f"expected 'order:', got {line!r}")
    pairs = []
    for lineno, line in lines:
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(lineno, f"order pair needs 2 entries, got {len(tokens)}")
        pairs.append(
            (
                _int_in_range(lineno, tokens[0], size, "order element"),
                _int_in_range(lineno, tokens[1], size, "order element"),
            )
        )
    return StructureDocument("osg", size, names, tuple(table), tuple(pairs))


def parse_document(text: str, close_order: bool = False):
    """Parse a .osg or .sgp document into a validated structure."""
    doc = document_from_text(text)
    if doc.kind == "sgp":
        return validate_semigroup(doc.size, doc.table, doc.names)
    return validate_structure(
        doc.size, doc.table, doc.order_pairs, doc.names, close_order=close_order
    )


def document_of(structure) -> StructureDocument:
    if isinstance(structure, OrderedSemigroup):
        return StructureDocument(
            "osg",
            structure.size,
            structure.names,
            structure.table,
            tuple(sorted(structure.order_pairs())),
        )
    return StructureDocument("sgp", structure.size, structure.names, structure.table, ())


def serialize_document(structure) -> str:
    """Canonical text for a structure; parse(serialize(S)) = S."""
    return document_of(structure).to_text()
