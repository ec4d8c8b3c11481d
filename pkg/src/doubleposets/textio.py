"""Plain-text serialization of double posets.

Format, three lines::

    dp <n>
    r1: 0<1, 1<2
    r2:

Indices are 0-based decimal; whitespace around tokens is ignored.  The
parser applies transitive closure and rejects cycles.  The serializer
writes the covering pairs of the canonical form, so parse(serialize(d))
lands back in d's isomorphism class.
"""

from __future__ import annotations

from .dposets import DoublePoset, canonicalize, decode
from .errors import CycleError, ParseError
from .relations import validate


def _parse_pairs(body: str, line_no: int, n: int):
    pairs = []
    col = 1
    for chunk in body.split(","):
        token = chunk.strip()
        if not token:
            if body.strip():
                raise ParseError("empty relation entry", line_no, col)
            continue
        if "<" not in token:
            raise ParseError(f"expected i<j, got {token!r}", line_no, col)
        left, _, right = token.partition("<")
        try:
            i = int(left.strip())
            j = int(right.strip())
        except ValueError:
            raise ParseError(f"non-integer index in {token!r}", line_no, col) from None
        pairs.append((i, j))
        col += len(chunk) + 1
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise ParseError(f"index out of range in {i}<{j} (n={n})", line_no)
    return pairs


def parse_text(text: str) -> DoublePoset:
    lines = [ln for ln in text.splitlines()]
    while lines and not lines[-1].strip():
        lines.pop()
    if len(lines) != 3:
        raise ParseError(f"expected 3 lines, got {len(lines)}", max(len(lines), 1))
    head = lines[0].split()
    if len(head) != 2 or head[0] != "dp":
        raise ParseError("header must be 'dp <n>'", 1)
    try:
        n = int(head[1])
    except ValueError:
        raise ParseError(f"bad element count {head[1]!r}", 1) from None
    if n < 0:
        raise ParseError(f"negative element count {n}", 1)
    rels = []
    for line_no, tag in ((2, "r1"), (3, "r2")):
        raw = lines[line_no - 1].strip()
        if not raw.startswith(tag + ":"):
            raise ParseError(f"expected '{tag}:' prefix", line_no)
        body = raw[len(tag) + 1 :]
        pairs = _parse_pairs(body, line_no, n)
        try:
            rels.append(validate(pairs, n))
        except CycleError as exc:
            raise CycleError(f"line {line_no}: {exc}") from exc
    return DoublePoset(n, rels[0], rels[1])


def parse_file(path) -> DoublePoset:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_text(fh.read())


def serialize(d: DoublePoset) -> str:
    """Canonical covering-pair text for d's isomorphism class."""
    rep = decode(canonicalize(d)[0])
    lines = [f"dp {rep.n}"]
    for tag, rel in (("r1", rep.r1), ("r2", rep.r2)):
        covers = ", ".join(f"{i}<{j}" for i, j in rel.covers())
        lines.append(f"{tag}: {covers}".rstrip())
    return "\n".join(lines) + "\n"
