"""The ``.sbrace`` table format and tab-separated result records.

``.sbrace`` layout, one record::

    # comments run to end of line
    4 B4
    0 1 2 3
    ...            (n rows of the + table)

    0 1 2 3
    ...            (n rows of the ∘ table)

Several records in one file are separated by a line holding ``---``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CayleyTablePair, SkewBrace, validate
from .errors import ParseError

SEPARATOR = "---"


def _records(text):
    chunk = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line == SEPARATOR:
            yield chunk
            chunk = []
        else:
            chunk.append((lineno, line))
    yield chunk


def _parse_chunk(chunk):
    lines = [(no, s) for no, s in chunk if s]
    if not lines:
        return None
    lineno, header = lines[0]
    head = header.split(None, 1)
    try:
        n = int(head[0])
    except ValueError:
        raise ParseError(lineno, f"expected order, got {head[0]!r}") from None
    if n < 1:
        raise ParseError(lineno, "order must be positive")
    name = head[1].strip() if len(head) > 1 else None
    body = lines[1:]
    if len(body) != 2 * n:
        last = body[-1][0] if body else lineno
        raise ParseError(last, f"expected {2 * n} table rows, found {len(body)}")
    # the blank line between the tables is required
    gap = range(body[n - 1][0] + 1, body[n][0])
    if not any(no in gap and not s for no, s in chunk):
        raise ParseError(body[n][0], "missing blank line between + and ∘ tables")
    rows = []
    for no, s in body:
        try:
            row = [int(tok) for tok in s.split()]
        except ValueError:
            raise ParseError(no, "non-integer entry") from None
        if len(row) != n:
            raise ParseError(no, f"row has {len(row)} entries, expected {n}")
        if any(x < 0 or x >= n for x in row):
            raise ParseError(no, f"entry out of range 0..{n - 1}")
        rows.append(row)
    return CayleyTablePair(rows[:n], rows[n:]), name


def parse_sbrace(text) -> CayleyTablePair:
    """Parse a single-record file into its table pair."""
    pairs = parse_sbrace_records(text)
    if len(pairs) != 1:
        raise ParseError(1, f"expected one record, found {len(pairs)}")
    return pairs[0][0]


def parse_sbrace_records(text) -> list:
    """All (CayleyTablePair, name) records in a possibly multi-record file."""
    out = []
    for chunk in _records(text):
        rec = _parse_chunk(chunk)
        if rec is not None:
            out.append(rec)
    return out


def load_braces(path) -> list:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return [validate(t, name=name) for t, name in parse_sbrace_records(text)]


def write_sbrace(A: SkewBrace, name=None) -> str:
    name = name if name is not None else A.name
    lines = [f"{A.n} {name}" if name else str(A.n)]
    lines += [" ".join(map(str, row)) for row in A.add.tolist()]
    lines.append("")
    lines += [" ".join(map(str, row)) for row in A.circ.tolist()]
    return "\n".join(lines) + "\n"


def write_sbrace_records(braces) -> str:
    return (SEPARATOR + "\n").join(write_sbrace(B) for B in braces)


@dataclass
class ResultRecord:
    subject: str
    check: str
    verdict: str
    witness: object = None
    time_ms: float = 0.0

    def to_line(self):
        fields = [f"subject={self.subject}", f"check={self.check}", f"verdict={self.verdict}"]
        if self.witness is not None:
            fields.append(f"witness={_clean(self.witness)}")
        fields.append(f"time_ms={self.time_ms:.1f}")
        return "\t".join(fields)

    @classmethod
    def from_line(cls, line):
        kv = dict(part.split("=", 1) for part in line.rstrip("\n").split("\t"))
        return cls(kv["subject"], kv["check"], kv["verdict"], kv.get("witness"),
                   float(kv.get("time_ms", 0)))


def _clean(value):
    return str(value).replace("\t", " ").replace("\n", " ")
