"""Plain-text matroid files.

Format::

    # comment lines start with '#'
    q r n
    a11 a12 ... a1n
    ...
    ar1 ar2 ... arn
    w: w1 w2 ... wn        (optional; default all 1)

The ``r`` matrix rows list the ``n`` columns (ground elements ``0..n-1``).
The weight values may continue on the lines after ``w:``.
"""

from __future__ import annotations

from pathlib import Path

from .errors import FieldError, ParseError
from .gf import field_spec
from .linalg import GFMatrix
from .matroid import WeightedRepMatroid, from_matrix


def _ints(tokens, what):
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"non-integer token in {what}: {exc}") from None


def loads(text: str) -> WeightedRepMatroid:
    """Parse a matroid file; element labels are ``0..n-1``."""
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append(line)
    if not lines:
        raise ParseError("empty matroid file")
    header = _ints(lines[0].split(), "header")
    if len(header) != 3:
        raise ParseError(f"header must be 'q r n', got {lines[0]!r}")
    q, r, n = header
    if r < 0 or n < 0:
        raise ParseError("negative dimensions in header")
    try:
        F = field_spec(q)
    except FieldError as exc:
        raise ParseError(str(exc)) from None

    body = lines[1:]
    weights = None
    for i, line in enumerate(body):
        if line.startswith("w:"):
            tokens = line[2:].split()
            for extra in body[i + 1 :]:
                tokens += extra.split()
            weights = _ints(tokens, "weights")
            body = body[:i]
            break
    rows = [_ints(line.split(), f"matrix row {i + 1}") for i, line in enumerate(body)]
    if len(rows) != r:
        raise ParseError(f"expected {r} matrix rows, found {len(rows)}")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ParseError(f"matrix row {i + 1} has {len(row)} entries, expected {n}")
        for x in row:
            if not 0 <= x < q:
                raise ParseError(f"entry {x} outside GF({q})")
    if weights is not None:
        if len(weights) != n:
            raise ParseError(f"expected {n} weights, found {len(weights)}")
        if any(w < 1 for w in weights):
            raise ParseError("weights must be positive")
    A = GFMatrix(F, tuple(tuple(row) for row in rows), n)
    return from_matrix(F, A, weights)


def dumps(M: WeightedRepMatroid, comment: str | None = None) -> str:
    """Serialize ``M``; labels are not stored, so they read back as ``0..n-1``."""
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"{M.field.q} {M.columns.nrows} {M.n}")
    out.extend(" ".join(str(x) for x in row) for row in M.columns.entries)
    out.append("w: " + " ".join(str(w) for w in M.weights))
    return "\n".join(out) + "\n"


def load(path: str | Path) -> WeightedRepMatroid:
    return loads(Path(path).read_text())


def dump(M: WeightedRepMatroid, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(dumps(M, comment))
