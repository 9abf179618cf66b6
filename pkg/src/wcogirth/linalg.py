"""Dense linear algebra over a :class:`~wcogirth.gf.FieldSpec`.

Matrices are small (desk-scale) and stored as tuples of row tuples.  The one
hot path is :func:`row_space_supports`, which walks the projective classes of
nonzero row-space vectors (codewords) of a matrix.  Over GF(2) it packs each
basis row into an integer bitmask and steps through the coefficient vectors in
Gray-code order, so each codeword costs a single XOR.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import DimensionError, EnumerationCapError, FieldError
from .gf import FieldSpec

# q**rank of any enumerated row space stays at or below this.
ENUMERATION_CAP = 1 << 24

Vector = tuple[int, ...]


@dataclass(frozen=True)
class GFMatrix:
    """An ``nrows x ncols`` matrix over ``field``.

    ``ncols`` must be given explicitly only when there are no rows.
    """

    field: FieldSpec
    entries: tuple[Vector, ...]
    ncols: int = -1

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        ncols = self.ncols
        if ncols < 0:
            if not rows:
                raise DimensionError("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        q = self.field.q
        for row in rows:
            if len(row) != ncols:
                raise DimensionError("ragged matrix rows")
            for x in row:
                if not isinstance(x, int) or not 0 <= x < q:
                    raise FieldError(f"entry {x!r} is not an element of GF({q})")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "ncols", ncols)

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence[Sequence[int]], nrows: int | None = None):
        cols = [tuple(c) for c in columns]
        if nrows is None:
            if not cols:
                raise DimensionError("nrows is required for a matrix without columns")
            nrows = len(cols[0])
        if any(len(c) != nrows for c in cols):
            raise DimensionError("columns of unequal length")
        rows = tuple(tuple(c[i] for c in cols) for i in range(nrows))
        return cls(field, rows, len(cols))

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @cached_property
    def _columns(self) -> tuple[Vector, ...]:
        if not self.entries:
            return ((),) * self.ncols
        return tuple(zip(*self.entries))

    def column(self, j: int) -> Vector:
        return self._columns[j]

    def columns(self) -> list[Vector]:
        return list(self._columns)

    def transpose(self) -> "GFMatrix":
        return GFMatrix(self.field, tuple(self.columns()), self.nrows)

    def select_columns(self, idx: Sequence[int]) -> "GFMatrix":
        return GFMatrix(self.field, tuple(tuple(row[j] for j in idx) for row in self.entries), len(idx))

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


def normalize(F: FieldSpec, v: Sequence[int]) -> Vector | None:
    """Scale ``v`` so its first nonzero entry is 1; ``None`` for the zero vector."""
    for x in v:
        if x:
            if x == 1:
                return tuple(v)
            s = F.inv[x]
            mul = F.mul[s]
            return tuple(mul[y] for y in v)
    return None


def _rref_rows(F: FieldSpec, rows: Sequence[Sequence[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    R = [list(r) for r in rows]
    add, mul, neg, inv = F.add, F.mul, F.neg, F.inv
    pivots: list[int] = []
    lead = 0
    nrows = len(R)
    for col in range(ncols):
        if lead == nrows:
            break
        piv = next((i for i in range(lead, nrows) if R[i][col]), None)
        if piv is None:
            continue
        R[lead], R[piv] = R[piv], R[lead]
        prow = R[lead]
        if prow[col] != 1:
            s = mul[inv[prow[col]]]
            prow = R[lead] = [s[x] for x in prow]
        for i in range(nrows):
            c = R[i][col]
            if i != lead and c:
                f = mul[neg[c]]
                row = R[i]
                R[i] = [add[x][f[y]] for x, y in zip(row, prow)]
        pivots.append(col)
        lead += 1
    return R, pivots


def rref(A: GFMatrix) -> tuple[GFMatrix, int, tuple[int, ...]]:
    """Reduced row echelon form of ``A``.

    Returns ``(R, rank, pivots)`` where ``R`` has the shape of ``A`` with its
    zero rows at the bottom and ``pivots`` are the pivot columns, increasing.
    """
    R, pivots = _rref_rows(A.field, A.entries, A.ncols)
    return GFMatrix(A.field, tuple(tuple(r) for r in R), A.ncols), len(pivots), tuple(pivots)


def rank(A: GFMatrix) -> int:
    return len(_rref_rows(A.field, A.entries, A.ncols)[1])


def rank_of_vectors(F: FieldSpec, vectors: Sequence[Sequence[int]]) -> int:
    vectors = list(vectors)
    if not vectors:
        return 0
    return len(_rref_rows(F, vectors, len(vectors[0]))[1])


def null_space(F: FieldSpec, rows: Sequence[Sequence[int]], ncols: int) -> list[Vector]:
    """Basis of ``{x : row . x = 0 for every row}``, one vector per free column."""
    R, pivots = _rref_rows(F, rows, ncols)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for i, pc in enumerate(pivots):
            x[pc] = F.neg[R[i][f]]
        basis.append(tuple(x))
    return basis


def in_row_space(v: Sequence[int], A: GFMatrix) -> bool:
    """True iff ``v`` is a linear combination of the rows of ``A``."""
    if len(v) != A.ncols:
        raise DimensionError(f"vector of length {len(v)} against {A.ncols} columns")
    if not any(v):
        return True
    r = rank(A)
    return len(_rref_rows(A.field, list(A.entries) + [list(v)], A.ncols)[1]) == r


def in_column_space(v: Sequence[int], A: GFMatrix) -> bool:
    """True iff ``v`` is a linear combination of the columns of ``A``."""
    if len(v) != A.nrows:
        raise DimensionError(f"vector of length {len(v)} against {A.nrows} rows")
    return in_row_space(v, A.transpose())


def in_span(v: Sequence[int], A: GFMatrix, axis: str = "rows") -> bool:
    if axis == "rows":
        return in_row_space(v, A)
    if axis == "columns":
        return in_column_space(v, A)
    raise ValueError(f"axis must be 'rows' or 'columns', not {axis!r}")


def projective_count(q: int, k: int) -> int:
    """Number of points of PG(k-1, q): ``(q**k - 1) / (q - 1)``."""
    return (q**k - 1) // (q - 1)


def check_enumeration_cap(q: int, k: int) -> None:
    if q**k > ENUMERATION_CAP:
        raise EnumerationCapError(f"row space of size {q}^{k} exceeds the cap of 2^24 vectors")


def coefficient_vector(t: int, k: int, q: int) -> Vector:
    """The ``t``-th normalized nonzero vector of length ``k`` in lexicographic order."""
    for j in range(k - 1, -1, -1):
        block = q ** (k - 1 - j)
        if t < block:
            tail = []
            for _ in range(k - 1 - j):
                t, d = divmod(t, q)
                tail.append(d)
            return (0,) * j + (1,) + tuple(reversed(tail))
        t -= block
    raise IndexError("projective class index out of range")


def mask_weigher(weights: Sequence[int], byte_tables: bool = True):
    """Return ``f(mask) -> sum of weights[j] over set bits j``."""
    w = list(weights)
    if not byte_tables or len(w) <= 8:

        def weigh(mask: int) -> int:
            s = 0
            while mask:
                low = mask & -mask
                s += w[low.bit_length() - 1]
                mask ^= low
            return s

        return weigh

    tables = []
    for base in range(0, len(w), 8):
        chunk = w[base : base + 8]
        t = [0] * 256
        for b in range(1, 1 << len(chunk)):
            low = b & -b
            t[b] = t[b ^ low] + chunk[low.bit_length() - 1]
        tables.append(t)

    def weigh(mask: int) -> int:
        s = 0
        for t in tables:
            s += t[mask & 0xFF]
            mask >>= 8
        return s

    return weigh


class RowSpace:
    """Basis of the row space of a matrix, prepared for codeword scans."""

    def __init__(self, A: GFMatrix):
        R, pivots = _rref_rows(A.field, A.entries, A.ncols)
        self.field = A.field
        self.ncols = A.ncols
        self.basis = [tuple(r) for r in R[: len(pivots)]]
        self.rank = len(pivots)
        self.count = projective_count(self.field.q, self.rank) if self.rank else 0
        self.columns = [tuple(row[j] for row in self.basis) for j in range(self.ncols)]
        self.packed = [sum(1 << j for j, x in enumerate(row) if x) for row in self.basis]

    def support_masks(self, start: int = 0, stop: int | None = None) -> Iterator[int]:
        """Bitmask supports of classes ``start..stop-1`` (scalar multiples once).

        Over GF(2) the classes are visited in Gray-code order, so the ``t``-th
        mask need not match :meth:`codeword` ``(t)``; ranges still partition
        the scan.
        """
        check_enumeration_cap(self.field.q, self.rank)
        stop = self.count if stop is None else min(stop, self.count)
        if start < 0 or start > stop:
            raise ValueError(f"bad class range [{start}, {stop})")
        if start == stop:
            return
        if self.field.q == 2:
            yield from self._gray_masks(start, stop)
        else:
            yield from self._generic_masks(start, stop)

    def _gray_masks(self, start: int, stop: int) -> Iterator[int]:
        rows = self.packed
        # Class t corresponds to the Gray code of t + 1.
        i = start + 1
        g = i ^ (i >> 1)
        cw = 0
        b = 0
        while g >> b:
            if (g >> b) & 1:
                cw ^= rows[b]
            b += 1
        yield cw
        for i in range(start + 2, stop + 1):
            cw ^= rows[(i & -i).bit_length() - 1]
            yield cw

    def _generic_masks(self, start: int, stop: int) -> Iterator[int]:
        F = self.field
        add, mul = F.add, F.mul
        k, q = self.rank, F.q
        cols = self.columns
        for t in range(start, stop):
            c = coefficient_vector(t, k, q)
            terms = [(mul[ci], i) for i, ci in enumerate(c) if ci]
            mask = 0
            for j, col in enumerate(cols):
                s = 0
                for m, i in terms:
                    s = add[s][m[col[i]]]
                if s:
                    mask |= 1 << j
            yield mask

    def codeword(self, t: int) -> Vector:
        """The normalized codeword of class ``t`` under the lexicographic class order."""
        F = self.field
        c = coefficient_vector(t, self.rank, F.q)
        out = [0] * self.ncols
        for ci, row in zip(c, self.basis):
            if ci:
                m = F.mul[ci]
                out = [F.add[x][m[y]] for x, y in zip(out, row)]
        return tuple(out)


def mask_to_indices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _check_weights(weights: Sequence[int], n: int) -> list[int]:
    w = list(weights)
    if len(w) != n:
        raise DimensionError(f"{len(w)} weights for {n} columns")
    if any(not isinstance(x, int) or x < 1 for x in w):
        raise ValueError("weights must be positive integers")
    return w


def row_space_supports(
    A: GFMatrix, weights: Sequence[int], start: int = 0, stop: int | None = None
) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield ``(support, weight)`` for each projective class of nonzero codewords.

    ``support`` is the tuple of column indices where the codeword is nonzero and
    ``weight`` the sum of ``weights`` over it.  ``start``/``stop`` select a
    contiguous range of the ``(q**rank - 1)/(q - 1)`` classes so that disjoint
    ranges can be scanned independently.  A rank-zero matrix yields nothing.
    """
    w = _check_weights(weights, A.ncols)
    space = RowSpace(A)
    weigh = mask_weigher(w, byte_tables=space.count >= 64)
    for mask in space.support_masks(start, stop):
        yield mask_to_indices(mask), weigh(mask)
