"""Weighted matroids given by a matrix over GF(q).

A weight function stands in for parallel classes: a simple weighted matroid
with weight ``w(e)`` behaves like an unweighted matroid in which ``e`` has
``w(e) - 1`` extra parallel copies.  Deletion restricts the weights;
contraction re-simplifies and gives each surviving element the total weight
of its parallel class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from .errors import DimensionError, RankZeroError
from .gf import FieldSpec
from .linalg import GFMatrix, RowSpace, _rref_rows, normalize

Label = Hashable


@dataclass(frozen=True)
class WeightedRepMatroid:
    """Column matroid of ``columns`` with a label and a positive weight per column."""

    field: FieldSpec
    columns: GFMatrix
    labels: tuple
    weights: tuple[int, ...]

    def __post_init__(self):
        n = self.columns.ncols
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "weights", tuple(self.weights))
        if self.columns.field != self.field:
            raise ValueError("matrix field differs from matroid field")
        if len(self.labels) != n or len(self.weights) != n:
            raise DimensionError(f"{n} columns but {len(self.labels)} labels and {len(self.weights)} weights")
        if len(set(self.labels)) != n:
            raise ValueError("labels must be distinct")
        for w in self.weights:
            if not isinstance(w, int) or w < 1:
                raise ValueError(f"nonpositive weight {w!r}")

    @property
    def n(self) -> int:
        return self.columns.ncols

    @cached_property
    def row_space(self) -> RowSpace:
        """Row-space basis of the column matrix, shared by rank and cocircuit scans."""
        return RowSpace(self.columns)

    @property
    def rank(self) -> int:
        return self.row_space.rank

    @cached_property
    def normalized_columns(self) -> tuple:
        F = self.field
        return tuple(normalize(F, c) for c in self.columns.columns())

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    @cached_property
    def index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    def column(self, label: Label):
        return self.columns.column(self.index[label])

    def weight(self, label: Label) -> int:
        return self.weights[self.index[label]]

    def weight_of(self, labels: Iterable[Label]) -> int:
        idx = self.index
        return sum(self.weights[idx[x]] for x in labels)

    def _indices(self, labels: Iterable[Label]) -> list[int]:
        idx = self.index
        out = []
        for x in labels:
            if x not in idx:
                raise KeyError(f"unknown ground element {x!r}")
            out.append(idx[x])
        return out

    def __str__(self) -> str:
        return f"WeightedRepMatroid(GF({self.field.q}), n={self.n}, rank={self.rank}, w={self.total_weight})"


@dataclass(frozen=True)
class ParallelClass:
    representative: Label
    members: frozenset
    class_weight: int


def from_matrix(
    F: FieldSpec,
    A: GFMatrix | Sequence[Sequence[int]],
    weights: Sequence[int] | None = None,
    labels: Sequence[Label] | None = None,
) -> WeightedRepMatroid:
    """Wrap a matrix as a weighted matroid; unit weights and labels ``0..n-1`` by default."""
    if not isinstance(A, GFMatrix):
        A = GFMatrix(F, tuple(tuple(r) for r in A))
    n = A.ncols
    if weights is None:
        weights = (1,) * n
    if labels is None:
        labels = tuple(range(n))
    return WeightedRepMatroid(F, A, tuple(labels), tuple(weights))


def _from_columns(F: FieldSpec, cols, nrows: int, labels, weights) -> WeightedRepMatroid:
    return WeightedRepMatroid(F, GFMatrix.from_columns(F, cols, nrows), tuple(labels), tuple(weights))


def rank(M: WeightedRepMatroid) -> int:
    return M.rank


def total_weight(M: WeightedRepMatroid) -> int:
    return M.total_weight


def loops(M: WeightedRepMatroid) -> frozenset:
    """Elements whose column is zero."""
    return frozenset(lab for lab, col in zip(M.labels, M.columns.columns()) if not any(col))


def _classes(M: WeightedRepMatroid) -> dict:
    # normalized column -> list of indices, in column order
    groups: dict = {}
    for i, key in enumerate(M.normalized_columns):
        if key is not None:
            groups.setdefault(key, []).append(i)
    return groups


def parallel_classes(M: WeightedRepMatroid) -> list[ParallelClass]:
    """Maximal sets of pairwise parallel nonloop elements, sorted by representative.

    The representative of a class is its smallest label.  Loops never appear.
    """
    out = []
    for idx in _classes(M).values():
        members = [M.labels[i] for i in idx]
        out.append(ParallelClass(min(members), frozenset(members), sum(M.weights[i] for i in idx)))
    out.sort(key=lambda c: c.representative)
    return out


def is_simple(M: WeightedRepMatroid) -> bool:
    keys = M.normalized_columns
    return None not in keys and len(set(keys)) == len(keys)


def _simplify(M: WeightedRepMatroid) -> WeightedRepMatroid:
    cols = M.columns.columns()
    reps = []
    for idx in _classes(M).values():
        rep = min(idx, key=lambda i: M.labels[i])
        reps.append((M.labels[rep], cols[rep], sum(M.weights[i] for i in idx)))
    reps.sort(key=lambda t: t[0])
    return _from_columns(
        M.field, [c for _, c, _ in reps], M.columns.nrows, [l for l, _, _ in reps], [w for _, _, w in reps]
    )


def simplify(M: WeightedRepMatroid) -> WeightedRepMatroid:
    """Drop loops and merge each parallel class into its smallest-label member.

    The surviving element carries the total weight of its class.

    Raises:
        RankZeroError: nothing but loops remains.
    """
    if M.rank == 0:
        raise RankZeroError("rank-zero matroid has no simplification with a cogirth")
    if is_simple(M):
        return M
    return _simplify(M)


def delete(M: WeightedRepMatroid, Y: Iterable[Label]) -> WeightedRepMatroid:
    """Restriction to ``E(M) - Y``; weights are restricted along with the columns."""
    drop = set(M._indices(Y))
    keep = [i for i in range(M.n) if i not in drop]
    return WeightedRepMatroid(
        M.field,
        M.columns.select_columns(keep),
        tuple(M.labels[i] for i in keep),
        tuple(M.weights[i] for i in keep),
    )


def weighted_contract(M: WeightedRepMatroid, Y: Iterable[Label]) -> WeightedRepMatroid:
    """Weighted contraction ``M / Y``: the simplification of the contraction.

    Each parallel class of ``M / Y`` becomes one element, labelled by its
    smallest label and weighted by the class total; elements in the span of
    ``Y`` become loops and disappear without contributing weight.  The result
    has ``rank(M) - rank(Y)`` rows: columns are written in the coordinates of a
    basis made by extending an independent subset of ``Y`` (greedy, label
    order) with columns of ``M`` (greedy, label order), and the coordinates
    along ``Y``'s part are dropped.
    """
    F = M.field
    yidx = sorted(set(M._indices(Y)), key=lambda i: M.labels[i])
    others = sorted(range(M.n), key=lambda i: M.labels[i])
    cols = M.columns.columns()
    nrows = M.columns.nrows

    basis: list = []
    cur_rank = 0
    d = 0
    for phase, pool in enumerate((yidx, others)):
        for i in pool:
            cand = basis + [cols[i]]
            r = len(_rref_rows(F, cand, nrows)[1]) if nrows else 0
            if r > cur_rank:
                basis.append(cols[i])
                cur_rank = r
        if phase == 0:
            d = cur_rank
    rk = cur_rank
    keep = [i for i in range(M.n) if i not in set(yidx)]
    if rk == 0:
        return _from_columns(F, [], 0, [], [])

    # Rows of B^T | C^T reduced: coordinates of every column over the basis.
    aug = [list(v[i] for v in basis) + [cols[j][i] for j in keep] for i in range(nrows)]
    R, pivots = _rref_rows(F, aug, rk + len(keep))
    assert tuple(pivots[:rk]) == tuple(range(rk))
    quotient = [tuple(R[i][rk + t] for i in range(d, rk)) for t in range(len(keep))]
    N = _from_columns(F, quotient, rk - d, [M.labels[i] for i in keep], [M.weights[i] for i in keep])
    return _simplify(N)
