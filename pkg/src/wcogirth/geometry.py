"""Projective, affine and Bose-Burton geometries over GF(q), and embeddings.

Points of PG(r-1, q) are normalized vectors (first nonzero coordinate 1) kept
in lexicographic order; a point's position in that order is its ambient index.
Hyperplanes are named by their normal covector, itself a normalized vector,
so the hyperplanes of PG(r-1, q) are enumerated exactly like its points.
Point sets are also handled internally as integer bitmasks over ambient
indices, which keeps flat and hyperplane tests cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import EnumerationCapError, NotAFlatError, NotSimpleError, RankZeroError
from .gf import FieldSpec, field_spec
from .linalg import GFMatrix, _rref_rows, normalize, projective_count, rank_of_vectors
from .matroid import WeightedRepMatroid, from_matrix, is_simple

# Largest point count of an ambient PG we are willing to list.
POINT_CAP = 1 << 16
# Largest PG for which the full point/hyperplane incidence table is built.
INCIDENCE_CAP = 4096

Point = tuple[int, ...]


def _normalized_vectors(r: int, q: int) -> list[Point]:
    pts = []
    for lead in range(r):
        for tail in product(range(q), repeat=r - lead - 1):
            pts.append((0,) * lead + (1,) + tail)
    pts.sort()
    return pts


class Ambient:
    """Tables for PG(r-1, q): points, their indices, and hyperplane bitmasks."""

    def __init__(self, r: int, q: int):
        if r < 1:
            raise ValueError(f"rank must be at least 1, got {r}")
        self.field = field_spec(q)
        self.r = r
        self.q = q
        count = projective_count(q, r)
        if count > POINT_CAP:
            raise EnumerationCapError(f"PG({r - 1},{q}) has {count} points, above the cap {POINT_CAP}")
        self.points: list[Point] = _normalized_vectors(r, q)
        self.index = {p: i for i, p in enumerate(self.points)}
        self.full_mask = (1 << len(self.points)) - 1

    def __len__(self) -> int:
        return len(self.points)

    @cached_property
    def hyperplane_masks(self) -> list[int]:
        """Mask of hyperplane ``j`` (normal ``points[j]``), for every ``j``."""
        N = len(self.points)
        if N > INCIDENCE_CAP:
            raise EnumerationCapError(f"incidence table for {N} points exceeds the cap {INCIDENCE_CAP}")
        F = self.field
        P = np.array(self.points, dtype=np.int64).reshape(N, self.r)
        add = np.array(F.add, dtype=np.int64)
        mul = np.array(F.mul, dtype=np.int64)
        acc = np.zeros((N, N), dtype=np.int64)
        for i in range(self.r):
            acc = add[acc, mul[P[:, i][:, None], P[:, i][None, :]]]
        inc = acc == 0
        out = []
        for j in range(N):
            packed = np.packbits(inc[j], bitorder="little")
            out.append(int.from_bytes(packed.tobytes(), "little"))
        return out

    def mask_of(self, points: Iterable[Point]) -> int:
        m = 0
        for p in points:
            m |= 1 << self.index[p]
        return m

    def points_of(self, mask: int) -> list[Point]:
        out = []
        while mask:
            low = mask & -mask
            out.append(self.points[low.bit_length() - 1])
            mask ^= low
        return out

    def hyperplanes_containing_mask(self, mask: int) -> list[int]:
        """Indices (= normals) of the hyperplanes containing every point of ``mask``."""
        return [j for j, h in enumerate(self.hyperplane_masks) if mask & ~h == 0]

    def closure_mask(self, mask: int) -> int:
        """The flat spanned by ``mask``: intersection of hyperplanes containing it."""
        out = self.full_mask
        for j in self.hyperplanes_containing_mask(mask):
            out &= self.hyperplane_masks[j]
        return out

    def rank_of_mask(self, mask: int) -> int:
        return rank_of_vectors(self.field, self.points_of(mask))

    def line(self, a: Point, b: Point) -> list[Point]:
        """All points on the line through distinct points ``a`` and ``b``."""
        F = self.field
        pts = {a, b}
        for lam in range(1, self.q):
            m = F.mul[lam]
            pts.add(normalize(F, [F.add[x][m[y]] for x, y in zip(a, b)]))
        return sorted(pts)


@lru_cache(maxsize=64)
def ambient(r: int, q: int) -> Ambient:
    return Ambient(r, q)


@dataclass(frozen=True)
class ProjectivePointSet:
    """A set of normalized points of PG(ambient_rank - 1, q), in lexicographic order."""

    field: FieldSpec
    ambient_rank: int
    points: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple(sorted(set(tuple(p) for p in self.points)))
        if len(pts) != len(self.points):
            raise ValueError("duplicate points")
        for p in pts:
            if len(p) != self.ambient_rank or normalize(self.field, p) != p:
                raise ValueError(f"{p} is not a normalized point of rank {self.ambient_rank}")
        object.__setattr__(self, "points", pts)

    @property
    def q(self) -> int:
        return self.field.q

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return tuple(p) in set(self.points)

    @property
    def mask(self) -> int:
        return ambient(self.ambient_rank, self.q).mask_of(self.points)

    def as_matroid(self, weights: Sequence[int] | None = None) -> WeightedRepMatroid:
        """The column matroid whose columns are these points, in order."""
        A = GFMatrix.from_columns(self.field, self.points, self.ambient_rank)
        return from_matrix(self.field, A, weights)

    def __str__(self) -> str:
        return f"{len(self)} points of PG({self.ambient_rank - 1},{self.q})"


def _from_mask(amb: Ambient, mask: int) -> ProjectivePointSet:
    return ProjectivePointSet(amb.field, amb.r, tuple(amb.points_of(mask)))


def pg(r: int, q: int) -> ProjectivePointSet:
    """All ``(q**r - 1)/(q - 1)`` points of PG(r-1, q)."""
    amb = ambient(r, q)
    return ProjectivePointSet(amb.field, r, tuple(amb.points))


def ag(r: int, q: int) -> ProjectivePointSet:
    """AG(r-1, q): the ``q**(r-1)`` points off the hyperplane ``x_1 = 0``."""
    amb = ambient(r, q)
    return ProjectivePointSet(amb.field, r, tuple(p for p in amb.points if p[0] == 1))


def bose_burton(r: int, k: int, q: int) -> ProjectivePointSet:
    """PG(r-1, q) minus the PG(k-1, q) spanned by the last ``k`` coordinates."""
    if not 1 <= k < r:
        raise ValueError(f"need 1 <= k < r, got k={k}, r={r}")
    amb = ambient(r, q)
    lead = r - k
    return ProjectivePointSet(amb.field, r, tuple(p for p in amb.points if any(p[:lead])))


@dataclass(frozen=True)
class Embedding:
    """A simple matroid placed in PG(r-1, q), with the unused points as complement."""

    field: FieldSpec
    rank: int
    matroid_points: dict = field(hash=False)
    complement: ProjectivePointSet

    @cached_property
    def ambient(self) -> Ambient:
        return ambient(self.rank, self.field.q)

    @cached_property
    def point_index(self) -> dict:
        """Label -> ambient point index."""
        idx = self.ambient.index
        return {lab: idx[p] for lab, p in self.matroid_points.items()}

    @cached_property
    def label_at(self) -> dict:
        return {i: lab for lab, i in self.point_index.items()}

    @cached_property
    def matroid_mask(self) -> int:
        m = 0
        for i in self.point_index.values():
            m |= 1 << i
        return m

    @cached_property
    def complement_mask(self) -> int:
        return self.ambient.full_mask & ~self.matroid_mask

    def labels_of(self, mask: int) -> frozenset:
        mask &= self.matroid_mask
        lab = self.label_at
        out = []
        while mask:
            low = mask & -mask
            out.append(lab[low.bit_length() - 1])
            mask ^= low
        return frozenset(out)

    def mask_of(self, labels: Iterable) -> int:
        pi = self.point_index
        m = 0
        for x in labels:
            m |= 1 << pi[x]
        return m


def _embedding_columns(M: WeightedRepMatroid) -> list[Point]:
    r = M.rank
    cols = M.columns.columns()
    if M.columns.nrows == r:
        return cols
    R, _ = _rref_rows(M.field, M.columns.entries, M.n)
    return [tuple(R[i][j] for i in range(r)) for j in range(M.n)]


def embed_in_pg(M: WeightedRepMatroid) -> Embedding:
    """Embed a simple matroid in PG(r-1, q), r = rank(M).

    When the column matrix has more rows than its rank, column ``j`` is
    replaced by column ``j`` of the nonzero rows of ``rref`` (its coordinates
    over the pivot columns), then every column is normalized.

    Raises:
        NotSimpleError: ``M`` has a loop or a parallel pair.
        RankZeroError: ``M`` has rank zero.
    """
    if M.rank == 0:
        raise RankZeroError("cannot embed a rank-zero matroid")
    if not is_simple(M):
        raise NotSimpleError("embedding needs a simple matroid")
    F = M.field
    amb = ambient(M.rank, F.q)
    pts = {lab: normalize(F, c) for lab, c in zip(M.labels, _embedding_columns(M))}
    used = amb.mask_of(pts.values())
    comp = _from_mask(amb, amb.full_mask & ~used)
    return Embedding(F, M.rank, pts, comp)


def flat_rank(S: ProjectivePointSet) -> tuple[int, bool]:
    """Linear rank of ``S`` and whether ``S`` is all of PG inside its span."""
    k = rank_of_vectors(S.field, S.points)
    return k, len(S) == (projective_count(S.q, k) if k else 0)


def closure(S: ProjectivePointSet) -> ProjectivePointSet:
    """The flat of PG spanned by ``S``."""
    amb = ambient(S.ambient_rank, S.q)
    if not S.points:
        return S
    return _from_mask(amb, amb.closure_mask(S.mask))


def _require_flat(S: ProjectivePointSet) -> int:
    k, is_flat = flat_rank(S)
    if not is_flat:
        raise NotAFlatError(f"{S} is not a flat of PG({S.ambient_rank - 1},{S.q})")
    return k


def _check_ambient(S: ProjectivePointSet, r: int | None, q: int | None) -> None:
    if (r is not None and r != S.ambient_rank) or (q is not None and q != S.q):
        raise ValueError(f"point set lives in PG({S.ambient_rank - 1},{S.q}), not PG({r - 1},{q})")


def hyperplane(normal: Sequence[int], r: int, q: int) -> ProjectivePointSet:
    """The hyperplane ``{x : normal . x = 0}`` of PG(r-1, q)."""
    amb = ambient(r, q)
    j = amb.index[normalize(amb.field, normal)]
    return _from_mask(amb, amb.hyperplane_masks[j])


def hyperplane_normals_containing(S: ProjectivePointSet) -> list[Point]:
    amb = ambient(S.ambient_rank, S.q)
    return [amb.points[j] for j in amb.hyperplanes_containing_mask(S.mask)]


def hyperplanes_containing(
    S: ProjectivePointSet, r: int | None = None, q: int | None = None
) -> list[ProjectivePointSet]:
    """All hyperplanes of PG(r-1, q) containing the flat ``S``, ordered by normal.

    Raises:
        NotAFlatError: ``S`` is not a flat.
    """
    _check_ambient(S, r, q)
    _require_flat(S)
    amb = ambient(S.ambient_rank, S.q)
    return [_from_mask(amb, amb.hyperplane_masks[j]) for j in amb.hyperplanes_containing_mask(S.mask)]


def _copy_masks(amb: Ambient, cmask: int) -> list[int]:
    hs = [amb.hyperplane_masks[j] for j in amb.hyperplanes_containing_mask(cmask)]
    rest = amb.full_mask & ~cmask
    out = []
    while rest:
        x = rest & -rest
        copy = amb.full_mask
        for h in hs:
            if h & x:
                copy &= h
        out.append(copy)
        rest &= ~copy
    return out


def pk1_copies_containing(
    complement: ProjectivePointSet, r: int | None = None, q: int | None = None
) -> list[ProjectivePointSet]:
    """The rank-(k+1) flats containing a rank-k flat, ordered by their least outside point.

    Any two of them meet exactly in the given flat, and together they cover PG.

    Raises:
        NotAFlatError: ``complement`` is not a flat.
        ValueError: ``complement`` already has full rank.
    """
    _check_ambient(complement, r, q)
    k = _require_flat(complement)
    if k >= complement.ambient_rank:
        raise ValueError("a full-rank flat has no flats of larger rank containing it")
    amb = ambient(complement.ambient_rank, complement.q)
    return [_from_mask(amb, m) for m in _copy_masks(amb, complement.mask)]
