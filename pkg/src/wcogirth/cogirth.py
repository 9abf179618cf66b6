"""Cocircuits and weighted cogirth of represented matroids.

The cocircuits of the column matroid of ``A`` are the minimal supports of the
nonzero vectors in the row space of ``A``.  Because weights are positive and
every codeword support is a disjoint union of cocircuits, the minimum-weight
codeword support is itself a cocircuit, so :func:`cogirth` never needs the
minimality sieve that :func:`cocircuits` performs.

:func:`cogirth_oracle` recomputes the cogirth from hyperplanes found as
closures of subsets, without touching the codeword machinery.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .errors import EnumerationCapError, RankZeroError
from .geometry import Embedding
from .linalg import RowSpace, mask_to_indices, mask_weigher
from .matroid import WeightedRepMatroid

TYPE_I = "type-I"
TYPE_II = "type-II"
UNTYPED = "untyped"

ORACLE_MAX_N = 14
ORACLE_MAX_RANK = 6


@dataclass(frozen=True)
class Cocircuit:
    """A cocircuit, its weight, and the hyperplane of ``M`` it complements.

    ``normal`` is the normal covector of the hyperplane of PG spanned by
    ``hyperplane`` once the cocircuit has been classified against an embedding.
    """

    support: frozenset
    weight: int
    hyperplane: frozenset
    cotype: str = UNTYPED
    normal: tuple | None = None

    def sorted_support(self) -> tuple:
        return tuple(sorted(self.support))


def _support_key(labels, mask: int) -> tuple:
    return tuple(sorted(labels[j] for j in mask_to_indices(mask)))


def _labels_of(labels, mask: int) -> frozenset:
    return frozenset(labels[j] for j in mask_to_indices(mask))


def _make(M: WeightedRepMatroid, mask: int, weight: int) -> Cocircuit:
    sup = _labels_of(M.labels, mask)
    return Cocircuit(sup, weight, frozenset(M.labels) - sup)


def _row_space(M: WeightedRepMatroid) -> RowSpace:
    if M.rank == 0:
        raise RankZeroError("cogirth is undefined for a matroid of rank zero")
    return M.row_space


def cocircuits(M: WeightedRepMatroid) -> list[Cocircuit]:
    """Every cocircuit of ``M`` exactly once, sorted by support labels."""
    space = _row_space(M)
    weigh = mask_weigher(M.weights, byte_tables=space.count >= 64)
    masks = sorted(set(space.support_masks()), key=int.bit_count)
    minimal: list[int] = []
    for m in masks:
        if not any(k & ~m == 0 for k in minimal):
            minimal.append(m)
    out = [_make(M, m, weigh(m)) for m in minimal]
    out.sort(key=lambda c: c.sorted_support())
    return out


def _scan_min(M: WeightedRepMatroid, start: int, stop: int | None) -> tuple[int, tuple, int] | None:
    space = _row_space(M)
    weigh = mask_weigher(M.weights, byte_tables=space.count >= 64)
    labels = M.labels
    best_w = None
    best_key = None
    best_mask = 0
    for mask in space.support_masks(start, stop):
        w = weigh(mask)
        if best_w is None or w < best_w:
            best_w, best_mask, best_key = w, mask, None
        elif w == best_w:
            if best_key is None:
                best_key = _support_key(labels, best_mask)
            key = _support_key(labels, mask)
            if key < best_key:
                best_key, best_mask = key, mask
    if best_w is None:
        return None
    return best_w, best_key if best_key is not None else _support_key(labels, best_mask), best_mask


def partition_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    """Split ``range(total)`` into ``parts`` contiguous, nearly equal ranges."""
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    out, lo = [], 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def cogirth(M: WeightedRepMatroid, workers: int = 1) -> tuple[int, Cocircuit]:
    """Minimum weight of a cocircuit of ``M`` and a witness attaining it.

    Among minimum-weight supports the witness is the one whose sorted label
    tuple is lexicographically least.  With ``workers > 1`` the codeword classes
    are split into disjoint ranges scanned in separate processes.

    Raises:
        RankZeroError: ``M`` has rank zero.
        EnumerationCapError: the row space is too large to enumerate.
    """
    space = _row_space(M)
    if workers <= 1 or space.count < 1 << 14:
        results = [_scan_min(M, 0, None)]
    else:
        ranges = partition_ranges(space.count, workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_min, [M] * len(ranges), *zip(*ranges)))
    w, _, mask = min((r for r in results if r is not None), key=lambda r: (r[0], r[1]))
    return w, _make(M, mask, w)


def _oracle_rank(F, vectors) -> int:
    # Plain Gaussian elimination; deliberately independent of linalg.
    rows = [list(v) for v in vectors]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        s = F.inv[rows[r][c]]
        rows[r] = [F.mul[s][x] for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = F.neg[rows[i][c]]
                rows[i] = [F.add[x][F.mul[f][y]] for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def _oracle_span(F, vectors) -> set:
    span = {tuple([0] * len(vectors[0]))}
    for v in vectors:
        new = set()
        for s in span:
            for lam in range(F.q):
                m = F.mul[lam]
                new.add(tuple(F.add[x][m[y]] for x, y in zip(s, v)))
        span = new
    return span


def cogirth_oracle(M: WeightedRepMatroid) -> int:
    """Cogirth from the hyperplanes of ``M``, found as closures of subsets.

    Every hyperplane is the closure of some ``r - 1`` independent
    parallel-class representatives; the cogirth is the least weight of a
    hyperplane's complement.  Limited to ``n <= 14`` and ``rank <= 6``.
    """
    F = M.field
    cols = M.columns.columns()
    n = len(cols)
    if n > ORACLE_MAX_N:
        raise EnumerationCapError(f"oracle handles n <= {ORACLE_MAX_N}, got {n}")
    r = _oracle_rank(F, cols) if n else 0
    if r == 0:
        raise RankZeroError("cogirth is undefined for a matroid of rank zero")
    if r > ORACLE_MAX_RANK:
        raise EnumerationCapError(f"oracle handles rank <= {ORACLE_MAX_RANK}, got {r}")
    reps: list[int] = []
    for i, c in enumerate(cols):
        if not any(c):
            continue
        if all(_oracle_rank(F, [cols[j], c]) == 2 for j in reps):
            reps.append(i)
    total = sum(M.weights)
    if r == 1:
        # The only hyperplane is the set of loops.
        return sum(w for c, w in zip(cols, M.weights) if any(c))
    flats: list[int] = []
    target = F.q ** (r - 1)
    for S in combinations(reps, r - 1):
        smask = sum(1 << i for i in S)
        if any(smask & ~f == 0 for f in flats):
            continue
        span = _oracle_span(F, [cols[i] for i in S])
        if len(span) != target:
            continue
        flats.append(sum(1 << i for i in range(n) if cols[i] in span))
    return min(total - sum(w for i, w in enumerate(M.weights) if f >> i & 1) for f in flats)


def classify_cocircuits(
    M: WeightedRepMatroid, emb: Embedding, strict: bool = True, cocircuit_list: list[Cocircuit] | None = None
) -> list[Cocircuit]:
    """Tag each cocircuit type-I or type-II relative to the complement of ``emb``.

    A cocircuit is type-I when the PG hyperplane spanned by its complementary
    flat contains the whole complement, and type-II otherwise.  With
    ``strict`` (the default) the tags are only assigned when the complement is
    a flat of rank ``1 <= k < r``; otherwise every cocircuit stays untyped.

    Raises:
        ValueError: ``emb`` does not embed the ground set of ``M``.
    """
    if set(emb.matroid_points) != set(M.labels) or emb.rank != M.rank:
        raise ValueError("embedding is inconsistent with the matroid")
    cocs = cocircuits(M) if cocircuit_list is None else cocircuit_list
    amb = emb.ambient
    r = emb.rank
    cmask = emb.complement_mask
    ccount = cmask.bit_count()
    k = amb.rank_of_mask(cmask) if cmask else 0
    flat_ok = 1 <= k < r and ccount == (amb.q**k - 1) // (amb.q - 1)
    if strict and not flat_ok:
        return [Cocircuit(c.support, c.weight, c.hyperplane) for c in cocs]

    mmask = emb.matroid_mask
    by_support: dict[int, int] = {}
    clashes = set()
    for j, h in enumerate(amb.hyperplane_masks):
        sup = mmask & ~h
        if sup in by_support:
            clashes.add(sup)
        by_support[sup] = j
    out = []
    for c in cocs:
        sup = emb.mask_of(c.support)
        if sup in clashes or sup not in by_support:
            raise ValueError("embedding is inconsistent with the matroid")
        j = by_support[sup]
        cotype = TYPE_I if cmask & ~amb.hyperplane_masks[j] == 0 else TYPE_II
        out.append(Cocircuit(c.support, c.weight, c.hyperplane, cotype, amb.points[j]))
    if flat_ok and k == r - 1 and any(c.cotype == TYPE_I for c in out):
        raise AssertionError("type-I cocircuit found although the complement is a hyperplane")
    return out
