"""Executable checks of the cogirth bounds and their equality characterizations.

Every check returns a :class:`VerificationReport`.  Ratios are compared in
cross-multiplied integer form, never in floating point.  ``problems`` collects
anything that contradicts a proven statement (a bound violation, an
inconsistent characterization, disagreeing formulations, an oracle mismatch);
a non-empty list means the implementation, not the mathematics, is wrong.

Conventions for a simple weighted matroid ``M`` of rank ``r`` over GF(q),
embedded in PG(r-1, q) with complement ``M^c`` of rank ``k``:

* (i)   ``M^c`` is a flat with ``1 <= k < r``.
* (ii)  ``w`` is constant on ``E(M)`` inside each rank-(k+1) flat containing ``M^c``.
* (iii) ``w(N) >= (q-1) w(E(M) - N)`` for every restriction ``N`` isomorphic to
  AG(r-1, q).  Such ``N`` are exactly ``E(M) - H`` for hyperplanes ``H`` of PG
  containing ``M^c``; a brute-force isomorphism search checks that on small
  instances.
* (iii') ``q^(r-1) w(e) <= w(M)`` for every element ``e``.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Any, Iterator

from .cogirth import (
    ORACLE_MAX_N,
    ORACLE_MAX_RANK,
    TYPE_I,
    TYPE_II,
    Cocircuit,
    _oracle_rank,
    classify_cocircuits,
    cocircuits,
    cogirth,
    cogirth_oracle,
)
from .errors import EnumerationCapError, NotSimpleError, PreconditionError, ProjectiveGeometryError
from .fileformat import dumps
from .geometry import Ambient, Embedding, _copy_masks, ambient, embed_in_pg
from .gf import field_spec
from .linalg import GFMatrix, projective_count
from .matroid import WeightedRepMatroid, from_matrix, is_simple

RESTRICTION_ORACLE_MAX_N = 10
SCAN_MAX_POINTS = 20

CONDITION_NAMES = ("i", "ii", "iii", "iii_typeI", "iii_oracle", "iii_prime", "typeII", "constant")


@dataclass
class ConditionResult:
    """Outcome of one condition; ``holds is None`` means not applicable."""

    holds: bool | None
    witness: Any = None
    note: str = ""


@dataclass
class VerificationReport:
    check: str
    instance: str
    q: int
    r: int
    n: int
    total_weight: int
    cogirth: int
    bound_lhs: int
    bound_rhs: int
    bound_holds: bool
    equality: bool
    consistency: bool
    conditions: dict[str, ConditionResult] = field(default_factory=dict)
    witness: list = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)
    problems: list[str] = field(default_factory=list)

    def __post_init__(self):
        # lists, not tuples, so that a JSON round trip reproduces the report
        self.witness = list(self.witness)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.total_weight, self.cogirth)

    @property
    def ok(self) -> bool:
        return self.bound_holds and self.consistency and not self.problems

    def condition(self, name: str) -> bool | None:
        c = self.conditions.get(name)
        return None if c is None else c.holds

    def to_dict(self) -> dict:
        d = asdict(self)
        d["ratio"] = f"{self.ratio.numerator}/{self.ratio.denominator}"
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        d = dict(d)
        d.pop("ratio", None)
        d["conditions"] = {k: ConditionResult(**v) for k, v in d.get("conditions", {}).items()}
        return cls(**d)


def _weigher(wts: list[int]):
    def weigh(mask: int) -> int:
        s = 0
        while mask:
            low = mask & -mask
            s += wts[low.bit_length() - 1]
            mask ^= low
        return s

    return weigh


def _sorted_labels(labels) -> list:
    return sorted(labels)


class _Context:
    """Embedding of ``M`` plus ambient-indexed weights, shared by the checks."""

    def __init__(self, M: WeightedRepMatroid):
        if not is_simple(M):
            raise NotSimpleError("theorem checks need a simple weighted matroid (simplify first)")
        self.M = M
        self.q = M.field.q
        self.r = M.rank
        self.emb: Embedding = embed_in_pg(M)
        self.amb: Ambient = self.emb.ambient
        wts = [0] * len(self.amb)
        for lab, i in self.emb.point_index.items():
            wts[i] = M.weight(lab)
        self.wts = wts
        self.weigh = _weigher(wts)
        self.mmask = self.emb.matroid_mask
        self.cmask = self.emb.complement_mask
        self.total = M.total_weight

    def labels(self, mask: int) -> list:
        return _sorted_labels(self.emb.labels_of(mask))

    def weighted(self, mask: int) -> dict:
        return {str(lab): self.M.weight(lab) for lab in self.labels(mask)}


def _describe(M: WeightedRepMatroid) -> str:
    return f"GF({M.field.q}) n={M.n} rank={M.rank} w={M.total_weight}"


# --------------------------------------------------------------------------- conditions


def _condition_i(ctx: _Context) -> tuple[ConditionResult, int]:
    amb, cmask = ctx.amb, ctx.cmask
    k = amb.rank_of_mask(cmask) if cmask else 0
    size = cmask.bit_count()
    if size and size == projective_count(ctx.q, k) and 1 <= k < ctx.r:
        return ConditionResult(True, note=f"complement is PG({k - 1},{ctx.q})"), k
    if not size:
        return ConditionResult(False, note="empty complement"), k
    pts = amb.points_of(cmask)
    for a, b in combinations(pts, 2):
        line = amb.line(a, b)
        hit = [p for p in line if ctx.mmask >> amb.index[p] & 1]
        if hit:
            labs = ctx.labels(amb.mask_of(hit))
            return (
                ConditionResult(
                    False,
                    {"line": [list(p) for p in line], "matroid_elements": labs},
                    "complement is not a flat",
                ),
                k,
            )
    return ConditionResult(False, note=f"complement has rank {k}"), k


def _condition_ii(ctx: _Context) -> tuple[ConditionResult, list[int]]:
    copies = _copy_masks(ctx.amb, ctx.cmask)
    for copy in copies:
        part = copy & ctx.mmask
        vals = {ctx.wts[i] for i in _bits(part)}
        if len(vals) > 1:
            return ConditionResult(False, ctx.weighted(part), "weights differ inside one P_(k+1) copy"), copies
    return ConditionResult(True, note=f"{len(copies)} copies checked"), copies


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _condition_iii(ctx: _Context) -> tuple[ConditionResult, int]:
    amb = ctx.amb
    hs = amb.hyperplanes_containing_mask(ctx.cmask)
    for j in hs:
        h = amb.hyperplane_masks[j]
        inside = ctx.weigh(ctx.mmask & ~h)
        outside = ctx.weigh(ctx.mmask & h)
        if inside < (ctx.q - 1) * outside:
            return (
                ConditionResult(
                    False,
                    {"restriction": ctx.labels(ctx.mmask & ~h), "w_N": inside, "w_rest": outside},
                    "an AG restriction is too light",
                ),
                len(hs),
            )
    return ConditionResult(True, note=f"{len(hs)} AG restrictions"), len(hs)


def _condition_iii_typeI(ctx: _Context, classified: list[Cocircuit]) -> ConditionResult:
    q = ctx.q
    for c in classified:
        if c.cotype == TYPE_I and q * c.weight < (q - 1) * ctx.total:
            return ConditionResult(False, {"cocircuit": _sorted_labels(c.support), "weight": c.weight})
    return ConditionResult(True)


def _condition_iii_prime(ctx_or_M) -> ConditionResult:
    M = ctx_or_M.M if isinstance(ctx_or_M, _Context) else ctx_or_M
    q, r = M.field.q, M.rank
    heavy = max(M.weights)
    if q ** (r - 1) * heavy <= M.total_weight:
        return ConditionResult(True, note=f"{q}^{r - 1}*{heavy} <= {M.total_weight}")
    lab = min(l for l, w in zip(M.labels, M.weights) if w == heavy)
    return ConditionResult(False, {"element": lab, "weight": heavy}, f"{q}^{r - 1}*{heavy} > {M.total_weight}")


def _typeII_identity(q: int, total: int, classified: list[Cocircuit]) -> ConditionResult:
    for c in classified:
        if c.cotype == TYPE_II and q * c.weight != (q - 1) * total:
            return ConditionResult(False, {"cocircuit": _sorted_labels(c.support), "weight": c.weight})
    return ConditionResult(True)


# --------------------------------------------------------------------------- AG-restriction oracle


@lru_cache(maxsize=None)
def _ag_profile(r: int, q: int):
    F = field_spec(q)
    pts = [p for p in ambient(r, q).points if p[0] == 1]
    indep = _independence_table(F, pts, r)
    return len(pts), indep, _dependent_triples(indep, len(pts))


def _independence_table(F, vectors, r: int) -> dict[int, bool]:
    # Independence of every subset of size <= r + 1; circuits never exceed that.
    out = {}
    m = len(vectors)
    for size in range(1, min(m, r + 1) + 1):
        for S in combinations(range(m), size):
            mask = sum(1 << i for i in S)
            out[mask] = _oracle_rank(F, [vectors[i] for i in S]) == size
    return out


def _dependent_triples(indep: dict[int, bool], m: int) -> int:
    return sum(1 for mask, ok in indep.items() if not ok and mask.bit_count() == 3)


def _isomorphic(indep_n: dict[int, bool], indep_a: dict[int, bool], m: int, r: int) -> bool:
    """Backtracking search for a bijection preserving independence of small sets."""
    phi = [0] * m
    used = [False] * m

    def ok(d: int) -> bool:
        others = range(d)
        for size in range(0, min(d, r) + 1):
            for S in combinations(others, size):
                src = (1 << d) | sum(1 << i for i in S)
                dst = (1 << phi[d]) | sum(1 << phi[i] for i in S)
                if indep_n[src] != indep_a[dst]:
                    return False
        return True

    def extend(d: int) -> bool:
        if d == m:
            return True
        for a in range(m):
            if not used[a]:
                phi[d] = a
                if ok(d):
                    used[a] = True
                    if extend(d + 1):
                        return True
                    used[a] = False
        return False

    return extend(0)


def ag_restrictions(M: WeightedRepMatroid) -> list[frozenset]:
    """All restrictions of ``M`` isomorphic to AG(r-1, q), by exhaustive search.

    Only the matroid structure is used (independence of small subsets), not the
    embedding.  Meant for ``n <= 10``.
    """
    F = M.field
    q, r = F.q, M.rank
    if M.n > RESTRICTION_ORACLE_MAX_N:
        raise EnumerationCapError(f"AG-restriction search handles n <= {RESTRICTION_ORACLE_MAX_N}")
    m, indep_a, triples_a = _ag_profile(r, q)
    cols = M.columns.columns()
    found = []
    for S in combinations(range(M.n), m):
        vecs = [cols[i] for i in S]
        if _oracle_rank(F, vecs) != r:
            continue
        indep_n = _independence_table(F, vecs, r)
        if any(not indep_n[1 << i] for i in range(m)):
            continue
        if _dependent_triples(indep_n, m) != triples_a:
            continue
        if _isomorphic(indep_n, indep_a, m, r):
            found.append(frozenset(M.labels[i] for i in S))
    return found


def _condition_iii_oracle(M: WeightedRepMatroid) -> tuple[ConditionResult, int]:
    q = M.field.q
    total = M.total_weight
    rs = ag_restrictions(M)
    for N in rs:
        wn = M.weight_of(N)
        if wn < (q - 1) * (total - wn):
            return ConditionResult(False, {"restriction": _sorted_labels(N), "w_N": wn, "w_rest": total - wn}), len(rs)
    return ConditionResult(True, note=f"{len(rs)} AG restrictions found by search"), len(rs)


# --------------------------------------------------------------------------- checks


def _oracle_cross_check(M: WeightedRepMatroid, g: int, report: VerificationReport) -> None:
    if M.n <= ORACLE_MAX_N and M.rank <= ORACLE_MAX_RANK:
        go = cogirth_oracle(M)
        report.details["cogirth_oracle"] = go
        if go != g:
            report.problems.append(f"cogirth {g} differs from subset-closure oracle {go}")


def is_projective_geometry(M: WeightedRepMatroid) -> bool:
    """True iff ``M`` is simple and its embedding fills PG(r-1, q)."""
    if M.rank == 0 or not is_simple(M):
        return False
    return M.n == projective_count(M.field.q, M.rank)


def check_main_theorem(M: WeightedRepMatroid, oracle: bool = False, instance: str | None = None) -> VerificationReport:
    """Check ``(q-1) w(M) >= q g*(M)`` and that equality holds iff (i), (ii), (iii).

    Also reports (iii'), the type-I form of (iii), the type-II weight identity
    when (i) and (ii) hold, and the type-I/type-II counts.  With ``oracle`` the
    cogirth is recomputed by :func:`cogirth_oracle` and (iii) by exhaustive
    AG-restriction search, within their size limits.

    Raises:
        NotSimpleError: ``M`` is not simple.
        ProjectiveGeometryError: ``M`` is all of PG(r-1, q).
    """
    ctx = _Context(M)
    q, r = ctx.q, ctx.r
    if not ctx.cmask:
        raise ProjectiveGeometryError("M is a full projective geometry; use check_pg_proposition")
    g, wit = cogirth(M)
    lhs, rhs = (q - 1) * ctx.total, q * g
    report = VerificationReport(
        check="main",
        instance=instance or _describe(M),
        q=q,
        r=r,
        n=M.n,
        total_weight=ctx.total,
        cogirth=g,
        bound_lhs=lhs,
        bound_rhs=rhs,
        bound_holds=lhs >= rhs,
        equality=lhs == rhs,
        consistency=True,
        witness=wit.sorted_support(),
    )
    cond = report.conditions
    cond["i"], k = _condition_i(ctx)
    report.details["k"] = k
    report.details["complement_size"] = ctx.cmask.bit_count()
    if cond["i"].holds:
        cond["ii"], _ = _condition_ii(ctx)
    else:
        cond["ii"] = ConditionResult(None, note="needs (i)")
    cond["iii"], n_restrictions = _condition_iii(ctx)
    report.details["ag_restrictions"] = n_restrictions
    cond["iii_prime"] = _condition_iii_prime(ctx)

    cocs = cocircuits(M)
    if min(c.weight for c in cocs) != g:
        report.problems.append("minimum cocircuit weight differs from the cogirth scan")
    if cond["i"].holds:
        classified = classify_cocircuits(M, ctx.emb, cocircuit_list=cocs)
        t1 = sorted(c.weight for c in classified if c.cotype == TYPE_I)
        t2 = sorted(c.weight for c in classified if c.cotype == TYPE_II)
        report.details["typeI_weights"] = t1
        report.details["typeII_weights"] = t2
        want_t1 = projective_count(q, r - k) if k < r - 1 else 0
        want_t2 = projective_count(q, r) - projective_count(q, r - k)
        if (len(t1), len(t2)) != (want_t1, want_t2):
            report.problems.append(f"type counts {len(t1)}/{len(t2)}, expected {want_t1}/{want_t2}")
        cond["iii_typeI"] = _condition_iii_typeI(ctx, classified)
        if cond["iii_typeI"].holds != cond["iii"].holds:
            report.problems.append("the AG-restriction and type-I forms of (iii) disagree")
        if cond["ii"].holds:
            cond["typeII"] = _typeII_identity(q, ctx.total, classified)
            if not cond["typeII"].holds:
                report.problems.append("type-II cocircuit weight differs from (q-1)/q w(M)")
    else:
        cond["iii_typeI"] = ConditionResult(None, note="needs (i)")

    if oracle:
        _oracle_cross_check(M, g, report)
        if M.n <= RESTRICTION_ORACLE_MAX_N:
            cond["iii_oracle"], found = _condition_iii_oracle(M)
            report.details["ag_restrictions_found"] = found
            if cond["iii_oracle"].holds != cond["iii"].holds or found != n_restrictions:
                report.problems.append("AG-restriction search disagrees with the hyperplane form of (iii)")

    characterized = bool(cond["i"].holds and cond["ii"].holds and cond["iii"].holds)
    report.consistency = report.equality == characterized
    if not report.bound_holds:
        report.problems.append(f"bound violated: (q-1)w = {lhs} < q g* = {rhs}")
    if not report.consistency:
        report.problems.append(f"equality={report.equality} but (i)&(ii)&(iii)={characterized}")
    if report.equality and not cond["iii_prime"].holds:
        report.problems.append("equality holds but (iii') fails")
    return report


def check_condition_iii_prime(M: WeightedRepMatroid, oracle: bool = False) -> VerificationReport:
    """Report (iii') and check that equality in the main bound forces it."""
    report = check_main_theorem(M, oracle=oracle)
    report.check = "iiiprime"
    return report


def check_typeII_sublemma(M: WeightedRepMatroid, emb: Embedding | None = None) -> VerificationReport:
    """Under (i) and (ii), every type-II cocircuit weighs exactly ``(q-1)/q w(M)``.

    ``emb`` defaults to :func:`embed_in_pg`; any other embedding of ``M`` gives
    the same classification.

    Raises:
        PreconditionError: (i) or (ii) fails, so the identity need not hold.
    """
    report = check_main_theorem(M)
    if not (report.condition("i") and report.condition("ii")):
        raise PreconditionError("the type-II identity needs conditions (i) and (ii)")
    report.check = "typeII"
    if emb is not None:
        result = _typeII_identity(report.q, report.total_weight, classify_cocircuits(M, emb))
        report.conditions["typeII"] = result
        if not result.holds:
            report.problems.append("type-II cocircuit weight differs from (q-1)/q w(M)")
    return report


def check_pg_proposition(M: WeightedRepMatroid, oracle: bool = False, instance: str | None = None) -> VerificationReport:
    """Check ``q^(r-1) (q-1) w(M) >= (q^r - 1) g*(M)``, equality iff ``w`` is constant.

    Raises:
        PreconditionError: ``M`` is not a full projective geometry.
    """
    if not is_projective_geometry(M):
        raise PreconditionError("M must be simple and isomorphic to PG(r-1,q)")
    q, r = M.field.q, M.rank
    g, wit = cogirth(M)
    lhs = q ** (r - 1) * (q - 1) * M.total_weight
    rhs = (q**r - 1) * g
    constant = len(set(M.weights)) == 1
    report = VerificationReport(
        check="pg",
        instance=instance or _describe(M),
        q=q,
        r=r,
        n=M.n,
        total_weight=M.total_weight,
        cogirth=g,
        bound_lhs=lhs,
        bound_rhs=rhs,
        bound_holds=lhs >= rhs,
        equality=lhs == rhs,
        consistency=(lhs == rhs) == constant,
        witness=wit.sorted_support(),
    )
    report.conditions["constant"] = ConditionResult(
        constant, None if constant else {str(l): w for l, w in zip(M.labels, M.weights)}
    )
    report.details["bound_ratio"] = f"{q**r - 1}/{q ** (r - 1) * (q - 1)}"
    if oracle:
        _oracle_cross_check(M, g, report)
    if not report.bound_holds:
        report.problems.append("projective-geometry bound violated")
    if not report.consistency:
        report.problems.append(f"equality={report.equality} but constant weights={constant}")
    return report


def check_rank2(M: WeightedRepMatroid, instance: str | None = None) -> VerificationReport:
    """Rank-2 lemma: ``n g* <= (n-1) w(M)``, equality iff ``w`` is constant.

    Also checks ``g* = w(M) - max weight``: a cocircuit of a simple line is the
    line minus one point.
    """
    if M.rank != 2:
        raise PreconditionError(f"rank-2 lemma needs rank 2, got {M.rank}")
    if not is_simple(M):
        raise NotSimpleError("rank-2 lemma needs a simple matroid")
    n = M.n
    g, wit = cogirth(M)
    lhs, rhs = (n - 1) * M.total_weight, n * g
    constant = len(set(M.weights)) == 1
    report = VerificationReport(
        check="rank2",
        instance=instance or _describe(M),
        q=M.field.q,
        r=2,
        n=n,
        total_weight=M.total_weight,
        cogirth=g,
        bound_lhs=lhs,
        bound_rhs=rhs,
        bound_holds=lhs >= rhs,
        equality=lhs == rhs,
        consistency=(lhs == rhs) == constant,
        witness=wit.sorted_support(),
    )
    report.conditions["constant"] = ConditionResult(constant)
    expected = M.total_weight - max(M.weights)
    report.details["w_minus_max"] = expected
    if g != expected:
        report.problems.append(f"g* = {g} but w(M) - max w = {expected}")
    if not report.bound_holds:
        report.problems.append("rank-2 bound violated")
    if not report.consistency:
        report.problems.append(f"equality={report.equality} but constant weights={constant}")
    return report


def check_auto(M: WeightedRepMatroid, oracle: bool = False) -> list[VerificationReport]:
    """Run every check whose hypotheses ``M`` meets (rank 2, PG, or the main theorem)."""
    if M.rank == 2 and not is_projective_geometry(M):
        return [check_rank2(M), check_main_theorem(M, oracle=oracle)]
    if is_projective_geometry(M):
        out = [check_pg_proposition(M, oracle=oracle)]
        if M.rank == 2:
            out.insert(0, check_rank2(M))
        return out
    return [check_main_theorem(M, oracle=oracle)]


# --------------------------------------------------------------------------- worked example


def paper_example_matroid(phase: str = "before") -> tuple[WeightedRepMatroid, dict]:
    """PG(3,2) minus a point ``p`` with weight 2 on ``H - p`` and 1 on ``C*``.

    ``p = (0,0,0,1)`` and ``H`` is the hyperplane through ``p`` with the
    lexicographically least normal.  For ``phase="after"`` the weights on the
    lexicographically least line through ``p`` inside ``C* + p`` and on the
    least such line inside ``H`` are exchanged.
    """
    if phase not in ("before", "after"):
        raise ValueError(f"phase must be 'before' or 'after', not {phase!r}")
    q, r = 2, 4
    amb = ambient(r, q)
    F = amb.field
    p = (0, 0, 0, 1)
    normal = next(c for c in amb.points if sum(F.mul[x][y] for x, y in zip(c, p)) % 2 == 0)
    H = set(amb.points_of(amb.hyperplane_masks[amb.index[normal]]))
    pts = [x for x in amb.points if x != p]
    weight = {x: 2 if x in H else 1 for x in pts}
    info: dict[str, Any] = {"p": list(p), "H_normal": list(normal)}
    if phase == "after":
        lines = sorted({tuple(amb.line(p, x)) for x in pts})
        in_c = next(l for l in lines if not (set(l) - {p}) & H)
        in_h = next(l for l in lines if set(l) <= H)
        for x in in_c:
            if x != p:
                weight[x] = 2
        for x in in_h:
            if x != p:
                weight[x] = 1
        info["swap_lines"] = [[list(x) for x in in_c], [list(x) for x in in_h]]
    A = GFMatrix.from_columns(F, pts, r)
    M = from_matrix(F, A, [weight[x] for x in pts])
    info["C_star"] = [i for i, x in enumerate(pts) if x not in H]
    return M, info


def paper_example(phase: str = "before", oracle: bool = True) -> VerificationReport:
    """Rebuild the worked example and assert every value it quotes.

    ``before``: ``w(M) = 20``, the distinguished type-I cocircuit weighs 8, so
    ``g* = 8`` and equality fails although (i), (ii) and (iii') hold; (iii)
    fails.  ``after``: type-I weights are at least 10, type-II weights are 10,
    ``g* = 10`` and equality holds with (i), (ii), (iii).
    """
    M, info = paper_example_matroid(phase)
    report = check_main_theorem(M, oracle=oracle, instance=f"PG(3,2) - p, worked example ({phase})")
    report.check = f"paper-example-{phase}"
    report.details.update(info)
    c_star = frozenset(info["C_star"])
    c_star_w = M.weight_of(c_star)
    report.details["C_star_weight"] = c_star_w
    report.details["q^(r-1)*max_w"] = 2**3 * max(M.weights)

    def expect(label: str, ok: bool) -> None:
        if not ok:
            report.problems.append(f"worked example: expected {label}")

    cond = report.conditions
    t1 = report.details.get("typeI_weights", [])
    t2 = report.details.get("typeII_weights", [])
    expect("w(M) = 20", report.total_weight == 20)
    expect("(i) holds", cond["i"].holds is True)
    expect("(ii) holds", cond["ii"].holds is True)
    expect("(iii') holds with 2^3*2 = 16 < 20", cond["iii_prime"].holds is True and 16 < report.total_weight)
    if phase == "before":
        classified = classify_cocircuits(M, embed_in_pg(M))
        cs = next((c for c in classified if c.support == c_star), None)
        expect("C* to be a type-I cocircuit", cs is not None and cs.cotype == TYPE_I)
        expect("w(C*) = 8", c_star_w == 8)
        expect("g* = 8", report.cogirth == 8)
        expect("strict inequality 20*1 > 2*8", report.bound_lhs == 20 and report.bound_rhs == 16)
        expect("(iii) fails", cond["iii"].holds is False)
    else:
        expect("every type-I weight >= 10", bool(t1) and min(t1) >= 10)
        expect("every type-II weight = 10", bool(t2) and set(t2) == {10})
        expect("g* = 10", report.cogirth == 10)
        expect("equality w/g* = 2", report.equality and report.ratio == 2)
        expect("(iii) holds", cond["iii"].holds is True)
    return report


# --------------------------------------------------------------------------- scans


@dataclass
class ScanSpec:
    """A family of instances.

    ``exhaustive`` takes every full-rank point subset of PG(r-1, q) with unit
    weights, for each ``r`` in ``r_min..r_max``.  ``random`` draws ``count``
    weighted instances per ``r`` from ``seed``, mixing uniform point subsets,
    Bose-Burton geometries with random weights or with weights constant on each
    P_(k+1) copy, and the occasional full PG; each is presented in a random
    basis with shuffled, rescaled columns.
    """

    q: int
    r_max: int
    r_min: int = 2
    mode: str = "exhaustive"
    count: int = 100
    seed: int = 0
    weight_max: int = 5
    oracles: bool = False


@dataclass
class ScanReport:
    spec: dict
    instances: int = 0
    main: int = 0
    pg: int = 0
    rank2: int = 0
    equality_cases: int = 0
    bound_violations: int = 0
    consistency_violations: int = 0
    iii_prime_violations: int = 0
    typeII_checked: int = 0
    typeII_violations: int = 0
    formulations_compared: int = 0
    formulation_disagreements: int = 0
    oracle_checked: int = 0
    oracle_discrepancies: int = 0
    other_problems: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def violations(self) -> int:
        return (
            self.bound_violations
            + self.consistency_violations
            + self.iii_prime_violations
            + self.typeII_violations
            + self.formulation_disagreements
            + self.oracle_discrepancies
            + self.other_problems
        )

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["violations"] = self.violations
        return d

    def add(self, M: WeightedRepMatroid, report: VerificationReport) -> None:
        self.instances += 1
        setattr(self, report.check, getattr(self, report.check) + 1)
        cond = report.conditions
        self.equality_cases += report.equality
        bad = False
        if not report.bound_holds:
            self.bound_violations += 1
            bad = True
        if not report.consistency:
            self.consistency_violations += 1
            bad = True
        if report.check == "main":
            if report.equality and not cond["iii_prime"].holds:
                self.iii_prime_violations += 1
                bad = True
            if "typeII" in cond:
                self.typeII_checked += 1
                if not cond["typeII"].holds:
                    self.typeII_violations += 1
                    bad = True
            if cond["iii_typeI"].holds is not None:
                self.formulations_compared += 1
                if cond["iii_typeI"].holds != cond["iii"].holds:
                    self.formulation_disagreements += 1
                    bad = True
        if "cogirth_oracle" in report.details:
            self.oracle_checked += 1
            if report.details["cogirth_oracle"] != report.cogirth:
                self.oracle_discrepancies += 1
                bad = True
        if any("AG-restriction search" in p for p in report.problems):
            self.formulation_disagreements += 1
            bad = True
        if report.problems and not bad:
            self.other_problems += 1
            bad = True
        if bad:
            self.counterexamples.append({"matroid": dumps(M), "report": report.to_dict()})


def _subset_instances(q: int, r: int) -> Iterator[WeightedRepMatroid]:
    amb = ambient(r, q)
    N = len(amb)
    if N > SCAN_MAX_POINTS:
        raise EnumerationCapError(f"exhaustive scan of PG({r - 1},{q}) would visit 2^{N} subsets")
    F = amb.field
    for mask in range(1, 1 << N):
        if amb.rank_of_mask(mask) != r:
            continue
        pts = amb.points_of(mask)
        yield from_matrix(F, GFMatrix.from_columns(F, pts, r))


def _random_invertible(rng: random.Random, F, r: int) -> list[list[int]]:
    from .linalg import rank_of_vectors

    while True:
        T = [[rng.randrange(F.q) for _ in range(r)] for _ in range(r)]
        if rank_of_vectors(F, T) == r:
            return T


def _random_flat_mask(rng: random.Random, amb: Ambient, k: int) -> int:
    while True:
        pts = rng.sample(amb.points, k)
        mask = amb.mask_of(pts)
        if amb.rank_of_mask(mask) == k:
            return amb.closure_mask(mask)


def random_instance(rng: random.Random, q: int, r: int, weight_max: int) -> WeightedRepMatroid:
    """One random simple weighted matroid of rank ``r`` over GF(q), in a random basis."""
    amb = ambient(r, q)
    F = amb.field
    kind = rng.random()
    if kind < 0.08:
        mask = amb.full_mask
        wts = {i: rng.randint(1, weight_max) for i in _bits(mask)}
    elif kind < 0.4 or r < 2:
        while True:
            mask = sum(1 << i for i in range(len(amb)) if rng.random() < 0.5)
            if mask and amb.rank_of_mask(mask) == r:
                break
        wts = {i: rng.randint(1, weight_max) for i in _bits(mask)}
    else:
        k = rng.randint(1, r - 1)
        cmask = _random_flat_mask(rng, amb, k)
        mask = amb.full_mask & ~cmask
        if kind < 0.65:
            wts = {i: rng.randint(1, weight_max) for i in _bits(mask)}
        else:
            wts = {}
            for copy in _copy_masks(amb, cmask):
                w = rng.randint(1, weight_max)
                for i in _bits(copy & mask):
                    wts[i] = w
            if kind > 0.9:
                # perturb one element so (ii) usually breaks
                i = rng.choice(sorted(wts))
                wts[i] = rng.randint(1, weight_max)
    T = _random_invertible(rng, F, r)
    idx = list(_bits(mask))
    rng.shuffle(idx)
    cols, weights = [], []
    for i in idx:
        p = amb.points[i]
        v = [0] * r
        for a in range(r):
            s = 0
            for b in range(r):
                s = F.add[s][F.mul[T[a][b]][p[b]]]
            v[a] = s
        lam = rng.randrange(1, q)
        cols.append(tuple(F.mul[lam][x] for x in v))
        weights.append(wts[i])
    return from_matrix(F, GFMatrix.from_columns(F, cols, r), weights)


def scan_instances(spec: ScanSpec) -> Iterator[WeightedRepMatroid]:
    if spec.mode == "exhaustive":
        for r in range(spec.r_min, spec.r_max + 1):
            yield from _subset_instances(spec.q, r)
    elif spec.mode == "random":
        rng = random.Random(spec.seed)
        for r in range(spec.r_min, spec.r_max + 1):
            for _ in range(spec.count):
                yield random_instance(rng, spec.q, r, spec.weight_max)
    else:
        raise ValueError(f"unknown scan mode {spec.mode!r}")


def check_instance(M: WeightedRepMatroid, oracle: bool = False) -> VerificationReport:
    """Main theorem or PG proposition, whichever applies."""
    if is_projective_geometry(M):
        return check_pg_proposition(M, oracle=oracle)
    return check_main_theorem(M, oracle=oracle)


def scan(spec: ScanSpec, max_counterexamples: int = 10) -> ScanReport:
    """Run the applicable theorem check on every instance and tally violations."""
    field_spec(spec.q)
    if spec.r_min < 1 or spec.r_max < spec.r_min - 1:
        raise ValueError("need 1 <= r_min and r_min <= r_max + 1")
    if spec.mode == "exhaustive" and spec.r_max >= spec.r_min:
        N = projective_count(spec.q, spec.r_max)
        if N > SCAN_MAX_POINTS:
            raise EnumerationCapError(f"exhaustive scan of PG({spec.r_max - 1},{spec.q}) would visit 2^{N} subsets")
    out = ScanReport(spec=asdict(spec))
    for M in scan_instances(spec):
        report = check_instance(M, oracle=spec.oracles)
        out.add(M, report)
        if M.rank == 2:
            out.add(M, check_rank2(M))
            out.instances -= 1
        del out.counterexamples[max_counterexamples:]
    return out
