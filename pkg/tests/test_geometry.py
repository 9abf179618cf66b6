from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from wcogirth.errors import NotAFlatError, NotSimpleError, RankZeroError
from wcogirth.geometry import (
    ProjectivePointSet,
    _copy_masks,
    ag,
    ambient,
    bose_burton,
    closure,
    embed_in_pg,
    flat_rank,
    hyperplane,
    hyperplane_normals_containing,
    hyperplanes_containing,
    pg,
    pk1_copies_containing,
)
from wcogirth.gf import field_spec
from wcogirth.linalg import normalize, projective_count
from wcogirth.matroid import from_matrix


def test_fano_points_in_order():
    assert pg(3, 2).points == ((0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1))


def test_ag_and_bose_burton_shapes():
    assert ag(2, 3).points == ((1, 0), (1, 1), (1, 2))
    assert len(bose_burton(4, 1, 2)) == 14
    assert (0, 0, 0, 1) not in bose_burton(4, 1, 2)


@pytest.mark.parametrize("r,k", [(3, 0), (3, 3), (1, 1)])
def test_bose_burton_rejects_bad_k(r, k):
    with pytest.raises(ValueError):
        bose_burton(r, k, 2)


def test_point_set_validation():
    F = field_spec(3)
    with pytest.raises(ValueError):
        ProjectivePointSet(F, 2, ((2, 1),))
    with pytest.raises(ValueError):
        ProjectivePointSet(F, 2, ((1, 1), (1, 1)))


@pytest.mark.parametrize("q,r", [(2, 3), (2, 4), (3, 3), (4, 3)])
def test_pg_points_are_all_normalized_vectors(q, r):
    F = field_spec(q)
    want = {normalize(F, v) for v in product(range(q), repeat=r) if any(v)}
    assert set(pg(r, q).points) == want
    assert list(pg(r, q).points) == sorted(want)


def test_hyperplanes_of_fano():
    H = hyperplane((1, 1, 0), 3, 2)
    assert H.points == ((0, 0, 1), (1, 1, 0), (1, 1, 1))
    assert flat_rank(H) == (2, True)


@st.composite
def subsets(draw, orders=(2, 3), max_r=4):
    q = draw(st.sampled_from(orders))
    r = draw(st.integers(2, max_r if q == 2 else 3))
    pts = pg(r, q).points
    chosen = draw(st.lists(st.sampled_from(pts), min_size=1, max_size=6, unique=True))
    return ProjectivePointSet(field_spec(q), r, tuple(chosen))


@given(subsets())
def test_closure_is_the_projective_span(S):
    F = S.field
    of = oracles.oracle_field(F)
    span = {normalize(F, v) for v in oracles.span(of, S.points) if any(v)}
    C = closure(S)
    assert set(C.points) == span
    assert flat_rank(C) == (oracles.rank(of, S.points), True)
    assert flat_rank(S)[1] == (set(S.points) == span)


@given(subsets())
def test_hyperplanes_through_a_flat(S):
    C = closure(S)
    k, _ = flat_rank(C)
    r, q = C.ambient_rank, C.q
    hs = hyperplanes_containing(C, r, q)
    assert len(hs) == projective_count(q, r - k)
    of = oracles.oracle_field(C.field)
    for nrm, H in zip(hyperplane_normals_containing(C), hs):
        assert set(C.points) <= set(H.points)
        assert all(of.dot(nrm, x) == 0 for x in H.points)
    if not flat_rank(S)[1]:
        with pytest.raises(NotAFlatError):
            hyperplanes_containing(S)


@given(subsets())
def test_copies_partition_the_outside(S):
    C = closure(S)
    k, _ = flat_rank(C)
    r, q = C.ambient_rank, C.q
    if k == r:
        with pytest.raises(ValueError):
            pk1_copies_containing(C)
        return
    copies = pk1_copies_containing(C)
    assert len(copies) == projective_count(q, r - k)
    seen = set()
    for P in copies:
        assert flat_rank(P) == (k + 1, True)
        assert set(C.points) <= set(P.points)
        rest = set(P.points) - set(C.points)
        assert not rest & seen
        seen |= rest
    assert seen == set(pg(r, q).points) - set(C.points)


def test_embedding_changes_coordinates_when_rows_exceed_rank():
    F = field_spec(3)
    M = from_matrix(F, [[1, 0, 1], [0, 1, 1], [1, 1, 2]])
    emb = embed_in_pg(M)
    assert emb.rank == 2
    assert len(emb.complement) == projective_count(3, 2) - 3


def test_embedding_errors():
    F = field_spec(2)
    with pytest.raises(NotSimpleError):
        embed_in_pg(from_matrix(F, [[1, 1, 0], [0, 0, 1]]))
    with pytest.raises(RankZeroError):
        embed_in_pg(from_matrix(F, [[0]]))


def test_bose_burton_complement_is_a_flat():
    S = bose_burton(4, 2, 3)
    emb = embed_in_pg(S.as_matroid())
    assert flat_rank(emb.complement) == (2, True)
    assert len(emb.complement) == projective_count(3, 2)


@pytest.mark.parametrize("q,rmax", [(2, 5), (3, 4)])
def test_hyperplanes_meet_each_copy_evenly(q, rmax):
    # A hyperplane avoiding the flat C meets every copy P of rank k+1 so that
    # (P - C) - H has exactly (q-1) q^(k-1) points; one containing C takes all or none.
    for r in range(2, rmax + 1):
        amb = ambient(r, q)
        for k in range(1, r):
            cmask = amb.mask_of(p for p in amb.points if not any(p[: r - k]))
            copies = _copy_masks(amb, cmask)
            for h in amb.hyperplane_masks:
                for P in copies:
                    outside = (P & ~cmask & ~h).bit_count()
                    if cmask & ~h:
                        assert outside == (q - 1) * q ** (k - 1)
                    else:
                        assert outside in (0, q**k)
