from __future__ import annotations

import random

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import oracles
from conftest import weighted_matroids
from wcogirth.cogirth import (
    TYPE_I,
    TYPE_II,
    UNTYPED,
    _scan_min,
    classify_cocircuits,
    cocircuits,
    cogirth,
    cogirth_oracle,
    partition_ranges,
)
from wcogirth.errors import RankZeroError
from wcogirth.geometry import bose_burton, embed_in_pg, pg
from wcogirth.gf import field_spec
from wcogirth.linalg import GFMatrix, projective_count
from wcogirth.matroid import from_matrix, simplify
from wcogirth.verify import _random_invertible


def _rebase(M, rng):
    """Same matroid, presented in a random basis with rescaled columns."""
    F = M.field
    r = M.columns.nrows
    B = _random_invertible(rng, F, r)
    cols = []
    for c in M.columns.columns():
        v = [0] * r
        for i in range(r):
            for j in range(r):
                v[i] = F.add[v[i]][F.mul[B[i][j]][c[j]]]
        s = rng.randrange(1, F.q)
        cols.append(tuple(F.mul[s][x] for x in v))
    return from_matrix(F, GFMatrix.from_columns(F, cols, r), M.weights, M.labels)


def test_fano_cogirth_and_witness():
    M = pg(3, 2).as_matroid()
    g, wit = cogirth(M)
    assert g == 4
    assert wit.sorted_support() == (0, 1, 3, 6)
    assert wit.hyperplane == frozenset({2, 4, 5})


def test_single_column():
    M = from_matrix(field_spec(7), [[3]], [9])
    assert cogirth(M)[0] == 9


def test_rank_zero():
    with pytest.raises(RankZeroError):
        cogirth(from_matrix(field_spec(2), [[0, 0]]))
    with pytest.raises(RankZeroError):
        cocircuits(from_matrix(field_spec(2), [[0, 0]]))


@given(weighted_matroids(max_rows=3, max_cols=7))
def test_cogirth_matches_brute_force(M):
    assume(M.rank > 0)
    g, wit = cogirth(M)
    assert g == oracles.cogirth(M)
    assert wit.weight == g == M.weight_of(wit.support)
    cocs = oracles.cocircuit_labels(M)
    assert wit.support in cocs
    # tie-break: the lexicographically least sorted support among minimum ones
    best = min(tuple(sorted(c)) for c in cocs if M.weight_of(c) == g)
    assert wit.sorted_support() == best


@given(weighted_matroids(max_rows=3, max_cols=7))
def test_cocircuits_match_brute_force(M):
    assume(M.rank > 0)
    got = cocircuits(M)
    assert {c.support for c in got} == oracles.cocircuit_labels(M)
    assert [c.sorted_support() for c in got] == sorted(c.sorted_support() for c in got)
    for c in got:
        assert c.support | c.hyperplane == set(M.labels) and not c.support & c.hyperplane


@given(weighted_matroids(orders=(2, 3, 4), max_rows=4, max_cols=8))
def test_subset_closure_oracle_agrees(M):
    assume(M.rank > 0)
    assert cogirth_oracle(M) == cogirth(M)[0]


@given(weighted_matroids(max_rows=3, max_cols=7), st.integers(0, 2**32))
def test_invariant_under_change_of_basis(M, seed):
    assume(M.rank > 0)
    N = _rebase(M, random.Random(seed))
    g, wit = cogirth(M)
    h, wit2 = cogirth(N)
    assert g == h
    assert wit.support == wit2.support
    assert {c.support for c in cocircuits(M)} == {c.support for c in cocircuits(N)}


@given(st.integers(0, 500), st.integers(1, 9))
def test_partition_ranges(total, parts):
    ranges = partition_ranges(total, parts)
    assert ranges[0][0] == 0 and ranges[-1][1] == total
    assert all(a[1] == b[0] for a, b in zip(ranges, ranges[1:]))
    sizes = [b - a for a, b in ranges]
    assert max(sizes) - min(sizes) <= 1


def test_parallel_scan_matches_serial():
    rng = random.Random(7)
    F = field_spec(2)
    rows = [[rng.randrange(2) for _ in range(20)] for _ in range(15)]
    M = from_matrix(F, rows, [rng.randint(1, 5) for _ in range(20)])
    assert M.rank == 15
    serial = cogirth(M)
    assert cogirth(M, workers=2) == serial
    count = M.row_space.count
    parts = [_scan_min(M, a, b) for a, b in partition_ranges(count, 3)]
    assert min(parts)[0] == serial[0]


@pytest.mark.parametrize("r,k,q", [(3, 1, 2), (4, 1, 2), (4, 2, 2), (3, 2, 2), (4, 3, 2), (3, 1, 3), (4, 2, 3), (3, 2, 3), (3, 1, 4)])
def test_type_counts_on_bose_burton(r, k, q):
    M = bose_burton(r, k, q).as_matroid()
    classified = classify_cocircuits(M, embed_in_pg(M))
    t1 = [c for c in classified if c.cotype == TYPE_I]
    t2 = [c for c in classified if c.cotype == TYPE_II]
    # when the complement is a hyperplane, that hyperplane misses M entirely
    assert len(t1) + len(t2) == projective_count(q, r) - (k == r - 1)
    assert len(t1) == (projective_count(q, r - k) if k < r - 1 else 0)
    assert len(t2) == projective_count(q, r) - projective_count(q, r - k)
    for c in classified:
        assert c.normal is not None


def test_classification_untyped_without_a_flat_complement():
    # PG(2,2) minus two points: complement is not a flat
    M = from_matrix(field_spec(2), [[0, 0, 1, 1, 1], [0, 1, 0, 1, 1], [1, 1, 1, 0, 1]])
    emb = embed_in_pg(M)
    assert all(c.cotype == UNTYPED for c in classify_cocircuits(M, emb))
    loose = classify_cocircuits(M, emb, strict=False)
    assert {c.cotype for c in loose} <= {TYPE_I, TYPE_II}


def test_classification_rejects_foreign_embedding():
    M = bose_burton(3, 1, 2).as_matroid()
    other = simplify(from_matrix(field_spec(2), [[1, 0, 1], [0, 1, 1]]))
    with pytest.raises(ValueError):
        classify_cocircuits(M, embed_in_pg(other))
