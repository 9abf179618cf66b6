from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import matrices
from wcogirth.errors import DimensionError, EnumerationCapError, FieldError
from wcogirth.gf import field_spec
from wcogirth.linalg import (
    GFMatrix,
    RowSpace,
    coefficient_vector,
    in_span,
    mask_to_indices,
    mask_weigher,
    normalize,
    null_space,
    projective_count,
    rank,
    rank_of_vectors,
    row_space_supports,
    rref,
)


def test_matrix_validation():
    F = field_spec(3)
    with pytest.raises(DimensionError):
        GFMatrix(F, ((1, 2), (1,)))
    with pytest.raises(FieldError):
        GFMatrix(F, ((1, 3),))
    A = GFMatrix.from_columns(F, [(1, 0), (2, 1), (0, 1)])
    assert A.shape == (2, 3)
    assert A.column(1) == (2, 1)
    assert A.transpose().shape == (3, 2)
    assert A.select_columns([2, 0]).columns() == [(0, 1), (1, 0)]


def test_normalize():
    F = field_spec(5)
    assert normalize(F, (0, 3, 1)) == (0, 1, 2)
    assert normalize(F, (0, 0)) is None


@given(matrices(max_rows=3, max_cols=5))
def test_rank_matches_span_size(m):
    F, entries = m
    A = GFMatrix(F, tuple(map(tuple, entries)))
    of = oracles.oracle_field(F)
    r = oracles.rank(of, entries)
    assert rank(A) == r
    assert rank(A.transpose()) == r
    assert rank_of_vectors(F, A.columns()) == r


@given(matrices(max_rows=3, max_cols=5))
def test_rref_shape_and_row_space(m):
    F, entries = m
    A = GFMatrix(F, tuple(map(tuple, entries)))
    R, r, pivots = rref(A)
    assert len(pivots) == r
    for i, pc in enumerate(pivots):
        assert R.entries[i][pc] == 1
        assert all(R.entries[t][pc] == 0 for t in range(R.nrows) if t != i)
    assert all(not any(row) for row in R.entries[r:])
    of = oracles.oracle_field(F)
    assert oracles.span(of, R.entries) == oracles.span(of, entries)
    assert rref(R)[0] == R


@given(matrices(max_rows=3, max_cols=5))
def test_null_space(m):
    F, entries = m
    n = len(entries[0])
    of = oracles.oracle_field(F)
    basis = null_space(F, entries, n)
    assert len(basis) == n - oracles.rank(of, entries)
    for v in basis:
        assert all(of.dot(row, v) == 0 for row in entries)
    if basis:
        assert oracles.rank(of, basis) == len(basis)


@given(matrices(orders=(2, 3, 4), max_rows=2, max_cols=4), st.data())
def test_in_span_matches_enumeration(m, data):
    F, entries = m
    A = GFMatrix(F, tuple(map(tuple, entries)))
    of = oracles.oracle_field(F)
    rows = oracles.span(of, entries)
    v = tuple(data.draw(st.lists(st.integers(0, F.q - 1), min_size=A.ncols, max_size=A.ncols)))
    assert in_span(v, A) == (v in rows)
    cols = oracles.span(of, A.columns())
    u = tuple(data.draw(st.lists(st.integers(0, F.q - 1), min_size=A.nrows, max_size=A.nrows)))
    assert in_span(u, A, axis="columns") == (u in cols)
    with pytest.raises(DimensionError):
        in_span(v + (0,), A)


@pytest.mark.parametrize("q,k", [(2, 1), (2, 4), (3, 3), (4, 2), (5, 3)])
def test_coefficient_vectors_enumerate_projective_points(q, k):
    F = field_spec(q)
    vecs = [coefficient_vector(t, k, q) for t in range(projective_count(q, k))]
    expected = sorted({normalize(F, v) for v in product(range(q), repeat=k) if any(v)})
    assert vecs == expected


@given(matrices(max_rows=3, max_cols=6))
def test_row_space_classes_cover_every_support(m):
    F, entries = m
    A = GFMatrix(F, tuple(map(tuple, entries)))
    space = RowSpace(A)
    masks = list(space.support_masks())
    assert len(masks) == space.count
    of = oracles.oracle_field(F)
    want = oracles.codeword_supports(of, entries, A.ncols)
    assert {frozenset(mask_to_indices(x)) for x in masks} == want
    # codewords are distinct normalized vectors
    words = [space.codeword(t) for t in range(space.count)]
    assert len(set(words)) == len(words)
    assert all(normalize(F, w) == w for w in words)
    word_masks = [sum(1 << j for j, x in enumerate(w) if x) for w in words]
    if F.q == 2:
        assert sorted(word_masks) == sorted(masks)
    else:
        assert word_masks == masks


@given(matrices(orders=(2, 3), max_rows=3, max_cols=6), st.data())
def test_class_ranges_partition_the_scan(m, data):
    F, entries = m
    space = RowSpace(GFMatrix(F, tuple(map(tuple, entries))))
    full = list(space.support_masks())
    cut = data.draw(st.integers(0, space.count))
    assert list(space.support_masks(0, cut)) + list(space.support_masks(cut)) == full


def test_enumeration_cap():
    F = field_spec(32)
    A = GFMatrix(F, tuple(tuple(int(i == j) for j in range(5)) for i in range(5)))
    space = RowSpace(A)
    with pytest.raises(EnumerationCapError):
        next(space.support_masks())


@given(st.lists(st.integers(1, 300), min_size=1, max_size=20), st.data())
def test_mask_weigher(weights, data):
    mask = data.draw(st.integers(0, (1 << len(weights)) - 1))
    want = sum(w for j, w in enumerate(weights) if mask >> j & 1)
    assert mask_weigher(weights)(mask) == want
    assert mask_weigher(weights, byte_tables=False)(mask) == want


def test_row_space_supports_yields_weights():
    F = field_spec(2)
    A = GFMatrix(F, ((1, 0, 1), (0, 1, 1)))
    got = sorted(row_space_supports(A, [1, 2, 3]))
    assert got == [((0, 1), 3), ((0, 2), 4), ((1, 2), 5)]
