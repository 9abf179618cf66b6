from __future__ import annotations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from wcogirth.gf import field_spec
from wcogirth.matroid import from_matrix

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SMALL_ORDERS = (2, 3, 4, 5)
ALL_ORDERS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32)


@st.composite
def matrices(draw, orders=SMALL_ORDERS, max_rows=3, max_cols=6, min_cols=1):
    q = draw(st.sampled_from(orders))
    rows = draw(st.integers(1, max_rows))
    cols = draw(st.integers(min_cols, max_cols))
    entries = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=cols, max_size=cols), min_size=rows, max_size=rows))
    return field_spec(q), entries


@st.composite
def weighted_matroids(draw, orders=SMALL_ORDERS, max_rows=3, max_cols=6, nonzero_rank=True, max_weight=5):
    F, entries = draw(matrices(orders, max_rows, max_cols))
    n = len(entries[0])
    if nonzero_rank and not any(any(r) for r in entries):
        entries[0][0] = 1
    weights = draw(st.lists(st.integers(1, max_weight), min_size=n, max_size=n))
    return from_matrix(F, entries, weights)
