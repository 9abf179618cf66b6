from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from wcogirth.errors import NotSimpleError, PreconditionError, ProjectiveGeometryError
from wcogirth.geometry import ag, bose_burton, pg
from wcogirth.gf import field_spec
from wcogirth.matroid import from_matrix, is_simple
from wcogirth.verify import (
    ScanReport,
    ScanSpec,
    VerificationReport,
    ag_restrictions,
    check_auto,
    check_condition_iii_prime,
    check_main_theorem,
    check_pg_proposition,
    check_rank2,
    check_typeII_sublemma,
    paper_example,
    paper_example_matroid,
    random_instance,
    scan,
    scan_instances,
)


def test_fano_minus_point_is_extremal():
    M = bose_burton(3, 1, 2).as_matroid()
    rep = check_main_theorem(M, oracle=True)
    assert rep.ok
    assert (rep.total_weight, rep.cogirth) == (6, 3)
    assert rep.equality and rep.ratio == 2
    assert all(rep.condition(c) for c in ("i", "ii", "iii", "iii_prime", "iii_oracle"))


def test_affine_plane_extremal_over_gf3():
    M = ag(3, 3).as_matroid()
    rep = check_main_theorem(M)
    assert rep.ok and rep.equality
    assert rep.ratio == Fraction(3, 2)


def test_main_theorem_refuses_projective_geometry():
    with pytest.raises(ProjectiveGeometryError):
        check_main_theorem(pg(3, 2).as_matroid())


def test_main_theorem_needs_simple_input():
    M = from_matrix(field_spec(2), [[1, 1, 0], [0, 0, 1]])
    with pytest.raises(NotSimpleError):
        check_main_theorem(M)


def test_condition_i_failure_reports_a_witness():
    # PG(2,2) minus two points: the complement is not a flat
    M = from_matrix(field_spec(2), [[0, 0, 1, 1, 1], [0, 1, 0, 1, 1], [1, 1, 1, 0, 1]])
    rep = check_main_theorem(M)
    assert rep.condition("i") is False
    assert rep.conditions["i"].witness is not None
    assert rep.condition("ii") is None
    assert not rep.equality and rep.consistency


def test_condition_ii_failure():
    S = bose_burton(3, 1, 2)
    w = [1] * len(S)
    w[0] = 3
    rep = check_main_theorem(S.as_matroid(w))
    assert rep.condition("i") and rep.condition("ii") is False
    assert not rep.equality and rep.ok


def test_pg_proposition():
    rep = check_pg_proposition(pg(3, 2).as_matroid())
    assert rep.equality and rep.ratio == Fraction(7, 4)
    rep = check_pg_proposition(pg(3, 2).as_matroid([2, 1, 1, 1, 1, 1, 1]))
    assert not rep.equality and rep.bound_holds and rep.ok
    with pytest.raises(PreconditionError):
        check_pg_proposition(bose_burton(3, 1, 2).as_matroid())


def test_rank2_checks():
    F = field_spec(5)
    M = from_matrix(F, [[1, 0, 1, 1], [0, 1, 1, 2]], [3, 1, 4, 1])
    rep = check_rank2(M)
    assert rep.cogirth == 9 - 4
    assert rep.bound_holds and not rep.equality and rep.ok
    with pytest.raises(PreconditionError):
        check_rank2(pg(3, 2).as_matroid())
    with pytest.raises(NotSimpleError):
        check_rank2(from_matrix(F, [[1, 2, 0], [0, 0, 1]]))


def test_typeII_identity_needs_its_hypotheses():
    M = bose_burton(4, 1, 2).as_matroid()
    rep = check_typeII_sublemma(M)
    assert rep.condition("typeII")
    w = list(range(1, 15))
    with pytest.raises(PreconditionError):
        check_typeII_sublemma(bose_burton(4, 1, 2).as_matroid(w))


def test_iii_prime_report():
    rep = check_condition_iii_prime(bose_burton(4, 1, 2).as_matroid())
    assert rep.check == "iiiprime"
    assert rep.condition("iii_prime")


def test_auto_dispatch():
    assert [r.check for r in check_auto(pg(3, 2).as_matroid())] == ["pg"]
    assert [r.check for r in check_auto(pg(2, 3).as_matroid())] == ["rank2", "pg"]
    assert [r.check for r in check_auto(bose_burton(3, 1, 2).as_matroid())] == ["main"]
    F = field_spec(5)
    assert [r.check for r in check_auto(from_matrix(F, [[1, 0, 1], [0, 1, 1]]))] == ["rank2", "main"]


@pytest.mark.parametrize(
    "S,expected",
    [(bose_burton(3, 1, 2), 3), (bose_burton(3, 2, 2), 1), (ag(3, 3), 1), (pg(3, 2), 7)],
)
def test_ag_restrictions(S, expected):
    found = ag_restrictions(S.as_matroid())
    assert len(found) == expected
    assert all(len(x) == S.q ** (S.ambient_rank - 1) for x in found)


def test_report_round_trip_through_json():
    for rep in (paper_example("before"), paper_example("after"), check_pg_proposition(pg(3, 3).as_matroid())):
        back = VerificationReport.from_dict(json.loads(json.dumps(rep.to_dict())))
        assert back == rep
        assert back.ratio == rep.ratio


def test_worked_example_before():
    rep = paper_example("before")
    assert rep.problems == []
    assert rep.total_weight == 20 and rep.cogirth == 8
    assert rep.details["C_star_weight"] == 8
    assert (rep.bound_lhs, rep.bound_rhs) == (20, 16)
    assert rep.condition("iii") is False and rep.condition("iii_prime") is True
    assert rep.details["typeII_weights"] == [10] * 8


def test_worked_example_after():
    rep = paper_example("after")
    assert rep.problems == []
    assert rep.cogirth == 10 and rep.equality and rep.ratio == 2
    assert min(rep.details["typeI_weights"]) >= 10
    assert set(rep.details["typeII_weights"]) == {10}
    M, _ = paper_example_matroid("after")
    assert M.total_weight == 20 and is_simple(M)
    assert oracles.cogirth(M) == 10


def test_worked_example_bad_phase():
    with pytest.raises(ValueError):
        paper_example_matroid("during")


@given(st.integers(0, 10**6), st.sampled_from([(2, 3), (3, 3), (2, 4), (4, 3)]))
def test_random_instances_are_simple_and_full_rank(seed, qr):
    q, r = qr
    M = random_instance(random.Random(seed), q, r, 5)
    assert is_simple(M) and M.rank == r
    assert all(1 <= w <= 5 for w in M.weights)
    rep = check_auto(M)
    assert all(x.ok for x in rep)


def test_random_instances_are_reproducible():
    a = random_instance(random.Random(3), 3, 3, 5)
    b = random_instance(random.Random(3), 3, 3, 5)
    assert a == b


def test_exhaustive_scan_rank3():
    rep = scan(ScanSpec(q=2, r_max=3, r_min=3))
    # nonempty subsets of the Fano plane minus 7 points, 21 pairs and 7 lines
    assert rep.instances == 127 - 35
    assert rep.pg == 1
    assert rep.ok and rep.violations == 0
    # 7 one-point deletions, 7 affine planes (line deletions), and the full plane
    assert rep.equality_cases == 15


def test_scan_instances_unit_weights():
    assert all(set(M.weights) == {1} for M in scan_instances(ScanSpec(q=3, r_max=2)))


def test_scan_report_records_violations():
    out = ScanReport(spec={})
    rep = check_main_theorem(bose_burton(3, 1, 2).as_matroid())
    rep.problems.append("synthetic")
    out.add(bose_burton(3, 1, 2).as_matroid(), rep)
    assert out.violations == 1 and not out.ok and len(out.counterexamples) == 1


def test_scan_rejects_bad_spec():
    with pytest.raises(ValueError):
        scan(ScanSpec(q=2, r_max=3, mode="sideways"))
    with pytest.raises(ValueError):
        scan(ScanSpec(q=6, r_max=3))
