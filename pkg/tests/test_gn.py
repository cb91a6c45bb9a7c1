from __future__ import annotations

import pytest

from hksyz import gn
from hksyz.bwb import global_sections_dim, line_bundle
from hksyz.errors import InvalidInput
from hksyz.hilbert import h0_power

G7, G8 = gn.GENUS7, gn.GENUS8


def test_term_ranks_alternate_to_one() -> None:
    for case, want in ((G7, (1, 64, 126, 64)), (G8, (1, 36, 70, 36))):
        ranks = tuple(t.rank for t in gn.gn_terms(case, 0))
        assert ranks == want
        # the ideal sheaf has rank one
        assert ranks[3] - ranks[2] + ranks[1] - ranks[0] == 1


def test_lambda_piece_ranks() -> None:
    assert (G7.lambda_sub.rank, G7.lambda_quot.rank) == (35, 28)
    assert (G8.lambda_sub.rank, G8.lambda_quot.rank) == (20, 15)


def test_generator_counts() -> None:
    assert gn.ideal_cohomology(G7, 3) == {0: 0}
    assert gn.ideal_cohomology(G7, 4) == {0: 65}
    assert gn.ideal_cohomology(G7, 2) == {0: 0, 1: 1}
    assert gn.ideal_cohomology(G8, 2) == {0: 0}
    assert gn.ideal_cohomology(G8, 3) == {0: 55}


def test_genus7_low_degree() -> None:
    assert gn.ideal_cohomology(G7, 0) == {0: 0, 3: 1, 5: 1}


@pytest.mark.parametrize("d", range(3, 11))
def test_genus7_higher_vanishing(d: int) -> None:
    assert all(v == 0 for i, v in gn.ideal_cohomology(G7, d).items() if i > 0)


@pytest.mark.parametrize("d", range(2, 11))
def test_genus8_higher_vanishing(d: int) -> None:
    assert all(v == 0 for i, v in gn.ideal_cohomology(G8, d).items() if i > 0)


@pytest.mark.parametrize("case", [G7, G8])
@pytest.mark.parametrize("d", range(2, 8))
def test_h0_matches_restriction_oracle(case: gn.GNCase, d: int) -> None:
    # once h^1(I(d)) = 0 and X is projectively normal in degree d,
    # h0(I(d)) = h0(ambient, O(d)) - h0(X, O(d))
    res = gn.ideal_cohomology(case, d)
    if res.get(1, 0) == 0:
        amb = global_sections_dim(line_bundle(case.ambient, d))
        assert res[0] == amb - h0_power(case.square_d, d)


@pytest.mark.parametrize("case", [G7, G8])
@pytest.mark.parametrize("d", range(-2, 11))
def test_euler_characteristic_of_ideal(case: gn.GNCase, d: int) -> None:
    res = gn.ideal_cohomology(case, d)
    chi = sum((-1) ** i * v for i, v in res.items())
    assert chi == gn.ideal_euler(case, d)
    assert chi == gn.e1_page(case, d).euler()


def test_cross_check_identities() -> None:
    r7 = gn.cross_check_ideal(G7)
    r8 = gn.cross_check_ideal(G8)
    assert r7.passed and r8.passed
    assert r7.checks[0].detail == "55 + 65 = 120, expected 120"
    assert r8.checks[0].detail == "190 + 55 = 245, expected 245"


def test_cross_check_catches_wrong_count() -> None:
    assert not gn.cross_check_ideal(G7, generators=64).passed
    assert not gn.cross_check_ideal(G8, generators=56).passed


def test_generator_report() -> None:
    rep = gn.generator_report(G7)
    assert rep.counts == {"ambient_quadrics": 1, "cubics": 0, "quartics": 65}
    assert rep.extension == (1, 64)
    rep8 = gn.generator_report(G8)
    assert rep8.counts == {"quadrics": 15, "cubics": 55}


def test_case_lookup() -> None:
    assert gn.case_by_name("genus7") is G7
    assert gn.case_by_name("GENUS8") is G8
    with pytest.raises(InvalidInput):
        gn.case_by_name("genus9")
