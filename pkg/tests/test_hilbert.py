from __future__ import annotations

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hksyz.errors import InvalidInput, OddSquare
from hksyz.hilbert import (
    PolarizedFourfold,
    binom,
    degree_from_hilbert,
    embedding_dimension,
    genus7_deformation_dims,
    h0_power,
    ideal_dimension,
    rr_polynomial,
)


@pytest.mark.parametrize(("d", "e", "want"), [(2, 3, 10), (2, 4, 120), (3, 2, 15), (3, 3, 245), (2, 2, 0)])
def test_ideal_dimension_values(d: int, e: int, want: int) -> None:
    assert ideal_dimension(d, e) == want


def test_embedding_dimensions() -> None:
    assert embedding_dimension(2) == 9
    assert embedding_dimension(3) == 14
    assert PolarizedFourfold(3).n == 14


@given(st.integers(-30, 30), st.integers(0, 8))
def test_binom_matches_falling_factorial(a: int, m: int) -> None:
    num = 1
    for k in range(m):
        num *= a - k
    fact = 1
    for k in range(1, m + 1):
        fact *= k
    assert binom(a, m) * fact == num


@given(st.integers(1, 20), st.integers(1, 10))
def test_h0_is_rr_value(d: int, e: int) -> None:
    # Kodaira vanishing makes h0 equal chi for ample classes
    assert h0_power(d, e) == rr_polynomial(2, 2 * d * e * e)
    assert PolarizedFourfold(d).h(e) == h0_power(d, e)


def test_rr_polynomial_rejects_odd_square() -> None:
    with pytest.raises(OddSquare):
        rr_polynomial(2, 3)


def test_rr_polynomial_k3_case() -> None:
    # chi(L) = L^2/2 + 2 on a K3 surface
    assert rr_polynomial(1, 10) == 7


@given(st.integers(1, 30))
def test_degree_is_12_d_squared(d: int) -> None:
    assert degree_from_hilbert(d) == 12 * d * d


@given(st.integers(1, 10), st.integers(1, 6))
def test_ideal_dimension_definition(d: int, e: int) -> None:
    n = embedding_dimension(d)
    assert ideal_dimension(d, e) == comb(n + e, e) - h0_power(d, e)


def test_invalid_arguments() -> None:
    with pytest.raises(InvalidInput):
        ideal_dimension(2, 0)
    with pytest.raises(InvalidInput):
        h0_power(2, -1)
    with pytest.raises(InvalidInput):
        embedding_dimension(0)


def test_deformation_dims() -> None:
    dims = genus7_deformation_dims()
    # automorphisms of P^9 and of the quadric Q^8
    assert dims.h0_TP == 99
    assert dims.h0_TQ == 45
    assert dims.h1_TQ == 2
    assert dims.h0_N_XP == 119
    assert set(dims.as_dict()) == {"h0_TP", "h1_TP", "h0_N_XP", "h1_N_XP", "h0_TQ", "h1_TQ", "h0_N_XQ", "h1_N_XQ"}
