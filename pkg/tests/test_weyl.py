from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hksyz.errors import InvalidInput, NotDominant
from hksyz.oracles import bfs_straighten_d, weyl_group_order_d
from hksyz.weyl import Regular, Singular, TypeA, TypeD, WeightVector, dotted_straighten, is_dominant, rho, weyl_dimension


@st.composite
def type_d_weights(draw):
    n = draw(st.sampled_from((2, 3, 4)))
    offset = draw(st.sampled_from((0, 1)))
    doubled = tuple(2 * draw(st.integers(-6, 6)) + offset for _ in range(n))
    return WeightVector(TypeD(n), doubled)


@settings(max_examples=150, deadline=None)
@given(type_d_weights())
def test_straightening_matches_orbit_bfs(w: WeightVector) -> None:
    assert dotted_straighten(w) == bfs_straighten_d(w)


@given(type_d_weights())
def test_straightened_weight_is_dominant(w: WeightVector) -> None:
    res = dotted_straighten(w)
    if isinstance(res, Regular):
        assert is_dominant(res.dominant)


def test_weyl_group_order() -> None:
    assert [weyl_group_order_d(n) for n in (2, 3, 4)] == [4, 24, 192]


def test_rho() -> None:
    assert rho(TypeA(4)).entries == (3, 2, 1, 0)
    assert rho(TypeD(4)).entries == (3, 2, 1, 0)


def test_singular_and_regular_examples() -> None:
    # lam + rho = (1,1): a repeated entry
    assert dotted_straighten(WeightVector.of(TypeA(2), [0, 1])) == Singular()
    res = dotted_straighten(WeightVector.of(TypeA(2), [0, 2]))
    assert res == Regular(1, WeightVector.of(TypeA(2), [1, 1]))


@pytest.mark.parametrize(
    ("system", "weight", "dim"),
    [
        (TypeA(6), [3, 3, 0, 0, 0, 0], 490),
        (TypeA(6), [1, 1, 0, 0, 0, 0], 15),
        (TypeD(5), ["1/2", "1/2", "1/2", "1/2", "-1/2"], 16),
        (TypeD(5), [1, 0, 0, 0, 0], 10),
        (TypeD(4), [1, 1, 0, 0], 28),
        (TypeD(4), [1, 1, 1, -1], 35),
        (TypeD(4), ["1/2", "1/2", "1/2", "1/2"], 8),
    ],
)
def test_weyl_dimension(system, weight, dim: int) -> None:
    assert weyl_dimension(WeightVector.of(system, weight)) == dim


def test_weyl_dimension_rejects_nondominant() -> None:
    with pytest.raises(NotDominant):
        weyl_dimension(WeightVector.of(TypeA(3), [0, 1, 0]))


def test_mixed_half_integers_rejected() -> None:
    with pytest.raises(InvalidInput):
        WeightVector.of(TypeD(3), ["1/2", 0, 0])


@given(type_d_weights(), type_d_weights())
def test_weight_arithmetic(a: WeightVector, b: WeightVector) -> None:
    if a.system == b.system:
        assert (a + b) - b == a
        assert (a - a).is_zero()
