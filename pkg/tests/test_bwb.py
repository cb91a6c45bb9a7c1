from __future__ import annotations

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hksyz.bwb import (
    CohomologyTable,
    EvenQuadric,
    Grassmannian,
    cohomology,
    dual,
    euler_characteristic,
    global_sections_dim,
    line_bundle,
    quadric_bundle,
    quadric_fundamental,
    schur,
    spinor,
    spinor_dual,
    zero_bundle,
)
from hksyz.errors import InvalidInput

Q8 = EvenQuadric(4)
G26 = Grassmannian(2, 6)


def test_fixture_battery() -> None:
    assert cohomology(line_bundle(G26, 1)) == {0: 15}
    assert cohomology(spinor_dual(Q8)) == {0: 16}
    assert cohomology(quadric_bundle(Q8, [1, 1, 1, 1, -1], -5)) == {4: 1}
    assert cohomology(quadric_fundamental(Q8, 3)(-3)) == {2: 1}
    assert cohomology(schur(G26, (2, 1, 1), twist=1)) == {}
    assert cohomology(schur(G26, (2, 2), twist=-2)) == {4: 1}


def test_ranks() -> None:
    assert spinor(Q8).rank == 8
    assert quadric_fundamental(Q8, 3).rank == 28
    assert quadric_bundle(Q8, [1, 1, 1, 1, -1]).rank == 35
    assert schur(G26, (1, 1)).rank == 6
    assert schur(G26, (2, 2)).rank == 20
    assert schur(G26, (2, 1, 1)).rank == 15
    assert (line_bundle(G26) * 3 + schur(G26, (1,))).rank == 7


def test_dimensions() -> None:
    assert G26.dim == 8
    assert Q8.dim == 8


@pytest.mark.parametrize("n", [3, 4, 5, 6])
@pytest.mark.parametrize("t", range(-9, 5))
def test_projective_space_line_bundles(n: int, t: int) -> None:
    # Gr(1,n) is P^(n-1): H^0 for t >= 0, H^(n-1) for t <= -n
    got = cohomology(line_bundle(Grassmannian(1, n), t))
    if t >= 0:
        assert got == {0: comb(n - 1 + t, t)}
    elif t <= -n:
        assert got == {n - 1: comb(-t - 1, n - 1)}
    else:
        assert got == {}


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("t", range(0, 6))
def test_quadric_sections_of_line_bundles(m: int, t: int) -> None:
    n = 2 * m + 1
    want = comb(n + t, t) - (comb(n + t - 2, t - 2) if t >= 2 else 0)
    assert global_sections_dim(line_bundle(EvenQuadric(m), t)) == want


def test_spinor_acyclic_in_range() -> None:
    for t in range(-7, 1):
        assert cohomology(spinor(Q8)(t)) == {}


def test_spinor_dual_is_spinor_twist() -> None:
    # on Q^8 the spinor bundle satisfies S^vee = S(1)
    assert cohomology(spinor(Q8)(1)) == cohomology(spinor_dual(Q8))
    assert spinor(Q8)(1).rank == spinor_dual(Q8).rank


def test_hirzebruch_counts() -> None:
    assert euler_characteristic(line_bundle(Q8, 1)) == 10
    assert global_sections_dim(line_bundle(G26, 3)) == 490
    assert global_sections_dim(spinor(Q8)(1) * 8) == 128


gr_patterns = st.tuples(
    st.lists(st.integers(-3, 3), min_size=4, max_size=4).map(lambda xs: tuple(sorted(xs, reverse=True))),
    st.lists(st.integers(-3, 3), min_size=2, max_size=2).map(lambda xs: tuple(sorted(xs, reverse=True))),
    st.integers(-8, 4),
)


@given(gr_patterns)
def test_serre_duality_grassmannian(p) -> None:
    quot, sub, t = p
    e = schur(G26, quot, sub, t)
    # K = O(-6) on Gr(2,6), dimension 8
    h = cohomology(e).as_dict()
    h_dual = cohomology(dual(e)(-6)).as_dict()
    assert h == {8 - i: v for i, v in h_dual.items()}


@st.composite
def quadric_weights(draw):
    m = draw(st.sampled_from((2, 3, 4)))
    half = draw(st.booleans())
    vals = sorted(draw(st.lists(st.integers(0, 3), min_size=m, max_size=m)), reverse=True)
    if half:
        mu = [v + 0.5 for v in vals]
    else:
        mu = list(vals)
    if draw(st.booleans()):
        mu[-1] = -mu[-1]
    entries = [str(x) if isinstance(x, int) else f"{int(2 * x)}/2" for x in mu]
    x = draw(st.integers(-3, 3))
    x_entry = f"{2 * x + 1}/2" if half else str(x)
    return EvenQuadric(m), [x_entry] + entries, draw(st.integers(-10, 4))


@given(quadric_weights())
def test_serre_duality_quadric(w) -> None:
    q, entries, t = w
    e = quadric_bundle(q, entries, t)
    h = cohomology(e).as_dict()
    h_dual = cohomology(dual(e)(-2 * q.m)).as_dict()
    assert h == {q.dim - i: v for i, v in h_dual.items()}


@given(gr_patterns)
def test_dual_is_involution(p) -> None:
    e = schur(G26, *p)
    assert dual(dual(e)) == e
    assert dual(e).rank == e.rank


def test_cohomology_table_algebra() -> None:
    a = CohomologyTable({0: 2, 3: 0})
    b = CohomologyTable({1: 5})
    assert (a + b).as_dict() == {0: 2, 1: 5}
    assert (a + b).euler() == -3
    assert a[3] == 0
    assert cohomology(zero_bundle(Q8)) == {}


def test_invalid_bundles() -> None:
    with pytest.raises(InvalidInput):
        schur(G26, (1, 2))
    with pytest.raises(InvalidInput):
        schur(G26, (1, 1, 1, 1, 1))
    with pytest.raises(InvalidInput):
        quadric_bundle(Q8, ["1/2", 1, 0, 0, 0])
    with pytest.raises(InvalidInput):
        quadric_bundle(Q8, [0, 0, 1, 0, 0])
    with pytest.raises(InvalidInput):
        quadric_fundamental(Q8, 6)
    with pytest.raises(InvalidInput):
        line_bundle(Q8) + line_bundle(G26)
