from __future__ import annotations

import json
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hksyz import intersect as ix
from hksyz.bwb import EvenQuadric, Grassmannian, euler_characteristic, line_bundle
from hksyz.errors import InconsistentHRR, InvalidInput
from hksyz.hilbert import degree_from_hilbert
from hksyz.oracles import hook_length_rectangle, pieri_chain_multiply

G26 = Grassmannian(2, 6)
G36 = Grassmannian(3, 6)


def _box_partitions(rows: int, cols: int) -> list[tuple[int, ...]]:
    out = []
    for p in product(range(cols + 1), repeat=rows):
        if all(a >= b for a, b in zip(p, p[1:])):
            out.append(tuple(x for x in p if x))
    return out


@pytest.mark.parametrize("lam", _box_partitions(3, 3))
def test_lr_matches_pieri_chain(lam) -> None:
    x = ix.SchubertClass.sigma(G36, *lam)
    for mu in _box_partitions(3, 3):
        y = ix.SchubertClass.sigma(G36, *mu)
        assert x * y == pieri_chain_multiply(x, y)


def test_lr_known_coefficient() -> None:
    # c^{321}_{21,21} = 2
    assert ix.lr_coefficients((2, 1), (2, 1), 3, 3)[(3, 2, 1)] == 2


@given(st.sampled_from(_box_partitions(2, 4)), st.sampled_from(_box_partitions(2, 4)))
def test_lr_commutative(lam, mu) -> None:
    a, b = ix.SchubertClass.sigma(G26, *lam), ix.SchubertClass.sigma(G26, *mu)
    assert a * b == b * a


def test_sigma1_power_degree() -> None:
    s1 = ix.SchubertClass.sigma(G26, 1)
    assert s1**8 == ix.SchubertClass.sigma(G26, 4, 4).scale(14)
    assert ix.grassmannian_degree(2, 6) == 14 == hook_length_rectangle(2, 4)


@pytest.mark.parametrize(("k", "n"), [(2, 4), (2, 5), (3, 6), (2, 7), (3, 7)])
def test_grassmannian_degree_hook_length(k: int, n: int) -> None:
    assert ix.grassmannian_degree(k, n) == hook_length_rectangle(k, n - k)


def test_chern_of_wedge2_quotient_dual() -> None:
    c = ix.chern_schur_bundle(G26, (1, 1), "quot_dual")
    s = lambda *lam: ix.SchubertClass.sigma(G26, *lam)
    assert c[1] == s(1).scale(-3)
    assert c[2] == s(1, 1).scale(3) + s(2).scale(5)


def test_chern_of_line_bundle() -> None:
    c = ix.chern_schur_bundle(G26, (), "sub_dual", twist=2)
    assert c[1] == ix.SchubertClass.sigma(G26, 1).scale(2)
    assert len(c) == 2


def test_chern_schur_bundle_bad_side() -> None:
    with pytest.raises(InvalidInput):
        ix.chern_schur_bundle(G26, (1,), "left")


def test_quadric_ring_relations() -> None:
    for m in (2, 3, 4, 5):
        h = ix.QuadricClass.h_power(m, 1)
        assert ix.integrate(h ** (2 * m)) == 2
        a, b = ix.QuadricClass.a(m), ix.QuadricClass.b(m)
        assert h**m == a + b
        diag = 1 if m % 2 == 0 else 0
        assert ix.integrate(a * a) == diag
        assert ix.integrate(a * b) == 1 - diag
        assert ix.integrate(a * h**m) == 1


def test_chern_poly_inverse() -> None:
    c = ix.chern_schur_bundle(G26, (1, 1), "quot_dual")
    one = c * c.inverse(8)
    assert one[0] == ix.SchubertClass.one(G26)
    assert all(not one[i].coeffs for i in range(1, 9))


def test_chern_poly_requires_unit() -> None:
    with pytest.raises(InvalidInput):
        ix.ChernPoly((ix.QuadricClass.h_power(4, 1),))


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_todd_class(m: int) -> None:
    assert ix.integrate(ix.todd_quadric(m)[2 * m]) == 1


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("t", range(-8, 6))
def test_hrr_matches_bott_for_line_bundles(m: int, t: int) -> None:
    assert ix.hrr_euler(m, [1], t) == euler_characteristic(line_bundle(EvenQuadric(m), t))


def test_hrr_chi_o1() -> None:
    assert ix.hrr_euler(4, [1], 1) == 10


def test_spinor_chern_classes() -> None:
    assert ix.spinor_chern_coefficients() == (-4, 8, -10)
    cp = ix.spinor_chern_via_hrr()
    assert repr(cp[1]) == "-4*h^1"


def test_spinor_hrr_rejects_wrong_values() -> None:
    with pytest.raises(InconsistentHRR):
        ix.spinor_chern_via_hrr(lambda t: euler_characteristic(line_bundle(EvenQuadric(4), t)))


def test_porteous_degrees() -> None:
    assert ix.porteous_degree("GENUS8") == 108 == degree_from_hilbert(3)
    assert ix.porteous_degree("GENUS7") == 48 == degree_from_hilbert(2)


def test_porteous_with_wrong_spinor_classes() -> None:
    wrong = ix.spinor_chern_from_coefficients(-3, 8, -10)
    assert ix.porteous_degree("GENUS7", wrong) != 48


def test_first_degeneracy_classes() -> None:
    assert repr(ix.first_degeneracy_class("GENUS7")) == "4*h^1"
    assert repr(ix.first_degeneracy_class("GENUS8")) == "3*s1"


def test_degeneracy_c1() -> None:
    cS = ix.spinor_chern_via_hrr()
    trivial = ix.ChernPoly((ix.QuadricClass.h_power(4, 0),))
    assert ix.degeneracy_c1(cS, trivial) == ix.QuadricClass.h_power(4, 1).scale(4)


def test_unknown_case() -> None:
    with pytest.raises(InvalidInput):
        ix.porteous_degree("GENUS9")


def test_override_file(tmp_path) -> None:
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"c1": -4, "c2": 8, "c3": -10}))
    assert ix.check_spinor_override(good) == (-4, 8, -10)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"c1": -3, "c2": 8, "c3": -10}))
    with pytest.raises(InconsistentHRR):
        ix.check_spinor_override(bad)
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    with pytest.raises(InvalidInput):
        ix.load_spinor_chern(broken)
    with pytest.raises(InvalidInput):
        ix.load_spinor_chern(tmp_path / "missing.json")


def test_degree_formulas_g6() -> None:
    dec = ix.sigma_decomposition(6)
    assert (dec.total, dec.y0, dec.y_top, dec.residual) == (7, 6, 1, 0)
    assert ix.harris_tu_sigma_degree(6) == 7


def test_degree_formulas_g8() -> None:
    dec = ix.sigma_decomposition(8)
    assert (dec.total, dec.y0, dec.y_top, dec.residual) == (1386, 840, 14, 532)
    assert ix.deg_y_top(8) == ix.grassmannian_degree(4, 6)


@pytest.mark.parametrize("g", range(6, 16))
def test_residual_nonnegative(g: int) -> None:
    assert ix.sigma_decomposition(g).residual >= 0


def test_degree_formula_bounds() -> None:
    with pytest.raises(InvalidInput):
        ix.harris_tu_sigma_degree(5)
    with pytest.raises(InvalidInput):
        ix.deg_y_top(7)


@settings(max_examples=40)
@given(st.lists(st.fractions(max_denominator=6), min_size=1, max_size=9))
def test_quadric_from_h_poly_coefficients(coeffs) -> None:
    x = ix.QuadricClass.from_h_poly(4, coeffs)
    for i, c in enumerate(coeffs):
        assert x.h_coefficient(i) == c


def test_h_coefficient_rejects_middle_class() -> None:
    with pytest.raises(InvalidInput):
        ix.QuadricClass.a(4).h_coefficient(4)
    assert ix.QuadricClass.a(4).h_coefficient(3) == Fraction(0)
