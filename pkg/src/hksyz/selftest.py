"""The acceptance battery run by ``hksyz selftest``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable

from . import betti, bwb, gn, hilbert, intersect, lattice, oracles
from .errors import ComputationError
from .weyl import TypeA, TypeD, WeightVector, dotted_straighten, weyl_dimension


@dataclass(frozen=True)
class Check:
    criterion: int
    name: str
    expected: Any
    got: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.got

    def as_dict(self) -> dict[str, Any]:
        return {"name": self.name, "expected": self.expected, "got": self.got, "pass": self.passed}


def _safe(fn: Callable[[], Any]) -> Any:
    try:
        return fn()
    except ComputationError as exc:
        return f"error: {exc.code}: {exc}"


Q8 = bwb.EvenQuadric(4)
G26 = bwb.Grassmannian(2, 6)


def _hilbert_checks() -> list[Check]:
    cases = [((2, 3), 10), ((2, 4), 120), ((3, 2), 15), ((3, 3), 245), ((2, 2), 0)]
    return [Check(1, f"ideal_dimension{args}", want, _safe(lambda a=args: hilbert.ideal_dimension(*a))) for args, want in cases]


def _higher_vanishing(case: gn.GNCase, degrees: range) -> list[int]:
    bad = []
    for d in degrees:
        res = _safe(lambda: gn.ideal_cohomology(case, d))
        if not isinstance(res, dict) or any(v for i, v in res.items() if i > 0):
            bad.append(d)
    return bad


def _gn_checks() -> list[Check]:
    g7, g8 = gn.GENUS7, gn.GENUS8
    h0 = lambda c, d: _safe(lambda: gn.ideal_cohomology(c, d).get(0, 0))
    return [
        Check(2, "genus7 cubics h0(I(3))", 0, h0(g7, 3)),
        Check(2, "genus7 quartics h0(I(4))", 65, h0(g7, 4)),
        Check(2, "genus7 h1(I(2))", 1, _safe(lambda: gn.ideal_cohomology(g7, 2).get(1, 0))),
        Check(2, "genus8 quadrics in Gr(2,6) h0(I(2))", 0, h0(g8, 2)),
        Check(2, "genus8 cubics h0(I(3))", 55, h0(g8, 3)),
        Check(2, "genus7 higher vanishing 3<=d<=10 (failing d)", [], _higher_vanishing(g7, range(3, 11))),
        Check(2, "genus8 higher vanishing 2<=d<=10 (failing d)", [], _higher_vanishing(g8, range(2, 11))),
    ]


def _cross_checks() -> list[Check]:
    out = []
    for case in (gn.GENUS7, gn.GENUS8):
        rep = _safe(lambda c=case: gn.cross_check_ideal(c))
        detail = rep.checks[0].detail if not isinstance(rep, str) else rep
        out.append(Check(3, f"{case.name.lower()} ideal identity ({detail})", True, getattr(rep, "passed", False)))
    out.append(Check(3, "h0(Gr(2,6),O(3)) by Weyl dimension", 490, bwb.global_sections_dim(bwb.line_bundle(G26, 3))))
    out.append(Check(3, "C(17,3) - 490", 190, 680 - bwb.global_sections_dim(bwb.line_bundle(G26, 3))))
    return out


def _bwb_checks() -> list[Check]:
    coh = lambda b: bwb.cohomology(b).as_dict()
    return [
        Check(4, "H(Gr(2,6),O(1))", {0: 15}, coh(bwb.line_bundle(G26, 1))),
        Check(4, "H(Q8,S^vee)", {0: 16}, coh(bwb.spinor_dual(Q8))),
        Check(4, "H(Q8,E_2w4(-5))", {4: 1}, coh(bwb.quadric_bundle(Q8, [1, 1, 1, 1, -1], -5))),
        Check(4, "H(Q8,E_w3(-3))", {2: 1}, coh(bwb.quadric_fundamental(Q8, 3)(-3))),
        Check(4, "H(Gr(2,6),Sigma^211 Q^vee(1))", {}, coh(bwb.schur(G26, (2, 1, 1), twist=1))),
        Check(4, "H(Gr(2,6),Sigma^22 Q^vee(-2))", {4: 1}, coh(bwb.schur(G26, (2, 2), twist=-2))),
    ]


def weyl_oracle_mismatches(count: int = 120, seed: int = 20240607) -> tuple[int, int]:
    """Compare straightening with orbit BFS on random D_2, D_3, D_4 weights."""
    rng = random.Random(seed)
    bad = 0
    for _ in range(count):
        n = rng.choice((2, 3, 4))
        half = rng.random() < 0.25
        doubled = tuple(2 * rng.randint(-6, 6) + (1 if half else 0) for _ in range(n))
        w = WeightVector(TypeD(n), doubled)
        if dotted_straighten(w) != oracles.bfs_straighten_d(w):
            bad += 1
    return count, bad


def _weyl_checks() -> list[Check]:
    count, bad = weyl_oracle_mismatches()
    return [
        Check(5, f"D_n straightening vs orbit BFS on {count} random weights (mismatches)", 0, bad),
        Check(5, "weyl_dimension D5 spin weight", 16, weyl_dimension(WeightVector.of(TypeD(5), ["1/2"] * 4 + ["-1/2"]))),
        Check(5, "weyl_dimension A6 (3,3,0,0,0,0)", 490, weyl_dimension(WeightVector.of(TypeA(6), [3, 3, 0, 0, 0, 0]))),
    ]


def _betti_checks() -> list[Check]:
    out = [Check(6, "expected_betti(2) equals the deformation diagram", True,
                 _safe(lambda: betti.expected_betti(2) == betti.fixture("DEF_G7")))]
    for name in ("S2_G7", "DEF_G7", "S2_G8_PARTIAL"):
        rep = betti.validate_table(betti.fixture(name), betti.fixture_square(name))
        out.append(Check(6, f"validate {name}", [], [c.name for c in rep.failures()]))
    g8 = betti.fixture("S2_G8_PARTIAL")
    out.append(Check(6, "c4 for d=3 equals b22 - b31", betti.k_polynomial(3)[4], g8.value(2, 2) - g8.value(3, 1)))
    bumped = betti.fixture("S2_G7").with_cell(1, 2, betti.Known(11))
    rep = betti.validate_table(bumped, 2)
    out.append(Check(6, "perturbed S2_G7 b12=11 rejected on antidiagonal", [3], list(rep["antidiagonals"].offending)))
    return out


def _degree_checks(spinor_cp: intersect.ChernPoly | None) -> list[Check]:
    dec6 = intersect.sigma_decomposition(6)
    return [
        Check(7, "harris_tu_sigma_degree(6)", 7, intersect.harris_tu_sigma_degree(6)),
        Check(7, "deg_y0(6)", 6, intersect.deg_y0(6)),
        Check(7, "deg_y_top(6)", 1, intersect.deg_y_top(6)),
        Check(7, "residual(6)", 0, dec6.residual),
        Check(7, "deg_y_top(8)", 14, intersect.deg_y_top(8)),
        Check(7, "grassmannian_degree(4,6)", 14, intersect.grassmannian_degree(4, 6)),
        Check(7, "porteous genus8 vs 12d^2", hilbert.degree_from_hilbert(3), _safe(lambda: intersect.porteous_degree("GENUS8"))),
        Check(7, "porteous genus7 vs 12d^2", hilbert.degree_from_hilbert(2), _safe(lambda: intersect.porteous_degree("GENUS7", spinor_cp))),
        Check(7, "first degeneracy class genus7", "4*h^1", repr(intersect.first_degeneracy_class("GENUS7"))),
        Check(7, "first degeneracy class genus8", "3*s1", repr(intersect.first_degeneracy_class("GENUS8"))),
    ]


def _hrr_checks(spinor_cp: intersect.ChernPoly | None) -> list[Check]:
    coeffs = _safe(lambda: list(intersect.spinor_chern_coefficients(spinor_cp)))
    c1 = coeffs[0] if isinstance(coeffs, list) else coeffs
    return [
        Check(8, "spinor c1 (multiple of h)", -4, c1),
        Check(8, "porteous genus7 from HRR classes", 48, _safe(lambda: intersect.porteous_degree("GENUS7", spinor_cp))),
        Check(8, "HRR chi(O_Q8(1))", 10, intersect.hrr_euler(4, [1], 1)),
        Check(8, "BWB chi(O_Q8(1))", 10, bwb.euler_characteristic(bwb.line_bundle(Q8, 1))),
    ]


def _lattice_checks(lo: int = 6, hi: int = 20) -> list[Check]:
    bad: dict[str, list[int]] = {k: [] for k in ("v2", "w2", "catalog", "relgr", "chern")}
    for g in range(lo, hi + 1):
        ctx = lattice.GenusContext(g)
        if lattice.mukai_square(lattice.MukaiVector(1, 0, -1), ctx) != 2:
            bad["v2"].append(g)
        if lattice.mukai_square(lattice.MukaiVector(2, 1, 2), ctx) != 2 * g - 10:
            bad["w2"].append(g)
        if g % 2 == 0:
            want = [("even_T", -g + 4, g <= 6), ("even_T_prime", -2 * g + 12, g <= 7)]
        else:
            want = [("odd_T", -g + 7, g < 11), ("odd_T_prime", -2 * g + 22, g < 13)]
        want.append(("w_square", 2 * g - 10, True))
        if [tuple(e) for e in lattice.inequality_catalog(g)] != want:
            bad["catalog"].append(g)
        for ell in range(g // 2 - 1):
            if lattice.relative_grassmannian_dim(g, ell) != 2 * g - 8:
                bad["relgr"].append(g)
            if lattice.mukai_to_chern(lattice.MukaiVector(2, -1, ell + 2), ctx)[1] != g - 1 - ell:
                bad["chern"].append(g)
    span = f"{lo}<=g<={hi}"
    return [
        Check(9, f"(1,0,-1)^2 = 2, {span} (failing g)", [], bad["v2"]),
        Check(9, f"w^2 = 2g-10, {span} (failing g)", [], bad["w2"]),
        Check(9, f"extension squares and thresholds, {span} (failing g)", [], bad["catalog"]),
        Check(9, f"relative Grassmannian dim = 2g-8, {span} (failing g)", [], sorted(set(bad["relgr"]))),
        Check(9, f"c2 = g-1-ell, {span} (failing g)", [], sorted(set(bad["chern"]))),
    ]


def battery(spinor_cp: intersect.ChernPoly | None = None) -> list[Check]:
    return (
        _hilbert_checks()
        + _gn_checks()
        + _cross_checks()
        + _bwb_checks()
        + _weyl_checks()
        + _betti_checks()
        + _degree_checks(spinor_cp)
        + _hrr_checks(spinor_cp)
        + _lattice_checks()
    )
