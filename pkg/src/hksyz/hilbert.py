"""Riemann-Roch polynomial and Hilbert functions of polarized K3^[2]-type fourfolds."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import Inconsistency, InvalidInput, OddSquare


def binom(a: int, m: int) -> int:
    """Polynomial binomial coefficient a(a-1)...(a-m+1)/m!, valid for negative ``a``."""
    if m < 0:
        return 0
    if a >= 0:
        return comb(a, m)
    # C(a, m) = (-1)^m C(m - a - 1, m)
    return (-1) ** m * comb(m - a - 1, m)


def rr_polynomial(m: int, q: int) -> int:
    """chi(L) for a line bundle L of square q on a manifold of K3^[m]-type."""
    if q % 2:
        raise OddSquare(f"square must be even, got {q}")
    return binom(q // 2 + m + 1, m)


def embedding_dimension(d: int) -> int:
    if d < 1:
        raise InvalidInput(f"d must be positive, got {d}")
    return comb(d + 3, 2) - 1


@dataclass(frozen=True)
class PolarizedFourfold:
    """A fourfold with q(H) = 2d embedded by |H| in P^n."""

    d: int

    @property
    def n(self) -> int:
        return embedding_dimension(self.d)

    def h(self, e: int) -> int:
        return h0_power(self.d, e)


def h0_power(d: int, e: int) -> int:
    if e < 0:
        raise InvalidInput(f"power must be nonnegative, got {e}")
    if e == 0:
        return 1
    return comb(d * e * e + 3, 2)


def ideal_dimension(d: int, e: int) -> int:
    """dim of degree-e forms vanishing on the fourfold, assuming projective normality.

    No clamping: a negative value signals that normality fails in degree e.
    """
    if e < 1:
        raise InvalidInput(f"degree must be positive, got {e}")
    n = embedding_dimension(d)
    return comb(n + e, e) - h0_power(d, e)


def degree_from_hilbert(d: int) -> int:
    """Degree of the embedded fourfold from the 4th finite difference of h(e)."""
    values = [h0_power(d, e) for e in range(1, 6)]
    for _ in range(4):
        values = [b - a for a, b in zip(values, values[1:])]
    # the 4th difference of a quartic is 4! times its leading coefficient,
    # and the leading coefficient is deg / 4!
    return values[0]


def quadric_section_count(g: int) -> int:
    """h^0 of L_2 - 2 delta on the Hilbert square of a genus g K3."""
    if g < 6:
        raise InvalidInput(f"genus must be at least 6, got {g}")
    return comb(g - 2, 2)


@dataclass(frozen=True)
class DeformationDims:
    h0_TP: int
    h1_TP: int
    h0_N_XP: int
    h1_N_XP: int
    h0_TQ: int
    h1_TQ: int
    h0_N_XQ: int
    h1_N_XQ: int

    def as_dict(self) -> dict[str, int]:
        return dict(self.__dict__)


# h^1(T_X) = b_2 - 2 = 21 for K3^[2]-type (taken from the general theory,
# not recomputed here)
H1_TANGENT_K3_2 = 21


def genus7_deformation_dims() -> DeformationDims:
    """Fixed cohomology dimensions for the genus 7 fourfold in P^9 and in its quadric."""
    dims = DeformationDims(
        h0_TP=99, h1_TP=1, h0_N_XP=119, h1_N_XP=0,
        h0_TQ=45, h1_TQ=2, h0_N_XQ=64, h1_N_XQ=0,
    )
    n = embedding_dimension(2)
    checks = [
        dims.h0_TP == (n + 1) ** 2 - 1,
        dims.h0_N_XP == dims.h0_TP + H1_TANGENT_K3_2 - 1,
        dims.h0_N_XQ == 8 * 8,
    ]
    if not all(checks):
        raise Inconsistency("genus 7 deformation table fails its consistency checks")
    return dims
