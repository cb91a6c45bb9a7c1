"""Mukai lattice of a Picard-rank-one K3 surface and squares on its Hilbert square.

A Mukai vector is stored as ``(r, c, s)`` meaning ``(rank, c*L, ch2 + rank)``
where ``L`` is the primitive polarization with ``L^2 = 2g - 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .errors import InvalidDivisibility, InvalidInput, NonexistentModuli, StrataBound


@dataclass(frozen=True)
class MukaiVector:
    r: int
    c: int
    s: int

    def __add__(self, other: MukaiVector) -> MukaiVector:
        return MukaiVector(self.r + other.r, self.c + other.c, self.s + other.s)

    def __mul__(self, k: int) -> MukaiVector:
        return MukaiVector(k * self.r, k * self.c, k * self.s)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.r == 0 and self.c == 0 and self.s == 0


@dataclass(frozen=True)
class GenusContext:
    g: int

    def __post_init__(self) -> None:
        if self.g < 2:
            raise InvalidInput(f"genus must be at least 2, got {self.g}")

    @property
    def L2(self) -> int:
        return 2 * self.g - 2


@dataclass(frozen=True)
class Hilb2Class:
    """The class a*L_2 - b*delta on the Hilbert square."""

    a: int
    b: int
    square: int
    divisibility: int


class CatalogEntry(NamedTuple):
    name: str
    value: int
    satisfied: bool


def mukai_pairing(u: MukaiVector, v: MukaiVector, ctx: GenusContext) -> int:
    return u.c * v.c * ctx.L2 - u.r * v.s - u.s * v.r


def mukai_square(v: MukaiVector, ctx: GenusContext) -> int:
    return mukai_pairing(v, v, ctx)


def moduli_dimension(v: MukaiVector, ctx: GenusContext) -> int:
    sq = mukai_square(v, ctx)
    if sq < -2:
        raise NonexistentModuli(f"v^2 = {sq} < -2 for v = {v}")
    return sq + 2


def moduli_space_nonempty(square2d: int, gamma: int) -> bool:
    """Whether polarized fourfolds of K3^[2]-type with this square and divisibility exist."""
    if gamma not in (1, 2):
        raise InvalidDivisibility(f"divisibility must be 1 or 2, got {gamma}")
    if square2d <= 0 or square2d % 2:
        raise InvalidInput(f"square must be positive and even, got {square2d}")
    return gamma == 1 or square2d % 8 == 6


def hilb2_polarization(g: int, a: int, b: int) -> Hilb2Class:
    # delta^2 = -2 and L_2 is orthogonal to delta.  The divisibility rule
    # gcd(a, 2b) relies on unimodularity of H^2(S, Z): some u has L.u = 1.
    ctx = GenusContext(g)
    square = a * a * ctx.L2 - 2 * b * b
    return Hilb2Class(a, b, square, gcd(a, 2 * b))


def extension_square(v1: MukaiVector, v2: MukaiVector, ctx: GenusContext) -> int:
    return mukai_square(v1 + v2, ctx)


def inequality_catalog(g: int) -> list[CatalogEntry]:
    """Squares of the Mukai vectors of the extensions used to rule out bad loci.

    An entry is satisfied when the value is at least -2, the bound for a
    nonempty moduli space.  The odd-genus entries use the same vectors with
    ``floor(g/2)`` and come out as ``-g+7`` and ``-2g+22``.
    """
    if g < 5:
        raise InvalidInput(f"catalog needs g >= 5, got {g}")
    ctx = GenusContext(g)
    h = g // 2
    t = extension_square(MukaiVector(2, -1, h), MukaiVector(1, 0, -1), ctx)
    t2 = extension_square(MukaiVector(4, -2, 2 * h), MukaiVector(1, 0, -2), ctx)
    w = mukai_square(MukaiVector(2, 1, 2), ctx)
    if g % 2 == 0:
        named = [("even_T", t), ("even_T_prime", t2)]
    else:
        named = [("odd_T", t), ("odd_T_prime", t2)]
    named.append(("w_square", w))
    return [CatalogEntry(name, value, value >= -2) for name, value in named]


def relative_grassmannian_dim(g: int, ell: int) -> int:
    """Dimension of the relative Grassmannian over the stratum Sigma_ell."""
    if ell < 0:
        raise InvalidInput(f"ell must be nonnegative, got {ell}")
    if ell > g // 2 - 2:
        raise StrataBound(f"stratum {ell} is empty for g = {g}")
    ctx = GenusContext(g)
    base = moduli_dimension(MukaiVector(2, 1, ell + 2), ctx)
    chi = 2 + (ell + 2)
    return base + 4 * (chi - 4)


def mukai_to_chern(v: MukaiVector, ctx: GenusContext) -> tuple[int, int]:
    """Return ``(c1 as a multiple of L, c2)`` for a sheaf of positive rank."""
    if v.r <= 0:
        raise InvalidInput(f"rank must be positive, got {v.r}")
    # ch2 = c1^2/2 - c2 and s = ch2 + r, so c2 = c^2 (g-1) - (s - r)
    return v.c, v.c * v.c * (ctx.g - 1) - (v.s - v.r)
