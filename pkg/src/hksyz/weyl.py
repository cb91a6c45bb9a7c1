"""Weights of GL_n (type A) and SO(2n) (type D), dotted straightening, Weyl dimensions.

Entries are stored doubled so that spin weights stay integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import InvalidInput, NotDominant


@dataclass(frozen=True)
class TypeA:
    n: int


@dataclass(frozen=True)
class TypeD:
    n: int


System = Union[TypeA, TypeD]


def _double(x: int | Fraction | str) -> int:
    q = Fraction(x)
    if (2 * q).denominator != 1:
        raise InvalidInput(f"weight entries must be half-integers, got {x}")
    return int(2 * q)


@dataclass(frozen=True)
class WeightVector:
    system: System
    doubled: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.doubled) != self.system.n:
            raise InvalidInput(f"expected {self.system.n} entries, got {len(self.doubled)}")
        parities = {x % 2 for x in self.doubled}
        if len(parities) > 1:
            raise InvalidInput("entries must be all integral or all half-integral")
        if isinstance(self.system, TypeA) and parities == {1}:
            raise InvalidInput("type A weights must be integral")

    @classmethod
    def of(cls, system: System, entries: Iterable[int | Fraction | str]) -> WeightVector:
        return cls(system, tuple(_double(x) for x in entries))

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.doubled)

    def __add__(self, other: WeightVector) -> WeightVector:
        if self.system != other.system:
            raise InvalidInput("weights belong to different root systems")
        return WeightVector(self.system, tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def __sub__(self, other: WeightVector) -> WeightVector:
        if self.system != other.system:
            raise InvalidInput("weights belong to different root systems")
        return WeightVector(self.system, tuple(a - b for a, b in zip(self.doubled, other.doubled)))

    def is_zero(self) -> bool:
        return not any(self.doubled)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.entries) + ")"


@dataclass(frozen=True)
class Singular:
    pass


@dataclass(frozen=True)
class Regular:
    length: int
    dominant: WeightVector


StraightenResult = Union[Singular, Regular]


def rho(system: System) -> WeightVector:
    return WeightVector(system, tuple(2 * k for k in range(system.n - 1, -1, -1)))


def _dominant_doubled(system: System, v: tuple[int, ...]) -> bool:
    if isinstance(system, TypeA):
        return all(a >= b for a, b in zip(v, v[1:]))
    if len(v) == 1:
        return True
    return all(a >= b for a, b in zip(v[:-2], v[1:-1])) and v[-2] >= abs(v[-1])


def is_dominant(w: WeightVector) -> bool:
    return _dominant_doubled(w.system, w.doubled)


def _is_singular(system: System, v: tuple[int, ...]) -> bool:
    if isinstance(system, TypeA):
        return len(set(v)) < len(v)
    return len({abs(x) for x in v}) < len(v)


def _straighten_step(system: System, v: list[int]) -> bool:
    """Apply one simple reflection with negative pairing; False when none applies."""
    for i in range(len(v) - 1):
        if v[i] < v[i + 1]:
            v[i], v[i + 1] = v[i + 1], v[i]
            return True
    if isinstance(system, TypeD) and len(v) >= 2 and v[-2] + v[-1] < 0:
        v[-2], v[-1] = -v[-1], -v[-2]
        return True
    return False


def dotted_straighten(lam: WeightVector) -> StraightenResult:
    """Move lam + rho into the dominant chamber, counting reflections."""
    system = lam.system
    r = rho(system)
    v = list((lam + r).doubled)
    if _is_singular(system, tuple(v)):
        return Singular()
    length = 0
    while _straighten_step(system, v):
        length += 1
    return Regular(length, WeightVector(system, tuple(v)) - r)


def weyl_dimension(mu: WeightVector) -> int:
    """Dimension of the irreducible representation with highest weight mu."""
    if not is_dominant(mu):
        raise NotDominant(f"{mu} is not dominant for {mu.system}")
    n = mu.system.n
    r = rho(mu.system).doubled
    v = [a + b for a, b in zip(mu.doubled, r)]
    num = den = 1
    for i in range(n):
        for j in range(i + 1, n):
            if isinstance(mu.system, TypeA):
                num *= v[i] - v[j]
                den *= r[i] - r[j]
            else:
                num *= v[i] * v[i] - v[j] * v[j]
                den *= r[i] * r[i] - r[j] * r[j]
    if num % den:
        raise InvalidInput(f"Weyl dimension of {mu} is not integral")
    return num // den
