"""Borel-Weil-Bott cohomology of homogeneous bundles on Gr(k,n) and even quadrics.

Conventions
-----------
Gr(k, n) parametrizes k-planes U in V = C^n with quotient Q.  A summand is
``Sigma^beta U^vee (x) Sigma^alpha Q^vee (t)`` and maps to the GL_n weight
``(beta_1 + t, ..., beta_k + t | alpha_1, ..., alpha_{n-k})``.  So O(1) is
det U^vee and H^0(O(1)) is the 15-dimensional space of Pluecker coordinates
on Gr(2,6).

Q^{2m} is SO(2m+2)/P for the stabilizer P of an isotropic line, with Levi
C^* x Spin(2m).  A summand is given by its full D_{m+1} weight
``(x | mu)`` with ``mu`` dominant for D_m; the twist by O(t) adds t to x.
When the weight is dominant for D_{m+1} the bundle is globally generated
with H^0 the irreducible representation of that highest weight, so the
fundamental weight w_i gives the bundle usually written E_{w_i}.  On Q^8:
O(1) = (1|0,0,0,0), S^vee = (1/2|1/2,1/2,1/2,-1/2), S = S^vee(-1).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Union

from .errors import InvalidInput
from .weyl import Regular, TypeA, TypeD, WeightVector, dotted_straighten, is_dominant, weyl_dimension


@dataclass(frozen=True)
class Grassmannian:
    k: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.k < self.n:
            raise InvalidInput(f"Gr({self.k},{self.n}) needs 1 <= k < n")

    @property
    def dim(self) -> int:
        return self.k * (self.n - self.k)

    def __str__(self) -> str:
        return f"Gr({self.k},{self.n})"


@dataclass(frozen=True)
class EvenQuadric:
    m: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise InvalidInput(f"even quadric Q^(2m) needs m >= 2, got {self.m}")

    @property
    def dim(self) -> int:
        return 2 * self.m

    def __str__(self) -> str:
        return f"Q^{2 * self.m}"


Ambient = Union[Grassmannian, EvenQuadric]


@dataclass(frozen=True)
class GrPattern:
    """Pair of patterns on Q^vee and U^vee, padded with zeros to the ranks."""

    quot_dual: tuple[int, ...]
    sub_dual: tuple[int, ...]


@dataclass(frozen=True)
class LeviWeight:
    """Doubled D_{m+1} weight ``(x | mu)`` of a bundle on Q^{2m}."""

    doubled: tuple[int, ...]


Descriptor = Union[GrPattern, LeviWeight]


@dataclass(frozen=True)
class Summand:
    descriptor: Descriptor
    twist: int = 0
    multiplicity: int = 1


def _check_pattern(p: tuple[int, ...], rank: int, what: str) -> tuple[int, ...]:
    if len(p) > rank:
        raise InvalidInput(f"{what} pattern {p} is longer than the rank {rank}")
    if any(a < b for a, b in zip(p, p[1:])):
        raise InvalidInput(f"{what} pattern {p} is not weakly decreasing")
    return tuple(p) + (0,) * (rank - len(p))


def _check_levi(m: int, doubled: tuple[int, ...]) -> None:
    if len(doubled) != m + 1:
        raise InvalidInput(f"a weight on Q^{2 * m} has {m + 1} entries, got {len(doubled)}")
    mu = WeightVector(TypeD(m), doubled[1:])
    if len({x % 2 for x in doubled}) > 1:
        raise InvalidInput("weight entries must be all integral or all half-integral")
    if not is_dominant(mu):
        raise InvalidInput(f"{mu} is not dominant for the Levi factor")


@dataclass(frozen=True)
class HomogBundle:
    """Formal direct sum of twisted irreducible homogeneous bundles."""

    ambient: Ambient
    summands: tuple[Summand, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        for s in self.summands:
            if s.multiplicity < 1:
                raise InvalidInput("multiplicities must be positive")
            if isinstance(self.ambient, Grassmannian):
                if not isinstance(s.descriptor, GrPattern):
                    raise InvalidInput("Grassmannian summands need a GrPattern")
            elif not isinstance(s.descriptor, LeviWeight):
                raise InvalidInput("quadric summands need a LeviWeight")

    def __add__(self, other: HomogBundle) -> HomogBundle:
        if self.ambient != other.ambient:
            raise InvalidInput("direct sum of bundles on different spaces")
        return HomogBundle(self.ambient, self.summands + other.summands)

    def __mul__(self, k: int) -> HomogBundle:
        return HomogBundle(self.ambient, tuple(replace(s, multiplicity=s.multiplicity * k) for s in self.summands))

    __rmul__ = __mul__

    def twist(self, t: int) -> HomogBundle:
        return HomogBundle(self.ambient, tuple(replace(s, twist=s.twist + t) for s in self.summands))

    def __call__(self, t: int) -> HomogBundle:
        return self.twist(t)

    def __iter__(self) -> Iterator[Summand]:
        return iter(self.summands)

    @property
    def rank(self) -> int:
        return sum(s.multiplicity * summand_rank(self.ambient, s) for s in self.summands)


def zero_bundle(ambient: Ambient) -> HomogBundle:
    return HomogBundle(ambient, ())


def schur(gr: Grassmannian, quot_dual: Iterable[int] = (), sub_dual: Iterable[int] = (), twist: int = 0) -> HomogBundle:
    """Sigma^quot_dual Q^vee (x) Sigma^sub_dual U^vee (twist) on a Grassmannian."""
    pattern = GrPattern(
        _check_pattern(tuple(quot_dual), gr.n - gr.k, "quotient"),
        _check_pattern(tuple(sub_dual), gr.k, "subbundle"),
    )
    return HomogBundle(gr, (Summand(pattern, twist),))


def quadric_bundle(q: EvenQuadric, entries: Iterable[int | Fraction | str], twist: int = 0) -> HomogBundle:
    doubled = WeightVector.of(TypeD(q.m + 1), entries).doubled
    _check_levi(q.m, doubled)
    return HomogBundle(q, (Summand(LeviWeight(doubled), twist),))


def line_bundle(ambient: Ambient, t: int = 0) -> HomogBundle:
    if isinstance(ambient, Grassmannian):
        return schur(ambient, twist=t)
    return quadric_bundle(ambient, [0] * (ambient.m + 1), t)


def quadric_fundamental(q: EvenQuadric, i: int) -> HomogBundle:
    """E_{w_i}: the bundle of the i-th fundamental weight of D_{m+1} (Bourbaki numbering)."""
    r = q.m + 1
    half = Fraction(1, 2)
    if 1 <= i <= r - 2:
        entries = [1] * i + [0] * (r - i)
    elif i == r - 1:
        entries = [half] * (r - 1) + [-half]
    elif i == r:
        entries = [half] * r
    else:
        raise InvalidInput(f"D_{r} has no fundamental weight {i}")
    return quadric_bundle(q, entries)


def spinor_dual(q: EvenQuadric) -> HomogBundle:
    return quadric_fundamental(q, q.m)


def dual(b: HomogBundle) -> HomogBundle:
    """Dual bundle: the weight goes to -w0 of the Levi factor."""
    out = []
    for s in b.summands:
        d = s.descriptor
        if isinstance(d, GrPattern):
            quot = tuple(-a for a in reversed(d.quot_dual))
            sub = tuple(-a for a in reversed(d.sub_dual))
            out.append(Summand(GrPattern(quot, sub), -s.twist, s.multiplicity))
        else:
            x, mu = d.doubled[0], d.doubled[1:]
            if len(mu) % 2:
                mu = mu[:-1] + (-mu[-1],)
            out.append(Summand(LeviWeight((-x,) + mu), -s.twist, s.multiplicity))
    return HomogBundle(b.ambient, tuple(out))


def spinor(q: EvenQuadric) -> HomogBundle:
    """The spinor bundle S, dual to the globally generated S^vee."""
    return dual(spinor_dual(q))


def to_weight(ambient: Ambient, s: Summand) -> WeightVector:
    d = s.descriptor
    if isinstance(ambient, Grassmannian):
        assert isinstance(d, GrPattern)
        sub = tuple(b + s.twist for b in d.sub_dual)
        return WeightVector(TypeA(ambient.n), tuple(2 * x for x in sub + d.quot_dual))
    assert isinstance(d, LeviWeight)
    return WeightVector(TypeD(ambient.m + 1), (d.doubled[0] + 2 * s.twist,) + d.doubled[1:])


def summand_rank(ambient: Ambient, s: Summand) -> int:
    d = s.descriptor
    if isinstance(ambient, Grassmannian):
        assert isinstance(d, GrPattern)
        sub = WeightVector(TypeA(ambient.k), tuple(2 * x for x in d.sub_dual))
        quot = WeightVector(TypeA(ambient.n - ambient.k), tuple(2 * x for x in d.quot_dual))
        return weyl_dimension(sub) * weyl_dimension(quot)
    assert isinstance(d, LeviWeight)
    return weyl_dimension(WeightVector(TypeD(ambient.m), d.doubled[1:]))


@lru_cache(maxsize=4096)
def _bott(w: WeightVector) -> tuple[int, int] | None:
    res = dotted_straighten(w)
    if not isinstance(res, Regular):
        return None
    return res.length, weyl_dimension(res.dominant)


def summand_cohomology(ambient: Ambient, s: Summand) -> tuple[int, int] | None:
    """The single (degree, dimension) pair of an irreducible summand, or None if acyclic."""
    hit = _bott(to_weight(ambient, s))
    if hit is None:
        return None
    degree, dim = hit
    return degree, dim * s.multiplicity


class CohomologyTable:
    """Dimensions of H^i; degrees not listed are zero."""

    def __init__(self, dims: dict[int, int] | None = None) -> None:
        self._dims = {i: v for i, v in sorted((dims or {}).items()) if v}

    def __getitem__(self, i: int) -> int:
        return self._dims.get(i, 0)

    def __add__(self, other: CohomologyTable) -> CohomologyTable:
        out = dict(self._dims)
        for i, v in other._dims.items():
            out[i] = out.get(i, 0) + v
        return CohomologyTable(out)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CohomologyTable):
            return self._dims == other._dims
        if isinstance(other, dict):
            return self._dims == {i: v for i, v in other.items() if v}
        return NotImplemented

    def as_dict(self) -> dict[int, int]:
        return dict(self._dims)

    def euler(self) -> int:
        return sum((-1) ** i * v for i, v in self._dims.items())

    def __repr__(self) -> str:
        return f"CohomologyTable({self._dims})"


def cohomology(b: HomogBundle) -> CohomologyTable:
    total = CohomologyTable()
    for s in b.summands:
        hit = summand_cohomology(b.ambient, s)
        if hit is not None:
            total = total + CohomologyTable({hit[0]: hit[1]})
    return total


def euler_characteristic(b: HomogBundle) -> int:
    return cohomology(b).euler()


def global_sections_dim(b: HomogBundle) -> int:
    return cohomology(b)[0]
