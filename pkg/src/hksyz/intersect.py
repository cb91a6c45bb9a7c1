"""Intersection theory on Gr(k,n) and even quadrics.

Schubert classes are indexed by partitions in the k x (n-k) box, with
c(Q) = 1 + sigma_1 + ... + sigma_{n-k} and c(U^vee) = 1 + sigma_1 + sigma_11 + ....
On Q^{2m} the ring has h^i below the middle, two middle classes a, b with
h^m = a + b, and above the middle the classes l_j = h^j / 2 of linear spaces.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence, Union

from .bwb import EvenQuadric, Grassmannian, euler_characteristic, spinor
from .errors import Inconsistency, InconsistentHRR, InvalidInput, NonIntegral

Number = Union[int, Fraction]
Partition = tuple[int, ...]


def _norm(p: Iterable[int]) -> Partition:
    return tuple(x for x in p if x)


def _clean(coeffs: dict) -> dict:
    return {key: (int(v) if isinstance(v, Fraction) and v.denominator == 1 else v) for key, v in coeffs.items() if v}


# ---------------------------------------------------------------- Schubert


def _horizontal_strips(shape: Partition, s: int, rows: int, cols: int) -> Iterator[Partition]:
    """Shapes obtained from ``shape`` by adding a horizontal strip of s boxes inside the box."""
    base = list(shape) + [0] * (rows - len(shape))

    def rec(i: int, left: int, acc: list[int]) -> Iterator[Partition]:
        if i == rows:
            if left == 0:
                yield _norm(acc)
            return
        cap = cols if i == 0 else base[i - 1]
        for add in range(min(left, cap - base[i]), -1, -1):
            yield from rec(i + 1, left - add, acc + [base[i] + add])

    yield from rec(0, s, [])


def _is_lattice(word: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for x in word:
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def lr_coefficients(lam: Partition, mu: Partition, rows: int, cols: int) -> dict[Partition, int]:
    return dict(_lr(tuple(lam), tuple(mu), rows, cols))


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, rows: int, cols: int) -> tuple[tuple[Partition, int], ...]:
    """Littlewood-Richardson coefficients c^nu_{lam,mu} for nu inside the rows x cols box.

    Boxes labelled t are added as a horizontal strip of mu_t boxes for
    t = 1, 2, ...; a filling counts when its reverse reading word is a
    lattice word.
    """
    states: list[tuple[Partition, tuple[tuple[int, ...], ...]]] = [(lam, tuple(() for _ in range(rows)))]
    for t, size in enumerate(mu, start=1):
        nxt = []
        for shape, labels in states:
            padded = list(shape) + [0] * (rows - len(shape))
            for new in _horizontal_strips(shape, size, rows, cols):
                grown = list(new) + [0] * (rows - len(new))
                lab = tuple(labels[i] + (t,) * (grown[i] - padded[i]) for i in range(rows))
                nxt.append((new, lab))
        states = nxt
    out: dict[Partition, int] = {}
    for shape, labels in states:
        word = [x for row in labels for x in reversed(row)]
        if _is_lattice(word):
            out[shape] = out.get(shape, 0) + 1
    return tuple(sorted(out.items()))


class SchubertClass:
    """Element of H^*(Gr(k,n)) in the Schubert basis."""

    def __init__(self, gr: Grassmannian, coeffs: dict[Partition, Number] | None = None) -> None:
        self.gr = gr
        rows, cols = gr.k, gr.n - gr.k
        clean = {}
        for lam, v in (coeffs or {}).items():
            lam = _norm(lam)
            if len(lam) > rows or (lam and lam[0] > cols) or any(a < b for a, b in zip(lam, lam[1:])):
                raise InvalidInput(f"{lam} is not a partition in the {rows}x{cols} box")
            clean[lam] = clean.get(lam, 0) + v
        self.coeffs = _clean(clean)

    @classmethod
    def sigma(cls, gr: Grassmannian, *lam: int) -> SchubertClass:
        return cls(gr, {_norm(lam): 1})

    @classmethod
    def one(cls, gr: Grassmannian) -> SchubertClass:
        return cls(gr, {(): 1})

    def zero_like(self) -> SchubertClass:
        return SchubertClass(self.gr)

    def one_like(self) -> SchubertClass:
        return SchubertClass.one(self.gr)

    def _check(self, other: SchubertClass) -> None:
        if self.gr != other.gr:
            raise InvalidInput("classes live on different Grassmannians")

    def __add__(self, other: SchubertClass) -> SchubertClass:
        self._check(other)
        out = dict(self.coeffs)
        for lam, v in other.coeffs.items():
            out[lam] = out.get(lam, 0) + v
        return SchubertClass(self.gr, out)

    def __neg__(self) -> SchubertClass:
        return SchubertClass(self.gr, {lam: -v for lam, v in self.coeffs.items()})

    def __sub__(self, other: SchubertClass) -> SchubertClass:
        return self + (-other)

    def scale(self, c: Number) -> SchubertClass:
        return SchubertClass(self.gr, {lam: c * v for lam, v in self.coeffs.items()})

    def __mul__(self, other: SchubertClass | Number) -> SchubertClass:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return lr_multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> SchubertClass:
        out = self.one_like()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchubertClass):
            return NotImplemented
        return self.gr == other.gr and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.gr, tuple(sorted(self.coeffs.items()))))

    def degree_part(self, deg: int) -> SchubertClass:
        return SchubertClass(self.gr, {lam: v for lam, v in self.coeffs.items() if sum(lam) == deg})

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for lam, v in sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            name = "1" if not lam else "s" + "".join(map(str, lam))
            terms.append(f"{v}*{name}")
        return " + ".join(terms)


def lr_multiply(x: SchubertClass, y: SchubertClass) -> SchubertClass:
    x._check(y)
    rows, cols = x.gr.k, x.gr.n - x.gr.k
    out: dict[Partition, Number] = {}
    for lam, a in x.coeffs.items():
        for mu, b in y.coeffs.items():
            for nu, c in lr_coefficients(lam, mu, rows, cols).items():
                out[nu] = out.get(nu, 0) + a * b * c
    return SchubertClass(x.gr, out)


def pieri_multiply(x: SchubertClass, s: int) -> SchubertClass:
    """Product with the special class sigma_s by the Pieri rule alone."""
    rows, cols = x.gr.k, x.gr.n - x.gr.k
    out: dict[Partition, Number] = {}
    for lam, a in x.coeffs.items():
        for nu in _horizontal_strips(lam, s, rows, cols):
            out[nu] = out.get(nu, 0) + a
    return SchubertClass(x.gr, out)


# ---------------------------------------------------------------- quadrics

Basis = tuple  # ("h", i) | ("a",) | ("b",) | ("l", j)


class QuadricClass:
    """Element of H^*(Q^{2m}, Q) with exact rational coefficients."""

    def __init__(self, m: int, coeffs: dict[Basis, Number] | None = None) -> None:
        if m < 2:
            raise InvalidInput(f"quadric Q^(2m) needs m >= 2, got {m}")
        self.m = m
        self.coeffs = _clean(dict(coeffs or {}))

    @classmethod
    def h_power(cls, m: int, i: int) -> QuadricClass:
        if i < 0:
            raise InvalidInput("negative power")
        if i < m:
            return cls(m, {("h", i): 1})
        if i == m:
            return cls(m, {("a",): 1, ("b",): 1})
        if i <= 2 * m:
            return cls(m, {("l", i): 2})
        return cls(m)

    @classmethod
    def from_h_poly(cls, m: int, coeffs: Sequence[Number]) -> QuadricClass:
        out = cls(m)
        for i, c in enumerate(coeffs):
            if c:
                out = out + cls.h_power(m, i).scale(c)
        return out

    @classmethod
    def a(cls, m: int) -> QuadricClass:
        return cls(m, {("a",): 1})

    @classmethod
    def b(cls, m: int) -> QuadricClass:
        return cls(m, {("b",): 1})

    @classmethod
    def point(cls, m: int) -> QuadricClass:
        return cls(m, {("l", 2 * m): 1})

    def zero_like(self) -> QuadricClass:
        return QuadricClass(self.m)

    def one_like(self) -> QuadricClass:
        return QuadricClass(self.m, {("h", 0): 1})

    def _check(self, other: QuadricClass) -> None:
        if self.m != other.m:
            raise InvalidInput("classes live on different quadrics")

    def __add__(self, other: QuadricClass) -> QuadricClass:
        self._check(other)
        out = dict(self.coeffs)
        for key, v in other.coeffs.items():
            out[key] = out.get(key, 0) + v
        return QuadricClass(self.m, out)

    def __neg__(self) -> QuadricClass:
        return self.scale(-1)

    def __sub__(self, other: QuadricClass) -> QuadricClass:
        return self + (-other)

    def scale(self, c: Number) -> QuadricClass:
        return QuadricClass(self.m, {key: c * v for key, v in self.coeffs.items()})

    def __mul__(self, other: QuadricClass | Number) -> QuadricClass:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out = QuadricClass(self.m)
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                out = out + _basis_product(self.m, k1, k2).scale(v1 * v2)
        return out

    __rmul__ = __mul__

    def __pow__(self, e: int) -> QuadricClass:
        out = self.one_like()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadricClass):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.m, tuple(sorted(self.coeffs.items()))))

    def degree_part(self, deg: int) -> QuadricClass:
        return QuadricClass(self.m, {key: v for key, v in self.coeffs.items() if _basis_degree(self.m, key) == deg})

    def h_coefficient(self, deg: int) -> Number:
        """Coefficient c with degree_part(deg) = c * h^deg; raises if not a multiple of h^deg."""
        part = self.degree_part(deg)
        target = QuadricClass.h_power(self.m, deg)
        if not target.coeffs:
            return 0
        key, base = next(iter(target.coeffs.items()))
        c = Fraction(part.coeffs.get(key, 0)) / base
        if part != target.scale(c):
            raise InvalidInput(f"degree {deg} part is not a multiple of h^{deg}")
        return int(c) if c.denominator == 1 else c

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        names = {"h": lambda k: f"h^{k[1]}", "a": lambda k: "a", "b": lambda k: "b", "l": lambda k: f"l{k[1]}"}
        return " + ".join(f"{v}*{names[k[0]](k)}" for k, v in sorted(self.coeffs.items(), key=lambda kv: _basis_degree(self.m, kv[0])))


def _basis_degree(m: int, key: Basis) -> int:
    if key[0] in ("h", "l"):
        return key[1]
    return m


def _basis_product(m: int, k1: Basis, k2: Basis) -> QuadricClass:
    d = _basis_degree(m, k1) + _basis_degree(m, k2)
    if d > 2 * m:
        return QuadricClass(m)
    if k1[0] == "h" and k2[0] == "h":
        return QuadricClass.h_power(m, d)
    if k1[0] == "h" or k2[0] == "h":
        hk, other = (k1, k2) if k1[0] == "h" else (k2, k1)
        if hk[1] == 0:
            return QuadricClass(m, {other: 1})
        # h.a = h.b = l_{m+1}, h.l_j = l_{j+1}
        return QuadricClass(m, {("l", d): 1})
    if k1[0] == "l" or k2[0] == "l":
        return QuadricClass(m)
    # both middle classes, degree 2m
    same = k1 == k2
    if (m % 2 == 0) == same:
        return QuadricClass.point(m)
    return QuadricClass(m)


Ring = Union[SchubertClass, QuadricClass]


def integrate(x: Ring) -> Number:
    if isinstance(x, SchubertClass):
        rows, cols = x.gr.k, x.gr.n - x.gr.k
        return x.coeffs.get((cols,) * rows, 0)
    return x.coeffs.get(("l", 2 * x.m), 0)


# ---------------------------------------------------------------- Chern classes


@dataclass(frozen=True)
class ChernPoly:
    """Total Chern class (c_0, c_1, ...) with c_i in some cohomology ring."""

    parts: tuple

    def __post_init__(self) -> None:
        if not self.parts or self.parts[0] != self.parts[0].one_like():
            raise InvalidInput("a total Chern class starts with 1")

    def __getitem__(self, i: int) -> Ring:
        if i < 0:
            return self.parts[0].zero_like()
        if i < len(self.parts):
            return self.parts[i]
        return self.parts[0].zero_like()

    def __len__(self) -> int:
        return len(self.parts)

    def __mul__(self, other: ChernPoly) -> ChernPoly:
        top = max(len(self), len(other))
        out = []
        for k in range(top):
            acc = self.parts[0].zero_like()
            for i in range(k + 1):
                acc = acc + self[i] * other[k - i]
            out.append(acc)
        return ChernPoly(tuple(out))

    def inverse(self, top: int | None = None) -> ChernPoly:
        """c(-E) up to degree ``top`` (default: the length of self minus one)."""
        top = len(self) - 1 if top is None else top
        out = [self.parts[0].one_like()]
        for k in range(1, top + 1):
            acc = self.parts[0].zero_like()
            for i in range(1, k + 1):
                acc = acc - self[i] * out[k - i]
            out.append(acc)
        return ChernPoly(tuple(out))


def _partitions_in_box(size: int, rows: int, cols: int) -> Iterator[Partition]:
    def rec(left: int, cap: int, rows_left: int) -> Iterator[list[int]]:
        if left == 0:
            yield []
            return
        if rows_left == 0:
            return
        for first in range(min(left, cap), 0, -1):
            for rest in rec(left - first, first, rows_left - 1):
                yield [first] + rest

    for p in rec(size, cols, rows):
        yield tuple(p)


def _ssyt_contents(shape: Partition, rank: int) -> list[tuple[int, ...]]:
    """Content vectors of semistandard tableaux of ``shape`` with entries 1..rank."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    out = []

    def rec(idx: int, filling: dict[tuple[int, int], int]) -> None:
        if idx == len(cells):
            content = [0] * rank
            for v in filling.values():
                content[v - 1] += 1
            out.append(tuple(content))
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, rank + 1):
            filling[(r, c)] = v
            rec(idx + 1, filling)
        filling.pop((r, c), None)

    rec(0, {})
    return out


Poly = dict[tuple[int, ...], int]


def _poly_mul(p: Poly, q: Poly, top: int) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        d1 = sum(e1)
        for e2, c2 in q.items():
            if d1 + sum(e2) > top:
                continue
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


@lru_cache(maxsize=None)
def _elementary(r: int, i: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """e_i(z_1..z_r) as a polynomial in r+1 variables (the last one unused)."""
    terms = []
    for picked in combinations(range(r), i):
        e = [0] * (r + 1)
        for j in picked:
            e[j] = 1
        terms.append((tuple(e), 1))
    return tuple(terms)


def _symmetric_reduce(poly: Poly, r: int) -> dict[tuple[int, ...], int]:
    """Write a polynomial symmetric in z_1..z_r (extra last variable H) via e_i and H.

    Returns keys (m_1, ..., m_r, h) standing for e_1^m_1 ... e_r^m_r H^h.
    """
    poly = dict(poly)
    out: dict[tuple[int, ...], int] = {}
    while poly:
        key = max(poly)
        coef = poly[key]
        alpha = key[:r]
        if any(a < b for a, b in zip(alpha, alpha[1:])):
            raise InvalidInput("polynomial is not symmetric in the roots")
        mult = tuple(alpha[i] - (alpha[i + 1] if i + 1 < r else 0) for i in range(r)) + (key[r],)
        out[mult] = out.get(mult, 0) + coef
        term: Poly = {tuple([0] * r + [key[r]]): coef}
        top = sum(key)
        for i, m in enumerate(mult[:r], start=1):
            for _ in range(m):
                term = _poly_mul(term, dict(_elementary(r, i)), top)
        for e, c in term.items():
            poly[e] = poly.get(e, 0) - c
            if not poly[e]:
                del poly[e]
    return out


def chern_schur_bundle(gr: Grassmannian, pattern: Sequence[int], side: str, twist: int = 0) -> ChernPoly:
    """Chern classes of Sigma^pattern(U^vee or Q^vee)(twist) by the splitting principle."""
    k, n = gr.k, gr.n
    if side == "sub_dual":
        r = k
        base = [SchubertClass.sigma(gr, *([1] * i)) for i in range(r + 1)]
    elif side == "quot_dual":
        r = n - k
        base = [SchubertClass.sigma(gr, i).scale((-1) ** i) for i in range(r + 1)]
    else:
        raise InvalidInput(f"side must be sub_dual or quot_dual, got {side!r}")
    shape = _norm(pattern)
    if len(shape) > r or any(a < b for a, b in zip(shape, shape[1:])):
        raise InvalidInput(f"pattern {tuple(pattern)} is not a partition with at most {r} parts")
    contents = _ssyt_contents(shape, r) if shape else [tuple([0] * r)]
    if len(contents) > 8:
        raise InvalidInput(f"bundle of rank {len(contents)} exceeds the supported rank 8")
    top = min(len(contents), gr.dim)
    total: Poly = {tuple([0] * (r + 1)): 1}
    for content in contents:
        factor: Poly = {tuple([0] * (r + 1)): 1}
        for j, cnt in enumerate(content):
            if cnt:
                e = [0] * (r + 1)
                e[j] = 1
                factor[tuple(e)] = cnt
        if twist:
            factor[tuple([0] * r + [1])] = twist
        total = _poly_mul(total, factor, top)
    reduced = _symmetric_reduce(total, r)
    h = SchubertClass.sigma(gr, 1)
    parts = [SchubertClass(gr) for _ in range(top + 1)]
    for key, coef in reduced.items():
        deg = sum((i + 1) * m for i, m in enumerate(key[:r])) + key[r]
        cls = SchubertClass.one(gr).scale(coef)
        for i, m in enumerate(key[:r], start=1):
            for _ in range(m):
                cls = cls * base[i]
        for _ in range(key[r]):
            cls = cls * h
        parts[deg] = parts[deg] + cls
    return ChernPoly(tuple(parts))


def _det(matrix: list[list[Ring]], zero: Ring) -> Ring:
    size = len(matrix)
    out = zero
    for perm in permutations(range(size)):
        inversions = sum(1 for i in range(size) for j in range(i + 1, size) if perm[i] > perm[j])
        term = zero.one_like()
        for i, j in enumerate(perm):
            term = term * matrix[i][j]
        out = out + (term if inversions % 2 == 0 else -term)
    return out


def porteous_class(c_virtual: ChernPoly, f: int, g_: int, r: int) -> Ring:
    """Class of the locus where a map F -> G of ranks f, g_ has rank <= r."""
    size = f - r
    shift = g_ - r
    if size < 0 or shift < 0:
        raise InvalidInput("target rank exceeds the bundle ranks")
    matrix = [[c_virtual[shift + j - i] for j in range(size)] for i in range(size)]
    zero = c_virtual.parts[0].zero_like()
    if size == 0:
        return zero.one_like()
    return _det(matrix, zero)


# ---------------------------------------------------------------- quadric Todd class and spinors


def _series_inverse(a: list[Fraction], top: int) -> list[Fraction]:
    out = [Fraction(1) / a[0]]
    for k in range(1, top + 1):
        acc = sum((a[i] * out[k - i] for i in range(1, min(k, len(a) - 1) + 1)), Fraction(0))
        out.append(-acc / a[0])
    return out


def _series_mul(a: Sequence[Fraction], b: Sequence[Fraction], top: int) -> list[Fraction]:
    out = [Fraction(0)] * (top + 1)
    for i, x in enumerate(a[: top + 1]):
        if x:
            for j, y in enumerate(b[: top + 1 - i]):
                out[i + j] += x * y
    return out


def todd_h_series(m: int) -> list[Fraction]:
    """Todd class of Q^{2m} as coefficients of h^0..h^{2m}."""
    top = 2 * m
    # (1 - e^{-x}) / x
    g = [Fraction((-1) ** k, factorial(k + 1)) for k in range(top + 1)]
    tdx = _series_inverse(g, top)
    out = [Fraction(1)] + [Fraction(0)] * top
    for _ in range(2 * m + 2):
        out = _series_mul(out, tdx, top)
    # divide by the Todd class of the normal bundle O(2): multiply by (1 - e^{-2x}) / (2x)
    g2 = [c * 2**k for k, c in enumerate(g)]
    return _series_mul(out, g2, top)


def todd_quadric(m: int) -> ChernPoly:
    if not 2 <= m <= 6:
        raise InvalidInput(f"Todd class supported for 2 <= m <= 6, got {m}")
    return ChernPoly(tuple(QuadricClass.h_power(m, i).scale(c) for i, c in enumerate(todd_h_series(m))))


def hrr_euler(m: int, ch: Sequence[Number], t: int = 0) -> Number:
    """chi of a class with Chern character sum ch_i h^i, twisted by O(t), on Q^{2m}."""
    top = 2 * m
    et = [Fraction(t) ** k / factorial(k) for k in range(top + 1)]
    series = _series_mul(_series_mul([Fraction(c) for c in ch], et, top), todd_h_series(m), top)
    total = integrate(QuadricClass.from_h_poly(m, series))
    return int(total) if Fraction(total).denominator == 1 else total


def _interpolate(points: list[tuple[int, int]]) -> list[Fraction]:
    """Coefficients of the polynomial through the points (Newton divided differences)."""
    xs = [Fraction(x) for x, _ in points]
    table = [Fraction(y) for _, y in points]
    coef = [table[0]]
    for level in range(1, len(points)):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(len(table) - 1)]
        coef.append(table[0])
    poly = [Fraction(0)] * len(points)
    basis = [Fraction(1)]
    for level, c in enumerate(coef):
        for i, b in enumerate(basis):
            poly[i] += c * b
        basis = [Fraction(0)] + basis
        for i in range(len(basis) - 1):
            basis[i] -= xs[level] * basis[i + 1]
    return poly


def _evaluate(poly: Sequence[Fraction], t: int) -> Fraction:
    return sum((c * t**k for k, c in enumerate(poly)), Fraction(0))


SPINOR_RANK = 8


def spinor_chern_via_hrr(chi: Callable[[int], int] | None = None) -> ChernPoly:
    """c_1, c_2, c_3 of the spinor bundle on Q^8, solved from HRR.

    chi(S(t)) is a degree-8 polynomial in t; its values at t = 0..8 fix it,
    and each coefficient is the integral of ch(S) td(Q) against a power of h.
    Unwinding this triangular system gives ch(S), whence c_1..c_3 by Newton's
    identities.  Further values of t are used as a consistency check.  The
    middle-degree (a, b) split of ch_4 never enters.
    """
    m = 4
    q = EvenQuadric(m)
    S = spinor(q)
    if chi is None:
        def chi(t: int) -> int:
            return euler_characteristic(S(t))
    top = 2 * m
    poly = _interpolate([(t, chi(t)) for t in range(top + 1)])
    for t in list(range(-top, 0)) + [top + 1, top + 2, top + 3]:
        if _evaluate(poly, t) != chi(t):
            raise InconsistentHRR(f"chi(S({t})) is off the degree-{top} interpolant")
    # coefficient of t^j is (2 / j!) * [ch.td]_{top - j}
    chtd = [Fraction(0)] * (top + 1)
    for j in range(top + 1):
        chtd[top - j] = poly[j] * factorial(j) / 2
    ch = _series_mul(chtd, _series_inverse(todd_h_series(m), top), top)
    if ch[0] != SPINOR_RANK:
        raise InconsistentHRR(f"rank from HRR is {ch[0]}, expected {SPINOR_RANK}")
    p = [factorial(k) * ch[k] for k in range(4)]
    e1 = p[1]
    e2 = (e1 * p[1] - p[2]) / 2
    e3 = (e2 * p[1] - e1 * p[2] + p[3]) / 3
    cs = [e1, e2, e3]
    if any(c.denominator != 1 for c in cs):
        raise InconsistentHRR(f"non-integral Chern classes {cs}")
    if e1 != -4:
        raise InconsistentHRR(f"c1 = {e1}h, but det S = O(-4) on Q^8")
    parts = [QuadricClass.h_power(m, 0)] + [QuadricClass.h_power(m, i + 1).scale(int(c)) for i, c in enumerate(cs)]
    return ChernPoly(tuple(parts))


def spinor_chern_coefficients(cp: ChernPoly | None = None) -> tuple[int, int, int]:
    cp = spinor_chern_via_hrr() if cp is None else cp
    return tuple(int(cp[i].h_coefficient(i)) for i in (1, 2, 3))  # type: ignore[return-value]


def load_spinor_chern(path: str | Path) -> tuple[int, int, int]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read Chern override {path}: {exc}") from None
    if not isinstance(data, dict) or any(not isinstance(data.get(k), int) for k in ("c1", "c2", "c3")):
        raise InvalidInput(f"{path} must hold integer fields c1, c2, c3")
    return data["c1"], data["c2"], data["c3"]


def check_spinor_override(path: str | Path) -> tuple[int, int, int]:
    """Compare an override file with the HRR values; mismatch is an inconsistency."""
    given = load_spinor_chern(path)
    derived = spinor_chern_coefficients()
    if given != derived:
        raise InconsistentHRR(f"override c1,c2,c3 = {given} disagrees with HRR {derived}")
    return derived


def spinor_chern_from_coefficients(c1: int, c2: int, c3: int) -> ChernPoly:
    m = 4
    parts = [QuadricClass.h_power(m, 0)] + [QuadricClass.h_power(m, i + 1).scale(c) for i, c in enumerate((c1, c2, c3))]
    return ChernPoly(tuple(parts))


# ---------------------------------------------------------------- the two degeneracy loci


def case_virtual_chern(case_name: str, spinor_cp: ChernPoly | None = None) -> tuple[ChernPoly, int, int, int, Ring]:
    """c(G - F), ranks and the hyperplane class for the genus 7 or genus 8 map."""
    name = case_name.upper()
    if name == "GENUS7":
        cS = spinor_chern_via_hrr() if spinor_cp is None else spinor_cp
        return cS.inverse(3), 8, 8, 6, QuadricClass.h_power(4, 1)
    if name == "GENUS8":
        gr = Grassmannian(2, 6)
        cM = chern_schur_bundle(gr, (1, 1), "quot_dual")
        return cM.inverse(), 6, 6, 4, SchubertClass.sigma(gr, 1)
    raise InvalidInput(f"unknown case {case_name!r}")


def porteous_degree(case_name: str, spinor_cp: ChernPoly | None = None) -> Number:
    """Degree of the corank-2 locus against the hyperplane class."""
    cv, f, g_, r, h = case_virtual_chern(case_name, spinor_cp)
    cls = porteous_class(cv, f, g_, r)
    return integrate(cls * h ** ((f - r) * (g_ - r)))


def degeneracy_c1(cF: ChernPoly, cG: ChernPoly) -> Ring:
    """c_1(G - F), the class of the hypersurface where the square map drops rank."""
    return cG[1] - cF[1]


def first_degeneracy_class(case_name: str) -> Ring:
    cv, *_ = case_virtual_chern(case_name)
    return cv[1]


# ---------------------------------------------------------------- degrees


def harris_tu_sigma_degree(g: int) -> int:
    if g < 6:
        raise InvalidInput(f"genus must be at least 6, got {g}")
    prod = Fraction(1)
    for k in range(3):
        prod *= Fraction(comb(2 * g - 5, g - 2 * k), comb(2 * g - 5, 2 * k))
    if prod.denominator != 1:
        raise NonIntegral(f"degree product for g={g} is {prod}")
    return int(prod)


def deg_y0(g: int) -> int:
    if g < 6:
        raise InvalidInput(f"genus must be at least 6, got {g}")
    return factorial(2 * g - 9) // factorial(g - 5)


def deg_y_top(g: int) -> int:
    if g < 6 or g % 2:
        raise InvalidInput(f"genus must be even and at least 6, got {g}")
    h = g // 2
    num = 12 * factorial(2 * g - 8)
    den = factorial(h - 2) * factorial(h - 1) * factorial(h) * factorial(h + 1)
    if num % den:
        raise NonIntegral(f"top stratum degree for g={g} is not integral")
    return num // den


def grassmannian_degree(k: int, n: int) -> int:
    gr = Grassmannian(k, n)
    if gr.dim > 24:
        raise InvalidInput(f"Gr({k},{n}) has dimension {gr.dim} > 24")
    cls = SchubertClass.one(gr)
    for _ in range(gr.dim):
        cls = pieri_multiply(cls, 1)
    return int(integrate(cls))


@dataclass(frozen=True)
class SigmaDecomposition:
    g: int
    total: int
    y0: int
    y_top: int | None
    residual: int


def sigma_decomposition(g: int) -> SigmaDecomposition:
    total = harris_tu_sigma_degree(g)
    y0 = deg_y0(g)
    y_top = deg_y_top(g) if g % 2 == 0 else None
    residual = total - y0 - (y_top or 0)
    if residual < 0:
        raise Inconsistency(f"negative residual {residual} for g={g}")
    return SigmaDecomposition(g, total, y0, y_top, residual)
