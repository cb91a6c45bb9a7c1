"""Slow, independent reference computations used to certify the fast paths."""

from __future__ import annotations

from collections import deque
from itertools import permutations
from math import factorial, prod

from .bwb import Grassmannian
from .intersect import SchubertClass, pieri_multiply
from .weyl import Regular, Singular, StraightenResult, TypeD, WeightVector, rho


def _type_d_generators(n: int):
    def swap(i: int):
        return lambda v: v[:i] + (v[i + 1], v[i]) + v[i + 2:]

    gens = [swap(i) for i in range(n - 1)]
    if n >= 2:
        gens.append(lambda v: v[:-2] + (-v[-1], -v[-2]))
    return gens


def weyl_group_order_d(n: int) -> int:
    return 2 ** (n - 1) * factorial(n)


def bfs_straighten_d(lam: WeightVector) -> StraightenResult:
    """Walk the whole dotted orbit of lam; singular iff the orbit is not free."""
    assert isinstance(lam.system, TypeD)
    n = lam.system.n
    r = rho(lam.system)
    start = (lam + r).doubled
    dist = {start: 0}
    queue = deque([start])
    gens = _type_d_generators(n)
    while queue:
        v = queue.popleft()
        for s in gens:
            w = s(v)
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    if len(dist) < weyl_group_order_d(n):
        return Singular()
    for v, d in dist.items():
        if all(a > b for a, b in zip(v[:-2], v[1:-1])) and v[-2] > abs(v[-1]):
            return Regular(d, WeightVector(lam.system, v) - r)
    raise AssertionError("free orbit without a dominant point")


def hook_length_rectangle(rows: int, cols: int) -> int:
    """Standard Young tableaux of a rows x cols rectangle."""
    hooks = prod((rows - i) + (cols - j) - 1 for i in range(rows) for j in range(cols))
    return factorial(rows * cols) // hooks


def pieri_chain_multiply(x: SchubertClass, y: SchubertClass) -> SchubertClass:
    """x * y with x expanded by Jacobi-Trudi and every product done by Pieri."""
    gr = x.gr
    out = SchubertClass(gr)
    for lam, coeff in x.coeffs.items():
        size = len(lam)
        for perm in permutations(range(size)):
            sign = (-1) ** sum(1 for i in range(size) for j in range(i + 1, size) if perm[i] > perm[j])
            parts = [lam[i] + perm[i] - i for i in range(size)]
            term = y
            for a in parts:
                if a < 0:
                    term = SchubertClass(gr)
                    break
                if a:
                    term = pieri_multiply(term, a)
            out = out + term.scale(sign * coeff)
    return out
