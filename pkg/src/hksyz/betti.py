"""Graded Betti tables of section rings of K3^[2]-type fourfolds.

Cells are indexed ``(i, j)`` with ``i`` the homological degree (column) and
``j`` the row, so ``b_{i,j}`` counts syzygies of degree ``i + j``.  A cell is
Known with a value, Unknown, or NonzeroLowerBound (known to be nonzero).
Known zeros are never stored.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Iterable, Mapping

from .errors import InvalidInput, NonConvergence, UnknownFixture
from .hilbert import embedding_dimension, h0_power
from .report import CheckResult, ValidationReport

DIM_X = 4
MAX_ROW = 6


class CellKind(str, Enum):
    KNOWN = "known"
    UNKNOWN = "unknown"
    NONZERO = "nonzero"


@dataclass(frozen=True)
class Cell:
    kind: CellKind
    value: int = 0

    def __post_init__(self) -> None:
        if self.kind is CellKind.KNOWN and self.value < 0:
            raise InvalidInput(f"Betti numbers are nonnegative, got {self.value}")
        if self.kind is not CellKind.KNOWN and self.value:
            raise InvalidInput("only Known cells carry a value")

    @property
    def is_known(self) -> bool:
        return self.kind is CellKind.KNOWN

    def symbol(self) -> str:
        if self.kind is CellKind.UNKNOWN:
            return "?"
        if self.kind is CellKind.NONZERO:
            return "*"
        return str(self.value) if self.value else "."


def Known(value: int) -> Cell:
    return Cell(CellKind.KNOWN, value)


UNKNOWN = Cell(CellKind.UNKNOWN)
NONZERO = Cell(CellKind.NONZERO)
ZERO = Known(0)


class BettiTable:
    """Sparse Betti table of a fourfold in P^n."""

    def __init__(self, n: int, cells: Mapping[tuple[int, int], Cell] | None = None) -> None:
        self.n = n
        self.dim_X = DIM_X
        self._cells: dict[tuple[int, int], Cell] = {}
        for (i, j), cell in (cells or {}).items():
            if i < 0 or not 0 <= j <= MAX_ROW:
                raise InvalidInput(f"cell ({i},{j}) out of range")
            if cell != ZERO:
                self._cells[(i, j)] = cell

    @property
    def codim(self) -> int:
        return self.n - DIM_X

    @property
    def cells(self) -> dict[tuple[int, int], Cell]:
        return dict(self._cells)

    def __getitem__(self, key: tuple[int, int]) -> Cell:
        return self._cells.get(key, ZERO)

    def value(self, i: int, j: int) -> int:
        cell = self[i, j]
        if not cell.is_known:
            raise InvalidInput(f"b_{{{i},{j}}} is not known")
        return cell.value

    def with_cell(self, i: int, j: int, cell: Cell) -> BettiTable:
        cells = self.cells
        cells[(i, j)] = cell
        return BettiTable(self.n, cells)

    @property
    def width(self) -> int:
        return 1 + max((i for i, _ in self._cells), default=0)

    @property
    def height(self) -> int:
        return 1 + max([DIM_X + 1] + [j for _, j in self._cells])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.n == other.n and self._cells == other._cells

    def __repr__(self) -> str:
        return f"BettiTable(n={self.n}, cells={dict(sorted(self._cells.items()))})"


@dataclass(frozen=True)
class KPolynomial:
    d: int
    coefficients: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0


def _alternating_sum(d: int, n: int, k: int) -> int:
    return sum((-1) ** j * comb(n + 1, j) * h0_power(d, k - j) for j in range(min(k, n + 1) + 1))


def k_polynomial(d: int) -> KPolynomial:
    """Numerator of the Hilbert series of the section ring over (1-t)^(n+1)."""
    n = embedding_dimension(d)
    coeffs = tuple(_alternating_sum(d, n, k) for k in range(n + 2))
    # h differs from a polynomial only at e = 0, so the numerator has degree <= n+1
    for k in range(n + 2, n + 7):
        if _alternating_sum(d, n, k) != 0:
            raise NonConvergence(f"K-polynomial does not terminate at degree {n + 1}")
    return KPolynomial(d, coeffs)


def _dual(codim: int, i: int, j: int) -> tuple[int, int]:
    return codim - i, DIM_X + 1 - j


def _greedy(c: KPolynomial, n: int, seeds: Mapping[tuple[int, int], Cell]) -> dict[tuple[int, int], Cell]:
    cells = dict(seeds)
    cursor = 1
    for k in range(1, n + 2):
        placed = [(i, k - i) for i in range(k + 1) if (i, k - i) in cells]
        if any(not cells[p].is_known for p in placed):
            continue
        rem = c[k] - sum((-1) ** i * cells[(i, j)].value for i, j in placed)
        if rem == 0:
            continue
        parity = 0 if rem > 0 else 1
        slot = None
        for j in range(cursor, 4):
            i = k - j
            if i >= 0 and i % 2 == parity:
                slot = (i, j)
                break
        if slot is None or slot in cells:
            for j in range(1, 4):
                if k - j >= 0 and (k - j, j) not in cells:
                    cells[(k - j, j)] = UNKNOWN
            continue
        cells[slot] = Known(abs(rem))
        cursor = slot[1]
    return cells


def expected_betti(d: int) -> BettiTable:
    """Theoretical Betti table: fewest syzygies compatible with the Hilbert function.

    Row 0 and its dual are fixed, the middle rows are filled greedily one
    antidiagonal at a time, and duality images of rows 0-1 are pushed to
    rows 4-5 until nothing changes.  Antidiagonals that do not fit a single
    slot are marked Unknown instead of guessed.
    """
    c = k_polynomial(d)
    n = embedding_dimension(d)
    codim = n - DIM_X
    seeds = {(0, 0): Known(1), _dual(codim, 0, 0): Known(1)}
    for _ in range(5):
        cells = _greedy(c, n, seeds)
        images = dict(seeds)
        for (i, j), cell in cells.items():
            if j <= 1:
                di, dj = _dual(codim, i, j)
                if di >= 0:
                    images[(di, dj)] = cell
        if images == seeds:
            return BettiTable(n, cells)
        seeds = images
    raise NonConvergence(f"duality fixpoint not reached for d = {d}")


def validate_table(t: BettiTable, d: int) -> ValidationReport:
    n = embedding_dimension(d)
    if t.n != n or t.dim_X != DIM_X:
        raise InvalidInput(f"table lives in P^{t.n}, expected P^{n}")
    c = k_polynomial(d)
    cells = t.cells

    bad_diagonals = []
    top = max([n + 1] + [i + j for i, j in cells])
    for k in range(top + 1):
        diag = [(i, k - i) for i in range(k + 1) if k - i <= MAX_ROW]
        if any(not t[p].is_known for p in diag):
            continue
        total = sum((-1) ** i * t[i, j].value for i, j in diag)
        if total != c[k]:
            bad_diagonals.append(k)

    bad_duality = []
    for j in range(DIM_X, MAX_ROW + 1):
        for i in range(max(t.width, t.codim + 1)):
            di, dj = _dual(t.codim, i, j)
            here = t[i, j]
            there = t[di, dj] if di >= 0 else ZERO
            if here.is_known and there.is_known and here.value != there.value:
                bad_duality.append((i, j))

    negative = [p for p, cell in cells.items() if cell.is_known and cell.value < 0]
    return ValidationReport((
        CheckResult("antidiagonals", not bad_diagonals, tuple(bad_diagonals)),
        CheckResult("duality", not bad_duality, tuple(bad_duality)),
        CheckResult("nonnegative", not negative, tuple(negative)),
    ))


def _rows(n: int, rows: Mapping[int, Iterable[tuple[int, Cell | int]]]) -> BettiTable:
    cells = {}
    for j, entries in rows.items():
        for i, cell in entries:
            cells[(i, j)] = Known(cell) if isinstance(cell, int) else cell
    return BettiTable(n, cells)


def _s2_g7() -> BettiTable:
    return _rows(9, {
        0: [(0, 1)],
        1: [(1, 1)],
        2: [(0, 1), (1, 10)],
        3: list(zip(range(1, 8), [20, 126, 190, 130, 46, 10, 1])),
        4: [(4, 1)],
        5: [(5, 1)],
    })


def _def_g7() -> BettiTable:
    return _rows(9, {
        0: [(0, 1)],
        2: [(1, 10)],
        3: list(zip(range(1, 8), [20, 126, 190, 130, 45, 10, 1])),
        5: [(5, 1)],
    })


def _s2_g8_partial() -> BettiTable:
    return _rows(14, {
        0: [(0, 1)],
        1: [(1, 15), (2, 35), (3, 21)],
        2: [(1, 55), (2, 336)] + [(i, NONZERO) for i in (3, 4, 5)] + [(i, UNKNOWN) for i in range(6, 14)],
        3: [(2, UNKNOWN), (3, UNKNOWN)] + [(i, NONZERO) for i in range(4, 13)] + [(13, UNKNOWN)],
        4: [(7, 21), (8, 35), (9, 15)],
        5: [(10, 1)],
    })


FIXTURES = {
    "S2_G7": (_s2_g7, 2),
    "DEF_G7": (_def_g7, 2),
    "S2_G8_PARTIAL": (_s2_g8_partial, 3),
}


def fixture(name: str) -> BettiTable:
    """Reference diagrams: the Hilbert square in genus 7, its general deformation, genus 8."""
    try:
        build, _ = FIXTURES[name.upper()]
    except KeyError:
        raise UnknownFixture(f"no fixture named {name!r}; choose from {', '.join(FIXTURES)}") from None
    return build()


# long-form name kept for interface compatibility
paper_fixture = fixture


def fixture_square(name: str) -> int:
    """The value d (square 2d) a fixture belongs to."""
    try:
        return FIXTURES[name.upper()][1]
    except KeyError:
        raise UnknownFixture(f"no fixture named {name!r}") from None


def _cell_json(i: int, j: int, cell: Cell) -> dict:
    out: dict = {"i": i, "j": j, "kind": cell.kind.value}
    if cell.is_known:
        out["value"] = cell.value
    return out


def table_to_json(t: BettiTable) -> str:
    cells = [_cell_json(i, j, t[i, j]) for i, j in sorted(t.cells, key=lambda p: (p[1], p[0]))]
    payload = {"dim": t.dim_X, "n": t.n, "codim": t.codim, "cells": cells}
    return json.dumps(payload, separators=(",", ":"))


def table_from_json(text: str) -> BettiTable:
    payload = json.loads(text)
    cells = {}
    for entry in payload["cells"]:
        kind = CellKind(entry["kind"])
        cells[(entry["i"], entry["j"])] = Cell(kind, entry.get("value", 0))
    return BettiTable(payload["n"], cells)


TEXT_FORMATS = ("text", "paper_text")


def render_table(t: BettiTable, fmt: str = "text") -> str:
    """Render as the aligned grid ("text"), compact json, or csv of nonzero cells."""
    if fmt == "json":
        return table_to_json(t)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["i", "j", "kind", "value"])
        for i, j in sorted(t.cells, key=lambda p: (p[1], p[0])):
            cell = t[i, j]
            writer.writerow([i, j, cell.kind.value, cell.value if cell.is_known else ""])
        return buf.getvalue().rstrip("\n")
    if fmt not in TEXT_FORMATS:
        raise InvalidInput(f"unknown table format {fmt!r}")

    label = "b_{i,j}"
    columns = []
    for i in range(t.width):
        entries = [str(i)] + [t[i, j].symbol() for j in range(t.height)]
        width = max(len(e) for e in entries)
        columns.append([e.rjust(width) for e in entries])
    lines = []
    for r in range(t.height + 1):
        head = label if r == 0 else str(r - 1).rjust(len(label))
        lines.append(" ".join([head] + [col[r] for col in columns]).rstrip())
    lines.insert(1, "-" * len(lines[0]))
    return "\n".join(lines)
