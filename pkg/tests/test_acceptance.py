"""Acceptance criteria, one PASS/FAIL line each.

The lines appear in the pytest terminal summary and when the file is run
as a script.

Criterion 10 covers statements outside desk-scale computation and is
reported as not reproducible; its numerical consequences are criteria 2, 3
and 6.
"""

from __future__ import annotations

from collections import defaultdict

import pytest

from hksyz.selftest import Check, battery

CRITERIA = {
    1: "Hilbert and ideal dimensions",
    2: "generator counts from the GN resolution",
    3: "cross-module ideal identities",
    4: "BWB fixture battery",
    5: "Weyl straightening vs orbit BFS",
    6: "Betti diagrams and validation",
    7: "degree formulas and Porteous degrees",
    8: "spinor Chern classes from HRR",
    9: "lattice catalog over 6 <= g <= 20",
}


# read by the terminal summary hook in conftest.py
LINES: list[str] = []
NOT_REPRODUCIBLE = "SKIP criterion 10: very-ampleness, strange duality and true minimal resolutions are not reproducible"


def report_lines(criterion: int, checks: list[Check]) -> list[str]:
    failed = [c for c in checks if not c.passed]
    status = "PASS" if checks and not failed else "FAIL"
    lines = [f"{status} criterion {criterion}: {CRITERIA[criterion]} ({len(checks) - len(failed)}/{len(checks)} checks)"]
    lines += [f"    {c.name}: expected {c.expected!r}, got {c.got!r}" for c in failed]
    return lines


@pytest.fixture(scope="module")
def grouped() -> dict[int, list[Check]]:
    out: dict[int, list[Check]] = defaultdict(list)
    for check in battery():
        out[check.criterion].append(check)
    return out


@pytest.mark.parametrize("criterion", sorted(CRITERIA))
def test_criterion(criterion: int, grouped: dict[int, list[Check]]) -> None:
    checks = grouped[criterion]
    failed = [c for c in checks if not c.passed]
    for line in report_lines(criterion, checks):
        print(line)
        LINES.append(line)
    assert checks, f"no checks registered for criterion {criterion}"
    assert not failed


def test_criterion_10_not_reproducible() -> None:
    print(NOT_REPRODUCIBLE)
    LINES.append(NOT_REPRODUCIBLE)
    pytest.skip("not reproducible by exact desk-scale computation")


if __name__ == "__main__":
    by_criterion: dict[int, list[Check]] = defaultdict(list)
    for check in battery():
        by_criterion[check.criterion].append(check)
    for k in sorted(CRITERIA):
        print("\n".join(report_lines(k, by_criterion[k])))
    print(NOT_REPRODUCIBLE)
