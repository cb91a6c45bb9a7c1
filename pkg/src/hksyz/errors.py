"""Exception hierarchy.

Two families: ``InvalidInput`` for requests outside an operation's domain
(the CLI maps these to exit code 2) and ``Inconsistency`` for a computed
identity that fails (exit code 3).
"""


class ComputationError(Exception):
    """Base class for all errors raised by the package."""

    code = "error"


class InvalidInput(ComputationError, ValueError):
    code = "invalid_input"


class Inconsistency(ComputationError, ArithmeticError):
    code = "inconsistency"


class NonexistentModuli(InvalidInput):
    code = "nonexistent_moduli"


class InvalidDivisibility(InvalidInput):
    code = "invalid_divisibility"


class StrataBound(InvalidInput):
    code = "strata_bound"


class OddSquare(InvalidInput):
    code = "odd_square"


class NotDominant(InvalidInput):
    code = "not_dominant"


class UnknownFixture(InvalidInput):
    code = "unknown_fixture"


class NonConvergence(Inconsistency):
    code = "non_convergence"


class NotDegenerate(Inconsistency):
    """The spectral sequence bookkeeping cannot certify the answer."""

    code = "not_degenerate"


class NonIntegral(Inconsistency):
    code = "non_integral"


class InconsistentHRR(Inconsistency):
    code = "inconsistent_hrr"
