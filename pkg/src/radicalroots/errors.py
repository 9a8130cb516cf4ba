"""Error taxonomy shared by every module.

Degenerate inputs raise; a non-converged oracle run does not (it is a
result flag, not an exception). Each error exposes a stable `code`
string that verification records embed verbatim.
"""


class SolverError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


class NonFiniteInput(SolverError):
    """A NaN or infinity reached an operation that requires finite input."""


class DegenerateLeading(SolverError):
    """Leading coefficient too small to normalize against."""


class DegenerateResolvent(SolverError):
    """Every resolvent-cubic root is numerically zero."""


class DegenerateReduction(SolverError):
    """A quintic reduction denominator vanished.

    `reason` is one of "d_zero", "e_c2_zero", "d_bc_zero".
    """

    def __init__(self, reason: str, message: str = ""):
        self.reason = reason
        super().__init__(message or reason)

    @property
    def code(self) -> str:
        return f"DegenerateReduction({self.reason})"


class Gamma3Zero(SolverError):
    """The selected quartic-coupling value is numerically zero (t2 pipeline)."""


class Y3Zero(SolverError):
    """The selected quartic-coupling value is numerically zero (t3 pipeline)."""


class FifthRootUndefined(SolverError):
    """The product of the first four claimed roots is numerically zero."""
