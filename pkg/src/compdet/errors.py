"""Exception taxonomy shared by the whole package.

Usage errors come from malformed requests (bad sizes, unknown names) and map
to exit code 2 in the CLI.  Domain errors mean an input is structurally valid
but outside an operation's mathematical domain.  Verification *failures* are
not exceptions: verifiers return a report with equal=False.
"""


class UsageError(ValueError):
    """Malformed request: bad argument combination, unknown name, bad size."""


class DomainError(ValueError):
    """Input outside the mathematical domain of the operation."""


class CapabilityError(RuntimeError):
    """Request exceeds a configured capability limit (e.g. oracle size cap)."""


class ParameterError(ValueError):
    """Inadmissible parameter values (degenerate sample point, bad (q, t))."""


class InexactDivisionError(ArithmeticError):
    """Exact polynomial division was required but left a remainder."""
