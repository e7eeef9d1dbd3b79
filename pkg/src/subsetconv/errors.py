"""Exception types shared across the package.

The CLI maps these onto exit codes: usage problems exit 1, input format
problems exit 2, infeasible solver instances exit 3, and guard or
overflow conditions exit 4.
"""


class SubsetConvError(Exception):
    """Base class for all library-specific errors."""


class RingOverflowError(SubsetConvError, OverflowError):
    """A checked machine-word operation left the 64-bit signed range."""


class InexactDivisionError(SubsetConvError, ArithmeticError):
    """An inverse transform required a division that was not exact."""


class GuardError(SubsetConvError):
    """An input exceeded a documented size cap (n, m, or edge-count guard)."""


class FormatError(SubsetConvError):
    """A text input file violated its documented format."""


class InfeasibleError(SubsetConvError):
    """A solver instance has no feasible solution."""
