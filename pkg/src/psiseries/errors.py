"""Shared exception types.

The CLI maps these onto exit codes: malformed input (GraphFormatError,
KernelFormatError, ModeMismatchError, ValueError) exits 2, numerical
failures (NumericalError) exit 3.
"""


class ModeMismatchError(ValueError):
    """Raised when rational- and float-mode series meet in one operation."""


class GraphFormatError(ValueError):
    """Raised by the graph text parser on loops, duplicates, or bad syntax."""


class KernelFormatError(ValueError):
    """Raised on invalid kernel JSON or step-kernel validation failures."""


class NumericalError(RuntimeError):
    """Raised when an iterative numerical method fails to converge."""
