"""Exception hierarchy for the surgery toolkit."""


class SurgeryError(Exception):
    """Base class for all errors raised by the toolkit.

    Each subclass carries the process exit code the CLI maps it to.
    """
    exit_code = 2


class ArithmeticDomainError(SurgeryError, ValueError):
    """Raised when infinity is passed where a finite value is required."""
    pass


class ParameterError(SurgeryError, ValueError):
    """Raised when knot-family parameters violate a standing assumption."""
    pass


class SeifertHalfError(SurgeryError, ValueError):
    """Raised when a Seifert half would have an exceptional index <= 1."""
    pass


class SurgeryMismatchError(SurgeryError, ValueError):
    """Raised when two positions do not belong to the same surgery."""
    pass


class UsageError(SurgeryError):
    """Raised when command-line input cannot be parsed."""
    pass


class ReportWriteError(SurgeryError):
    """Raised when a report cannot be written to its destination."""
    exit_code = 1
