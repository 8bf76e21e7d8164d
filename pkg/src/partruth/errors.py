"""Exception hierarchy shared by every module."""


class PartruthError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(PartruthError, ValueError):
    """Malformed polynomial text, statement file or construction script."""

    def __init__(self, message, position=None, line=None):
        self.position = position
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"position {position}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class RingMismatchError(PartruthError, ValueError):
    """Operands live in different polynomial rings."""


class ResourceLimitExceeded(PartruthError):
    """A basis computation ran past its time or size cap.

    ``step`` is filled in by the classifier with the pipeline step that was
    running when the cap fired.
    """

    def __init__(self, message, step=None):
        self.step = step
        super().__init__(message)


class TrivialIdealError(PartruthError, ValueError):
    """The ideal contains 1 where a proper ideal is required."""


class NotIndependentError(PartruthError, ValueError):
    """A variable set satisfies a nontrivial relation modulo the ideal."""


class NotZeroDimensionalError(PartruthError, ValueError):
    """Some main variable has no nonzero univariate eliminant."""


class ConstructionError(PartruthError, ValueError):
    """Invalid geometric construction (bad reference, unsupported combination)."""


class InvariantViolation(PartruthError, AssertionError):
    """An internal consistency check failed."""
