"""
Exception hierarchy for qtknots.

Every error raised on purpose by the library derives from QtKnotsError and
carries the process exit code the command-line front end reports for it.
"""

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_VERIFICATION_FAILED = 3
EXIT_ARITHMETIC_INCONSISTENCY = 4


class QtKnotsError(Exception):
    """Base class for all qtknots errors."""

    exit_code = 1


class InvalidInputError(QtKnotsError, ValueError):
    """Malformed or out-of-domain input (bad partition, non-coprime ray, parse failure...)."""

    exit_code = EXIT_INVALID_INPUT


class DegreeLimitError(InvalidInputError):
    """A computation would exceed the configured --max-degree guard."""

    def __init__(self, degree: int, limit: int, what: str = "computation"):
        super().__init__(f"{what} needs degree {degree}, above the --max-degree limit {limit}")
        self.degree = degree
        self.limit = limit


class ZeroDenominatorError(QtKnotsError, ZeroDivisionError):
    """Division by zero in the coefficient field, including zero denominators after substitution."""

    exit_code = EXIT_INVALID_INPUT


class VerificationError(QtKnotsError):
    """A named verification check did not hold."""

    exit_code = EXIT_VERIFICATION_FAILED


class ArithmeticInconsistencyError(QtKnotsError):
    """Internal results contradict each other; indicates an arithmetic bug."""

    exit_code = EXIT_ARITHMETIC_INCONSISTENCY
