"""Exception types shared across the package."""


class ArgumentError(ValueError):
    """Invalid argument (negative index, bad dimension, out-of-range parameter)."""


class ContractViolation(ValueError):
    """Input breaks a documented precondition, e.g. a non-Hermitian matrix passed to eigh."""


class NumericalError(RuntimeError):
    """A numerical procedure failed or could not certify its result."""


class ConvergenceError(NumericalError):
    """Truncation certification failed.

    ``level`` is the index of the first level that moved by more than the
    tolerance when the Fock truncation was doubled.
    """

    def __init__(self, message, level=None):
        super().__init__(message)
        self.level = level
