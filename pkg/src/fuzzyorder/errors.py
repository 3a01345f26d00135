"""Exception hierarchy shared by all modules."""


class FuzzyOrderError(Exception):
    pass


class IdempotentInput(FuzzyOrderError, ValueError):
    """An operation that needs a non-idempotent element received an idempotent one."""


class NoDeltaFound(FuzzyOrderError):
    """A delta search exhausted its resolution without meeting its postcondition."""


class TypeMismatch(FuzzyOrderError, ValueError):
    pass


class CategoryMismatch(FuzzyOrderError, ValueError):
    pass


class TnormMismatch(FuzzyOrderError, ValueError):
    pass


class UnboundedError(FuzzyOrderError, ValueError):
    pass


class PreconditionError(FuzzyOrderError, ValueError):
    pass


class UnknownObject(FuzzyOrderError, KeyError):
    pass


class NoType(FuzzyOrderError):
    """The self-hom values of a net do not order-converge."""


class ReconstructionFailed(FuzzyOrderError):
    pass


class InvalidInstance(FuzzyOrderError, ValueError):
    """Raised by loaders; carries the full validation report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
