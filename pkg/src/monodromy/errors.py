"""Exception hierarchy."""


class MonodromyError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(MonodromyError, ZeroDivisionError):
    pass


class FieldMismatch(MonodromyError, TypeError):
    pass


class SignatureMismatch(MonodromyError, ValueError):
    pass


class NotAnAlgebra(MonodromyError, TypeError):
    pass


class NotInvertible(MonodromyError, ArithmeticError):
    pass


class MalformedPresentation(MonodromyError, ValueError):
    def __init__(self, message, locus=None):
        super().__init__(message if locus is None else f"{locus}: {message}")
        self.locus = locus


class VerificationFailure(MonodromyError):
    """An identity that should hold exactly does not.

    ``witness`` carries the first failing basis tuple and both sides' values.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAGeneratingMatrix(VerificationFailure):
    pass


class NotQuasitriangular(VerificationFailure):
    pass


class NotAModuleAction(VerificationFailure):
    pass


class BadExtension(VerificationFailure):
    pass


class InvariantViolation(VerificationFailure):
    pass


class ConventionError(VerificationFailure):
    pass


class NotApplicable(MonodromyError):
    pass


class BudgetExceeded(MonodromyError):
    pass
