"""Exception hierarchy.

``ValidationError`` subclasses describe malformed input (CLI exit code 2);
``MathFailure`` subclasses describe a well-formed input that fails a
mathematical precondition or check (CLI exit code 1).
"""


class QuiddityError(Exception):
    """Root of everything this package raises on purpose."""


class ValidationError(QuiddityError, ValueError):
    pass


class MathFailure(QuiddityError, ArithmeticError):
    pass


class OrderMismatch(ValidationError):
    pass


class IndexOutOfRange(ValidationError, IndexError):
    pass


class BoundExceeded(ValidationError):
    pass


class SingularMatrix(MathFailure):
    pass


class NonCommuting(MathFailure):
    pass


class NotATriangulationQuiddity(MathFailure):
    pass


class NotQuiddity(MathFailure):
    """Monodromy is not the one an operation requires."""


class OutsideDomain(MathFailure):
    pass


class SingularEntry(MathFailure):
    pass


class RuleViolation(MathFailure):
    pass


class NotJointEigenvector(MathFailure):
    pass


class NonCommutingEntries(MathFailure):
    pass
