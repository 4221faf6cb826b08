"""Exception hierarchy shared by every module of the package."""


class CodeError(Exception):
    """Base class for domain errors raised by rrcodes."""


class CompositeP(CodeError, ValueError):
    pass


class PTooSmall(CodeError, ValueError):
    pass


class FieldOverflow(CodeError, OverflowError):
    pass


class DivisionByZero(CodeError, ZeroDivisionError):
    pass


class FieldMismatch(CodeError, ValueError):
    pass


class FiveDividesQ(CodeError, ValueError):
    pass


class ExponentOutOfRange(CodeError, ValueError):
    pass


class MissingLabel(CodeError, KeyError):
    pass


class TOutOfRange(CodeError, ValueError):
    pass


class LOutOfRange(CodeError, ValueError):
    pass


class ContextMismatch(CodeError, ValueError):
    pass


class ZeroComponent(CodeError, ValueError):
    pass


class InconsistentEnumerator(CodeError, ValueError):
    pass


class BudgetExceeded(CodeError, RuntimeError):
    pass


class ZeroCodeHasNoDistance(CodeError, ValueError):
    pass


class ToleranceTooLarge(CodeError, ValueError):
    pass


class NegativeK(CodeError, ValueError):
    pass


class InternalInconsistency(CodeError, AssertionError):
    """Two independent computations that must agree did not."""
