"""Exception hierarchy shared by all modules."""


class KicatError(Exception):
    """Base class for every error raised by the library."""


class SignatureError(KicatError):
    pass


class DuplicateName(SignatureError):
    pass


class ZeroArity(SignatureError):
    pass


class CapExceeded(SignatureError):
    """Too many test symbols: the atom set would be too large."""


AtomCapExceeded = CapExceeded


class TermSyntaxError(KicatError):
    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"line {line}, col {col}: {message}"
        super().__init__(message)


class UnknownIdentifier(TermSyntaxError):
    pass


class TypeMismatch(KicatError):
    pass


class NotATest(KicatError):
    pass


class NotTame(KicatError):
    pass


class IndexOutOfArity(KicatError):
    pass


class BudgetExceeded(KicatError):
    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ClosureBudgetExceeded(BudgetExceeded):
    pass


class UnsatisfiableRequest(KicatError):
    pass
