"""Exception hierarchy shared by all modules."""


class CoxshellError(Exception):
    """Base class; the CLI maps these to exit status 2."""


class InvalidMatrix(CoxshellError):
    pass


class SystemMismatch(CoxshellError):
    pass


class NonTerminating(CoxshellError):
    pass


class NotTypeA(CoxshellError):
    pass


class NotComparable(CoxshellError):
    pass


class SizeMismatch(CoxshellError):
    pass


class PreconditionFailed(CoxshellError):
    pass


class TooMany(CoxshellError):
    pass


class TooLarge(CoxshellError):
    pass


class NotBijective(CoxshellError):
    pass


class NotLinearExtension(CoxshellError):
    pass


class InvalidComplex(CoxshellError):
    pass


class UnsupportedOrder(CoxshellError, ValueError):
    pass
