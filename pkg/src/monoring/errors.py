"""Exception hierarchy. Everything a caller can trigger with bad input derives
from :class:`MonoringError`; internal consistency failures stay AssertionError."""


class MonoringError(ValueError):
    pass


class ParseError(MonoringError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DegreeTooLow(MonoringError):
    pass


class EmptyAmbient(MonoringError):
    pass


class CapExceeded(MonoringError):
    def __init__(self, what, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class NotSquareFree(MonoringError):
    pass


class NotTaylorMinimal(MonoringError):
    pass


class NotAnEquivalence(MonoringError):
    def __init__(self, reason, witness):
        self.witness = witness
        super().__init__(f"{reason}: {witness!r}")


class ConstantTermNotOne(MonoringError):
    pass


class UnmappedMonomial(MonoringError):
    pass


class BoundMismatch(MonoringError):
    pass
