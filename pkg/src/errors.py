"""Exception types callers need to tell apart from plain input errors."""


class RingMismatchError(ValueError):
    """Operands live over different coefficient rings."""


class StepBudgetExceeded(RuntimeError):
    """The word-problem rewrite cap was hit before a verdict was reached."""

    def __init__(self, steps: int, length: int):
        super().__init__(
            f"handle reduction exceeded {steps} rewrites "
            f"(current word length {length})"
        )
        self.steps = steps
        self.length = length


class RotationError(ValueError):
    """No rotation of a positive x,y-word starts with y, ends with x and stays reduced."""


class CertificateError(RuntimeError):
    """Internal inconsistency while building or re-checking a certificate."""

    def __init__(self, message: str, dump: str = ""):
        super().__init__(message)
        self.dump = dump
