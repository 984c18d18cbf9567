class DomainError(ValueError):
    """Argument outside an operation's domain."""


class ConvergenceError(RuntimeError):
    pass


class WindowError(DomainError):
    """Gram point or window outside the range where frozen coefficients apply."""


class ToleranceError(RuntimeError):
    def __init__(self, msg, value, achieved):
        super().__init__(f"{msg} (best value {value!r}, achieved error {achieved:.3g})")
        self.value = value
        self.achieved = achieved


class ScanExhaustedError(RuntimeError):
    pass
