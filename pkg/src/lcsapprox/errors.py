"""Exception types raised by lcsapprox."""


class LcsApproxError(Exception):
    """Base class for all library errors."""


class RepeatedSymbol(LcsApproxError, ValueError):
    """A sequence that must be repetition-free contains a duplicate symbol."""


class UncoveredSymbol(LcsApproxError, ValueError):
    """A sequence contains a symbol that the total order does not rank."""


class EmptySequence(LcsApproxError, ValueError):
    """An operation that needs a nonempty live sequence got an empty one."""


class OutOfRange(LcsApproxError, IndexError):
    pass


class BudgetExceeded(LcsApproxError, MemoryError):
    """The exact DP table would exceed the configured cell budget."""


class TooLarge(LcsApproxError, ValueError):
    """Input too large for brute-force enumeration."""


class ParseError(LcsApproxError, ValueError):
    def __init__(self, path, lineno, message):
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = path
        self.lineno = lineno
