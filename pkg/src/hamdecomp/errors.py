"""Exception types shared across the package."""


class HamdecompError(Exception):
    """Base class for all package-specific errors."""


class InvalidCycleError(HamdecompError, ValueError):
    """A vertex sequence is not a Hamiltonian cycle (bad range, repeats, n < 3)."""


class MismatchedInstancesError(HamdecompError, ValueError):
    """Two objects that must share n and mode do not."""


class AlreadyFixedError(HamdecompError, RuntimeError):
    """An edge was fixed twice without an undo in between; a caller bug, not a search failure."""


class InvalidMarkError(HamdecompError, ValueError):
    """An undo mark lies outside the current trail."""


class NotCompleteError(HamdecompError, RuntimeError):
    """A decomposition was requested from a state that is not two complete cycles."""


class TooLargeError(HamdecompError, ValueError):
    """Exhaustive enumeration was requested beyond its size guard."""


class ParseError(HamdecompError, ValueError):
    """Bad instance or certificate text. ``line`` is 1-based, 0 if unknown."""

    def __init__(self, message, line=0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


class InstanceSyntaxError(ParseError):
    """Malformed tokens or wrong item counts."""


class InstanceSemanticError(ParseError):
    """Well-formed text that violates instance semantics (not a permutation, n < 3)."""
