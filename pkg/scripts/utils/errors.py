"""
Exceptions for Braid Centralizer

Every library error derives from BraidError. Input problems are also
ValueErrors; hitting a configured bound is also a RuntimeError.
"""


class BraidError(Exception):
    """Base class for all library errors."""


class InvalidBraidError(BraidError, ValueError):
    """Malformed braid data or a violated precondition."""


class StrandMismatchError(InvalidBraidError):
    """Operands live in braid groups with different strand counts."""

    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__(f"Strand counts differ: B_{left} vs B_{right}")


class BraidParseError(InvalidBraidError):
    """A braid word could not be parsed."""

    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class OracleBoundError(BraidError, ValueError):
    """Exhaustive enumeration refused for too many strands."""

    def __init__(self, n, bound):
        self.n = n
        self.bound = bound
        super().__init__(
            f"Enumeration over simple elements of B_{n} refused (strand bound is {bound})"
        )


class CapExceededError(BraidError, RuntimeError):
    """A configured iteration or size cap was hit."""

    def __init__(self, cap_name, cap_value, detail=""):
        self.cap_name = cap_name
        self.cap_value = cap_value
        message = f"{cap_name} exceeded (cap={cap_value})"
        if detail:
            message += f": {detail}"
        super().__init__(message)


def check_same_strands(*elements):
    """
    Raise StrandMismatchError unless all elements share one strand count.

    Returns
    -------
    int
        The common strand count.
    """
    n = elements[0].n
    for other in elements[1:]:
        if other.n != n:
            raise StrandMismatchError(n, other.n)
    return n
