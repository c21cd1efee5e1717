"""
Simple Elements of the Braid Group

Permutation braids (the positive divisors of the half twist Δ), the prefix
lattice they form, complements and the inner automorphism τ.

A simple element of B_n is stored as its permutation table ``perm``: a tuple of
length n where ``perm[i]`` is the final position of the strand that starts at
position i. Positions are 0-based, generator indices are 1-based (σ_1 swaps
positions 0 and 1). Words act left to right, so the table of the product a·b
is ``b[a[i]]``. With this convention Δ has the table ``i -> n-1-i`` and its
canonical word in B_3 is [1, 2, 1].
"""

import functools
import itertools
import logging
from dataclasses import dataclass

from .errors import InvalidBraidError, OracleBoundError, check_same_strands

logger = logging.getLogger(__name__)

# Exhaustive enumeration over all n! simple elements is refused above this
ORACLE_MAX_STRANDS = 8


@dataclass(frozen=True, order=True)
class SimpleElement:
    """A permutation braid, identified by its permutation table."""

    perm: tuple

    def __post_init__(self):
        perm = tuple(int(v) for v in self.perm)
        n = len(perm)
        if n < 2:
            raise InvalidBraidError(f"A braid group needs n >= 2 strands, got {n}")
        if len(set(perm)) != n or min(perm) != 0 or max(perm) != n - 1:
            raise InvalidBraidError(f"Not a permutation of 0..{n - 1}: {perm}")
        object.__setattr__(self, "perm", perm)

    @property
    def n(self):
        return len(self.perm)

    @property
    def is_identity(self):
        return all(v == i for i, v in enumerate(self.perm))

    @property
    def is_delta(self):
        n = self.n
        return all(v == n - 1 - i for i, v in enumerate(self.perm))

    @property
    def length(self):
        """Number of crossings, i.e. the length of any positive word for it."""
        return _length(self.perm)

    def __repr__(self):
        if self.is_identity:
            return f"SimpleElement(n={self.n}, 1)"
        return f"SimpleElement(n={self.n}, {simple_word(self)})"


@dataclass(frozen=True)
class GeneratorLetter:
    """An Artin generator σ_index (sign +1) or its inverse (sign -1)."""

    index: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InvalidBraidError(f"Letter sign must be +1 or -1, got {self.sign}")
        if self.index < 1:
            raise InvalidBraidError(f"Generator index must be >= 1, got {self.index}")

    @classmethod
    def from_int(cls, value):
        """Build a letter from a signed index (e.g. -2 is σ_2⁻¹)."""
        value = int(value)
        if value == 0:
            raise InvalidBraidError("Generator index 0 does not exist")
        return cls(abs(value), 1 if value > 0 else -1)

    @property
    def signed(self):
        return self.index * self.sign

    def check(self, n):
        if self.index > n - 1:
            raise InvalidBraidError(
                f"Generator σ_{self.index} does not exist in B_{n}"
            )


def as_letter(letter):
    """Accept a GeneratorLetter or a signed integer."""
    if isinstance(letter, GeneratorLetter):
        return letter
    return GeneratorLetter.from_int(letter)


# ---------------------------------------------------------------------------
# Permutation-table arithmetic (cached, shared by the public functions below)
# ---------------------------------------------------------------------------

def _compose(a, b):
    return tuple(b[i] for i in a)


def _inverse(a):
    inv = [0] * len(a)
    for i, v in enumerate(a):
        inv[v] = i
    return tuple(inv)


def _delta_perm(n):
    return tuple(range(n - 1, -1, -1))


def _length(a):
    n = len(a)
    return sum(1 for i in range(n) for j in range(i + 1, n) if a[i] > a[j])


def _starting(a):
    return frozenset(k for k in range(1, len(a)) if a[k - 1] > a[k])


@functools.lru_cache(maxsize=1 << 16)
def _meet_perms(a, b):
    # Grow a common prefix u one atom at a time; a and b hold u⁻¹s and u⁻¹t.
    a, b = list(a), list(b)
    u_inv = list(range(len(a)))
    grown = True
    while grown:
        grown = False
        for k in range(1, len(a)):
            if a[k - 1] > a[k] and b[k - 1] > b[k]:
                a[k - 1], a[k] = a[k], a[k - 1]
                b[k - 1], b[k] = b[k], b[k - 1]
                u_inv[k - 1], u_inv[k] = u_inv[k], u_inv[k - 1]
                grown = True
    return _inverse(u_inv)


@functools.lru_cache(maxsize=1 << 16)
def _join_perms(a, b):
    # s ≼ j iff ∂(j) is a right divisor of ∂(s); right meets come from
    # left meets through word reversal, which inverts the permutation.
    delta = _delta_perm(len(a))
    ra = _compose(_inverse(a), delta)
    rb = _compose(_inverse(b), delta)
    right_meet = _inverse(_meet_perms(_inverse(ra), _inverse(rb)))
    return _compose(delta, _inverse(right_meet))


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def _check_strands(n):
    if n < 2:
        raise InvalidBraidError(f"A braid group needs n >= 2 strands, got {n}")


def identity_simple(n):
    """The trivial simple element 1 of B_n."""
    _check_strands(n)
    return SimpleElement(tuple(range(n)))


def delta(n):
    """
    The half twist Δ of B_n.

    Parameters
    ----------
    n : int
        Number of strands, at least 2.

    Returns
    -------
    SimpleElement
        Δ, whose table reverses the strand order and whose word length is
        n(n-1)/2.
    """
    _check_strands(n)
    return SimpleElement(_delta_perm(n))


def atom(n, i):
    """The generator σ_i of B_n as a simple element."""
    _check_strands(n)
    if not 1 <= i <= n - 1:
        raise InvalidBraidError(f"Atom σ_{i} does not exist in B_{n}")
    perm = list(range(n))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return SimpleElement(tuple(perm))


def atoms(n):
    return [atom(n, i) for i in range(1, n)]


# ---------------------------------------------------------------------------
# Lattice operations
# ---------------------------------------------------------------------------

def starting_set(s):
    """Indices i with σ_i ≼ s."""
    return _starting(s.perm)


def finishing_set(s):
    """Indices i such that σ_i is a right divisor of s."""
    return _starting(_inverse(s.perm))


def meet_simple(s, t):
    """
    Greatest common left divisor s∧t.

    Parameters
    ----------
    s, t : SimpleElement
        Simple elements of the same braid group.

    Returns
    -------
    SimpleElement
        The ≼-greatest simple element dividing both on the left.
    """
    check_same_strands(s, t)
    return SimpleElement(_meet_perms(s.perm, t.perm))


def join_simple(s, t):
    """
    Least common right multiple s∨t; always a divisor of Δ.
    """
    check_same_strands(s, t)
    return SimpleElement(_join_perms(s.perm, t.perm))


def right_complement(s):
    """∂(s) = s⁻¹Δ, so that s·∂(s) = Δ."""
    return SimpleElement(_compose(_inverse(s.perm), _delta_perm(s.n)))


def left_complement(s):
    """∂⁻¹(s) = Δs⁻¹, so that left_complement(s)·s = Δ."""
    return SimpleElement(_compose(_delta_perm(s.n), _inverse(s.perm)))


def tau(s, k=1):
    """τ^k(s) = Δ^{-k} s Δ^k; τ has order 2 so only the parity of k matters."""
    if k % 2 == 0:
        return s
    n = s.n
    return SimpleElement(tuple(n - 1 - s.perm[n - 1 - i] for i in range(n)))


def reverse_simple(s):
    """The simple element spelled by the reversed word; its table is the inverse."""
    return SimpleElement(_inverse(s.perm))


def is_prefix(t, s):
    """True iff t ≼ s, i.e. t⁻¹s is a positive (simple) element."""
    check_same_strands(t, s)
    quotient = _compose(_inverse(t.perm), s.perm)
    return _length(t.perm) + _length(quotient) == _length(s.perm)


def left_quotient(t, s):
    """t⁻¹s for t ≼ s."""
    if not is_prefix(t, s):
        raise InvalidBraidError(f"{t!r} is not a prefix of {s!r}")
    return SimpleElement(_compose(_inverse(t.perm), s.perm))


def product_simple(s, t):
    """s·t, which must itself be simple."""
    check_same_strands(s, t)
    perm = _compose(s.perm, t.perm)
    if _length(s.perm) + _length(t.perm) != _length(perm):
        raise InvalidBraidError(f"{s!r}·{t!r} is not a simple element")
    return SimpleElement(perm)


def is_left_weighted(s, t):
    """True iff ∂(s)∧t = 1, i.e. every atom starting t ends s."""
    check_same_strands(s, t)
    return _starting(t.perm) <= _starting(_inverse(s.perm))


def local_slide(s, t):
    """
    Move the part of t that fits behind s across the boundary.

    Parameters
    ----------
    s, t : SimpleElement

    Returns
    -------
    tuple of SimpleElement
        (s·u, u⁻¹t) with u = ∂(s)∧t. The product is unchanged and the
        returned pair is left-weighted.
    """
    check_same_strands(s, t)
    u = _meet_perms(_compose(_inverse(s.perm), _delta_perm(s.n)), t.perm)
    return (
        SimpleElement(_compose(s.perm, u)),
        SimpleElement(_compose(_inverse(u), t.perm)),
    )


# ---------------------------------------------------------------------------
# Words
# ---------------------------------------------------------------------------

def simple_word(s):
    """
    Canonical positive word for s.

    The word is the shortlex-least reduced word: at every step the smallest
    generator index that still divides the remainder on the left is taken.

    Returns
    -------
    list of int
        Generator indices, e.g. [1, 2, 1] for Δ in B_3.
    """
    rest = list(s.perm)
    word = []
    while True:
        k = next((k for k in range(1, len(rest)) if rest[k - 1] > rest[k]), None)
        if k is None:
            return word
        word.append(k)
        rest[k - 1], rest[k] = rest[k], rest[k - 1]


def simple_from_word(n, letters):
    """
    The permutation braid spelled by a positive word.

    Raises
    ------
    InvalidBraidError
        If a letter is negative, out of range, or crosses two strands that
        have already crossed (the word is then not a permutation braid).
    """
    _check_strands(n)
    # at[p] = starting position of the strand currently at position p
    at = list(range(n))
    for position, raw in enumerate(letters):
        letter = as_letter(raw)
        letter.check(n)
        if letter.sign < 0:
            raise InvalidBraidError(
                f"Letter {position} (σ_{letter.index}⁻¹) is not positive"
            )
        k = letter.index
        if at[k - 1] > at[k]:
            raise InvalidBraidError(
                f"Letter {position} (σ_{k}) crosses strands that already crossed; "
                "the word is not a permutation braid"
            )
        at[k - 1], at[k] = at[k], at[k - 1]
    return SimpleElement(_inverse(at))


# ---------------------------------------------------------------------------
# Enumeration oracles
# ---------------------------------------------------------------------------

def _check_oracle(n, max_strands):
    if n > max_strands:
        raise OracleBoundError(n, max_strands)


def all_simples(n, max_strands=ORACLE_MAX_STRANDS):
    """
    Every simple element of B_n, ordered by length then table.
    """
    _check_strands(n)
    _check_oracle(n, max_strands)
    return sorted(
        (SimpleElement(p) for p in itertools.permutations(range(n))),
        key=lambda s: (s.length, s.perm),
    )


def left_divisors(s, max_strands=ORACLE_MAX_STRANDS):
    """
    The exact set {t simple : t ≼ s}, by enumeration.

    Parameters
    ----------
    s : SimpleElement
    max_strands : int
        Enumeration is refused above this strand count.
    """
    _check_oracle(s.n, max_strands)
    return {t for t in all_simples(s.n, max_strands) if is_prefix(t, s)}
