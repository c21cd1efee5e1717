"""
Left Normal Forms

Every braid is stored in its left normal form Δ^p x_1 ⋯ x_l: an integer
infimum p and a tuple of simple factors, none equal to 1 or Δ, with every
adjacent pair left-weighted. Equal braids have equal normal forms, so the
frozen NormalForm dataclass doubles as a hashable canonical key.

Normalization follows the usual combing scheme: factors are appended one at a
time, each append followed by a backward pass of local slidings that stops at
the first pair left unchanged; powers of Δ are collected at the front.
"""

import logging
from dataclasses import dataclass, field

from .errors import InvalidBraidError, check_same_strands
from .simple import (
    GeneratorLetter,
    as_letter,
    delta,
    identity_simple,
    is_left_weighted,
    left_complement,
    local_slide,
    meet_simple,
    reverse_simple,
    right_complement,
    simple_word,
    tau,
    atom,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of B_n and their inverses."""

    n: int
    letters: tuple = ()

    def __post_init__(self):
        if self.n < 2:
            raise InvalidBraidError(f"A braid group needs n >= 2 strands, got {self.n}")
        letters = tuple(as_letter(letter) for letter in self.letters)
        for letter in letters:
            letter.check(self.n)
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_ints(cls, n, values):
        """Build a word from signed indices, e.g. ``BraidWord.from_ints(3, [1, -2])``."""
        return cls(n, tuple(GeneratorLetter.from_int(v) for v in values))

    def signed(self):
        return [letter.signed for letter in self.letters]

    def __len__(self):
        return len(self.letters)


@dataclass(frozen=True)
class NormalForm:
    """
    A braid Δ^inf · factors[0] ⋯ factors[-1] in left normal form.

    Construction validates the normal-form conditions; use the functions of
    this module to produce instances from arbitrary data.
    """

    n: int
    inf: int = 0
    factors: tuple = ()

    def __post_init__(self):
        factors = tuple(self.factors)
        object.__setattr__(self, "factors", factors)
        if self.n < 2:
            raise InvalidBraidError(f"A braid group needs n >= 2 strands, got {self.n}")
        for i, factor in enumerate(factors):
            if factor.n != self.n:
                raise InvalidBraidError(f"Factor {i} lives in B_{factor.n}, not B_{self.n}")
            if factor.is_identity or factor.is_delta:
                raise InvalidBraidError(f"Factor {i} is 1 or Δ")
        for i in range(len(factors) - 1):
            if not is_left_weighted(factors[i], factors[i + 1]):
                raise InvalidBraidError(f"Factors {i} and {i + 1} are not left-weighted")

    @property
    def sup(self):
        return self.inf + len(self.factors)

    @property
    def length(self):
        """Canonical length ℓ."""
        return len(self.factors)

    @property
    def key(self):
        """Deterministic canonical key: (n, inf, factor tables)."""
        return (self.n, self.inf, tuple(f.perm for f in self.factors))

    @property
    def is_identity(self):
        return self.inf == 0 and not self.factors

    def __repr__(self):
        return f"NormalForm(n={self.n}, {format_normal_form(self)})"


@dataclass(frozen=True)
class RightNormalForm:
    """x = factors[0] ⋯ factors[-1] · Δ^inf with adjacent pairs right-weighted."""

    n: int
    inf: int
    factors: tuple = field(default_factory=tuple)


def format_normal_form(x):
    """Render as ``D^p . w(x_1) . … . w(x_l)``; the Δ power is omitted when p = 0."""
    parts = []
    if x.inf != 0 or not x.factors:
        parts.append(f"D^{x.inf}")
    parts.extend(" ".join(str(i) for i in simple_word(f)) for f in x.factors)
    return " . ".join(parts)


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def identity(n):
    return NormalForm(n, 0, ())


def delta_power(n, p):
    """Δ^p as a normal form."""
    return NormalForm(n, p, ())


def from_simple(s):
    """Lift a simple element to a normal form (1 and Δ become powers of Δ)."""
    if s.is_identity:
        return identity(s.n)
    if s.is_delta:
        return delta_power(s.n, 1)
    return NormalForm(s.n, 0, (s,))


def as_simple(x):
    """The simple element equal to x; raises if x is not simple."""
    if x.is_identity:
        return identity_simple(x.n)
    if x.inf == 1 and not x.factors:
        return delta(x.n)
    if x.inf == 0 and len(x.factors) == 1:
        return x.factors[0]
    raise InvalidBraidError(f"{x!r} is not a simple element")


def _comb_back(factors, i):
    # Restore left-weightedness after pair (i, i+1) may have broken it.
    for j in range(i, -1, -1):
        left, right = local_slide(factors[j], factors[j + 1])
        if left == factors[j]:
            return
        factors[j], factors[j + 1] = left, right


def _strip(power, factors):
    start = 0
    while start < len(factors) and factors[start].is_delta:
        start += 1
    end = len(factors)
    while end > start and factors[end - 1].is_identity:
        end -= 1
    return power + start, factors[start:end]


def normalize_factors(n, power, sequence):
    """
    Normal form of Δ^power · s_1 ⋯ s_m for arbitrary simple elements s_i.

    Parameters
    ----------
    n : int
        Number of strands.
    power : int
        Leading power of Δ.
    sequence : iterable of SimpleElement
        Simple factors, which may include 1 and Δ and need not be
        left-weighted.

    Returns
    -------
    NormalForm
    """
    factors = []
    for s in sequence:
        if s.n != n:
            raise InvalidBraidError(f"Factor lives in B_{s.n}, not B_{n}")
        if s.is_identity:
            continue
        if s.is_delta:
            # X·Δ = Δ·τ(X)
            power += 1
            factors = [tau(f) for f in factors]
            continue
        factors.append(s)
        if len(factors) > 1:
            _comb_back(factors, len(factors) - 2)
        power, factors = _strip(power, factors)
    return NormalForm(n, power, tuple(factors))


def normalize(word):
    """
    Left normal form of the element spelled by a BraidWord.

    A negative letter σ_i⁻¹ is rewritten as Δ⁻¹ · ∂⁻¹(σ_i); all Δ⁻¹ markers are
    then moved to the front with a single backward pass applying τ.
    """
    n = word.n
    factors = []
    markers = []
    for letter in word.letters:
        s = atom(n, letter.index)
        if letter.sign > 0:
            factors.append(s)
            markers.append(0)
        else:
            factors.append(left_complement(s))
            markers.append(-1)

    power = 0
    for i in range(len(factors) - 1, -1, -1):
        factors[i] = tau(factors[i], power)
        power += markers[i]

    return normalize_factors(n, power, factors)


def normalize_ints(n, values):
    """Shorthand for ``normalize(BraidWord.from_ints(n, values))``."""
    return normalize(BraidWord.from_ints(n, values))


def to_word(x):
    """
    A generator word for x: Δ^p spelled with the canonical Δ word (inverted
    for negative p), followed by the canonical factor words.
    """
    delta_word = simple_word(delta(x.n))
    if x.inf >= 0:
        head = delta_word * x.inf
    else:
        head = [-i for i in reversed(delta_word)] * (-x.inf)
    tail = [i for f in x.factors for i in simple_word(f)]
    return BraidWord.from_ints(x.n, head + tail)


# ---------------------------------------------------------------------------
# Group operations
# ---------------------------------------------------------------------------

def tau_power(x, k=1):
    """τ^k applied to every factor of x."""
    if k % 2 == 0:
        return x
    return NormalForm(x.n, x.inf, tuple(tau(f) for f in x.factors))


def multiply(x, y):
    """
    Normal form of x·y.

    (Δ^p X)(Δ^q Y) = Δ^{p+q} τ^q(X) Y; the two factor runs are joined and
    combed from the junction to the right, stopping as soon as a slide
    leaves its pair unchanged.
    """
    n = check_same_strands(x, y)
    left = [tau(f, y.inf) for f in x.factors]
    if not left or not y.factors or is_left_weighted(left[-1], y.factors[0]):
        return NormalForm(n, x.inf + y.inf, tuple(left) + y.factors)

    factors = left + list(y.factors)
    for i in range(len(left) - 1, len(factors) - 1):
        a, b = local_slide(factors[i], factors[i + 1])
        if a == factors[i]:
            break
        factors[i], factors[i + 1] = a, b
        if i > 0:
            _comb_back(factors, i - 1)

    power, factors = _strip(x.inf + y.inf, factors)
    return NormalForm(n, power, tuple(factors))


def multiply_all(n, elements):
    result = identity(n)
    for element in elements:
        result = multiply(result, element)
    return result


def invert(x):
    """
    Normal form of x⁻¹, written down directly:
    Δ^{-p-l} x'_l ⋯ x'_1 with x'_i = τ^{-p-i}(∂(x_i)).
    """
    p, l = x.inf, x.length
    factors = tuple(
        tau(right_complement(x.factors[i - 1]), p + i) for i in range(l, 0, -1)
    )
    return NormalForm(x.n, -p - l, factors)


def power(x, k):
    """x^k for any integer k, by repeated squaring."""
    result = identity(x.n)
    if k == 0:
        return result
    base = x if k > 0 else invert(x)
    k = abs(k)
    while k:
        if k % 2 == 1:
            result = multiply(result, base)
        k //= 2
        if k:
            base = multiply(base, base)
    return result


def reverse(x):
    """
    Image under the word-reversal anti-automorphism:
    rev(Δ^p x_1 ⋯ x_l) = Δ^p τ^p(rev x_l) ⋯ τ^p(rev x_1).
    """
    sequence = [tau(reverse_simple(f), x.inf) for f in reversed(x.factors)]
    return normalize_factors(x.n, x.inf, sequence)


def right_normal_form(x):
    """
    Right normal form x = y_1 ⋯ y_m · Δ^p (factors listed left to right).

    Reversal exchanges left and right normal forms, so the left normal form
    of rev(x) is reversed back.
    """
    z = reverse(x)
    factors = tuple(reverse_simple(f) for f in reversed(z.factors))
    return RightNormalForm(x.n, z.inf, factors)


def leftmost_right_factor(x):
    """The leftmost factor of the right normal form (1 when there is none)."""
    rnf = right_normal_form(x)
    if not rnf.factors:
        return identity_simple(x.n)
    return rnf.factors[0]


def join_with_one(x):
    """
    1∨x for sup(x) <= 1.

    Returns 1 when sup(x) <= 0, and otherwise the leftmost factor of the
    right normal form (Δ when x = Δ).
    """
    if x.sup <= 0:
        return identity_simple(x.n)
    if x.sup > 1:
        raise InvalidBraidError(f"1∨x is only simple-valued for sup(x) <= 1, got {x.sup}")
    if not x.factors:
        return delta(x.n)
    return leftmost_right_factor(x)


# ---------------------------------------------------------------------------
# Accessors
# ---------------------------------------------------------------------------

def initial_factor(x):
    """ι(x) = τ^{-p}(x_1); 1 when ℓ(x) = 0."""
    if not x.factors:
        return identity_simple(x.n)
    return tau(x.factors[0], x.inf)


def final_factor(x):
    """φ(x) = x_l; Δ when ℓ(x) = 0."""
    if not x.factors:
        return delta(x.n)
    return x.factors[-1]


def boundary_factors(x):
    """(ι(x), φ(x))."""
    return initial_factor(x), final_factor(x)


def preferred_prefix(x):
    """𝔭(x) = ι(x) ∧ ι(x⁻¹) = ι(x) ∧ ∂(φ(x)); 1 when ℓ(x) = 0."""
    if not x.factors:
        return identity_simple(x.n)
    return meet_simple(initial_factor(x), right_complement(final_factor(x)))


def is_rigid(x):
    """
    True iff φ(x)ι(x) is left-weighted as written, i.e. 𝔭(x) = 1.

    Raises
    ------
    InvalidBraidError
        For ℓ(x) = 0, where rigidity is undefined.
    """
    if not x.factors:
        raise InvalidBraidError("Rigidity is only defined for canonical length > 0")
    return preferred_prefix(x).is_identity


def is_simple(x):
    return x.is_identity or (x.inf == 1 and not x.factors) or (x.inf == 0 and x.length == 1)
