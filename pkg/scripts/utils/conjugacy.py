"""
Conjugacy Toolbox

Cycling, decycling, cyclic sliding, sliding circuits, cycling orbits,
ultra summit set membership and the transport map. Every conjugation returns
the element together with its cumulative conjugator g, meaning
element = g⁻¹ · start · g.
"""

import logging
from dataclasses import dataclass, field

from .errors import CapExceededError, InvalidBraidError, check_same_strands
from .normal_form import (
    NormalForm,
    final_factor,
    from_simple,
    identity,
    initial_factor,
    invert,
    multiply,
    normalize_factors,
    preferred_prefix,
    tau_power,
)
from .simple import right_complement, tau

logger = logging.getLogger(__name__)

# Cyclic slidings tried before concluding something is broken
SLIDING_STEP_CAP = 100_000

# Cycling orbits are expected to close within 2·ℓ·ORBIT_SAFEGUARD steps
ORBIT_SAFEGUARD = 4

# Cycling steps allowed when testing ultra summit set membership
MEMBERSHIP_STEP_CAP = 100_000


@dataclass(frozen=True)
class ConjugationStep:
    """
    An element reached by conjugation, with its cumulative conjugator.

    ``trajectory`` lists the intermediate elements when a caller asked for it.
    """

    element: NormalForm
    conjugator: NormalForm
    trajectory: tuple = field(default=(), compare=False)


@dataclass(frozen=True)
class OrbitInfo:
    """
    A cycling orbit X_1, …, X_k with conjugators a_j = ι(X_j), X_j^{a_j} = X_{j+1}.
    """

    elements: tuple
    conjugators: tuple

    @property
    def k(self):
        return len(self.elements)


def conjugate(x, g):
    """g⁻¹ x g."""
    check_same_strands(x, g)
    return multiply(multiply(invert(g), x), g)


def cycling(x):
    """
    c(x) = Δ^p x_2 ⋯ x_l τ^{-p}(x_1), reached by conjugating with ι(x).
    """
    if not x.factors:
        return ConjugationStep(x, identity(x.n))
    iota = initial_factor(x)
    element = normalize_factors(x.n, x.inf, x.factors[1:] + (iota,))
    return ConjugationStep(element, from_simple(iota))


def decycling(x, twisted=False):
    """
    d(x) = x_l Δ^p x_1 ⋯ x_{l-1} (conjugator φ(x)⁻¹), or its twisted version
    τ(d(x)) (conjugator ∂(φ(x))).
    """
    if not x.factors:
        return ConjugationStep(x, identity(x.n))
    phi = final_factor(x)
    element = normalize_factors(x.n, x.inf, (tau(phi, x.inf),) + x.factors[:-1])
    if twisted:
        return ConjugationStep(tau_power(element), from_simple(right_complement(phi)))
    return ConjugationStep(element, invert(from_simple(phi)))


def cyclic_sliding(x):
    """𝔰(x) = x^{𝔭(x)}."""
    prefix = preferred_prefix(x)
    if prefix.is_identity:
        return ConjugationStep(x, identity(x.n))
    g = from_simple(prefix)
    return ConjugationStep(conjugate(x, g), g)


def slide_to_circuit(x, step_cap=SLIDING_STEP_CAP, keep_trajectory=False):
    """
    Iterate cyclic sliding until an element repeats.

    Parameters
    ----------
    x : NormalForm
        Any braid.
    step_cap : int
        Maximum number of slidings.
    keep_trajectory : bool
        Retain every visited element in the returned step.

    Returns
    -------
    ConjugationStep
        The first element of the detected sliding circuit and the cumulative
        conjugator from x to it.
    """
    seen = {}
    elements = []
    conjugators = []
    current, total = x, identity(x.n)
    for step in range(step_cap + 1):
        if current in seen:
            first = seen[current]
            logger.debug("Sliding circuit found after %d steps (enters at %d)", step, first)
            trajectory = tuple(elements) if keep_trajectory else ()
            return ConjugationStep(elements[first], conjugators[first], trajectory)
        seen[current] = step
        elements.append(current)
        conjugators.append(total)
        slid = cyclic_sliding(current)
        current = slid.element
        total = multiply(total, slid.conjugator)
    raise CapExceededError("sliding step cap", step_cap, f"no repetition from {x!r}")


def orbit_bound(x, safeguard=ORBIT_SAFEGUARD):
    return max(2 * x.length * safeguard, safeguard)


def cycling_orbit(x, safeguard=ORBIT_SAFEGUARD):
    """
    The cycling orbit of x, which must lie in its own ultra summit set.

    Raises
    ------
    CapExceededError
        If x does not come back within the orbit bound.
    """
    bound = orbit_bound(x, safeguard)
    elements = [x]
    conjugators = []
    current = x
    for _ in range(bound):
        conjugators.append(initial_factor(current))
        current = cycling(current).element
        if current == x:
            logger.debug("Cycling orbit of length %d", len(elements))
            return OrbitInfo(tuple(elements), tuple(conjugators))
        elements.append(current)
    raise CapExceededError(
        "cycling orbit bound", bound, "element does not recur under cycling"
    )


def cycling_period(x, step_cap=MEMBERSHIP_STEP_CAP):
    """
    Number of cyclings that bring an ultra summit element back to itself.

    Unlike ``cycling_orbit`` no orbit bound applies, so non-rigid summit
    elements with long orbits are fine.

    Raises
    ------
    InvalidBraidError
        If another element repeats before x comes back.
    CapExceededError
        If nothing repeats within ``step_cap`` cyclings.
    """
    seen = set()
    current = x
    for step in range(1, step_cap + 1):
        seen.add(current)
        current = cycling(current).element
        if current == x:
            return step
        if current in seen:
            raise InvalidBraidError(f"{x!r} is not in its own cycling orbit")
    raise CapExceededError("membership step cap", step_cap)


def cycling_power(x, m):
    """c^m(x) together with the product ι(x)ι(c(x))⋯ of the m conjugators."""
    total = identity(x.n)
    current = x
    for _ in range(m):
        step = cycling(current)
        total = multiply(total, step.conjugator)
        current = step.element
    return ConjugationStep(current, total)


def uss_membership(z, summit_len, step_cap=MEMBERSHIP_STEP_CAP):
    """
    True iff z has the summit canonical length and returns to itself under
    cycling.
    """
    if z.length != summit_len:
        return False
    seen = set()
    current = z
    for _ in range(step_cap):
        seen.add(current)
        current = cycling(current).element
        if current == z:
            return True
        if current in seen:
            return False
    raise CapExceededError("membership step cap", step_cap)


def super_summit_bounds(x):
    """(inf, sup) of the super summit set of x's conjugacy class."""
    summit = slide_to_circuit(x).element
    return summit.inf, summit.sup


def transport(x, alpha, i, check_summit=False):
    """
    The i-th transport α^{(i)} of α along the cycling trajectory of x, where
    α^{(1)} = ι(x)⁻¹ α ι(x^α).

    Parameters
    ----------
    x, alpha : NormalForm
    i : int
        Number of transport steps, i >= 0.
    check_summit : bool
        Verify that x and x^α share the canonical length at every step.
    """
    check_same_strands(x, alpha)
    if i < 0:
        raise InvalidBraidError(f"Transport index must be >= 0, got {i}")
    current, a = x, alpha
    for _ in range(i):
        target = conjugate(current, a)
        if check_summit and target.length != current.length:
            raise InvalidBraidError("Transport needs x and x^α in the same super summit set")
        a = multiply(
            multiply(invert(from_simple(initial_factor(current))), a),
            from_simple(initial_factor(target)),
        )
        current = cycling(current).element
    return a
