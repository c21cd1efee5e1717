"""
Ultra Summit Set Graphs

Minimal simple elements, the directed labeled graph of an ultra summit set
(stored as a networkx MultiDiGraph, like street networks elsewhere in the
codebase), detection of minimal ultra summit sets and the classification of
cycling orbits used by the centralizer computation.

Arrow colors: black when the label is a prefix of ι(y), grey when it is a
prefix of ι(y⁻¹) = ∂(φ(y)), bicolored when both. At vertices of canonical
length 0 both reference factors are trivial and every arrow is bicolored.
"""

import logging
from collections import deque
from dataclasses import dataclass, field

import networkx as nx

from .conjugacy import (
    conjugate,
    cycling,
    cycling_orbit,
    slide_to_circuit,
    uss_membership,
)
from .errors import CapExceededError, InvalidBraidError
from .normal_form import (
    NormalForm,
    as_simple,
    delta_power,
    final_factor,
    from_simple,
    initial_factor,
    invert,
    is_rigid,
    join_with_one,
    multiply,
    tau_power,
)
from .simple import (
    SimpleElement,
    all_simples,
    atom,
    is_left_weighted,
    is_prefix,
    join_simple,
    product_simple,
    right_complement,
    simple_word,
)

logger = logging.getLogger(__name__)

# Brute-force minimal simple elements enumerate n! candidates per vertex
BRUTE_FORCE_MAX_STRANDS = 7

# Graphs with more vertices than this are abandoned
VERTEX_CAP = 100_000

BLACK = "black"
GREY = "grey"
BICOLORED = "bicolored"
COLOR_RANK = {BLACK: 0, GREY: 1, BICOLORED: 2}

RIGID_PULLBACK = "rigid-pullback"
BRUTE_FORCE = "brute-force"

TWO_ORBITS = "TwoOrbits"
TAU_SHIFT = "OneOrbitTauShift"
TAU_FIXED = "OneOrbitTauFixed"
NOT_MINIMAL = "NotMinimal"


@dataclass(frozen=True)
class Arrow:
    source: int
    target: int
    label: SimpleElement
    color: str


@dataclass
class UssGraph:
    """
    The graph of an ultra summit set.

    Vertices are numbered in discovery order; ``graph`` holds the same data as
    a MultiDiGraph whose nodes carry ``element`` and whose edges (keyed by
    arrow index) carry ``label`` and ``color``. ``conjugator`` takes the
    element the graph was built from to the base vertex.
    """

    n: int
    summit_len: int
    base: int
    vertices: list
    arrows: list
    conjugator: NormalForm = None
    index: dict = field(default_factory=dict)
    graph: nx.MultiDiGraph = None

    def __post_init__(self):
        if not self.index:
            self.index = {v: i for i, v in enumerate(self.vertices)}
        if self.graph is None:
            self.graph = _to_networkx(self.vertices, self.arrows)

    def out_arrows(self, vertex):
        return [self.arrows[key] for _, _, key in self.graph.out_edges(vertex, keys=True)]

    def in_arrows(self, vertex):
        return [self.arrows[key] for _, _, key in self.graph.in_edges(vertex, keys=True)]

    @property
    def base_element(self):
        return self.vertices[self.base]


@dataclass(frozen=True)
class OrbitStructure:
    tag: str
    k: int
    orbit: object


def _to_networkx(vertices, arrows):
    G = nx.MultiDiGraph()
    for i, element in enumerate(vertices):
        G.add_node(i, element=element)
    for key, arrow in enumerate(arrows):
        G.add_edge(arrow.source, arrow.target, key=key, label=arrow.label, color=arrow.color)
    return G


# ---------------------------------------------------------------------------
# Minimal simple elements
# ---------------------------------------------------------------------------

def atom_pullback_sss(x, i):
    """
    Smallest ρ with σ_i ≼ ρ such that x^ρ stays in the super summit set.

    Parameters
    ----------
    x : NormalForm
        A rigid element of its super summit set, with inf p and length r.
    i : int
        Atom index, 1 <= i <= n-1.

    Returns
    -------
    SimpleElement
        ρ_i. Starting from σ_i, ρ is replaced by
        ρ·(1∨(x^ρ)⁻¹Δ^p ∨ x^ρΔ^{-p-r}) while ℓ(x^ρ) > r.

    Raises
    ------
    InvalidBraidError
        If x is not rigid, or the candidate stops being simple.
    CapExceededError
        If more than n(n-1)/2 updates are needed.
    """
    if x.length == 0 or not is_rigid(x):
        raise InvalidBraidError("Atom pullback needs a rigid element of positive length")
    n, p, r = x.n, x.inf, x.length
    rho = atom(n, i)
    bound = n * (n - 1) // 2
    for _ in range(bound + 1):
        conjugated = conjugate(x, from_simple(rho))
        if conjugated.length <= r:
            return rho
        left = join_with_one(multiply(invert(conjugated), delta_power(n, p)))
        right = join_with_one(multiply(conjugated, delta_power(n, -p - r)))
        step = join_simple(left, right)
        if step.is_identity or not is_prefix(step, right_complement(rho)):
            raise InvalidBraidError(
                f"Pullback of σ_{i} left the simple elements; "
                "the input is not a rigid super summit element"
            )
        rho = product_simple(rho, step)
    raise CapExceededError("pullback iteration bound", bound, f"atom σ_{i}")


def _rigid_pullback_candidates(y):
    candidates = []
    for i in range(1, y.n):
        rho = atom_pullback_sss(y, i)
        alpha = slide_to_circuit(conjugate(y, from_simple(rho))).conjugator
        candidates.append(as_simple(multiply(from_simple(rho), alpha)))
    return candidates


def _brute_force_candidates(y, summit_len, max_strands):
    return [
        s for s in all_simples(y.n, max_strands)
        if not s.is_identity and uss_membership(conjugate(y, from_simple(s)), summit_len)
    ]


def _prefix_minimal(candidates):
    unique = sorted(set(candidates), key=lambda s: (s.length, simple_word(s)))
    return [
        s for s in unique
        if not any(t != s and is_prefix(t, s) for t in unique)
    ]


def arrow_color(y, s):
    """Color of the arrow labelled s leaving y."""
    if y.length == 0:
        return BICOLORED
    black = is_prefix(s, initial_factor(y))
    grey = is_prefix(s, right_complement(final_factor(y)))
    if black and grey:
        return BICOLORED
    if black:
        return BLACK
    if grey:
        return GREY
    raise InvalidBraidError(
        f"{s!r} is a prefix of neither ι(y) nor ι(y⁻¹); y is not in its ultra summit set"
    )


def minimal_simple_elements(y, summit_len, method=RIGID_PULLBACK,
                            max_strands=BRUTE_FORCE_MAX_STRANDS):
    """
    Minimal simple elements for y, with arrow colors.

    Parameters
    ----------
    y : NormalForm
        Element of its ultra summit set (and rigid for rigid-pullback).
    summit_len : int
        Canonical length of the ultra summit set.
    method : {"rigid-pullback", "brute-force"}
        rigid-pullback keeps the ≼-minimal elements among ρ_iα_i; brute-force
        enumerates all simple elements.
    max_strands : int
        Strand bound for brute force.

    Returns
    -------
    list of (SimpleElement, str)
        Ordered by label length, then canonical word.
    """
    if method == RIGID_PULLBACK:
        candidates = _rigid_pullback_candidates(y)
    elif method == BRUTE_FORCE:
        candidates = _brute_force_candidates(y, summit_len, max_strands)
    else:
        raise InvalidBraidError(f"Unknown method {method!r}")
    return [(s, arrow_color(y, s)) for s in _prefix_minimal(candidates)]


def check_minimal_uss(x):
    """
    True iff x has a minimal ultra summit set: ℓ(x) > 1, x rigid, and both
    ι(x) and ι(x⁻¹) are minimal simple elements for x.
    """
    if x.length <= 1 or not is_rigid(x):
        return False
    labels = {s for s, _ in minimal_simple_elements(x, x.length, RIGID_PULLBACK)}
    return initial_factor(x) in labels and right_complement(final_factor(x)) in labels


def orbit_structure(x):
    """
    Classify the cycling orbit of a rigid ultra summit element.

    Returns
    -------
    OrbitStructure
        OneOrbitTauFixed if τ(x) = x; OneOrbitTauShift if k is even and
        τ(x) = c^{k/2}(x); TwoOrbits if τ(x) is outside the orbit. NotMinimal
        covers τ(x) landing elsewhere in the orbit, which no minimal ultra
        summit set allows.
    """
    orbit = cycling_orbit(x)
    k = orbit.k
    twisted = tau_power(x)
    if twisted == x:
        tag = TAU_FIXED
    elif k % 2 == 0 and orbit.elements[k // 2] == twisted:
        tag = TAU_SHIFT
    elif twisted in orbit.elements:
        tag = NOT_MINIMAL
    else:
        tag = TWO_ORBITS
    logger.debug("Orbit structure %s (k=%d)", tag, k)
    return OrbitStructure(tag, k, orbit)


# ---------------------------------------------------------------------------
# Graph construction
# ---------------------------------------------------------------------------

def _vertex_method(y, summit_len):
    if summit_len > 1 and is_rigid(y):
        return RIGID_PULLBACK
    return BRUTE_FORCE


def build_uss_graph(x0, vertex_cap=VERTEX_CAP, max_strands=BRUTE_FORCE_MAX_STRANDS,
                    method=None):
    """
    Breadth-first construction of the ultra summit set graph of x0.

    Parameters
    ----------
    x0 : NormalForm
        Any braid; it is first slid into its sliding circuit.
    vertex_cap : int
        Abort once the graph would exceed this many vertices.
    max_strands : int
        Strand bound for brute-force minimal simple elements.
    method : str, optional
        Force one method at every vertex. By default rigid vertices of a
        class with summit length > 1 use rigid-pullback, all others
        brute force.

    Returns
    -------
    UssGraph
    """
    start = slide_to_circuit(x0)
    base = start.element
    summit_len = base.length
    vertices = [base]
    index = {base: 0}
    arrows = []
    queue = deque([0])

    while queue:
        v = queue.popleft()
        y = vertices[v]
        vertex_method = method or _vertex_method(y, summit_len)
        for label, color in minimal_simple_elements(y, summit_len, vertex_method, max_strands):
            target = conjugate(y, from_simple(label))
            if target not in index:
                if len(vertices) >= vertex_cap:
                    raise CapExceededError(
                        "vertex cap", vertex_cap, "ultra summit set graph too large"
                    )
                index[target] = len(vertices)
                vertices.append(target)
                queue.append(index[target])
            arrows.append(Arrow(v, index[target], label, color))

    logger.info("Ultra summit set graph: %d vertices, %d arrows", len(vertices), len(arrows))
    return UssGraph(
        n=base.n,
        summit_len=summit_len,
        base=0,
        vertices=vertices,
        arrows=arrows,
        conjugator=start.conjugator,
        index=index,
    )


def is_connected(graph):
    """Every vertex reaches every other along arrows."""
    return nx.is_strongly_connected(graph.graph)


def cycling_orbits(graph):
    """
    Partition the vertices into cycling orbits.

    Returns
    -------
    list of list of int
        Vertex ids per orbit, orbits ordered by their first vertex.
    """
    assigned = {}
    orbits = []
    for v, element in enumerate(graph.vertices):
        if v in assigned:
            continue
        members = []
        current = element
        while True:
            u = graph.index.get(current)
            if u is None:
                raise InvalidBraidError("Cycling left the vertex set of the graph")
            if u in assigned:
                break
            assigned[u] = len(orbits)
            members.append(u)
            current = cycling(current).element
        orbits.append(members)
    return orbits


def inverse_graph(graph):
    """
    The graph of the inverse class: every vertex inverted, labels kept,
    black and grey exchanged.
    """
    swap = {BLACK: GREY, GREY: BLACK, BICOLORED: BICOLORED}
    vertices = [invert(v) for v in graph.vertices]
    arrows = [Arrow(a.source, a.target, a.label, swap[a.color]) for a in graph.arrows]
    return UssGraph(
        n=graph.n,
        summit_len=graph.summit_len,
        base=graph.base,
        vertices=vertices,
        arrows=arrows,
        conjugator=graph.conjugator,
    )


def minimal_uss_violations(graph):
    """
    Check the structure of a minimal ultra summit set.

    Every vertex y must have exactly one incoming and one outgoing arrow of
    each color and no bicolored arrow, the outgoing ones labelled ι(y) and
    ∂(φ(y)); with incoming black b1, outgoing black b2, incoming grey g1
    and outgoing grey g2, the pairs b1·b2 and g1·g2 are left-weighted and
    b1·g2 = g1·b2 = Δ.

    Returns
    -------
    list of str
        Human-readable violations; empty when the graph conforms.
    """
    problems = []
    full = delta_power(graph.n, 1)
    for v in range(len(graph.vertices)):
        out_by = {BLACK: [], GREY: [], BICOLORED: []}
        in_by = {BLACK: [], GREY: [], BICOLORED: []}
        for arrow in graph.out_arrows(v):
            out_by[arrow.color].append(arrow.label)
        for arrow in graph.in_arrows(v):
            in_by[arrow.color].append(arrow.label)

        if out_by[BICOLORED] or in_by[BICOLORED]:
            problems.append(f"vertex {v}: bicolored arrow")
        counts = [len(out_by[BLACK]), len(in_by[BLACK]), len(out_by[GREY]), len(in_by[GREY])]
        if counts != [1, 1, 1, 1]:
            problems.append(f"vertex {v}: arrow counts (out/in black, out/in grey) {counts}")
            continue

        b1, b2 = in_by[BLACK][0], out_by[BLACK][0]
        g1, g2 = in_by[GREY][0], out_by[GREY][0]
        y = graph.vertices[v]
        if b2 != initial_factor(y):
            problems.append(f"vertex {v}: black arrow is not ι")
        if g2 != right_complement(final_factor(y)):
            problems.append(f"vertex {v}: grey arrow is not ι of the inverse")
        if not is_left_weighted(b1, b2):
            problems.append(f"vertex {v}: black pair not left-weighted")
        if not is_left_weighted(g1, g2):
            problems.append(f"vertex {v}: grey pair not left-weighted")
        if multiply(from_simple(b1), from_simple(g2)) != full:
            problems.append(f"vertex {v}: incoming black times outgoing grey is not Δ")
        if multiply(from_simple(g1), from_simple(b2)) != full:
            problems.append(f"vertex {v}: incoming grey times outgoing black is not Δ")
    return problems


# ---------------------------------------------------------------------------
# JSON export
# ---------------------------------------------------------------------------

def _perm_to_json(s):
    return [v + 1 for v in s.perm]


def _perm_from_json(values):
    return SimpleElement(tuple(v - 1 for v in values))


def normal_form_to_json(x):
    """{inf, factors} with 1-based permutation tables."""
    return {"inf": x.inf, "factors": [_perm_to_json(f) for f in x.factors]}


def normal_form_from_json(n, obj):
    return NormalForm(n, obj["inf"], tuple(_perm_from_json(f) for f in obj["factors"]))


def graph_to_json(graph):
    """Export in discovery order: {n, summit_len, base, vertices, arrows}."""
    return {
        "n": graph.n,
        "summit_len": graph.summit_len,
        "base": graph.base,
        "vertices": [normal_form_to_json(v) for v in graph.vertices],
        "arrows": [
            {"src": a.source, "dst": a.target, "label": _perm_to_json(a.label), "color": a.color}
            for a in graph.arrows
        ],
    }


def graph_from_json(obj):
    n = obj["n"]
    vertices = [normal_form_from_json(n, v) for v in obj["vertices"]]
    arrows = [
        Arrow(a["src"], a["dst"], _perm_from_json(a["label"]), a["color"])
        for a in obj["arrows"]
    ]
    return UssGraph(
        n=n,
        summit_len=obj["summit_len"],
        base=obj["base"],
        vertices=vertices,
        arrows=arrows,
    )
