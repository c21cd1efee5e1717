"""
Centralizer Generators

Computes a generating set for the centralizer of a braid. The generic path
slides the braid into its sliding circuit, checks for a rigid element with a
minimal ultra summit set and reads two generators off the cycling orbit.
Everything else goes through the ultra summit set graph: a spanning tree is
chosen and every arrow outside it closes a loop whose product commutes with
the base element.
"""

import logging
from collections import deque
from dataclasses import dataclass

from .conjugacy import conjugate, cycling, cycling_orbit, cycling_period, slide_to_circuit
from .errors import InvalidBraidError
from .normal_form import (
    delta_power,
    format_normal_form,
    from_simple,
    identity,
    invert,
    is_rigid,
    multiply,
    multiply_all,
)
from .uss_graph import (
    BRUTE_FORCE_MAX_STRANDS,
    COLOR_RANK,
    NOT_MINIMAL,
    TAU_FIXED,
    TAU_SHIFT,
    TWO_ORBITS,
    VERTEX_CAP,
    build_uss_graph,
    check_minimal_uss,
    orbit_structure,
)

logger = logging.getLogger(__name__)

FALLBACK = "Fallback"


@dataclass(frozen=True)
class CentralizerOutput:
    """
    Generators of Z(y), which orbit case produced them, and the conjugator c
    with c⁻¹ y c equal to the ultra summit representative.
    """

    generators: tuple
    case_tag: str
    conjugator: object
    uss_size: int
    k: int


@dataclass(frozen=True)
class SpanningTree:
    """
    A spanning tree of an ultra summit set graph.

    ``parent`` maps each non-base vertex to the index of its tree arrow;
    ``paths`` maps every vertex v to γ_v, with base^{γ_v} = v.
    """

    parent: dict
    paths: dict

    @property
    def tree_arrows(self):
        return frozenset(self.parent.values())


def preferred_cycling_conjugator(x):
    """
    PC(x) = ι(x)ι(c(x))⋯ι(c^{t-1}(x)), where t is the first step at which
    cycling revisits an element. PC(Δ^p) = 1.
    """
    seen = set()
    total = identity(x.n)
    current = x
    while current not in seen:
        seen.add(current)
        step = cycling(current)
        total = multiply(total, step.conjugator)
        current = step.element
    return total


def theorem_case_generators(structure):
    """
    The two generators for a minimal ultra summit set.

    Parameters
    ----------
    structure : OrbitStructure
        Orbit classification of a rigid element with minimal ultra summit set.

    Returns
    -------
    tuple of NormalForm
        TwoOrbits: (PC(x), Δ²); OneOrbitTauFixed: (PC(x), Δ);
        OneOrbitTauShift: (a_1⋯a_{k/2}Δ⁻¹, Δ²).
    """
    orbit = structure.orbit
    n = orbit.elements[0].n
    pc = multiply_all(n, [from_simple(a) for a in orbit.conjugators])
    if structure.tag == TWO_ORBITS:
        return pc, delta_power(n, 2)
    if structure.tag == TAU_FIXED:
        return pc, delta_power(n, 1)
    if structure.tag == TAU_SHIFT:
        half = multiply_all(n, [from_simple(a) for a in orbit.conjugators[: structure.k // 2]])
        return multiply(half, delta_power(n, -1)), delta_power(n, 2)
    raise InvalidBraidError(f"No generator formula for orbit structure {structure.tag}")


def _arrow_order(graph, arrow_index):
    arrow = graph.arrows[arrow_index]
    return COLOR_RANK[arrow.color], arrow.label.perm, arrow_index


def spanning_tree(graph, tree_arrows=None):
    """
    Choose a spanning tree and the path elements γ_v.

    Parameters
    ----------
    graph : UssGraph
    tree_arrows : iterable of int, optional
        Arrow indices forming the tree. Arrows may be used against their
        direction. When omitted, a breadth-first tree from the base is used,
        taking black arrows before grey, grey before bicolored, then by label.

    Returns
    -------
    SpanningTree
    """
    base = graph.base
    parent = {}
    paths = {base: identity(graph.n)}

    if tree_arrows is None:
        queue = deque([base])
        while queue:
            v = queue.popleft()
            outgoing = [key for _, _, key in graph.graph.out_edges(v, keys=True)]
            for key in sorted(outgoing, key=lambda i: _arrow_order(graph, i)):
                arrow = graph.arrows[key]
                if arrow.target in paths:
                    continue
                parent[arrow.target] = key
                paths[arrow.target] = multiply(paths[v], from_simple(arrow.label))
                queue.append(arrow.target)
    else:
        pending = set(tree_arrows)
        grown = True
        while pending and grown:
            grown = False
            for key in sorted(pending):
                arrow = graph.arrows[key]
                label = from_simple(arrow.label)
                if arrow.source in paths and arrow.target not in paths:
                    paths[arrow.target] = multiply(paths[arrow.source], label)
                    parent[arrow.target] = key
                elif arrow.target in paths and arrow.source not in paths:
                    paths[arrow.source] = multiply(paths[arrow.target], invert(label))
                    parent[arrow.source] = key
                else:
                    continue
                pending.discard(key)
                grown = True
        if pending:
            raise InvalidBraidError(f"Arrows {sorted(pending)} do not form a tree")

    if len(paths) != len(graph.vertices):
        raise InvalidBraidError("Tree does not reach every vertex")
    return SpanningTree(parent, paths)


def loop_element(graph, tree, arrow_index):
    """F_λ = γ_{s(λ)} · λ · γ_{t(λ)}⁻¹, an element commuting with the base."""
    arrow = graph.arrows[arrow_index]
    return multiply(
        multiply(tree.paths[arrow.source], from_simple(arrow.label)),
        invert(tree.paths[arrow.target]),
    )


def fallback_generators(graph, tree=None):
    """
    Generators of the centralizer of the base element from loops of the graph.

    Parameters
    ----------
    graph : UssGraph
    tree : SpanningTree, optional
        Defaults to the breadth-first tree.

    Returns
    -------
    list of NormalForm
        One element per arrow outside the tree, in arrow order, with
        identities and repeats removed.
    """
    tree = tree or spanning_tree(graph)
    in_tree = tree.tree_arrows
    generators = []
    seen = set()
    for key in range(len(graph.arrows)):
        if key in in_tree:
            continue
        element = loop_element(graph, tree, key)
        if element.is_identity or element in seen:
            continue
        seen.add(element)
        generators.append(element)
    return generators


def _conjugate_back(elements, c):
    # c⁻¹ y c = x, so Z(y) = c Z(x) c⁻¹
    c_inv = invert(c)
    return tuple(conjugate(g, c_inv) for g in elements)


def centralizer_generators(y, vertex_cap=VERTEX_CAP, max_strands=BRUTE_FORCE_MAX_STRANDS):
    """
    A generating set for the centralizer of y.

    Parameters
    ----------
    y : NormalForm
        Any braid.
    vertex_cap : int
        Vertex cap for the ultra summit set graph of the fallback path.
    max_strands : int
        Strand bound for brute-force minimal simple elements.

    Returns
    -------
    CentralizerOutput
        Two generators when the ultra summit set is minimal, otherwise the
        loop generators of the graph, all conjugated back to y.
    """
    start = slide_to_circuit(y)
    x, c = start.element, start.conjugator
    rigid = x.length > 0 and is_rigid(x)
    k = cycling_orbit(x).k if rigid else cycling_period(x)

    if rigid and x.length > 1 and check_minimal_uss(x):
        structure = orbit_structure(x)
        if structure.tag != NOT_MINIMAL:
            pair = theorem_case_generators(structure)
            uss_size = 2 * structure.k if structure.tag == TWO_ORBITS else structure.k
            logger.info("Centralizer via %s (k=%d)", structure.tag, structure.k)
            return CentralizerOutput(_conjugate_back(pair, c), structure.tag, c, uss_size, k)
        logger.warning("Minimal ultra summit set with an unexpected orbit structure; using loops")

    graph = build_uss_graph(x, vertex_cap=vertex_cap, max_strands=max_strands)
    generators = fallback_generators(graph)
    logger.info("Centralizer via graph loops: %d generators", len(generators))
    total = multiply(c, graph.conjugator)
    return CentralizerOutput(
        _conjugate_back(generators, total), FALLBACK, total, len(graph.vertices), k
    )


def centralizer_to_json(output):
    """{case, k, uss_size, conjugator, generators} with words as normal-form strings."""
    return {
        "case": output.case_tag,
        "k": output.k,
        "uss_size": output.uss_size,
        "conjugator": format_normal_form(output.conjugator),
        "generators": [format_normal_form(g) for g in output.generators],
    }


def commutes(g, y):
    return multiply(g, y) == multiply(y, g)

