"""
Tests for centralizer generators: the minimal ultra summit set formulas and
the spanning-tree fallback.
"""

import json
from pathlib import Path

import jsonschema
import numpy as np
import pytest

from utils.centralizer import (
    FALLBACK,
    CentralizerOutput,
    centralizer_generators,
    centralizer_to_json,
    commutes,
    fallback_generators,
    loop_element,
    preferred_cycling_conjugator,
    spanning_tree,
    theorem_case_generators,
)
from utils.conjugacy import (
    conjugate,
    cycling_orbit,
    cycling_period,
    slide_to_circuit,
    uss_membership,
)
from utils.errors import CapExceededError, InvalidBraidError
from utils.genericity import LEFT_WEIGHTED, SampleConfig, sample_normal_form
from utils.normal_form import (
    delta_power,
    identity,
    invert,
    is_rigid,
    multiply,
    multiply_all,
    normalize_ints,
    power,
    tau_power,
)
from utils.uss_graph import (
    BLACK,
    GREY,
    NOT_MINIMAL,
    TAU_FIXED,
    TAU_SHIFT,
    TWO_ORBITS,
    OrbitStructure,
    build_uss_graph,
    check_minimal_uss,
    cycling_orbits,
    minimal_uss_violations,
    orbit_structure,
)

SCHEMA_DIR = Path(__file__).parent / "schemas"

SIGMA1_SQ = normalize_ints(3, [1, 1])
TAU_SHIFT_X = normalize_ints(3, [1, 2, 2, 1])
NOT_RIGID = normalize_ints(3, [1, 1, 2, 2])


def minimal_samples(n, l, count, seed=0, p=0):
    """Rigid sliding-circuit elements whose ultra summit set is minimal."""
    cfg = SampleConfig(n=n, l=l, p=p, seed=seed, method=LEFT_WEIGHTED)
    found = []
    for trial in range(40 * count):
        x = slide_to_circuit(sample_normal_form(cfg, trial)).element
        if x.length > 1 and is_rigid(x) and check_minimal_uss(x):
            found.append(x)
            if len(found) == count:
                break
    return found


def random_braids(seed, count, strands=(3, 4), max_length=8):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.choice(strands))
        length = int(rng.integers(1, max_length + 1))
        letters = rng.integers(1, n, size=length) * rng.choice([-1, 1], size=length)
        yield normalize_ints(n, [int(v) for v in letters])


def arrow_from(graph, vertex, color):
    matches = [
        i for i, a in enumerate(graph.arrows) if a.source == vertex and a.color == color
    ]
    assert len(matches) == 1
    return matches[0]


# ---------------------------------------------------------------------------
# Preferred cycling conjugator and the two-generator formulas
# ---------------------------------------------------------------------------

def test_preferred_cycling_conjugator_examples():
    assert preferred_cycling_conjugator(SIGMA1_SQ) == normalize_ints(3, [1])
    assert preferred_cycling_conjugator(TAU_SHIFT_X) == TAU_SHIFT_X
    assert preferred_cycling_conjugator(delta_power(3, 2)) == identity(3)
    assert preferred_cycling_conjugator(delta_power(4, -1)) == identity(4)


def test_preferred_cycling_conjugator_commutes():
    for x in minimal_samples(4, 6, 10, seed=41):
        assert commutes(preferred_cycling_conjugator(x), x)


def test_theorem_case_generators_examples():
    assert theorem_case_generators(orbit_structure(SIGMA1_SQ)) == (
        normalize_ints(3, [1]), delta_power(3, 2),
    )
    assert theorem_case_generators(orbit_structure(TAU_SHIFT_X)) == (
        normalize_ints(3, [-2]), delta_power(3, 2),
    )
    assert theorem_case_generators(orbit_structure(normalize_ints(4, [2, 2]))) == (
        normalize_ints(4, [2]), delta_power(4, 1),
    )


def test_theorem_case_generators_rejects_not_minimal():
    structure = OrbitStructure(NOT_MINIMAL, 1, cycling_orbit(SIGMA1_SQ))
    with pytest.raises(InvalidBraidError):
        theorem_case_generators(structure)


def test_tau_shift_generator_squares_to_cycling_conjugator():
    g, _ = theorem_case_generators(orbit_structure(TAU_SHIFT_X))
    assert multiply(power(g, 2), delta_power(3, 2)) == preferred_cycling_conjugator(TAU_SHIFT_X)


# ---------------------------------------------------------------------------
# Spanning trees and loop generators
# ---------------------------------------------------------------------------

def test_fallback_examples():
    graph = build_uss_graph(SIGMA1_SQ)
    generators = fallback_generators(graph)
    assert generators == [normalize_ints(3, [1]), normalize_ints(3, [2, 1, 1, 2])]
    g0, g1 = generators
    assert multiply_all(3, [g1, g0, g0]) == delta_power(3, 2)

    graph = build_uss_graph(TAU_SHIFT_X)
    assert fallback_generators(graph) == [normalize_ints(3, [2]), TAU_SHIFT_X]

    graph = build_uss_graph(delta_power(3, 2))
    assert fallback_generators(graph) == [normalize_ints(3, [1]), normalize_ints(3, [2])]


def test_default_spanning_tree():
    graph = build_uss_graph(SIGMA1_SQ)
    tree = spanning_tree(graph)
    assert tree.parent == {1: 1}
    assert tree.tree_arrows == frozenset({1})
    assert tree.paths[0] == identity(3)
    assert tree.paths[1] == normalize_ints(3, [2, 1])


def test_explicit_spanning_tree_used_backwards():
    graph = build_uss_graph(SIGMA1_SQ)
    tree = spanning_tree(graph, tree_arrows={3})
    assert tree.paths[1] == invert(normalize_ints(3, [1, 2]))
    assert loop_element(graph, tree, 1) == normalize_ints(3, [2, 1, 1, 2])
    assert loop_element(graph, tree, 2) == normalize_ints(3, [1])
    assert fallback_generators(graph, tree) == [
        normalize_ints(3, [1]), normalize_ints(3, [2, 1, 1, 2]),
    ]


def test_invalid_spanning_trees():
    graph = build_uss_graph(SIGMA1_SQ)
    with pytest.raises(InvalidBraidError):
        spanning_tree(graph, tree_arrows={0})
    with pytest.raises(InvalidBraidError):
        spanning_tree(graph, tree_arrows=[])


def test_tree_paths_reach_vertices():
    for x in random_braids(42, 12):
        graph = build_uss_graph(x)
        tree = spanning_tree(graph)
        for v, element in enumerate(graph.vertices):
            assert conjugate(graph.base_element, tree.paths[v]) == element
        for key in range(len(graph.arrows)):
            assert commutes(loop_element(graph, tree, key), graph.base_element)


# ---------------------------------------------------------------------------
# centralizer_generators
# ---------------------------------------------------------------------------

def test_centralizer_two_orbits():
    output = centralizer_generators(SIGMA1_SQ)
    assert output == CentralizerOutput(
        generators=(normalize_ints(3, [1]), delta_power(3, 2)),
        case_tag=TWO_ORBITS,
        conjugator=identity(3),
        uss_size=2,
        k=1,
    )


def test_centralizer_tau_shift():
    output = centralizer_generators(TAU_SHIFT_X)
    assert output.case_tag == TAU_SHIFT
    assert output.generators == (normalize_ints(3, [-2]), delta_power(3, 2))
    assert (output.k, output.uss_size) == (2, 2)
    assert output.conjugator == identity(3)


def test_centralizer_tau_fixed_without_minimal_uss():
    x = normalize_ints(4, [2, 2])
    assert orbit_structure(x).tag == TAU_FIXED
    assert not check_minimal_uss(x)
    output = centralizer_generators(x)
    assert output.case_tag == FALLBACK
    assert output.uss_size == len(build_uss_graph(x).vertices)
    assert all(commutes(g, x) for g in output.generators)


def test_centralizer_conjugates_back():
    y = normalize_ints(3, [-2, 1, 1, 2])
    output = centralizer_generators(y)
    assert output.case_tag == TWO_ORBITS
    assert output.conjugator == normalize_ints(3, [1])
    assert output.generators == (normalize_ints(3, [1, 2, -1]), delta_power(3, 2))
    assert all(commutes(g, y) for g in output.generators)


def test_centralizer_of_central_elements():
    for y in (delta_power(3, 2), identity(3)):
        output = centralizer_generators(y)
        assert output.case_tag == FALLBACK
        assert output.generators == (normalize_ints(3, [1]), normalize_ints(3, [2]))
        assert (output.uss_size, output.k) == (1, 1)


def test_centralizer_fallback_for_non_minimal():
    y = normalize_ints(4, [1, 3, 2, 2])
    output = centralizer_generators(y)
    if output.case_tag == FALLBACK:
        summit = slide_to_circuit(y).element
        assert output.uss_size == len(build_uss_graph(summit).vertices)
    assert all(commutes(g, y) for g in output.generators)


def test_centralizer_vertex_cap():
    with pytest.raises(CapExceededError):
        centralizer_generators(normalize_ints(4, [2, 2]), vertex_cap=1)


def test_centralizer_commutes_on_random_braids():
    for y in random_braids(43, 40):
        output = centralizer_generators(y)
        assert output.generators
        assert all(commutes(g, y) for g in output.generators)
        assert conjugate(y, output.conjugator) == slide_to_circuit(y).element
        assert output.k == cycling_period(slide_to_circuit(y).element)


def test_centralizer_case_is_a_class_invariant():
    rng = np.random.default_rng(44)
    for x in minimal_samples(4, 6, 8, seed=45):
        g = normalize_ints(4, [int(v) for v in rng.integers(1, 4, size=5)])
        z = conjugate(x, g)
        left, right = centralizer_generators(x), centralizer_generators(z)
        assert left.case_tag == right.case_tag
        assert all(commutes(h, z) for h in right.generators)


def test_commutes():
    assert commutes(normalize_ints(3, [1]), SIGMA1_SQ)
    assert not commutes(normalize_ints(3, [2]), SIGMA1_SQ)
    assert commutes(delta_power(3, 2), NOT_RIGID)


# ---------------------------------------------------------------------------
# Loop elements of minimal ultra summit sets
# ---------------------------------------------------------------------------

def _two_orbit_loops(x):
    structure = orbit_structure(x)
    graph = build_uss_graph(x)
    k = structure.k
    pc = preferred_cycling_conjugator(x)
    delta2 = delta_power(x.n, 2)
    xs = [graph.index[e] for e in structure.orbit.elements]
    ys = [graph.index[tau_power(e)] for e in structure.orbit.elements]

    tree_arrows = {arrow_from(graph, xs[0], GREY)}
    for j in range(k - 1):
        tree_arrows.add(arrow_from(graph, xs[j], BLACK))
        tree_arrows.add(arrow_from(graph, ys[j], BLACK))
    tree = spanning_tree(graph, tree_arrows)

    expected = {
        arrow_from(graph, xs[-1], BLACK): pc,
        arrow_from(graph, ys[-1], BLACK): pc,
        arrow_from(graph, ys[0], GREY): multiply(invert(power(pc, 2)), delta2),
    }
    for j in range(1, k):
        expected[arrow_from(graph, xs[j], GREY)] = pc
        expected[arrow_from(graph, ys[j], GREY)] = multiply(invert(pc), delta2)
    return graph, tree, expected


def test_two_orbit_loops_sigma1_squared():
    graph, tree, expected = _two_orbit_loops(SIGMA1_SQ)
    assert tree.tree_arrows == frozenset({1})
    assert expected == {
        0: normalize_ints(3, [1]),
        2: normalize_ints(3, [1]),
        3: normalize_ints(3, [2, 1, 1, 2]),
    }
    for key, value in expected.items():
        assert loop_element(graph, tree, key) == value


def test_two_orbit_loops_random():
    checked = 0
    for x in minimal_samples(4, 6, 10, seed=46):
        if orbit_structure(x).tag != TWO_ORBITS:
            continue
        checked += 1
        graph, tree, expected = _two_orbit_loops(x)
        assert len(expected) + len(tree.tree_arrows) == len(graph.arrows)
        for key, value in expected.items():
            assert loop_element(graph, tree, key) == value
    assert checked >= 5


def _tau_shift_loops(x):
    structure = orbit_structure(x)
    graph = build_uss_graph(x)
    k, half = structure.k, structure.k // 2
    g, delta2 = theorem_case_generators(structure)
    xs = [graph.index[e] for e in structure.orbit.elements]

    tree = spanning_tree(graph, {arrow_from(graph, xs[j], BLACK) for j in range(k - 1)})
    expected = {arrow_from(graph, xs[-1], BLACK): multiply(power(g, 2), delta2)}
    for j in range(k):
        value = invert(g) if j <= half else multiply(g, delta2)
        expected[arrow_from(graph, xs[j], GREY)] = value
    return graph, tree, expected


def test_tau_shift_loops_example():
    graph, tree, expected = _tau_shift_loops(TAU_SHIFT_X)
    assert expected == {
        3: TAU_SHIFT_X,
        0: normalize_ints(3, [2]),
        2: normalize_ints(3, [2]),
    }
    for key, value in expected.items():
        assert loop_element(graph, tree, key) == value


def test_tau_shift_loops_random():
    # odd infimum: c^l(x) = τ(x), so every orbit is τ-shifted or τ-fixed
    checked = 0
    for x in minimal_samples(4, 6, 10, seed=47, p=1):
        if orbit_structure(x).tag != TAU_SHIFT:
            continue
        checked += 1
        graph, tree, expected = _tau_shift_loops(x)
        assert len(expected) + len(tree.tree_arrows) == len(graph.arrows)
        for key, value in expected.items():
            assert loop_element(graph, tree, key) == value
    assert checked >= 5


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def test_centralizer_json():
    obj = centralizer_to_json(centralizer_generators(SIGMA1_SQ))
    assert obj == {
        "case": "TwoOrbits",
        "k": 1,
        "uss_size": 2,
        "conjugator": "D^0",
        "generators": ["1", "D^2"],
    }
    with open(SCHEMA_DIR / "centralizer.schema.json") as f:
        jsonschema.validate(obj, json.load(f))


# ---------------------------------------------------------------------------
# Larger samples
# ---------------------------------------------------------------------------

@pytest.mark.slow
def test_minimal_uss_structure_across_strands():
    checked = 0
    for n in (3, 4, 5):
        for p in (0, 1):
            for x in minimal_samples(n, 6, 30, seed=60 + 2 * n + p, p=p):
                checked += 1
                graph = build_uss_graph(x)
                assert minimal_uss_violations(graph) == []

                orbits = cycling_orbits(graph)
                assert len(orbits) in (1, 2)
                structure = orbit_structure(x)
                if len(orbits) == 1:
                    assert structure.tag in (TAU_SHIFT, TAU_FIXED)
                else:
                    assert structure.tag == TWO_ORBITS
                if structure.tag == TAU_SHIFT:
                    assert structure.k % 2 == 0

                if structure.tag == TWO_ORBITS:
                    graph, tree, expected = _two_orbit_loops(x)
                elif structure.tag == TAU_SHIFT:
                    graph, tree, expected = _tau_shift_loops(x)
                else:
                    expected = {}
                for key, value in expected.items():
                    assert loop_element(graph, tree, key) == value

                output = centralizer_generators(x)
                assert output.case_tag == structure.tag
                assert all(commutes(g, x) for g in output.generators)
    assert checked >= 100


@pytest.mark.slow
def test_centralizer_of_long_non_rigid_orbit():
    y = normalize_ints(6, [-5, -4, 5, 1, 2, 3, -1, 3, 1, -5])
    output = centralizer_generators(y)
    assert output.case_tag == FALLBACK
    assert output.k == 34
    assert output.uss_size >= 34
    assert uss_membership(conjugate(y, output.conjugator), 2)
    assert output.generators
    assert all(commutes(g, y) for g in output.generators)
