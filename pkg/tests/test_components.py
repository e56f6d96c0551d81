import random

import pytest

from gen import random_ap_ac, random_low_degree, random_multigraph, random_simple, union_find_components
from mixedspec import fixtures
from mixedspec.adjacency import associated_graph, integrated_adjacency
from mixedspec.components import (ComponentDomainError, ComponentType, FormulaInapplicableError, decompose,
                                  det_formula, determinant_terms, has_AB_property, has_AC_property,
                                  has_AP_property, is_uniconnected)
from mixedspec.families import FamilySpec, complete_directed, complete_mixed, generate, uniconnected_cycle_witness
from mixedspec.graph import MixedGraph, degree_profiles
from mixedspec.matrix import det_exact


def assoc_components(g):
    base = associated_graph(g).base
    return union_find_components(base.n, list(base.edges))


def test_bijection_and_membership_on_multigraphs():
    rng = random.Random(1)
    for _ in range(100):
        g = random_multigraph(rng, 7)
        dec = decompose(g)
        assert sorted(map(min, (c.assoc_component for c in dec))) == \
            sorted(map(min, assoc_components(g)))
        owner = {}
        for c in dec:
            for arc in c.arcs:
                owner.setdefault(arc, []).append(c)
            for v in c.dloops:
                owner.setdefault((v, v), []).append(c)
        assert all(len(cs) == 1 for cs in owner.values())
        assert set(owner) == set(g.arcs) | {(v, v) for v in g.dloops}
        for v in range(g.n):
            homes = [c for c in dec if v in c.vertices]
            assert len(homes) in (1, 2)
            # one home exactly when both copies share an associated component
            assert (len(homes) == 1) == any(v in c.theta for c in dec)


def test_component_invariants():
    rng = random.Random(2)
    for _ in range(80):
        g = random_multigraph(rng, 6)
        prof = degree_profiles(g)
        base = associated_graph(g).base
        for c in decompose(g):
            assert c.theta <= c.vertices and set(c.omega) <= set(c.edges) | {(v, v) for v in c.loops}
            assert len(c.assoc_component) == len(c.vertices) + len(c.theta)
            inner = sum(m for (a, b), m in base.edges.items() if a in c.assoc_component)
            inner += sum(m for v, m in base.loops.items() if v in c.assoc_component)
            assert inner == c.t
            if c.ctype is ComponentType.I:
                assert all(prof[v].dplus == 0 for v in c.vertices)
            if c.ctype is ComponentType.II:
                assert all(prof[v].dminus == 0 for v in c.vertices)


def test_pure_graph_components_doubled():
    g = MixedGraph.build(5, edges=[(0, 1), (1, 2), (3, 4)])
    dec = decompose(g)
    kinds = sorted(c.ctype.value for c in dec)
    assert kinds == ["I", "I", "II", "II"]
    assert not is_uniconnected(g)


def test_isolated_vertex_gives_two_components():
    dec = decompose(MixedGraph(1))
    assert [c.ctype for c in dec] == [ComponentType.I, ComponentType.II]
    assert all(c.is_AP and not c.is_AC and c.t == 0 for c in dec)


def test_components7_values():
    g = fixtures.load("components7")
    dec = decompose(g)
    assert (len(dec), dec.p, dec.q_ap, dec.l_even) == (7, 4, 3, 2)
    ap = sorted(c.t for c in dec if c.is_AP)
    ac = sorted(c.t for c in dec if c.is_AC)
    assert ap == [1, 1, 3] and ac == [3, 3, 4, 6]
    terms = determinant_terms(g)
    assert terms.value == 0 == det_exact(integrated_adjacency(g)[0])
    assert sorted(terms.ac_even_t) == [4, 6]


def test_altpath_and_altcycle():
    h6 = max(decompose(fixtures.load("altpath")), key=lambda c: c.t)
    assert h6.ctype is ComponentType.III
    assert h6.theta == {0, 1, 2} and h6.omega == {(0, 1): 1} and h6.t == 7
    assert h6.is_AP and not h6.is_AC
    g7 = fixtures.load("altcycle")
    h7 = max(decompose(g7), key=lambda c: c.t)
    assert h7.t == 8 and h7.is_AC and has_AC_property(h7, g7) and not has_AP_property(h7, g7)


def test_membership_checked():
    c = next(iter(decompose(fixtures.load("altpath"))))
    with pytest.raises(ComponentDomainError):
        has_AP_property(c, complete_mixed(2))


def test_uniconnected_examples():
    assert is_uniconnected(complete_directed(3))
    assert is_uniconnected(fixtures.load("uniconnected"))
    assert not is_uniconnected(MixedGraph.build(3, edges=[(0, 1), (1, 2)]))
    rng = random.Random(3)
    for _ in range(50):
        g = random_multigraph(rng, 6)
        assert is_uniconnected(g) == (len(assoc_components(g)) == 1)


def test_ab_property():
    assert has_AB_property(generate(FamilySpec.of("OCA", 4)))
    assert not has_AB_property(complete_mixed(3))
    assert has_AB_property(generate(FamilySpec.of("P", 4)))
    assert not has_AB_property(generate(FamilySpec.of("C", 3)))


def test_det_formula_single_edge():
    g = MixedGraph.build(2, edges=[(0, 1)])
    assert det_formula(g) == 1 == det_exact(integrated_adjacency(g)[0])


def test_det_formula_against_exact():
    rng = random.Random(4)
    for _ in range(60):
        g = random_ap_ac(rng)
        assert det_formula(g) == det_exact(integrated_adjacency(g)[0])
    for _ in range(60):
        g = random_low_degree(rng)
        assert det_formula(g) == det_exact(integrated_adjacency(g)[0])


def test_det_formula_preconditions():
    with pytest.raises(FormulaInapplicableError):
        det_formula(complete_mixed(3))
    with pytest.raises(ComponentDomainError):
        det_formula(MixedGraph.build(1, loops=[0]))
    assert det_formula(uniconnected_cycle_witness(3)) == det_exact(
        integrated_adjacency(uniconnected_cycle_witness(3))[0])
