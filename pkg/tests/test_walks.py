import random
from collections import Counter

import pytest

from gen import random_simple
from mixedspec.adjacency import undirected_adjacency
from mixedspec.families import FamilySpec, generate
from mixedspec.graph import MixedGraph
from mixedspec.matrix import power
from mixedspec.walks import (BACKWARD, FORWARD, Arc, Edge, ResourceLimitError, Walk, WalkClass, WalkDomainError,
                             classified_walk_counts, count_classified, is_alternating, is_alternating_cycle,
                             is_alternating_path, matrix_walk_entries, walk_theorem_sums)


def all_walks(g: MixedGraph, i: int, k: int):
    """Every walk of length k from i, built element by element as Walk objects."""
    elements = [Edge(*e) for e in g.edges] + [Arc(*a) for a in g.arcs]

    def extend(verts, els):
        if len(els) == k:
            yield Walk(tuple(verts), tuple(els))
            return
        v = verts[-1]
        for el in elements:
            ends = (el.u, el.v) if isinstance(el, Edge) else (el.tail, el.head)
            if v in ends:
                w = ends[1] if ends[0] == v else ends[0]
                yield from extend(verts + [w], els + [el])

    yield from extend([i], [])


def oracle_counts(g, i, j, k):
    out = Counter()
    for w in all_walks(g, i, k):
        if w.vertices[-1] != j:
            continue
        dirs = w.arc_directions()
        if not dirs:
            out[WalkClass.NoArc] += 1
        elif is_alternating(w):
            even = len(dirs) % 2 == 0
            if dirs[0] == FORWARD:
                out[WalkClass.EvenArcsFirstForward if even else WalkClass.OddArcsFirstForward] += 1
            else:
                out[WalkClass.EvenArcsFirstBackward if even else WalkClass.OddArcsFirstBackward] += 1
    return {c: out.get(c, 0) for c in WalkClass}


# Component of altpath: edge {0,1}; arcs 1->2, 2->3, 4->3, 4->0; directed loop at 2.
ALT_PATH = [0, {0, 1}, 1, (1, 2), 2, (2, 2), 2, (2, 3), 3, (4, 3), 4, (4, 0), 0, {0, 1}, 1]
ALT_CYCLE = ALT_PATH + [(0, 1), 0]


def test_walk_construction():
    w = Walk.from_sequence(ALT_PATH)
    assert len(w) == 7 and not w.closed
    assert w.arc_directions() == [FORWARD, 0, FORWARD, BACKWARD, FORWARD]
    with pytest.raises(WalkDomainError):
        Walk.from_sequence([0, {1, 2}, 2])


def test_alternation():
    fwd = Walk.from_sequence([0, (0, 1), 1, (2, 1), 2, (2, 3), 3])
    assert is_alternating(fwd)
    assert not is_alternating(Walk.from_sequence([0, (0, 1), 1, (1, 2), 2]))
    assert not is_alternating(Walk.from_sequence([0, {0, 1}, 1]))
    assert is_alternating(Walk.from_sequence([1, (0, 1), 0, {0, 2}, 2, (2, 3), 3]))


def test_alternating_path_and_cycle():
    path = Walk.from_sequence(ALT_PATH)
    assert is_alternating(path) and is_alternating_path(path)
    cycle = Walk.from_sequence(ALT_CYCLE)
    assert len(cycle) == 8 and is_alternating_cycle(cycle)


def test_path_conditions():
    # vertex 1 repeats with two arcs between its visits
    w = Walk.from_sequence([1, (1, 2), 2, (3, 2), 3, {1, 3}, 1])
    assert is_alternating(w) and not is_alternating_path(w)
    # three arcs between the visits is allowed
    w = Walk.from_sequence([0, (0, 1), 1, (2, 1), 2, (2, 3), 3, (1, 3), 1])
    assert is_alternating_path(w)
    # an edge and an arc on the same pair are different elements
    w = Walk.from_sequence([0, (0, 1), 1, {0, 1}, 0])
    assert is_alternating_path(w) and is_alternating_cycle(w)
    # the same arc used twice
    w = Walk.from_sequence([0, (0, 1), 1, {1, 2}, 2, {1, 2}, 1, (0, 1), 0])
    assert is_alternating(w) and not is_alternating_path(w)
    with pytest.raises(WalkDomainError):
        is_alternating_path(Walk.from_sequence([0, {0, 1}, 1]))
    with pytest.raises(WalkDomainError):
        is_alternating_cycle(Walk.from_sequence([0, {0, 1}, 1, {0, 1}, 0]))


def test_zero_length():
    g = generate(FamilySpec.of("KM", 3))
    got = count_classified(g, 1, 1, 0)
    assert got[WalkClass.NoArc] == 1 and sum(got.values()) == 1
    assert sum(count_classified(g, 1, 2, 0).values()) == 0


def test_oriented_path_entries():
    g = generate(FamilySpec.of("OPS", 3))
    got = count_classified(g, 0, 2, 2)
    assert sum(got.values()) == 0
    assert matrix_walk_entries(g, 0, 2, 2) == walk_theorem_sums(got)
    # 0 -> 1 <- ... : the alternating orientation has a forward-backward walk
    h = generate(FamilySpec.of("OPA", 3))
    got = count_classified(h, 0, 2, 2)
    assert got[WalkClass.EvenArcsFirstForward] == 1
    assert matrix_walk_entries(h, 0, 2, 2)["pp"] == 1


def test_against_element_oracle_and_matrix():
    rng = random.Random(4)
    for _ in range(25):
        g = random_simple(rng, 4)
        k = rng.randint(0, 4)
        for i in range(g.n):
            for j in range(g.n):
                got = count_classified(g, i, j, k)
                assert got == oracle_counts(g, i, j, k)
                assert walk_theorem_sums(got) == matrix_walk_entries(g, i, j, k)


def test_arcs_removed_reduces_to_adjacency_powers():
    rng = random.Random(6)
    g = random_simple(rng, 5, 5)
    pure = MixedGraph(g.n, g.edges)
    au = power(undirected_adjacency(pure), 3)
    for i in range(g.n):
        for j in range(g.n):
            got = count_classified(pure, i, j, 3)
            assert got[WalkClass.NoArc] == au[i, j]


def test_budget_and_preconditions():
    g = generate(FamilySpec.of("KM", 5))
    with pytest.raises(ResourceLimitError):
        classified_walk_counts(g, 0, 6, budget=1000)
    with pytest.raises(WalkDomainError):
        count_classified(MixedGraph.build(2, loops=[0]), 0, 1, 2)
    with pytest.raises(WalkDomainError):
        count_classified(g, 0, 9, 2)
