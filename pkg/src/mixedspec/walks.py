"""Alternating walks in mixed graphs.

A walk lists vertices and the elements traversed between them.  An element
is an :class:`Edge` or an :class:`Arc`; an arc is traversed *forward* when
the walk moves from its tail to its head and *backward* otherwise.  A
directed loop fits either direction.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .adjacency import integrated_adjacency
from .graph import MixedGraph, is_simple
from .matrix import power


class ResourceLimitError(RuntimeError):
    """Exhaustive search exceeded its configured budget."""


class WalkDomainError(ValueError):
    pass


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        return cls(min(a, b), max(a, b))


class Arc(NamedTuple):
    tail: int
    head: int


FORWARD, BACKWARD, FREE = 1, -1, 0


@dataclass(frozen=True)
class Walk:
    """``vertices[i]`` and ``vertices[i+1]`` are the ends of ``elements[i]``."""

    vertices: tuple[int, ...]
    elements: tuple[Edge | Arc, ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.elements) + 1:
            raise WalkDomainError("a walk has one more vertex than elements")
        for k, el in enumerate(self.elements):
            a, b = self.vertices[k], self.vertices[k + 1]
            ends = (el.u, el.v) if isinstance(el, Edge) else (el.tail, el.head)
            if {a, b} != set(ends):
                raise WalkDomainError(f"step {k}: {el} does not join {a} and {b}")

    @classmethod
    def from_sequence(cls, seq: Sequence) -> "Walk":
        """Build from ``v0, el0, v1, el1, ..., vk``.

        Edges may be given as a set ``{a, b}`` and arcs as a tuple ``(a, b)``,
        matching the usual written notation.
        """
        verts = list(seq[0::2])
        els = []
        for el in seq[1::2]:
            if isinstance(el, (Edge, Arc)):
                els.append(el)
            elif isinstance(el, (set, frozenset)):
                pair = sorted(el)
                els.append(Edge.of(pair[0], pair[-1]))
            else:
                els.append(Arc(*el))
        return cls(tuple(verts), tuple(els))

    def __len__(self):
        return len(self.elements)

    @property
    def closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    def arc_directions(self) -> list[int]:
        """``FORWARD``/``BACKWARD`` per arc in order; ``FREE`` for directed loops."""
        out = []
        for k, el in enumerate(self.elements):
            if isinstance(el, Arc):
                if el.tail == el.head:
                    out.append(FREE)
                else:
                    out.append(FORWARD if self.vertices[k] == el.tail else BACKWARD)
        return out


def _alternation_sign(dirs: list[int]) -> int | None:
    # Direction of arc k must be s * (-1)**k for one s; return s or None.
    signs = {d * (-1) ** k for k, d in enumerate(dirs) if d != FREE}
    if len(signs) > 1:
        return None
    return signs.pop() if signs else FORWARD


def is_alternating(w: Walk) -> bool:
    """At least one arc, and arc directions alternate from the first arc on."""
    dirs = w.arc_directions()
    return bool(dirs) and _alternation_sign(dirs) is not None


def _arcs_between(w: Walk, lo: int, hi: int) -> int:
    return sum(isinstance(el, Arc) for el in w.elements[lo:hi])


def _edges_and_arcs_ok(w: Walk) -> bool:
    # Keyed by kind too: Edge(0, 1) == Arc(0, 1) as plain tuples.
    positions: dict = {}
    for k, el in enumerate(w.elements):
        positions.setdefault((type(el), el), []).append(k)
    for (kind, _), pos in positions.items():
        if kind is Arc:
            if len(pos) != 1:
                return False
        else:
            if len(pos) > 2:
                return False
            if len(pos) == 2 and _arcs_between(w, pos[0] + 1, pos[1]) % 2 == 0:
                return False
    return True


def _require_alternating(w: Walk):
    if not is_alternating(w):
        raise WalkDomainError("walk is not alternating")


def is_alternating_path(w: Walk) -> bool:
    """Vertices and edges at most twice with an odd number of arcs between
    repeats, and no arc used twice."""
    _require_alternating(w)
    positions: dict[int, list[int]] = {}
    for k, v in enumerate(w.vertices):
        positions.setdefault(v, []).append(k)
    for pos in positions.values():
        if len(pos) > 2:
            return False
        if len(pos) == 2 and _arcs_between(w, pos[0], pos[1]) % 2 == 0:
            return False
    return _edges_and_arcs_ok(w)


def is_alternating_cycle(w: Walk) -> bool:
    """Closed alternating walk meeting the edge and arc conditions of a path."""
    _require_alternating(w)
    return w.closed and _edges_and_arcs_ok(w)


class WalkClass(enum.Enum):
    NoArc = "NoArc"
    EvenArcsFirstForward = "EvenArcsFirstForward"
    OddArcsFirstForward = "OddArcsFirstForward"
    OddArcsFirstBackward = "OddArcsFirstBackward"
    EvenArcsFirstBackward = "EvenArcsFirstBackward"


DEFAULT_BUDGET = 10 ** 7


def _classify(first: int, arcs: int) -> WalkClass:
    if arcs == 0:
        return WalkClass.NoArc
    even = arcs % 2 == 0
    if first == FORWARD:
        return WalkClass.EvenArcsFirstForward if even else WalkClass.OddArcsFirstForward
    return WalkClass.EvenArcsFirstBackward if even else WalkClass.OddArcsFirstBackward


def classified_walk_counts(g: MixedGraph, i: int, k: int,
                           budget: int = DEFAULT_BUDGET) -> dict[int, Counter]:
    """Enumerate every walk of length ``k`` from ``i`` that is arc-free or
    alternating, bucketed by end vertex and :class:`WalkClass`.

    Depth-first over the elements of ``g``; a prefix whose latest arc
    repeats the previous direction is abandoned.
    """
    if not is_simple(g):
        raise WalkDomainError("walk enumeration requires a simple mixed graph")
    if not 0 <= i < g.n:
        raise WalkDomainError(f"vertex {i} out of range")
    steps: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for (a, b) in g.edges:
        steps[a].append((b, FREE))
        steps[b].append((a, FREE))
    for (a, b) in g.arcs:
        steps[a].append((b, FORWARD))
        steps[b].append((a, BACKWARD))

    result: dict[int, Counter] = {}
    visited = 0
    # (vertex, first arc direction, last arc direction, arcs so far, depth)
    stack = [(i, FREE, FREE, 0, 0)]
    while stack:
        v, first, last, arcs, depth = stack.pop()
        if depth == k:
            result.setdefault(v, Counter())[_classify(first, arcs)] += 1
            continue
        for nxt, d in steps[v]:
            if d == FREE:
                stack.append((nxt, first, last, arcs, depth + 1))
            elif d != last:
                stack.append((nxt, first if arcs else d, d, arcs + 1, depth + 1))
            else:
                continue
            visited += 1
            if visited > budget:
                raise ResourceLimitError(f"walk enumeration exceeded budget of {budget} extensions")
    return result


def count_classified(g: MixedGraph, i: int, j: int, k: int,
                     budget: int = DEFAULT_BUDGET) -> dict[WalkClass, int]:
    """Counts of length-``k`` walks from ``i`` to ``j`` per :class:`WalkClass`."""
    if not 0 <= j < g.n:
        raise WalkDomainError(f"vertex {j} out of range")
    found = classified_walk_counts(g, i, k, budget).get(j, Counter())
    return {c: found.get(c, 0) for c in WalkClass}


def matrix_walk_entries(g: MixedGraph, i: int, j: int, k: int) -> dict[str, int]:
    """The four entries of ``I(G)**k`` at ``(v'_i, v'_j)``, ``(v'_i, v''_j)``,
    ``(v''_i, v'_j)`` and ``(v''_i, v''_j)``."""
    m, _ = integrated_adjacency(g)
    p = power(m, k)
    n = g.n
    return {"pp": p[i, j], "pd": p[i, j + n], "dp": p[i + n, j], "dd": p[i + n, j + n]}


def walk_theorem_sums(counts: dict[WalkClass, int]) -> dict[str, int]:
    """Combine classified counts into the four block entries they should equal."""
    return {
        "pp": counts[WalkClass.NoArc] + counts[WalkClass.EvenArcsFirstForward],
        "pd": counts[WalkClass.OddArcsFirstForward],
        "dp": counts[WalkClass.OddArcsFirstBackward],
        "dd": counts[WalkClass.NoArc] + counts[WalkClass.EvenArcsFirstBackward],
    }
