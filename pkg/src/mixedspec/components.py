"""Mixed components, found through the components of the associated graph.

Each connected component ``C`` of ``G^A`` corresponds to one mixed
component ``H``: a component inside the ``v'`` half is Type I, inside the
``v''`` half Type II, and one meeting both halves is Type III.  A vertex of
``H`` lies in ``Theta_H`` when both of its copies are in ``C``; likewise an
edge lies in ``Omega_H`` when both of its copies are.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from collections import deque

from .adjacency import associated_graph
from .graph import MixedGraph, is_simple


class ComponentDomainError(ValueError):
    pass


class FormulaInapplicableError(ComponentDomainError):
    """Some mixed component has neither the AP nor the AC property."""


class ComponentType(enum.Enum):
    I = "I"
    II = "II"
    III = "III"


@dataclass(frozen=True)
class MixedComponent:
    vertices: frozenset[int]
    edges: dict
    loops: dict
    arcs: dict
    dloops: dict
    ctype: ComponentType
    assoc_component: frozenset[int]
    theta: frozenset[int]
    omega: dict
    t: int
    is_AP: bool
    is_AC: bool

    @property
    def t_even(self) -> bool:
        return self.t % 2 == 0

    def __hash__(self):
        return hash(self.assoc_component)

    def as_graph(self, n: int) -> MixedGraph:
        """This component as a submixed graph on the parent's vertex ids."""
        return MixedGraph(n, self.edges, self.loops, self.arcs, self.dloops)


@dataclass(frozen=True)
class Decomposition:
    components: tuple[MixedComponent, ...]
    p: int
    q_ap: int
    l_even: int

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)


def _neighbours(base: MixedGraph) -> list[list[tuple[int, int]]]:
    # (neighbour, multiplicity); loops appear once at their vertex.
    nb: list[list[tuple[int, int]]] = [[] for _ in range(base.n)]
    for (a, b), m in base.edges.items():
        nb[a].append((b, m))
        nb[b].append((a, m))
    for v, m in base.loops.items():
        nb[v].append((v, m))
    return nb


def connected_components(base: MixedGraph) -> list[frozenset[int]]:
    """Connected components of an undirected multigraph, by breadth-first search,
    ordered by smallest vertex."""
    nb = _neighbours(base)
    seen = [False] * base.n
    comps = []
    for s in range(base.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            v = queue.popleft()
            for w, _ in nb[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def _shape(base: MixedGraph, comp: frozenset[int]) -> tuple[int, int, dict[int, int]]:
    """(vertex count, edge count with loops once, degree with loops twice)."""
    deg = {v: 0 for v in comp}
    edges = 0
    for (a, b), m in base.edges.items():
        if a in comp:
            deg[a] += m
            deg[b] += m
            edges += m
    for v, m in base.loops.items():
        if v in comp:
            deg[v] += 2 * m
            edges += m
    return len(comp), edges, deg


def _is_path(base, comp) -> bool:
    nv, ne, deg = _shape(base, comp)
    return ne == nv - 1 and all(d <= 2 for d in deg.values())


def _is_cycle(base, comp) -> bool:
    nv, ne, deg = _shape(base, comp)
    return ne == nv and all(d == 2 for d in deg.values())


def _component(g: MixedGraph, base: MixedGraph, comp: frozenset[int]) -> MixedComponent:
    n = g.n
    primes = {v for v in comp if v < n}
    doubles = {v - n for v in comp if v >= n}
    vertices = frozenset(primes | doubles)
    theta = frozenset(primes & doubles)
    edges, omega, loops = {}, {}, {}
    for (a, b), m in g.edges.items():
        copies = (a in primes) + (a in doubles)
        if copies:
            edges[(a, b)] = m
            if copies == 2:
                omega[(a, b)] = m
    for v, m in g.loops.items():
        copies = (v in primes) + (v in doubles)
        if copies:
            loops[v] = m
            if copies == 2:
                omega[(v, v)] = m
    arcs = {k: m for k, m in g.arcs.items() if k[0] in primes}
    dloops = {v: m for v, m in g.dloops.items() if v in primes}
    if not doubles:
        ctype = ComponentType.I
    elif not primes:
        ctype = ComponentType.II
    else:
        ctype = ComponentType.III
    t = (sum(edges.values()) + sum(loops.values()) + sum(omega.values())
         + sum(arcs.values()) + sum(dloops.values()))
    return MixedComponent(vertices, edges, loops, arcs, dloops, ctype, comp, theta, omega, t,
                          _is_path(base, comp), _is_cycle(base, comp))


def decompose(g: MixedGraph) -> Decomposition:
    """All mixed components of ``g`` (a multiset: an arc-free component of
    ``G_u`` with no incident arcs appears once as Type I and once as Type II)."""
    base = associated_graph(g).base
    comps = tuple(_component(g, base, c) for c in connected_components(base))
    p = sum(c.is_AC for c in comps)
    q = sum(c.is_AP for c in comps)
    l_even = sum(c.is_AC and c.t_even for c in comps)
    return Decomposition(comps, p, q, l_even)


def is_uniconnected(g: MixedGraph) -> bool:
    """Exactly one mixed component, i.e. ``G^A`` connected."""
    return len(connected_components(associated_graph(g).base)) == 1


def two_coloring(base: MixedGraph) -> list[int] | None:
    """A proper 2-colouring of an undirected multigraph, or ``None`` if it has an odd cycle."""
    if base.loops:
        return None
    nb = _neighbours(base)
    color = [-1] * base.n
    for s in range(base.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w, _ in nb[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def has_AB_property(g: MixedGraph) -> bool:
    """No odd cycle and no odd alternating cycle with an even number of arcs;
    decided by two-colouring ``G^A``."""
    return two_coloring(associated_graph(g).base) is not None


def _check_membership(c: MixedComponent, g: MixedGraph) -> MixedGraph:
    base = associated_graph(g).base
    if c.assoc_component not in set(connected_components(base)):
        raise ComponentDomainError("component does not belong to this graph")
    return base


def has_AP_property(c: MixedComponent, g: MixedGraph) -> bool:
    """The associated component of ``c`` is a path."""
    return _is_path(_check_membership(c, g), c.assoc_component)


def has_AC_property(c: MixedComponent, g: MixedGraph) -> bool:
    """The associated component of ``c`` is a cycle."""
    return _is_cycle(_check_membership(c, g), c.assoc_component)


@dataclass(frozen=True)
class DeterminantTerms:
    """Quantities entering the closed-form determinant."""

    n: int
    p: int
    ap_t: tuple[int, ...]
    ac_even_t: tuple[int, ...]
    ac_odd_t: tuple[int, ...]
    value: int


def determinant_terms(g: MixedGraph) -> DeterminantTerms:
    if not is_simple(g):
        raise ComponentDomainError("determinant formula requires a simple mixed graph")
    dec = decompose(g)
    bad = [c for c in dec if not (c.is_AP or c.is_AC)]
    if bad:
        raise FormulaInapplicableError(
            f"formula inapplicable: {len(bad)} mixed component(s) have neither AP nor AC property")
    ap = tuple(c.t for c in dec if c.is_AP)
    ac_even = tuple(c.t for c in dec if c.is_AC and c.t_even)
    ac_odd = tuple(c.t for c in dec if c.is_AC and not c.t_even)
    n, p = g.n, dec.p
    if any(t % 2 == 0 for t in ap):
        value = 0
    else:
        exponent = 2 * n - p - sum((t + 1) // 2 for t in ap)
        total = 0
        for size in range(len(ac_even) + 1):
            for subset in combinations(ac_even, size):
                total += (-1) ** ((size - sum(t // 2 for t in subset)) % 2)
        value = 2 ** p * (-1) ** (exponent % 2) * total
    return DeterminantTerms(n, p, ap, ac_even, ac_odd, value)


def det_formula(g: MixedGraph) -> int:
    """Closed-form ``det I(G)`` for simple ``g`` whose mixed components all
    have the AP or AC property.

    Zero if some AP component has even ``t``; otherwise
    ``2^p (-1)^(2n - p - sum (t(F)+1)/2) * sum_S (-1)^(|S| - sum_{i in S} t(H_i)/2)``
    over subsets ``S`` of the even-``t`` AC components.
    """
    return determinant_terms(g).value
