"""Mixed multigraphs: edges, arcs, loops and directed loops with multiplicity.

Vertices are the integers ``0..n-1``.  Edges are stored under the key
``(u, v)`` with ``u < v``; arcs under ``(tail, head)`` with ``tail != head``.
Loops and directed loops live in their own per-vertex maps so every
multiset key of ``edges``/``arcs`` joins two distinct vertices.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple


class GraphDomainError(ValueError):
    """Raised when an operation receives an element that is not in the graph."""


class DegreeProfile(NamedTuple):
    d: int
    dplus: int
    dminus: int
    l: int


def _canonical(counter: Mapping, check) -> dict:
    out = {}
    for key in sorted(counter):
        m = counter[key]
        if m < 0:
            raise GraphDomainError(f"negative multiplicity {m} for {key!r}")
        if m:
            check(key)
            out[key] = int(m)
    return out


@dataclass(frozen=True)
class MixedGraph:
    """Immutable mixed multigraph in canonical form.

    Use :meth:`build` to construct from element lists; the raw constructor
    accepts multiplicity maps and canonicalises them.
    """

    n: int
    edges: Mapping[tuple[int, int], int] = field(default_factory=dict)
    loops: Mapping[int, int] = field(default_factory=dict)
    arcs: Mapping[tuple[int, int], int] = field(default_factory=dict)
    dloops: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        n = self.n
        if n < 0:
            raise GraphDomainError("vertex count must be nonnegative")

        def vertex(v):
            if not 0 <= v < n:
                raise GraphDomainError(f"vertex {v} out of range for n={n}")

        def pair(key):
            u, v = key
            vertex(u)
            vertex(v)
            if u == v:
                raise GraphDomainError(f"pair {key} joins a vertex to itself")

        edges = Counter()
        for (u, v), m in dict(self.edges).items():
            edges[(min(u, v), max(u, v))] += m
        object.__setattr__(self, "edges", _canonical(edges, pair))
        object.__setattr__(self, "arcs", _canonical(Counter(dict(self.arcs)), pair))
        object.__setattr__(self, "loops", _canonical(Counter(dict(self.loops)), vertex))
        object.__setattr__(self, "dloops", _canonical(Counter(dict(self.dloops)), vertex))

    @classmethod
    def build(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        arcs: Iterable[tuple[int, int]] = (),
        loops: Iterable[int] = (),
        dloops: Iterable[int] = (),
    ) -> "MixedGraph":
        """Build from element lists; repeats accumulate multiplicity.

        A pair ``(v, v)`` in ``edges`` is read as a loop and in ``arcs`` as a
        directed loop.

        >>> g = MixedGraph.build(3, edges=[(1, 0), (0, 1)], arcs=[(2, 2)])
        >>> g.edges, g.dloops
        ({(0, 1): 2}, {2: 1})
        """
        e, a, lo, dl = Counter(), Counter(), Counter(loops), Counter(dloops)
        for u, v in edges:
            if u == v:
                lo[u] += 1
            else:
                e[(min(u, v), max(u, v))] += 1
        for u, v in arcs:
            if u == v:
                dl[u] += 1
            else:
                a[(u, v)] += 1
        return cls(n, e, lo, a, dl)

    def __hash__(self):
        return hash((self.n, *(tuple(m.items()) for m in
                               (self.edges, self.loops, self.arcs, self.dloops))))

    def __repr__(self):
        parts = [f"n={self.n}"]
        for name in ("edges", "loops", "arcs", "dloops"):
            m = getattr(self, name)
            if m:
                parts.append(f"{name}={m}")
        return f"MixedGraph({', '.join(parts)})"

    def edge_mult(self, u: int, v: int) -> int:
        if u == v:
            return self.loops.get(u, 0)
        return self.edges.get((min(u, v), max(u, v)), 0)

    def arc_mult(self, u: int, v: int) -> int:
        if u == v:
            return self.dloops.get(u, 0)
        return self.arcs.get((u, v), 0)

    def undirected_part(self) -> "MixedGraph":
        return MixedGraph(self.n, self.edges, self.loops)

    def directed_part(self) -> "MixedGraph":
        return MixedGraph(self.n, arcs=self.arcs, dloops=self.dloops)

    def with_elements(self, n=None, edges=(), arcs=(), loops=(), dloops=()) -> "MixedGraph":
        """Return a copy with extra elements (and optionally more vertices)."""
        extra = MixedGraph.build(self.n if n is None else n, edges, arcs, loops, dloops)
        if extra.n < self.n:
            raise GraphDomainError("cannot shrink the vertex set")
        return MixedGraph(
            extra.n,
            Counter(self.edges) + Counter(extra.edges),
            Counter(self.loops) + Counter(extra.loops),
            Counter(self.arcs) + Counter(extra.arcs),
            Counter(self.dloops) + Counter(extra.dloops),
        )


def _check_vertex(g: MixedGraph, v: int):
    if not 0 <= v < g.n:
        raise GraphDomainError(f"vertex {v} out of range for n={g.n}")


def degree_profile(g: MixedGraph, v: int) -> DegreeProfile:
    """Undirected degree (loops twice), out/in-degree (directed loops in both), loops."""
    _check_vertex(g, v)
    d = 2 * g.loops.get(v, 0)
    d += sum(m for (a, b), m in g.edges.items() if v in (a, b))
    dl = g.dloops.get(v, 0)
    dplus = dl + sum(m for (a, _), m in g.arcs.items() if a == v)
    dminus = dl + sum(m for (_, b), m in g.arcs.items() if b == v)
    return DegreeProfile(d, dplus, dminus, g.loops.get(v, 0))


def degree_profiles(g: MixedGraph) -> list[DegreeProfile]:
    """All profiles in one pass over the element maps."""
    d = [0] * g.n
    dp = [0] * g.n
    dm = [0] * g.n
    for (a, b), m in g.edges.items():
        d[a] += m
        d[b] += m
    for v, m in g.loops.items():
        d[v] += 2 * m
    for (a, b), m in g.arcs.items():
        dp[a] += m
        dm[b] += m
    for v, m in g.dloops.items():
        dp[v] += m
        dm[v] += m
    return [DegreeProfile(d[v], dp[v], dm[v], g.loops.get(v, 0)) for v in range(g.n)]


def counts(g: MixedGraph) -> tuple[int, int, int, int]:
    """``(e, a, l, dl)``: edges without loops, arcs including directed loops,
    loops, directed loops."""
    dl = sum(g.dloops.values())
    return (sum(g.edges.values()), sum(g.arcs.values()) + dl, sum(g.loops.values()), dl)


def is_simple(g: MixedGraph) -> bool:
    return (not g.loops and not g.dloops
            and all(m == 1 for m in g.edges.values())
            and all(m == 1 for m in g.arcs.values()))


def induced_submixed(g: MixedGraph, vs: Iterable[int]) -> tuple[MixedGraph, dict[int, int]]:
    """Maximal submixed graph on ``vs``, relabelled ``0..len(vs)-1`` in increasing order.

    Returns the subgraph and the map old id -> new id.
    """
    keep = sorted(set(vs))
    for v in keep:
        _check_vertex(g, v)
    relabel = {v: i for i, v in enumerate(keep)}

    def pairs(m):
        return {(relabel[a], relabel[b]): k for (a, b), k in m.items()
                if a in relabel and b in relabel}

    def single(m):
        return {relabel[v]: k for v, k in m.items() if v in relabel}

    h = MixedGraph(len(keep), pairs(g.edges), single(g.loops), pairs(g.arcs), single(g.dloops))
    return h, relabel


def delete_vertex(g: MixedGraph, v: int) -> MixedGraph:
    """``G - v``; vertices above ``v`` shift down by one."""
    _check_vertex(g, v)
    return induced_submixed(g, (u for u in range(g.n) if u != v))[0]


def delete_edge(g: MixedGraph, u: int, v: int) -> MixedGraph:
    """Remove one copy of edge ``{u, v}`` (a loop if ``u == v``)."""
    if g.edge_mult(u, v) == 0:
        raise GraphDomainError(f"edge {{{u}, {v}}} not in graph")
    if u == v:
        loops = Counter(g.loops)
        loops[u] -= 1
        return MixedGraph(g.n, g.edges, loops, g.arcs, g.dloops)
    edges = Counter(g.edges)
    edges[(min(u, v), max(u, v))] -= 1
    return MixedGraph(g.n, edges, g.loops, g.arcs, g.dloops)


def delete_arc(g: MixedGraph, u: int, v: int) -> MixedGraph:
    """Remove one copy of arc ``(u, v)`` (a directed loop if ``u == v``)."""
    if g.arc_mult(u, v) == 0:
        raise GraphDomainError(f"arc ({u}, {v}) not in graph")
    if u == v:
        dloops = Counter(g.dloops)
        dloops[u] -= 1
        return MixedGraph(g.n, g.edges, g.loops, g.arcs, dloops)
    arcs = Counter(g.arcs)
    arcs[(u, v)] -= 1
    return MixedGraph(g.n, g.edges, g.loops, arcs, g.dloops)


def add_edge(g: MixedGraph, u: int, v: int) -> MixedGraph:
    return g.with_elements(edges=[(u, v)])


def add_arc(g: MixedGraph, u: int, v: int) -> MixedGraph:
    return g.with_elements(arcs=[(u, v)])


def disjoint_union(*graphs: MixedGraph) -> MixedGraph:
    """Place the graphs side by side, offsetting vertex ids in order."""
    e, lo, a, dl = Counter(), Counter(), Counter(), Counter()
    off = 0
    for g in graphs:
        for (u, v), m in g.edges.items():
            e[(u + off, v + off)] += m
        for (u, v), m in g.arcs.items():
            a[(u + off, v + off)] += m
        for v, m in g.loops.items():
            lo[v + off] += m
        for v, m in g.dloops.items():
            dl[v + off] += m
        off += g.n
    return MixedGraph(off, e, lo, a, dl)
