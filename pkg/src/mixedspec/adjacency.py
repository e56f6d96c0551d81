"""Integrated adjacency matrix and associated graph of a mixed graph.

Rows and columns are ordered ``v'_0..v'_{n-1}, v''_0..v''_{n-1}``, giving the
block layout ``[[A(G_u), A(G_d)], [A(G_d)^T, A(G_u)]]``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .graph import MixedGraph
from .matrix import IntMatrix


class NotIntegratedAdjacencyError(ValueError):
    """Matrix cannot be the integrated adjacency matrix of any mixed graph."""


@dataclass(frozen=True)
class IndexMap:
    """Row ``k`` is ``v'_k`` for ``k < n`` and ``v''_{k-n}`` otherwise."""

    n: int

    def label(self, k: int) -> str:
        if not 0 <= k < 2 * self.n:
            raise IndexError(k)
        return f"v{k}'" if k < self.n else f"v{k - self.n}''"

    def prime(self, v: int) -> int:
        return v

    def double_prime(self, v: int) -> int:
        return v + self.n

    def vertex(self, k: int) -> int:
        """Underlying vertex of row ``k``."""
        return k % self.n

    def labels(self) -> list[str]:
        return [self.label(k) for k in range(2 * self.n)]


@dataclass(frozen=True)
class AssociatedGraph:
    """Undirected multigraph on ``2n`` copies; ``base`` has no arcs."""

    base: MixedGraph
    labels: IndexMap


def integrated_adjacency(g: MixedGraph) -> tuple[IntMatrix, IndexMap]:
    n = g.n
    a = np.zeros((2 * n, 2 * n), dtype=object)
    for (u, v), m in g.edges.items():
        a[u, v] = a[v, u] = m
        a[u + n, v + n] = a[v + n, u + n] = m
    for v, m in g.loops.items():
        a[v, v] = a[v + n, v + n] = 2 * m
    for (u, v), m in g.arcs.items():
        a[u, v + n] = a[v + n, u] = m
    for v, m in g.dloops.items():
        a[v, v + n] = a[v + n, v] = m
    return IntMatrix(a.tolist() if n else ()), IndexMap(n)


def from_integrated(m: IntMatrix, idx: IndexMap | None = None) -> MixedGraph:
    """Recover the unique mixed graph whose integrated adjacency matrix is ``m``.

    Raises
    ------
    NotIntegratedAdjacencyError
        Naming the first violated structural condition.
    """
    rows, cols = m.shape
    if rows != cols or rows % 2:
        raise NotIntegratedAdjacencyError(f"not an integrated adjacency matrix: shape {m.shape} is not 2n x 2n")
    n = rows // 2
    if idx is not None and idx.n != n:
        raise NotIntegratedAdjacencyError(
            f"not an integrated adjacency matrix: index map has n={idx.n}, matrix implies n={n}")
    if any(x < 0 for x in m.entries):
        raise NotIntegratedAdjacencyError("not an integrated adjacency matrix: negative entry")
    if not m.is_symmetric():
        raise NotIntegratedAdjacencyError("not an integrated adjacency matrix: not symmetric")
    for i in range(n):
        for j in range(n):
            if m[i, j] != m[i + n, j + n]:
                raise NotIntegratedAdjacencyError(
                    f"not an integrated adjacency matrix: diagonal blocks differ at ({i}, {j})")
        if m[i, i] % 2:
            raise NotIntegratedAdjacencyError(
                f"not an integrated adjacency matrix: odd diagonal entry at {i}")
    # Off-diagonal blocks are mutually transposed by symmetry, checked above.
    edges, loops, arcs, dloops = Counter(), Counter(), Counter(), Counter()
    for i in range(n):
        loops[i] = m[i, i] // 2
        dloops[i] = m[i, i + n]
        for j in range(n):
            if i < j:
                edges[(i, j)] = m[i, j]
            if i != j:
                arcs[(i, j)] = m[i, j + n]
    return MixedGraph(n, edges, loops, arcs, dloops)


def associated_graph(g: MixedGraph) -> AssociatedGraph:
    """The undirected graph ``G^A`` on ``2n`` vertices with ``A(G^A) = I(G)``.

    Edges ``u~v`` appear in both halves, loops at both copies, an arc
    ``u->v`` becomes the edge ``{u', v''}`` and a directed loop at ``v``
    becomes ``{v', v''}``.
    """
    n = g.n
    edges, loops = Counter(), Counter()
    for (u, v), m in g.edges.items():
        edges[(u, v)] += m
        edges[(u + n, v + n)] += m
    for v, m in g.loops.items():
        loops[v] += m
        loops[v + n] += m
    for (u, v), m in g.arcs.items():
        edges[(u, v + n)] += m
    for v, m in g.dloops.items():
        edges[(v, v + n)] += m
    return AssociatedGraph(MixedGraph(2 * n, edges, loops), IndexMap(n))


def undirected_adjacency(g: MixedGraph) -> IntMatrix:
    """``A(G_u)``: edge multiplicities off the diagonal, twice the loop count on it."""
    return IntMatrix([[2 * g.loops.get(i, 0) if i == j else g.edge_mult(i, j) for j in range(g.n)]
                      for i in range(g.n)])


def directed_adjacency(g: MixedGraph) -> IntMatrix:
    """``A(G_d)``: entry ``(i, j)`` counts arcs ``i -> j`` (directed loops on the diagonal)."""
    return IntMatrix([[g.arc_mult(i, j) for j in range(g.n)] for i in range(g.n)])
