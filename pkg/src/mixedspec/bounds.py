"""Eigenvalue bounds for integrated adjacency spectra, with exact
independence and clique numbers for small graphs.

Every inequality is reported as a :class:`Bound` holding both sides and the
slack ``rhs - lhs`` so callers can see how tight it is.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .adjacency import associated_graph
from .components import is_uniconnected
from .graph import MixedGraph, degree_profiles, delete_arc, delete_vertex, counts, induced_submixed, is_simple
from .spectra import CHECK_TOL, PreconditionError, spectral_radius_split, spectrum
from .walks import ResourceLimitError

EXACT_LIMIT = 15


@dataclass(frozen=True)
class Bound:
    """``lhs <= rhs`` (or ``<`` when ``strict``)."""

    name: str
    lhs: float
    rhs: float
    strict: bool = False

    @property
    def slack(self) -> float:
        return float(self.rhs - self.lhs)

    @property
    def holds(self) -> bool:
        return self.slack > 0 if self.strict else self.slack >= -CHECK_TOL


@dataclass(frozen=True)
class BoundsReport:
    delta1: int
    delta2: int
    sdelta1: int
    sdelta2: int
    lambda1: float
    lambda2: float
    lambda_2nminus1: float
    lambda_2n: float
    bounds: list[Bound] = field(default_factory=list)
    alpha: int | None = None
    omega: int | None = None
    alpha_bound: float | None = None
    omega_bound: float | None = None

    @property
    def holds(self) -> bool:
        return all(b.holds for b in self.bounds)

    def failed(self) -> list[Bound]:
        return [b for b in self.bounds if not b.holds]


def _require_simple(g: MixedGraph):
    if not is_simple(g):
        raise PreconditionError("bounds require a simple mixed graph")


def _degrees(g: MixedGraph) -> tuple[int, int, int, int]:
    prof = degree_profiles(g)
    s1 = [p.d + p.dplus for p in prof]
    s2 = [p.d + p.dminus for p in prof]
    return max(s1), max(s2), min(s1), min(s2)


def degree_bounds(g: MixedGraph) -> BoundsReport:
    """Degree, edge/arc-count and spectral radius bounds on the extreme eigenvalues."""
    _require_simple(g)
    if g.n == 0:
        return BoundsReport(0, 0, 0, 0, 0.0, 0.0, 0.0, 0.0, [])
    n = g.n
    e, a, _, _ = counts(g)
    D1, D2, d1, d2 = _degrees(g)
    lam = spectrum(g).eigenvalues
    top = max(D1, D2)
    bounds = [Bound("|lambda| <= max(Delta1, Delta2)", float(np.max(np.abs(lam))), top),
              Bound("min(delta1, delta2) <= (delta1 + delta2)/2", min(d1, d2), (d1 + d2) / 2),
              Bound("(delta1 + delta2)/2 <= lambda_1", (d1 + d2) / 2, lam[0]),
              Bound("lambda_1 <= max(Delta1, Delta2)", lam[0], top),
              Bound("lambda_{2n-1} <= (2e + a)/n", lam[-2], (2 * e + a) / n),
              Bound("(2e + a)/n <= lambda_1", (2 * e + a) / n, lam[0]),
              Bound("lambda_{2n} <= (2e - a)/n", lam[-1], (2 * e - a) / n),
              Bound("(2e - a)/n <= lambda_2", (2 * e - a) / n, lam[1]),
              Bound("lambda_1 <= sqrt((2n - 1)(2e + a)/n)", lam[0],
                    math.sqrt((2 * n - 1) * (2 * e + a) / n))]
    split, radius_u = spectral_radius_split(g)
    bounds.append(Bound("lambda_1 + lambda_2n <= 2 lambda_1(G_u)", split, radius_u))
    return BoundsReport(D1, D2, d1, d2, float(lam[0]), float(lam[1]), float(lam[-2]),
                        float(lam[-1]), bounds)


def deletion_monotonicity(g: MixedGraph) -> list[Bound]:
    """``lambda_1`` drops strictly on deleting any vertex or any arc of a
    uniconnected graph.

    ``I(G)`` is then irreducible and non-negative, so Perron-Frobenius gives the
    strict drop for multigraphs too; directed loops count as arcs.
    """
    if not is_uniconnected(g):
        raise PreconditionError("deletion monotonicity requires a uniconnected graph")
    lam1 = spectrum(g).lambda1
    out = []
    for v in range(g.n):
        out.append(Bound(f"lambda_1(G - v{v}) < lambda_1(G)",
                         spectrum(delete_vertex(g, v)).lambda1, lam1, strict=True))
    for (u, v) in list(g.arcs) + [(w, w) for w in g.dloops]:
        out.append(Bound(f"lambda_1(G - ({u},{v})) < lambda_1(G)",
                         spectrum(delete_arc(g, u, v)).lambda1, lam1, strict=True))
    return out


def regularity(g: MixedGraph) -> int | None:
    """``r`` when ``d+ = d-`` and ``d + d+ = r`` at every vertex."""
    prof = degree_profiles(g)
    if not prof:
        return None
    r = prof[0].d + prof[0].dplus
    if all(p.dplus == p.dminus and p.d + p.dplus == r for p in prof):
        return r
    return None


def regular_subgraph_bound(g: MixedGraph, vs) -> list[Bound]:
    """``lambda_2n <= (n d' - r n')/(n - n') <= lambda_2`` for an induced
    submixed graph on ``n' < n`` vertices with average associated degree ``d'``."""
    _require_simple(g)
    r = regularity(g)
    if r is None:
        raise PreconditionError("graph is not r-regular")
    vs = sorted(set(vs))
    n, n1 = g.n, len(vs)
    if not 0 < n1 < n:
        raise PreconditionError("vertex set must be a proper nonempty subset")
    h, _ = induced_submixed(g, vs)
    d1 = sum(2 * p.d + p.dplus + p.dminus for p in degree_profiles(h)) / (2 * n1)
    mid = (n * d1 - r * n1) / (n - n1)
    lam = spectrum(g).eigenvalues
    return [Bound("lambda_2n <= (n d' - r n')/(n - n')", lam[-1], mid),
            Bound("(n d' - r n')/(n - n') <= lambda_2", mid, lam[1])]


def _neighbour_masks(n: int, pairs) -> list[int]:
    masks = [0] * n
    for u, v in pairs:
        if u != v:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
    return masks


def max_independent_set(n: int, pairs, limit: int | None = None) -> int:
    """Size of a largest independent set of the graph on ``n`` vertices with
    adjacency ``pairs``; branch and bound on bitmasks."""
    if limit is not None and n > limit:
        raise ResourceLimitError(f"exact search limited to {limit} vertices, got {n}")
    nb = _neighbour_masks(n, pairs)
    best = 0

    def search(cand: int, size: int):
        nonlocal best
        if size + bin(cand).count("1") <= best:
            return
        if not cand:
            best = size
            return
        v = (cand & -cand).bit_length() - 1
        search(cand & ~nb[v] & ~(1 << v), size + 1)
        if nb[v] & cand:
            search(cand & ~(1 << v), size)

    search((1 << n) - 1, 0)
    return best


def _adjacent_pairs(g: MixedGraph):
    return list(g.edges) + list(g.arcs)


def independence_number(g: MixedGraph, limit: int = EXACT_LIMIT) -> int:
    """No two chosen vertices joined by an edge or an arc in either direction."""
    return max_independent_set(g.n, _adjacent_pairs(g), limit)


def clique_number(g: MixedGraph, limit: int = EXACT_LIMIT) -> int:
    """Largest vertex set in which every pair has an edge and arcs both ways."""
    if g.n == 0:
        return 0
    complete = [(u, v) for (u, v) in g.edges if (u, v) in g.arcs and (v, u) in g.arcs]
    others = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if (u, v) not in set(complete)]
    # A clique is an independent set of the complement of the "complete pair" graph.
    return max_independent_set(g.n, others, limit)


def associated_independence_number(g: MixedGraph, limit: int = 2 * EXACT_LIMIT) -> int:
    base = associated_graph(g).base
    return max_independent_set(base.n, list(base.edges), limit)


def independence_bounds(g: MixedGraph, exact: bool = True) -> BoundsReport:
    """``alpha(G) <= min((2n - n+)/2, (2n - n-)/2)``, the regular-graph bound
    and ``2 alpha(G) <= alpha(G^A)``.

    With ``exact=True`` and more than 15 vertices a :class:`ResourceLimitError`
    is raised; pass ``exact=False`` for the spectral side alone.
    """
    _require_simple(g)
    n = g.n
    sp = spectrum(g)
    lam = sp.eigenvalues
    n_plus, _, n_minus = sp.sign_counts
    spectral = min((2 * n - n_plus) / 2, (2 * n - n_minus) / 2)
    alpha = independence_number(g) if exact else None
    bounds = []
    if alpha is not None:
        bounds.append(Bound("alpha <= min((2n - n+)/2, (2n - n-)/2)", alpha, spectral))
        r = regularity(g)
        if r is not None and n and r - lam[-1] > CHECK_TOL:
            bounds.append(Bound("alpha <= -n lambda_2n / (r - lambda_2n)", alpha,
                                -n * lam[-1] / (r - lam[-1])))
        if 2 * n <= 2 * EXACT_LIMIT:
            bounds.append(Bound("2 alpha(G) <= alpha(G^A)", 2 * alpha, associated_independence_number(g)))
    D1, D2, d1, d2 = _degrees(g) if n else (0, 0, 0, 0)
    return BoundsReport(D1, D2, d1, d2, *_extremes(lam), bounds=bounds, alpha=alpha,
                        alpha_bound=spectral)


def clique_bound_value(g: MixedGraph) -> float:
    """``s = min(1 + lambda_1/2, (p0 + p- + 1)/2, p0 + p+ - 1, q0 + q- + 1, (q0 + q+)/2)``."""
    sp = spectrum(g)
    p_plus, p_zero, p_minus = sp.sign_counts
    q_plus, q_zero, q_minus = sp.shifted_counts
    return min(1 + sp.lambda1 / 2, (p_zero + p_minus + 1) / 2, p_zero + p_plus - 1,
               q_zero + q_minus + 1, (q_zero + q_plus) / 2)


def clique_bound(g: MixedGraph, exact: bool = True) -> BoundsReport:
    """``omega(G) <= s`` where ``s`` is built from the spectrum's sign counts."""
    _require_simple(g)
    lam = spectrum(g).eigenvalues
    omega = clique_number(g) if exact else None
    s = clique_bound_value(g) if g.n else 0.0
    bounds = []
    if omega is not None and g.n:
        bounds.append(Bound("omega <= s", omega, s))
    D1, D2, d1, d2 = _degrees(g) if g.n else (0, 0, 0, 0)
    return BoundsReport(D1, D2, d1, d2, *_extremes(lam), bounds=bounds, omega=omega, omega_bound=s)


def _extremes(lam) -> tuple[float, float, float, float]:
    if len(lam) == 0:
        return 0.0, 0.0, 0.0, 0.0
    return float(lam[0]), float(lam[1]), float(lam[-2]), float(lam[-1])


def all_bounds(g: MixedGraph, exact: bool = True) -> BoundsReport:
    """Every applicable bound in one report (used by the command line)."""
    base = degree_bounds(g)
    extra: list[Bound] = []
    alpha = omega = alpha_bound = omega_bound = None
    if g.n:
        ind = independence_bounds(g, exact)
        cl = clique_bound(g, exact)
        extra += ind.bounds + cl.bounds
        alpha, omega = ind.alpha, cl.omega
        alpha_bound, omega_bound = ind.alpha_bound, cl.omega_bound
        if is_uniconnected(g):
            extra += deletion_monotonicity(g)
        if regularity(g) is not None:
            for v in range(g.n) if g.n > 1 else ():
                extra += regular_subgraph_bound(g, [w for w in range(g.n) if w != v])
    return BoundsReport(base.delta1, base.delta2, base.sdelta1, base.sdelta2, base.lambda1,
                        base.lambda2, base.lambda_2nminus1, base.lambda_2n,
                        base.bounds + extra, alpha, omega, alpha_bound, omega_bound)
