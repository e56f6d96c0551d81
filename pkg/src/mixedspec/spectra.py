"""Spectral reports and checks for integrated adjacency matrices.

Polynomial identities are decided on exact integer characteristic
polynomials; eigenvalue statements use the Jacobi eigensolver with an
explicit tolerance.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .adjacency import integrated_adjacency, undirected_adjacency
from .components import decompose, has_AB_property, is_uniconnected
from .families import Family, FamilySpec
from .graph import MixedGraph, counts, degree_profiles, delete_vertex, induced_submixed, is_simple
from .matrix import (EigenResult, IntMatrix, Poly, char_poly_exact, cluster, minor_char_poly,
                     symmetric_eigen)

EIG_TOL = 1e-10
CHECK_TOL = 1e-8
CLUSTER_REL = 1e-6
POSITIVE_TOL = 1e-8


class PreconditionError(ValueError):
    """Theorem-level check called on an input outside its hypothesis."""


def _require_simple(g: MixedGraph):
    if not is_simple(g):
        raise PreconditionError("this check requires a simple mixed graph")


@dataclass(frozen=True)
class SpectrumReport:
    eigenvalues: np.ndarray
    multiplicities: list[tuple[float, int]]
    charpoly: Poly
    sign_counts: tuple[int, int, int]
    shifted_counts: tuple[int, int, int]
    eigen: EigenResult = field(repr=False)

    @property
    def lambda1(self) -> float:
        return float(self.eigenvalues[0]) if len(self.eigenvalues) else 0.0

    def multiplicity_of(self, value: float) -> int:
        return sum(m for v, m in self.multiplicities
                   if abs(v - value) <= CLUSTER_REL * (1 + abs(value)))


def sign_tolerance(m: IntMatrix) -> float:
    return CLUSTER_REL * (1 + m.inf_norm())


def _counts_about(values, centre: float, tol: float) -> tuple[int, int, int]:
    above = int(np.sum(values > centre + tol))
    below = int(np.sum(values < centre - tol))
    return above, len(values) - above - below, below


def spectrum(g: MixedGraph, tol: float = EIG_TOL) -> SpectrumReport:
    """Eigenvalues of ``I(G)`` (descending), clustered multiplicities, the
    exact characteristic polynomial, and counts of eigenvalues above/at/below
    ``0`` and ``-2``."""
    m, _ = integrated_adjacency(g)
    eig = symmetric_eigen(m, tol)
    stol = sign_tolerance(m)
    vals = eig.values
    return SpectrumReport(vals, cluster(vals, CLUSTER_REL), char_poly_exact(m),
                          _counts_about(vals, 0.0, stol), _counts_about(vals, -2.0, stol), eig)


@dataclass(frozen=True)
class TraceReport:
    sum_eigenvalues: float
    sum_squares: float
    expected_sum_squares: int
    c2: int
    expected_c2: int
    holds: bool


def check_trace_identities(g: MixedGraph) -> TraceReport:
    """Eigenvalues sum to 0, squares sum to ``4e + 2a`` and ``c_2 = -(2e + a)``."""
    _require_simple(g)
    e, a, _, _ = counts(g)
    sp = spectrum(g)
    s1 = float(np.sum(sp.eigenvalues))
    s2 = float(np.sum(sp.eigenvalues ** 2))
    c2 = sp.charpoly.c(2)
    holds = (abs(s1) <= CHECK_TOL and abs(s2 - (4 * e + 2 * a)) <= CHECK_TOL
             and c2 == -(2 * e + a))
    return TraceReport(s1, s2, 4 * e + 2 * a, c2, -(2 * e + a), holds)


@dataclass(frozen=True)
class InterlacingReport:
    graph_eigenvalues: np.ndarray
    sub_eigenvalues: np.ndarray
    worst_slack: float
    holds: bool


def interlacing_slack(big: np.ndarray, small: np.ndarray) -> float:
    """Smallest slack in ``big[i] >= small[i] >= big[i + len(big) - len(small)]``."""
    shift = len(big) - len(small)
    slack = math.inf
    for i, mu in enumerate(small):
        slack = min(slack, big[i] - mu, mu - big[i + shift])
    return float(slack)


def check_interlacing(g: MixedGraph, vs) -> InterlacingReport:
    """Eigenvalues of the induced submixed graph on ``vs`` interlace those of ``g``."""
    _require_simple(g)
    vs = sorted(set(vs))
    if not vs or len(vs) >= g.n:
        raise PreconditionError("vertex set must be a proper nonempty subset")
    h, _ = induced_submixed(g, vs)
    big = spectrum(g).eigenvalues
    small = spectrum(h).eigenvalues
    slack = interlacing_slack(big, small)
    return InterlacingReport(big, small, slack, slack >= -CHECK_TOL)


def rs_eigenpair_check(g: MixedGraph, r: int, s: int) -> bool:
    """Exact test of ``I(G) 1 = (r+s) 1`` and ``I(G) [1; -1] = (r-s) [1; -1]``."""
    m, _ = integrated_adjacency(g)
    n = g.n
    ones = IntMatrix([[1]] * (2 * n))
    signed = IntMatrix([[1]] * n + [[-1]] * n)
    return (m @ ones == IntMatrix([[r + s]] * (2 * n))
            and m @ signed == IntMatrix([[r - s]] * n + [[s - r]] * n))


def check_rs_regular(g: MixedGraph) -> tuple[int, int] | None:
    """``(r, s)`` when every vertex has ``d = r`` and ``d+ = d- = s``; else ``None``.

    When found, both designated eigenpairs are confirmed in integer arithmetic.
    """
    if g.n == 0:
        return None
    prof = degree_profiles(g)
    r, s = prof[0].d, prof[0].dplus
    if any(p.d != r or p.dplus != s or p.dminus != s for p in prof):
        return None
    if not rs_eigenpair_check(g, r, s):
        raise ArithmeticError(f"({r}, {s})-regular graph failed its eigenpair identities")
    return r, s


@dataclass(frozen=True)
class RRegularReport:
    r: int
    lambda1: float
    multiplicity: int
    mixed_components: int
    holds: bool


def check_r_regular(g: MixedGraph) -> RRegularReport | None:
    """For ``d+ = d-`` and ``d + d+ = r`` everywhere: ``lambda_1 = r`` with
    multiplicity equal to the number of mixed components."""
    if g.n == 0:
        return None
    prof = degree_profiles(g)
    r = prof[0].d + prof[0].dplus
    if any(p.dplus != p.dminus or p.d + p.dplus != r for p in prof):
        return None
    sp = spectrum(g)
    mult = sp.multiplicity_of(r)
    ncomp = len(decompose(g))
    holds = abs(sp.lambda1 - r) <= CHECK_TOL and mult == ncomp
    return RRegularReport(r, sp.lambda1, mult, ncomp, holds)


class VertexAddition(enum.Enum):
    """How a new vertex ``u`` is attached to ``v_j``."""

    OUT = "v->u"
    IN = "u->v"
    EDGE = "v~u"
    DIGON = "v<=>u"
    OUT_EDGE = "v->~u"
    IN_EDGE = "u->~v"
    DIGON_EDGE = "v<=>~u"

    @classmethod
    def parse(cls, name: str) -> "VertexAddition":
        roman = ["i", "ii", "iii", "iv", "v", "vi", "vii"]
        for k, mode in enumerate(cls):
            if name in (mode.name, mode.value, roman[k]) or name.upper() == mode.name:
                return mode
        raise ValueError(f"unknown vertex-addition mode {name!r}")


def attach_vertex(g: MixedGraph, j: int, mode: VertexAddition) -> MixedGraph:
    """``G_j``: ``g`` plus a new vertex ``u = n`` joined to ``j`` per ``mode``,
    one object of each named kind."""
    u = g.n
    edge = [(j, u)] if mode in (VertexAddition.EDGE, VertexAddition.OUT_EDGE,
                                VertexAddition.IN_EDGE, VertexAddition.DIGON_EDGE) else []
    arcs = []
    if mode in (VertexAddition.OUT, VertexAddition.DIGON, VertexAddition.OUT_EDGE,
                VertexAddition.DIGON_EDGE):
        arcs.append((j, u))
    if mode in (VertexAddition.IN, VertexAddition.DIGON, VertexAddition.IN_EDGE,
                VertexAddition.DIGON_EDGE):
        arcs.append((u, j))
    return g.with_elements(n=u + 1, edges=edge, arcs=arcs)


@dataclass(frozen=True)
class VertexAdditionReport:
    mode: VertexAddition
    j: int
    lhs: Poly
    rhs: Poly
    difference: Poly
    holds: bool


def vertex_addition_rhs(g: MixedGraph, j: int, mode: VertexAddition) -> Poly:
    """Right-hand side of the vertex-addition identity for ``mode``.

    ``P[a|b]`` denotes ``det((xI - M)[a|b])`` for ``M = I(G)``; on the
    diagonal this is the characteristic polynomial of ``M[a]``.
    """
    m, _ = integrated_adjacency(g)
    n = g.n
    x = Poly.x()
    P = char_poly_exact(m)
    Pj = minor_char_poly(m, j, j)
    Pnj = minor_char_poly(m, n + j, n + j)
    sign = (-1) ** n
    if mode in (VertexAddition.OUT_EDGE, VertexAddition.IN_EDGE, VertexAddition.DIGON_EDGE):
        cross = sign * (minor_char_poly(m, n + j, j) + minor_char_poly(m, j, n + j))
    P_del = char_poly_exact(integrated_adjacency(delete_vertex(g, j))[0])
    x2P = x * x * P
    if mode is VertexAddition.OUT:
        return x2P - x * Pj
    if mode is VertexAddition.IN:
        return x2P - x * Pnj
    if mode in (VertexAddition.EDGE, VertexAddition.DIGON):
        return x2P - x * (Pj + Pnj) + P_del
    if mode is VertexAddition.OUT_EDGE:
        return x2P - x * (2 * Pj + Pnj + cross) + P_del
    if mode is VertexAddition.IN_EDGE:
        return x2P - x * (Pj + 2 * Pnj + cross) + P_del
    return x2P - 2 * x * (Pj + Pnj + cross)


def check_vertex_addition(g: MixedGraph, j: int, mode: VertexAddition | str) -> VertexAdditionReport:
    """Compare the characteristic polynomial of ``G_j`` with the closed
    identity for ``mode``; a mismatch is reported through ``difference``."""
    _require_simple(g)
    if not 0 <= j < g.n:
        raise PreconditionError(f"vertex {j} out of range")
    mode = mode if isinstance(mode, VertexAddition) else VertexAddition.parse(mode)
    lhs = char_poly_exact(integrated_adjacency(attach_vertex(g, j, mode))[0])
    rhs = vertex_addition_rhs(g, j, mode)
    diff = lhs - rhs
    return VertexAdditionReport(mode, j, lhs, rhs, diff, not diff)


def _merge(pairs) -> list[tuple[float, int]]:
    expanded = [float(v) for v, k in pairs for _ in range(k)]
    return cluster(expanded, CLUSTER_REL)


def family_spectrum_closed_form(spec: FamilySpec) -> list[tuple[float, int]]:
    """Closed-form spectrum of a generated family as ``(value, multiplicity)``,
    descending."""
    fam, p = spec.family, spec.params
    n = p[0]
    cos = math.cos
    if fam is Family.CompleteGraph:
        return _merge([(n - 1, 2), (-1, 2 * (n - 1))])
    if fam is Family.CompleteMixed:
        return _merge([(2 * (n - 1), 1), (-2, n - 1), (0, n)])
    if fam is Family.CompleteDirected:
        return _merge([(n - 1, 1), (-(n - 1), 1), (1, n - 1), (-1, n - 1)])
    if fam in (Family.CompleteKPartiteMixed, Family.CompleteKPartiteDirected):
        if len(set(p)) != 1:
            raise ValueError("closed form is known only for equal part sizes")
        k, m = len(p), p[0]
        if fam is Family.CompleteKPartiteMixed:
            return _merge([(2 * m * (k - 1), 1), (-2 * m, k - 1), (0, (2 * m - 1) * k)])
        return _merge([(m * (k - 1), 1), (-m * (k - 1), 1), (m, k - 1), (-m, k - 1),
                       (0, 2 * k * (m - 1))])
    if fam is Family.OrientedPathSame:
        return _merge([(1, n - 1), (-1, n - 1), (0, 2)])
    if fam is Family.OrientedPathAlt:
        return _merge([(0, n)] + [(2 * cos(math.pi * k / (n + 1)), 1) for k in range(1, n + 1)])
    if fam is Family.OrientedCycleSame:
        return _merge([(1, n), (-1, n)])
    if fam is Family.OrientedCycleAlt:
        return _merge([(0, n)] + [(2 * cos(2 * math.pi * k / n), 1) for k in range(1, n + 1)])
    if fam is Family.Path:
        return _merge([(2 * cos(math.pi * k / (n + 1)), 2) for k in range(1, n + 1)])
    return _merge([(2 * cos(2 * math.pi * k / n), 2) for k in range(1, n + 1)])


def uniconnected_walk_spectrum(n: int, kind: str) -> list[tuple[float, int]]:
    """Spectrum for a uniconnected graph on ``n`` vertices whose every vertex,
    arc and (twice) every edge lie on one alternating walk.

    ``kind`` is ``"path"`` (length ``2n-1``), ``"odd-cycle"`` (length
    ``2n-1``) or ``"even-cycle"`` (length ``2n``).
    """
    if kind in ("path", "odd-cycle"):
        return _merge([(2 * math.cos(math.pi * k / (2 * n + 1)), 1) for k in range(1, 2 * n + 1)])
    if kind == "even-cycle":
        return _merge([(2 * math.cos(math.pi * k / n), 1) for k in range(1, 2 * n + 1)])
    raise ValueError(f"unknown kind {kind!r}")


def spectra_agree(closed: list[tuple[float, int]], observed: np.ndarray,
                  atol: float = CHECK_TOL) -> bool:
    """Per-eigenvalue agreement within ``atol`` and identical clustered multiplicities."""
    expanded = np.sort([v for v, k in closed for _ in range(k)])[::-1]
    obs = np.sort(np.asarray(observed, dtype=float))[::-1]
    if expanded.shape != obs.shape or np.any(np.abs(expanded - obs) > atol):
        return False
    got = cluster(obs, CLUSTER_REL)
    return [k for _, k in got] == [k for _, k in closed]


@dataclass(frozen=True)
class PerronReport:
    uniconnected: bool
    lambda1: float
    lambda1_simple: bool
    positive_vector: bool
    holds: bool


def check_perron(g: MixedGraph) -> PerronReport:
    """Uniconnected exactly when ``lambda_1`` is simple with a positive eigenvector."""
    _require_simple(g)
    uni = is_uniconnected(g)
    sp = spectrum(g)
    if g.n == 0:
        return PerronReport(uni, 0.0, False, False, not uni)
    simple = sp.multiplicity_of(sp.lambda1) == 1
    vec = sp.eigen.vectors[:, 0]
    vec = vec / vec[np.argmax(np.abs(vec))]
    positive = simple and bool(np.min(vec) > POSITIVE_TOL)
    return PerronReport(uni, sp.lambda1, simple, positive, uni == (simple and positive))


def spectral_radius_split(g: MixedGraph) -> tuple[float, float]:
    """``(lambda_1 + lambda_2n, 2 * lambda_1(G_u))``; the first never exceeds the second."""
    sp = spectrum(g)
    if g.n == 0:
        return 0.0, 0.0
    au = symmetric_eigen(undirected_adjacency(g)).values
    return float(sp.eigenvalues[0] + sp.eigenvalues[-1]), float(2 * au[0])


@dataclass(frozen=True)
class ABReport:
    ab_property: bool
    odd_coefficients_vanish: bool
    symmetric_spectrum: bool

    @property
    def consistent(self) -> bool:
        return self.ab_property == self.odd_coefficients_vanish == self.symmetric_spectrum


def spectrum_is_symmetric(values, rel: float = CLUSTER_REL) -> bool:
    """Clustered multiset of ``values`` equals that of ``-values``."""
    vals = np.asarray(values, dtype=float)
    mine, mirror = cluster(vals, rel), cluster(-vals, rel)
    return (len(mine) == len(mirror)
            and all(k == k2 and abs(v - v2) <= rel * (1 + abs(v))
                    for (v, k), (v2, k2) in zip(mine, mirror)))


def check_ab(g: MixedGraph) -> ABReport:
    """The three equivalent conditions: AB property, vanishing odd coefficients
    of the exact characteristic polynomial, spectrum symmetric about 0."""
    sp = spectrum(g)
    p = sp.charpoly
    odd = all(p.c(k) == 0 for k in range(1, p.degree + 1, 2))
    return ABReport(has_AB_property(g), odd, spectrum_is_symmetric(sp.eigenvalues))
