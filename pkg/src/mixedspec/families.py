"""Generators for the named mixed-graph families."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .graph import MixedGraph


class FamilyError(ValueError):
    pass


class Family(enum.Enum):
    CompleteGraph = "K"
    CompleteDirected = "KD"
    CompleteMixed = "KM"
    CompleteKPartiteMixed = "KMP"
    CompleteKPartiteDirected = "KDP"
    OrientedPathSame = "OPS"
    OrientedPathAlt = "OPA"
    OrientedCycleSame = "OCS"
    OrientedCycleAlt = "OCA"
    Path = "P"
    Cycle = "C"

    @classmethod
    def parse(cls, name: str) -> "Family":
        for f in cls:
            if name in (f.name, f.value) or name.lower() == f.name.lower():
                return f
        raise FamilyError(f"unknown family {name!r}; choose from "
                          + ", ".join(f"{f.value} ({f.name})" for f in cls))


_PARTITE = (Family.CompleteKPartiteMixed, Family.CompleteKPartiteDirected)


@dataclass(frozen=True)
class FamilySpec:
    """``params`` is ``(n,)`` for most families and the part sizes for k-partite ones."""

    family: Family
    params: tuple[int, ...]

    def __post_init__(self):
        fam, p = self.family, self.params
        if not p or any(x < 1 for x in p):
            raise FamilyError(f"{fam.name}: parameters must be positive, got {p}")
        if fam not in _PARTITE and len(p) != 1:
            raise FamilyError(f"{fam.name} takes a single vertex count")
        n = p[0]
        minimum = {
            Family.OrientedPathSame: 2, Family.OrientedPathAlt: 2,
            Family.OrientedCycleSame: 3, Family.OrientedCycleAlt: 4, Family.Cycle: 3,
        }.get(fam, 1)
        if fam not in _PARTITE and n < minimum:
            raise FamilyError(f"{fam.name} needs n >= {minimum}")
        if fam is Family.OrientedCycleAlt and n % 2:
            raise FamilyError("an alternating orientation of C_n needs even n")

    @classmethod
    def of(cls, family, *params: int) -> "FamilySpec":
        fam = family if isinstance(family, Family) else Family.parse(family)
        return cls(fam, tuple(int(x) for x in params))


def _complete(parts: tuple[int, ...], edges: bool, arcs: bool) -> MixedGraph:
    owner = [k for k, size in enumerate(parts) for _ in range(size)]
    pairs = [(u, v) for u, v in combinations(range(len(owner)), 2) if owner[u] != owner[v]]
    return MixedGraph.build(
        len(owner),
        edges=pairs if edges else (),
        arcs=[a for u, v in pairs for a in ((u, v), (v, u))] if arcs else (),
    )


def generate(spec: FamilySpec) -> MixedGraph:
    """Build the named graph on vertices ``0..n-1``.

    Oriented paths and cycles follow the natural vertex order: "same" orients
    every edge ``i -> i+1``; "alt" flips direction at each consecutive edge,
    starting with ``0 -> 1``.
    """
    fam, p = spec.family, spec.params
    n = p[0]
    if fam is Family.CompleteGraph:
        return _complete((1,) * n, True, False)
    if fam is Family.CompleteDirected:
        return _complete((1,) * n, False, True)
    if fam is Family.CompleteMixed:
        return _complete((1,) * n, True, True)
    if fam is Family.CompleteKPartiteMixed:
        return _complete(p, True, True)
    if fam is Family.CompleteKPartiteDirected:
        return _complete(p, False, True)

    links = [(i, i + 1) for i in range(n - 1)]
    if fam in (Family.Cycle, Family.OrientedCycleSame, Family.OrientedCycleAlt):
        links.append((n - 1, 0))
    if fam in (Family.Path, Family.Cycle):
        return MixedGraph.build(n, edges=links)
    if fam in (Family.OrientedPathSame, Family.OrientedCycleSame):
        return MixedGraph.build(n, arcs=links)
    return MixedGraph.build(n, arcs=[(a, b) if k % 2 == 0 else (b, a) for k, (a, b) in enumerate(links)])


def complete_mixed(n: int) -> MixedGraph:
    return generate(FamilySpec(Family.CompleteMixed, (n,)))


def complete_directed(n: int) -> MixedGraph:
    return generate(FamilySpec(Family.CompleteDirected, (n,)))


def uniconnected_path_witness(n: int) -> MixedGraph:
    """Path ``0 - 1 - ... - (n-1)`` plus the arc ``0 -> n-1``.

    Its associated graph is the path on ``2n`` vertices, so the graph is
    uniconnected and has an alternating path of length ``2n - 1`` using
    every edge twice.
    """
    if n < 2:
        raise FamilyError("witness needs n >= 2")
    return MixedGraph.build(n, edges=[(i, i + 1) for i in range(n - 1)], arcs=[(0, n - 1)])


def uniconnected_cycle_witness(n: int) -> MixedGraph:
    """:func:`uniconnected_path_witness` plus the arc ``n-1 -> 0``; the
    associated graph is the cycle on ``2n`` vertices."""
    return uniconnected_path_witness(n).with_elements(arcs=[(n - 1, 0)])
