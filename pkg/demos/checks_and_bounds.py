"""Structural checks and the eigenvalue bound report on a random graph."""
import random

from mixedspec.bounds import all_bounds
from mixedspec.graph import MixedGraph
from mixedspec.spectra import check_ab, check_perron, check_trace_identities, check_vertex_addition

rng = random.Random(7)
n = 6
g = MixedGraph.build(n, edges=[(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4],
                     arcs=[(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.2])
print(g)
print("trace:", check_trace_identities(g))
print("AB:", check_ab(g))
print("perron:", check_perron(g))
print("vertex addition at 0:", all(check_vertex_addition(g, 0, m).holds for m in ("i", "ii", "iii", "iv")))

rep = all_bounds(g, exact=True)
print(f"\nlambda_1={rep.lambda1:.6f} alpha={rep.alpha} omega={rep.omega}")
for b in rep.bounds:
    print(f"  {'ok  ' if b.holds else 'FAIL'} {b.name}  slack {b.slack:.4f}")
