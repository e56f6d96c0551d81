"""Mixed components and the closed determinant formula on the example with
seven components, then on a few hand-built graphs."""
from mixedspec import fixtures
from mixedspec.adjacency import integrated_adjacency
from mixedspec.components import decompose, determinant_terms
from mixedspec.families import FamilySpec, generate, uniconnected_cycle_witness
from mixedspec.graph import disjoint_union
from mixedspec.matrix import det_exact

g = fixtures.load("components7")
dec = decompose(g)
print(f"{len(dec)} components, p={dec.p} q={dec.q_ap} l={dec.l_even}")
for c in dec:
    shape = "AP" if c.is_AP else "AC" if c.is_AC else "-"
    print(f"  type {c.ctype.value:<3} vertices {sorted(c.vertices)} t={c.t} {shape}")
terms = determinant_terms(g)
print("formula", terms.value, "exact", det_exact(integrated_adjacency(g)[0]))

for h in (generate(FamilySpec.of("OCS", 5)), uniconnected_cycle_witness(3),
          disjoint_union(generate(FamilySpec.of("P", 2)), generate(FamilySpec.of("OCA", 6)))):
    print(f"n={h.n}: formula {determinant_terms(h).value}, exact {det_exact(integrated_adjacency(h)[0])}")
