"""Alternating walks: classify every walk between two vertices and compare
the class totals with entries of a power of the integrated matrix."""
from mixedspec.families import FamilySpec, generate
from mixedspec.walks import Walk, WalkClass, count_classified, is_alternating, matrix_walk_entries, walk_theorem_sums

g = generate(FamilySpec.of("OPA", 4))   # 0 -> 1 <- 2 -> 3
w = Walk.from_sequence([0, (0, 1), 1, (2, 1), 2, (2, 3), 3])
print("walk", w.vertices, "alternating:", is_alternating(w))

for k in range(1, 5):
    counts = count_classified(g, 0, 3, k)
    sums = walk_theorem_sums(counts)
    entries = matrix_walk_entries(g, 0, 3, k)
    nonzero = {c.value: n for c, n in counts.items() if n}
    print(f"k={k} classes={nonzero} sums={sums} matrix={entries} agree={sums == entries}")

print("\nclasses:", ", ".join(c.value for c in WalkClass))
