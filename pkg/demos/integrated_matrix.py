"""Build a mixed multigraph, print its integrated adjacency matrix and the
associated graph, then recover the graph from the matrix."""
from mixedspec import fixtures
from mixedspec.adjacency import associated_graph, from_integrated, integrated_adjacency
from mixedspec.io import serialize

g = fixtures.load("mixed4")
m, idx = integrated_adjacency(g)
print("labels:", " ".join(idx.labels()))
for lab, row in zip(idx.labels(), m.rows):
    print(f"{lab:>4}", *(f"{x:2d}" for x in row))

assoc = associated_graph(g)
print("\nassociated graph:")
print(serialize(assoc.base), end="")

assert from_integrated(m, idx) == g
print("\nmatrix -> graph round trip ok")
