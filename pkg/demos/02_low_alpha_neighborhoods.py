"""Vertices whose closed neighborhood has a small independence number.

For a graph with no induced P5 and no induced K_{ell,ell}, some vertex of
every induced subgraph satisfies alpha(N[v]) < 2*ell.  The search either
certifies that bound or extracts the forbidden structure that breaks it;
the same machinery gives the exact alpha-degeneracy by greedy elimination.
"""

from treealpha import Graph, alpha_degeneracy, low_alpha_vertex, verify_witness
from treealpha.harness import gen_class_free

c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
rep = low_alpha_vertex(c5, ell=2, d=2)
print("C5: vertex", rep.vertex, "alpha(N[v]) =", rep.alpha_closed,
      "< bound", rep.bound, "-> no witness:", rep.witness is None)

# K_{4,4} breaks the promise: every candidate neighborhood holds 4
# independent vertices, so the extraction hands back a K_{2,2}
k44 = Graph(8, [(a, 4 + b) for a in range(4) for b in range(4)])
rep = low_alpha_vertex(k44, ell=2, d=2)
print("K44: alpha(N[v]) =", rep.alpha_closed, ">= bound", rep.bound)
print("     extracted:", rep.witness, "verifies:", verify_witness(k44, rep.witness))

# the d=3 bound covers graphs with no once-subdivided 3-star instead
g = gen_class_free(16, 4, [("substar", 3), ("biclique", 2, 2)])
rep = low_alpha_vertex(g, ell=2, d=3)
print("substar-free graph: alpha(N[v]) =", rep.alpha_closed, "< bound", rep.bound)

# alpha-degeneracy: the worst minimum over the greedy elimination
for name, graph in [
    ("C5", c5),
    ("K44", k44),
    ("clique K6", Graph(6, [(a, b) for a in range(6) for b in range(a + 1, 6)])),
]:
    print(f"alpha-degeneracy of {name}:", alpha_degeneracy(graph))
