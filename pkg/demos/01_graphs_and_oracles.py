"""Graphs, neighborhoods, and the exact search oracles.

Builds a few small graphs, queries their structure, and runs the exact
primitives everything else is built on: maximum independent set, bipartite
matching with its equal-size vertex cover, and induced pattern search.
"""

from treealpha import (
    Graph,
    alpha_of_subset,
    bipartite_max_matching,
    closed_neighborhood,
    components,
    find_induced_biclique,
    find_induced_path,
    max_independent_set,
    parse_graph,
    serialize_graph,
    verify_witness,
)

# the 5-cycle, straight from its edge-list text form
c5 = parse_graph("5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
print("C5:", c5, "edges:", c5.edges())
print("closed neighborhood of 0:", closed_neighborhood(c5, 0))
print("round trip:\n" + serialize_graph(c5))

# exact independence
print("maximum independent set of C5:", max_independent_set(c5))
print("alpha of {0,1,4}:", alpha_of_subset(c5, [0, 1, 4]))

# a disconnected graph and its components
two_paths = Graph(6, [(0, 1), (1, 2), (3, 4)])
print("components:", components(two_paths, range(6)))

# matching plus the equal-size cover certificate
k23 = Graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
res = bipartite_max_matching(k23, (0, 1), (2, 3, 4))
print("matching edges:", res.edges, "cover:", res.cover)

# induced pattern search: C5 hides neither a P5 nor a balanced biclique,
# C6 contains a 5-vertex induced path, C4 is itself a K_{2,2}
c6 = Graph(6, [(i, (i + 1) % 6) for i in range(6)])
c4 = Graph(4, [(i, (i + 1) % 4) for i in range(4)])
print("induced P5 in C5:", find_induced_path(c5, 5))
w = find_induced_path(c6, 5)
print("induced P5 in C6:", w, "verifies:", verify_witness(c6, w))
w = find_induced_biclique(c4, 2)
print("induced K_{2,2} in C4:", w, "verifies:", verify_witness(c4, w))
