"""The tree-decomposition data model and its queries.

A decomposition is judged by the independence number of its worst bag, not
by bag size; two decompositions of the 5-cycle below both achieve the
optimum value 2.  Also shown: the Helly property (pairwise co-bagged
vertices share one bag), restriction to an induced subgraph, and the bag
that swallows some closed neighborhood.
"""

from treealpha import (
    Graph,
    TreeDecomposition,
    closed_neighborhood_bag,
    cobagged_pairs,
    find_bag_containing_set,
    parse_td,
    restrict,
    serialize_td,
    subtree_distance,
    td_alpha,
    validate,
)
from treealpha.graph import induced_subgraph

c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
fan = TreeDecomposition(edges=((0, 1), (1, 2)),
                        bags=((0, 1, 2), (0, 2, 3), (0, 3, 4)))
print("fan bags:", fan.bags)
print("valid:", validate(c5, fan) == [], " bag independence:", td_alpha(c5, fan))

# an invalid variant: drop vertex 0 from the last bag and edge 0-4 is exposed
broken = TreeDecomposition(((0, 1), (1, 2)), ((0, 1, 2), (0, 2, 3), (3, 4)))
print("violations:", validate(c5, broken))

# co-bagged pairs and the Helly property
print("co-bagged pairs among {0,2,3}:", cobagged_pairs(fan, (0, 2, 3)))
print("bag holding {0,2,3}:", find_bag_containing_set(fan, (0, 2, 3)))
print("bag holding {1,4}:", find_bag_containing_set(fan, (1, 4)))

# distance between the bag sets of two vertices
print("subtree distance 1..4:", subtree_distance(fan, 1, 4))

# some closed neighborhood always fits inside a bag
node, v = closed_neighborhood_bag(c5, fan)
print(f"N[{v}] fits bag {node}: {fan.bags[node]}")

# restriction to an induced subgraph keeps validity, never raises the value
sub, _ = induced_subgraph(c5, (0, 1, 2))
small = restrict(fan, (0, 1, 2))
print("restricted ok:", validate(sub, small) == [], " value:", td_alpha(sub, small))

# decompositions serialize to a small structured text format
text = serialize_td(fan)
print(text)
print("parsed back equal bags:", parse_td(text).bags == fan.bags)
