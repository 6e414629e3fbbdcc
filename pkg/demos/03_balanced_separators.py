"""Dominated balanced separators and the logarithmic neighborhood bound.

A set X of few vertices dominates a balanced separator when removing N[X]
leaves only components of at most half the graph.  Graphs with no long
induced path always have one: an induced path grown toward the oversized
component balances within t-1 steps or exposes an induced P_t.  Feeding
such separators to a simple recursion bounds alpha(N[v]) by d*ell*log2(n)
in K_{2,ell}-free graphs.
"""

from math import log2

from treealpha import (
    Graph,
    ForbiddenStructureFound,
    dbs_low_alpha_vertex,
    get_separator_provider,
    gyarfas_dominated_separator,
)

p9 = Graph(9, [(i, i + 1) for i in range(8)])
cert = gyarfas_dominated_separator(p9, t=5)
print("P9, t=5: X =", cert.x)
print("  dominated:", cert.dominated)
print("  leftover components:", cert.component_list, "(each <=", cert.bound, ")")
print("  self-check:", cert.violations(p9) == [])

# asking for t=3 is hopeless: the growth itself runs into an induced P3
try:
    gyarfas_dominated_separator(p9, t=3)
except ForbiddenStructureFound as exc:
    print("t=3 rejected with witness:", exc.witness)

# the recursion: universal peeling, high-degree descent, separator descent
provider = get_separator_provider("pt-free:5")
c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
v, alpha = dbs_low_alpha_vertex(c5, ell=2, d=4, provider=provider)
print(f"C5: vertex {v} with alpha(N[v]) = {alpha} <= {4 * 2 * log2(5):.2f}")

star = Graph(9, [(0, i) for i in range(1, 9)])
v, alpha = dbs_low_alpha_vertex(star, ell=2, d=4, provider=provider)
print(f"star K_1,8: vertex {v} (a leaf) with alpha(N[v]) = {alpha}")
