"""Dominated balanced separators and the separator-driven neighborhood bound.

A d-dominated balanced separator is a set X of at most d vertices whose
closed neighborhood, once removed, leaves components of at most half the
graph.  For graphs with no long induced path such a set is grown greedily
along an induced path; the growth either balances within t-1 steps or hands
back an induced t-vertex path as a certificate of failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import log2
from typing import Callable, Optional

from .graph import (
    Graph,
    VertexSet,
    closed_neighborhood,
    closed_neighborhood_of_set,
    components,
    induced_subgraph,
    is_connected,
    vertex_set,
)
from .oracles import (
    ForbiddenStructureFound,
    alpha_of_subset,
    find_induced_complete_bipartite,
    path_witness,
    verify_witness,
)


class DisconnectedGraphError(ValueError):
    """The separator construction needs a connected graph; recurse per component."""


@dataclass(frozen=True)
class SeparatorCertificate:
    """A dominating set plus the components its removal leaves behind."""

    x: VertexSet
    dominated: VertexSet
    component_list: tuple[VertexSet, ...]
    bound: int

    def violations(self, g: Graph) -> list[str]:
        out: list[str] = []
        if vertex_set(closed_neighborhood_of_set(g, self.x)) != self.dominated:
            out.append("dominated set is not the closed neighborhood of X")
        rest = sorted(set(range(g.n)) - set(self.dominated))
        if list(components(g, rest)) != list(self.component_list):
            out.append("component list does not match graph minus N[X]")
        for comp in self.component_list:
            if 2 * len(comp) > g.n:
                out.append(f"component of size {len(comp)} exceeds half of {g.n}")
        if self.bound != g.n // 2:
            out.append("stored bound is not floor(n/2)")
        return out

    def to_record(self) -> dict:
        return {
            "x": list(self.x),
            "dominated": list(self.dominated),
            "components": [list(c) for c in self.component_list],
            "bound": self.bound,
        }


def gyarfas_dominated_separator(g: Graph, t: int) -> SeparatorCertificate:
    """Balanced separator dominated by at most t-1 vertices of an induced path.

    Grows an induced path toward the oversized component of the graph minus
    the path's closed neighborhood.  For a graph with no induced t-vertex
    path the growth balances after at most t-1 vertices; otherwise the grown
    path reaches t vertices and is raised as a witness.
    """
    if t < 2:
        raise ValueError("t must be >= 2")
    if g.n == 0:
        raise ValueError("graph must be non-null")
    if not is_connected(g):
        raise DisconnectedGraphError("separator construction needs a connected graph")
    path = [0]
    prev_region = set(range(g.n))
    while True:
        dominated = closed_neighborhood_of_set(g, path)
        rest = sorted(set(range(g.n)) - set(dominated))
        comps = components(g, rest)
        big = [c for c in comps if 2 * len(c) > g.n]
        if not big:
            return SeparatorCertificate(
                x=vertex_set(path),
                dominated=dominated,
                component_list=tuple(comps),
                bound=g.n // 2,
            )
        region = set(big[0])
        boundary = {
            u
            for c in region
            for u in g.neighbors(c)
            if u not in region
        }
        cands = sorted(
            u for u in boundary if g.adjacent(u, path[-1]) and u in prev_region
        )
        if not cands:
            raise RuntimeError("path growth stalled; connectivity invariant broken")
        path.append(cands[0])
        prev_region = region
        if len(path) >= t:
            w = path_witness(path)
            if not verify_witness(g, w):
                raise RuntimeError("grown path failed verification")
            raise ForbiddenStructureFound(w, f"graph contains an induced {t}-vertex path")


SeparatorProvider = Callable[[Graph], SeparatorCertificate]


def get_separator_provider(name: str) -> SeparatorProvider:
    """Resolve a provider by registry name, e.g. ``pt-free:5``."""
    if name.startswith("pt-free:"):
        t = int(name.split(":", 1)[1])
        return lambda g: gyarfas_dominated_separator(g, t)
    raise KeyError(f"unknown separator provider {name!r}")


def _separator_within(
    g: Graph, region: list[int], provider: SeparatorProvider
) -> set[int]:
    """A dominating set balancing ``g`` restricted to ``region``.

    Disconnected regions are handled directly: if no component exceeds half
    the region a single vertex works, otherwise the provider runs inside the
    unique oversized component and its separator balances the whole region.
    """
    comps = components(g, region)
    if len(comps) > 1:
        big = [c for c in comps if 2 * len(c) > len(region)]
        if not big:
            return {min(region)}
        target = big[0]
    else:
        target = comps[0]
    sub, mapping = induced_subgraph(g, target)
    cert = provider(sub)
    return {mapping[v] for v in cert.x}


def dbs_low_alpha_vertex(
    g: Graph,
    ell: int,
    d: int,
    provider: SeparatorProvider,
    stats: Optional[dict] = None,
) -> tuple[int, int]:
    """A vertex whose closed neighborhood independence is at most d*ell*log2(n).

    Recursion: peel universal vertices into a clique; if one vertex remains
    the graph was complete.  Otherwise either a high-degree vertex exists and
    we descend into the largest component left by its closed neighborhood,
    or the separator provider supplies the set to descend through.  The
    final bound is re-verified; a violation signals a class-membership
    breach and carries an unbalanced-biclique diagnostic when one exists.
    """
    if ell < 2 or d < 2:
        raise ValueError("ell and d must be >= 2")
    if g.n < 2:
        raise ValueError("graph must have at least 2 vertices")

    depth = 0
    peels = 0

    def rec(region: list[int]) -> int:
        nonlocal depth, peels
        live = set(region)
        peeled_here = False
        while True:
            universal = None
            for v in sorted(live):
                if all(u in set(g.neighbors(v)) for u in live if u != v):
                    universal = v
                    break
            if universal is None:
                break
            live.remove(universal)
            peeled_here = True
        if peeled_here:
            peels += 1
        if len(live) <= 1:
            return min(region)
        n_prime = len(live)
        degs = {
            v: sum(1 for u in g.neighbors(v) if u in live) for v in live
        }
        best = max(sorted(live), key=lambda v: (degs[v], -v))
        depth += 1
        if d * (degs[best] + 1) >= n_prime:
            x_set = {best}
        else:
            x_set = _separator_within(g, sorted(live), provider)
        removed = set()
        for v in x_set:
            removed.add(v)
            removed.update(u for u in g.neighbors(v) if u in live)
        rest = sorted(live - removed)
        comps = components(g, rest)
        if not comps:
            raise RuntimeError("separator removed everything; degree case expected")
        target = max(comps, key=len)
        return rec(list(target))

    v = rec(list(range(g.n)))
    alpha = alpha_of_subset(g, closed_neighborhood(g, v))
    limit = d * ell * log2(g.n)
    if alpha > limit:
        diag = find_induced_complete_bipartite(g, 2, ell)
        if diag is not None:
            raise ForbiddenStructureFound(
                diag,
                f"neighborhood bound {limit:.2f} violated (alpha={alpha}); "
                "the graph is not K_{2,ell}-free",
            )
        raise RuntimeError(
            f"neighborhood bound {limit:.2f} violated (alpha={alpha}) "
            "without a biclique; provider class promise broken"
        )
    if stats is not None:
        stats["depth"] = depth
        stats["peel_phases"] = peels
    return v, alpha
