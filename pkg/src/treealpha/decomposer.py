"""Constructive tree-decomposition engine for P5-free graphs.

Given a graph with no induced 5-vertex path and a target ``ell``, the engine
either produces an induced balanced biclique K_{ell,ell} or builds a tree
decomposition whose every bag has independence number at most ``4*ell``.

The core loop fixes a root vertex r whose closed neighborhood has small
independence number, decomposes the rest recursively, and then repeatedly
restructures the decomposition until all neighbors of r share a bag.  Each
restructuring step strictly grows the number of co-bagged neighbor pairs, so
the loop finishes within (deg r choose 2) rounds.  Every structural fact the
surgery relies on is asserted at run time; a failed assertion is converted
into a verified witness (an induced path or biclique) that refutes the
caller's promise about the input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional, Union

from .graph import (
    Graph,
    VertexSet,
    closed_neighborhood,
    components,
    induced_subgraph,
    vertex_set,
)
from .oracles import (
    BICLIQUE,
    ForbiddenStructureFound,
    Witness,
    alpha_of_subset,
    biclique_witness,
    find_induced_biclique,
    find_induced_path,
    max_independent_subset,
    path_witness,
    verify_witness,
)
from .degeneracy import low_alpha_vertex
from .treedecomp import (
    TreeDecomposition,
    cobagged_pairs,
    compress,
    find_bag_containing_set,
    single_bag_decomposition,
    subtree_distance,
)


class DecompositionError(RuntimeError):
    """Internal inconsistency: a guaranteed step failed without a witness."""


# -- small helpers -----------------------------------------------------------


def _nrbar(g: Graph, r: int, v: int) -> set[int]:
    """Neighbors of v outside the closed neighborhood of r."""
    nr = set(g.neighbors(r))
    return {u for u in g.neighbors(v) if u != r and u not in nr}


def _raise_with_witness(g: Graph, w: Witness, msg: str) -> None:
    if not verify_witness(g, w):
        raise DecompositionError(f"{msg}; extracted witness failed verification")
    raise ForbiddenStructureFound(w, msg)


def _first_noncomplete(g: Graph, side_a, side_b) -> Optional[tuple[int, int]]:
    for a in sorted(side_a):
        for b in sorted(side_b):
            if not g.adjacent(a, b):
                return a, b
    return None


def _adjacency_flip_on_path(
    g: Graph, comp: VertexSet, w: int
) -> tuple[int, int]:
    """Adjacent c, c2 in comp with w adjacent to c but not to c2.

    Exists whenever w sees part of the connected set comp but not all of it.
    """
    inside = set(comp)
    liked = [c for c in comp if g.adjacent(w, c)]
    disliked = [c for c in comp if not g.adjacent(w, c)]
    if not liked or not disliked:
        raise DecompositionError("no adjacency flip available")
    start = min(liked)
    parent = {start: -1}
    frontier = [start]
    goal = None
    while frontier and goal is None:
        nxt: list[int] = []
        for c in frontier:
            for u in sorted(g.neighbors(c)):
                if u in inside and u not in parent:
                    parent[u] = c
                    if not g.adjacent(w, u):
                        goal = u
                        break
                    nxt.append(u)
            if goal is not None:
                break
        frontier = nxt
    if goal is None:
        raise DecompositionError("component not connected; flip search failed")
    return parent[goal], goal


def _validate_over(g: Graph, td: TreeDecomposition, subset: set[int]) -> list[str]:
    """Tree-decomposition conditions for the induced subgraph on ``subset``."""
    out: list[str] = []
    k = td.node_count
    if k == 0:
        return ["no nodes"]
    if len(td.edges) != k - 1:
        out.append("node graph is not a tree (edge count)")
    seen = {0}
    frontier = [0]
    while frontier:
        t = frontier.pop()
        for s in td.node_neighbors(t):
            if s not in seen:
                seen.add(s)
                frontier.append(s)
    if len(seen) != k:
        out.append("node graph disconnected")
    if out:
        return out
    for bag in td.bags:
        stray = [v for v in bag if v not in subset]
        if stray:
            out.append(f"bag contains vertices outside the graph: {stray}")
            return out
    for v in sorted(subset):
        nodes = td.subtree(v)
        if not nodes:
            out.append(f"vertex {v} in no bag")
            continue
        nodeset = set(nodes)
        reach = {nodes[0]}
        frontier = [nodes[0]]
        while frontier:
            t = frontier.pop()
            for s in td.node_neighbors(t):
                if s in nodeset and s not in reach:
                    reach.add(s)
                    frontier.append(s)
        if len(reach) != len(nodes):
            out.append(f"vertex {v} has a disconnected bag set")
    for u in sorted(subset):
        for v in g.neighbors(u):
            if u < v and v in subset:
                if not set(td.subtree(u)) & set(td.subtree(v)):
                    out.append(f"edge {u}-{v} uncovered")
    return out


def _max_bag_alpha(g: Graph, td: TreeDecomposition) -> int:
    return max((alpha_of_subset(g, bag) for bag in td.bags), default=0)


def _postcondition_failure(g: Graph, ell: int, msg: str) -> None:
    """Diagnose a failed surgery postcondition: hunt for the broken promise."""
    w = find_induced_path(g, 5)
    if w is not None:
        _raise_with_witness(g, w, f"{msg}; input contains an induced P5")
    w = find_induced_biclique(g, ell)
    if w is not None:
        _raise_with_witness(g, w, f"{msg}; input contains an induced biclique")
    raise DecompositionError(f"{msg}; no forbidden structure found (internal bug)")


# -- pair context -------------------------------------------------------------


@dataclass
class PairContext:
    """Everything the surgeries need about a root r and pair (x, y).

    All vertex sets use the host graph's ids; ``td`` decomposes the graph
    minus r.  Construction asserts the structural facts the surgeries rely
    on, converting any failure into a witness.
    """

    g: Graph
    root: int
    td: TreeDecomposition
    x: int
    y: int
    ell: int
    bad: bool = field(init=False)
    m: set[int] = field(init=False)
    u_all: set[int] = field(init=False)
    u0: set[int] = field(init=False)
    ux: set[int] = field(init=False)
    uy: set[int] = field(init=False)
    uxy: set[int] = field(init=False)
    w_x: set[int] = field(init=False)
    w_y: set[int] = field(init=False)
    w_xy: set[int] = field(init=False)
    movable: set[int] = field(init=False)
    comps: tuple[VertexSet, ...] = field(init=False)
    t_x: int = field(init=False)
    t_y: int = field(init=False)
    path_xy: tuple[int, ...] = field(init=False)


def build_pair_context(
    g: Graph, r: int, td: TreeDecomposition, x: int, y: int, ell: int
) -> PairContext:
    """Populate and check the derived sets for root ``r`` and pair (x, y).

    Preconditions: x, y are distinct neighbors of r not sharing a bag of
    ``td``.  Raises ForbiddenStructureFound with a verified witness when a
    structural assertion fails, which refutes the P5-free / biclique-free
    promise on the input.
    """
    ctx = PairContext(g=g, root=r, td=td, x=x, y=y, ell=ell)
    nr = set(g.neighbors(r))
    if x not in nr or y not in nr or x == y:
        raise ValueError("x and y must be distinct neighbors of the root")
    if set(td.subtree(x)) & set(td.subtree(y)):
        raise ValueError("pair is already co-bagged")
    if g.adjacent(x, y):
        raise DecompositionError("co-bag pair is adjacent but shares no bag")

    nrx, nry = _nrbar(g, r, x), _nrbar(g, r, y)
    ctx.m = nr | nrx | nry
    ctx.u_all = {u for u in nr if _nrbar(g, r, u) - (nrx | nry)}
    ctx.u0 = {u for u in ctx.u_all if not g.adjacent(u, x) and not g.adjacent(u, y)}
    ctx.ux = {u for u in ctx.u_all if g.adjacent(u, x) and not g.adjacent(u, y)}
    ctx.uy = {u for u in ctx.u_all if g.adjacent(u, y) and not g.adjacent(u, x)}
    ctx.uxy = {u for u in ctx.u_all if g.adjacent(u, x) and g.adjacent(u, y)}
    ctx.w_x = nrx - nry
    ctx.w_y = nry - nrx
    ctx.w_xy = nrx & nry
    ctx.bad = alpha_of_subset(g, ctx.w_x) >= ell
    outside = set(range(g.n)) - ctx.m - {r}
    ctx.comps = tuple(components(g, outside))
    path = td.path_between_subtrees(x, y)
    ctx.t_x, ctx.t_y = path[0], path[-1]
    ctx.path_xy = path
    ctx.movable = {
        u
        for u in ctx.u_all
        if (nrx - _nrbar(g, r, u)) <= nry
        and alpha_of_subset(g, nrx - _nrbar(g, r, u)) <= ell - 1
    }

    _assert_component_structure(ctx, nrx, nry)
    if ctx.bad:
        _assert_bad_pair_structure(ctx, nrx, nry)
    return ctx


def _assert_component_structure(ctx: PairContext, nrx: set, nry: set) -> None:
    """Component neighborhoods: inside U or the common outside set, and
    components complete to their private-side attachments."""
    g, r, x, y = ctx.g, ctx.root, ctx.x, ctx.y
    for comp in ctx.comps:
        inside = set(comp)
        nc = {u for c in comp for u in g.neighbors(c) if u not in inside}
        for w in sorted(nc - ctx.u_all - ctx.w_xy):
            c = min(v for v in comp if g.adjacent(w, v))
            if w in ctx.w_x:
                _raise_with_witness(
                    g, path_witness((c, w, x, r, y)),
                    "component touches a private neighbor of x",
                )
            if w in ctx.w_y:
                _raise_with_witness(
                    g, path_witness((c, w, y, r, x)),
                    "component touches a private neighbor of y",
                )
            raise DecompositionError(
                f"component neighbor {w} outside U and the common set"
            )
        for u in sorted(nc & (ctx.u0 | ctx.ux | ctx.uy)):
            if all(g.adjacent(u, c) for c in comp):
                continue
            c_adj, c_non = _adjacency_flip_on_path(g, comp, u)
            other = y if u in ctx.u0 | ctx.ux else x
            _raise_with_witness(
                g, path_witness((c_non, c_adj, u, r, other)),
                "component not complete to a one-sided attachment",
            )


def _assert_bad_pair_structure(ctx: PairContext, nrx: set, nry: set) -> None:
    """The completeness web around a bad pair, plus the movability claims."""
    g, r, x, y, ell = ctx.g, ctx.root, ctx.x, ctx.y, ctx.ell

    bad_pair = _first_noncomplete(g, ctx.w_x, ctx.w_y)
    if bad_pair is not None:
        wx, wy = bad_pair
        _raise_with_witness(
            g, path_witness((wx, x, r, y, wy)),
            "private sides of a bad pair are not complete to each other",
        )
    if alpha_of_subset(g, ctx.w_y) >= ell:
        side_a = max_independent_subset(g, ctx.w_x)[:ell]
        side_b = max_independent_subset(g, ctx.w_y)[:ell]
        _raise_with_witness(
            g, biclique_witness(side_a, side_b),
            "both private sides have large independent sets",
        )
    for u_x in sorted(ctx.ux):
        for u_y in sorted(ctx.uy):
            if g.adjacent(u_x, u_y):
                continue
            out_x = sorted(_nrbar(g, r, u_x) - nrx - nry)
            out_y = sorted(_nrbar(g, r, u_y) - nrx - nry)
            common = sorted(set(out_x) & set(out_y))
            if common:
                _raise_with_witness(
                    g, path_witness((x, u_x, common[0], u_y, y)),
                    "one-sided attachments of x and y are not complete",
                )
            wx, wy = out_x[0], out_y[0]
            if not g.adjacent(wx, wy):
                _raise_with_witness(
                    g, path_witness((wx, u_x, r, u_y, wy)),
                    "one-sided attachments of x and y are not complete",
                )
            _raise_with_witness(
                g, path_witness((x, u_x, wx, wy, u_y)),
                "one-sided attachments of x and y are not complete",
            )
    for u in sorted(ctx.u0 | ctx.uy):
        pair = _first_noncomplete(g, [u], ctx.w_x)
        if pair is not None:
            w_u = min(_nrbar(g, r, u) - nrx - nry)
            _raise_with_witness(
                g, path_witness((pair[1], x, r, u, w_u)),
                "outward neighbor of r misses a private neighbor of x",
            )
    for u in sorted(ctx.u0 | ctx.ux):
        pair = _first_noncomplete(g, [u], ctx.w_y)
        if pair is not None:
            w_u = min(_nrbar(g, r, u) - nrx - nry)
            _raise_with_witness(
                g, path_witness((pair[1], y, r, u, w_u)),
                "outward neighbor of r misses a private neighbor of y",
            )
    for comp in ctx.comps:
        inside = set(comp)
        nc = {u for c in comp for u in g.neighbors(c) if u not in inside}
        for w in sorted(nc & ctx.w_xy):
            if all(g.adjacent(w, c) for c in comp):
                continue
            c_adj, c_non = _adjacency_flip_on_path(g, comp, w)
            _raise_with_witness(
                g, path_witness((c_non, c_adj, w, x, r)),
                "component not complete to its common-side attachment",
            )
    # movability claims
    for u0 in sorted(ctx.u0 - ctx.movable):
        s = ctx.w_xy - _nrbar(g, r, u0)
        pair = _first_noncomplete(g, ctx.w_x, s)
        if pair is not None:
            wx, ws = pair
            _raise_with_witness(
                g, path_witness((u0, wx, x, ws, y)),
                "isolated-attachment vertex is not movable",
            )
        side_a = max_independent_subset(g, ctx.w_x)[:ell]
        side_b = max_independent_subset(g, s)[:ell]
        if len(side_b) < ell:
            raise DecompositionError(
                "unmovable isolated attachment without a large independent set"
            )
        _raise_with_witness(
            g, biclique_witness(side_a, side_b),
            "isolated-attachment vertex is not movable",
        )
    bag_ty = set(ctx.td.bags[ctx.t_y])
    for u_y in sorted(ctx.uy):
        if u_y not in ctx.movable and u_y not in bag_ty:
            raise DecompositionError(
                f"y-side attachment {u_y} neither movable nor anchored; "
                "the pair was not selected at maximum subtree distance"
            )


# -- pair selection -----------------------------------------------------------


def enumerate_uncobagged_pairs(
    g: Graph, r: int, td: TreeDecomposition
) -> list[tuple[int, int]]:
    """Ordered pairs of neighbors of r not sharing any bag, lexicographic."""
    nr = g.neighbors(r)
    out: list[tuple[int, int]] = []
    for x in nr:
        sx = set(td.subtree(x))
        for y in nr:
            if x == y or sx & set(td.subtree(y)):
                continue
            if g.adjacent(x, y):
                raise DecompositionError(
                    f"adjacent pair {x},{y} shares no bag; decomposition invalid"
                )
            out.append((x, y))
    return out


def select_pair(
    g: Graph, r: int, td: TreeDecomposition, ell: int
) -> Optional[tuple[int, int, bool]]:
    """The pair to merge next: bad pairs first, then maximum subtree distance.

    Bad means the private outside-neighborhood of x away from y holds an
    independent set of size ``ell``.  Ties break lexicographically.
    """
    pairs = enumerate_uncobagged_pairs(g, r, td)
    if not pairs:
        return None
    scored = []
    for x, y in pairs:
        wx = _nrbar(g, r, x) - _nrbar(g, r, y)
        bad = alpha_of_subset(g, wx) >= ell
        scored.append((bad, subtree_distance(td, x, y), x, y))
    bads = [s for s in scored if s[0]]
    pool = bads if bads else scored
    best_dist = max(s[1] for s in pool)
    cand = min((x, y) for b, dist, x, y in pool if dist == best_dist)
    return cand[0], cand[1], bool(bads)


# -- the two surgeries --------------------------------------------------------


def _grow_to_anchors(
    td: TreeDecomposition, nodes: tuple[int, ...], anchors: tuple[int, ...]
) -> set[int]:
    """Minimal connected node set containing ``nodes`` and all anchors."""
    target = set(nodes)
    for a in anchors:
        if a in target:
            continue
        parent = {a: -1}
        frontier = [a]
        hit = None
        while frontier and hit is None:
            nxt: list[int] = []
            for t in frontier:
                for s in td.node_neighbors(t):
                    if s not in parent:
                        parent[s] = t
                        if s in target:
                            hit = s
                            break
                        nxt.append(s)
                if hit is not None:
                    break
            frontier = nxt
        if hit is None:
            raise DecompositionError("anchor unreachable in node tree")
        while hit != -1:
            target.add(hit)
            hit = parent[hit]
    return target


def transform_plain_pair(ctx: PairContext) -> TreeDecomposition:
    """Restructure so x and y share a bag, when no bad pair exists.

    A master copy keeps the bags restricted to the r/x/y neighborhood set M;
    outward attachments are re-homed to span both anchor nodes, x flows
    along the anchor path, and each outside component gets its own copy of
    the tree carrying its local bags.  Apart from validity, the result keeps
    every co-bagged neighbor pair of r and adds (x, y).
    """
    g, td, ell = ctx.g, ctx.td, ctx.ell
    if ctx.bad:
        raise ValueError("plain transform requires a non-bad pair")
    k = td.node_count
    master: list[set[int]] = [set(bag) & ctx.m for bag in td.bags]
    for u in sorted(ctx.u_all):
        for t in _grow_to_anchors(td, td.subtree(u), (ctx.t_x, ctx.t_y)):
            master[t].add(u)
    for t in ctx.path_xy:
        master[t].add(ctx.x)

    bags: list[VertexSet] = [tuple(sorted(b)) for b in master]
    edges: list[tuple[int, int]] = list(td.edges)
    add_free = ctx.u_all - ctx.uxy
    for comp in ctx.comps:
        inside = set(comp)
        closed = inside | {
            u for c in comp for u in g.neighbors(c) if u not in inside
        }
        extra = (closed - inside) & add_free
        offset = len(bags)
        for t in range(k):
            bags.append(tuple(sorted((set(td.bags[t]) & closed) | extra)))
        edges.extend((a + offset, b + offset) for a, b in td.edges)
        edges.append((ctx.t_y, offset + ctx.t_y))

    out = TreeDecomposition(tuple(edges), tuple(bags))
    _check_surgery_output(ctx, out, "plain-pair surgery")
    return out


def transform_bad_pair(ctx: PairContext) -> TreeDecomposition:
    """Restructure so a bad pair x, y shares a bag.

    Outward attachments cannot move freely here, so only the movable ones
    spread to every master bag; the y-side stragglers ride the anchor path.
    Outside vertices whose master neighborhoods end up split across bags are
    pulled into the master tree along the unique minimal node set meeting
    all their attachment subtrees; what remains of each component hangs off
    the master at a single anchor node computed per component.
    """
    g, td, ell = ctx.g, ctx.td, ctx.ell
    if not ctx.bad:
        raise ValueError("bad-pair transform requires a bad pair")
    k = td.node_count
    r = ctx.root

    # intermediate master bags
    inter: list[set[int]] = [set(bag) & ctx.m for bag in td.bags]
    for t in range(k):
        inter[t] |= ctx.movable
    ride_along = {ctx.x} | (ctx.uy - ctx.movable)
    for t in ctx.path_xy:
        inter[t] |= ride_along

    # pull split outside vertices into the master
    subtree_of: dict[int, int] = {}
    for t, bag in enumerate(inter):
        for v in bag:
            subtree_of[v] = subtree_of.get(v, 0) | (1 << t)
    parent = _root_tree(td, 0)
    below = _descendant_masks(td, parent)
    final: list[set[int]] = [set(b) for b in inter]
    outside_sorted = sorted(set(range(g.n)) - ctx.m - {r})
    pulled: set[int] = set()
    for c in outside_sorted:
        marks = [subtree_of[a] for a in g.neighbors(c) if a in ctx.m]
        if not marks:
            continue
        common = marks[0]
        for sm in marks[1:]:
            common &= sm
        if common:
            continue
        nodes = _forced_nodes(td, parent, below, marks)
        for t in nodes:
            final[t].add(c)
        pulled.add(c)

    comp_of: dict[int, int] = {}
    for i, comp in enumerate(ctx.comps):
        for v in comp:
            comp_of[v] = i

    # anchor node per original outside component
    final_subtree: dict[int, set[int]] = {}
    for t, bag in enumerate(final):
        for v in bag:
            final_subtree.setdefault(v, set()).add(t)
    depth_from_tx = _bfs_depths(td, ctx.t_x)
    anchors: list[int] = []
    for comp in ctx.comps:
        inside = set(comp)
        nc = {u for c in comp for u in g.neighbors(c) if u not in inside}
        key = sorted(nc - ctx.uxy)
        fit = [
            t
            for t in range(k)
            if all(v in final[t] for v in key)
        ]
        if fit:
            t_c = min(fit, key=lambda t: (depth_from_tx[t], t))
        else:
            t_c = _split_anchor(td, final_subtree, key)
        c_prime = inside & pulled
        c_second = inside - pulled
        missing = [v for v in sorted(c_prime) if t_c not in final_subtree[v]]
        if missing:
            _postcondition_failure(
                g, ell, f"pulled vertices {missing} missed their anchor bag"
            )
        for d in sorted(c_second):
            for a in g.neighbors(d):
                if a in ctx.m and a not in final[t_c]:
                    _postcondition_failure(
                        g, ell,
                        f"attachment {a} of a remaining outside vertex {d} "
                        "missed the anchor bag",
                    )
        anchors.append(t_c)

    bags: list[VertexSet] = [tuple(sorted(b)) for b in final]
    edges: list[tuple[int, int]] = list(td.edges)
    m_prime = ctx.m | pulled
    rest = sorted(set(range(g.n)) - m_prime - {r})
    for dcomp in components(g, rest):
        inside = set(dcomp)
        nd = {u for c in dcomp for u in g.neighbors(c) if u not in inside}
        spread = nd - ctx.uxy
        offset = len(bags)
        closed = inside | nd
        for t in range(k):
            bags.append(tuple(sorted((set(td.bags[t]) & closed) | spread)))
        edges.extend((a + offset, b + offset) for a, b in td.edges)
        anchor = anchors[comp_of[min(dcomp)]]
        edges.append((anchor, offset + ctx.t_x))

    out = TreeDecomposition(tuple(edges), tuple(bags))
    _check_surgery_output(ctx, out, "bad-pair surgery")
    return out


def _root_tree(td: TreeDecomposition, root: int) -> list[int]:
    parent = [-2] * td.node_count
    parent[root] = -1
    frontier = [root]
    while frontier:
        t = frontier.pop()
        for s in td.node_neighbors(t):
            if parent[s] == -2:
                parent[s] = t
                frontier.append(s)
    return parent


def _descendant_masks(td: TreeDecomposition, parent: list[int]) -> list[int]:
    order = sorted(range(td.node_count), key=lambda t: -_depth_of(parent, t))
    below = [1 << t for t in range(td.node_count)]
    for t in order:
        if parent[t] >= 0:
            below[parent[t]] |= below[t]
    return below


def _depth_of(parent: list[int], t: int) -> int:
    d = 0
    while parent[t] >= 0:
        t = parent[t]
        d += 1
    return d


def _bfs_depths(td: TreeDecomposition, start: int) -> list[int]:
    depth = [-1] * td.node_count
    depth[start] = 0
    frontier = [start]
    while frontier:
        nxt = []
        for t in frontier:
            for s in td.node_neighbors(t):
                if depth[s] < 0:
                    depth[s] = depth[t] + 1
                    nxt.append(s)
        frontier = nxt
    return depth


def _forced_nodes(
    td: TreeDecomposition, parent: list[int], below: list[int], marks: list[int]
) -> set[int]:
    """Nodes of every tree edge separating two attachment subtrees entirely.

    This is the unique minimum connected node set meeting all the given
    subtrees when they have no common node.
    """
    out: set[int] = set()
    for child in range(td.node_count):
        p = parent[child]
        if p < 0:
            continue
        side = below[child]
        if any(sm & ~side == 0 for sm in marks) and any(
            sm & side == 0 for sm in marks
        ):
            out.add(child)
            out.add(p)
    if not out:
        raise DecompositionError("split neighborhood without a separating edge")
    return out


def _split_anchor(
    td: TreeDecomposition, final_subtree: dict[int, set[int]], key: list[int]
) -> int:
    """Anchor for a component whose attachments fit no single master bag."""
    for i, a in enumerate(key):
        for b in key[i + 1 :]:
            sa, sb = final_subtree[a], final_subtree[b]
            if sa & sb:
                continue
            path = _path_between_node_sets(td, sa, sb)
            return min(path)
    raise DecompositionError("attachments pairwise meet yet fit no bag")


def _path_between_node_sets(
    td: TreeDecomposition, src: set[int], dst: set[int]
) -> list[int]:
    parent = {t: -1 for t in src}
    frontier = sorted(src)
    goal = None
    while frontier and goal is None:
        nxt: list[int] = []
        for t in frontier:
            for s in td.node_neighbors(t):
                if s not in parent:
                    parent[s] = t
                    if s in dst:
                        goal = s
                        break
                    nxt.append(s)
            if goal is not None:
                break
        frontier = nxt
    if goal is None:
        raise DecompositionError("node sets unreachable")
    path = [goal]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path


def _check_surgery_output(
    ctx: PairContext, out: TreeDecomposition, label: str
) -> None:
    g, ell, r = ctx.g, ctx.ell, ctx.root
    subset = set(range(g.n)) - {r}
    problems = _validate_over(g, out, subset)
    if problems:
        _postcondition_failure(g, ell, f"{label} broke validity: {problems[:3]}")
    if _max_bag_alpha(g, out) > 4 * ell:
        _postcondition_failure(g, ell, f"{label} exceeded the 4*ell bag bound")
    if not set(out.subtree(ctx.x)) & set(out.subtree(ctx.y)):
        raise DecompositionError(f"{label} failed to co-bag the chosen pair")


# -- the saturation loop and the full pipeline --------------------------------


def saturate_root(
    g: Graph,
    r: int,
    td: TreeDecomposition,
    ell: int,
    log: Optional[list] = None,
) -> TreeDecomposition:
    """Restructure until every pair of neighbors of r shares a bag.

    Each round merges the selected pair and strictly grows the set of
    co-bagged neighbor pairs, so at most (deg r choose 2) rounds run.  The
    decomposition is compressed between rounds; compression never drops a
    co-bagged pair.
    """
    nr = g.neighbors(r)
    entry = {"root": r, "degree": len(nr), "iterations": 0, "pairs": []}
    limit = comb(len(nr), 2)
    while True:
        sel = select_pair(g, r, td, ell)
        if sel is None:
            break
        x, y, bad = sel
        before = cobagged_pairs(td, nr)
        ctx = build_pair_context(g, r, td, x, y, ell)
        new_td = transform_bad_pair(ctx) if bad else transform_plain_pair(ctx)
        after = cobagged_pairs(new_td, nr)
        if not (before < after and frozenset((x, y)) in after):
            raise DecompositionError(
                "surgery did not strictly grow the co-bagged pairs"
            )
        td = compress(new_td)
        if cobagged_pairs(td, nr) != after:
            raise DecompositionError("compression changed the co-bagged pairs")
        entry["iterations"] += 1
        entry["pairs"].append((x, y, bad, "bad" if bad else "plain"))
        if entry["iterations"] > limit:
            raise DecompositionError(
                f"saturation exceeded {limit} rounds for degree {len(nr)}"
            )
    if log is not None:
        log.append(entry)
    return td


def decompose(
    g: Graph,
    ell: int,
    check_p5: bool = True,
    log: Optional[list] = None,
) -> Union[Witness, TreeDecomposition]:
    """An induced K_{ell,ell}, or a tree decomposition with bag alpha <= 4*ell.

    Raises ForbiddenStructureFound if the graph contains an induced
    5-vertex path (checked up front when ``check_p5`` is set, and whenever
    an internal assertion uncovers one).
    """
    if ell < 2:
        raise ValueError("ell must be >= 2")
    if check_p5:
        w = find_induced_path(g, 5)
        if w is not None:
            raise ForbiddenStructureFound(w, "input contains an induced P5")
    result = _decompose(g, ell, log)
    if isinstance(result, TreeDecomposition):
        subset = set(range(g.n))
        problems = _validate_over(g, result, subset)
        if problems:
            raise DecompositionError(f"final decomposition invalid: {problems[:3]}")
        if _max_bag_alpha(g, result) > 4 * ell:
            raise DecompositionError("final decomposition exceeds the bag bound")
    return result


def _lift_witness(g: Graph, w: Witness, mapping: VertexSet) -> Witness:
    lifted = Witness(
        w.kind, tuple(tuple(mapping[v] for v in part) for part in w.parts)
    )
    if not verify_witness(g, lifted):
        raise DecompositionError("witness did not survive id lifting")
    return lifted


def _decompose(
    g: Graph, ell: int, log: Optional[list]
) -> Union[Witness, TreeDecomposition]:
    if g.n == 0:
        return single_bag_decomposition(())
    if g.n == 1:
        return single_bag_decomposition((0,))
    report = low_alpha_vertex(g, ell, 2)
    if report.witness is not None:
        if report.witness.kind == BICLIQUE:
            return report.witness
        raise ForbiddenStructureFound(
            report.witness, "input contains an induced P5"
        )
    r = report.vertex
    sub, mapping = induced_subgraph(g, [v for v in range(g.n) if v != r])
    mark = len(log) if log is not None else 0
    try:
        inner = _decompose(sub, ell, log)
    except ForbiddenStructureFound as exc:
        lifted = _lift_witness(g, exc.witness, mapping)
        if lifted.kind == BICLIQUE:
            return lifted
        raise ForbiddenStructureFound(lifted, str(exc)) from None
    finally:
        if log is not None:
            for entry in log[mark:]:
                entry["root"] = mapping[entry["root"]]
                entry["pairs"] = [
                    (mapping[x], mapping[y], bad, mode)
                    for x, y, bad, mode in entry["pairs"]
                ]
    if isinstance(inner, Witness):
        return _lift_witness(g, inner, mapping)
    td = inner.relabel_vertices(mapping)
    try:
        td = saturate_root(g, r, td, ell, log)
    except ForbiddenStructureFound as exc:
        if exc.witness.kind == BICLIQUE:
            return exc.witness
        raise
    nr = g.neighbors(r)
    t = find_bag_containing_set(td, nr)
    if t is None:
        raise DecompositionError(
            "no bag holds all neighbors of the root after saturation"
        )
    bags = td.bags + (closed_neighborhood(g, r),)
    edges = td.edges + ((t, len(td.bags)),)
    return TreeDecomposition(edges, bags)


def approximate_tia(
    g: Graph, log: Optional[list] = None
) -> tuple[int, TreeDecomposition, int]:
    """Constant-factor approximation of the tree-independence number.

    Runs the engine for ell = 1, 2, ... and stops at the first decomposition
    outcome.  Returns (bag independence k*, the decomposition, ell*); the
    sandwich ell*-1 <= tree-alpha <= k* <= 4*ell* holds for P5-free inputs.
    """
    w = find_induced_path(g, 5)
    if w is not None:
        raise ForbiddenStructureFound(w, "input contains an induced P5")
    if g.edge_count == 0:
        if g.n == 0:
            return 0, single_bag_decomposition(()), 1
        bags = tuple((v,) for v in range(g.n))
        edges = tuple((i, i + 1) for i in range(g.n - 1))
        return 1, TreeDecomposition(edges, bags), 1
    ell = 2
    while True:
        got = decompose(g, ell, check_p5=False, log=log)
        if isinstance(got, TreeDecomposition):
            from .treedecomp import td_alpha as _td_alpha

            return _td_alpha(g, got), got, ell
        ell += 1
        if ell > g.n // 2 + 1:
            raise DecompositionError("no decomposition up to the biclique limit")
