"""Exact combinatorial search primitives.

Maximum independent set (branch and bound over bitmasks), bipartite maximum
matching with a Konig vertex-cover certificate, and brute-force induced
pattern detection.  Everything here is exact and deterministic: exactness is
mandatory because callers compare independence numbers against sharp
thresholds, and determinism makes every downstream tie-break reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import Graph, VertexSet, is_independent, vertex_set


# -- witnesses -------------------------------------------------------------

PATH = "path"
BICLIQUE = "biclique"
DK2 = "dk2"
MATCHING = "matching"

_KINDS = (PATH, BICLIQUE, DK2, MATCHING)


@dataclass(frozen=True)
class Witness:
    """A self-verifying forbidden-structure certificate.

    kind "path": parts is a single tuple, the path vertices in order.
    kind "biclique": parts are the two sides (sorted), equal in size.
    kind "dk2" / "matching": parts are the edges of an induced matching.
    """

    kind: str
    parts: tuple[tuple[int, ...], ...]

    def to_record(self) -> dict:
        return {"kind": self.kind, "parts": [list(p) for p in self.parts]}

    def size(self) -> int:
        if self.kind == PATH:
            return len(self.parts[0])
        if self.kind == BICLIQUE:
            return len(self.parts[0])
        return len(self.parts)


def path_witness(vertices: Sequence[int]) -> Witness:
    return Witness(PATH, (tuple(vertices),))


def biclique_witness(a: Iterable[int], b: Iterable[int]) -> Witness:
    return Witness(BICLIQUE, (vertex_set(a), vertex_set(b)))


def matching_witness(edges: Iterable[tuple[int, int]], kind: str = MATCHING) -> Witness:
    return Witness(kind, tuple(tuple(sorted(e)) for e in edges))


class ForbiddenStructureFound(Exception):
    """Signals that a forbidden induced structure was found in the input."""

    def __init__(self, witness: Witness, message: str = ""):
        super().__init__(message or f"found induced {witness.kind}")
        self.witness = witness


def verify_witness(g: Graph, w: Witness) -> bool:
    """Check a witness against ``g``: all required edges and non-edges.

    Never raises; False is the failure signal (including malformed input).
    """
    try:
        if w.kind == PATH:
            (seq,) = w.parts
            if len(seq) < 1 or len(set(seq)) != len(seq):
                return False
            for v in seq:
                if not (0 <= v < g.n):
                    return False
            for i, u in enumerate(seq):
                for j in range(i + 1, len(seq)):
                    want = j == i + 1
                    if g.adjacent(u, seq[j]) != want:
                        return False
            return True
        if w.kind == BICLIQUE:
            a, b = w.parts
            if not a or not b:
                return False
            if set(a) & set(b):
                return False
            for v in a + b:
                if not (0 <= v < g.n):
                    return False
            if not (is_independent(g, a) and is_independent(g, b)):
                return False
            return all(g.adjacent(u, v) for u in a for v in b)
        if w.kind in (DK2, MATCHING):
            edges = w.parts
            if not edges:
                return False
            ends: list[int] = []
            for e in edges:
                if len(e) != 2:
                    return False
                ends.extend(e)
            if len(set(ends)) != len(ends):
                return False
            for v in ends:
                if not (0 <= v < g.n):
                    return False
            for u, v in edges:
                if not g.adjacent(u, v):
                    return False
            for i, e in enumerate(edges):
                for f in edges[i + 1 :]:
                    if any(g.adjacent(p, q) for p in e for q in f):
                        return False
            return True
        return False
    except (ValueError, TypeError):
        return False


# -- exact independent sets ------------------------------------------------


def _clique_cover_bound(bits: Sequence[int], mask: int) -> int:
    """Greedy clique cover of the masked vertices; its size bounds alpha."""
    cliques: list[int] = []
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        nb = bits[v]
        for i, c in enumerate(cliques):
            if c & ~nb == 0:  # v adjacent to every current member
                cliques[i] = c | (1 << v)
                break
        else:
            cliques.append(1 << v)
    return len(cliques)


def _mis_mask(bits: Sequence[int], mask: int) -> int:
    """Maximum independent set of the masked subgraph, as a bitmask.

    Branches on a maximum-degree vertex (ties to the lowest id), trying the
    include branch first; ties between optima keep the first one found, which
    makes the result deterministic.
    """
    best = 0
    best_size = -1

    def rec(mask: int, chosen: int, size: int) -> None:
        nonlocal best, best_size
        # strip vertices isolated within mask: always take them
        while True:
            m, grabbed = mask, 0
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                if bits[v] & mask == 0:
                    grabbed |= 1 << v
            if not grabbed:
                break
            chosen |= grabbed
            size += bin(grabbed).count("1")
            mask &= ~grabbed
        if not mask:
            if size > best_size:
                best_size = size
                best = chosen
            return
        if size + _clique_cover_bound(bits, mask) <= best_size:
            return
        # pivot: max degree within mask, lowest id on ties
        pivot, pdeg = -1, -1
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            d = bin(bits[v] & mask).count("1")
            if d > pdeg:
                pivot, pdeg = v, d
        rec(mask & ~(bits[pivot] | (1 << pivot)), chosen | (1 << pivot), size + 1)
        rec(mask & ~(1 << pivot), chosen, size)

    rec(mask, 0, 0)
    return best


def max_independent_set(g: Graph) -> VertexSet:
    """A maximum independent set, deterministic across runs."""
    full = (1 << g.n) - 1
    chosen = _mis_mask(g.adjacency_bits(), full)
    return tuple(v for v in range(g.n) if chosen >> v & 1)


def alpha_mask(g: Graph, mask: int) -> int:
    if mask == 0:
        return 0
    return bin(_mis_mask(g.adjacency_bits(), mask)).count("1")


def alpha_of_subset(g: Graph, s: Iterable[int]) -> int:
    """Independence number of the subgraph induced by ``s``."""
    mask = 0
    for v in set(s):
        g._check_vertex(v)
        mask |= 1 << v
    return alpha_mask(g, mask)


def max_independent_subset(g: Graph, s: Iterable[int]) -> VertexSet:
    """A maximum independent set within ``s``, deterministic."""
    mask = 0
    for v in set(s):
        g._check_vertex(v)
        mask |= 1 << v
    chosen = _mis_mask(g.adjacency_bits(), mask)
    return tuple(v for v in range(g.n) if chosen >> v & 1)


# -- bipartite matching with Konig certificate ------------------------------


@dataclass(frozen=True)
class MatchingResult:
    """Maximum matching plus a vertex cover of equal size (Konig)."""

    edges: tuple[tuple[int, int], ...]
    cover: VertexSet

    def partner(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out


def bipartite_max_matching(g: Graph, x: Iterable[int], y: Iterable[int]) -> MatchingResult:
    """Maximum matching between independent sides ``x`` and ``y``.

    Augmenting-path search; the cover comes from the final alternating
    reachability layering, so |edges| == |cover| always holds.
    """
    xs, ys = vertex_set(x), vertex_set(y)
    if set(xs) & set(ys):
        raise ValueError("sides overlap")
    if not is_independent(g, xs):
        raise ValueError("side X is not independent")
    if not is_independent(g, ys):
        raise ValueError("side Y is not independent")
    yset = set(ys)
    adj = {u: [v for v in g.neighbors(u) if v in yset] for u in xs}
    match_x: dict[int, int] = {}
    match_y: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for v in adj[u]:
            if v in seen:
                continue
            seen.add(v)
            if v not in match_y or augment(match_y[v], seen):
                match_x[u] = v
                match_y[v] = u
                return True
        return False

    for u in xs:
        augment(u, set())

    # Konig: alternate from unmatched X along non-matching then matching edges
    reach_x = {u for u in xs if u not in match_x}
    reach_y: set[int] = set()
    frontier = list(sorted(reach_x))
    while frontier:
        u = frontier.pop()
        for v in adj[u]:
            if v in reach_y:
                continue
            if match_x.get(u) == v:
                continue
            reach_y.add(v)
            w = match_y.get(v)
            if w is not None and w not in reach_x:
                reach_x.add(w)
                frontier.append(w)
    cover = vertex_set([u for u in xs if u not in reach_x] + [v for v in ys if v in reach_y])
    edges = tuple(sorted((u, v) for u, v in match_x.items()))
    return MatchingResult(edges=edges, cover=cover)


# -- induced pattern searches -----------------------------------------------


def find_induced_path(g: Graph, t: int) -> Optional[Witness]:
    """First induced path on ``t`` vertices in a deterministic DFS order.

    Paths are explored by ascending start vertex and ascending extensions;
    orientations are canonicalized by requiring first < last endpoint for
    t >= 2.  Exhaustive: returns None only if no induced P_t exists.
    """
    if t < 1:
        raise ValueError("path length must be >= 1")
    if t == 1:
        return path_witness((0,)) if g.n >= 1 else None
    bits = g.adjacency_bits()

    path: list[int] = []

    def extend(last: int, banned: int) -> Optional[tuple[int, ...]]:
        # banned: path vertices plus neighbors of all path vertices but last
        if len(path) == t:
            if path[0] < path[-1]:
                return tuple(path)
            return None
        options = bits[last] & ~banned
        while options:
            v = (options & -options).bit_length() - 1
            options &= options - 1
            path.append(v)
            got = extend(v, banned | (1 << v) | bits[last])
            if got is not None:
                return got
            path.pop()
        return None

    for start in range(g.n):
        path[:] = [start]
        got = extend(start, 1 << start)
        if got is not None:
            return path_witness(got)
    return None


def _independent_sets_of_size(g: Graph, size: int, within: Sequence[int]):
    """Yield independent ``size``-subsets of ``within`` in lexicographic order."""
    bits = g.adjacency_bits()
    pool = sorted(within)
    chosen: list[int] = []

    def rec(start: int):
        if len(chosen) == size:
            yield tuple(chosen)
            return
        need = size - len(chosen)
        for i in range(start, len(pool) - need + 1):
            v = pool[i]
            if any(bits[u] >> v & 1 for u in chosen):
                continue
            chosen.append(v)
            yield from rec(i + 1)
            chosen.pop()

    yield from rec(0)


def find_induced_complete_bipartite(g: Graph, a: int, b: int) -> Optional[Witness]:
    """First induced K_{a,b}: independent sides complete to each other.

    The ``a``-side is enumerated lexicographically; the ``b``-side is the
    first independent b-subset of the common neighborhood.
    """
    if a < 1 or b < 1:
        raise ValueError("side sizes must be >= 1")
    full = (1 << g.n) - 1
    bits = g.adjacency_bits()
    for side_a in _independent_sets_of_size(g, a, range(g.n)):
        common = full
        for v in side_a:
            common &= bits[v]
        if bin(common).count("1") < b:
            continue
        cands = [v for v in range(g.n) if common >> v & 1]
        for side_b in _independent_sets_of_size(g, b, cands):
            return Witness(BICLIQUE, (tuple(side_a), tuple(side_b)))
    return None


def find_induced_biclique(g: Graph, ell: int) -> Optional[Witness]:
    """First induced balanced biclique K_{ell,ell}, or None."""
    return find_induced_complete_bipartite(g, ell, ell)


def find_induced_subdivided_star(
    g: Graph, d: int
) -> Optional[tuple[int, tuple[tuple[int, int], ...]]]:
    """First induced once-subdivided d-star: center, plus (mid, leaf) rays.

    Each mid is adjacent to the center and its own leaf only; mids, leaves
    and the center are otherwise pairwise nonadjacent.  Returns None if no
    such induced subgraph exists.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    bits = g.adjacency_bits()
    for center in range(g.n):
        cn = bits[center]
        for mids in _independent_sets_of_size(g, d, g.neighbors(center)):
            mid_mask = sum(1 << m for m in mids)
            # leaf candidates per ray: private neighbors of each mid
            cand: list[list[int]] = []
            ok = True
            for i, m in enumerate(mids):
                others = 0
                for j, m2 in enumerate(mids):
                    if j != i:
                        others |= bits[m2]
                pool = bits[m] & ~cn & ~others & ~(1 << center) & ~mid_mask
                lst = [v for v in range(g.n) if pool >> v & 1]
                if not lst:
                    ok = False
                    break
                cand.append(lst)
            if not ok:
                continue
            leaves: list[int] = []

            def pick(i: int) -> bool:
                if i == d:
                    return True
                for v in cand[i]:
                    if v in leaves or any(bits[v] >> u & 1 for u in leaves):
                        continue
                    leaves.append(v)
                    if pick(i + 1):
                        return True
                    leaves.pop()
                return False

            if pick(0):
                rays = tuple((m, l) for m, l in zip(mids, leaves))
                return center, rays
    return None


def brute_force_alpha(g: Graph) -> int:
    """Reference independence number by subset enumeration (tiny graphs)."""
    best = 0
    for mask in range(1 << g.n):
        size = bin(mask).count("1")
        if size <= best:
            continue
        vs = [v for v in range(g.n) if mask >> v & 1]
        if is_independent(g, vs):
            best = size
    return best
