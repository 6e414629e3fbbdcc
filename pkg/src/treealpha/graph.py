"""Immutable simple undirected graphs with dense 0-based vertex ids.

Every structure in this library is built on top of this module: graphs are
frozen after construction, all operations are pure functions, and iteration
order is deterministic (ascending vertex ids) so downstream tie-breaking is
reproducible.
"""

from __future__ import annotations

from typing import Iterable


class GraphParseError(ValueError):
    """Raised for malformed graph input; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class Graph:
    """A finite simple undirected graph on vertices ``0 .. n-1``.

    Adjacency is stored both as sorted tuples (for deterministic iteration)
    and as integer bitmasks (for fast exact search).  Instances are immutable
    and safe for concurrent reads.
    """

    __slots__ = ("n", "_adj", "_bits", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u},{v})")
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        self.n = n
        self._m = m
        self._adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in adj
        )
        self._bits: tuple[int, ...] = tuple(
            sum(1 << v for v in s) for s in self._adj
        )

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edge_count(self) -> int:
        return self._m

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def adjacent(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._bits[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def neighbor_bits(self, v: int) -> int:
        return self._bits[v]

    def adjacency_bits(self) -> tuple[int, ...]:
        return self._bits

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"invalid vertex {v} for graph with n={self.n}")

    # -- equality / hashing ------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


VertexSet = tuple[int, ...]


def vertex_set(members: Iterable[int]) -> VertexSet:
    """Canonical sorted duplicate-free tuple of vertex ids."""
    return tuple(sorted(set(members)))


def open_neighborhood(g: Graph, v: int) -> VertexSet:
    """The neighbors of ``v``, excluding ``v`` itself."""
    return g.neighbors(v)

def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    """The neighbors of ``v`` together with ``v``."""
    return vertex_set(g.neighbors(v) + (v,))


def closed_neighborhood_of_set(g: Graph, s: Iterable[int]) -> VertexSet:
    out: set[int] = set()
    for v in s:
        out.add(v)
        out.update(g.neighbors(v))
    return tuple(sorted(out))


def components(g: Graph, s: Iterable[int]) -> list[VertexSet]:
    """Connected components of the subgraph induced by ``s``.

    Returned as sorted vertex tuples, ordered by their minimum vertex id.
    """
    pool = set(s)
    for v in pool:
        g._check_vertex(v)
    out: list[VertexSet] = []
    while pool:
        start = min(pool)
        comp = {start}
        frontier = [start]
        pool.remove(start)
        while frontier:
            u = frontier.pop()
            for w in g.neighbors(u):
                if w in pool:
                    pool.remove(w)
                    comp.add(w)
                    frontier.append(w)
        out.append(tuple(sorted(comp)))
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(components(g, range(g.n))) == 1


def is_complete_between(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff every vertex of ``a`` is adjacent to every vertex of ``b``.

    Vacuously true when either side is empty; the sides must be disjoint.
    """
    aset, bset = set(a), set(b)
    if aset & bset:
        raise ValueError(f"sides overlap: {sorted(aset & bset)}")
    bmask = sum(1 << v for v in bset)
    return all(g.neighbor_bits(u) & bmask == bmask for u in aset)


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    sl = sorted(set(s))
    return all(
        not g.adjacent(u, v) for i, u in enumerate(sl) for v in sl[i + 1 :]
    )


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, VertexSet]:
    """Subgraph induced by ``s`` plus the map from new ids back to old ones.

    New vertex ``i`` corresponds to ``mapping[i]``, the i-th smallest member
    of ``s``.
    """
    mapping = vertex_set(s)
    for v in mapping:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(mapping)}
    edges = [
        (index[u], index[v])
        for u in mapping
        for v in g.neighbors(u)
        if u < v and v in index
    ]
    return Graph(len(mapping), edges), mapping


# -- parsing and serialization --------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the plain edge-list format or DIMACS ``p edge`` payloads.

    Edge-list: first non-comment line is the vertex count ``n``; every later
    line is one ``u v`` pair, 0-based.  DIMACS: ``p edge n m`` header, then
    ``e u v`` lines with 1-based ids (converted to 0-based).  Comment lines
    start with ``c`` or ``#``.
    """
    n: int | None = None
    dimacs = False
    declared_m: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()

    def add_edge(u: int, v: int, line_no: int) -> None:
        if n is None:
            raise GraphParseError(line_no, "edge before header")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(line_no, f"endpoint out of range: {u} {v}")
        if u == v:
            raise GraphParseError(line_no, f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(line_no, f"duplicate edge {key[0]} {key[1]}")
        seen.add(key)
        edges.append(key)

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(("c", "#")) and not line[0].isdigit():
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphParseError(line_no, f"malformed DIMACS header: {line!r}")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphParseError(line_no, f"non-integer header field: {line!r}")
            if n < 0 or declared_m < 0:
                raise GraphParseError(line_no, "negative header value")
            dimacs = True
        elif parts[0] == "e":
            if not dimacs:
                raise GraphParseError(line_no, "'e' line outside DIMACS payload")
            if len(parts) != 3:
                raise GraphParseError(line_no, f"malformed edge line: {line!r}")
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise GraphParseError(line_no, f"non-integer endpoint: {line!r}")
            add_edge(u, v, line_no)
        elif n is None:
            if len(parts) != 1:
                raise GraphParseError(line_no, f"malformed header line: {line!r}")
            try:
                n = int(parts[0])
            except ValueError:
                raise GraphParseError(line_no, f"non-integer vertex count: {line!r}")
            if n < 0:
                raise GraphParseError(line_no, "negative vertex count")
        else:
            if len(parts) != 2:
                raise GraphParseError(line_no, f"malformed edge line: {line!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphParseError(line_no, f"non-integer endpoint: {line!r}")
            add_edge(u, v, line_no)

    if n is None:
        raise GraphParseError(1, "missing header")
    if dimacs and declared_m is not None and declared_m != len(edges):
        raise GraphParseError(1, f"declared {declared_m} edges, found {len(edges)}")
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    """Canonical edge-list text: vertex count, then edges sorted lexically."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
