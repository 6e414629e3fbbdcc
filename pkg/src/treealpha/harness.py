"""Corpus generation, the exact tree-independence oracle, and bound audits.

The oracle walks the chordal-completion search space implicitly: every
elimination ordering induces a triangulation whose maximal cliques are the
elimination bags, and the subset dynamic program minimizes the worst bag
independence number over all orderings.  Generators certify membership in
the requested hereditary class by exact pattern search instead of trusting
their own construction.
"""

from __future__ import annotations

import csv
import os
import random
import time
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .decomposer import approximate_tia
from .degeneracy import alpha_degeneracy
from .graph import Graph
from .oracles import (
    ForbiddenStructureFound,
    alpha_of_subset,
    find_induced_complete_bipartite,
    find_induced_path,
    find_induced_subdivided_star,
)
from .treedecomp import td_alpha, validate

ORACLE_CAP_ENV = "TREEALPHA_ORACLE_CAP"
DEFAULT_ORACLE_CAP = 8


def oracle_cap() -> int:
    return int(os.environ.get(ORACLE_CAP_ENV, DEFAULT_ORACLE_CAP))


# -- exact tree-independence number -------------------------------------------


def exact_tia(g: Graph, cap: Optional[int] = None) -> int:
    """Exact tree-independence number for small graphs.

    Minimizes, over all elimination orderings, the maximum independence
    number of an elimination bag; bags absorb fill-in through eliminated
    vertices, which sweeps exactly the chordal completions of the graph.
    """
    limit = cap if cap is not None else oracle_cap()
    if g.n > limit:
        raise ValueError(f"n={g.n} exceeds the oracle cap {limit}")
    if g.n == 0:
        return 0
    bits = g.adjacency_bits()
    full = (1 << g.n) - 1

    def bag_alpha(v: int, eliminated: int) -> int:
        # component of eliminated vertices reachable from v, then its rim
        seen = 1 << v
        frontier = 1 << v
        reach = bits[v]
        while True:
            inner = reach & eliminated & ~seen
            if not inner:
                break
            seen |= inner
            while inner:
                u = (inner & -inner).bit_length() - 1
                inner &= inner - 1
                reach |= bits[u]
        bag = (reach & ~eliminated) | (1 << v)
        return alpha_of_subset(g, [u for u in range(g.n) if bag >> u & 1])

    best = [0] * (full + 1)
    for s in range(1, full + 1):
        val = None
        rest = s
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            prev = s & ~(1 << v)
            cand = max(best[prev], bag_alpha(v, prev))
            if val is None or cand < val:
                val = cand
        best[s] = val
    return best[full]


def is_chordal(g: Graph) -> bool:
    """Maximum-cardinality search plus perfect-elimination verification."""
    n = g.n
    if n == 0:
        return True
    weight = [0] * n
    order: list[int] = []
    placed = [False] * n
    for _ in range(n):
        v = max((u for u in range(n) if not placed[u]), key=lambda u: (weight[u], -u))
        placed[v] = True
        order.append(v)
        for u in g.neighbors(v):
            if not placed[u]:
                weight[u] += 1
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in g.neighbors(v) if pos[u] < pos[v]]
        if not earlier:
            continue
        last = max(earlier, key=lambda u: pos[u])
        for u in earlier:
            if u != last and not g.adjacent(u, last):
                return False
    return True


def induced_biclique_number(g: Graph) -> int:
    """Largest ell with an induced balanced biclique K_{ell,ell}."""
    ell = 0
    while find_induced_complete_bipartite(g, ell + 1, ell + 1) is not None:
        ell += 1
    return ell


# -- forbidden-pattern specifications ------------------------------------------


def parse_pattern(text: str) -> tuple:
    """Parse ``path:T``, ``biclique:A:B``, ``kll:L``, ``k2l:L``, ``substar:D``."""
    parts = text.strip().lower().split(":")
    if parts[0] in ("path", "p"):
        return ("path", int(parts[1]))
    if parts[0] == "p5":
        return ("path", 5)
    if parts[0] == "biclique":
        return ("biclique", int(parts[1]), int(parts[2]))
    if parts[0] == "kll":
        ell = int(parts[1])
        return ("biclique", ell, ell)
    if parts[0] == "k2l":
        return ("biclique", 2, int(parts[1]))
    if parts[0] == "substar":
        return ("substar", int(parts[1]))
    raise ValueError(f"unknown pattern {text!r}")


def pattern_absent(g: Graph, pattern: tuple) -> bool:
    kind = pattern[0]
    if kind == "path":
        return find_induced_path(g, pattern[1]) is None
    if kind == "biclique":
        return find_induced_complete_bipartite(g, pattern[1], pattern[2]) is None
    if kind == "substar":
        return find_induced_subdivided_star(g, pattern[1]) is None
    raise ValueError(f"unknown pattern {pattern!r}")


# -- generators ----------------------------------------------------------------


def _random_cograph_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Random union/join composition tree over n labeled vertices."""
    if n == 1:
        return []
    a = rng.randint(1, n - 1)
    left = _random_cograph_edges(a, rng)
    right = [(u + a, v + a) for u, v in _random_cograph_edges(n - a, rng)]
    edges = left + right
    if rng.random() < 0.5:
        edges += [(u, v) for u in range(a) for v in range(a, n)]
    return edges


def gen_p5_free(n: int, seed: int, method: str = "union-join") -> Graph:
    """A certified P5-free graph, deterministic per (n, seed, method)."""
    if method not in ("union-join", "perturb-filter"):
        raise ValueError(f"unknown method {method!r}")
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(f"p5free:{method}:{n}:{seed}")
    g = Graph(n, _random_cograph_edges(n, rng))
    if method == "perturb-filter":
        edges = {tuple(sorted(e)) for e in g.edges()}
        for _ in range(3 * n):
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u == v:
                continue
            e = (min(u, v), max(u, v))
            trial = set(edges)
            if e in trial:
                trial.remove(e)
            else:
                trial.add(e)
            candidate = Graph(n, sorted(trial))
            if find_induced_path(candidate, 5) is None:
                edges = trial
                g = candidate
    w = find_induced_path(g, 5)
    if w is not None:
        raise RuntimeError("generator produced a graph with an induced P5")
    return g


def gen_class_free(
    n: int,
    seed: int,
    forbidden: Sequence[tuple],
    flip_budget: Optional[int] = None,
    base_attempts: int = 64,
) -> Graph:
    """Rejection-and-perturbation sampler for a finite forbidden-pattern class.

    Starts from a random certified seed graph (edgeless, clique unions, or a
    cograph), then applies random edge flips, keeping each flip only if all
    forbidden patterns stay absent.  Every returned graph is re-certified.
    Raises when no admissible seed graph is found within the budget.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(f"classfree:{n}:{seed}:{sorted(forbidden)!r}")
    base: Optional[Graph] = None
    for _ in range(base_attempts):
        style = rng.randrange(3)
        if style == 0:
            cand = Graph(n, [])
        elif style == 1:
            edges = []
            start = 0
            while start < n:
                size = min(n - start, rng.randint(1, 4))
                block = range(start, start + size)
                edges += [(u, v) for u in block for v in block if u < v]
                start += size
            cand = Graph(n, edges)
        else:
            cand = Graph(n, _random_cograph_edges(n, rng))
        if all(pattern_absent(cand, p) for p in forbidden):
            base = cand
            break
    if base is None:
        raise RuntimeError("generation budget exhausted: no admissible seed graph")
    edges = {tuple(sorted(e)) for e in base.edges()}
    g = base
    budget = flip_budget if flip_budget is not None else 2 * n
    for _ in range(budget):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        e = (min(u, v), max(u, v))
        trial = set(edges)
        if e in trial:
            trial.remove(e)
        else:
            trial.add(e)
        candidate = Graph(n, sorted(trial))
        if all(pattern_absent(candidate, p) for p in forbidden):
            edges = trial
            g = candidate
    for p in forbidden:
        if not pattern_absent(g, p):
            raise RuntimeError(f"generator produced a graph containing {p}")
    return g


# -- trial records and the sandwich audit --------------------------------------

CSV_HEADER = (
    "seed",
    "generator",
    "n",
    "ell",
    "outcome",
    "value",
    "exact_tia",
    "iterations",
    "wall_time",
)


@dataclass(frozen=True)
class TrialRecord:
    """One audited run: outcome plus every bound that was checked."""

    seed: int
    generator: str
    n: int
    ell: int
    outcome: str  # decomposition | biclique | rejected-p5
    value: int  # bag independence number, or witness size
    exact: Optional[int]
    iterations: int
    wall_time: float

    def to_csv_row(self) -> list:
        return [
            self.seed,
            self.generator,
            self.n,
            self.ell,
            self.outcome,
            self.value,
            "" if self.exact is None else self.exact,
            self.iterations,
            f"{self.wall_time:.4f}",
        ]


def write_report(records: Iterable[TrialRecord], path: str) -> None:
    ordered = sorted(records, key=lambda r: (r.seed, r.generator, r.n))
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for rec in ordered:
            writer.writerow(rec.to_csv_row())


def summarize(records: Sequence[TrialRecord]) -> list[tuple[int, int, int]]:
    """Per-ell summary rows: (ell, worst observed bag alpha, 4*ell)."""
    worst: dict[int, int] = {}
    for rec in records:
        if rec.outcome == "decomposition":
            worst[rec.ell] = max(worst.get(rec.ell, 0), rec.value)
    return [(ell, worst[ell], 4 * ell) for ell in sorted(worst)]


class AuditFailure(AssertionError):
    """A proven inequality failed on a concrete instance."""


def audit_sandwich(
    g: Graph,
    seed: int = -1,
    generator: str = "corpus",
    cap: Optional[int] = None,
) -> TrialRecord:
    """Run every bound on one graph and fail hard on any violated inequality.

    Checks the approximation sandwich ell*-1 <= tia <= k* <= 4*ell*, plus
    alpha-degeneracy <= tia and induced-biclique-number <= tia whenever the
    exact oracle is feasible.
    """
    t0 = time.perf_counter()
    log: list = []
    try:
        k_star, td, ell_star = approximate_tia(g, log=log)
    except ForbiddenStructureFound:
        return TrialRecord(
            seed, generator, g.n, 0, "rejected-p5", 5, None, 0,
            time.perf_counter() - t0,
        )
    iterations = sum(entry["iterations"] for entry in log)
    if validate(g, td):
        raise AuditFailure("approximate decomposition is invalid")
    if k_star != td_alpha(g, td) or k_star > 4 * ell_star:
        raise AuditFailure("approximate decomposition mislabeled its bag bound")
    limit = cap if cap is not None else oracle_cap()
    exact: Optional[int] = None
    if g.n <= limit:
        exact = exact_tia(g, cap=limit)
        if not (ell_star - 1 <= exact <= k_star <= 4 * ell_star):
            raise AuditFailure(
                f"sandwich failed: ell*={ell_star}, tia={exact}, k*={k_star}"
            )
        if g.n >= 1:
            adeg = alpha_degeneracy(g)
            if adeg > exact:
                raise AuditFailure(
                    f"alpha-degeneracy {adeg} exceeds tree-independence {exact}"
                )
        bic = induced_biclique_number(g)
        if bic > exact:
            raise AuditFailure(
                f"biclique number {bic} exceeds tree-independence {exact}"
            )
    return TrialRecord(
        seed,
        generator,
        g.n,
        ell_star,
        "decomposition",
        k_star,
        exact,
        iterations,
        time.perf_counter() - t0,
    )
