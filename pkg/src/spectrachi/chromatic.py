"""Exact clique and chromatic numbers for small graphs.

Both searches work on Python-int bitsets. ``clique_number`` is a
branch-and-bound with greedy-coloring pruning; ``chromatic_number`` is a
DSATUR branch-and-bound seeded with a maximum clique. Each stops after
``node_budget`` search nodes and then reports what it has proven.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class Coloring:
    """Vertex ``v`` gets color ``assignment[v]``; None marks an unassigned vertex."""

    assignment: tuple
    c: int

    @classmethod
    def from_assignment(cls, assignment: Sequence[int | None]) -> Coloring:
        colors = tuple(None if k is None else int(k) for k in assignment)
        used = [k for k in colors if k is not None]
        return cls(colors, max(used) + 1 if used else 0)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.c)]
        for v, k in enumerate(self.assignment):
            if k is not None and 0 <= k < self.c:
                out[k].append(v)
        return out


@dataclass(frozen=True)
class CliqueResult:
    omega: int
    clique: tuple[int, ...]
    exact: bool
    nodes: int


@dataclass(frozen=True)
class ChromaticResult:
    lower: int
    upper: int
    coloring: Coloring
    exact: bool
    nodes: int

    @property
    def chi(self) -> int | None:
        return self.upper if self.exact else None


class _BudgetExhausted(Exception):
    pass


class _Optimal(Exception):
    pass


def _neighbor_masks(g: Graph) -> list[int]:
    masks = []
    for row in g.adjacency:
        m = 0
        for w in row.nonzero()[0]:
            m |= 1 << int(w)
        masks.append(m)
    return masks


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def verify_coloring(g: Graph, col: Coloring) -> bool:
    if len(col.assignment) != g.n:
        return False
    if any(k is None or not 0 <= k < col.c for k in col.assignment):
        return False
    return all(col.assignment[u] != col.assignment[v] for u, v in g.edges())


def greedy_coloring(g: Graph, order: Sequence[int] | None = None) -> Coloring:
    """First-fit coloring along ``order`` (natural order by default)."""
    order = list(range(g.n)) if order is None else [int(v) for v in order]
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    nb = _neighbor_masks(g)
    colors: list[int | None] = [None] * g.n
    for v in order:
        taken = {colors[w] for w in _bits(nb[v])}
        k = 0
        while k in taken:
            k += 1
        colors[v] = k
    return Coloring.from_assignment(colors)


def dsatur_coloring(g: Graph) -> Coloring:
    """Greedy DSATUR: highest saturation, then degree, then lowest index."""
    nb = _neighbor_masks(g)
    deg = [bin(m).count("1") for m in nb]
    colors: list[int | None] = [None] * g.n
    seen: list[set[int]] = [set() for _ in range(g.n)]
    for _ in range(g.n):
        v = min(
            (u for u in range(g.n) if colors[u] is None),
            key=lambda u: (-len(seen[u]), -deg[u], u),
        )
        k = 0
        while k in seen[v]:
            k += 1
        colors[v] = k
        for w in _bits(nb[v]):
            seen[w].add(k)
    return Coloring.from_assignment(colors)


def _color_sort(p: int, nb: list[int]) -> list[tuple[int, int]]:
    """Greedy color classes of the vertices in ``p`` as ``(vertex, color)``."""
    out = []
    color = 0
    while p:
        color += 1
        q = p
        while q:
            low = q & -q
            v = low.bit_length() - 1
            out.append((v, color))
            p &= ~low
            q &= ~low & ~nb[v]
    return out


def clique_number(g: Graph, node_budget: int = DEFAULT_BUDGET) -> CliqueResult:
    if g.n == 0:
        return CliqueResult(0, (), True, 0)
    nb = _neighbor_masks(g)
    best: list[int] = [0]
    nodes = 0

    def expand(r: list[int], p: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > node_budget:
            raise _BudgetExhausted
        for v, bound in reversed(_color_sort(p, nb)):
            if len(r) + bound <= len(best):
                return
            r.append(v)
            sub = p & nb[v]
            if sub:
                expand(r, sub)
            elif len(r) > len(best):
                best = list(r)
            r.pop()
            p &= ~(1 << v)

    exact = True
    try:
        expand([], (1 << g.n) - 1)
    except _BudgetExhausted:
        exact = False
        nodes = node_budget
    return CliqueResult(len(best), tuple(sorted(best)), exact, nodes)


def chromatic_number(g: Graph, node_budget: int = DEFAULT_BUDGET) -> ChromaticResult:
    """Exact chromatic number with a certificate coloring.

    When the budget runs out the result carries the proven bracket
    ``lower <= chi <= upper`` and ``exact=False``.
    """
    n = g.n
    if n == 0:
        return ChromaticResult(0, 0, Coloring((), 0), True, 0)
    nb = _neighbor_masks(g)
    deg = [bin(m).count("1") for m in nb]

    clique = clique_number(g, node_budget)
    lower = max(clique.omega, 1)
    best = min(dsatur_coloring(g), greedy_coloring(g), key=lambda col: col.c)
    upper = best.c
    if lower == upper:
        return ChromaticResult(lower, upper, best, True, clique.nodes)

    colors: list[int] = [-1] * n
    counts = [[0] * upper for _ in range(n)]
    sat = [0] * n
    nodes = 0

    def assign(v: int, k: int) -> None:
        colors[v] = k
        for w in _bits(nb[v]):
            if counts[w][k] == 0:
                sat[w] += 1
            counts[w][k] += 1

    def unassign(v: int) -> None:
        k = colors[v]
        colors[v] = -1
        for w in _bits(nb[v]):
            counts[w][k] -= 1
            if counts[w][k] == 0:
                sat[w] -= 1

    def search(done: int, used: int) -> None:
        nonlocal nodes, upper, best
        nodes += 1
        if nodes > node_budget:
            raise _BudgetExhausted
        if done == n:
            upper = used
            best = Coloring.from_assignment(colors)
            if upper == lower:
                raise _Optimal
            return
        v = -1
        key = None
        for u in range(n):
            if colors[u] < 0:
                cand = (sat[u], deg[u])
                if key is None or cand > key:
                    v, key = u, cand
        for k in range(min(used + 1, upper - 1)):
            if k + 1 >= upper:
                break
            if counts[v][k]:
                continue
            assign(v, k)
            search(done + 1, max(used, k + 1))
            unassign(v)
            if used >= upper:
                return

    for k, v in enumerate(clique.clique):
        assign(v, k)
    # a completed search is a proof whether or not the clique is maximum
    exact = True
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * n + 100))
    try:
        search(len(clique.clique), len(clique.clique))
    except _Optimal:
        pass
    except _BudgetExhausted:
        exact = False
    finally:
        sys.setrecursionlimit(limit)
    if exact:
        lower = upper
    return ChromaticResult(lower, upper, best, exact, clique.nodes + min(nodes, node_budget))
