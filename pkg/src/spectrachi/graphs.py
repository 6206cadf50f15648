"""Simple undirected graphs and deterministic generators.

Every generator fixes its vertex order (lexicographic subsets, binary
counting, ...) so spectra and reports are reproducible byte-for-byte.
"""

from __future__ import annotations

import itertools
import warnings
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

# 2**n <= 4096
DEFAULT_OMEGA_CAP = 4096


class GraphError(ValueError):
    """Invalid graph construction parameters."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Loopless simple graph on vertices ``0..n-1``.

    ``adjacency`` is a read-only symmetric boolean matrix with a false diagonal.
    """

    n: int
    adjacency: np.ndarray = field(repr=False)
    name: str = ""

    def __post_init__(self):
        adj = np.asarray(self.adjacency, dtype=bool)
        if adj.shape != (self.n, self.n):
            raise GraphError(f"adjacency shape {adj.shape} does not match n={self.n}")
        if not np.array_equal(adj, adj.T):
            raise GraphError("adjacency is not symmetric")
        if adj.diagonal().any():
            raise GraphError("adjacency has a loop")
        adj = adj.copy()
        adj.flags.writeable = False
        object.__setattr__(self, "adjacency", adj)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adjacency, other.adjacency)

    __hash__ = None  # type: ignore[assignment]

    @property
    def num_edges(self) -> int:
        return int(self.adjacency.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in row-major order."""
        us, vs = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(us.tolist(), vs.tolist()))

    def edge_array(self) -> np.ndarray:
        us, vs = np.nonzero(np.triu(self.adjacency, 1))
        return np.stack([us, vs], axis=1) if len(us) else np.zeros((0, 2), dtype=int)

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def neighbors(self, v: int) -> list[int]:
        return np.flatnonzero(self.adjacency[v]).tolist()

    def adjacency_matrix(self) -> np.ndarray:
        """Numeric 0/1 adjacency matrix as float64."""
        return self.adjacency.astype(float)

    def subgraph(self, vertices: Sequence[int], name: str = "") -> Graph:
        idx = np.asarray(vertices, dtype=int)
        return Graph(len(idx), self.adjacency[np.ix_(idx, idx)], name or self.name)

    def with_name(self, name: str) -> Graph:
        return Graph(self.n, self.adjacency, name)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.num_edges}>"


def from_edges(n: int, edges: Iterable[tuple[int, int]], name: str = "") -> Graph:
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"loop edge ({u}, {u})")
        adj[u, v] = adj[v, u] = True
    return Graph(n, adj, name)


def empty(n: int) -> Graph:
    return from_edges(n, [], name=f"empty({n})")


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    adj = ~np.eye(n, dtype=bool)
    return Graph(n, adj, f"K{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    if not sizes or any(s < 1 for s in sizes):
        raise GraphError("part sizes must all be >= 1")
    part = np.repeat(np.arange(len(sizes)), sizes)
    adj = part[:, None] != part[None, :]
    return Graph(len(part), adj, "K" + ",".join(str(s) for s in sizes))


def barbell(m: int) -> Graph:
    """Two disjoint copies of K_m joined by the bridge ``(m-1, m)``."""
    if m < 3:
        raise GraphError("barbell needs m >= 3")
    edges = [(i, j) for i, j in itertools.combinations(range(m), 2)]
    edges += [(i + m, j + m) for i, j in edges]
    edges.append((m - 1, m))
    return from_edges(2 * m, edges, name=f"barbell({m})")


def kneser(p: int, t: int = 2) -> Graph:
    """Kneser graph on the t-subsets of ``range(p)``, in lexicographic order."""
    if t < 1 or p < 2 * t:
        raise GraphError(f"kneser needs p >= 2t >= 2, got p={p}, t={t}")
    subsets = list(itertools.combinations(range(p), t))
    masks = np.array([sum(1 << i for i in s) for s in subsets], dtype=np.int64)
    adj = (masks[:, None] & masks[None, :]) == 0
    return Graph(len(subsets), adj, f"kneser({p},{t})")


def petersen() -> Graph:
    return kneser(5, 2).with_name("Petersen")


def clebsch() -> Graph:
    """Folded 5-cube: 4-bit words adjacent iff their XOR has weight 1 or 4."""
    words = np.arange(16)
    weight = np.array([bin(int(x)).count("1") for x in range(16)])
    xor_weight = weight[words[:, None] ^ words[None, :]]
    adj = (xor_weight == 1) | (xor_weight == 4)
    return Graph(16, adj, "Clebsch")


def hoffman_singleton() -> Graph:
    """Robertson's pentagon/pentagram construction of SRG(50, 7, 0, 1).

    Vertex ``5*h + j`` is vertex j of pentagon h, vertex ``25 + 5*i + j`` is
    vertex j of pentagram i; pentagon vertex j of h joins pentagram vertex
    ``(h*i + j) % 5`` of i.
    """
    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((5 * h + j, 5 * h + (j + 1) % 5))
            edges.append((25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5))
    for h in range(5):
        for j in range(5):
            for i in range(5):
                edges.append((5 * h + j, 25 + 5 * i + (h * i + j) % 5))
    return from_edges(50, edges, name="Hoffman-Singleton")


def sign_vectors(n: int) -> np.ndarray:
    """All ``2**n`` vectors in {+1, -1}^n by binary counting.

    Row v has entry -1 in position j iff bit j (least significant first) of v
    is set.
    """
    bits = (np.arange(2**n)[:, None] >> np.arange(n)[None, :]) & 1
    return (1 - 2 * bits).astype(np.int64)


def orthogonality_graph(n: int, cap: int = DEFAULT_OMEGA_CAP) -> Graph:
    """Graph on the +-1 vectors of length n, adjacent iff orthogonal."""
    if n < 2 or n % 2:
        raise GraphError(f"orthogonality graph needs even n >= 2, got {n}")
    if 2**n > cap:
        raise GraphError(f"orthogonality graph on 2**{n} vertices exceeds cap {cap}")
    if n % 4:
        warnings.warn(
            f"orthogonality_graph({n}): n is not divisible by 4", stacklevel=2
        )
    z = sign_vectors(n)
    adj = (z @ z.T) == 0
    return Graph(2**n, adj, f"Omega({n})")


def connected_components(g: Graph) -> list[list[int]]:
    seen = np.zeros(g.n, dtype=bool)
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in np.flatnonzero(g.adjacency[u] & ~seen):
                seen[w] = True
                comp.append(int(w))
                queue.append(int(w))
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1
