"""graph6 reading and writing.

Format: a size header N(n) followed by the upper triangle of the adjacency
matrix in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian
six bits per character, each character offset by 63.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .graphs import Graph

HEADER = ">>graph6<<"
MAX_N = 68719476735


class Graph6Error(ValueError):
    pass


def _encode_n(n: int) -> str:
    if n < 0 or n > MAX_N:
        raise Graph6Error(f"graph6 cannot encode n={n}")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _decode_n(values: list[int]) -> tuple[int, int]:
    """Return (n, number of header characters consumed)."""
    if not values:
        raise Graph6Error("empty graph6 string")
    if values[0] != 63:
        return values[0], 1
    if len(values) >= 2 and values[1] == 63:
        if len(values) < 8:
            raise Graph6Error("truncated 8-byte size header")
        n = 0
        for x in values[2:8]:
            n = (n << 6) | x
        return n, 8
    if len(values) < 4:
        raise Graph6Error("truncated 4-byte size header")
    n = 0
    for x in values[1:4]:
        n = (n << 6) | x
    return n, 4


def _upper_mask(n: int) -> tuple[np.ndarray, np.ndarray]:
    # column order: for j in 1..n-1, for i in 0..j-1
    rows, cols = np.triu_indices(n, 1)
    order = np.lexsort((rows, cols))
    return rows[order], cols[order]


def write_graph6(g: Graph) -> str:
    n = g.n
    i, j = _upper_mask(n)
    bits = g.adjacency[i, j].astype(np.uint8)
    pad = (-len(bits)) % 6
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    groups = bits.reshape(-1, 6) @ (1 << np.arange(5, -1, -1))
    return _encode_n(n) + "".join(chr(int(x) + 63) for x in groups)


def parse_graph6(text: str, name: str = "") -> Graph:
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    values = [ord(ch) - 63 for ch in line]
    bad = [ch for ch, x in zip(line, values) if not 0 <= x <= 63]
    if bad:
        raise Graph6Error(f"character {bad[0]!r} outside the graph6 range 63..126")
    n, used = _decode_n(values)
    body = values[used:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(
            f"length mismatch: n={n} needs {(nbits + 5) // 6} data characters, got {len(body)}"
        )
    arr = np.array(body, dtype=np.uint8)
    bits = ((arr[:, None] >> np.arange(5, -1, -1)) & 1).ravel()
    if bits[nbits:].any():
        raise Graph6Error("nonzero padding bits")
    adj = np.zeros((n, n), dtype=bool)
    i, j = _upper_mask(n)
    adj[i, j] = bits[:nbits].astype(bool)
    adj |= adj.T
    return Graph(n, adj, name)


def iter_graph6(lines) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Yield ``(line_number, graph or error)`` for each nonblank line."""
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            yield lineno, exc
