"""Quantum colorings as families of orthogonal projectors.

A quantum c-coloring of G in dimension d assigns a projector ``P[v, k]`` to
every vertex v and color k such that each vertex's projectors sum to the
identity and adjacent vertices have orthogonal projectors for every color.
Equivalently, the block-diagonal projectors ``P_k = sum_v e_v e_v^H (x) P[v, k]``
pinch ``A (x) I_d`` to zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chromatic import Coloring
from .graphs import DEFAULT_OMEGA_CAP, Graph, GraphError, sign_vectors

DEFAULT_TOL = 1e-9
DEFAULT_BLOCK_CAP = 4096
UNITARY_TOL = 1e-10


class QuantumColoringError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class QuantumColoring:
    """Projectors stored as an ``(n, c, d, d)`` complex array."""

    projectors: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.projectors, dtype=complex)
        if p.ndim != 4 or p.shape[2] != p.shape[3]:
            raise QuantumColoringError(f"projectors must have shape (n, c, d, d), got {p.shape}")
        object.__setattr__(self, "projectors", p)

    @property
    def n(self) -> int:
        return self.projectors.shape[0]

    @property
    def c(self) -> int:
        return self.projectors.shape[1]

    @property
    def d(self) -> int:
        return self.projectors.shape[2]

    def __getitem__(self, vk: tuple[int, int]) -> np.ndarray:
        return self.projectors[vk]


@dataclass
class VerificationReport:
    projector_residual: float
    completeness_residual: float
    orthogonality_residual: float
    pinching_residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return max(self.residuals().values()) <= self.tol

    def residuals(self) -> dict[str, float]:
        return {
            "projector_residual": self.projector_residual,
            "completeness_residual": self.completeness_residual,
            "orthogonality_residual": self.orthogonality_residual,
            "pinching_residual": self.pinching_residual,
        }

    def as_dict(self) -> dict:
        return {**self.residuals(), "tol": self.tol, "pass": self.passed}


def _frob(x: np.ndarray) -> np.ndarray:
    return np.sqrt(np.sum(np.abs(x) ** 2, axis=(-2, -1)))


def _edge_products(g: Graph, qc: QuantumColoring) -> np.ndarray:
    """``P[v, k] @ P[w, k]`` for every edge ``(v, w)``, shape (m, c, d, d)."""
    edges = g.edge_array()
    p = qc.projectors
    if len(edges) == 0:
        return np.zeros((0, qc.c, qc.d, qc.d), dtype=complex)
    return np.einsum("ekij,ekjl->ekil", p[edges[:, 0]], p[edges[:, 1]])


def pinching_residual_blockwise(g: Graph, qc: QuantumColoring) -> float:
    """Frobenius norm of ``sum_k P_k (A (x) I_d) P_k`` without forming it.

    Block (v, w) of that matrix is ``A[v, w] * sum_k P[v, k] P[w, k]``; block
    (w, v) is its adjoint, so each edge contributes twice.
    """
    blocks = _edge_products(g, qc).sum(axis=1)
    return float(np.sqrt(2.0 * np.sum(np.abs(blocks) ** 2)))


def pinching_residual_dense(g: Graph, qc: QuantumColoring, cap: int = DEFAULT_BLOCK_CAP) -> float:
    ps = block_projectors(qc, cap)
    big = np.kron(g.adjacency_matrix(), np.eye(qc.d))
    return float(np.linalg.norm(pinch(big, ps, check=False)))


def verify(g: Graph, qc: QuantumColoring, tol: float = DEFAULT_TOL) -> VerificationReport:
    if qc.n != g.n:
        raise QuantumColoringError(f"coloring has n={qc.n}, graph has n={g.n}")
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    p = qc.projectors
    if qc.n == 0 or qc.c == 0:
        return VerificationReport(0.0, 0.0 if qc.n == 0 else float(np.sqrt(qc.d)), 0.0, 0.0, tol)
    adjoint = np.conj(np.swapaxes(p, -1, -2))
    idem = _frob(p @ p - p).max()
    herm = _frob(p - adjoint).max()
    completeness = _frob(p.sum(axis=1) - np.eye(qc.d)).max()
    products = _edge_products(g, qc)
    orth = _frob(products).max() if len(products) else 0.0
    pinching = pinching_residual_blockwise(g, qc)
    return VerificationReport(
        projector_residual=float(max(idem, herm)),
        completeness_residual=float(completeness),
        orthogonality_residual=float(orth),
        pinching_residual=pinching,
        tol=tol,
    )


def classical_to_quantum(g: Graph, coloring: Coloring) -> QuantumColoring:
    """The coloring as a 1-dimensional quantum coloring."""
    colors = list(coloring.assignment)
    if len(colors) != g.n or any(k is None or k < 0 for k in colors):
        raise QuantumColoringError("every vertex needs a color")
    c = max(coloring.c, max(colors, default=-1) + 1)
    p = np.zeros((g.n, c, 1, 1), dtype=complex)
    p[np.arange(g.n), colors, 0, 0] = 1.0
    return QuantumColoring(p)


def omega_coloring(n: int, cap: int = DEFAULT_OMEGA_CAP) -> QuantumColoring:
    """n-color quantum coloring of the orthogonality graph in dimension n.

    With ``z_v`` the normalized +-1 vector of vertex v and
    ``U = diag(1, w, ..., w^(n-1))``, ``w = exp(2 pi i / n)``, color k gets the
    rank-1 projector onto ``U^k z_v``. The ``U^k z_v`` for fixed v are an
    orthonormal basis, and ``<U^k z_v, U^k z_w> = <z_v, z_w>`` vanishes on edges.
    """
    if n < 2 or n % 2:
        raise GraphError(f"n must be even, got {n}")
    if 2**n > cap:
        raise GraphError(f"orthogonality graph on 2**{n} vertices exceeds cap {cap}")
    z = sign_vectors(n) / np.sqrt(n)
    phases = np.exp(2j * np.pi * np.outer(np.arange(n), np.arange(n)) / n)  # [k, j] = w^(jk)
    vecs = phases[None, :, :] * z[:, None, :]  # [v, k, j]
    p = vecs[..., :, None] * np.conj(vecs[..., None, :])
    return QuantumColoring(p)


def block_projectors(qc: QuantumColoring, cap: int = DEFAULT_BLOCK_CAP) -> list[np.ndarray]:
    """``P_k = sum_v e_v e_v^H (x) P[v, k]`` for each color k."""
    size = qc.n * qc.d
    if size > cap:
        raise QuantumColoringError(f"n*d = {size} exceeds block cap {cap}")
    out = []
    for k in range(qc.c):
        big = np.zeros((size, size), dtype=complex)
        for v in range(qc.n):
            big[v * qc.d:(v + 1) * qc.d, v * qc.d:(v + 1) * qc.d] = qc.projectors[v, k]
        out.append(big)
    return out


def pinch(x, projectors, tol: float = DEFAULT_TOL, check: bool = True) -> np.ndarray:
    """``sum_k P_k X P_k`` for projectors resolving the identity."""
    xm = np.asarray(x)
    ps = [np.asarray(p) for p in projectors]
    if xm.ndim != 2 or xm.shape[0] != xm.shape[1]:
        raise ValueError(f"X must be square, got shape {xm.shape}")
    for p in ps:
        if p.shape != xm.shape:
            raise ValueError(f"projector shape {p.shape} does not match X {xm.shape}")
    if check:
        total = sum(ps, np.zeros_like(xm, dtype=complex))
        if np.linalg.norm(total - np.eye(xm.shape[0])) > tol * max(1, xm.shape[0]):
            raise ValueError("projectors do not resolve the identity")
    out = sum((p @ xm @ p for p in ps), np.zeros(xm.shape, dtype=complex))
    if not np.iscomplexobj(xm) and all(not np.iscomplexobj(p) or not p.imag.any() for p in ps):
        return out.real
    return out


def conjugate(qc: QuantumColoring, u) -> QuantumColoring:
    """``u P u^H`` applied to every projector."""
    um = np.asarray(u, dtype=complex)
    if um.shape != (qc.d, qc.d):
        raise QuantumColoringError(f"unitary must be {qc.d}x{qc.d}, got {um.shape}")
    if np.linalg.norm(um.conj().T @ um - np.eye(qc.d)) > UNITARY_TOL:
        raise QuantumColoringError("matrix is not unitary")
    return QuantumColoring(um @ qc.projectors @ um.conj().T)
