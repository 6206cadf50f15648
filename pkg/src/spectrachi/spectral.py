"""Dense symmetric/Hermitian eigenvalues, spectra with grouped multiplicities,
and compression ``S^H X S``.

All eigenvalues come from one solver: cyclic Jacobi with a round-robin
ordering, so each round applies ``n/2`` disjoint rotations at once. Complex
Hermitian matrices go through their real ``2n x 2n`` embedding.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graphs import Graph

JACOBI_OFF_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
RESIDUAL_TOL = 1e-10
GROUP_RTOL = 1e-8
ORTHONORMAL_TOL = 1e-10


class SpectralError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    pass


def as_symmetric(a) -> np.ndarray:
    m = np.array(a, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise SpectralError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise SpectralError("matrix has non-finite entries")
    scale = max(1.0, float(np.abs(m).max(initial=0.0)))
    if np.abs(m - m.T).max(initial=0.0) > 1e-12 * scale:
        raise SpectralError("matrix is not symmetric")
    return (m + m.T) / 2


def as_hermitian(a) -> np.ndarray:
    m = np.array(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise SpectralError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise SpectralError("matrix has non-finite entries")
    scale = max(1.0, float(np.abs(m).max(initial=0.0)))
    if np.abs(m - m.conj().T).max(initial=0.0) > 1e-12 * scale:
        raise SpectralError("matrix is not Hermitian")
    return (m + m.conj().T) / 2


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Rounds of disjoint index pairs covering every pair exactly once per sweep."""
    size = n + (n % 2)
    players = list(range(size))
    rounds = []
    for _ in range(size - 1):
        half = size // 2
        ps, qs = [], []
        for i in range(half):
            p, q = players[i], players[size - 1 - i]
            if p < n and q < n:
                ps.append(min(p, q))
                qs.append(max(p, q))
        rounds.append((np.array(ps, dtype=int), np.array(qs, dtype=int)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def jacobi_eigh(
    a: np.ndarray,
    off_tol: float = JACOBI_OFF_TOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> tuple[np.ndarray, np.ndarray, int]:
    """Eigen-decomposition of a real symmetric matrix.

    Returns ``(values, vectors, sweeps)`` with values unsorted and
    ``a @ vectors[:, i] ~= values[i] * vectors[:, i]``. Stops when the
    off-diagonal Frobenius norm drops to ``off_tol * ||a||_F``.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    norm = np.linalg.norm(a)
    if n == 1 or norm == 0.0:
        return a.diagonal().copy(), v, 0
    target = off_tol * norm
    rounds = _round_robin(n)
    offdiag = ~np.eye(n, dtype=bool)
    for sweep in range(max_sweeps + 1):
        off = np.linalg.norm(a[offdiag])
        if off <= target:
            return a.diagonal().copy(), v, sweep
        if sweep == max_sweeps:
            break
        for p, q in rounds:
            apq = a[p, q]
            app = a[p, p]
            aqq = a[q, q]
            active = np.abs(apq) > 1e-300
            safe = np.where(active, apq, 1.0)
            with np.errstate(over="ignore"):
                tau = (aqq - app) / (2.0 * safe)
            big = np.abs(tau) > 1e100
            tau_s = np.where(big, 1.0, tau)
            t = np.where(tau_s >= 0, 1.0, -1.0) / (np.abs(tau_s) + np.sqrt(1.0 + tau_s * tau_s))
            # |tau| -> inf: t -> 1 / (2 tau)
            t = np.where(big, 0.5 / np.where(big, tau, 1.0), t)
            t = np.where(active, t, 0.0)
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            # columns: A <- A J
            ap = a[:, p]
            aq = a[:, q]
            a[:, p] = c * ap - s * aq
            a[:, q] = s * ap + c * aq
            # rows: A <- J^T A
            ap = a[p, :]
            aq = a[q, :]
            a[p, :] = c[:, None] * ap - s[:, None] * aq
            a[q, :] = s[:, None] * ap + c[:, None] * aq
            a[p, q] = 0.0
            a[q, p] = 0.0
            vp = v[:, p]
            vq = v[:, q]
            v[:, p] = c * vp - s * vq
            v[:, q] = s * vp + c * vq
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps (off={off:.3e})")


def _check_residual(a: np.ndarray, values: np.ndarray, vectors: np.ndarray) -> float:
    residual = np.linalg.norm(a @ vectors - vectors * values, axis=0).max(initial=0.0)
    limit = RESIDUAL_TOL * max(1.0, float(np.linalg.norm(a)))
    if residual > limit:
        raise ConvergenceError(f"eigenpair residual {residual:.3e} exceeds {limit:.3e}")
    return float(residual)


def eigenvalues_symmetric(m) -> np.ndarray:
    """All eigenvalues of a real symmetric matrix, sorted descending."""
    a = as_symmetric(m)
    if a.shape[0] < 1:
        raise SpectralError("matrix order must be >= 1")
    values, vectors, _ = jacobi_eigh(a)
    _check_residual(a, values, vectors)
    return np.sort(values)[::-1]


def real_embedding(h: np.ndarray) -> np.ndarray:
    """Replace each entry ``a+bi`` by the real block ``[[a, -b], [b, a]]``."""
    h = np.asarray(h, dtype=complex)
    n = h.shape[0]
    e = np.empty((2 * n, 2 * n))
    e[0::2, 0::2] = h.real
    e[0::2, 1::2] = -h.imag
    e[1::2, 0::2] = h.imag
    e[1::2, 1::2] = h.real
    return e


def eigenvalues_hermitian(m, tol: float | None = None) -> np.ndarray:
    """All eigenvalues of a complex Hermitian matrix, sorted descending.

    The real embedding has every eigenvalue twice; groups of odd size mean
    the pairing was not resolved at ``tol`` and raise SpectralError.
    """
    h = as_hermitian(m)
    if h.shape[0] < 1:
        raise SpectralError("matrix order must be >= 1")
    doubled = eigenvalues_symmetric(real_embedding(h))
    spec = Spectrum.from_values(doubled, tol)
    odd = [(val, mult) for val, mult in spec.groups if mult % 2]
    if odd:
        raise SpectralError(f"embedding spectrum has odd multiplicity groups {odd}")
    return doubled[0::2].copy()


def default_tol(values: Sequence[float]) -> float:
    top = max((abs(x) for x in values), default=0.0)
    return GROUP_RTOL * max(1.0, top)


def _group(values: np.ndarray, tol: float) -> tuple[tuple[float, int], ...]:
    groups = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i - 1] - values[i] > tol:
            chunk = values[start:i]
            groups.append((float(np.mean(chunk)), int(len(chunk))))
            start = i
    return tuple(groups)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending plus tolerance-grouped multiplicities.

    ``mu(1)`` is the largest eigenvalue, ``mu_up(1)`` the smallest.
    """

    values: tuple[float, ...]
    groups: tuple[tuple[float, int], ...]
    tol: float

    @classmethod
    def from_values(cls, values, tol: float | None = None) -> Spectrum:
        vals = np.sort(np.asarray(values, dtype=float))[::-1]
        if tol is None:
            tol = default_tol(vals)
        if tol <= 0:
            raise SpectralError("grouping tolerance must be positive")
        return cls(tuple(float(x) for x in vals), _group(vals, tol), float(tol))

    @property
    def n(self) -> int:
        return len(self.values)

    def mu(self, i: int) -> float:
        return self.values[i - 1]

    def mu_up(self, i: int) -> float:
        return self.values[self.n - i]

    @property
    def mu_max(self) -> float:
        return self.values[0]

    @property
    def mu_min(self) -> float:
        return self.values[-1]

    @property
    def mu2(self) -> float | None:
        return self.values[1] if self.n > 1 else None

    @property
    def g(self) -> int:
        return smallest_multiplicity(self)

    def ascending(self) -> np.ndarray:
        return np.array(self.values[::-1])

    def scaled(self, t: float) -> Spectrum:
        if t <= 0:
            raise SpectralError("scale factor must be positive")
        return Spectrum.from_values(np.array(self.values) * t, self.tol * t)

    def snapped(self, tol: float = 1e-6) -> tuple[tuple[float, int], ...]:
        """Groups with representatives rounded to integers where within ``tol``."""
        out = []
        for val, mult in self.groups:
            r = round(val)
            out.append((float(r) if abs(val - r) <= tol else val, mult))
        return tuple(out)

    def __str__(self):
        return ", ".join(f"{val:.6f}^{mult}" for val, mult in self.groups)


def smallest_multiplicity(s: Spectrum) -> int:
    return s.groups[-1][1] if s.groups else 0


def weighted_adjacency(g: Graph, weights=None) -> np.ndarray:
    """``W o A`` with zero diagonal; plain 0/1 adjacency when weights is None."""
    a = g.adjacency_matrix()
    if weights is None:
        return a
    w = as_hermitian(weights)
    if w.shape != (g.n, g.n):
        raise SpectralError(f"weights have order {w.shape[0]}, graph has n={g.n}")
    off = ~np.eye(g.n, dtype=bool)
    outside = (w != 0) & ~g.adjacency & off
    if outside.any():
        u, v = map(int, np.argwhere(outside)[0])
        raise SpectralError(f"weight at non-edge ({u}, {v})")
    wa = w * a
    if np.all(wa.imag == 0):
        return wa.real
    return wa


def spectrum_of(g: Graph, weights=None, tol: float | None = None) -> Spectrum:
    if g.n == 0:
        return Spectrum((), (), tol or GROUP_RTOL)
    m = weighted_adjacency(g, weights)
    if np.iscomplexobj(m):
        values = eigenvalues_hermitian(m)
    else:
        values = eigenvalues_symmetric(m)
    return Spectrum.from_values(values, tol)


def compress(x, s) -> np.ndarray:
    """``S^H X S`` for a matrix ``S`` with orthonormal columns."""
    xm = as_hermitian(x)
    sm = np.asarray(s, dtype=complex)
    if sm.ndim == 1:
        sm = sm[:, None]
    if sm.shape[0] != xm.shape[0]:
        raise SpectralError(f"S has {sm.shape[0]} rows, X has order {xm.shape[0]}")
    gram = sm.conj().T @ sm
    if np.abs(gram - np.eye(sm.shape[1])).max(initial=0.0) > ORTHONORMAL_TOL:
        raise SpectralError("columns of S are not orthonormal")
    out = sm.conj().T @ xm @ sm
    out = (out + out.conj().T) / 2
    if not np.iscomplexobj(x) and not np.iscomplexobj(s):
        return out.real
    return out


def eigenvalues(m) -> np.ndarray:
    """Dispatch on dtype: real symmetric or complex Hermitian."""
    if np.iscomplexobj(m) and np.any(np.asarray(m).imag != 0):
        return eigenvalues_hermitian(m)
    return eigenvalues_symmetric(np.real(m))
