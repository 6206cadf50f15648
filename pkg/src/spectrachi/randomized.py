"""Seeded random instances for property checks.

The default seed comes from the ``SPECTRA_CHI_SEED`` environment variable.
"""

from __future__ import annotations

import os

import numpy as np

from .graphs import Graph

SEED_ENV = "SPECTRA_CHI_SEED"
DEFAULT_SEED = 20240


def seed_from_env() -> int:
    raw = os.environ.get(SEED_ENV)
    return int(raw) if raw else DEFAULT_SEED


def make_rng(seed: int | None = None) -> np.random.Generator:
    return np.random.default_rng(seed_from_env() if seed is None else seed)


def random_graph(n: int, p: float, rng: np.random.Generator, name: str = "") -> Graph:
    upper = np.triu(rng.random((n, n)) < p, 1)
    return Graph(n, upper | upper.T, name or f"G({n},{p})")


def random_hermitian(n: int, rng: np.random.Generator, real: bool = False) -> np.ndarray:
    a = rng.normal(size=(n, n))
    if not real:
        a = a + 1j * rng.normal(size=(n, n))
    return (a + a.conj().T) / 2


def random_orthonormal(n: int, m: int, rng: np.random.Generator, real: bool = False) -> np.ndarray:
    """n x m matrix with orthonormal columns (QR of a Gaussian matrix)."""
    a = rng.normal(size=(n, m))
    if not real:
        a = a + 1j * rng.normal(size=(n, m))
    q, _ = np.linalg.qr(a)
    return q[:, :m]


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    q, r = np.linalg.qr(rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d)))
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def random_resolution(m: int, parts: int, rng: np.random.Generator) -> list[np.ndarray]:
    """Orthogonal projectors onto a random split of a random orthonormal basis."""
    u = random_unitary(m, rng)
    labels = np.sort(rng.integers(0, parts, size=m))
    return [u[:, labels == k] @ u[:, labels == k].conj().T for k in range(parts)]
