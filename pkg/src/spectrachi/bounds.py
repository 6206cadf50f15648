"""Spectral lower bounds on the (quantum) chromatic number.

Three bounds are evaluated from a spectrum ``mu_1 >= ... >= mu_n``:

* kappa bound ``1 + kappa``, kappa the fewest smallest eigenvalues whose sum
  with ``mu_1`` is ``<= 0``;
* ratio bound ``1 + mu_1 / |mu_n|``;
* multiplicity bound ``1 + min(g, |mu_n| / mu_2)`` when ``mu_2 > 0``, with g
  the multiplicity of ``mu_n``.

All three hold for the quantum chromatic number and hence for the chromatic
number. They also hold for weighted adjacency matrices ``W o A``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .graphs import Graph, connected_components
from .spectral import Spectrum, spectrum_of

KAPPA_RTOL = 1e-9
SNAP_TOL = 1e-9
SRG_INT_TOL = 1e-6


class InfeasibleParameters(ValueError):
    pass


def snap_ceil(x: float, tol: float = SNAP_TOL) -> int:
    """Ceiling, after snapping values within ``tol`` of an integer onto it."""
    r = round(x)
    if abs(x - r) <= tol:
        return int(r)
    return math.ceil(x)


def hoffman_kappa(s: Spectrum, tol: float | None = None) -> int:
    if s.n == 0:
        return 0
    if tol is None:
        tol = KAPPA_RTOL * max(1.0, abs(s.mu_max))
    total = s.mu_max
    if total <= tol:
        return 0
    for kappa, value in enumerate(s.ascending(), start=1):
        total += value
        if total <= tol:
            return kappa
    # unreachable for zero-trace matrices: mu_max + (n-1 smallest) = trace
    return s.n


def kappa_bound(s: Spectrum, tol: float | None = None) -> int:
    return 1 + hoffman_kappa(s, tol)


def ratio_bound(s: Spectrum) -> tuple[float, int]:
    if s.n == 0 or s.mu_min >= -s.tol:
        raise ValueError("ratio bound needs a negative smallest eigenvalue (graph with an edge)")
    real = 1.0 + s.mu_max / abs(s.mu_min)
    return real, snap_ceil(real)


def multiplicity_bound(s: Spectrum) -> tuple[float, int] | None:
    """``(1 + min(g, |mu_n|/mu_2), its ceiling)``, or None unless ``mu_2 > tol``."""
    mu2 = s.mu2
    if mu2 is None or mu2 <= s.tol:
        return None
    real = 1.0 + min(s.g, abs(s.mu_min) / mu2)
    return real, snap_ceil(real)


def srg_feasibility(n: int, k: int, lam: int, mu: int) -> None:
    if not (0 <= k < n):
        raise InfeasibleParameters(f"need 0 <= k < n, got n={n}, k={k}")
    if (n - k - 1) * mu != k * (k - lam - 1):
        raise InfeasibleParameters(
            f"(n-k-1)*mu = {(n - k - 1) * mu} != k*(k-lambda-1) = {k * (k - lam - 1)}"
        )
    if (lam - mu) ** 2 + 4 * (k - mu) < 0:
        raise InfeasibleParameters("discriminant (lambda-mu)^2 + 4(k-mu) is negative")


def srg_eigenvalues(n: int, k: int, lam: int, mu: int) -> tuple[tuple[float, int], ...]:
    """``((k, 1), (r, f), (s, g))`` for SRG(n, k, lambda, mu); zero multiplicities dropped."""
    srg_feasibility(n, k, lam, mu)
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    root = math.sqrt(disc)
    if root == 0:
        # with the feasibility identity this forces k = 0: the edgeless graph
        return ((0.0, n),)
    r = ((lam - mu) + root) / 2
    s = ((lam - mu) - root) / 2
    skew = (2 * k + (n - 1) * (lam - mu)) / root
    f_real = ((n - 1) - skew) / 2
    g_real = ((n - 1) + skew) / 2
    f, g = round(f_real), round(g_real)
    if abs(f - f_real) > SRG_INT_TOL or abs(g - g_real) > SRG_INT_TOL or f < 0 or g < 0:
        raise InfeasibleParameters(
            f"multiplicities f={f_real:.6f}, g={g_real:.6f} are not nonnegative integers"
        )
    out = [(float(k), 1), (r, f), (s, g)]
    return tuple((val, mult) for val, mult in out if mult > 0)


def srg_spectrum(n: int, k: int, lam: int, mu: int, tol: float | None = None) -> Spectrum:
    values = []
    for val, mult in srg_eigenvalues(n, k, lam, mu):
        values.extend([val] * mult)
    return Spectrum.from_values(values, tol)


def kneser2_parameters(p: int) -> tuple[int, int, int, int]:
    """SRG parameters of the Kneser graph on 2-subsets of ``range(p)``."""
    if p < 4:
        raise InfeasibleParameters("Kneser(p, 2) is strongly regular only for p >= 4")
    return (math.comb(p, 2), math.comb(p - 2, 2), math.comb(p - 4, 2), math.comb(p - 3, 2))


def kneser2_spectrum(p: int, tol: float | None = None) -> Spectrum:
    """``((p-2)(p-3)/2, 1^(p(p-3)/2), (3-p)^(p-1))`` built directly from the formula."""
    if p < 4:
        raise InfeasibleParameters("Kneser(p, 2) spectrum formula needs p >= 4")
    values = [(p - 2) * (p - 3) / 2] + [1.0] * (p * (p - 3) // 2) + [float(3 - p)] * (p - 1)
    return Spectrum.from_values(values, tol)


def is_hoffman_coloring(s: Spectrum, chi: int, tol: float = SNAP_TOL) -> bool:
    if chi < 2:
        raise ValueError("chi must be >= 2")
    try:
        real, _ = ratio_bound(s)
    except ValueError:
        return False
    return abs(real - chi) <= tol


@dataclass
class BoundReport:
    kappa: int
    kappa_bound: int
    ratio_bound_real: float
    ratio_bound: int
    mult_bound_real: float | None
    mult_bound: int | None
    mult_ratio_real: float | None
    g: int
    mu2_positive: bool
    connected: bool
    best_lower_bound: int
    spectrum: Spectrum = field(repr=False)
    mult_reason: str = ""
    per_component: list[BoundReport] = field(default_factory=list, repr=False)

    @property
    def mu1(self) -> float:
        return self.spectrum.mu_max if self.spectrum.n else 0.0

    @property
    def mu2(self) -> float | None:
        return self.spectrum.mu2

    @property
    def mun(self) -> float:
        return self.spectrum.mu_min if self.spectrum.n else 0.0

    def as_dict(self) -> dict:
        return {
            "kappa": self.kappa,
            "kappa_bound": self.kappa_bound,
            "ratio_bound_real": self.ratio_bound_real,
            "ratio_bound": self.ratio_bound,
            "mult_bound_real": self.mult_bound_real,
            "mult_bound": self.mult_bound,
            "mult_ratio_real": self.mult_ratio_real,
            "mult_reason": self.mult_reason,
            "g": self.g,
            "mu1": self.mu1,
            "mu2": self.mu2,
            "mun": self.mun,
            "mu2_positive": self.mu2_positive,
            "connected": self.connected,
            "best_lower_bound": self.best_lower_bound,
            "spectrum": [[val, mult] for val, mult in self.spectrum.groups],
            "per_component": [c.as_dict() for c in self.per_component],
        }


def report_from_spectrum(s: Spectrum, connected: bool = True) -> BoundReport:
    """Evaluate all three bounds on one spectrum."""
    kappa = hoffman_kappa(s)
    if s.n and s.mu_min < -s.tol:
        ratio_real, ratio_int = ratio_bound(s)
    else:
        # edgeless: every bound degenerates to 1
        ratio_real, ratio_int = 1.0, 1
    mult = multiplicity_bound(s)
    mu2_positive = mult is not None
    if mult is None:
        mult_real = mult_int = mult_ratio = None
        reason = "single vertex" if s.n < 2 else f"mu2 = {s.mu2:.6g} is not positive"
    else:
        mult_real, mult_int = mult
        mult_ratio = 1.0 + abs(s.mu_min) / s.mu2
        reason = ""
    best = max(b for b in (1 + kappa, ratio_int, mult_int) if b is not None)
    return BoundReport(
        kappa=kappa,
        kappa_bound=1 + kappa,
        ratio_bound_real=ratio_real,
        ratio_bound=ratio_int,
        mult_bound_real=mult_real,
        mult_bound=mult_int,
        mult_ratio_real=mult_ratio,
        g=s.g,
        mu2_positive=mu2_positive,
        connected=connected,
        best_lower_bound=best,
        spectrum=s,
        mult_reason=reason,
    )


def bounds_report(g: Graph, weights=None, tol: float | None = None) -> BoundReport:
    """Bounds for ``g`` (optionally for ``W o A``).

    For a disconnected graph each component is evaluated on its own and
    ``best_lower_bound`` is the maximum over components; the top-level numbers
    are those of the whole-graph spectrum, flagged ``connected=False``.
    """
    comps = connected_components(g)
    whole = report_from_spectrum(spectrum_of(g, weights, tol), connected=len(comps) <= 1)
    if len(comps) <= 1:
        return whole
    w = None if weights is None else np.asarray(weights)
    for comp in comps:
        sub = g.subgraph(comp)
        sub_w = None if w is None else w[np.ix_(comp, comp)]
        whole.per_component.append(report_from_spectrum(spectrum_of(sub, sub_w, tol)))
    whole.best_lower_bound = max(c.best_lower_bound for c in whole.per_component)
    return whole
