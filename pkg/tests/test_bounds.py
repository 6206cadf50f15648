import math

import numpy as np
import pytest
from corpus import small_corpus
from hypothesis import given, settings
from hypothesis import strategies as st

from spectrachi import graphs
from spectrachi.bounds import (
    InfeasibleParameters,
    bounds_report,
    hoffman_kappa,
    is_hoffman_coloring,
    kneser2_parameters,
    kneser2_spectrum,
    multiplicity_bound,
    ratio_bound,
    snap_ceil,
    srg_spectrum,
)
from spectrachi.chromatic import chromatic_number
from spectrachi.randomized import random_hermitian
from spectrachi.spectral import Spectrum, spectrum_of

HOFFMAN_SINGLETON = Spectrum.from_values([7] + [2] * 28 + [-3] * 21)
PETERSEN = Spectrum.from_values([3] + [1] * 5 + [-2] * 4)
K4 = Spectrum.from_values([3, -1, -1, -1])
CLEBSCH = Spectrum.from_values([5] + [1] * 10 + [-3] * 5)
GQ24 = Spectrum.from_values([10] + [1] * 20 + [-5] * 6)
HIGMAN_SIMS = Spectrum.from_values([22] + [2] * 77 + [-8] * 22)


def brute_kappa(values):
    """Smallest kappa with mu_max + (kappa smallest) <= 0, by exhaustive prefix sums."""
    asc = sorted(values)
    for kappa in range(len(asc) + 1):
        if max(values) + sum(asc[:kappa]) <= 1e-9:
            return kappa
    return None


def test_kappa_examples():
    assert hoffman_kappa(HOFFMAN_SINGLETON) == 3
    assert hoffman_kappa(K4) == 3
    assert hoffman_kappa(PETERSEN) == 2


def test_kappa_edgeless():
    assert hoffman_kappa(Spectrum.from_values([0, 0, 0])) == 0


@pytest.mark.parametrize("n", range(2, 12))
def test_kappa_complete_graph_boundary(n):
    # mu_max + (n-1) * (-1) = 0 exactly: floating error must not push kappa to n
    assert hoffman_kappa(spectrum_of(graphs.complete(n))) == n - 1


def test_kappa_matches_brute_force_on_corpus():
    for g in small_corpus():
        s = spectrum_of(g)
        assert hoffman_kappa(s) == brute_kappa(list(s.values)), g.name


def test_ratio_examples():
    real, value = ratio_bound(srg_spectrum(49, 12, 5, 2))
    assert abs(real - 7.0) < 1e-12 and value == 7
    real, value = ratio_bound(srg_spectrum(27, 16, 10, 8))
    assert abs(real - 9.0) < 1e-12 and value == 9
    for n in (4, 8):
        real, value = ratio_bound(spectrum_of(graphs.orthogonality_graph(n)))
        assert abs(real - n) < 1e-6 and value == n


def test_ratio_rejects_edgeless():
    with pytest.raises(ValueError):
        ratio_bound(Spectrum.from_values([0, 0]))


def test_snap_ceil():
    assert snap_ceil(7.0 + 5e-10) == 7
    assert snap_ceil(7.0 - 5e-10) == 7
    assert snap_ceil(7.000001) == 8
    assert snap_ceil(2.5) == 3


def test_multiplicity_examples():
    assert multiplicity_bound(CLEBSCH)[1] == 4
    assert multiplicity_bound(GQ24) == (6.0, 6)
    assert multiplicity_bound(HIGMAN_SIMS) == (5.0, 5)
    assert multiplicity_bound(K4) is None


def test_multiplicity_zero_mu2():
    comp = spectrum_of(graphs.complete_multipartite([2, 2, 2, 2]))
    assert abs(comp.mu2) < 1e-12
    assert multiplicity_bound(comp) is None


@pytest.mark.parametrize(
    "params, expected",
    [
        ((16, 5, 0, 2), ((5, 1), (1, 10), (-3, 5))),
        ((27, 10, 1, 5), ((10, 1), (1, 20), (-5, 6))),
        ((50, 7, 0, 1), ((7, 1), (2, 28), (-3, 21))),
        ((56, 10, 0, 2), ((10, 1), (2, 35), (-4, 20))),
        ((100, 22, 0, 6), ((22, 1), (2, 77), (-8, 22))),
        ((77, 16, 0, 4), ((16, 1), (2, 55), (-6, 21))),
        ((15, 8, 4, 4), ((8, 1), (2, 5), (-2, 9))),
        ((25, 8, 3, 2), ((8, 1), (3, 8), (-2, 16))),
        ((21, 10, 3, 6), ((10, 1), (1, 14), (-4, 6))),
        ((25, 16, 9, 12), ((16, 1), (1, 16), (-4, 8))),
        ((49, 12, 5, 2), ((12, 1), (5, 12), (-2, 36))),
        ((27, 16, 10, 8), ((16, 1), (4, 6), (-2, 20))),
    ],
)
def test_srg_spectrum(params, expected):
    # expected multiplicities solved by hand from f + g = n - 1, k + f r + g s = 0
    s = srg_spectrum(*params)
    assert s.groups == tuple((float(v), m) for v, m in expected)
    n, k, _, _ = params
    assert s.n == n and abs(sum(s.values)) < 1e-9


def test_srg_conference_graph():
    # Paley(13): irrational eigenvalues (-1 +- sqrt(13)) / 2 with multiplicity 6 each
    s = srg_spectrum(13, 6, 2, 3)
    assert [m for _, m in s.groups] == [1, 6, 6]
    assert abs(s.groups[1][0] - (-1 + math.sqrt(13)) / 2) < 1e-12


@pytest.mark.parametrize(
    "params, match",
    [
        ((16, 5, 1, 2), "mu"),
        ((10, 3, 0, 2), "mu"),
        ((5, 5, 0, 0), "k < n"),
        ((7, 3, 0, 2), "multiplicities"),
    ],
)
def test_srg_infeasible(params, match):
    with pytest.raises(InfeasibleParameters, match=match):
        srg_spectrum(*params)


@pytest.mark.parametrize("p", range(4, 13))
def test_kneser_formula_vs_srg(p):
    assert srg_spectrum(*kneser2_parameters(p)).groups == kneser2_spectrum(p).groups


def test_hoffman_coloring_examples():
    assert is_hoffman_coloring(srg_spectrum(49, 12, 5, 2), 7)
    assert not is_hoffman_coloring(PETERSEN, 3)
    for n in range(2, 8):
        assert is_hoffman_coloring(spectrum_of(graphs.complete(n)), n)
    with pytest.raises(ValueError):
        is_hoffman_coloring(PETERSEN, 1)


def test_report_kneser62():
    rep = bounds_report(graphs.kneser(6, 2))
    # spectrum 6^1 1^9 (-3)^5: kappa = 2 and ratio 1 + 6/3 = 3, only the multiplicity bound reaches 4
    assert (rep.kappa_bound, rep.ratio_bound, rep.mult_bound) == (3, 3, 4)
    assert rep.connected and rep.best_lower_bound == 4


def test_report_omega4_per_component():
    rep = bounds_report(graphs.orthogonality_graph(4))
    assert not rep.connected
    assert len(rep.per_component) == 2
    for comp in rep.per_component:
        assert comp.mult_bound is None and not comp.mu2_positive
        assert comp.ratio_bound == 4 and comp.kappa_bound == 4
        assert comp.spectrum.snapped() == ((6.0, 1), (0.0, 4), (-2.0, 3))
    assert rep.best_lower_bound == 4


def test_report_edgeless():
    rep = bounds_report(graphs.from_edges(3, []))
    assert rep.kappa == 0
    assert (rep.kappa_bound, rep.ratio_bound, rep.best_lower_bound) == (1, 1, 1)
    assert rep.mult_bound is None


def test_report_invariants_on_corpus():
    for g in small_corpus():
        rep = bounds_report(g)
        assert (rep.kappa_bound >= 2) == (g.num_edges > 0)
        assert (rep.mult_bound is not None) == rep.mu2_positive
        parts = rep.per_component or [rep]
        assert rep.best_lower_bound == max(
            max(b for b in (p.kappa_bound, p.ratio_bound, p.mult_bound) if b is not None)
            for p in parts
        )


def test_report_json_fields():
    d = bounds_report(graphs.cycle(5)).as_dict()
    for key in ("kappa", "kappa_bound", "ratio_bound_real", "ratio_bound", "mult_bound_real",
                "mult_bound", "g", "mu2_positive", "connected", "per_component", "best_lower_bound"):
        assert key in d


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([0.25, 0.5, 2.0, 3.5, 10.0, 1000.0]), st.integers(0, 10**6))
def test_scale_covariance(t, seed):
    rng = np.random.default_rng(seed)
    g = graphs.kneser(5, 2) if seed % 2 else graphs.barbell(4)
    w = np.abs(random_hermitian(g.n, rng, real=True)) * g.adjacency + g.adjacency
    base = bounds_report(g, w)
    scaled = bounds_report(g, t * w)
    np.testing.assert_allclose(
        np.array(scaled.spectrum.values), t * np.array(base.spectrum.values), atol=1e-9 * t
    )
    for key in ("kappa", "g", "ratio_bound", "mult_bound"):
        assert getattr(scaled, key) == getattr(base, key), key


def test_unweighted_soundness_on_corpus():
    for g in small_corpus():
        chi = chromatic_number(g).chi
        rep = bounds_report(g)
        assert rep.kappa_bound <= chi and rep.ratio_bound <= chi, g.name
        if rep.mult_bound is not None:
            assert rep.mult_bound <= chi, g.name


def test_weighted_soundness(rng):
    # the bounds also hold for W o A with any Hermitian W
    for g in small_corpus()[:25]:
        chi = chromatic_number(g).chi
        for _ in range(3):
            w = random_hermitian(g.n, rng) * g.adjacency
            rep = bounds_report(g, w)
            assert rep.kappa_bound <= chi, g.name
            if rep.ratio_bound_real is not None and g.num_edges:
                assert rep.ratio_bound <= chi, g.name
            if rep.mult_bound is not None:
                assert rep.mult_bound <= chi, g.name
