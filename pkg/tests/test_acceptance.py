"""One test per acceptance criterion; each records a PASS/FAIL line in the summary."""

import contextlib
import time

import numpy as np
from conftest import ACCEPTANCE_RESULTS
from corpus import small_corpus

from spectrachi import graphs
from spectrachi.bounds import (
    bounds_report,
    kappa_bound,
    kneser2_parameters,
    kneser2_spectrum,
    multiplicity_bound,
    ratio_bound,
    srg_spectrum,
)
from spectrachi.chromatic import chromatic_number, verify_coloring
from spectrachi.graph6 import parse_graph6, write_graph6
from spectrachi.quantum import (
    QuantumColoring,
    classical_to_quantum,
    omega_coloring,
    pinch,
    pinching_residual_blockwise,
    pinching_residual_dense,
    verify,
)
from spectrachi.randomized import (
    make_rng,
    random_graph,
    random_hermitian,
    random_orthonormal,
    random_resolution,
)
from spectrachi.spectral import compress, eigenvalues_hermitian, spectrum_of


@contextlib.contextmanager
def criterion(key):
    """Record the outcome of the enclosed checks under ``key``; details go in ``notes``."""
    notes = []
    try:
        yield notes
    except Exception as exc:
        ACCEPTANCE_RESULTS[key] = (False, f"{type(exc).__name__}: {exc}".splitlines()[0])
        raise
    ACCEPTANCE_RESULTS[key] = (True, "; ".join(notes))


GOLDEN_SRG = {
    "Clebsch": ((16, 5, 0, 2), ((5, 1), (1, 10), (-3, 5))),
    "GQ(2,4)": ((27, 10, 1, 5), ((10, 1), (1, 20), (-5, 6))),
    "Hoffman-Singleton": ((50, 7, 0, 1), ((7, 1), (2, 28), (-3, 21))),
    "Gewirtz": ((56, 10, 0, 2), ((10, 1), (2, 35), (-4, 20))),
    "Higman-Sims": ((100, 22, 0, 6), ((22, 1), (2, 77), (-8, 22))),
    "M22": ((77, 16, 0, 4), ((16, 1), (2, 55), (-6, 21))),
}


def kneser_golden(p):
    """Kneser(p,2) eigenvalues C(p-2,2), 1 and 3-p with multiplicities 1, p(p-3)/2, p-1."""
    k = (p - 2) * (p - 3) // 2
    groups = {}
    for value, mult in ((k, 1), (1, p * (p - 3) // 2), (3 - p, p - 1)):
        groups[value] = groups.get(value, 0) + mult  # p = 4: k = 1 merges with the middle value
    return tuple(sorted(groups.items(), reverse=True))


def test_1_srg_spectra_golden():
    with criterion("1 SRG golden spectra") as notes:
        for name, (params, expected) in GOLDEN_SRG.items():
            got = srg_spectrum(*params).snapped(1e-6)
            assert got == tuple((float(v), m) for v, m in expected), name
        for p in range(4, 13):
            expected = tuple((float(v), m) for v, m in kneser_golden(p))
            assert kneser2_spectrum(p).snapped(1e-6) == expected, p
            assert srg_spectrum(*kneser2_parameters(p)).snapped(1e-6) == expected, p
        notes.append("6 named SRGs and Kneser(p,2) p=4..12 exact after 1e-6 snapping")


def test_2_bound_values():
    with criterion("2 bound values") as notes:
        mult = {
            (16, 5, 0, 2): 4,
            (27, 10, 1, 5): 6,
            (100, 22, 0, 6): 5,
            (21, 10, 3, 6): 5,
            (25, 16, 9, 12): 5,
        }
        for params, want in mult.items():
            assert multiplicity_bound(srg_spectrum(*params))[1] == want, params
        for p in range(4, 13):
            res = multiplicity_bound(kneser2_spectrum(p))
            assert res is not None and res[1] == p - 2, p
        kappa = {
            (50, 7, 0, 1): 4,
            (56, 10, 0, 2): 4,
            (100, 22, 0, 6): 4,
            (15, 8, 4, 4): 5,
            (25, 8, 3, 2): 5,
            (77, 16, 0, 4): 4,
        }
        for params, want in kappa.items():
            assert kappa_bound(srg_spectrum(*params)) == want, params
        assert ratio_bound(srg_spectrum(49, 12, 5, 2))[1] == 7
        assert ratio_bound(srg_spectrum(27, 16, 10, 8))[1] == 9
        notes.append("multiplicity, kappa and ratio bounds match all listed integers")


def test_3_eigensolver_vs_closed_form():
    with criterion("3 eigensolver vs closed form") as notes:
        start = time.perf_counter()
        cases = [(graphs.clebsch(), srg_spectrum(16, 5, 0, 2)),
                 (graphs.hoffman_singleton(), srg_spectrum(50, 7, 0, 1))]
        cases += [(graphs.kneser(p, 2), srg_spectrum(*kneser2_parameters(p))) for p in range(4, 9)]
        worst = 0.0
        for g, closed in cases:
            computed = np.array(spectrum_of(g).values)
            err = float(np.max(np.abs(computed - np.array(closed.values))))
            assert err <= 1e-8, (g.name, err)
            worst = max(worst, err)
        elapsed = time.perf_counter() - start
        assert elapsed < 30, elapsed
        notes.append(f"max error {worst:.1e}, {elapsed:.1f}s")


def test_4_omega_chain():
    with criterion("4 Omega(n) chain") as notes:
        for n, budget in ((4, None), (8, 60.0)):
            g = graphs.orthogonality_graph(n)
            start = time.perf_counter()
            real, value = ratio_bound(spectrum_of(g))
            elapsed = time.perf_counter() - start
            assert abs(real - n) <= 1e-6 and value == n, (n, real)
            if budget is not None:
                assert elapsed < budget, elapsed
            qc = omega_coloring(n)
            rep = verify(g, qc)
            assert rep.passed, rep.residuals()
            assert rep.pinching_residual <= 1e-8
            notes.append(f"n={n}: ratio {real:.9f}, pinching {rep.pinching_residual:.1e}, eig {elapsed:.1f}s")


def test_5_exact_chi_soundness():
    with criterion("5 exact-chi soundness") as notes:
        corpus = small_corpus()
        # Kneser(7,2) is the one member with 21 vertices
        assert len(corpus) >= 30 and all(g.n <= 20 or g.name == "kneser(7,2)" for g in corpus)
        for g in corpus:
            res = chromatic_number(g)
            assert res.exact and verify_coloring(g, res.coloring), g.name
            rep = bounds_report(g)
            for part in rep.per_component or [rep]:
                for b in (part.kappa_bound, part.ratio_bound, part.mult_bound):
                    assert b is None or b <= res.chi, (g.name, b, res.chi)
            assert rep.best_lower_bound <= res.chi, g.name
        for g in (graphs.kneser(6, 2), graphs.clebsch()):
            res = chromatic_number(g)
            assert res.exact and res.chi == 4, g.name
        notes.append(f"{len(corpus)} graphs sound; Kneser(6,2) and Clebsch chi = 4")


def test_6_interlacing_and_pinching():
    with criterion("6 interlacing and pinch properties") as notes:
        rng = make_rng()
        for _ in range(200):
            n = int(rng.integers(1, 13))
            m = int(rng.integers(1, n + 1))
            x = random_hermitian(n, rng)
            s = random_orthonormal(n, m, rng)
            big = np.sort(eigenvalues_hermitian(x))
            small = np.sort(eigenvalues_hermitian(compress(x, s)))
            assert np.all(big[:m] <= small + 1e-8)
            assert np.all(big[::-1][:m] >= small[::-1] - 1e-8)
        for _ in range(50):
            size = int(rng.integers(1, 13))
            ps = random_resolution(size, int(rng.integers(1, size + 1)), rng)
            x = random_hermitian(size, rng)
            once = pinch(x, ps)
            assert abs(np.trace(once) - np.trace(x)) <= 1e-9
            assert np.max(np.abs(pinch(once, ps) - once)) <= 1e-9
        notes.append("200 interlacing instances, 50 pinching instances")


def test_7_blockwise_equals_dense():
    with criterion("7 blockwise vs dense pinching") as notes:
        rng = make_rng()
        count = 0
        worst = 0.0
        for n in range(1, 17):
            for d in range(1, 64 // n + 1):
                g = random_graph(n, 0.5, rng)
                c = int(rng.integers(1, 4))
                p = np.stack([np.stack(random_resolution(d, c, rng)) for _ in range(n)])
                qc = QuantumColoring(p)
                diff = abs(pinching_residual_blockwise(g, qc) - pinching_residual_dense(g, qc))
                assert diff <= 1e-10, (n, d, diff)
                worst = max(worst, diff)
                count += 1
        qc = omega_coloring(4)
        g = graphs.orthogonality_graph(4)
        assert abs(pinching_residual_blockwise(g, qc) - pinching_residual_dense(g, qc)) <= 1e-10
        for g in small_corpus()[:25]:
            qc = classical_to_quantum(g, chromatic_number(g).coloring)
            assert pinching_residual_blockwise(g, qc) == 0.0
            assert pinching_residual_dense(g, qc) == 0.0
        notes.append(f"{count + 1} instances, max difference {worst:.1e}; classical residuals 0")


def test_8_graph6_round_trip():
    with criterion("8 graph6 round trip") as notes:
        generated = small_corpus() + [
            graphs.kneser(p, 2) for p in range(4, 13)
        ] + [graphs.hoffman_singleton(), graphs.orthogonality_graph(8), graphs.barbell(6)]
        for g in generated:
            assert parse_graph6(write_graph6(g)) == g, g.name
        assert parse_graph6("A_") == graphs.complete(2)
        assert parse_graph6("A?") == graphs.from_edges(2, [])
        notes.append(f"{len(generated)} graphs; 'A_' = K2, 'A?' = 2 isolated vertices")
