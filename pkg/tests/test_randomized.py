import numpy as np

from spectrachi.randomized import (
    DEFAULT_SEED,
    make_rng,
    random_resolution,
    random_unitary,
    seed_from_env,
)


def test_seed_from_env(monkeypatch):
    monkeypatch.delenv("SPECTRA_CHI_SEED", raising=False)
    assert seed_from_env() == DEFAULT_SEED
    monkeypatch.setenv("SPECTRA_CHI_SEED", "7")
    assert seed_from_env() == 7
    assert make_rng().random() == np.random.default_rng(7).random()


def test_random_unitary_and_resolution(rng):
    u = random_unitary(5, rng)
    np.testing.assert_allclose(u.conj().T @ u, np.eye(5), atol=1e-12)
    ps = random_resolution(6, 3, rng)
    np.testing.assert_allclose(sum(ps), np.eye(6), atol=1e-12)
    for p in ps:
        np.testing.assert_allclose(p @ p, p, atol=1e-12)
