import numpy as np

from zehmix.mixtures import make_ensemble
from zehmix.qalgebra import Observable, make_ket


def random_ket(rng, dim):
    return make_ket(rng.normal(size=dim) + 1j * rng.normal(size=dim))


def random_hermitian(rng, dim, scale=1.0):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return Observable(scale * (a + a.conj().T) / 2, label="H")


def random_ensemble(rng, dim, size=None):
    size = size or int(rng.integers(1, 5))
    w = rng.random(size) + 0.05
    w = w / w.sum()
    return make_ensemble([(random_ket(rng, dim), p) for p in w])


def random_direction(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)
