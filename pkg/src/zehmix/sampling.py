"""Frequentist Monte-Carlo layer: preparation draws and projective (Born) outcomes.

Estimating ``mu_n`` of the expectation-value random variable needs two
levels of sampling.  Each *preparation* draws one ensemble member; the
realization of the random variable on that member is then estimated by the
mean of ``m_inner`` measurement shots, and that mean is raised to the n-th
power.  With a single shot per preparation one instead estimates
``sum_i p_i <phi_i|O^n|phi_i>``, which depends on ``rho`` only.

Randomness
----------
Generators are ``numpy.random.Generator(PCG64(SeedSequence(seed,
spawn_key=(worker,))))``.  Outer preparations are split into ``workers``
contiguous chunks, chunk ``w`` drawn from the generator with
``spawn_key=(w,)``; results are concatenated in worker order.  The pair
``(seed, workers)`` is therefore the reproducibility key.

The estimator is the plain plug-in one, and is biased for ``n >= 2``:
``E[mean^n] - mu_n = O(1 / m_inner)``.  For a spin-1/2 component and
``n = 2`` the bias is ``sum_i p_i Var_i / m_inner <= 1 / (4 m_inner)``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DimensionMismatch
from .mixtures import Ensemble
from .qalgebra import EPS_EIG, Ket, Observable, _eigh

RNG_ALGORITHM = "numpy.random.PCG64 seeded by SeedSequence(seed, spawn_key=(worker,))"


def rng_description() -> str:
    return f"{RNG_ALGORITHM}; numpy {np.__version__}"


@dataclass(frozen=True)
class SamplerConfig:
    seed: int
    n_outer: int
    m_inner: int
    workers: int = 1

    def __post_init__(self):
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.n_outer < 1 or self.m_inner < 1:
            raise ValueError("n_outer and m_inner must both be at least 1")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


class MomentEstimate(NamedTuple):
    estimate: float
    stderr: float


def make_rng(seed: int, worker: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(worker,))))


def _inverse_cdf(probs: np.ndarray, u):
    cdf = np.cumsum(probs)
    idx = np.searchsorted(cdf, u, side="right")
    # Guards against u landing above a cdf that sums to 1 - tiny.
    return np.minimum(idx, probs.size - 1)


def sample_member(e: Ensemble, rng: np.random.Generator) -> int:
    """Draw a member index with probability ``p_i`` (inverse CDF in member order)."""
    return int(_inverse_cdf(e.probs, rng.random()))


def sample_members(e: Ensemble, rng: np.random.Generator, size: int) -> np.ndarray:
    return _inverse_cdf(e.probs, rng.random(size))


def outcome_spectrum(O: Observable):
    """Distinct eigenvalues of ``O`` and the projectors' eigenvector groups.

    Eigenvalues closer than ``EPS_EIG`` are merged into one outcome.
    """
    values, vectors = _eigh(O.matrix)
    groups = [[0]]
    for i in range(1, values.size):
        if values[i] - values[groups[-1][0]] <= EPS_EIG:
            groups[-1].append(i)
        else:
            groups.append([i])
    outcomes = np.array([values[g].mean() for g in groups])
    return outcomes, [vectors[:, g] for g in groups]


def born_distribution(k: Ket, O: Observable):
    """Outcomes of measuring ``O`` on ``k`` and their Born probabilities."""
    if k.dim != O.dim:
        raise DimensionMismatch(f"ket dimension {k.dim} does not match observable {O.dim}")
    outcomes, blocks = outcome_spectrum(O)
    probs = np.array([np.sum(np.abs(b.conj().T @ k.amplitudes) ** 2) for b in blocks])
    return outcomes, probs / probs.sum()


def born_sample(k: Ket, O: Observable, rng: np.random.Generator) -> float:
    """One projective measurement of ``O`` on ``k``; returns the eigenvalue observed."""
    outcomes, probs = born_distribution(k, O)
    return float(outcomes[_inverse_cdf(probs, rng.random())])


def born_samples(k: Ket, O: Observable, rng: np.random.Generator, shots: int) -> np.ndarray:
    outcomes, probs = born_distribution(k, O)
    return outcomes[_inverse_cdf(probs, rng.random(shots))]


def _powered_means(e, outcomes, member_probs, n, m_inner, size, rng):
    idx = sample_members(e, rng, size)
    # Counts of each outcome over m_inner shots: same law as summing m_inner born_sample draws.
    counts = rng.multinomial(m_inner, member_probs[idx])
    means = counts @ outcomes / m_inner
    return means ** n


def estimate_moment(e: Ensemble, O: Observable, n: int, cfg: SamplerConfig) -> MomentEstimate:
    """Monte-Carlo estimate of ``mu_n`` with its standard error.

    ``stderr`` is the sample standard deviation of the powered per-preparation
    means divided by ``sqrt(n_outer)``; it is ``nan`` when ``n_outer == 1``.
    """
    if n < 1:
        raise ValueError(f"moment order must be at least 1, got {n}")
    if e.dim != O.dim:
        raise DimensionMismatch(f"ensemble dimension {e.dim} does not match observable {O.dim}")
    outcomes, _ = outcome_spectrum(O)
    member_probs = np.array([born_distribution(k, O)[1] for k in e.kets])

    sizes = [len(c) for c in np.array_split(np.arange(cfg.n_outer), cfg.workers)]

    def run(worker):
        return _powered_means(e, outcomes, member_probs, n, cfg.m_inner, sizes[worker],
                              make_rng(cfg.seed, worker))

    if cfg.workers == 1:
        parts = [run(0)]
    else:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            parts = list(pool.map(run, range(cfg.workers)))
    powered = np.concatenate(parts)
    estimate = float(powered.mean())
    if cfg.n_outer == 1:
        return MomentEstimate(estimate, float("nan"))
    stderr = float(powered.std(ddof=1) / np.sqrt(cfg.n_outer))
    return MomentEstimate(estimate, stderr)
