"""Statistical mixtures {|phi_i>, p_i}, their density operators, purity and entropy.

An :class:`Ensemble` keeps its member list exactly as given.  Nothing is
merged, reordered or diagonalized, because two ensembles with the same
density operator can still be different preparations (see ``moments``).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    EmptyEnsemble,
    NegativeEigenvalue,
    NegativeProbability,
    NotADensityOperator,
    ProbabilitySumNotOne,
)
from .qalgebra import (
    EPS_EIG,
    EPS_HERM,
    MINUS_X,
    MINUS_Y,
    MINUS_Z,
    PLUS_X,
    PLUS_Y,
    PLUS_Z,
    Ket,
    _eigh,
    same_ray,
)

EPS_PROB = 1e-9


@dataclass(frozen=True, eq=False)
class Ensemble:
    """Ordered collection of ``(ket, probability)`` members."""

    members: tuple
    label: str = ""

    def __post_init__(self):
        members = tuple((k, float(p)) for k, p in self.members)
        if not members:
            raise EmptyEnsemble("an ensemble needs at least one member")
        dim = members[0][0].dim
        for i, (k, p) in enumerate(members):
            if not isinstance(k, Ket):
                raise TypeError(f"member {i}: expected Ket, got {type(k).__name__}")
            if k.dim != dim:
                raise DimensionMismatch(f"member {i}: ket dimension {k.dim} differs from {dim}")
            if p < 0:
                raise NegativeProbability(f"member {i}: probability {p!r} is negative", index=i)
        total = sum(p for _, p in members)
        if abs(total - 1.0) > EPS_PROB:
            raise ProbabilitySumNotOne(f"probabilities sum to {total!r}, expected 1")
        object.__setattr__(self, "members", members)

    @property
    def dim(self) -> int:
        return self.members[0][0].dim

    @property
    def kets(self):
        return [k for k, _ in self.members]

    @property
    def probs(self) -> np.ndarray:
        return np.array([p for _, p in self.members])

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def make_ensemble(pairs, label: str = "") -> Ensemble:
    """Validate ``pairs`` of ``(Ket, probability)`` into an :class:`Ensemble`."""
    pairs = list(pairs)
    if not pairs:
        raise EmptyEnsemble("an ensemble needs at least one member")
    return Ensemble(tuple(pairs), label=label)


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """Hermitian, positive-semidefinite, unit-trace matrix."""

    matrix: np.ndarray

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] == 0:
            raise DimensionMismatch(f"density operator must be square, got {mat.shape}")
        residue = np.max(np.abs(mat - mat.conj().T))
        if residue > EPS_HERM:
            raise NotADensityOperator(f"Hermiticity residue {residue:.3e}")
        mat = 0.5 * (mat + mat.conj().T)
        trace = np.trace(mat).real
        if abs(trace - 1.0) > EPS_PROB:
            raise NotADensityOperator(f"trace is {trace!r}, expected 1")
        lowest = np.linalg.eigvalsh(mat)[0]
        if lowest < -EPS_EIG:
            raise NegativeEigenvalue(f"eigenvalue {lowest:.3e} is negative")
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def eigenvalues(self) -> np.ndarray:
        return _eigh(self.matrix)[0]


def density_of(e: Ensemble) -> DensityOperator:
    """Return ``rho = sum_i p_i |phi_i><phi_i|``."""
    amps = np.array([k.amplitudes for k in e.kets])
    rho = (amps.T * e.probs) @ amps.conj()
    return DensityOperator(rho)


def pure_density(k: Ket) -> DensityOperator:
    return DensityOperator(k.projector())


def maximally_mixed(dim: int) -> DensityOperator:
    return DensityOperator(np.eye(dim, dtype=complex) / dim)


def purity(rho: DensityOperator) -> float:
    """``Tr rho^2``; equals 1 exactly when ``rho`` is a projector."""
    return float(np.sum(np.abs(rho.matrix) ** 2))


def is_projector(rho: DensityOperator, tol: float = EPS_EIG) -> bool:
    return abs(purity(rho) - 1.0) <= tol


def is_physically_pure(e: Ensemble, tol: float = EPS_EIG) -> bool:
    """True if every member with nonzero weight is the same ray as the first."""
    kets = [k for k, p in e.members if p > 0]
    return all(same_ray(kets[0], k, tol) for k in kets[1:])


def von_neumann_entropy(rho: DensityOperator, base: str = "nat") -> float:
    """Entropy ``-Tr(rho log rho)`` with k_B = 1.

    Parameters
    ----------
    rho : DensityOperator
    base : {"nat", "bits"}
        Natural logarithm or log2.

    Notes
    -----
    Eigenvalues in ``[-EPS_EIG, 0]`` are treated as exact zeros, and
    ``0 log 0`` is taken as 0.
    """
    if base not in ("nat", "bits"):
        raise ValueError(f"base must be 'nat' or 'bits', got {base!r}")
    lam = rho.eigenvalues()
    if lam.size and lam[0] < -EPS_EIG:
        raise NegativeEigenvalue(f"eigenvalue {lam[0]:.3e} is negative")
    lam = lam[lam > 0]
    log = np.log if base == "nat" else np.log2
    entropy = float(-np.sum(lam * log(lam)))
    return entropy if entropy > 0 else 0.0


def density_equal(a: Ensemble, b: Ensemble, tol: float = EPS_EIG) -> bool:
    if a.dim != b.dim:
        raise DimensionMismatch(f"ensembles have dimensions {a.dim} and {b.dim}")
    gap = np.max(np.abs(density_of(a).matrix - density_of(b).matrix))
    return bool(gap <= tol)


def zeh_mixture_1() -> Ensemble:
    """Equal-weight mixture of the s_x eigenkets |+x>, |-x>."""
    return make_ensemble([(PLUS_X, 0.5), (MINUS_X, 0.5)], label="zeh-1 (x basis)")


def zeh_mixture_2() -> Ensemble:
    """Equal-weight mixture of the s_y eigenkets |+y>, |-y>."""
    return make_ensemble([(PLUS_Y, 0.5), (MINUS_Y, 0.5)], label="zeh-2 (y basis)")


def z_basis_mixture() -> Ensemble:
    """Equal-weight mixture of |+z>, |-z> (the plain Stern-Gerlach output)."""
    return make_ensemble([(PLUS_Z, 0.5), (MINUS_Z, 0.5)], label="z basis")
