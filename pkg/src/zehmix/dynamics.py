"""Closed-system evolution under a time-independent Hamiltonian (hbar = 1)."""

from __future__ import annotations

from .errors import DimensionMismatch
from .mixtures import DensityOperator, Ensemble, make_ensemble
from .qalgebra import Observable, evolve_pure, unitary


def evolve_density(rho: DensityOperator, H: Observable, t: float) -> DensityOperator:
    """Liouville-von Neumann solution ``U rho U^dagger`` with ``U = exp(-iHt)``."""
    if rho.dim != H.dim:
        raise DimensionMismatch(f"density dimension {rho.dim} does not match Hamiltonian {H.dim}")
    if t == 0:
        return rho
    U = unitary(H, t)
    return DensityOperator(U @ rho.matrix @ U.conj().T)


def evolve_ensemble(e: Ensemble, H: Observable, t: float) -> Ensemble:
    """Evolve every member ket; probabilities are untouched."""
    if e.dim != H.dim:
        raise DimensionMismatch(f"ensemble dimension {e.dim} does not match Hamiltonian {H.dim}")
    return make_ensemble([(evolve_pure(k, H, t), p) for k, p in e], label=e.label)
