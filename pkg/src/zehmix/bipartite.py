"""Two-subsystem pure states, partial traces and the coupled-then-decoupled scenario.

A reduced operator obtained by partial trace from an entangled global pure
state is an *improper mixture*: it reproduces local statistics, but the
global system is still in a pure state and was never a statistical mixture
of subsystem states.  Reports produced from this module use that wording.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DimensionMismatch, NonAscendingTimes
from .mixtures import DensityOperator, purity, von_neumann_entropy
from .qalgebra import (
    EPS_EIG,
    PLUS_X,
    SZ,
    Ket,
    Observable,
    expectation,
    identity,
    tensor,
    unitary,
)

EPS_SCENARIO = 1e-8
REDUCED_LABEL = "reduced operator (improper mixture)"


@dataclass(frozen=True, eq=False)
class BipartiteState:
    """Pure state of a composite system with subsystem dimensions ``dims``."""

    ket: Ket
    dims: tuple

    def __post_init__(self):
        d1, d2 = (int(d) for d in self.dims)
        if d1 < 1 or d2 < 1 or d1 * d2 != self.ket.dim:
            raise DimensionMismatch(f"dims {self.dims} do not factor ket dimension {self.ket.dim}")
        object.__setattr__(self, "dims", (d1, d2))

    @classmethod
    def product(cls, a: Ket, b: Ket) -> "BipartiteState":
        return cls(tensor(a, b), (a.dim, b.dim))

    def density(self) -> DensityOperator:
        return DensityOperator(self.ket.projector())


def partial_trace(rho: DensityOperator, dims, keep: int = 1) -> DensityOperator:
    """Trace out one subsystem of ``rho`` acting on ``d1 * d2``.

    ``keep=1`` returns ``[rho_1]_{i,i'} = sum_j rho_{(i,j),(i',j)}``;
    ``keep=2`` traces over the first factor instead.
    """
    d1, d2 = (int(d) for d in dims)
    if d1 * d2 != rho.dim:
        raise DimensionMismatch(f"dims {tuple(dims)} do not factor matrix size {rho.dim}")
    blocks = rho.matrix.reshape(d1, d2, d1, d2)
    if keep == 1:
        return DensityOperator(np.einsum("ijkj->ik", blocks))
    if keep == 2:
        return DensityOperator(np.einsum("ijil->jl", blocks))
    raise ValueError(f"keep must be 1 or 2, got {keep!r}")


def reduced_state(s: BipartiteState, keep: int = 1) -> DensityOperator:
    # Contract the amplitude tensor directly; avoids forming the full projector.
    psi = s.ket.amplitudes.reshape(s.dims)
    if keep == 1:
        return DensityOperator(psi @ psi.conj().T)
    if keep == 2:
        return DensityOperator(psi.T @ psi.conj())
    raise ValueError(f"keep must be 1 or 2, got {keep!r}")


def reduced_expectation(s: BipartiteState, O1: Observable) -> float:
    """``Tr_1(rho_1 O1)`` with ``rho_1 = Tr_2 |s><s|``."""
    if O1.dim != s.dims[0]:
        raise DimensionMismatch(f"observable dimension {O1.dim} does not match subsystem 1 ({s.dims[0]})")
    rho1 = partial_trace(s.density(), s.dims, keep=1)
    return float(np.trace(rho1.matrix @ O1.matrix).real)


def full_space_expectation(s: BipartiteState, O1: Observable) -> float:
    """``<s| O1 (x) I |s>``, the brute-force counterpart of :func:`reduced_expectation`."""
    big = Observable(np.kron(O1.matrix, np.eye(s.dims[1])))
    return expectation(s.ket, big)


def is_entangled(s: BipartiteState, tol: float = EPS_EIG) -> bool:
    return purity(reduced_state(s, keep=1)) < 1.0 - tol


@dataclass(frozen=True, eq=False)
class ScenarioSpec:
    """Two subsystems prepared in pure states, coupled on ``[t0, t1]``, then free.

    ``H1_after`` optionally replaces ``H1`` after decoupling (e.g. a driven
    subsystem 1); it defaults to ``H1``.
    """

    H1: Observable
    H2: Observable
    Hint: Observable
    psi1: Ket
    psi2: Ket
    t0: float
    t1: float
    sample_times: tuple = field(default=())
    H1_after: Optional[Observable] = None

    def __post_init__(self):
        d1, d2 = self.psi1.dim, self.psi2.dim
        if self.H1.dim != d1 or self.H2.dim != d2:
            raise DimensionMismatch("subsystem Hamiltonians do not match initial kets")
        if self.Hint.dim != d1 * d2:
            raise DimensionMismatch(f"coupling has dimension {self.Hint.dim}, expected {d1 * d2}")
        if self.H1_after is not None and self.H1_after.dim != d1:
            raise DimensionMismatch("H1_after does not match subsystem 1")
        times = tuple(float(t) for t in self.sample_times)
        if not times:
            raise NonAscendingTimes("at least one sample time is required")
        if any(b < a for a, b in zip(times, times[1:])):
            raise NonAscendingTimes(f"sample times are not ascending: {times}")
        if not self.t0 <= self.t1 <= times[-1]:
            raise NonAscendingTimes(f"need t0 <= t1 <= last sample time, got {self.t0}, {self.t1}, {times[-1]}")
        if times[0] < self.t0:
            raise NonAscendingTimes(f"sample time {times[0]} precedes preparation time {self.t0}")
        object.__setattr__(self, "sample_times", times)

    @property
    def dims(self):
        return (self.psi1.dim, self.psi2.dim)


@dataclass(frozen=True, eq=False)
class TrajectoryPoint:
    t: float
    rho1: DensityOperator
    purity: float
    entropy: float
    global_purity: float
    # Max-entry residue of rho1(t) against U1 rho1(t_prev) U1^dagger; None if not checked.
    lvn_residue: Optional[float] = None
    lvn_ok: Optional[bool] = None


def run_scenario(spec: ScenarioSpec):
    """Exact piecewise-constant evolution of the global pure state.

    Returns a list of :class:`TrajectoryPoint`, one per sample time.  For
    each pair of consecutive samples both at or after ``t1`` the reduced
    operator is checked against its own Liouville-von Neumann evolution
    under the subsystem-1 Hamiltonian; violations beyond ``EPS_SCENARIO``
    are flagged through ``lvn_ok``.
    """
    d1, d2 = spec.dims
    I1, I2 = identity(d1), identity(d2)
    H1_after = spec.H1_after if spec.H1_after is not None else spec.H1
    free = np.kron(spec.H1.matrix, I2.matrix) + np.kron(I1.matrix, spec.H2.matrix)
    H_coupled = Observable(free + spec.Hint.matrix)
    H_free = Observable(np.kron(H1_after.matrix, I2.matrix) + np.kron(I1.matrix, spec.H2.matrix))

    psi0 = tensor(spec.psi1, spec.psi2).amplitudes
    psi_t1 = unitary(H_coupled, spec.t1 - spec.t0) @ psi0

    trajectory = []
    prev = None
    for t in spec.sample_times:
        if t <= spec.t1:
            psi = unitary(H_coupled, t - spec.t0) @ psi0
        else:
            psi = unitary(H_free, t - spec.t1) @ psi_t1
        state = BipartiteState(Ket(psi / np.linalg.norm(psi)), (d1, d2))
        rho1 = reduced_state(state, keep=1)
        residue = ok = None
        if prev is not None and prev.t >= spec.t1:
            U1 = unitary(H1_after, t - prev.t)
            predicted = U1 @ prev.rho1.matrix @ U1.conj().T
            residue = float(np.max(np.abs(predicted - rho1.matrix)))
            ok = residue <= EPS_SCENARIO
        point = TrajectoryPoint(
            t=t,
            rho1=rho1,
            purity=purity(rho1),
            entropy=von_neumann_entropy(rho1),
            global_purity=purity(state.density()),
            lvn_residue=residue,
            lvn_ok=ok,
        )
        trajectory.append(point)
        prev = point
    return trajectory


def spin_spin_scenario(omega: float = 1.0, sample_times=None) -> ScenarioSpec:
    """Two spins in |+x>, coupled by ``omega * sz (x) sz`` on ``[0, pi/omega]``.

    The reduced operator of spin 1 has off-diagonal element
    ``cos(omega t / 2) / 2`` during coupling and is ``I/2`` at ``t1``.
    """
    t1 = np.pi / omega
    if sample_times is None:
        sample_times = [t1 * k / 10 for k in range(10)] + [t1 + t1 * k / 10 for k in range(21)]
    zero = Observable(np.zeros((2, 2)), label="0")
    Hint = Observable(omega * np.kron(SZ.matrix, SZ.matrix), label="omega sz(x)sz")
    return ScenarioSpec(H1=zero, H2=zero, Hint=Hint, psi1=PLUS_X, psi2=PLUS_X,
                        t0=0.0, t1=t1, sample_times=tuple(sample_times))
