"""Finite-dimensional linear algebra for pure states and observables.

Conventions: hbar = 1, spin components have eigenvalues +-1/2, and the
standard basis of a spin-1/2 is ordered (|+z>, |-z>).  Composite indices
are subsystem-1 major, i.e. ``index = i1 * dim2 + i2`` (``np.kron`` order).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    EmptyInput,
    NotHermitian,
    NotNormalized,
    NotUnitVector,
    ZeroVector,
)

EPS_NORM = 1e-12
EPS_HERM = 1e-10
EPS_EIG = 1e-9


def _frozen(array, dtype=complex):
    out = np.array(array, dtype=dtype)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class Ket:
    """Normalized pure state ``|k>``.

    Two kets differing only by a global phase describe the same physical
    state; use :func:`same_ray` to compare them.
    """

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = _frozen(self.amplitudes)
        if amps.ndim != 1:
            raise DimensionMismatch(f"ket amplitudes must be 1-d, got shape {amps.shape}")
        if amps.size == 0:
            raise EmptyInput("ket has no amplitudes")
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > EPS_NORM:
            raise NotNormalized(f"ket norm is {norm!r}; use make_ket to normalize")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def projector(self) -> np.ndarray:
        """Return ``|k><k|`` as a dense matrix."""
        return np.outer(self.amplitudes, self.amplitudes.conj())

    def __repr__(self):
        return f"Ket({np.array2string(self.amplitudes, precision=4)})"


@dataclass(frozen=True, eq=False)
class Observable:
    """Hermitian operator with a free-text label."""

    matrix: np.ndarray
    label: str = ""

    def __post_init__(self):
        mat = _frozen(self.matrix)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] == 0:
            raise DimensionMismatch(f"observable must be a non-empty square matrix, got {mat.shape}")
        residue = np.max(np.abs(mat - mat.conj().T))
        if residue > EPS_HERM:
            raise NotHermitian(f"observable {self.label!r} has Hermiticity residue {residue:.3e}")
        object.__setattr__(self, "matrix", mat)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True, eq=False)
class SpinDirection:
    """Unit vector selecting the spin component ``n . s``."""

    n: np.ndarray = field(default_factory=lambda: np.array([0.0, 0.0, 1.0]))

    def __post_init__(self):
        n = _frozen(self.n, dtype=float)
        if n.shape != (3,):
            raise NotUnitVector(f"direction must have 3 components, got shape {n.shape}")
        norm = np.linalg.norm(n)
        if abs(norm - 1.0) > EPS_NORM:
            raise NotUnitVector(f"direction norm is {norm!r}, expected 1")
        object.__setattr__(self, "n", n)

    @property
    def label(self) -> str:
        for name, axis in (("sx", 0), ("sy", 1), ("sz", 2)):
            if self.n[axis] == 1.0:
                return name
        return "dir:{:.6g},{:.6g},{:.6g}".format(*self.n)


def make_ket(amplitudes) -> Ket:
    """Normalize ``amplitudes`` into a :class:`Ket`.

    Raises
    ------
    EmptyInput
        If no amplitudes are given.
    ZeroVector
        If every amplitude vanishes.
    """
    amps = np.asarray(amplitudes, dtype=complex).ravel()
    if amps.size == 0:
        raise EmptyInput("cannot build a ket from zero amplitudes")
    norm = np.linalg.norm(amps)
    if norm == 0.0:
        raise ZeroVector("cannot normalize the zero vector")
    return Ket(amps / norm)


def same_ray(a: Ket, b: Ket, tol: float = EPS_EIG) -> bool:
    """True if ``a`` and ``b`` agree up to a global phase (projectors compared)."""
    if a.dim != b.dim:
        return False
    return bool(np.max(np.abs(a.projector() - b.projector())) <= tol)


def _check_dims(left: int, right: int, what: str):
    if left != right:
        raise DimensionMismatch(f"{what}: dimension {left} does not match {right}")


def expectation(k: Ket, O: Observable) -> float:
    """Return ``<k|O|k>``."""
    _check_dims(k.dim, O.dim, "expectation")
    value = np.vdot(k.amplitudes, O.matrix @ k.amplitudes)
    if abs(value.imag) > EPS_HERM:
        raise NotHermitian(f"quadratic form has imaginary part {value.imag:.3e}")
    return float(value.real)


PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def spin_component(d: SpinDirection) -> Observable:
    """Spin-1/2 component along ``d``: ``(n_x sx + n_y sy + n_z sz) / 2`` in Pauli terms."""
    if not isinstance(d, SpinDirection):
        d = SpinDirection(np.asarray(d, dtype=float))
    nx, ny, nz = d.n
    return Observable(0.5 * (nx * PAULI_X + ny * PAULI_Y + nz * PAULI_Z), label=d.label)


def _eigh(matrix: np.ndarray):
    # Enforce exact Hermiticity before handing to LAPACK.
    herm = 0.5 * (matrix + matrix.conj().T)
    return np.linalg.eigh(herm)


def herm_eig(O: Observable):
    """Eigendecomposition of a Hermitian observable.

    Returns
    -------
    eigenvalues : ndarray
        Real, ascending.
    eigenvectors : list of Ket
        Orthonormal; an arbitrary basis is chosen inside degenerate eigenspaces.
    """
    if not isinstance(O, Observable):
        O = Observable(O)
    values, vectors = _eigh(O.matrix)
    return values, [Ket(vectors[:, i] / np.linalg.norm(vectors[:, i])) for i in range(values.size)]


def unitary(H: Observable, t: float) -> np.ndarray:
    """Return ``exp(-i H t)`` built from the spectral decomposition of ``H``."""
    values, vectors = _eigh(H.matrix)
    return (vectors * np.exp(-1j * values * t)) @ vectors.conj().T


def evolve_pure(k: Ket, H: Observable, t: float) -> Ket:
    """Schrodinger evolution ``exp(-i H t)|k>``."""
    _check_dims(k.dim, H.dim, "evolve_pure")
    if t == 0:
        return k
    out = unitary(H, t) @ k.amplitudes
    return Ket(out / np.linalg.norm(out))


def tensor(a: Ket, b: Ket) -> Ket:
    out = np.kron(a.amplitudes, b.amplitudes)
    return Ket(out / np.linalg.norm(out))


def tensor_obs(A: Observable, B: Observable) -> Observable:
    label = f"{A.label or 'A'}(x){B.label or 'B'}"
    return Observable(np.kron(A.matrix, B.matrix), label=label)


def identity(dim: int, label: str = "I") -> Observable:
    return Observable(np.eye(dim, dtype=complex), label=label)


SX = Observable(0.5 * PAULI_X, label="sx")
SY = Observable(0.5 * PAULI_Y, label="sy")
SZ = Observable(0.5 * PAULI_Z, label="sz")

_R2 = 1 / np.sqrt(2)
PLUS_Z = Ket([1, 0])
MINUS_Z = Ket([0, 1])
PLUS_X = Ket([_R2, _R2])
MINUS_X = Ket([_R2, -_R2])
PLUS_Y = Ket([_R2, 1j * _R2])
MINUS_Y = Ket([_R2, -1j * _R2])

X_AXIS = SpinDirection(np.array([1.0, 0.0, 0.0]))
Y_AXIS = SpinDirection(np.array([0.0, 1.0, 0.0]))
Z_AXIS = SpinDirection(np.array([0.0, 0.0, 1.0]))
