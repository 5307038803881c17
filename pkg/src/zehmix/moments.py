"""Moments of the expectation-value random variable over an ensemble.

For an observable ``O`` the random variable takes the value ``<phi_i|O|phi_i>``
on member ``i`` with probability ``p_i``.  Its first moment is fixed by the
density operator, but higher moments are not: two ensembles sharing ``rho``
can be told apart by some ``mu_n`` with ``n >= 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from .errors import DimensionMismatch
from .mixtures import Ensemble
from .qalgebra import (
    X_AXIS,
    Y_AXIS,
    Z_AXIS,
    Ket,
    Observable,
    SpinDirection,
    expectation,
    spin_component,
)

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class MomentWitness:
    """An (observable, order) at which two ensembles' moments differ."""

    label: str
    order: int
    value_a: float
    value_b: float
    direction: Optional[tuple] = None

    @property
    def gap(self) -> float:
        return abs(self.value_a - self.value_b)

    def as_dict(self) -> dict:
        out = {"observable": self.label, "order": self.order,
               "value_a": self.value_a, "value_b": self.value_b, "gap": self.gap}
        if self.direction is not None:
            out["direction"] = list(self.direction)
        return out


def rv_value(k: Ket, O: Observable) -> float:
    """Realization of the random variable on the pure state ``k``: ``<k|O|k>``."""
    return expectation(k, O)


def _rv_values(e: Ensemble, O: Observable) -> np.ndarray:
    if e.dim != O.dim:
        raise DimensionMismatch(f"ensemble dimension {e.dim} does not match observable {O.dim}")
    return np.array([rv_value(k, O) for k in e.kets])


def moment(e: Ensemble, O: Observable, n: int) -> float:
    """Raw moment ``mu_n = sum_i p_i <phi_i|O|phi_i>^n``."""
    if n < 0:
        raise ValueError(f"moment order must be non-negative, got {n}")
    values = _rv_values(e, O)
    if n == 0:
        return 1.0
    return float(np.dot(e.probs, values ** n))


def central_moment(e: Ensemble, O: Observable, n: int) -> float:
    """``sum_i p_i (<phi_i|O|phi_i> - mu_1)^n``."""
    if n < 0:
        raise ValueError(f"moment order must be non-negative, got {n}")
    values = _rv_values(e, O)
    if n == 0:
        return 1.0
    mean = float(np.dot(e.probs, values))
    return float(np.dot(e.probs, (values - mean) ** n))


def moment_profile(e: Ensemble, O: Observable, max_n: int):
    """List of ``(n, mu_n)`` for ``n = 1..max_n``."""
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")
    values = _rv_values(e, O)
    return [(n, float(np.dot(e.probs, values ** n))) for n in range(1, max_n + 1)]


def _as_observable(item: Union[SpinDirection, Observable]):
    if isinstance(item, Observable):
        return item, None
    if not isinstance(item, SpinDirection):
        item = SpinDirection(np.asarray(item, dtype=float))
    return spin_component(item), tuple(float(c) for c in item.n)


def distinguish(a: Ensemble, b: Ensemble, observables: Sequence, max_order: int,
                tol: float = DEFAULT_TOL) -> Optional[MomentWitness]:
    """Search for a moment witness separating ``a`` and ``b``.

    Observables (or spin directions) are scanned in the given order and,
    for each, orders ``1..max_order`` ascending.  The first pair with
    ``|mu_n(a) - mu_n(b)| > tol`` is returned.  ``None`` means no witness was
    found in the scanned set; it does not prove the ensembles identical.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(f"ensembles have dimensions {a.dim} and {b.dim}")
    if max_order < 1:
        raise ValueError(f"max_order must be at least 1, got {max_order}")
    observables = list(observables)
    if not observables:
        raise ValueError("need at least one observable to scan")
    for item in observables:
        O, direction = _as_observable(item)
        prof_a = moment_profile(a, O, max_order)
        prof_b = moment_profile(b, O, max_order)
        for (n, mu_a), (_, mu_b) in zip(prof_a, prof_b):
            if abs(mu_a - mu_b) > tol:
                return MomentWitness(O.label, n, mu_a, mu_b, direction)
    return None


def fibonacci_directions(count: int):
    """``count`` spin directions spread quasi-uniformly over the unit sphere."""
    if count < 0:
        raise ValueError("count must be non-negative")
    golden = np.pi * (3.0 - np.sqrt(5.0))
    out = []
    for i in range(count):
        z = 1.0 - 2.0 * (i + 0.5) / count
        r = np.sqrt(max(0.0, 1.0 - z * z))
        phi = golden * i
        v = np.array([r * np.cos(phi), r * np.sin(phi), z])
        out.append(SpinDirection(v / np.linalg.norm(v)))
    return out


def default_directions(grid_size: int = 64):
    """The three coordinate axes followed by a Fibonacci-sphere grid."""
    return [X_AXIS, Y_AXIS, Z_AXIS] + fibonacci_directions(grid_size)

