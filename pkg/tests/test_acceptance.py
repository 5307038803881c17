"""Exit criteria for the package, one test per criterion.

Run ``pytest tests/test_acceptance.py -v``; the terminal summary prints a
PASS/FAIL line for each criterion.
"""

import io
import math
import os
import subprocess
import sys
import time
from contextlib import redirect_stdout

import numpy as np

from helpers import random_ensemble, random_hermitian, random_ket
from zehmix.bipartite import (
    BipartiteState,
    full_space_expectation,
    reduced_expectation,
    run_scenario,
    spin_spin_scenario,
)
from zehmix.cli import main
from zehmix.dynamics import evolve_density, evolve_ensemble
from zehmix.mixtures import (
    DensityOperator,
    density_equal,
    density_of,
    pure_density,
    purity,
    von_neumann_entropy,
    zeh_mixture_1,
    zeh_mixture_2,
)
from zehmix.moments import distinguish, moment
from zehmix.qalgebra import SX, SY, SZ
from zehmix.sampling import SamplerConfig, estimate_moment

DATA = os.path.join(os.path.dirname(__file__), os.pardir, "data")


def test_ac1_zeh_moment_table():
    m1, m2 = zeh_mixture_1(), zeh_mixture_2()
    for n in range(1, 11):
        expected = 0.5 ** n if n % 2 == 0 else 0.0
        assert abs(moment(m1, SX, n) - expected) <= 1e-12, n
        assert abs(moment(m2, SX, n)) <= 1e-12, n


def test_ac2_z_symmetry():
    m1, m2 = zeh_mixture_1(), zeh_mixture_2()
    for n in range(1, 11):
        assert abs(moment(m1, SZ, n)) <= 1e-12
        assert abs(moment(m2, SZ, n)) <= 1e-12
    assert distinguish(m1, m2, [SZ], 8) is None


def test_ac3_density_coincidence():
    m1, m2 = zeh_mixture_1(), zeh_mixture_2()
    for e in (m1, m2):
        assert np.max(np.abs(density_of(e).matrix - np.eye(2) / 2)) <= 1e-12
    assert density_equal(m1, m2)
    w = distinguish(m1, m2, [SX, SY, SZ], 4)
    assert w is not None
    assert (w.label, w.order) == ("sx", 2)
    assert abs(w.value_a - 0.25) <= 1e-12 and abs(w.value_b) <= 1e-12
    assert abs(w.gap - 0.25) <= 1e-12


def test_ac4_entropy():
    rng = np.random.default_rng(20240401)
    for _ in range(100):
        k = random_ket(rng, int(rng.integers(2, 9)))
        assert von_neumann_entropy(pure_density(k)) <= 1e-9
    assert abs(von_neumann_entropy(DensityOperator(np.eye(2) / 2)) - math.log(2)) <= 1e-12
    m1, m2 = zeh_mixture_1(), zeh_mixture_2()
    s1, s2 = von_neumann_entropy(density_of(m1)), von_neumann_entropy(density_of(m2))
    assert abs(s1 - s2) <= 1e-12
    assert distinguish(m1, m2, [SX, SY, SZ], 4) is not None


def test_ac5_first_moment_bridge():
    rng = np.random.default_rng(5)
    worst = 0.0
    for _ in range(250):
        dim = int(rng.integers(2, 5))
        e, O = random_ensemble(rng, dim), random_hermitian(rng, dim)
        gap = abs(moment(e, O, 1) - np.trace(density_of(e).matrix @ O.matrix).real)
        worst = max(worst, gap)
    print(f"first-moment bridge: worst gap {worst:.2e}")
    assert worst <= 1e-9


def test_ac6_evolution_consistency():
    rng = np.random.default_rng(6)
    for _ in range(120):
        dim = int(rng.integers(2, 5))
        e, H, t = random_ensemble(rng, dim), random_hermitian(rng, dim), rng.uniform(-10, 10)
        rho = density_of(e)
        evolved = evolve_density(rho, H, t)
        assert np.max(np.abs(density_of(evolve_ensemble(e, H, t)).matrix - evolved.matrix)) <= 1e-9
        assert abs(von_neumann_entropy(evolved) - von_neumann_entropy(rho)) <= 1e-9
        assert abs(purity(evolved) - purity(rho)) <= 1e-9
        assert np.max(np.abs(evolved.eigenvalues() - rho.eigenvalues())) <= 1e-9


def test_ac7_landau_feynman_scenario():
    start = time.perf_counter()
    omega = 1.0
    spec = spin_spin_scenario(omega)
    traj = run_scenario(spec)
    (at_t1,) = [p for p in traj if p.t == spec.t1]
    assert abs(at_t1.purity - 0.5) <= 1e-8
    assert abs(at_t1.entropy - math.log(2)) <= 1e-8
    post = [p for p in traj if p.t >= spec.t1]
    assert len(post) >= 10
    assert max(abs(p.purity - at_t1.purity) for p in post) <= 1e-8
    assert all(p.lvn_ok for p in post if p.lvn_ok is not None)
    assert all(abs(p.global_purity - 1) <= 1e-9 for p in traj)

    rng = np.random.default_rng(7)
    for _ in range(60):
        d1, d2 = int(rng.integers(2, 5)), int(rng.integers(2, 5))
        s = BipartiteState(random_ket(rng, d1 * d2), (d1, d2))
        O = random_hermitian(rng, d1)
        assert abs(reduced_expectation(s, O) - full_space_expectation(s, O)) <= 1e-9
    elapsed = time.perf_counter() - start
    print(f"landau-feynman criterion runtime {elapsed:.3f} s")
    assert elapsed < 1.0


def test_ac8_monte_carlo_confirmation():
    start = time.perf_counter()
    cfg = SamplerConfig(seed=42, n_outer=10_000, m_inner=10_000)
    a = estimate_moment(zeh_mixture_1(), SX, 2, cfg)
    b = estimate_moment(zeh_mixture_2(), SX, 2, cfg)
    print(f"mixture 1: {a.estimate!r} +- {a.stderr!r}; mixture 2: {b.estimate!r} +- {b.stderr!r}")
    assert abs(a.estimate - 0.25) <= 4 * a.stderr + 1e-4
    assert abs(b.estimate - 0.0) <= 4 * b.stderr + 1e-4

    single = SamplerConfig(seed=42, n_outer=10_000, m_inner=1)
    ca = estimate_moment(zeh_mixture_1(), SX, 2, single)
    cb = estimate_moment(zeh_mixture_2(), SX, 2, single)
    print(f"single-shot control: {ca.estimate!r} +- {ca.stderr!r} vs {cb.estimate!r} +- {cb.stderr!r}")
    for c in (ca, cb):
        assert abs(c.estimate - 0.25) <= 4 * c.stderr + 1e-4
    # Squared single outcomes are identically 1/4, so both stderrs are exactly 0.
    assert abs(ca.estimate - cb.estimate) <= 4 * max(ca.stderr, cb.stderr)
    elapsed = time.perf_counter() - start
    print(f"monte-carlo criterion runtime {elapsed:.3f} s")
    assert elapsed < 60.0


def _simulate_json(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        assert main(argv) == 0
    return buf.getvalue().encode()


def test_ac9_reproducibility():
    argv = ["simulate", os.path.join(DATA, "mixture1.json"), "--observable", "sx", "--order", "2",
            "--seed", "42", "--n-outer", "10000", "--m-inner", "10000", "--json"]
    first, second = _simulate_json(argv), _simulate_json(argv)
    assert first == second
    proc = subprocess.run([sys.executable, "-m", "zehmix", *argv], capture_output=True, check=True)
    assert proc.stdout == first
