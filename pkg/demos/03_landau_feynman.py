"""Two spins coupled for a while, then left alone.

Spin 1 and spin 2 both start in |+x>.  A coupling omega * sz(x)sz acts on
[0, pi/omega].  The reduced operator of spin 1 loses purity while the
coupling acts and ends at I/2; afterwards it evolves unitarily on its own,
so purity and entropy stay put.  The global state is pure throughout: rho_1
is a reduced operator (an improper mixture), not a statistical mixture.
"""
import numpy as np

from zehmix.bipartite import REDUCED_LABEL, run_scenario, spin_spin_scenario

omega = 1.0
spec = spin_spin_scenario(omega)
print(f"rho_1 is a {REDUCED_LABEL}; coupling window [0, {spec.t1:.4f}]")
print(f"{'t':>8} {'purity':>10} {'entropy':>10} {'closed form':>12} {'global':>8}  lvn")
for p in run_scenario(spec):
    c = np.cos(omega * min(p.t, spec.t1) / 2)
    closed = 0.5 * (1 + c * c)
    lvn = "-" if p.lvn_ok is None else ("ok" if p.lvn_ok else "VIOLATED")
    print(f"{p.t:8.4f} {p.purity:10.6f} {p.entropy:10.6f} {closed:12.6f} {p.global_purity:8.4f}  {lvn}")
