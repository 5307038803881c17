"""Two spin-1/2 ensembles with the same density operator.

Mixture 1 is |+x>, |-x> with weight 1/2 each; mixture 2 is |+y>, |-y>.
Both give rho = I/2, so every first moment Tr(rho O) agrees.  The moments
of the per-state expectation value X = <phi|sx|phi> do not.
"""
import numpy as np

from zehmix import SX, SY, SZ, density_equal, density_of, distinguish, moment_profile, von_neumann_entropy
from zehmix.mixtures import zeh_mixture_1, zeh_mixture_2

np.set_printoptions(precision=4, suppress=True)

m1, m2 = zeh_mixture_1(), zeh_mixture_2()
print("rho(mixture 1) =\n", density_of(m1).matrix)
print("rho(mixture 2) =\n", density_of(m2).matrix)
print("same density operator:", density_equal(m1, m2))

# Moments of X (sx) and Z (sz), orders 1..6.
for label, O in (("X", SX), ("Z", SZ)):
    for e in (m1, m2):
        mus = [mu for _, mu in moment_profile(e, O, 6)]
        print(f"{label} moments, {e.label:16s}", np.round(mus, 6) + 0.0)

# Odd moments vanish for both; even moments of X are 2^-n for mixture 1 and 0 for mixture 2.
witness = distinguish(m1, m2, [SX, SY, SZ], max_order=6)
print("witness:", witness)

# The sz moments alone never separate them.
print("sz only:", distinguish(m1, m2, [SZ], max_order=8))

s1 = von_neumann_entropy(density_of(m1))
s2 = von_neumann_entropy(density_of(m2))
print(f"entropies: {s1:.6f} {s2:.6f} (ln 2 = {np.log(2):.6f}) -- same disorder, different ensembles")
