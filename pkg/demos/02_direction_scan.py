"""Which spin components see the difference, and how evolution moves it.

For the two mixtures, mu_2 along direction n is (n_x^2)/4 for mixture 1 and
(n_y^2)/4 for mixture 2, so the second-moment gap is (n_x^2 - n_y^2)/4.
"""
import numpy as np

from zehmix import SpinDirection, moment, spin_component
from zehmix.dynamics import evolve_ensemble
from zehmix.mixtures import density_of, zeh_mixture_1, zeh_mixture_2
from zehmix.moments import default_directions, distinguish
from zehmix.qalgebra import SX, SZ

m1, m2 = zeh_mixture_1(), zeh_mixture_2()

gaps = []
for d in default_directions(64):
    O = spin_component(d)
    gaps.append((moment(m1, O, 2) - moment(m2, O, 2), d.n))
gaps = np.array([g for g, _ in gaps]), np.array([n for _, n in gaps])
predicted = (gaps[1][:, 0] ** 2 - gaps[1][:, 1] ** 2) / 4
print("max |gap - (nx^2 - ny^2)/4| over 67 directions:", np.abs(gaps[0] - predicted).max())

# A direction in the xy plane at 45 degrees is blind at order 2.
diag = spin_component(SpinDirection(np.array([1, 1, 0]) / np.sqrt(2)))
print("mu_2 along (x+y)/sqrt2:", moment(m1, diag, 2), moment(m2, diag, 2))

# Rotating mixture 1 about z by pi/2 turns it into mixture 2 (up to phases).
rotated = evolve_ensemble(m1, SZ, np.pi / 2)
print("rho unchanged by the rotation:", np.allclose(density_of(rotated).matrix, density_of(m1).matrix))
print("mu_2(sx) before / after:", moment(m1, SX, 2), round(moment(rotated, SX, 2), 12))
print("rotated vs mixture 2:", distinguish(rotated, m2, default_directions(64), 4))
