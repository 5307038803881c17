"""Frequentist estimate of mu_2(X) from simulated preparations and shots.

Each preparation draws one member of the ensemble and measures sx m times;
the shot mean estimates X on that member.  Averaging (mean)^2 over
preparations estimates mu_2(X), with a plug-in bias of about 1/(4m) when
X = 0.  With one shot per preparation the squared outcome is always 1/4,
so the two mixtures look identical.
"""
from zehmix.mixtures import zeh_mixture_1, zeh_mixture_2
from zehmix.qalgebra import SX
from zehmix.sampling import SamplerConfig, estimate_moment, rng_description

print("rng:", rng_description())
for m in (1, 10, 100, 1_000, 10_000):
    cfg = SamplerConfig(seed=42, n_outer=10_000, m_inner=m)
    a = estimate_moment(zeh_mixture_1(), SX, 2, cfg)
    b = estimate_moment(zeh_mixture_2(), SX, 2, cfg)
    print(f"m_inner={m:>6}: mixture 1 {a.estimate:.6f} +- {a.stderr:.1e}   "
          f"mixture 2 {b.estimate:.6f} +- {b.stderr:.1e}   (bias estimate 1/(4m) = {1 / (4 * m):.1e})")
