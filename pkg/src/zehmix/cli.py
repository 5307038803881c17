"""Command-line front end.

Subcommands::

    zehmix zeh-demo
    zehmix moments FILE [--observable sx] [--max-order 6]
    zehmix distinguish FILE_A FILE_B [--grid 64] [--max-order 4]
    zehmix entropy FILE [--base nat|bits]
    zehmix simulate FILE [--observable sx] [--order 2] --seed S [--n-outer N] [--m-inner M]
    zehmix landau-feynman SCENARIO

Global flags (accepted before or after the subcommand): ``--json`` for the
machine-readable report, ``--tol`` for the discrimination tolerance and
``--dump-csv PATH`` for a per-order / per-time series.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .bipartite import EPS_SCENARIO, REDUCED_LABEL, run_scenario
from .errors import DimensionMismatch, ZehmixError
from .fileio import encode_matrix, parse_ensemble_file, parse_scenario_file
from .mixtures import (
    EPS_PROB,
    density_equal,
    density_of,
    purity,
    von_neumann_entropy,
    zeh_mixture_1,
    zeh_mixture_2,
)
from .moments import (
    DEFAULT_TOL,
    central_moment,
    default_directions,
    distinguish,
    moment,
    moment_profile,
)
from .qalgebra import EPS_EIG, EPS_HERM, EPS_NORM, SX, SY, SZ, SpinDirection, spin_component
from .sampling import SamplerConfig, estimate_moment, rng_description


@dataclass
class Report:
    command: str
    params: dict
    results: dict
    inputs: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    rng: dict = None
    tol: float = DEFAULT_TOL
    # (header, rows) for --dump-csv; not part of the JSON report.
    series: tuple = None

    def to_dict(self) -> dict:
        out = {
            "command": self.command,
            "params": self.params,
            "version": __version__,
            "inputs": self.inputs,
            "tolerances": {
                "eps_norm": EPS_NORM,
                "eps_herm": EPS_HERM,
                "eps_eig": EPS_EIG,
                "eps_prob": EPS_PROB,
                "eps_scenario": EPS_SCENARIO,
                "tol": self.tol,
            },
        }
        if self.rng is not None:
            out["rng"] = self.rng
        out["results"] = self.results
        out["witnesses"] = self.witnesses
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=True) + "\n"


def _digest(path) -> dict:
    with open(path, "rb") as fh:
        return {"path": os.fspath(path), "sha256": hashlib.sha256(fh.read()).hexdigest()}


def parse_observable(spec: str):
    """Parse ``sx``, ``sy``, ``sz`` or ``dir:nx,ny,nz`` into a spin observable."""
    named = {"sx": SX, "sy": SY, "sz": SZ}
    if spec in named:
        return named[spec]
    if spec.startswith("dir:"):
        try:
            n = np.array([float(c) for c in spec[4:].split(",")])
        except ValueError:
            raise ValueError(f"bad direction in observable spec {spec!r}") from None
        norm = np.linalg.norm(n)
        if n.shape != (3,) or norm == 0:
            raise ValueError(f"direction must be a nonzero 3-vector, got {spec!r}")
        return spin_component(SpinDirection(n / norm))
    raise ValueError(f"unknown observable {spec!r}; use sx, sy, sz or dir:nx,ny,nz")


def _require_qubit(e, what):
    if e.dim != 2:
        raise DimensionMismatch(f"{what}: spin observables need dim 2, ensemble has dim {e.dim}")


def cmd_zeh_demo(max_order: int = 6, tol: float = DEFAULT_TOL) -> Report:
    a, b = zeh_mixture_1(), zeh_mixture_2()
    rho_a, rho_b = density_of(a), density_of(b)
    profiles = {}
    for name, O in (("X", SX), ("Z", SZ)):
        profiles[name] = {
            "observable": O.label,
            "a": [mu for _, mu in moment_profile(a, O, max_order)],
            "b": [mu for _, mu in moment_profile(b, O, max_order)],
        }
    witness = distinguish(a, b, [SX, SY, SZ], max_order, tol)
    s_a, s_b = von_neumann_entropy(rho_a), von_neumann_entropy(rho_b)
    results = {
        "ensemble_a": a.label,
        "ensemble_b": b.label,
        "rho_a": encode_matrix(rho_a.matrix),
        "rho_b": encode_matrix(rho_b.matrix),
        "density_equal": density_equal(a, b, tol),
        "profiles": profiles,
        "entropy_a": s_a,
        "entropy_b": s_b,
        "note": ("equal entropy, distinct ensembles" if abs(s_a - s_b) <= EPS_EIG and witness
                 else "entropies differ or no witness found"),
    }
    rows = [(n, profiles["X"]["a"][n - 1], profiles["X"]["b"][n - 1],
             profiles["Z"]["a"][n - 1], profiles["Z"]["b"][n - 1]) for n in range(1, max_order + 1)]
    return Report("zeh-demo", {"max_order": max_order}, results,
                  witnesses=[witness.as_dict()] if witness else [], tol=tol,
                  series=(("order", "X_a", "X_b", "Z_a", "Z_b"), rows))


def cmd_moments(path, observable: str = "sx", max_order: int = 6, tol: float = DEFAULT_TOL) -> Report:
    e = parse_ensemble_file(path)
    O = parse_observable(observable)
    _require_qubit(e, "moments")
    profile = moment_profile(e, O, max_order)
    central = [central_moment(e, O, n) for n in range(1, max_order + 1)]
    results = {
        "ensemble": e.label,
        "observable": O.label,
        "profile": [{"order": n, "moment": mu, "central_moment": c}
                    for (n, mu), c in zip(profile, central)],
    }
    return Report("moments", {"file": os.fspath(path), "observable": observable, "max_order": max_order},
                  results, inputs={"ensemble": _digest(path)}, tol=tol,
                  series=(("order", "moment", "central_moment"),
                          [(n, mu, c) for (n, mu), c in zip(profile, central)]))


def cmd_distinguish(path_a, path_b, grid: int = 64, max_order: int = 4, tol: float = DEFAULT_TOL) -> Report:
    a, b = parse_ensemble_file(path_a), parse_ensemble_file(path_b)
    _require_qubit(a, "distinguish")
    _require_qubit(b, "distinguish")
    directions = default_directions(grid)
    witness = distinguish(a, b, directions, max_order, tol)
    results = {
        "ensemble_a": a.label,
        "ensemble_b": b.label,
        "density_equal": density_equal(a, b, tol),
        "directions_scanned": len(directions),
        "max_order": max_order,
        "verdict": "distinct (moment witness found)" if witness else "none found (not a proof of equality)",
    }
    rows = []
    for d in directions:
        O = spin_component(d)
        for (n, mu_a), (_, mu_b) in zip(moment_profile(a, O, max_order), moment_profile(b, O, max_order)):
            rows.append((O.label, *d.n, n, mu_a, mu_b))
    return Report("distinguish",
                  {"file_a": os.fspath(path_a), "file_b": os.fspath(path_b), "grid": grid, "max_order": max_order},
                  results, inputs={"ensemble_a": _digest(path_a), "ensemble_b": _digest(path_b)},
                  witnesses=[witness.as_dict()] if witness else [], tol=tol,
                  series=(("observable", "nx", "ny", "nz", "order", "moment_a", "moment_b"), rows))


def cmd_entropy(path, base: str = "nat", tol: float = DEFAULT_TOL) -> Report:
    e = parse_ensemble_file(path)
    rho = density_of(e)
    eigenvalues = [float(v) for v in rho.eigenvalues()]
    results = {
        "ensemble": e.label,
        "rho": encode_matrix(rho.matrix),
        "eigenvalues": eigenvalues,
        "purity": purity(rho),
        "entropy": von_neumann_entropy(rho, base),
        "base": base,
    }
    return Report("entropy", {"file": os.fspath(path), "base": base}, results,
                  inputs={"ensemble": _digest(path)}, tol=tol,
                  series=(("index", "eigenvalue"), list(enumerate(eigenvalues))))


def cmd_simulate(path, observable: str = "sx", order: int = 2, seed: int = 0,
                 n_outer: int = 10_000, m_inner: int = 10_000, workers: int = 1,
                 tol: float = DEFAULT_TOL) -> Report:
    e = parse_ensemble_file(path)
    O = parse_observable(observable)
    _require_qubit(e, "simulate")
    cfg = SamplerConfig(seed=seed, n_outer=n_outer, m_inner=m_inner, workers=workers)
    est = estimate_moment(e, O, order, cfg)
    exact = moment(e, O, order)
    results = {
        "ensemble": e.label,
        "observable": O.label,
        "order": order,
        "estimate": est.estimate,
        "stderr": est.stderr,
        "exact": exact,
        "deviation": est.estimate - exact,
        "bias_note": "plug-in estimator; bias O(1/m_inner) for order >= 2",
    }
    params = {"file": os.fspath(path), "observable": observable, "order": order, "seed": seed,
              "n_outer": n_outer, "m_inner": m_inner, "workers": workers}
    rng = {"algorithm": rng_description(), "seed": seed, "workers": workers}
    return Report("simulate", params, results, inputs={"ensemble": _digest(path)}, rng=rng, tol=tol,
                  series=(("order", "estimate", "stderr", "exact"), [(order, est.estimate, est.stderr, exact)]))


def cmd_landau_feynman(path, tol: float = DEFAULT_TOL) -> Report:
    spec = parse_scenario_file(path)
    trajectory = run_scenario(spec)
    points = []
    for p in trajectory:
        points.append({
            "t": p.t,
            "phase": "coupled" if p.t <= spec.t1 else "decoupled",
            "purity": p.purity,
            "entropy": p.entropy,
            "global_purity": p.global_purity,
            "lvn_residue": p.lvn_residue,
            "lvn_ok": p.lvn_ok,
            "rho1": encode_matrix(p.rho1.matrix),
        })
    violations = sum(1 for p in trajectory if p.lvn_ok is False)
    results = {
        "rho1_kind": REDUCED_LABEL,
        "dims": list(spec.dims),
        "t0": spec.t0,
        "t1": spec.t1,
        "lvn_violations": violations,
        "trajectory": points,
    }
    rows = [(p.t, p.purity, p.entropy, p.global_purity,
             "" if p.lvn_residue is None else p.lvn_residue) for p in trajectory]
    return Report("landau-feynman", {"file": os.fspath(path)}, results,
                  inputs={"scenario": _digest(path)}, tol=tol,
                  series=(("t", "purity", "entropy", "global_purity", "lvn_residue"), rows))


def _fmt(x):
    if isinstance(x, float):
        return f"{x:.10g}"
    return str(x)


def render_human(report: Report) -> str:
    r = report.results
    lines = [f"zehmix {__version__} :: {report.command}"]
    if report.command == "zeh-demo":
        lines.append(f"  rho_a = rho_b = I/2: density_equal = {r['density_equal']}")
        for name, prof in r["profiles"].items():
            lines.append(f"  {name} ({prof['observable']}) moments a: " + ", ".join(map(_fmt, prof["a"])))
            lines.append(f"  {name} ({prof['observable']}) moments b: " + ", ".join(map(_fmt, prof["b"])))
        lines.append(f"  entropy a = {_fmt(r['entropy_a'])}, entropy b = {_fmt(r['entropy_b'])} ({r['note']})")
    elif report.command == "moments":
        lines.append(f"  {r['ensemble'] or 'ensemble'} / {r['observable']}")
        lines.append("  order  moment          central")
        for row in r["profile"]:
            lines.append(f"  {row['order']:>5}  {_fmt(row['moment']):<15} {_fmt(row['central_moment'])}")
    elif report.command == "distinguish":
        lines.append(f"  density_equal = {r['density_equal']}")
        lines.append(f"  scanned {r['directions_scanned']} directions up to order {r['max_order']}: {r['verdict']}")
    elif report.command == "entropy":
        lines.append("  eigenvalues: " + ", ".join(map(_fmt, r["eigenvalues"])))
        lines.append(f"  purity = {_fmt(r['purity'])}, entropy ({r['base']}) = {_fmt(r['entropy'])}")
    elif report.command == "simulate":
        lines.append(f"  mu_{r['order']}({r['observable']}) estimate = {_fmt(r['estimate'])} "
                     f"+- {_fmt(r['stderr'])} (exact {_fmt(r['exact'])})")
        lines.append(f"  rng: {report.rng['algorithm']}, seed {report.rng['seed']}")
    elif report.command == "landau-feynman":
        lines.append(f"  rho1 is a {r['rho1_kind']}; coupling on [{_fmt(r['t0'])}, {_fmt(r['t1'])}]")
        lines.append("  t             purity        entropy       lvn")
        for p in r["trajectory"]:
            lvn = "-" if p["lvn_ok"] is None else ("ok" if p["lvn_ok"] else "VIOLATED")
            lines.append(f"  {_fmt(p['t']):<13} {_fmt(p['purity']):<13} {_fmt(p['entropy']):<13} {lvn}")
        lines.append(f"  post-decoupling LvN violations: {r['lvn_violations']}")
    for w in report.witnesses:
        lines.append(f"  witness: {w['observable']} order {w['order']}: "
                     f"{_fmt(w['value_a'])} vs {_fmt(w['value_b'])} (gap {_fmt(w['gap'])})")
    lines.append(f"  tol = {report.tol:g}")
    return "\n".join(lines) + "\n"


def dump_csv(report: Report, path):
    header, rows = report.series
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit the machine-readable JSON report")
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS,
                        help="discrimination / equality tolerance (default 1e-9)")
    common.add_argument("--dump-csv", metavar="PATH", default=argparse.SUPPRESS,
                        help="write a CSV series for external plotting")

    parser = argparse.ArgumentParser(prog="zehmix", parents=[common],
                                     description="Statistical mixtures beyond the density operator.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeh-demo", parents=[common], help="the two Zeh mixtures end to end")
    p.add_argument("--max-order", type=int, default=6)

    p = sub.add_parser("moments", parents=[common], help="moment profile of one ensemble")
    p.add_argument("file")
    p.add_argument("--observable", default="sx")
    p.add_argument("--max-order", type=int, default=6)

    p = sub.add_parser("distinguish", parents=[common], help="search a moment witness between two ensembles")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--grid", type=int, default=64)
    p.add_argument("--max-order", type=int, default=4)

    p = sub.add_parser("entropy", parents=[common], help="density operator, purity and entropy")
    p.add_argument("file")
    p.add_argument("--base", choices=("nat", "bits"), default="nat")

    p = sub.add_parser("simulate", parents=[common], help="Monte-Carlo estimate of a moment")
    p.add_argument("file")
    p.add_argument("--observable", default="sx")
    p.add_argument("--order", type=int, default=2)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n-outer", type=int, default=10_000)
    p.add_argument("--m-inner", type=int, default=10_000)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("landau-feynman", parents=[common], help="coupled-then-decoupled bipartite scenario")
    p.add_argument("scenario")
    return parser


def run(args) -> Report:
    tol = getattr(args, "tol", DEFAULT_TOL)
    if args.command == "zeh-demo":
        return cmd_zeh_demo(args.max_order, tol)
    if args.command == "moments":
        return cmd_moments(args.file, args.observable, args.max_order, tol)
    if args.command == "distinguish":
        return cmd_distinguish(args.file_a, args.file_b, args.grid, args.max_order, tol)
    if args.command == "entropy":
        return cmd_entropy(args.file, args.base, tol)
    if args.command == "simulate":
        return cmd_simulate(args.file, args.observable, args.order, args.seed,
                            args.n_outer, args.m_inner, args.workers, tol)
    if args.command == "landau-feynman":
        return cmd_landau_feynman(args.scenario, tol)
    raise AssertionError(args.command)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = run(args)
        if getattr(args, "dump_csv", None):
            dump_csv(report, args.dump_csv)
    except (ZehmixError, OSError) as exc:
        print(f"zehmix: error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"zehmix: usage error: {exc}", file=sys.stderr)
        return 2
    out = report.to_json() if getattr(args, "json", False) else render_human(report)
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
