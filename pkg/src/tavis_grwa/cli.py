"""Command-line front end writing CSV tables.

All physical inputs are ratios to ``omega`` (``--delta`` is delta/omega,
``--g`` and the g range are g/omega, times are t*omega); ``--omega`` only sets
the absolute scale used internally.

Exit codes: 0 on success, 2 for argument errors, 3 for numerical or
convergence failures.
"""

import argparse
import csv
import io
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import adiabatic, dynamics, grwa, models
from .errors import ArgumentError, NumericalError

log = logging.getLogger("tavis_grwa")

METHODS = ("exact", "grwa", "rwa", "zeroth")

SPECTRUM_PRESETS = {
    "fig1a": {"delta": 0.5},
    "fig1b": {"delta": 1.0},
}
DYNAMICS_PRESETS = {
    "fig2a": {"delta": 1.0, "g": 0.1, "alpha": 2.0},
    "fig2b": {"delta": 1.0, "g": 0.3, "alpha": 2.0},
    "fig2c": {"delta": 0.5, "g": 0.1, "alpha": 2.0},
    "fig2d": {"delta": 0.5, "g": 1.0, "alpha": 2.0},
}
PRESETS = {**SPECTRUM_PRESETS, **DYNAMICS_PRESETS}

EXIT_OK, EXIT_ARGS, EXIT_NUMERIC = 0, 2, 3


def fmt(x):
    """Locale-independent 12-significant-digit float text; ``-0`` prints as ``0``."""
    x = float(x)
    if x == 0.0:
        x = 0.0
    return f"{x:.12g}"


def fmt_energy(x):
    """Energies are certified to ~1e-12 omega; round there so roundoff noise near 0 prints as 0."""
    return fmt(round(float(x), 12))


def parse_methods(text):
    methods = sorted({m.strip() for m in text.split(",") if m.strip()})
    unknown = [m for m in methods if m not in METHODS]
    if not methods or unknown:
        raise ArgumentError(f"methods must be a non-empty subset of {','.join(METHODS)}")
    return tuple(methods)


def _spectrum_point(args):
    delta, omega, g, N, levels, methods = args
    p = models.SystemParams(delta=delta, g=g, omega=omega)
    out = {}
    for m in methods:
        if m == "exact":
            res = models.exact_spectrum(p, N, levels)
        elif m == "rwa":
            res = models.rwa_spectrum(p, N, levels)
        elif m == "zeroth":
            res = adiabatic.zeroth_spectrum(p, N, levels)
        else:
            res = grwa.grwa_spectrum(p, N, levels)
        out[m] = res.energies / omega
    return out


def _dynamics_block(args):
    delta, omega, g, alpha, t_max, dt, N, method = args
    p = models.SystemParams(delta=delta, g=g, omega=omega)
    cfg = dynamics.DynamicsConfig(p, alpha=alpha, t_max=t_max, dt=dt, method=method, N=N)
    return dynamics.population_series(cfg)


def _run_pool(func, jobs, workers):
    if workers <= 1 or len(jobs) <= 1:
        return [func(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves submission order, so output order is independent of scheduling
        return list(pool.map(func, jobs))


def _apply_preset(args, table):
    if args.preset is None:
        return
    if args.preset not in table:
        raise ArgumentError(
            f"preset {args.preset!r} does not apply to '{args.command}' "
            f"(choose from {', '.join(sorted(table))})"
        )
    for key, value in table[args.preset].items():
        setattr(args, key, value)


def cmd_spectrum(args, out):
    _apply_preset(args, SPECTRUM_PRESETS)
    methods = parse_methods(args.methods)
    if args.g_steps < 1:
        raise ArgumentError("--g-steps must be >= 1")
    if args.g_max < args.g_min:
        raise ArgumentError("--g-max must be >= --g-min")
    grid = np.linspace(args.g_min, args.g_max, args.g_steps) * args.omega
    jobs = [(args.delta * args.omega, args.omega, g, args.n_trunc, args.levels, methods)
            for g in grid]
    results = _run_pool(_spectrum_point, jobs, args.workers)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["g_over_omega", "method", "level_index", "energy_over_omega"])
    for g, res in zip(grid, results):
        for m in methods:
            for k, e in enumerate(res[m]):
                w.writerow([fmt(g / args.omega), m, k, fmt_energy(e)])


def cmd_dynamics(args, out):
    _apply_preset(args, DYNAMICS_PRESETS)
    methods = parse_methods(args.methods)
    jobs = [
        (args.delta * args.omega, args.omega, args.g * args.omega, args.alpha,
         args.t_max / args.omega, args.dt / args.omega, args.n_trunc, m)
        for m in methods
    ]
    series = _run_pool(_dynamics_block, jobs, args.workers)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["t_omega", "method", "P_plus1", "P_zero", "P_minus1", "P_minus1_squared"])
    for ts in series:
        for t, (pp, pz, pm) in zip(ts.times, ts.populations):
            w.writerow([fmt(t * args.omega), ts.method, fmt(pp), fmt(pz), fmt(pm), fmt(pm * pm)])


def cmd_convergence(args, out):
    if args.n_start < 1 or args.n_max < args.n_start:
        raise ArgumentError("need 1 <= --n-start <= --n-max")
    ladder = []
    N = args.n_start
    while N <= args.n_max:
        ladder.append(N)
        N *= 2
    p = models.SystemParams(delta=args.delta * args.omega, g=args.g * args.omega, omega=args.omega)
    energies = models.convergence_ladder(p, ladder, args.levels)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["N", "level_index", "energy"])
    for N in ladder:
        for k, e in enumerate(energies[N]):
            w.writerow([N, k, fmt_energy(e / args.omega)])


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tavis-grwa",
        description="Two-qubit Tavis-Cummings spectra and population dynamics as CSV.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, delta_default):
        p.add_argument("--delta", type=float, default=delta_default, help="qubit splitting (units of omega)")
        p.add_argument("--omega", type=float, default=1.0, help="mode frequency")
        p.add_argument("--out", default="-", help="output CSV path, '-' for stdout")
        p.add_argument("--preset", choices=sorted(PRESETS))

    sp = sub.add_parser("spectrum", help="energy levels over a coupling sweep")
    common(sp, 0.5)
    sp.add_argument("--g-min", type=float, default=0.0)
    sp.add_argument("--g-max", type=float, default=1.0)
    sp.add_argument("--g-steps", type=int, default=101)
    sp.add_argument("--n-trunc", type=int, default=models.DEFAULT_N_SPECTRUM)
    sp.add_argument("--levels", type=int, default=models.DEFAULT_LEVELS)
    sp.add_argument("--methods", default=",".join(METHODS))
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_spectrum)

    dp = sub.add_parser("dynamics", help="spin populations versus time")
    common(dp, 1.0)
    dp.add_argument("--g", type=float, default=0.1)
    dp.add_argument("--alpha", type=float, default=dynamics.DEFAULT_ALPHA)
    dp.add_argument("--t-max", type=float, default=dynamics.DEFAULT_T_MAX, help="in units of 1/omega")
    dp.add_argument("--dt", type=float, default=dynamics.DEFAULT_DT, help="in units of 1/omega")
    dp.add_argument("--n-trunc", type=int, default=dynamics.DEFAULT_N_DYNAMICS)
    dp.add_argument("--methods", default=",".join(METHODS))
    dp.add_argument("--workers", type=int, default=1)
    dp.set_defaults(func=cmd_dynamics)

    cp = sub.add_parser("convergence", help="exact levels over a doubling truncation ladder")
    common(cp, 1.0)
    cp.add_argument("--g", type=float, default=1.0)
    cp.add_argument("--levels", type=int, default=6)
    cp.add_argument("--n-start", type=int, default=15)
    cp.add_argument("--n-max", type=int, default=120)
    cp.set_defaults(func=cmd_convergence)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    buf = io.StringIO()
    try:
        args.func(args, buf)
    except ArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    if args.out == "-":
        sys.stdout.write(buf.getvalue())
    else:
        try:
            with open(args.out, "w", newline="", encoding="ascii") as fh:
                fh.write(buf.getvalue())
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_ARGS
        log.info("wrote %s", args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
