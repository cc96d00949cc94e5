"""Command-line front end.

``ybrg verify <suite>`` runs one or all verification suites and writes a JSON
report; ``ybrg traj`` writes a CSV sample of an integrable coupling trajectory.

Exit status: 0 pass, 1 failed check or domain error, 2 usage error.
"""
from __future__ import annotations

import argparse
import datetime as _dt
import math
import os
import sys

import numpy as np

from . import __version__
from .couplings import (
    SpectralProfile,
    check_constraint,
    check_shift_property,
    couplings_from_spectral,
    integrable_phi,
    kondo_temperature,
    rg_identified_slope,
    spectral_from_couplings,
    su2_coupling,
    su2_spectral,
)
from .errors import YbrgError
from .report import Check, Report, csv_text, write_atomic
from .rgflow import (
    correspondence_deviation,
    integrate_rg,
    integrate_su2,
    su2_rg_field,
)
from .smatrix import (
    inverse_property_residual,
    mixing_block,
    ybe_impurity_residual,
    ybe_particle_residual,
)
from .transport import TransportConfig, commutation_residual
from .wavefunction import extend_one_particle, pbc_residual, round_trip_residual, uniform_grid

SUITES = ("ybe", "transport", "couplings", "rgflow", "qkz1")
CSV_HEADER = ["t", "j_par", "j_perp", "phi", "constraint_residual", "conserved_q"]
SEED_ENV = "YBRG_SEED"

# sweep sizes for the randomized suites
N_RANDOM = 100
N_TRANSPORT_CONFIGS = 10
# reference point of the anisotropic RG correspondence (coupling scale ~0.05)
RG_U_REF = 0.02
RG_C_REF = math.log(3.0)


def _profile(args) -> SpectralProfile:
    if args.profile == "sine":
        return SpectralProfile.sine(args.a, args.c, args.eps)
    return SpectralProfile.linear(args.a, args.c)


def _guarded(checks, name, fn, threshold, **params):
    """Run ``fn`` and append its check; domain errors become failed checks."""
    try:
        checks.append(fn())
    except YbrgError as exc:
        checks.append(Check.failed(name, exc, threshold, **params))


def suite_ybe(args, rng) -> list[Check]:
    checks = []
    u = args.u
    profile = _profile(args)

    def unitarity():
        worst = 0.0
        for x in rng.uniform(-5, 5, N_RANDOM):
            b, c = mixing_block(x, u)
            worst = max(worst, abs(abs(b) ** 2 + abs(c) ** 2 - 1),
                        abs(b * c.conjugate() + c * b.conjugate()))
        return Check.evaluate("smatrix_unitarity", worst, 1e-13, u=u, samples=N_RANDOM)

    def inverse():
        worst = max(inverse_property_residual(x, u) for x in rng.uniform(-3, 3, N_RANDOM))
        return Check.evaluate("smatrix_inverse", worst, 1e-13, u=u, samples=N_RANDOM)

    def ybe16():
        pts = rng.uniform(-2, 2, (N_RANDOM, 2))
        worst = max(ybe_impurity_residual(zi, zj, profile, u) for zi, zj in pts)
        return Check.evaluate("ybe_impurity", worst, 1e-12, u=u, profile=profile.label,
                              samples=N_RANDOM)

    def ybe18():
        pts = rng.uniform(-2, 2, (N_RANDOM, 3))
        worst = max(ybe_particle_residual(*z, profile, u) for z in pts)
        return Check.evaluate("ybe_particle", worst, 1e-12, u=u, profile=profile.label,
                              samples=N_RANDOM)

    _guarded(checks, "smatrix_unitarity", unitarity, 1e-13, u=u)
    _guarded(checks, "smatrix_inverse", inverse, 1e-13, u=u)
    _guarded(checks, "ybe_impurity", ybe16, 1e-12, u=u)
    _guarded(checks, "ybe_particle", ybe18, 1e-12, u=u)
    return checks


def suite_transport(args, rng) -> list[Check]:
    checks = []
    profile = _profile(args)
    params = dict(u=args.u, a=args.a, c=args.c, L=args.L, n=args.n,
                  profile=profile.label, configs=N_TRANSPORT_CONFIGS)

    def commutation():
        worst = 0.0
        for _ in range(N_TRANSPORT_CONFIGS):
            cfg = TransportConfig(tuple(rng.uniform(-2, 2, args.n)), profile, args.u,
                                  args.L, args.a * args.L)
            for i in range(1, args.n + 1):
                for j in range(1, args.n + 1):
                    if i != j:
                        worst = max(worst, commutation_residual(i, j, cfg))
        return Check.evaluate("transport_commutation", worst, args.tol, **params)

    def shift():
        pts = np.linspace(-3, 3, 25)
        value = check_shift_property(profile, args.L, args.a * args.L, pts)
        return Check.evaluate("shift_property", value, args.tol, **params)

    _guarded(checks, "transport_commutation", commutation, args.tol, **params)
    _guarded(checks, "shift_property", shift, args.tol, **params)
    return checks


def suite_couplings(args, rng) -> list[Check]:
    checks = []
    us = np.linspace(0.05, 1.4, 40)
    phis = np.linspace(0.1, 5.0, 40)

    def round_trip():
        worst = 0.0
        for u in us:
            for phi in phis:
                f, u_back = spectral_from_couplings(couplings_from_spectral(u, phi))
                worst = max(worst, abs(f - phi), abs(u_back - u))
        return Check.evaluate("coupling_round_trip", worst, 1e-11, grid="40x40")

    def constraint():
        worst = max(check_constraint(couplings_from_spectral(u, phi), u)
                    for u in us for phi in phis)
        return Check.evaluate("half_angle_constraint", worst, 1e-13, grid="40x40")

    def family_at_u():
        phis_u = integrable_phi(np.linspace(0.0, 10.0, 101), args.a, args.c)
        worst = max(check_constraint(couplings_from_spectral(args.u, p), args.u)
                    for p in phis_u)
        return Check.evaluate("half_angle_constraint_at_u", worst, 1e-13, u=args.u,
                              a=args.a, c=args.c)

    def kondo():
        worst = 0.0
        for J in (0.1, 0.25, 0.5, 1.0):
            for cutoff in (1.0, 10.0):
                worst = max(worst, abs(kondo_temperature(1 / J, cutoff, "bethe")
                                       - kondo_temperature(J, cutoff, "wilson")))
        return Check.evaluate("kondo_temperature_bethe_vs_wilson", worst, 0.0, "<=")

    _guarded(checks, "coupling_round_trip", round_trip, 1e-11)
    _guarded(checks, "half_angle_constraint", constraint, 1e-13)
    _guarded(checks, "half_angle_constraint_at_u", family_at_u, 1e-13, u=args.u)
    _guarded(checks, "kondo_temperature_bethe_vs_wilson", kondo, 0.0)
    return checks


def suite_rgflow(args, rng) -> list[Check]:
    checks = []

    def su2_pointwise():
        ts = np.linspace(0.5, 100.0, 400)
        worst = 0.0
        for t in ts:
            exact_derivative = -math.pi / (t * t)
            J = su2_coupling(t)
            worst = max(worst, abs(su2_rg_field(J) - exact_derivative) / abs(exact_derivative))
        return Check.evaluate("su2_closed_form_solves_flow", worst, 1e-14)

    def su2_rk4():
        traj = integrate_su2(math.pi, 1.0, 10.0, 100_000)
        rel = abs(traj.j_par[-1] - math.pi / 10) / (math.pi / 10)
        return Check.evaluate("su2_rk4_endpoint", rel, 1e-8, steps=100_000)

    def conserved():
        traj = integrate_rg((0.3, 0.1), 0.0, 10.0, 10_000, args.a, args.u)
        q = traj.conserved
        return Check.evaluate("conserved_quantity_drift", float(np.max(np.abs(q - q[0]))),
                              1e-10, a=args.a, u=args.u, steps=10_000)

    def correspondence():
        d1 = correspondence_deviation(RG_U_REF, RG_C_REF)
        d2 = correspondence_deviation(RG_U_REF / 10, RG_C_REF)
        ratio = d1 / d2
        return Check.evaluate("rg_correspondence_scaling", abs(ratio - 100.0), 20.0,
                              ratio=ratio, max_rel_dev=d1, max_rel_dev_small=d2,
                              u=RG_U_REF, c=RG_C_REF)

    _guarded(checks, "su2_closed_form_solves_flow", su2_pointwise, 1e-14)
    _guarded(checks, "su2_rk4_endpoint", su2_rk4, 1e-8)
    _guarded(checks, "conserved_quantity_drift", conserved, 1e-10, a=args.a, u=args.u)
    _guarded(checks, "rg_correspondence_scaling", correspondence, 20.0)
    return checks


def suite_qkz1(args, rng) -> list[Check]:
    checks = []
    profile = _profile(args)
    grid = uniform_grid(0.0, args.L, 64)
    init = rng.normal(size=(64, 4)) + 1j * rng.normal(size=(64, 4))
    params = dict(u=args.u, profile=profile.label, L=args.L, periods=10)

    def round_trip():
        value = round_trip_residual(init, grid, 10, profile, args.u, args.L)
        return Check.evaluate("qkz1_round_trip", value, 1e-11, **params)

    def pbc():
        field = extend_one_particle(init, grid, 10, profile, args.u, args.L)
        return Check.evaluate("qkz1_pbc", pbc_residual(field, profile, args.u), 1e-12, **params)

    _guarded(checks, "qkz1_round_trip", round_trip, 1e-11, **params)
    _guarded(checks, "qkz1_pbc", pbc, 1e-12, **params)
    return checks


_SUITE_FUNCS = {
    "ybe": suite_ybe,
    "transport": suite_transport,
    "couplings": suite_couplings,
    "rgflow": suite_rgflow,
    "qkz1": suite_qkz1,
}


def _seed(args) -> int:
    env = os.environ.get(SEED_ENV)
    return int(env) if env not in (None, "") else args.seed


def build_report(args, timestamp: str | None = None) -> Report:
    if args.a is None:
        args.a = rg_identified_slope(args.u)
    seed = _seed(args)
    slope = rg_identified_slope(args.u)
    config = {
        "suite": args.suite, "u": args.u, "a": args.a, "c": args.c, "L": args.L,
        "n": args.n, "tol": args.tol, "profile": args.profile, "eps": args.eps,
        "seed": seed, "rg_slope": slope,
        "rg_identification_holds": math.isclose(args.a, slope, rel_tol=1e-12, abs_tol=0.0),
    }
    suites = SUITES if args.suite == "all" else (args.suite,)
    checks = []
    for name in suites:
        # one independent stream per suite so `verify all` matches single-suite runs
        rng = np.random.default_rng([seed, SUITES.index(name)])
        checks.extend(_SUITE_FUNCS[name](args, rng))
    if timestamp is None:
        timestamp = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    return Report(__version__, timestamp, config, checks)


def trajectory_rows(args) -> list[tuple[float, ...]]:
    ts = np.linspace(args.t0, args.t1, args.samples + 1)
    rows = []
    if args.su2:
        for t in ts:
            J = su2_coupling(t)
            pair = (J, J)
            rows.append((t, J, J, su2_spectral(J), check_constraint(pair, 0.0), 0.0))
        return rows
    a = rg_identified_slope(args.u)
    branch = 1 if args.branch == "+" else -1
    for t in ts:
        phi = integrable_phi(t, a, args.c)
        pair = couplings_from_spectral(args.u, phi, branch)
        q = pair.j_par ** 2 - pair.j_perp ** 2
        rows.append((t, pair.j_par, pair.j_perp, phi, check_constraint(pair, args.u), q))
    return rows


def _emit(text: str, path: str | None) -> None:
    if path:
        write_atomic(path, text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    report = build_report(args)
    _emit(report.to_json(), args.out)
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        print(f"{status} {check.name}: {check.value} (threshold {check.threshold})",
              file=sys.stderr)
    return 0 if report.verdict else 1


def cmd_traj(args) -> int:
    try:
        rows = trajectory_rows(args)
    except YbrgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(csv_text(CSV_HEADER, rows), args.csv)
    return 0


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ybrg",
        description="Integrability and RG-flow checks for the time-dependent anisotropic Kondo model")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites and write a JSON report")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--u", type=float, default=0.5, help="anisotropy (radians)")
    v.add_argument("--a", type=float, default=None, help="spectral slope; default -2u/pi")
    v.add_argument("--c", type=float, default=0.0, help="spectral offset")
    v.add_argument("--L", type=float, default=1.0, help="system size")
    v.add_argument("--n", type=int, choices=range(1, 6), default=2, metavar="INT",
                   help="particles for the transport suite (1-5)")
    v.add_argument("--tol", type=float, default=1e-9, help="transport pass threshold")
    v.add_argument("--profile", choices=("linear", "sine"), default="linear")
    v.add_argument("--eps", type=float, default=0.1, help="sine perturbation amplitude")
    v.add_argument("--seed", type=int, default=0, help=f"RNG seed (overridden by ${SEED_ENV})")
    v.add_argument("--out", default=None, help="report path (stdout if omitted)")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("traj", help="write the integrable coupling trajectory as CSV")
    t.add_argument("--u", type=float, default=0.5)
    t.add_argument("--c", type=float, default=0.0)
    t.add_argument("--t0", type=float, default=1.0)
    t.add_argument("--t1", type=float, default=10.0)
    t.add_argument("--samples", type=_positive_int, default=100)
    t.add_argument("--branch", choices=("+", "-"), default="+")
    t.add_argument("--su2", action="store_true", help="SU(2) trajectory J = pi/t")
    t.add_argument("--csv", default=None, help="output path (stdout if omitted)")
    t.set_defaults(func=cmd_traj)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify" and os.environ.get(SEED_ENV, "") != "":
        try:
            int(os.environ[SEED_ENV])
        except ValueError:
            print(f"error: {SEED_ENV} must be an integer", file=sys.stderr)
            return 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
