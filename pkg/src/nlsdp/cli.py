"""Command-line entry point.

Subcommands: regime, profile, verify, phaseplane, evolve, minimize,
stability.  Array output goes to CSV (commented header naming columns), scalar
reports to JSON, and every run writes a manifest that reproduces it
bit-for-bit.  Exit codes: 0 success, 1 regime/validation error, 2 numerical
failure, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .evolution import EvolutionConfig, evolve
from .functionals import ComplexField, Grid, sample
from .minimize import estimate_m, gradient_flow, random_bump
from .model import ModelParams, RegimeTag, classify_regime
from .phaseplane import standing_wave_phase_path
from .profiles import Profile, equilibrium_profile, standing_wave_profile
from .stability import PERTURBATION_KINDS, stability_curve
from .stationary import interior_residual

FLOAT_FMT = "%.15g"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits with 2 by default; we want 64
        raise _UsageError(message)


def _add_model_args(p: argparse.ArgumentParser, with_omega: bool = True) -> None:
    p.add_argument("--p", type=float, required=True, help="nonlinearity exponent (> 1)")
    p.add_argument("--lambda1", type=float, required=True, help="coefficient of |u|^(p-1) u")
    p.add_argument("--lambda2", type=float, required=True, help="coefficient of |u|^(2p-2) u")
    p.add_argument("--Z", type=float, required=True, help="point-interaction strength")
    if with_omega:
        p.add_argument("--omega", type=float, default=None, help="wave frequency (<= 0); 0 selects the equilibrium")


def _params(args) -> ModelParams:
    return ModelParams(p=args.p, lambda1=args.lambda1, lambda2=args.lambda2, Z=args.Z)


def _profile_for(args) -> Profile:
    params = _params(args)
    omega = args.omega if args.omega is not None else 0.0
    if omega == 0.0:
        return equilibrium_profile(params)
    return standing_wave_profile(params, omega)


def _out_dir(args) -> Path:
    out = Path(args.out or os.environ.get("NLSDP_OUT", "."))
    out.mkdir(parents=True, exist_ok=True)
    return out


def _write_manifest(out: Path, subcommand: str, args, files: list[str]) -> None:
    manifest = {
        "tool": "nlsdp",
        "version": __version__,
        "subcommand": subcommand,
        "arguments": {k: v for k, v in vars(args).items() if k not in ("func",)},
        "outputs": files,
    }
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def _param_header(params: ModelParams, omega: float | None = None, extra: str = "") -> str:
    head = f"# p={params.p:.15g}, lambda1={params.lambda1:.15g}, lambda2={params.lambda2:.15g}, Z={params.Z:.15g}"
    if omega is not None:
        head += f", omega={omega:.15g}"
    if extra:
        head += ", " + extra
    return head


def cmd_regime(args) -> int:
    params = _params(args)
    omega = args.omega if args.omega is not None else 0.0
    verdict = classify_regime(params, omega)
    print(verdict.tag.value)
    print(verdict.detail)
    return 0 if verdict.exists else 1


def cmd_profile(args) -> int:
    profile = _profile_for(args)
    grid = Grid.from_spacing(args.L, args.h)
    x = grid.nodes
    phi = profile.eval(x)
    dphi = profile.derivative(x)
    out = _out_dir(args)
    path = out / "profile.csv"
    with path.open("w") as fh:
        fh.write(_param_header(profile.params, profile.omega) + "\n")
        fh.write("# columns: x (length), phi (amplitude), dphi (slope; one-sided 0+ at x=0)\n")
        fh.write("x,phi,dphi\n")
        for xi, pi, di in zip(x, phi, dphi):
            fh.write(f"{xi:.15g},{pi:.15g},{di:.15g}\n")
    _write_manifest(out, "profile", args, ["profile.csv"])
    print(f"wrote {path}")
    return 0


def cmd_verify(args) -> int:
    profile = _profile_for(args)
    report = interior_residual(profile, half_width=args.L, spacing=args.h)
    print(json.dumps(report.as_dict(), indent=2))
    return 0


def cmd_phaseplane(args) -> int:
    params = _params(args)
    omega = args.omega if args.omega is not None else 0.0
    portrait = standing_wave_phase_path(
        params, omega, h=args.step, tail_amplitude=args.tail_amplitude
    )
    out = _out_dir(args)
    path = out / "phaseplane.csv"
    with path.open("w") as fh:
        fh.write(_param_header(params, omega) + "\n")
        fh.write("# columns: phi (amplitude), dphi (slope), branch (unstable|jump|stable)\n")
        fh.write("phi,dphi,branch\n")
        for branch, pts in (
            ("unstable", portrait.unstable),
            ("jump", portrait.jump),
            ("stable", portrait.stable),
        ):
            stride = max(1, len(pts) // args.max_points)
            kept = pts[::stride]
            if kept[-1] is not pts[-1]:
                kept.append(pts[-1])
            for pt in kept:
                fh.write(f"{pt.phi:.15g},{pt.dphi:.15g},{branch}\n")
    _write_manifest(out, "phaseplane", args, ["phaseplane.csv"])
    print(f"wrote {path}")
    return 0


def cmd_evolve(args) -> int:
    profile = _profile_for(args)
    params = profile.params
    grid = Grid.from_spacing(args.L, args.h)
    config = EvolutionConfig(grid=grid, dt=args.dt, t_final=args.T, record_every=args.record_every)
    phi = sample(grid, profile.eval)
    if args.perturb:
        from .stability import perturbed_state

        kind, _, amp = args.perturb.partition(":")
        if kind not in PERTURBATION_KINDS or not amp:
            raise _UsageError(f"--perturb expects kind:amplitude with kind in {PERTURBATION_KINDS}")
        u0 = perturbed_state(phi, float(amp), kind, args.seed)
    else:
        u0 = phi
    snapshot_every = args.snapshot_every if args.snapshot_every > 0 else None
    traj = evolve(u0, config, params, reference=profile, snapshot_every=snapshot_every)
    out = _out_dir(args)
    files = ["diagnostics.csv"]
    dpath = out / "diagnostics.csv"
    with dpath.open("w") as fh:
        fh.write(_param_header(params, profile.omega, extra=f"L={grid.half_width:.15g}, h={grid.spacing:.15g}, dt={args.dt:.15g}") + "\n")
        fh.write("# columns: t (time), charge (L2 norm squared), energy, action, orbital_dist (H1)\n")
        fh.write("t,charge,energy,action,orbital_dist\n")
        for d in traj.diagnostics:
            fh.write(
                f"{d.t:.15g},{d.charge:.15g},{d.energy:.15g},{d.action:.15g},{d.orbital_dist:.15g}\n"
            )
    if snapshot_every is not None:
        spath = out / "snapshots.csv"
        files.append("snapshots.csv")
        with spath.open("w") as fh:
            fh.write(_param_header(params, profile.omega) + "\n")
            fh.write("# columns: t (time), x (length), re_u, im_u\n")
            fh.write("t,x,re_u,im_u\n")
            for t, fld in traj.snapshots:
                for xi, ui in zip(grid.nodes, fld.values):
                    fh.write(f"{t:.15g},{xi:.15g},{ui.real:.15g},{ui.imag:.15g}\n")
    _write_manifest(out, "evolve", args, files)
    print(f"wrote {', '.join(str(out / f) for f in files)}")
    return 0


def cmd_minimize(args) -> int:
    profile = _profile_for(args)
    params = profile.params
    grid = Grid.from_spacing(args.L, args.h)
    rng = np.random.default_rng(args.seed)
    if args.restarts > 1:
        best, results = estimate_m(
            params, profile.omega, restarts=args.restarts, grid=grid, seed=args.seed, tol=args.tol
        )
        result = min(results, key=lambda r: r.value)
    else:
        phi = sample(grid, profile.eval)
        bump = random_bump(grid, rng)
        v0 = ComplexField(grid, phi.values + 0.1 * bump.values)
        result = gradient_flow(v0, params, profile.omega, tol=args.tol)
        best = result.value
    out = _out_dir(args)
    from .minimize import discrete_action

    reference = discrete_action(sample(grid, profile.eval), params, profile.omega)
    summary = {
        "best_value": best,
        "reference_action_of_profile": reference,
        "iterations": result.iterations,
        "final_gradient_norm": result.final_gradient_norm,
        "converged": result.converged,
        "seed": args.seed,
    }
    (out / "flow_result.json").write_text(json.dumps(summary, indent=2) + "\n")
    with (out / "descent_curve.csv").open("w") as fh:
        fh.write(_param_header(params, profile.omega) + "\n")
        fh.write("# columns: iter, value (discrete action), grad_norm (L2)\n")
        fh.write("iter,value,grad_norm\n")
        for it, value, gnorm in result.history:
            fh.write(f"{it},{value:.15g},{gnorm:.15g}\n")
    _write_manifest(out, "minimize", args, ["flow_result.json", "descent_curve.csv"])
    print(json.dumps(summary, indent=2))
    return 0


def cmd_stability(args) -> int:
    profile = _profile_for(args)
    params = profile.params
    grid = Grid.from_spacing(args.L, args.h)
    config = EvolutionConfig(grid=grid, dt=args.dt, t_final=args.T, record_every=args.record_every)
    eps_list = [float(e) for e in args.eps.split(",") if e]
    kinds = [k for k in args.kinds.split(",") if k]
    for k in kinds:
        if k not in PERTURBATION_KINDS:
            raise _UsageError(f"unknown perturbation kind {k!r}")
    reports = stability_curve(params, profile, eps_list, kinds, config, seed=args.seed)
    out = _out_dir(args)
    path = out / "stability_curve.csv"
    with path.open("w") as fh:
        fh.write(_param_header(params, profile.omega, extra=f"T={args.T:.15g} (finite-horizon rendering of for-all-t)") + "\n")
        fh.write("# columns: eps, kind, max_orbital_dist (H1), T (horizon), seed\n")
        fh.write("eps,kind,max_orbital_dist,T,seed\n")
        for r in reports:
            fh.write(f"{r.eps:.15g},{r.perturbation_kind},{r.max_orbital_dist:.15g},{r.horizon:.15g},{r.seed}\n")
    _write_manifest(out, "stability", args, ["stability_curve.csv"])
    print(f"wrote {path}")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="nlsdp", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, with_grid=True):
        _add_model_args(p)
        p.add_argument("--out", type=str, default=None, help="output directory (default $NLSDP_OUT or .)")
        p.add_argument("--seed", type=int, default=0)
        if with_grid:
            p.add_argument("--L", type=float, default=40.0, help="domain half-width")
            p.add_argument("--h", type=float, default=0.01, help="grid spacing")

    p = sub.add_parser("regime", help="classify a parameter tuple")
    _add_model_args(p)
    p.set_defaults(func=cmd_regime)

    p = sub.add_parser("profile", help="emit the stationary profile as CSV")
    common(p)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("verify", help="print the stationarity residual report as JSON")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("phaseplane", help="emit the phase-plane path as CSV")
    common(p, with_grid=False)
    p.add_argument("--step", type=float, default=1e-3, help="integrator step")
    p.add_argument("--tail-amplitude", type=float, default=1e-4, help="relative amplitude at which the stable branch is truncated")
    p.add_argument("--max-points", type=int, default=2000, help="per-branch output cap")
    p.set_defaults(func=cmd_phaseplane)

    p = sub.add_parser("evolve", help="evolve the PDE and emit diagnostics CSV")
    common(p)
    p.add_argument("--dt", type=float, default=1e-3)
    p.add_argument("--T", type=float, default=10.0)
    p.add_argument("--record-every", type=int, default=100)
    p.add_argument("--snapshot-every", type=int, default=0, help="snapshot stride in steps (0 disables snapshots.csv)")
    p.add_argument("--perturb", type=str, default=None, help="kind:amplitude, kind in bump|phase-ramp|noise")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("minimize", help="gradient-flow descent of the action")
    common(p)
    p.add_argument("--restarts", type=int, default=1)
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("stability", help="perturbation sweep; emits stability_curve.csv")
    common(p)
    p.add_argument("--dt", type=float, default=1e-3)
    p.add_argument("--T", type=float, default=20.0)
    p.add_argument("--record-every", type=int, default=100)
    p.add_argument("--eps", type=str, default="0.001,0.01,0.1", help="comma-separated amplitudes")
    p.add_argument("--kinds", type=str, default="bump", help="comma-separated kinds")
    p.set_defaults(func=cmd_stability)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 64
    try:
        return args.func(args)
    except _UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 64
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (RuntimeError, FloatingPointError) as err:
        print(f"numerical failure: {err}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
