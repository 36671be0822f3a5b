"""Command-line front end.

Two subcommands:

``entfid sweep``
    Run the control-qubit scenario over a lambda_t grid and emit CSV
    (columns ``lambda_t,concurrence,ef,ef_direct,mef_numeric,
    mef_analytic``) to stdout or ``--out``.  A summary line with the max
    numeric-vs-analytic residual per column goes to stderr; residuals
    above 1e-5 exit with status 3 as a regression guard.

``entfid metrics``
    Evaluate EF/MEF (and concurrence, when the input is a Bell state)
    for a channel read from a file.

Exit codes: 0 success, 2 unwritable output (argparse also uses 2 for
usage errors), 3 residual regression, 4 parse failure, 5 completeness
violation.
"""

from __future__ import annotations

import argparse
import math
import sys

from .channel_io import ChannelFormatError, read_channel_file, read_density_file
from .channels import CompletenessError, apply_local_channel
from .metrics import OptimizerConfig, concurrence, entanglement_fidelity_intrinsic, mef
from .scenario import (SweepConfig, SweepError, analytic_concurrence, analytic_ef,
                       sweep)
from .states import bell_state, maximally_mixed, reduced_state

CSV_HEADER = "lambda_t,concurrence,ef,ef_direct,mef_numeric,mef_analytic"
RESIDUAL_LIMIT = 1e-5


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def render_csv(rows) -> str:
    out = [CSV_HEADER]
    for r in rows:
        out.append(",".join(_fmt(v) for v in (
            r.lambda_t, r.concurrence, r.ef, r.ef_direct,
            r.mef_numeric, r.mef_analytic)))
    return "\n".join(out) + "\n"


def run_sweep(cfg: SweepConfig) -> int:
    try:
        rows = sweep(cfg)
    except SweepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    text = render_csv(rows)
    if cfg.output_path in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            with open(cfg.output_path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {cfg.output_path}: {exc}", file=sys.stderr)
            return 2

    res_c = max(abs(r.concurrence - analytic_concurrence(r.lambda_t)) for r in rows)
    res_ef = max(abs(r.ef - analytic_ef(r.lambda_t)) for r in rows)
    res_efd = max(abs(r.ef_direct - analytic_ef(r.lambda_t)) for r in rows)
    res_mef = max(abs(r.mef_numeric - r.mef_analytic) for r in rows)
    print(f"max residuals: concurrence={res_c:.3e} ef={res_ef:.3e} "
          f"ef_direct={res_efd:.3e} mef={res_mef:.3e}", file=sys.stderr)
    if max(res_c, res_ef, res_efd, res_mef) > RESIDUAL_LIMIT:
        print(f"error: residual exceeds {RESIDUAL_LIMIT:g}", file=sys.stderr)
        return 3
    return 0


def run_metrics(channel_path, state_spec: str,
                optimizer: OptimizerConfig | None = None) -> int:
    try:
        ch = read_channel_file(channel_path)
    except ChannelFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except CompletenessError as exc:
        print(f"error: {channel_path}: {exc}", file=sys.stderr)
        return 5
    except OSError as exc:
        print(f"error: cannot read {channel_path}: {exc}", file=sys.stderr)
        return 4

    try:
        conc = None
        if state_spec in ("bell+", "bell-"):
            joint = bell_state(state_spec[-1])
            rho_q = reduced_state(joint, 0)
            conc = concurrence(apply_local_channel(ch, joint, 0))
        elif state_spec == "mixed":
            rho_q = maximally_mixed(ch.dim)
        else:  # anything else is a density-matrix file path
            rho_q = read_density_file(state_spec)

        print(f"ef={_fmt(entanglement_fidelity_intrinsic(rho_q, ch))}")
        if ch.dim == 2:
            print(f"mef={_fmt(mef(rho_q, ch, optimizer).value)}")
        else:
            print("note: mef skipped (defined for qubit channels only)",
                  file=sys.stderr)
        if conc is not None:
            print(f"concurrence={_fmt(conc)}")
    except ChannelFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"error: cannot read {state_spec}: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entfid",
        description="Entanglement fidelity, modified entanglement fidelity "
                    "and concurrence for Kraus channels.")
    sub = parser.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("sweep", help="run the control-qubit scenario sweep")
    ps.add_argument("--min", type=float, default=0.0,
                    help="smallest lambda_t (default 0)")
    ps.add_argument("--max", type=float, default=2.0 * math.pi,
                    help="largest lambda_t (default 2*pi)")
    ps.add_argument("--steps", type=int, default=201,
                    help="number of grid points (default 201)")
    ps.add_argument("--sign", choices=("+", "-"), default="+",
                    help="Bell-state sign (default +)")
    ps.add_argument("--grid-points", type=int, default=24,
                    help="MEF grid points per angle (default 24)")
    ps.add_argument("--tol", type=float, default=1e-10,
                    help="MEF refinement tolerance (default 1e-10)")
    ps.add_argument("--out", default="-",
                    help="output CSV path, '-' for stdout (default)")

    pm = sub.add_parser("metrics", help="evaluate metrics for a channel file")
    pm.add_argument("--channel", required=True, help="channel file path")
    pm.add_argument("--state", default="bell+",
                    help="input state: bell+, bell-, mixed, or a "
                         "density-matrix file path (default bell+)")
    pm.add_argument("--grid-points", type=int, default=24,
                    help="MEF grid points per angle (default 24)")
    pm.add_argument("--tol", type=float, default=1e-10,
                    help="MEF refinement tolerance (default 1e-10)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        optimizer = OptimizerConfig(grid_points_per_angle=args.grid_points,
                                    refine_tolerance=args.tol)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.command == "sweep":
        try:
            cfg = SweepConfig(
                lambda_t_min=args.min, lambda_t_max=args.max, steps=args.steps,
                sign=args.sign, optimizer=optimizer,
                output_path=None if args.out == "-" else args.out)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        return run_sweep(cfg)
    return run_metrics(args.channel, args.state, optimizer)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
