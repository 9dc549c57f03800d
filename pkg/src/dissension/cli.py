"""Command-line surface: compute or minimize single measures, sweep (t, a)
grids to CSV, emit a summary report, and validate state files.

Exit codes: 0 success, 2 usage error, 3 invalid state, 4 I/O error.

State files are JSON objects {"n": <qubit count>, "matrix": [[[re, im], ...], ...]}.
Sweep output is CSV with header ``t,a,value`` (the ``a`` column is empty for
pure-state sweeps), 12 significant digits, LF line endings.
"""

from __future__ import annotations

import argparse
import json
import math
import multiprocessing
import sys
from typing import Sequence

import numpy as np

from .errors import DissensionError
from .measures import (
    DEFAULT_GRID_POINTS,
    DEFAULT_REFINE_TOL,
    MeasureValue,
    QubitLabeling,
    d1,
    d2,
    delta1,
    delta2,
    discord,
    i3,
    j3,
    k3,
    min_discord,
    mutual_information_2,
    negative_mi_demo,
)
from .states import (
    DEFAULT_BISEPARABLE_A,
    DensityMatrix,
    biseparable,
    ghz,
    mixed_ghz,
    mixed_w,
    partial_trace,
    state_diagnostics,
    w,
)
from .states import HERMITIAN_TOL, PSD_TOL, TRACE_TOL

EXIT_USAGE = 2
EXIT_INVALID_STATE = 3
EXIT_IO = 4

MEASURES = ("I2", "discord", "I3", "J3", "K3", "D1", "D2")
MINIMIZABLE = ("D1", "D2", "discord")
STATE_CHOICES = ("ghz", "w", "mixed-ghz", "mixed-w", "biseparable", "file")

REPORT_MIXED_WEIGHTS = (0.0, 0.25, 0.5, 0.75, 1.0)
REPORT_BISEPARABLE_WEIGHTS = (0.1, 0.25, 0.4)


class CliError(Exception):
    """Error carrying the process exit code."""

    def __init__(self, exit_code: int, message: str):
        super().__init__(message)
        self.exit_code = exit_code


def read_state_json(path: str) -> DensityMatrix:
    """Load a density matrix from the state JSON schema."""
    with open(path, encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CliError(EXIT_INVALID_STATE, f"malformed state JSON in {path}: {exc}")
    if not isinstance(payload, dict) or "n" not in payload or "matrix" not in payload:
        raise CliError(EXIT_INVALID_STATE, f'{path}: expected an object with "n" and "matrix"')
    try:
        dim = 2 ** int(payload["n"])
        m = np.array(
            [[complex(entry[0], entry[1]) for entry in row] for row in payload["matrix"]],
            dtype=complex,
        )
    except (TypeError, IndexError, ValueError) as exc:
        raise CliError(EXIT_INVALID_STATE, f"{path}: malformed state payload: {exc}")
    if m.shape != (dim, dim):
        raise CliError(
            EXIT_INVALID_STATE, f"{path}: matrix shape {m.shape} does not match n={payload['n']}"
        )
    return DensityMatrix(m)


def write_state_json(rho: DensityMatrix, path: str) -> None:
    """Write a density matrix using the state JSON schema."""
    payload = {
        "n": rho.num_qubits,
        "matrix": [[[v.real, v.imag] for v in row] for row in rho.matrix.tolist()],
    }
    with open(path, "w", encoding="utf-8", newline="") as fh:
        json.dump(payload, fh)
        fh.write("\n")


def _parse_labeling(text: str) -> QubitLabeling:
    try:
        parts = [int(p) for p in text.split(",")]
        return QubitLabeling(*parts)
    except (ValueError, TypeError, DissensionError) as exc:
        raise argparse.ArgumentTypeError(f"bad labeling {text!r}: {exc}")


def _state_from_args(args) -> tuple[DensityMatrix, str, dict]:
    """Build (state, descriptor, params) from the common state flags."""
    name = args.state
    if name is None:
        raise CliError(EXIT_USAGE, "--state is required")
    if name == "ghz":
        return ghz(), "ghz", {}
    if name == "w":
        return w(), "w", {}
    if name == "mixed-ghz":
        if args.a is None:
            raise CliError(EXIT_USAGE, "--a is required for --state mixed-ghz")
        return mixed_ghz(args.a), f"mixed-ghz(a={args.a:g})", {"a": args.a}
    if name == "mixed-w":
        if args.a is None:
            raise CliError(EXIT_USAGE, "--a is required for --state mixed-w")
        return mixed_w(args.a), f"mixed-w(a={args.a:g})", {"a": args.a}
    if name == "biseparable":
        a = DEFAULT_BISEPARABLE_A if args.a is None else args.a
        return biseparable(a), f"biseparable(a={a:g})", {"a": a, "b": 0.5 - a}
    if name == "file":
        if not args.file:
            raise CliError(EXIT_USAGE, "--file is required for --state file")
        return read_state_json(args.file), f"file:{args.file}", {}
    raise CliError(EXIT_USAGE, f"unknown state {name!r}")


def _evaluate_measure(rho: DensityMatrix, measure: str, t: float, lab: QubitLabeling) -> float:
    n = rho.num_qubits
    if measure == "I2":
        if n == 2:
            return mutual_information_2(rho, t)
        if n == 3:
            return mutual_information_2(partial_trace(rho, [lab.x, lab.y]), t)
        raise CliError(EXIT_USAGE, "I2 requires a two- or three-qubit state")
    if measure == "discord":
        if n == 2:
            return discord(rho, [0], [1], t)
        if n == 3:
            return discord(rho, [lab.x], [lab.y, lab.z], t)
        raise CliError(EXIT_USAGE, "discord requires a two- or three-qubit state")
    if n != 3:
        raise CliError(EXIT_USAGE, f"{measure} requires a three-qubit state")
    if measure == "I3":
        return i3(rho, lab, t)
    if measure == "J3":
        return j3(rho, lab)
    if measure == "K3":
        return k3(rho, lab, t)
    if measure == "D1":
        return d1(rho, lab, t)
    if measure == "D2":
        return d2(rho, lab, t)
    raise CliError(EXIT_USAGE, f"unknown measure {measure!r}")


def _fmt12(v: float) -> str:
    return f"{v + 0.0:.12g}"


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _cmd_compute(args) -> int:
    rho, descriptor, _ = _state_from_args(args)
    lab = args.labeling
    mv = MeasureValue(
        measure=args.measure,
        value=_evaluate_measure(rho, args.measure, args.t, lab),
        t=None if args.measure == "J3" else args.t,
        labeling=lab.as_tuple(),
        state_descriptor=descriptor,
    )
    if args.json:
        payload = {
            "measure": mv.measure,
            "value": mv.value,
            "t": mv.t,
            "labeling": list(mv.labeling),
            "state": mv.state_descriptor,
        }
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    else:
        _emit(f"{mv.value:.6f}\n", args.out)
    return 0


def _cmd_minimize(args) -> int:
    rho, descriptor, _ = _state_from_args(args)
    lab = args.labeling
    if args.measure == "D1":
        res = delta1(
            rho,
            lab,
            grid_points=args.grid,
            refine_tol=args.refine_tol,
            independent_angles=args.independent_angles,
        )
    elif args.measure == "D2":
        res = delta2(rho, lab, grid_points=args.grid, refine_tol=args.refine_tol)
    else:
        if args.independent_angles:
            raise CliError(EXIT_USAGE, "--independent-angles applies to D1 only")
        if rho.num_qubits == 2:
            res = min_discord(rho, [0], [1], grid_points=args.grid, refine_tol=args.refine_tol)
        elif rho.num_qubits == 3:
            res = min_discord(
                rho, [lab.x], [lab.y, lab.z], grid_points=args.grid, refine_tol=args.refine_tol
            )
        else:
            raise CliError(EXIT_USAGE, "discord requires a two- or three-qubit state")
    if args.json:
        payload = {
            "measure": args.measure,
            "value": res.value,
            "argmin_t": res.argmin_t,
            "grid_points": res.grid_points,
            "refine_tol": res.refine_tol,
            "evaluations": res.evaluations,
            "labeling": list(lab.as_tuple()),
            "state": descriptor,
        }
        if res.argmin_angles is not None:
            payload["argmin_angles"] = list(res.argmin_angles)
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    else:
        _emit(
            f"value={res.value:.6f} argmin_t={res.argmin_t:.6f} evaluations={res.evaluations}\n",
            args.out,
        )
    return 0


def _sweep_cell(task) -> float:
    matrix, measure, t, lab_tuple = task
    return _evaluate_measure(DensityMatrix(matrix), measure, t, QubitLabeling(*lab_tuple))


def _cmd_sweep(args) -> int:
    if args.t_steps < 2:
        raise CliError(EXIT_USAGE, "--t-steps must be at least 2")
    mixed = args.state in ("mixed-ghz", "mixed-w", "biseparable")
    if args.a_steps is not None:
        if not mixed:
            raise CliError(EXIT_USAGE, f"--a-steps does not apply to --state {args.state}")
        if args.a_steps < 2:
            raise CliError(EXIT_USAGE, "--a-steps must be at least 2")
        a_axis = list(np.linspace(args.a_min, args.a_max, args.a_steps))
    elif mixed:
        a = args.a
        if a is None:
            if args.state != "biseparable":
                raise CliError(EXIT_USAGE, f"--state {args.state} needs --a or --a-steps")
            a = DEFAULT_BISEPARABLE_A
        a_axis = [a]
    else:
        a_axis = None

    t_axis = list(np.linspace(args.t_min, args.t_max, args.t_steps))
    lab = args.labeling
    tasks = []
    a_column = []
    for a in a_axis if a_axis is not None else [None]:
        if a is None:
            rho, _, _ = _state_from_args(args)
        else:
            ns = argparse.Namespace(state=args.state, a=a, file=args.file)
            rho, _, _ = _state_from_args(ns)
        for t in t_axis:
            tasks.append((rho.matrix, args.measure, t, lab.as_tuple()))
            a_column.append(a)

    if args.workers > 1:
        chunk = max(1, len(tasks) // (args.workers * 4))
        with multiprocessing.Pool(args.workers) as pool:
            values = pool.map(_sweep_cell, tasks, chunksize=chunk)
    else:
        values = [_sweep_cell(task) for task in tasks]

    lines = ["t,a,value"]
    for (matrix, measure, t, _), a, v in zip(tasks, a_column, values):
        a_str = "" if a is None else _fmt12(a)
        lines.append(f"{_fmt12(t)},{a_str},{_fmt12(v)}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _report_row(rho, descriptor, params, lab, grid, tol) -> dict:
    res1 = delta1(rho, lab, grid_points=grid, refine_tol=tol)
    res2 = delta2(rho, lab, grid_points=grid, refine_tol=tol)
    return {
        "state": descriptor,
        "params": params,
        "labeling": list(lab.as_tuple()),
        "delta1": res1.value,
        "argmin_t1": res1.argmin_t,
        "delta2": res2.value,
        "argmin_t2": res2.argmin_t,
    }


def _cmd_report(args) -> int:
    lab = args.labeling
    grid, tol = args.grid, args.refine_tol
    rows = []
    rows.append(_report_row(ghz(), "ghz", {}, lab, grid, tol))
    rows.append(_report_row(w(), "w", {}, lab, grid, tol))
    for a in REPORT_MIXED_WEIGHTS:
        rows.append(_report_row(mixed_ghz(a), "mixed-ghz", {"a": a}, lab, grid, tol))
    for a in REPORT_MIXED_WEIGHTS:
        rows.append(_report_row(mixed_w(a), "mixed-w", {"a": a}, lab, grid, tol))
    # The pair-measured dissension depends on which qubit keeps the X role,
    # so biseparable rows carry it for all three measured-pair choices.
    for a in REPORT_BISEPARABLE_WEIGHTS:
        rho = biseparable(a)
        row = _report_row(rho, "biseparable", {"a": a, "b": 0.5 - a}, lab, grid, tol)
        by_pair = {}
        for key, pair_lab in (
            ("q1q2", QubitLabeling(0, 1, 2)),
            ("q0q2", QubitLabeling(1, 0, 2)),
            ("q0q1", QubitLabeling(2, 0, 1)),
        ):
            by_pair[key] = delta2(rho, pair_lab, grid_points=grid, refine_tol=tol).value
        row["delta2_by_measured_pair"] = by_pair
        rows.append(row)
    demo_t = math.pi / 4
    i2_val, cond_mi, i3_val = negative_mi_demo(t=demo_t)
    report = {
        "labeling": list(lab.as_tuple()),
        "grid_points": grid,
        "refine_tol": tol,
        "seed": args.seed,
        "rows": rows,
        "negative_mi_demo": {"t": demo_t, "i2": i2_val, "cond_mi": cond_mi, "i3": i3_val},
    }
    _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
    return 0


def _cmd_validate(args) -> int:
    path = args.path or args.file
    if not path:
        raise CliError(EXIT_USAGE, "validate needs a state file path")
    with open(path, encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CliError(EXIT_INVALID_STATE, f"malformed state JSON: {exc}")
    if not isinstance(payload, dict) or "n" not in payload or "matrix" not in payload:
        raise CliError(EXIT_INVALID_STATE, 'expected an object with "n" and "matrix"')
    try:
        m = np.array(
            [[complex(e[0], e[1]) for e in row] for row in payload["matrix"]], dtype=complex
        )
    except (TypeError, IndexError, ValueError) as exc:
        raise CliError(EXIT_INVALID_STATE, f"malformed matrix entries: {exc}")
    dim = 2 ** int(payload["n"])
    if m.shape != (dim, dim):
        raise CliError(EXIT_INVALID_STATE, f"matrix shape {m.shape} does not match n={payload['n']}")
    diag = state_diagnostics(m)
    print(f"hermiticity deviation: {diag['hermiticity_deviation']:.6g}")
    print(f"trace deviation: {diag['trace_deviation']:.6g}")
    print(f"min eigenvalue: {diag['min_eigenvalue']:.6g}")
    if diag["hermiticity_deviation"] > HERMITIAN_TOL:
        raise CliError(
            EXIT_INVALID_STATE, f"hermiticity deviation {diag['hermiticity_deviation']:.6g}"
        )
    if diag["trace_deviation"] > TRACE_TOL:
        raise CliError(EXIT_INVALID_STATE, f"trace deviation {diag['trace_deviation']:.6g}")
    if diag["min_eigenvalue"] < -PSD_TOL:
        raise CliError(EXIT_INVALID_STATE, f"min eigenvalue {diag['min_eigenvalue']:.6g}")
    print("valid")
    return 0


def _cmd_demo(args) -> int:
    i2_val, cond_mi, i3_val = negative_mi_demo(t=args.t, labeling=args.labeling)
    if args.json:
        payload = {"t": args.t, "i2": i2_val, "cond_mi": cond_mi, "i3": i3_val}
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    else:
        _emit(f"i2={i2_val:.6f} cond_mi={cond_mi:.6f} i3={i3_val:.6f}\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--labeling", type=_parse_labeling, default=QubitLabeling(0, 1, 2),
                        metavar="i,j,k", help="physical qubits playing roles X,Y,Z (default 0,1,2)")
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--out", default=None, help="write output to this path instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="seed recorded in outputs")
    common.add_argument("--workers", type=int, default=1, help="parallel workers for sweeps")

    state = argparse.ArgumentParser(add_help=False)
    state.add_argument("--state", choices=STATE_CHOICES, help="state family")
    state.add_argument("--a", type=float, default=None, help="mixing weight for mixed families")
    state.add_argument("--file", default=None, help="state JSON path for --state file")

    minimizer = argparse.ArgumentParser(add_help=False)
    minimizer.add_argument("--grid", type=int, default=DEFAULT_GRID_POINTS,
                           help="coarse scan points over [0, 2pi)")
    minimizer.add_argument("--refine-tol", type=float, default=DEFAULT_REFINE_TOL,
                           help="golden-section interval tolerance")

    parser = argparse.ArgumentParser(
        prog="dissension",
        description="Entropic quantum-correlation measures for up to three qubits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[state, common], help="one measure at a fixed angle")
    p.add_argument("--measure", choices=MEASURES, required=True)
    p.add_argument("--t", type=float, default=0.0, help="measurement angle in radians")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("minimize", parents=[state, common, minimizer],
                       help="minimize a measure over the angle")
    p.add_argument("--measure", choices=MINIMIZABLE, required=True)
    p.add_argument("--independent-angles", action="store_true",
                   help="minimize D1 over per-role angles instead of one shared angle")
    p.set_defaults(func=_cmd_minimize)

    p = sub.add_parser("sweep", parents=[state, common], help="write a CSV grid of measure values")
    p.add_argument("--measure", choices=MEASURES, required=True)
    p.add_argument("--t-min", type=float, default=0.0)
    p.add_argument("--t-max", type=float, default=2 * math.pi)
    p.add_argument("--t-steps", type=int, required=True)
    p.add_argument("--a-min", type=float, default=0.0)
    p.add_argument("--a-max", type=float, default=1.0)
    p.add_argument("--a-steps", type=int, default=None)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("report", parents=[common, minimizer],
                       help="dissension pairs for the named families, as JSON")
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("validate", parents=[state, common], help="check a state JSON file")
    p.add_argument("path", nargs="?", default=None, help="state JSON path")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("demo", help="worked demonstrations")
    demo_sub = p.add_subparsers(dest="demo_name", required=True)
    d = demo_sub.add_parser("negative-mi", parents=[common],
                            help="negative three-variable mutual information on GHZ")
    d.add_argument("--t", type=float, default=math.pi / 4)
    d.set_defaults(func=_cmd_demo)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except DissensionError as exc:
        print(f"error: invalid state: {exc}", file=sys.stderr)
        return EXIT_INVALID_STATE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
