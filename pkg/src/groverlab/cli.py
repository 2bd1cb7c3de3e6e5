"""Command-line front end.

Subcommands:
  figure             bundled CSV datasets 1-5 (probability curves/surfaces)
  sweep              explicit (lambda, phase) probability sweep to CSV
  check-equivalence  global-phase equivalence of the variants at one (phi, lambda)
  crosscheck         randomized subspace vs statevector engine comparison

Exit codes: 0 success, 1 usage or I/O error, 2 verification failure.
CSV output is UTF-8 with a header row, 12 significant digits, and LF line
endings; identical invocations produce byte-identical files.
"""
from __future__ import annotations

import argparse
import sys
from typing import Iterable, Sequence

import numpy as np

from .analysis import SweepGrid, closed_form_probability, optimal_iterations, sweep
from .equivalence import verify_phase_equivalence
from .model import (
    AlgorithmKind,
    LiCMParams,
    LiDFParams,
    LiPCParams,
    LongParams,
    OriginalParams,
    geometry_from_lambda,
    geometry_of,
    make_search_space,
)
from .operators import iteration_matrix
from .statevector import project_to_subspace, run_full, target_probability
from .subspace import run, success_probability

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2

_FIGURE_KINDS = {
    2: AlgorithmKind.LONG,
    3: AlgorithmKind.LI_DF,
    4: AlgorithmKind.LI_CM,
    5: AlgorithmKind.LI_PC,
}

_KIND_NAMES = {kind.value: kind for kind in AlgorithmKind}


class _Parser(argparse.ArgumentParser):
    # Usage errors exit 1; the default argparse status of 2 is reserved
    # for verification failures.
    def error(self, message: str) -> None:
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(value: float) -> str:
    return format(value, ".12g")


def _axis(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected min:max:steps, got {text!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="groverlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    fig = sub.add_parser("figure", help="write one of the bundled CSV datasets")
    fig.add_argument("index", type=int, choices=range(1, 6), help="dataset 1-5")
    fig.add_argument("--out", required=True, help="output CSV path")
    fig.set_defaults(func=cmd_figure)

    sw = sub.add_parser("sweep", help="explicit probability sweep to CSV")
    sw.add_argument("--kind", required=True, choices=sorted(_KIND_NAMES))
    sw.add_argument("--k", required=True, type=int, help="iterations per cell")
    sw.add_argument("--lambda", dest="lam", required=True, type=_axis,
                    metavar="MIN:MAX:STEPS", help="target proportion axis")
    sw.add_argument("--phase", required=True, type=_axis,
                    metavar="MIN:MAX:STEPS", help="phase axis, radians")
    sw.add_argument("--matched", action="store_true",
                    help="read the phase axis as the long oracle phase and map "
                         "it to --kind through the transform condition")
    sw.add_argument("--out", required=True, help="output CSV path")
    sw.set_defaults(func=cmd_sweep)

    chk = sub.add_parser("check-equivalence",
                         help="verify the variants coincide up to a global phase")
    chk.add_argument("--phi", required=True, type=float, help="long oracle phase, radians")
    chk.add_argument("--lambda", dest="lam", required=True, type=float,
                     help="target proportion in (0, 1]")
    chk.add_argument("--k", required=True, type=int,
                     help="iterations for the probability comparison")
    chk.add_argument("--tol", type=float, default=1e-10)
    chk.add_argument("--perturb", type=float, default=0.0,
                     help="offset each mapped variant's phase off the condition")
    chk.set_defaults(func=cmd_check_equivalence)

    cc = sub.add_parser("crosscheck",
                        help="randomized comparison of the two engines")
    cc.add_argument("--n", required=True, type=int, help="qubit count, 1-20")
    cc.add_argument("--seed", required=True, type=int)
    cc.add_argument("--samples", required=True, type=int)
    cc.add_argument("--tol", type=float, default=1e-10)
    cc.set_defaults(func=cmd_crosscheck)

    return parser


def _write_csv(path: str, header: Sequence[str], rows: Iterable[Sequence[str]]) -> int:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(",".join(header) + "\n")
            for row in rows:
                fh.write(",".join(row) + "\n")
    except OSError as exc:
        print(f"groverlab: error: cannot write {path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_figure(args: argparse.Namespace) -> int:
    if args.index == 1:
        # 200 uniform proportions j/200 ending at 1; the grid contains the
        # reference points 0.25, 0.5, and 1 exactly.
        rows = []
        for j in range(1, 201):
            lam = j / 200.0
            k = optimal_iterations(lam)
            rows.append((_fmt(lam), str(k), _fmt(closed_form_probability(lam, k))))
        return _write_csv(args.out, ("lambda", "k", "probability"), rows)
    kind = _FIGURE_KINDS[args.index]
    result = sweep(SweepGrid(kind=kind, k=5), matched_from_long=True)
    rows = [(_fmt(lam), _fmt(phase), str(k), _fmt(p)) for lam, phase, k, p in result.rows]
    return _write_csv(args.out, ("lambda", "phi", "k", "probability"), rows)


def cmd_sweep(args: argparse.Namespace) -> int:
    lam_min, lam_max, lam_steps = args.lam
    phase_min, phase_max, phase_steps = args.phase
    try:
        grid = SweepGrid(
            kind=_KIND_NAMES[args.kind],
            k=args.k,
            lambda_min=lam_min,
            lambda_max=lam_max,
            lambda_steps=lam_steps,
            phase_min=phase_min,
            phase_max=phase_max,
            phase_steps=phase_steps,
        )
    except ValueError as exc:
        print(f"groverlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    result = sweep(grid, matched_from_long=args.matched)
    rows = [(_fmt(lam), _fmt(phase), str(k), _fmt(p)) for lam, phase, k, p in result.rows]
    return _write_csv(args.out, ("lambda", "phase", "k", "probability"), rows)


def cmd_check_equivalence(args: argparse.Namespace) -> int:
    if not 0.0 < args.lam <= 1.0:
        print(f"groverlab: error: --lambda must lie in (0, 1], got {args.lam}",
              file=sys.stderr)
        return EXIT_USAGE
    if args.tol <= 0 or args.k < 0:
        print("groverlab: error: --tol must be positive and --k >= 0", file=sys.stderr)
        return EXIT_USAGE
    g = geometry_from_lambda(args.lam)
    params_long = LongParams(args.phi)
    reports = verify_phase_equivalence(params_long, g, tol=args.tol, perturb=args.perturb)
    p_long = success_probability(run(iteration_matrix(AlgorithmKind.LONG, params_long, g), args.k))
    all_hold = True
    for rep in reports:
        p_other = success_probability(
            run(iteration_matrix(rep.target_kind, rep.target_params, g), args.k)
        )
        prob_dev = abs(p_other - p_long)
        ok = rep.holds and prob_dev <= args.tol
        all_hold = all_hold and ok
        measured = "none" if rep.measured_phase is None else _fmt(rep.measured_phase)
        print(
            f"long->{rep.target_kind.value}: predicted_phase={_fmt(rep.predicted_phase)} "
            f"measured_phase={measured} max_entry_deviation={rep.max_entry_deviation:.3e} "
            f"prob_deviation_k{args.k}={prob_dev:.3e} {'HOLD' if ok else 'FAIL'}"
        )
    return EXIT_OK if all_hold else EXIT_VERIFICATION


def _random_case(rng: np.random.Generator, n: int):
    size = 2 ** n
    num_targets = int(rng.integers(1, size + 1))
    targets = rng.choice(size, size=num_targets, replace=False)
    kind = list(AlgorithmKind)[int(rng.integers(0, len(AlgorithmKind)))]
    angles = rng.uniform(-2.0 * np.pi, 2.0 * np.pi, size=4)
    if kind is AlgorithmKind.ORIGINAL:
        params = OriginalParams()
    elif kind is AlgorithmKind.LONG:
        params = LongParams(angles[0], angles[1])
    elif kind is AlgorithmKind.LI_DF:
        params = LiDFParams(angles[0])
    elif kind is AlgorithmKind.LI_CM:
        params = LiCMParams(*angles)
    else:
        params = LiPCParams(angles[0])
    k = int(rng.integers(0, 26))
    return make_search_space(n, targets), kind, params, k


def cmd_crosscheck(args: argparse.Namespace) -> int:
    if not 1 <= args.n <= 20:
        print(f"groverlab: error: --n must lie in [1, 20], got {args.n}", file=sys.stderr)
        return EXIT_USAGE
    if args.samples < 0 or args.tol <= 0:
        print("groverlab: error: --samples must be >= 0 and --tol positive",
              file=sys.stderr)
        return EXIT_USAGE
    rng = np.random.default_rng(args.seed)
    print(f"rng={type(rng.bit_generator).__name__} seed={args.seed} "
          f"n={args.n} samples={args.samples}")
    if args.samples == 0:
        print("0 cases checked; nothing to compare")
        return EXIT_OK
    max_prob_dev = 0.0
    max_residual = 0.0
    for _ in range(args.samples):
        space, kind, params, k = _random_case(rng, args.n)
        full = run_full(space, kind, params, k)
        sub = run(iteration_matrix(kind, params, geometry_of(space)), k)
        max_prob_dev = max(
            max_prob_dev, abs(target_probability(full) - success_probability(sub))
        )
        max_residual = max(max_residual, project_to_subspace(full)[1])
    print(f"max probability deviation: {max_prob_dev:.3e}")
    print(f"max subspace residual: {max_residual:.3e}")
    return EXIT_OK if max_prob_dev < args.tol else EXIT_VERIFICATION


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"groverlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
