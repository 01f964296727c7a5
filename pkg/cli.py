"""
frft-lab command line.

    python cli.py frft --alpha 1.5707963 --grid -8:0.015625:1025 --in gaussian.csv
    python cli.py recover --alpha 0.785 --in transform.csv --mean abel --eps 1 0.1 0.01
    python cli.py check --suite group-law
    python cli.py demo chirp

Every failure prints one `error: ...` line on stderr and exits with the code
carried by the error (2 usage, 3 numeric precondition, 4 I/O). `check` with a
failing suite and `demo` with non-decreasing errors exit 1.
"""

import argparse
import os
import sys
import warnings
from typing import List, Optional

from pydantic import ValidationError

import config
from acceptance import SUITES, check_table, condition_reports, run_suites
from convolve_means import convolution_kernel_grid, frac_convolve, sampled_kernel
from corpus import generate_corpus
from errors import FrftLabError, InvalidParameterError
from experiment_runner import ExperimentRunner
from frft_engine import frft, inverse_frft
from models import Command, EpsilonSchedule, FrftMethod, MeanKind, MeanSpec, RunConfig, Signal, UniformGrid
from multiplier_lab import (
    condition_table,
    frac_hilbert_mult,
    frac_hilbert_pv,
    lp_square_function,
    partial_sum_mult,
)
from reference_signals import ASSETS, build_asset
from signal_core import default_output_grid
from utils.csv_io import read_signal_csv, write_json, write_signal_csv, write_table

ASSET_GRID = "-8:0.015625:1025"
VALUE_OPTIONS = ("--grid", "--input-grid", "--band", "--jrange")


class UsageError(InvalidParameterError):
    """Command line could not be parsed"""


class LabArgumentParser(argparse.ArgumentParser):
    """Raises instead of printing usage and exiting"""

    def error(self, message):
        raise UsageError(message)


def parse_grid(spec: str) -> UniformGrid:
    """start:step:count"""
    parts = spec.split(":")
    if len(parts) != 3:
        raise UsageError(f"grid must be start:step:count, got {spec!r}")
    try:
        start, step, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise UsageError(f"grid must be start:step:count, got {spec!r}")
    return UniformGrid(start=start, step=step, count=count)


def parse_pair(spec: str, kind=float):
    parts = spec.split(":")
    if len(parts) != 2:
        raise UsageError(f"expected low:high, got {spec!r}")
    try:
        return kind(parts[0]), kind(parts[1])
    except ValueError:
        raise UsageError(f"expected low:high, got {spec!r}")


def _attach_values(argv: List[str]) -> List[str]:
    """`--grid -8:...` -> `--grid=-8:...` so negative starts are not read as flags"""
    out, i = [], 0
    while i < len(argv):
        if argv[i] in VALUE_OPTIONS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def build_parser() -> LabArgumentParser:
    common = LabArgumentParser(add_help=False)
    common.add_argument("--alpha", type=float, default=0.0, help="transform order in radians")
    common.add_argument("--grid", help="output grid start:step:count")
    common.add_argument("--in", dest="inputs", action="append", default=[], help="input CSV (t,re,im); repeatable")
    common.add_argument("--asset", choices=sorted(ASSETS) + ["corpus"], help="generate the input instead of reading it")
    common.add_argument("--input-grid", help="grid for --asset (default %s)" % ASSET_GRID)
    common.add_argument("--method", choices=[m.value for m in FrftMethod], default=FrftMethod.FAST.value)
    common.add_argument("--mean", choices=[MeanKind.ABEL.value, MeanKind.GAUSS.value], default=MeanKind.ABEL.value)
    common.add_argument("--eps", type=float, nargs="+", default=list(config.DEFAULT_EPS_SCHEDULE))
    common.add_argument("--p", type=float, default=2.0, help="Lebesgue exponent")
    common.add_argument("--seed", type=int, default=config.RANDOM_SEED)
    common.add_argument("--out", help="output file, or directory for recover/check/demo")

    parser = LabArgumentParser(prog="frft-lab", description="Fractional Fourier transform laboratory")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=LabArgumentParser)
    sub.add_parser("frft", parents=[common], help="F_alpha of a signal")
    sub.add_parser("invert", parents=[common], help="F_-alpha of sampled transform values")
    sub.add_parser("recover", parents=[common], help="Abel/Gauss damped inversion along --eps")
    sub.add_parser("convolve", parents=[common], help="fractional convolution with a second input or mean kernel")
    hilbert = sub.add_parser("hilbert", parents=[common], help="fractional Hilbert transform")
    hilbert.add_argument("--route", choices=["mult", "pv"], default="mult")
    partial = sub.add_parser("partialsum", parents=[common], help="partial sum over an F_alpha interval")
    partial.add_argument("--band", required=True, help="interval low:high in the F_alpha domain")
    lp = sub.add_parser("lpdecomp", parents=[common], help="Littlewood-Paley square function")
    lp.add_argument("--jrange", default="-3:3", help="binary block range jmin:jmax")
    check = sub.add_parser("check", parents=[common], help="run acceptance suites")
    check.add_argument("--suite", action="append", choices=sorted(SUITES), help="suite name; repeatable (default all)")
    demo = sub.add_parser("demo", parents=[common], help="reproduce a worked experiment")
    demo.add_argument("target", choices=["chirp"])
    return parser


def resolve_config(args) -> RunConfig:
    return RunConfig(
        command=args.command,
        alpha=args.alpha,
        grid=parse_grid(args.grid) if args.grid else None,
        inputs=args.inputs,
        asset=args.asset,
        output=args.out,
        method=args.method,
        mean=args.mean,
        eps=tuple(args.eps),
        p=args.p,
        seed=args.seed,
    )


# ============================================================================
# COMMANDS
# ============================================================================

def _load_input(cfg: RunConfig, args, index: int = 0) -> Signal:
    if len(cfg.inputs) > index:
        return read_signal_csv(cfg.inputs[index])
    if index == 0 and cfg.asset:
        grid = parse_grid(args.input_grid or ASSET_GRID)
        if cfg.asset == "corpus":
            return generate_corpus(size=1, grid=grid, seed=cfg.seed)[0]
        return build_asset(cfg.asset, grid, cfg.alpha)
    raise UsageError(f"{cfg.command.value} needs --in FILE or --asset NAME")


def _output_file(cfg: RunConfig) -> str:
    return cfg.output or os.path.join(config.OUTPUT_DIR, f"{cfg.command.value}.csv")


def _finish(cfg: RunConfig, result: Signal, extra: Optional[dict] = None) -> int:
    path = write_signal_csv(result, _output_file(cfg))
    summary = {"config": cfg.model_dump(mode="json"), "files": [os.path.basename(path)]}
    summary.update(extra or {})
    write_json(summary, os.path.join(os.path.dirname(os.path.abspath(path)), config.RUN_SUMMARY_FILE))
    print(f"✓ {cfg.command.value}: {result.grid.count} samples written to {path}")
    return config.EXIT_OK


def cmd_frft(cfg: RunConfig, args) -> int:
    f = _load_input(cfg, args)
    out = cfg.grid or default_output_grid(f)
    return _finish(cfg, frft(f, cfg.alpha, out, cfg.method))


def cmd_invert(cfg: RunConfig, args) -> int:
    transformed = _load_input(cfg, args)
    out = cfg.grid or default_output_grid(transformed)
    return _finish(cfg, inverse_frft(transformed, cfg.alpha, out, cfg.method))


def cmd_recover(cfg: RunConfig, args) -> int:
    transformed = _load_input(cfg, args)
    reference = read_signal_csv(cfg.inputs[1]) if len(cfg.inputs) > 1 else None
    out = cfg.grid or default_output_grid(transformed)
    runner = ExperimentRunner(cfg.output or config.OUTPUT_DIR, cfg.model_dump(mode="json"))
    runner.run_recovery(transformed, cfg.alpha, cfg.mean, EpsilonSchedule(values=cfg.eps), out, reference)
    return config.EXIT_OK


def cmd_convolve(cfg: RunConfig, args) -> int:
    f = _load_input(cfg, args)
    if len(cfg.inputs) > 1:
        g = read_signal_csv(cfg.inputs[1])
    else:
        g = sampled_kernel(MeanSpec(kind=cfg.mean, epsilon=cfg.eps[-1]), convolution_kernel_grid(f))
    return _finish(cfg, frac_convolve(f, g, cfg.alpha))


def cmd_hilbert(cfg: RunConfig, args) -> int:
    f = _load_input(cfg, args)
    route = frac_hilbert_pv if args.route == "pv" else frac_hilbert_mult
    return _finish(cfg, route(f, cfg.alpha), {"route": args.route})


def cmd_partialsum(cfg: RunConfig, args) -> int:
    f = _load_input(cfg, args)
    band = parse_pair(args.band)
    return _finish(cfg, partial_sum_mult(f, band, cfg.alpha), {"band": list(band)})


def cmd_lpdecomp(cfg: RunConfig, args) -> int:
    f = _load_input(cfg, args)
    j_min, j_max = parse_pair(args.jrange, int)
    result = lp_square_function(f, cfg.alpha, j_min, j_max, cfg.p)
    print(f"  blocks {result.blocks}, ||S f||_p = {result.norm:.6e}, ratio {result.ratio:.6f}")
    return _finish(cfg, result.square_fn, {"norm": result.norm, "ratio": result.ratio, "blocks": result.blocks})


def cmd_check(cfg: RunConfig, args) -> int:
    print("=" * 60)
    print("FRFT-LAB ACCEPTANCE SUITES")
    print("=" * 60)
    results = run_suites(args.suite)
    table = check_table(results)
    for r in results:
        mark = "✓" if r.passed else "✗"
        print(f"   {mark} {r.name:20s} {r.detail}")
    output_dir = cfg.output or config.OUTPUT_DIR
    path = write_table(table, os.path.join(output_dir, config.CHECK_TABLE_FILE))
    conditions = condition_table(condition_reports())
    write_table(conditions, os.path.join(output_dir, config.CONDITION_TABLE_FILE))
    print(f"   ✓ {int(conditions['pass'].sum())}/{len(conditions)} multiplier conditions hold")
    failed = [r.name for r in results if not r.passed]
    print(f"\n📊 {len(results) - len(failed)}/{len(results)} suites passed; table saved to {path}")
    if failed:
        print(f"error: suites failed: {', '.join(failed)}", file=sys.stderr)
        return config.EXIT_CHECK_FAILED
    return config.EXIT_OK


def cmd_demo(cfg: RunConfig, args) -> int:
    runner = ExperimentRunner(cfg.output or config.OUTPUT_DIR, cfg.model_dump(mode="json"))
    rows = runner.run_chirp_demo()
    errors = [r.l1_error for r in rows]
    if not all(b < a for a, b in zip(errors, errors[1:])):
        print("error: demo recovery errors are not decreasing along the schedule", file=sys.stderr)
        return config.EXIT_CHECK_FAILED
    return config.EXIT_OK


COMMANDS = {
    Command.FRFT: cmd_frft,
    Command.INVERT: cmd_invert,
    Command.RECOVER: cmd_recover,
    Command.CONVOLVE: cmd_convolve,
    Command.HILBERT: cmd_hilbert,
    Command.PARTIALSUM: cmd_partialsum,
    Command.LPDECOMP: cmd_lpdecomp,
    Command.CHECK: cmd_check,
    Command.DEMO: cmd_demo,
}


def _one_line(message) -> str:
    return " ".join(str(message).split())


def run(argv: Optional[List[str]] = None) -> int:
    """Parse, execute and map every failure to one `error:` line and its exit code"""
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_attach_values(argv))
        cfg = resolve_config(args)
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            return COMMANDS[cfg.command](cfg, args)
    except FrftLabError as e:
        print(f"error: {_one_line(e)}", file=sys.stderr)
        return e.exit_code
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first.get("loc", ())) or "input"
        print(f"error: invalid {where}: {_one_line(first['msg'])}", file=sys.stderr)
        return config.EXIT_USAGE
    except OSError as e:
        print(f"error: {_one_line(e)}", file=sys.stderr)
        return config.EXIT_IO


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
