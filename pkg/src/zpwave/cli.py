"""Command-line front end: ``zpwave {report,coeffs,group,spectrum,dual}``.

Exit status: 0 on success (for ``report``/``dual``: the system is a frame),
2 when the system is not a frame, 1 on input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import frames, oracle
from .io import SignalFormatError, read_signal
from .numtheory import prime_context, subgroup_of_order

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_FRAME = 2


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    p: int
    subgroup_order_M: int | None  # None means the full group
    window_path: str | None
    input_signal_path: str | None
    tolerance: float | None
    output_format: str
    verify: bool
    seed: int


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="prime modulus")
    which = common.add_mutually_exclusive_group()
    which.add_argument("--order-m", type=int, dest="order_m", help="subgroup order M (divides p-1)")
    which.add_argument("--full", action="store_true", help="use all of U_p (the default)")
    common.add_argument("--window", help="window signal file (JSON or CSV)")
    common.add_argument("--signal", help="input signal file (JSON or CSV)")
    common.add_argument("--tol", type=float, help="non-zero tolerance (default: scale-aware)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--verify", action="store_true", help="cross-check against brute-force oracles")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--out", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="zpwave", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("report", parents=[common], help="frame report for W(y, M x Z_p)")
    sub.add_parser("coeffs", parents=[common], help="wavelet coefficient grid")
    sub.add_parser("group", parents=[common], help="wavelet group and coset table")
    sub.add_parser("spectrum", parents=[common], help="frame operator spectrum")
    sub.add_parser("dual", parents=[common], help="canonical-dual reconstruction residual")
    return parser


def _config(args) -> RunConfig:
    if args.tol is not None and not args.tol > 0:
        raise InputError("--tol must be positive")
    return RunConfig(
        p=args.p,
        subgroup_order_M=None if args.full else args.order_m,
        window_path=args.window,
        input_signal_path=args.signal,
        tolerance=args.tol,
        output_format=args.format,
        verify=args.verify,
        seed=args.seed,
    )


def _setup(cfg: RunConfig):
    try:
        ctx = prime_context(cfg.p)
    except ValueError:
        raise InputError(f"--p {cfg.p}: not a prime") from None
    M = cfg.p - 1 if cfg.subgroup_order_M is None else cfg.subgroup_order_M
    try:
        sub = subgroup_of_order(ctx, M)
    except ValueError:
        raise InputError(f"--order-m {M}: does not divide p-1={cfg.p - 1}") from None
    return ctx, sub


def _load(path: str | None, p: int, flag: str) -> np.ndarray:
    if path is None:
        raise InputError(f"{flag} FILE is required for this command")
    try:
        return read_signal(path, p)
    except OSError as exc:
        raise InputError(f"{flag} {path}: {exc.strerror}") from None
    except SignalFormatError as exc:
        raise InputError(f"{flag} {path}: {exc}") from None


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_report(cfg: RunConfig):
    ctx, sub = _setup(cfg)
    y = _load(cfg.window_path, ctx.p, "--window")
    try:
        rep = frames.frame_report(y, sub, ctx, cfg.tolerance)
    except ValueError as exc:
        raise InputError(f"--window {cfg.window_path}: {exc}") from None
    out = rep.to_dict()
    if cfg.verify:
        system = frames.wavelet_system(y, sub, ctx)
        lo, hi = oracle.hermitian_extremal_eigenvalues(oracle.assemble_frame_operator(system))
        out["verify"] = {"oracle_min_eigenvalue": lo, "oracle_max_eigenvalue": hi}
    return _dumps(out), EXIT_OK if rep.is_frame else EXIT_NOT_FRAME


def cmd_coeffs(cfg: RunConfig):
    ctx, sub = _setup(cfg)
    y = _load(cfg.window_path, ctx.p, "--window")
    x = _load(cfg.input_signal_path, ctx.p, "--signal")
    system = frames.wavelet_system(y, sub, ctx)
    grid = frames.coefficients_fourier(x, system)
    if cfg.verify:
        direct = frames.coefficients_direct(x, system)
        dev = float(np.max(np.abs(grid.values - direct.values)))
        print(f"verify: max |fourier - direct| = {dev:.3e}", file=sys.stderr)
    rows = [(g.m, g.k, float(c.real), float(c.imag)) for g, c in zip(grid.index_set, grid.values)]
    if cfg.output_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m", "k", "re", "im"])
        writer.writerows(rows)
        return buf.getvalue(), EXIT_OK
    body = [{"m": m, "k": k, "re": re, "im": im} for m, k, re, im in rows]
    return _dumps({"p": ctx.p, "M": sub.order_M, "coefficients": body}), EXIT_OK


def cmd_group(cfg: RunConfig):
    ctx, sub = _setup(cfg)
    out = {
        "p": ctx.p,
        "order": ctx.p * (ctx.p - 1),
        "epsilon": ctx.primitive_root,
        "M": sub.order_M,
        "a": sub.index_a,
        "subgroup": sub.sorted_elements,
        "cosets": [list(h) for h in sub.cosets],
    }
    return _dumps(out), EXIT_OK


def cmd_spectrum(cfg: RunConfig):
    ctx, sub = _setup(cfg)
    y = _load(cfg.window_path, ctx.p, "--window")
    spec = frames.frame_spectrum(y, sub, ctx)
    out = {
        "p": ctx.p,
        "M": sub.order_M,
        "a": sub.index_a,
        "dc": spec.dc,
        "cosets": list(spec.cosets),
        "eigenvalues": spec.eigenvalues().tolist(),
        "min": spec.min,
        "max": spec.max,
    }
    if cfg.verify:
        system = frames.wavelet_system(y, sub, ctx)
        lo, hi = oracle.hermitian_extremal_eigenvalues(oracle.assemble_frame_operator(system))
        out["verify"] = {"oracle_min_eigenvalue": lo, "oracle_max_eigenvalue": hi}
    return _dumps(out), EXIT_OK


def cmd_dual(cfg: RunConfig):
    """Reconstruct a signal (``--signal``, or a seeded random one) through the canonical dual."""
    ctx, sub = _setup(cfg)
    y = _load(cfg.window_path, ctx.p, "--window")
    if cfg.input_signal_path is None:
        rng = np.random.default_rng(cfg.seed)
        x = rng.standard_normal(ctx.p) + 1j * rng.standard_normal(ctx.p)
    else:
        x = _load(cfg.input_signal_path, ctx.p, "--signal")
    system = frames.wavelet_system(y, sub, ctx)
    out = {"p": ctx.p, "M": sub.order_M}
    try:
        rec = frames.canonical_dual_and_reconstruct(x, system, cfg.tolerance)
    except frames.NotAFrameError as exc:
        out.update(is_frame=False, error=str(exc))
        return _dumps(out), EXIT_NOT_FRAME
    scale = float(np.linalg.norm(x))
    err = float(np.linalg.norm(rec - x))
    out.update(is_frame=True, relative_error=err / scale if scale else err)
    return _dumps(out), EXIT_OK


COMMANDS = {
    "report": cmd_report,
    "coeffs": cmd_coeffs,
    "group": cmd_group,
    "spectrum": cmd_spectrum,
    "dual": cmd_dual,
}


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        cfg = _config(args)
        text, status = COMMANDS[args.command](cfg)
    except InputError as exc:
        print(f"zpwave {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
