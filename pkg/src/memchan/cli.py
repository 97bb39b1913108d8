"""Command-line front end.

Subcommands: info, sweep, threshold, threshold-curve, verify, presets.
Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
CSV output is UTF-8 with LF line endings, a header row and 12 significant
digits; JSON output is a single document with keys inputs, results, version.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .analysis import (
    DegenerateCurvesError,
    memory_threshold,
    run_oracle_trials,
    sweep,
    threshold_curve,
)
from .channel import PRESET_NAMES, PauliProbs, preset_formula, preset_probs
from .schemes import (
    SCHEME_KINDS,
    closed_form_spectrum,
    get_scheme,
    mutual_information_total,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3

_ALL_SCHEMES = ",".join(SCHEME_KINDS)


def _fmt(x) -> str:
    return format(float(x), ".12g")


def _add_channel_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group(
        "channel", "either a preset (--channel with --p) or four explicit probabilities"
    )
    group.add_argument("--channel", choices=PRESET_NAMES, help="preset channel name")
    group.add_argument("--p", type=float, help="preset error strength in [0, 1]")
    group.add_argument("--p0", type=float, help="identity probability")
    group.add_argument("--px", type=float, help="sigma_x probability")
    group.add_argument("--py", type=float, help="sigma_y probability")
    group.add_argument("--pz", type=float, help="sigma_z probability")


def _resolve_probs(args) -> tuple[PauliProbs, dict]:
    explicit = (args.p0, args.px, args.py, args.pz)
    has_preset = args.channel is not None or args.p is not None
    has_explicit = any(v is not None for v in explicit)
    if has_preset and has_explicit:
        raise ValueError("give either --channel/--p or --p0..--pz, not both")
    if has_preset:
        if args.channel is None or args.p is None:
            raise ValueError("--channel and --p must be given together")
        probs = preset_probs(args.channel, args.p)
        echo = {"preset": args.channel, "p": args.p}
    elif has_explicit:
        if any(v is None for v in explicit):
            raise ValueError("all four of --p0 --px --py --pz are required")
        probs = PauliProbs(*explicit)
        echo = {}
    else:
        raise ValueError("no channel given; use --channel/--p or --p0..--pz")
    echo["probs"] = {
        "p0": probs.p0, "px": probs.px, "py": probs.py, "pz": probs.pz,
    }
    return probs, echo


def _parse_pair(text: str) -> tuple[str, str]:
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 2:
        raise ValueError(f"--pair needs exactly two scheme names, got {text!r}")
    kind_a, kind_b = parts
    get_scheme(kind_a)
    get_scheme(kind_b)
    if kind_a == kind_b:
        raise ValueError(f"--pair schemes must differ, got {kind_a!r} twice")
    return kind_a, kind_b


def _parse_schemes(text: str) -> tuple[str, ...]:
    kinds = tuple(part.strip() for part in text.split(",") if part.strip())
    if not kinds:
        raise ValueError("--schemes list is empty")
    for kind in kinds:
        get_scheme(kind)
    return kinds


def _check_mu(mu: float) -> float:
    if not 0.0 <= mu <= 1.0:
        raise ValueError(f"--mu must lie in [0, 1], got {mu}")
    return float(mu)


def _record(command: str, inputs: dict, results: dict) -> str:
    document = {
        "inputs": {"command": command, **inputs},
        "results": results,
        "version": __version__,
    }
    return json.dumps(document, indent=2) + "\n"


def _emit(text: str, path) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_info(args) -> int:
    probs, echo = _resolve_probs(args)
    mu = _check_mu(args.mu)
    scheme = get_scheme(args.scheme)
    spectrum = closed_form_spectrum(args.scheme, probs, mu)
    total = mutual_information_total(args.scheme, probs, mu)
    per_use = total / scheme.channel_uses
    inputs = {"channel": echo, "scheme": args.scheme, "mu": mu}
    results = {
        "total_bits": total,
        "bits_per_use": per_use,
        "spectrum": [float(v) for v in spectrum],
    }
    if args.format == "json":
        sys.stdout.write(_record("info", inputs, results))
        return EXIT_OK
    print(f"scheme: {args.scheme} ({scheme.payload_bits} bits over "
          f"{scheme.channel_uses} channel uses)")
    print(f"probs: p0={_fmt(probs.p0)} px={_fmt(probs.px)} "
          f"py={_fmt(probs.py)} pz={_fmt(probs.pz)}")
    print(f"mu: {_fmt(mu)}")
    print(f"total bits: {total!r}")
    print(f"bits per use: {per_use!r}")
    print("spectrum: " + ", ".join(_fmt(v) for v in spectrum))
    return EXIT_OK


def cmd_sweep(args) -> int:
    probs, echo = _resolve_probs(args)
    if args.mu_steps < 2:
        raise ValueError(f"--mu-steps must be >= 2, got {args.mu_steps}")
    kinds = _parse_schemes(args.schemes)
    grid = np.array([i / (args.mu_steps - 1) for i in range(args.mu_steps)])
    table = sweep(probs, kinds, grid)
    inputs = {"channel": echo, "schemes": list(kinds), "mu_steps": args.mu_steps}
    if args.format == "json":
        results = {
            "mu": [float(m) for m in table.mu_grid],
            "columns": {
                kind: [float(v) for v in table.column(kind)] for kind in kinds
            },
        }
        _emit(_record("sweep", inputs, results), args.output)
        return EXIT_OK
    lines = ["mu," + ",".join(kinds)]
    for i, mu in enumerate(table.mu_grid):
        row = [_fmt(mu)] + [_fmt(v) for v in table.values[i]]
        lines.append(",".join(row))
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_threshold(args) -> int:
    probs, echo = _resolve_probs(args)
    kind_a, kind_b = _parse_pair(args.pair)
    if args.tol <= 0.0:
        raise ValueError(f"--tol must be positive, got {args.tol}")
    note = None
    try:
        result = memory_threshold(kind_a, kind_b, probs, tol=args.tol)
        mu_t = result.mu_t
        if mu_t is None and result.dominant is not None:
            other = kind_b if result.dominant == kind_a else kind_a
            note = (f"no crossing on (0,1): {result.dominant} stays at or "
                    f"above {other} for every mu")
    except DegenerateCurvesError as exc:
        mu_t = None
        note = f"threshold undefined: {exc}"
    inputs = {"channel": echo, "pair": [kind_a, kind_b], "tol": args.tol}
    if args.format == "json":
        results = {"mu_t": mu_t, "note": note}
        sys.stdout.write(_record("threshold", inputs, results))
        return EXIT_OK
    print("none" if mu_t is None else f"{mu_t:.6f}")
    if note is not None:
        print(note, file=sys.stderr)
    return EXIT_OK


def cmd_threshold_curve(args) -> int:
    kind_a, kind_b = _parse_pair(args.pair)
    if args.p_steps < 2:
        raise ValueError(f"--p-steps must be >= 2, got {args.p_steps}")
    if not 0.0 < args.p_min <= args.p_max:
        raise ValueError("need 0 < --p-min <= --p-max")
    if args.p_max >= 1.0 / 3.0 + 1e-12:
        raise ValueError("--p-max must stay below 1/3 (per-Pauli error probability)")
    grid = np.linspace(args.p_min, args.p_max, args.p_steps)
    curve = threshold_curve(grid, (kind_a, kind_b))
    best = curve.max_threshold()
    inputs = {
        "pair": [kind_a, kind_b],
        "p_min": args.p_min,
        "p_max": args.p_max,
        "p_steps": args.p_steps,
    }
    if args.format == "json":
        results = {
            "p": list(curve.p_values),
            "mu_t": [mu for mu in curve.mu_values],
            "max": None if best is None else {"p": best[0], "mu_t": best[1]},
        }
        _emit(_record("threshold-curve", inputs, results), args.output)
        return EXIT_OK
    lines = ["p,mu_t"]
    for p, mu in zip(curve.p_values, curve.mu_values):
        lines.append(f"{_fmt(p)},{'' if mu is None else _fmt(mu)}")
    _emit("\n".join(lines) + "\n", args.output)
    summary = ("max mu_t: none (no crossings on the grid)" if best is None
               else f"max mu_t: {best[1]:.6f} at p={_fmt(best[0])}")
    # keep stdout parseable when the CSV itself goes to stdout
    print(summary, file=sys.stdout if args.output is not None else sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise ValueError(f"--trials must be >= 1, got {args.trials}")
    if args.tolerance <= 0.0:
        raise ValueError(f"--tolerance must be positive, got {args.tolerance}")
    worst = run_oracle_trials(args.trials, args.seed)
    passed = worst.gap <= args.tolerance
    print(f"schemes: {_ALL_SCHEMES}")
    print(f"trials per scheme: {args.trials} (seed {args.seed})")
    print(f"max |brute-force - closed-form| spectrum gap: {worst.gap:.3e}")
    if passed:
        print(f"verification passed (tolerance {args.tolerance:.3e})")
        return EXIT_OK
    print(f"verification FAILED (tolerance {args.tolerance:.3e})")
    print(f"worst case: scheme={worst.kind} mu={worst.mu!r} "
          f"p0={worst.probs.p0!r} px={worst.probs.px!r} "
          f"py={worst.probs.py!r} pz={worst.probs.pz!r}")
    return EXIT_VERIFY_FAIL


def cmd_presets(args) -> int:
    width = max(len(name) for name in PRESET_NAMES)
    for name in PRESET_NAMES:
        print(f"{name:<{width}}  {preset_formula(name)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="memchan",
        description=(
            "Classical information over Pauli channels with correlated noise: "
            "per-scheme capacities, mu sweeps, memory thresholds and "
            "closed-form-vs-brute-force verification."
        ),
    )
    parser.add_argument("--version", action="version", version=f"memchan {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="information of one scheme at one (channel, mu)")
    _add_channel_flags(p_info)
    p_info.add_argument("--scheme", required=True, choices=SCHEME_KINDS)
    p_info.add_argument("--mu", type=float, required=True, help="memory coefficient")
    p_info.add_argument("--format", choices=("text", "json"), default="text")
    p_info.set_defaults(func=cmd_info)

    p_sweep = sub.add_parser("sweep", help="bits/use over an inclusive mu grid")
    _add_channel_flags(p_sweep)
    p_sweep.add_argument("--schemes", default=_ALL_SCHEMES,
                         help=f"comma-separated scheme list (default {_ALL_SCHEMES})")
    p_sweep.add_argument("--mu-steps", type=int, default=101,
                         help="grid points including mu=0 and mu=1 (default 101)")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--output", help="output path (default stdout)")
    p_sweep.set_defaults(func=cmd_sweep)

    p_thr = sub.add_parser("threshold", help="mu where two schemes' curves cross")
    _add_channel_flags(p_thr)
    p_thr.add_argument("--pair", required=True, help="two scheme names, e.g. sq1,sq2")
    p_thr.add_argument("--tol", type=float, default=1e-6, help="bisection bracket tolerance")
    p_thr.add_argument("--format", choices=("text", "json"), default="text")
    p_thr.set_defaults(func=cmd_threshold)

    p_curve = sub.add_parser(
        "threshold-curve",
        help="threshold vs per-Pauli error probability p_i over the depolarizing family",
    )
    p_curve.add_argument("--pair", required=True, help="two scheme names, e.g. sq1,sq2")
    p_curve.add_argument("--p-min", type=float, required=True,
                         help="smallest per-Pauli error probability (> 0)")
    p_curve.add_argument("--p-max", type=float, required=True,
                         help="largest per-Pauli error probability (< 1/3)")
    p_curve.add_argument("--p-steps", type=int, required=True, help="grid points (>= 2)")
    p_curve.add_argument("--format", choices=("csv", "json"), default="csv")
    p_curve.add_argument("--output", help="output path (default stdout)")
    p_curve.set_defaults(func=cmd_threshold_curve)

    p_verify = sub.add_parser(
        "verify", help="compare closed-form and brute-force spectra on random draws"
    )
    p_verify.add_argument("--trials", type=int, required=True, help="draws per scheme")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--tolerance", type=float, default=1e-9)
    p_verify.set_defaults(func=cmd_verify)

    p_presets = sub.add_parser("presets", help="list preset channels and their formulas")
    p_presets.set_defaults(func=cmd_presets)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage/help
        code = exc.code
        return 0 if code is None else int(code)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
