"""Command-line interface: ``runshuffle {measure,eulerian,validate-claims,bench}``.

Exit codes: 0 success, 1 validation failure, 2 input error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from runshuffle.bench import BenchConfig, SortMismatchError, records_to_csv, records_to_json, run_bench
from runshuffle.combinatorics import DEFAULT_CAP, descent_distribution, descent_permutation_count, p_less
from runshuffle.datagen import parse_keys, read_keys
from runshuffle.disorder import part_disorders, partition_bounds, step_down_runs, validate_keys
from runshuffle.shuffle import ShuffleConfig, parse_policy
from runshuffle import validation

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

CLAIM2_TOLERANCE = 0.01


class InputError(Exception):
    pass


def _load_keys(path: Optional[str]) -> list[int]:
    try:
        keys = parse_keys(sys.stdin, "<stdin>") if path in (None, "-") else read_keys(path)
        return validate_keys(keys)
    except (OSError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def cmd_measure(args: argparse.Namespace) -> int:
    keys = _load_keys(args.file or args.input)
    disorder = step_down_runs(keys)
    print(f"n={len(keys)}")
    print(f"M={disorder}")
    print(f"runs={disorder + 1 if keys else 0}")
    if args.parts is not None:
        if args.parts < 1:
            raise InputError(f"--parts must be >= 1, got {args.parts}")
        report = part_disorders(keys, partition_bounds(len(keys), args.parts))
        print(f"parts={len(report.per_part)}")
        print("part_disorders=" + " ".join(map(str, report.per_part)))
        print(f"part_sum={sum(report.per_part)}")
    return EXIT_OK


def cmd_eulerian(args: argparse.Namespace) -> int:
    if not 1 <= args.n <= args.cap:
        raise InputError(f"n must lie in [1, {args.cap}], got {args.n}")
    if args.k is None:
        print(" ".join(map(str, descent_distribution(args.n, cap=args.cap))))
    else:
        if not 0 <= args.k <= args.n - 1:
            raise InputError(f"k must lie in [0, {args.n - 1}], got {args.k}")
        print(descent_permutation_count(args.n, args.k))
    return EXIT_OK


def _verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def cmd_validate_claims(args: argparse.Namespace) -> int:
    selected = args.exhaustive or args.model or args.kernel or args.claim2
    exhaustive = args.exhaustive or ([] if selected else list(range(1, 9)))
    model = args.model or ([] if selected else [8, 312])
    kernel = args.kernel or ([] if selected else ["8:6"])
    claim2 = args.claim2 or not selected
    ok = True

    for n in exhaustive:
        if not 1 <= n <= validation.EXHAUSTIVE_MAX_N:
            raise InputError(f"exhaustive mode refuses n={n}; limit is {validation.EXHAUSTIVE_MAX_N}")
        hist = validation.exhaustive_histogram(n)
        good = hist == descent_distribution(n)
        ok &= good
        print(f"exhaustive n={n} histogram={' '.join(map(str, hist))} {_verdict(good)}")

    for n in model:
        check = validation.model_check(n)
        ok &= check.passed
        detail = f"failing z={list(check.failures)}" if check.failures else f"all z>{check.threshold} have p_less>1/2"
        print(
            f"model n={n} threshold={check.threshold} {detail} "
            f"p_less(n,n-1)={float(check.p_at_max):.12g} {_verdict(check.passed)}"
        )
        if args.z is not None and 0 <= args.z <= n - 1:
            p = p_less(n, args.z)
            good = p > Fraction(1, 2)
            if good or args.z > check.threshold:
                ok &= good
                verdict = _verdict(good)
            else:
                verdict = f"INFO (z <= threshold {check.threshold})"
            print(f"model n={n} z={args.z} p_less={_fraction_text(p)} ({float(p):.6g}) "
                  f"{'> 0.5' if good else '<= 0.5'} {verdict}")

    for spec in kernel:
        try:
            n_text, z_text = spec.split(":")
            n, z = int(n_text), int(z_text)
        except ValueError:
            raise InputError(f"kernel spec must look like N:Z, got {spec!r}") from None
        try:
            est = validation.one_swap_kernel(n, z, args.trials, args.seed)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        print(
            f"kernel n={n} z={z} trials={est.trials} sampler={est.sampler} "
            f"empirical={est.empirical:.6f} model_p_less={float(est.model):.6f} INFO"
        )

    if claim2:
        try:
            estimates = validation.claim2_simulation(
                args.parts_l, args.at_least or [1, 8, 16], args.part_size, args.part_z, args.trials, args.seed
            )
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        for est in estimates:
            good = est.error <= CLAIM2_TOLERANCE
            ok &= good
            print(
                f"claim2 l={est.parts} c={est.at_least} p={_fraction_text(est.p)} trials={est.trials} "
                f"exact={float(est.exact):.6f} empirical={est.empirical:.6f} "
                f"error={est.error:.6f} {_verdict(good)}"
            )
    return EXIT_OK if ok else EXIT_FAILED


def _fraction_text(p: Fraction) -> str:
    text = f"{p.numerator}/{p.denominator}"
    return text if len(text) <= 40 else f"{float(p):.12g}"


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        name, swaps = parse_policy(args.policy)
        shuffle = ShuffleConfig(k=args.k, z=args.z, m=args.m, policy=name, fixed_swaps=swaps, seed=args.seed)
        config = BenchConfig(
            sizes=args.sizes, repetitions=args.reps, shuffle=shuffle,
            output=args.out, output_format=args.format, parallel=args.parallel,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    keys = _load_keys(args.input) if args.input else None
    try:
        records = run_bench(config, keys)
    except SortMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    text = records_to_csv(records) if args.format == "csv" else records_to_json(records)
    if args.out:
        Path(args.out).write_text(text, encoding="ascii")
        print(f"wrote {len(records)} records to {args.out} (policy={shuffle.policy_label})", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="runshuffle",
        description="Step-down-runs disorder, Eulerian tables and shuffle-before-sort benchmarks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", help="disorder of a newline-delimited key file")
    p.add_argument("file", nargs="?", help="input file ('-' or omitted reads stdin)")
    p.add_argument("--input", help="input file (alternative to the positional argument)")
    p.add_argument("--parts", type=int, help="also report the disorder of K contiguous parts")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("eulerian", help="permutation counts by number of descents")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int, nargs="?", help="print only the count for K descents")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest n accepted (default %(default)s)")
    p.set_defaults(func=cmd_eulerian)

    p = sub.add_parser("validate-claims", help="check the descent-distribution analysis")
    p.add_argument("--exhaustive", type=int, action="append", metavar="N",
                   help="enumerate all N! permutations (N <= 9); repeatable")
    p.add_argument("--model", type=int, action="append", metavar="N",
                   help="exact check of p_less(N, z) > 1/2 above the threshold; repeatable")
    p.add_argument("--z", type=int, help="with --model, also report p_less(N, Z)")
    p.add_argument("--kernel", action="append", metavar="N:Z",
                   help="simulate one blind swap from disorder Z; repeatable")
    p.add_argument("--claim2", action="store_true", help="simulate the binomial part-improvement tail")
    p.add_argument("--l", dest="parts_l", type=int, default=16, help="parts per trial (default %(default)s)")
    p.add_argument("--c", dest="at_least", type=int, action="append", metavar="C",
                   help="improved-part threshold; repeatable (default 1, 8, 16)")
    p.add_argument("--part-size", type=int, default=8, help="keys per simulated part (default %(default)s)")
    p.add_argument("--part-z", type=int, default=4, help="disorder threshold per part (default %(default)s)")
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_validate_claims)

    p = sub.add_parser("bench", help="benchmark shuffle+adaptive vs adaptive vs non-adaptive sorting")
    p.add_argument("--sizes", type=_int_list, default=[5000], help="comma-separated sizes (default 5000)")
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--k", type=int, default=16)
    p.add_argument("--z", type=int, default=10)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--policy", default="guarded", help="blind, guarded or fixed:<s> (default %(default)s)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--input", help="benchmark this key file instead of generated permutations")
    p.add_argument("--out", help="write records here instead of stdout")
    p.add_argument("--parallel", action="store_true",
                   help="run repetitions in worker processes (perturbs the time columns)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
