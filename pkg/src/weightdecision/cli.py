"""Command-line front end.

Exit codes: 0 success, 1 undecidable / not found, 2 bad input, 3 failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import decider, scan, simulator
from .decider import NotFoundWithin, PreconditionError
from .scalar import WeightPair, query_estimates
from .zero_weight import ZeroWeightScheme

EXIT_OK, EXIT_UNDECIDABLE, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


class InputError(Exception):
    pass


def _weights(args) -> WeightPair:
    try:
        return WeightPair(args.rho, args.rho_prime)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _positive(kind):
    def parse(text):
        value = kind(text)
        if value <= 0:
            raise argparse.ArgumentTypeError(f"must be positive, got {text}")
        return value

    return parse


def _print_scheme(scheme):
    if isinstance(scheme, ZeroWeightScheme):
        print(f"scheme: zero-weight m={scheme.m} mu1={scan.fmt(scheme.mu1)}")
        return
    print(
        f"scheme: m={scheme.m} mu1={scan.fmt(scheme.mu1)} mu2={scan.fmt(scheme.mu2)} "
        f"c1_sq={scan.fmt(scheme.c1_sq)} c2_sq={scan.fmt(scheme.c2_sq)}"
    )


def _counts(args, w):
    if args.n_inputs is not None and args.r is not None and args.r_prime is not None:
        return args.r, args.r_prime, args.n_inputs
    rho, rho_p = w.rho, w.rho_prime
    return simulator.rationalize(rho, rho_p, n_max=args.n_inputs or 20)


def _run_verify(args, w, scheme) -> int:
    if isinstance(scheme, ZeroWeightScheme) and w.rho == 0.0:
        w = w.swapped()
    try:
        r, rp, n = _counts(args, w)
    except ValueError as exc:
        print(f"verification skipped: {exc}", file=sys.stderr)
        return EXIT_OK
    try:
        report = simulator.verify_scheme(scheme, r, rp, n, mode=args.mode)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    print(report.to_text())
    if args.json:
        scan.write_text(args.json, report.to_json() + "\n")
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_decide(args) -> int:
    w = _weights(args)
    if 0.0 in (w.rho, w.rho_prime) or w.rho == w.rho_prime:
        try:
            scheme = decider.decide(args.m, w)
        except PreconditionError as exc:
            raise InputError(str(exc)) from exc
        verdict = "decidable" if scheme else "undecidable"
    else:
        verdict, scheme = decider.diagnose(args.m, w, args.tolerance)
    print(f"verdict: {verdict}")
    if not scheme:
        print(f"reason: {scheme.reason}")
        return EXIT_UNDECIDABLE
    _print_scheme(scheme)
    if args.verify:
        return _run_verify(args, w, scheme)
    return EXIT_OK


def cmd_min_iterations(args) -> int:
    w = _weights(args)
    try:
        m, scheme = decider.min_iterations_pair(w, args.m_max)
    except PreconditionError as exc:
        raise InputError(str(exc)) from exc
    except NotFoundWithin as exc:
        print(f"not found: {exc}")
        return EXIT_UNDECIDABLE
    print(f"min_m: {m}")
    _print_scheme(scheme)
    if args.verify:
        return _run_verify(args, w, scheme)
    return EXIT_OK


def cmd_region(args) -> int:
    grid = scan.region_grid(args.resolution, args.m_max, workers=args.workers)
    stem = args.out
    for ext in (".csv", ".pgm"):
        if stem.endswith(ext):
            stem = stem[: -len(ext)]
    try:
        scan.write_text(stem + ".csv", grid.to_csv())
        scan.write_text(stem + ".pgm", grid.to_pgm())
    except OSError as exc:
        raise InputError(f"cannot write output: {exc}") from exc
    print(f"wrote {stem}.csv and {stem}.pgm")
    return EXIT_OK


def cmd_curve(args) -> int:
    w = _weights(args)
    try:
        text = scan.curve_csv(scan.curve_table(args.m, w, args.samples))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.out:
        try:
            scan.write_text(args.out, text)
        except OSError as exc:
            raise InputError(f"cannot write output: {exc}") from exc
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_zero(args) -> int:
    if args.rho is not None:
        try:
            rows = scan.zero_inverse_table(args.rho)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        print("rho,m_min")
        for rho, m in rows:
            print(f"{scan.fmt(rho)},{m}")
        return EXIT_OK
    print("m,rho_min")
    for m, rho in scan.zero_table(args.m or scan.TABLE_M):
        print(f"{m},{scan.fmt(rho)}")
    return EXIT_OK


def cmd_estimate(args) -> int:
    w = _weights(args)
    try:
        est = query_estimates(w, args.n_inputs)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    print("quantity,value")
    print(f"m_classical_det,{scan.fmt(est.m_classical_det)}")
    print(f"m_classical_prob,{scan.fmt(est.m_classical_prob)}")
    print(f"m_quantum,{scan.fmt(est.m_quantum)}")
    if 0.0 < min(w.rho, w.rho_prime):
        try:
            m, _ = decider.min_iterations_pair(w, args.m_max)
            print(f"m_min_numeric,{m}")
        except NotFoundWithin:
            print(f"m_min_numeric,>{args.m_max}")
    return EXIT_OK


def cmd_verify(args) -> int:
    w = _weights(args)
    try:
        if args.m is None:
            if 0.0 in (w.rho, w.rho_prime):
                raise InputError("--m is required when a weight is zero")
            _, scheme = decider.min_iterations_pair(w, args.m_max)
        else:
            scheme = decider.decide(args.m, w)
    except PreconditionError as exc:
        raise InputError(str(exc)) from exc
    except NotFoundWithin as exc:
        print(f"not found: {exc}")
        return EXIT_UNDECIDABLE
    if not scheme:
        print(f"undecidable: {scheme.reason}")
        return EXIT_UNDECIDABLE
    _print_scheme(scheme)
    return _run_verify(args, w, scheme)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weightdecision", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def weights(sp, required=True):
        sp.add_argument("--rho", type=float, required=required)
        sp.add_argument("--rho-prime", type=float, required=required)

    def verify_flags(sp):
        sp.add_argument("--verify", action="store_true", help="check the scheme with the state-vector simulator")
        sp.add_argument("--n-inputs", type=_positive(int))
        sp.add_argument("--r", type=int)
        sp.add_argument("--r-prime", type=int)
        sp.add_argument("--mode", choices=["per_t", "exhaustive"], default="per_t")
        sp.add_argument("--json", help="also write the verification report as JSON")

    sp = sub.add_parser("decide", help="decide one weight pair at fixed m")
    weights(sp)
    sp.add_argument("--m", type=_positive(int), required=True)
    sp.add_argument("--tolerance", type=_positive(float), default=1e-6)
    verify_flags(sp)
    sp.set_defaults(func=cmd_decide)

    sp = sub.add_parser("min-iterations", help="smallest m for one weight pair")
    weights(sp)
    sp.add_argument("--m-max", type=_positive(int), default=64)
    verify_flags(sp)
    sp.set_defaults(func=cmd_min_iterations)

    sp = sub.add_parser("region", help="minimal-m map over the open unit square")
    sp.add_argument("--resolution", type=int, default=128)
    sp.add_argument("--m-max", type=_positive(int), default=8)
    sp.add_argument("--out", default="region")
    sp.add_argument("--workers", type=_positive(int), default=1)
    sp.add_argument("--seed", type=int, default=0, help="accepted for config symmetry; the sweep is deterministic")
    sp.set_defaults(func=cmd_region)

    sp = sub.add_parser("curve", help="dump the (A, B) curve as CSV")
    weights(sp)
    sp.add_argument("--m", type=_positive(int), required=True)
    sp.add_argument("--samples", type=int, default=1001)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_curve)

    sp = sub.add_parser("zero", help="thresholds against the zero function")
    sp.add_argument("--m", type=_positive(int), nargs="+")
    sp.add_argument("--rho", type=float, nargs="+")
    sp.set_defaults(func=cmd_zero)

    sp = sub.add_parser("estimate", help="classical vs quantum query estimates")
    weights(sp)
    sp.add_argument("--n-inputs", type=_positive(int), default=1000)
    sp.add_argument("--m-max", type=_positive(int), default=64)
    sp.set_defaults(func=cmd_estimate)

    sp = sub.add_parser("verify", help="build a scheme and certify it by simulation")
    weights(sp)
    sp.add_argument("--m", type=_positive(int))
    sp.add_argument("--m-max", type=_positive(int), default=64)
    verify_flags(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "resolution", 2) < 2:
        parser.error("--resolution must be >= 2")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
