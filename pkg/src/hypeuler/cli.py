"""Command-line interface.

Three subcommands:

* ``series``: the equivariant generating function up to a given number of
  marked points, in the power-sum or Schur basis, as text, JSON or CSV;
* ``euler``: the table of integer Euler characteristics chi(H_{g,n});
* ``verify``: the exact cross-validation battery.

Output is deterministic: terms are emitted in a fixed canonical order and
rationals render as ``p/q`` (or a bare integer).  Data goes to stdout,
diagnostics to stderr.  Exit codes: 0 on success, 1 when verification
fails, 2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .hyperelliptic_core import chi_pointed, equivariant_series
from .schur_transform import p_to_schur, sign_twist
from .symfunc_series import TSeries
from .verify import run_battery

__all__ = ["run", "main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypeuler",
        description=(
            "Exact S_n-equivariant Euler characteristics of moduli of "
            "pointed hyperelliptic curves (genus >= 2)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    series = sub.add_parser(
        "series",
        help="equivariant generating function up to t^max-points",
    )
    series.add_argument("--genus", type=int, required=True)
    series.add_argument("--max-points", type=int, required=True)
    series.add_argument(
        "--basis", choices=("powersum", "schur"), default="powersum"
    )
    series.add_argument(
        "--format", choices=("text", "json", "csv"), default="text"
    )
    series.add_argument(
        "--schur-convention",
        choices=("standard", "sign-twisted"),
        default="standard",
        help=(
            "Schur-basis normalization: 'standard' pairs power sums with "
            "characters directly; 'sign-twisted' additionally tensors with "
            "the sign character (conjugate partitions).  The power-sum "
            "coefficients pin down only the standard choice."
        ),
    )

    euler = sub.add_parser(
        "euler", help="table of integer Euler characteristics"
    )
    euler.add_argument("--genus", type=int, required=True)
    euler.add_argument("--max-points", type=int, required=True)
    euler.add_argument(
        "--format", choices=("text", "json", "csv"), default="text"
    )

    verify = sub.add_parser("verify", help="run the cross-validation battery")
    verify.add_argument(
        "--genus-range",
        default="2..10",
        metavar="A..B",
        help="inclusive genus range (default 2..10)",
    )
    verify.add_argument("--max-points", type=int, default=8)
    verify.add_argument(
        "--double-sum-depth",
        type=int,
        default=30,
        help="point depth for the double-sum identity check",
    )
    verify.add_argument(
        "--totient-limit",
        type=int,
        default=10_000,
        help="upper bound for the totient identity check",
    )
    verify.add_argument(
        "--roundtrip",
        action="store_true",
        help="also assert the power-sum/Schur output round trip",
    )
    return parser


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"expected A..B, got {text!r}")
    return int(lo), int(hi)


def _series_rows(
    series: TSeries, basis: str, twisted: bool
) -> list[tuple[int, list[tuple[str, list, str]]]]:
    # Per degree n: (n, [(kind, key, value string), ...]) in canonical order.
    rows = []
    for n, poly in enumerate(series.coeffs):
        coeffs: list[tuple[str, list, str]] = []
        if basis == "powersum":
            for mono, value in poly.sorted_terms():
                coeffs.append(
                    ("monomial", [[k, e] for k, e in mono.exps], str(value))
                )
        else:
            vec = p_to_schur(poly, n)
            if twisted:
                vec = sign_twist(vec)
            for lam, value in vec.sorted_items():
                coeffs.append(("partition", list(lam.parts), str(value)))
        rows.append((n, coeffs))
    return rows


def _mono_text(key: list) -> str:
    if not key:
        return "1"
    return "*".join(f"p{k}" if e == 1 else f"p{k}^{e}" for k, e in key)


def _partition_text(key: list) -> str:
    return "s[" + ",".join(str(p) for p in key) + "]"


def _emit_series(args: argparse.Namespace) -> int:
    series = equivariant_series(args.genus, args.max_points)
    twisted = args.schur_convention == "sign-twisted"
    rows = _series_rows(series, args.basis, twisted)
    if args.format == "json":
        doc = {
            "genus": args.genus,
            "max_points": args.max_points,
            "basis": args.basis,
            "terms": [
                {
                    "n": n,
                    "coeffs": [
                        {kind: key, "value": value}
                        for kind, key, value in coeffs
                    ],
                }
                for n, coeffs in rows
            ],
        }
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        label = "monomial" if args.basis == "powersum" else "partition"
        print(f"n,{label},value")
        for n, coeffs in rows:
            for kind, key, value in coeffs:
                text = (
                    _mono_text(key)
                    if kind == "monomial"
                    else _partition_text(key)
                )
                print(f"{n},{text},{value}")
    else:
        for n, coeffs in rows:
            if not coeffs:
                print(f"t^{n}: 0")
                continue
            parts = []
            for kind, key, value in coeffs:
                text = (
                    _mono_text(key)
                    if kind == "monomial"
                    else _partition_text(key)
                )
                if text == "1":
                    parts.append(value)
                elif value == "1":
                    parts.append(text)
                elif value == "-1":
                    parts.append(f"-{text}")
                else:
                    parts.append(f"{value}*{text}")
            joined = parts[0]
            for p in parts[1:]:
                joined += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
            print(f"t^{n}: {joined}")
    return 0


def _emit_euler(args: argparse.Namespace) -> int:
    if args.max_points < 0:
        raise ValueError(f"max points must be >= 0, got {args.max_points}")
    values = [
        (n, chi_pointed(args.genus, n)) for n in range(args.max_points + 1)
    ]
    if args.format == "json":
        doc = {
            "genus": args.genus,
            "max_points": args.max_points,
            "values": [{"n": n, "chi": str(chi)} for n, chi in values],
        }
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        print("n,chi")
        for n, chi in values:
            print(f"{n},{chi}")
    else:
        width = max(len(str(chi)) for _, chi in values)
        print(f"chi(H_(g,n)) for genus g = {args.genus}")
        for n, chi in values:
            print(f"n={n:<3d} {chi:>{width}d}")
    return 0


def _emit_verify(args: argparse.Namespace) -> int:
    g_lo, g_hi = _parse_range(args.genus_range)
    results = run_battery(
        g_lo,
        g_hi,
        args.max_points,
        double_sum_depth=args.double_sum_depth,
        totient_limit=args.totient_limit,
        roundtrip=args.roundtrip,
    )
    failed = 0
    for res in results:
        tag = "PASS" if res.passed else "FAIL"
        print(f"{tag} {res.name}: {res.detail}")
        failed += not res.passed
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def run(args: Sequence[str]) -> int:
    """Parse and execute; returns the process exit code."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(list(args))
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors.
        return 0 if exc.code in (0, None) else 2
    try:
        if ns.command == "series":
            return _emit_series(ns)
        if ns.command == "euler":
            return _emit_euler(ns)
        return _emit_verify(ns)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
