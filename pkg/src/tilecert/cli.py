"""Command-line interface.

Every invocation prints one self-describing JSON object with a stable
key order, so output is byte-for-byte deterministic for a fixed input;
``--human`` switches to an indented key/value rendering.  Exit codes:
0 = computed (whatever the mathematical outcome), 2 = input error.
Batch mode: 0 = no violations, 1 = violations found.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .analysis import classify_prime_power_cyclotomic, power_sums
from .families import run_batch, subsets, three_factor_specs, two_factor_specs
from .report import analyze_set, format_fraction, product_report, tiling_report
from .spectra import construct_spectrum, parse_thetas, spectrum_search, verify_spectrum_poly
from .tileset import IntSet, char_poly
from .products import MAX_FACTORS, ProductSpec

DEFAULT_LCAP = 1_000_000


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tilecert",
        description="Certifying toolkit for integer tilings, Coven-Meyerowitz conditions, and rational spectra.",
    )
    parser.add_argument("--version", action="version", version=f"tilecert {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--lcap", type=int, default=DEFAULT_LCAP,
                       help="cap on the Granville period bound (default %(default)s)")
        p.add_argument("--workers", type=int, default=1,
                       help="worker processes for batch enumeration (default 1)")
        p.add_argument("--human", action="store_true",
                       help="human-readable rendering instead of JSON")

    p = sub.add_parser("analyze", help="full report for one set")
    p.add_argument("set", help="comma-separated nonnegative integers, e.g. 0,1,2,3")
    add_common(p)

    p = sub.add_parser("tile", help="tiling certificate search for one set")
    p.add_argument("set")
    add_common(p)

    p = sub.add_parser("spectrum", help="construct, search for, or verify a rational spectrum")
    p.add_argument("mode", choices=["construct", "search", "verify"])
    p.add_argument("set")
    p.add_argument("--theta", default=None,
                   help="comma-separated fractions for verify, e.g. 1/2,1/4,3/4")
    add_common(p)

    p = sub.add_parser("product", help="report for a product spec m1:n1,m2:n2,...")
    p.add_argument("spec")
    add_common(p)

    p = sub.add_parser("powersums", help="power sums of the roots of a set's characteristic polynomial")
    p.add_argument("set")
    p.add_argument("--count", type=int, default=10, help="how many power sums (default 10)")
    add_common(p)

    p = sub.add_parser("classify", help="recognize the prime-power progression pattern")
    p.add_argument("set")
    add_common(p)

    p = sub.add_parser("batch", help="run an invariant check over a whole family")
    p.add_argument("family", nargs="+",
                   help="family spec: 'subsets max_elem=E max_size=K', "
                        "'two-factor m=M n=N', or 'three-factor m=M'")
    p.add_argument("--check", required=True, help="check name, see README")
    add_common(p)

    return parser


def _render_human(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(obj, dict):
        for key, value in obj.items():
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{pad}{key}:")
                lines.extend(_render_human(value, indent + 1))
            else:
                rendered = json.dumps(value) if not isinstance(value, str) else value
                lines.append(f"{pad}{key}: {rendered}")
    elif isinstance(obj, list):
        for value in obj:
            if isinstance(value, (dict, list)):
                lines.extend(_render_human(value, indent + 1))
            else:
                lines.append(f"{pad}- {value}")
    else:
        lines.append(f"{pad}{obj}")
    return lines


def _emit(payload: dict, human: bool) -> None:
    if human:
        print("\n".join(_render_human(payload)))
    else:
        print(json.dumps(payload, indent=2))


def _parse_family(tokens: list[str]) -> tuple[str, dict[str, int]]:
    kind = tokens[0]
    params: dict[str, int] = {}
    for tok in tokens[1:]:
        if "=" not in tok:
            raise ValueError(f"bad family parameter {tok!r}, expected key=value")
        key, _, value = tok.partition("=")
        try:
            params[key] = int(value)
        except ValueError as exc:
            raise ValueError(f"bad family parameter {tok!r}") from exc
    return kind, params


def _build_family(kind: str, params: dict[str, int]):
    if kind == "subsets":
        missing = {"max_elem", "max_size"} - params.keys()
        if missing:
            raise ValueError(f"subsets family needs {sorted(missing)}")
        return "subsets", subsets(params["max_elem"], params["max_size"])
    if kind == "two-factor":
        missing = {"m", "n"} - params.keys()
        if missing:
            raise ValueError(f"two-factor family needs {sorted(missing)}")
        return "two-factor", two_factor_specs(params["m"], params["n"])
    if kind == "three-factor":
        if "m" not in params:
            raise ValueError("three-factor family needs ['m']")
        return "three-factor", three_factor_specs(params["m"])
    raise ValueError(f"unknown family {kind!r}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "analyze":
        a = IntSet.parse(args.set)
        _emit({"command": "analyze", **analyze_set(a, cap=args.lcap).to_dict()}, args.human)
        return 0

    if args.command == "tile":
        a = IntSet.parse(args.set)
        _emit({"command": "tile", **tiling_report(a, cap=args.lcap)}, args.human)
        return 0

    if args.command == "spectrum":
        a = IntSet.parse(args.set)
        payload: dict = {"command": f"spectrum {args.mode}", "set": list(a.elements)}
        if args.mode == "construct":
            spectrum = construct_spectrum(a)
            payload["spectrum"] = None if spectrum is None else [format_fraction(t) for t in spectrum]
        elif args.mode == "search":
            spectrum = spectrum_search(a)
            payload["spectrum"] = None if spectrum is None else [format_fraction(t) for t in spectrum]
        else:
            if args.theta is None:
                raise ValueError("spectrum verify needs --theta")
            thetas = [t % 1 for t in parse_thetas(args.theta)]
            payload["thetas"] = [format_fraction(t) for t in thetas]
            payload["root_conditions"] = verify_spectrum_poly(char_poly(a), thetas)
            payload["size_ok"] = len(thetas) == a.size - 1
            payload["verified"] = payload["root_conditions"] and payload["size_ok"]
        _emit(payload, args.human)
        return 0

    if args.command == "product":
        spec = ProductSpec.parse(args.spec)
        if len(spec) > MAX_FACTORS:
            raise ValueError(f"at most {MAX_FACTORS} factors supported")
        _emit({"command": "product", **product_report(spec, cap=args.lcap)}, args.human)
        return 0

    if args.command == "powersums":
        a = IntSet.parse(args.set)
        if args.count < 1:
            raise ValueError("--count must be positive")
        series = power_sums(char_poly(a), args.count)
        _emit({"command": "powersums", "set": list(a.elements),
               "count": args.count, "power_sums": list(series.values)}, args.human)
        return 0

    if args.command == "classify":
        a = IntSet.parse(args.set)
        result = classify_prime_power_cyclotomic(a)
        _emit({"command": "classify", "set": list(a.elements),
               "classification": None if result is None
               else {"prime": result[0], "exponent": result[1]}}, args.human)
        return 0

    if args.command == "batch":
        kind, params = _parse_family(args.family)
        family, instances = _build_family(kind, params)
        summary = run_batch(family, instances, args.check, workers=args.workers)
        _emit({"command": "batch", "params": params, **summary}, args.human)
        return 0 if summary["violation_count"] == 0 else 1

    raise ValueError(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
