"""Command line front end.

Thin shell over the library: every subcommand parses arguments, calls
one core function and prints.  Exit codes: 0 success, 1 a verification
found a mismatch, 2 usage or input errors, 3 an internal invariant
broke (caps exhausted, impossible cycle shapes).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, divisibility, even_tree, fibs
from .numerals import decode, encode_integer, normalize, parse_raw_digits

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sesqui",
        description="Base 3/2 numerals, their sequences and digit dynamics.",
    )
    parser.add_argument(
        "--config",
        metavar="PATH",
        help="JSON file with default caps and bounds (cap, max_digits, count)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="write an integer in base 3/2")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("decode", help="exact value of a digit string")
    p.add_argument("digits")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("seq", help="emit terms of a catalogued sequence")
    p.add_argument("name")
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--form", choices=["numeral", "value"], default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("tree", help="print the even-integer tree")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("divtest", help="digit-based divisibility report")
    p.add_argument("n", type=int)

    p = sub.add_parser("fibs", help="digit dynamics")
    fsub = p.add_subparsers(dest="fibs_command", required=True)
    c = fsub.add_parser("classify", help="eventual behavior of one orbit")
    c.add_argument("--mode", choices=["sorted", "reverse"], required=True)
    c.add_argument("--start", required=True, metavar="W1,W2")
    c.add_argument("--cap", type=int, default=None)
    s = fsub.add_parser("sweep", help="classify every small start pair")
    s.add_argument("--mode", choices=["sorted", "reverse"], required=True)
    s.add_argument("--max-digits", type=int, default=None)
    s.add_argument("--cap", type=int, default=None)

    p = sub.add_parser("verify", help="check a b-file against the generator")
    p.add_argument("name")
    p.add_argument("bfile")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            config = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SystemExit(f"sesqui: cannot read config {path}: {exc}")
    if not isinstance(config, dict):
        raise SystemExit(f"sesqui: config {path} must hold a JSON object")
    return config


def _cmd_encode(args) -> int:
    numeral = encode_integer(args.n)
    if args.json:
        print(json.dumps({"n": args.n, "numeral": str(numeral)}))
    else:
        print(numeral)
    return EXIT_OK


def _cmd_decode(args) -> int:
    digits = parse_raw_digits(args.digits)
    value = decode(digits)
    canonical = str(normalize(digits))
    if args.json:
        print(
            json.dumps(
                {
                    "digits": args.digits,
                    "numerator": value.numerator,
                    "denominator": value.denominator,
                    "is_integer": value.denominator == 1,
                    "canonical": canonical,
                }
            )
        )
    else:
        print(value)
    return EXIT_OK


def _cmd_seq(args, config: dict) -> int:
    count = args.count if args.count is not None else int(config.get("count", 10))
    descriptor = catalog.resolve(args.name)
    terms = descriptor.emit(count, args.form)
    for i, term in enumerate(terms):
        if args.json:
            print(
                json.dumps(
                    {"name": args.name, "index": descriptor.first_index + i, "term": term}
                )
            )
        else:
            print(term)
    return EXIT_OK


def _cmd_tree(args) -> int:
    root = even_tree.build_tree(args.depth)
    if args.json:
        for depth, node in even_tree.iter_preorder(root):
            print(
                json.dumps(
                    {"depth": depth, "digit": node.edge_digit, "value": node.value}
                )
            )
    else:
        print(even_tree.render_tree(root))
    return EXIT_OK


def _cmd_divtest(args) -> int:
    r = divisibility.report(args.n)
    print(
        json.dumps(
            {
                "n": r.n,
                "numeral": r.numeral,
                "trailing_zeros": r.trailing_zeros,
                "three_adic_valuation": r.three_adic_valuation,
                "alt_digit_sum_mod5": r.alt_digit_sum_mod5,
            }
        )
    )
    return EXIT_OK


def _cmd_fibs_classify(args, config: dict) -> int:
    start = args.start.split(",")
    if len(start) != 2:
        raise ValueError("--start wants two words separated by a comma")
    cap = args.cap if args.cap is not None else config.get("cap")
    behavior = fibs.classify(args.mode, (start[0], start[1]), cap)
    print(json.dumps(behavior.to_dict()))
    return EXIT_OK


def _cmd_fibs_sweep(args, config: dict) -> int:
    max_digits = (
        args.max_digits
        if args.max_digits is not None
        else int(config.get("max_digits", 8))
    )
    cap = args.cap if args.cap is not None else config.get("cap")
    summary = fibs.exhaustive_classification(args.mode, max_digits, cap)
    print(summary.to_csv())
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = catalog.verify_bfile(args.name, args.bfile)
    if args.json:
        print(json.dumps(report.to_dict()))
    elif report.ok:
        print(f"{report.name}: {report.matched} of {report.compared} terms match")
    else:
        m = report.mismatch
        expected = "nothing generated" if m.expected is None else m.expected
        print(
            f"{report.name}: mismatch at index {m.index}: "
            f"expected {expected}, file has {m.found} "
            f"({report.matched} of {report.compared} match)"
        )
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = _load_config(args.config)
    try:
        if args.command == "encode":
            return _cmd_encode(args)
        if args.command == "decode":
            return _cmd_decode(args)
        if args.command == "seq":
            return _cmd_seq(args, config)
        if args.command == "tree":
            return _cmd_tree(args)
        if args.command == "divtest":
            return _cmd_divtest(args)
        if args.command == "fibs":
            if args.fibs_command == "classify":
                return _cmd_fibs_classify(args, config)
            return _cmd_fibs_sweep(args, config)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "serve":
            return _cmd_serve(args)
        parser.error(f"unknown command {args.command}")
    except fibs.CapExceeded as exc:
        print(f"sesqui: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (
        catalog.UnknownSequence,
        catalog.ParseError,
        catalog.NonMonotonicIndex,
        OSError,
        ValueError,
    ) as exc:
        message = exc.args[0] if isinstance(exc, catalog.UnknownSequence) else exc
        print(f"sesqui: {message}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
