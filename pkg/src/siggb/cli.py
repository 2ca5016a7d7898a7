"""Command-line interface.

Examples::

    siggb --system cyclic-4 --variant all --verify
    siggb --system katsura-5 --variant f5a-i --output json
    siggb --system file:input.txt --variant ggv --output csv
    siggb --seed-random n=3,deg=2,count=3,seed=7 --variant all --verify

Exit status: 0 on success, 1 if verification found a mismatch, 2 on bad
input (unknown system, malformed file, bad flags).
"""

from __future__ import annotations

import argparse
import re
import sys

from .bench import report_csv, report_json, report_text, run_bench
from .engine import VARIANTS
from .systems import (
    DEFAULT_CHAR,
    ParseError,
    gen_cyclic,
    gen_eco,
    gen_katsura,
    gen_random,
    homogenize,
    parse_system,
)

_FAMILIES = {"cyclic": gen_cyclic, "katsura": gen_katsura, "eco": gen_eco}
_SYSTEM_RE = re.compile(r"^(cyclic|katsura|eco)-(\d+)$")
_RANDOM_KEYS = ("n", "deg", "count", "seed")


class InputError(Exception):
    pass


def _parse_seed_random(text):
    params = {}
    for part in text.split(","):
        key, sep, value = part.partition("=")
        key = key.strip()
        if not sep or key not in _RANDOM_KEYS:
            raise InputError(f"--seed-random expects n=,deg=,count=,seed= (got {part.strip()!r})")
        try:
            params[key] = int(value)
        except ValueError:
            raise InputError(f"--seed-random value for {key!r} is not an integer") from None
    missing = [k for k in _RANDOM_KEYS if k not in params]
    if missing:
        raise InputError(f"--seed-random is missing {', '.join(missing)}")
    return params


def _build_system(args):
    if args.seed_random and args.system:
        raise InputError("give either --system or --seed-random, not both")
    if args.seed_random:
        params = _parse_seed_random(args.seed_random)
        try:
            spec = gen_random(params["n"], params["deg"], params["count"],
                              params["seed"], char=args.char)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    elif args.system:
        if args.system.startswith("file:"):
            path = args.system[len("file:"):]
            try:
                with open(path, encoding="utf-8") as handle:
                    text = handle.read()
            except OSError as exc:
                raise InputError(f"cannot read {path}: {exc}") from None
            spec = parse_system(text)
        else:
            match = _SYSTEM_RE.match(args.system)
            if not match:
                raise InputError(
                    f"unknown system {args.system!r}; expected cyclic-N, "
                    "katsura-N, eco-N or file:PATH")
            family, n = match.group(1), int(match.group(2))
            try:
                spec = _FAMILIES[family](n, char=args.char)
            except ValueError as exc:
                raise InputError(str(exc)) from None
    else:
        raise InputError("one of --system or --seed-random is required")
    if args.homogenize:
        spec = homogenize(spec)
    return spec


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="siggb",
        description="Incremental signature-based Groebner basis computation "
                    "over prime fields, with six selectable criterion variants "
                    "and a classical Buchberger verifier.")
    parser.add_argument("--system",
                        help="cyclic-N, katsura-N, eco-N, or file:PATH")
    parser.add_argument("--homogenize", action="store_true",
                        help="homogenize the system with a fresh last variable")
    parser.add_argument("--char", type=int, default=DEFAULT_CHAR,
                        help="field characteristic for generated systems "
                             "(default %(default)s; file input carries its own)")
    parser.add_argument("--variant", required=True,
                        choices=sorted(VARIANTS) + ["all"],
                        help="criterion variant to run, or 'all'")
    parser.add_argument("--verify", action="store_true",
                        help="check each basis against a classical computation")
    parser.add_argument("--output", choices=["json", "csv", "text"],
                        default="text", help="report format (default text)")
    parser.add_argument("--pair-limit", type=int, default=None,
                        help="abort a run after this many generated pairs")
    parser.add_argument("--seed-random", metavar="n=N,deg=D,count=C,seed=S",
                        help="run on a reproducible random system instead of "
                             "a named one")
    args = parser.parse_args(argv)

    try:
        spec = _build_system(args)
    except (InputError, ParseError) as exc:
        print(f"siggb: {exc}", file=sys.stderr)
        return 2

    variants = sorted(VARIANTS) if args.variant == "all" else [args.variant]
    reports = run_bench(spec, variants, verify=args.verify,
                        pair_limit=args.pair_limit)

    char = spec.ring.field.p
    if args.output == "json":
        print(report_json(reports, char))
    elif args.output == "csv":
        print(report_csv(reports, char), end="")
    else:
        print(report_text(reports, char), end="")

    if any(r.verified is False for r in reports):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
