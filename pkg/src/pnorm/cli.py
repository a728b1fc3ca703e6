"""Command-line interface.

Usage::

    pnorm moments --ell 1 --n 5 --format plain
    pnorm moments --ell 1 --from 600 --to 602 --format csv
    pnorm max-norm --from 2 --to 12
    pnorm constants --ell-max 10 --digits 3
    pnorm verify --nmax 25 --ell-max 3
    pnorm dispersion --from 50 --to 300 --step 50

Exit codes: 0 success, 1 I/O or precision failure, 2 usage error,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from decimal import ROUND_DOWN, ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

import mpmath
from mpmath import mp

from .constants import ConstantRequest, DEFAULT_PREC_BITS, asymptotic_constant
from .convergence import convergence_table, dispersion, predicted_moment
from .errors import CacheError, PnormError
from .exact_core import norm
from .extremes import max_norm
from .oracle import brute_max_norm, enumerate_partitions
from .series import SeriesCache, WeightSpec, expand_euler_product, partition_numbers

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3
VERIFY_NMAX_LIMIT = 40
PLAIN_ABBREV_DIGITS = 40
DEFAULT_CACHE_DIR = ".pnorm-cache"

MOMENT_COLUMNS = [
    "n", "ell", "S", "p", "moment_exact", "moment_decimal", "scaled", "constant", "rel_dev",
]


# -- number rendering ----------------------------------------------------------


def mpf_to_decimal(x: mpmath.mpf) -> Decimal:
    """Exact decimal expansion of a binary floating-point value."""
    sign, man, exp, _ = x._mpf_
    if not man:
        return Decimal(0)
    if exp >= 0:
        s = str(man << exp)
    else:
        s = f"{man * 5 ** (-exp)}E{exp}"
    return Decimal(("-" if sign else "") + s)


def fixed(x: mpmath.mpf, places: int, truncate: bool = False) -> str:
    """Render ``x`` with ``places`` decimals, round-half-even unless ``truncate``."""
    d = mpf_to_decimal(x)
    with localcontext() as ctx:
        ctx.prec = max(50, len(d.as_tuple().digits) + places + 5)
        q = d.quantize(Decimal(1).scaleb(-places), ROUND_DOWN if truncate else ROUND_HALF_EVEN)
    return f"{q:f}"


def sig(x, digits: int) -> str:
    if isinstance(x, Fraction):
        with mp.workprec(max(64, int(digits * 3.33) + 16)):
            x = mpmath.mpf(x.numerator) / x.denominator
    return mpmath.nstr(x, digits)


def abbreviate(text: str) -> str:
    """Shorten integers (and fractions of integers) beyond the plain-format limit."""
    if "/" in text:
        return "/".join(abbreviate(t) for t in text.split("/"))
    digits = text.lstrip("-")
    if digits.isdigit() and len(digits) > PLAIN_ABBREV_DIGITS:
        return f"{text[:20]}…({len(digits)} digits)"
    return text


def fraction_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def render(rows: list[dict], columns: list[str], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    cells = [columns] + [[abbreviate(str(r[c])) for c in columns] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    lines = ["  ".join(v.rjust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


# -- commands --------------------------------------------------------------------


def _n_range(args, parser):
    if args.n is not None:
        if args.n < 0:
            parser.error("--n must be non-negative")
        return range(args.n, args.n + 1)
    if args.n_from is None or args.n_to is None:
        parser.error("give --n or both --from and --to")
    if not 0 <= args.n_from <= args.n_to:
        parser.error("need 0 <= --from <= --to")
    if args.step < 1:
        parser.error("--step must be >= 1")
    return range(args.n_from, args.n_to + 1, args.step)


def _cache(args) -> SeriesCache:
    if args.no_cache:
        return SeriesCache()
    directory = args.cache_dir or os.environ.get("PNORM_CACHE_DIR") or DEFAULT_CACHE_DIR
    return SeriesCache(directory)


def cmd_moments(args, parser, out):
    if args.ell < 1:
        parser.error("--ell must be >= 1")
    ns = _n_range(args, parser)
    cache = _cache(args)
    records = convergence_table(args.ell, ns.start, ns.stop - 1, ns.step, args.digits, cache)
    columns = list(MOMENT_COLUMNS)
    if args.predicted:
        columns.append("predicted_moment")
    rows = []
    for rec in records:
        row = {
            "n": rec.n,
            "ell": rec.ell,
            "S": str(rec.S),
            "p": str(rec.p),
            "moment_exact": fraction_str(rec.moment),
            "moment_decimal": sig(rec.moment, args.digits),
            "scaled": sig(rec.scaled, args.digits),
            "constant": sig(rec.constant, args.digits),
            "rel_dev": sig(rec.rel_dev, args.digits),
        }
        if args.predicted:
            if rec.n < 2:
                row["predicted_moment"] = ""
            else:
                pm = predicted_moment(
                    args.ell, rec.n, args.digits,
                    use_hardy_ramanujan=args.predicted == "hardy-ramanujan", cache=cache,
                )
                row["predicted_moment"] = sig(pm, args.digits)
        rows.append(row)
    out.write(render(rows, columns, args.format))
    return EXIT_OK


def cmd_max_norm(args, parser, out):
    rows = []
    for n in _n_range(args, parser):
        res = max_norm(n)
        rows.append({"n": n, "max_norm": str(res.value), "witness": str(res.witness)})
    out.write(render(rows, ["n", "max_norm", "witness"], args.format))
    return EXIT_OK


def cmd_constants(args, parser, out):
    if args.ell_max < 1:
        parser.error("--ell-max must be >= 1")
    if args.digits < 1:
        parser.error("--digits must be >= 1")
    rows = []
    for ell in range(1, args.ell_max + 1):
        row = {"ell": ell}
        for n0 in (1, 2, 3):
            req = ConstantRequest(ell, n0, args.digits + 8, prec_bits=args.prec_bits)
            row[f"c{n0}"] = fixed(asymptotic_constant(req), args.digits, args.truncate)
        rows.append(row)
    out.write(render(rows, ["ell", "c1", "c2", "c3"], args.format))
    return EXIT_OK


def cmd_verify(args, parser, out):
    if not 0 <= args.nmax <= VERIFY_NMAX_LIMIT:
        parser.error(f"--nmax must be between 0 and {VERIFY_NMAX_LIMIT}")
    if args.ell_max < 1:
        parser.error("--ell-max must be >= 1")
    N, L = args.nmax, args.ell_max
    cache = _cache(args)
    failures = []

    def report(name, failure):
        out.write(f"{'FAIL' if failure else 'PASS'} {name}" + (f": {failure}" if failure else "") + "\n")
        if failure:
            failures.append(failure)

    series = {ell: cache.get(WeightSpec.norm_power(ell), N) for ell in range(1, L + 1)}
    failure = None
    for n in range(N + 1):
        norms = [norm(lam) for lam in enumerate_partitions(n)]
        for ell in range(1, L + 1):
            oracle = sum(v**ell for v in norms)
            if series[ell][n] != oracle:
                failure = f"ell={ell}, n={n}: series {series[ell][n]} != oracle {oracle}"
                break
        if failure:
            break
    report(f"series-vs-oracle (ell<={L}, n<={N})", failure)

    failure = None
    for n in range(N + 1):
        formula, (oracle, _) = max_norm(n).value, brute_max_norm(n)
        if formula != oracle:
            failure = f"n={n}: formula {formula} != oracle {oracle}"
            break
    report(f"max-norm-vs-oracle (n<={N})", failure)

    failure = None
    pent, prod = partition_numbers(N), expand_euler_product(WeightSpec.unit(), N)
    for n in range(N + 1):
        if pent[n] != prod[n]:
            failure = f"n={n}: pentagonal {pent[n]} != product {prod[n]}"
            break
    report(f"pentagonal-vs-product (n<={N})", failure)

    if failures:
        print(f"pnorm verify: first mismatch at {failures[0]}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_dispersion(args, parser, out):
    ns = _n_range(args, parser)
    if ns.start < 1:
        parser.error("dispersion needs n >= 1")
    cache = _cache(args)
    rows = []
    for n in ns:
        var, cv2 = dispersion(n, cache)
        rows.append({
            "n": n,
            "variance": sig(var, args.digits),
            "cv2": sig(cv2, args.digits),
            "variance_exact": fraction_str(var),
            "cv2_exact": fraction_str(cv2),
        })
    out.write(render(rows, ["n", "variance", "cv2", "variance_exact", "cv2_exact"], args.format))
    return EXIT_OK


# -- argument parsing --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["plain", "csv", "json"], default="plain")

    cached = argparse.ArgumentParser(add_help=False)
    cached.add_argument("--cache-dir", help=f"series cache directory (default $PNORM_CACHE_DIR or {DEFAULT_CACHE_DIR})")
    cached.add_argument("--no-cache", action="store_true", help="recompute everything, touch no files")

    ranged = argparse.ArgumentParser(add_help=False)
    ranged.add_argument("--n", type=int)
    ranged.add_argument("--from", dest="n_from", type=int)
    ranged.add_argument("--to", dest="n_to", type=int)
    ranged.add_argument("--step", type=int, default=1)

    parser = argparse.ArgumentParser(prog="pnorm", description="Statistics of the partition norm.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moments", parents=[common, cached, ranged],
                       help="exact moments and their asymptotic comparison")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--digits", type=int, default=12, help="significant digits of decimal columns")
    p.add_argument("--predicted", choices=["exact-p", "hardy-ramanujan"],
                   help="append the asymptotic prediction of the moment")
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("max-norm", parents=[common, ranged], help="maximum norm and a witness")
    p.set_defaults(func=cmd_max_norm)

    p = sub.add_parser("constants", parents=[common], help="table of asymptotic constants")
    p.add_argument("--ell-max", type=int, default=10)
    p.add_argument("--digits", type=int, default=3, help="decimal places")
    p.add_argument("--truncate", action="store_true", help="truncate instead of rounding half-even")
    p.add_argument("--prec-bits", type=int, default=DEFAULT_PREC_BITS)
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("verify", parents=[cached], help="cross-check exact routes against brute force")
    p.add_argument("--nmax", type=int, default=25)
    p.add_argument("--ell-max", type=int, default=3)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dispersion", parents=[common, cached, ranged],
                       help="variance and squared dispersion ratio of the norm")
    p.add_argument("--digits", type=int, default=12)
    p.set_defaults(func=cmd_dispersion)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    # per-command parser so usage errors show the right synopsis
    subparser = parser._subparsers._group_actions[0].choices[args.command]
    try:
        return args.func(args, subparser, out)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except CacheError as exc:
        print(f"pnorm: cache error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"pnorm: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except PnormError as exc:
        print(f"pnorm: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
