"""Command-line front end.

stdout carries data only, diagnostics go to stderr.  Exit status is 0 on
success, 1 on usage errors (bad flags, malformed compositions, failed
selftest) and 2 when an enumeration budget or oracle guard refuses the job.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from . import __version__
from .characters import char_V, character_table, decompose_sl3, weight_diagram_export
from .compositions import Composition, CompositionError, diagram_of, enumerate_compositions, parse_tuple
from .emc import InstanceTooLarge, column_costs, containment_grid, emc_by, emc_rsk, unimodal_symdiff, weight_grid
from .qseries import GENFUN_VARS, distribution_from_genfun, genfun_H
from .statistics import DEFAULT_BUDGET, BudgetExceeded, emc_vs_d_table, proportion_emc_eq_absd

EXIT_OK, EXIT_USAGE, EXIT_GUARD = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _write_rows(out, header, rows):
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def cmd_emc(args, out):
    tuple_ = parse_tuple(args.tuple)
    if len(tuple_) < 2:
        raise UsageError("--tuple needs at least two compositions separated by ';'")
    value = emc_by(tuple_, args.method)
    if args.explain:
        costs = column_costs(tuple_)
        out.write("column costs: " + ",".join(str(c) for _, c in costs) + "\n")
        for col, c in costs:
            out.write(f"C({','.join(map(str, col))}) = {c}\n")
        diagrams = [diagram_of(c) for c in tuple_]
        out.write("containment counts (top row first):\n")
        for row in containment_grid(diagrams):
            out.write(" ".join(map(str, row)) + "\n")
        out.write("cell weights min(k, d-k):\n")
        for row in weight_grid(diagrams):
            out.write(" ".join(map(str, row)) + "\n")
        out.write(f"rsk = {emc_rsk(tuple_)}, symdiff = {unimodal_symdiff(diagrams)}\n")
    out.write(f"{value}\n")


def cmd_enumerate(args, out):
    for c in enumerate_compositions(args.s, args.n):
        out.write(f"{c}\n")


def cmd_distribution(args, out):
    if args.source == "genfun":
        if args.d != 2:
            raise UsageError("--source genfun only supports --d 2")
        table = distribution_from_genfun(args.s, args.n)
    else:
        table = emc_vs_d_table(args.s, args.n, args.d, budget=args.budget)
    if args.d_only:
        table = table.marginal()
    out.write(table.to_json() + "\n" if args.format == "json" else table.to_csv())


def cmd_genfun(args, out):
    if args.coeff_of_t is not None and args.coeff_of_t > args.tmax:
        raise UsageError("--coeff-of-t must not exceed --tmax")
    series = genfun_H(args.n, args.m, args.tmax)
    degrees = [args.coeff_of_t] if args.coeff_of_t is not None else range(series.tmax + 1)
    if args.format == "json":
        if args.coeff_of_t is not None:
            payload = series[args.coeff_of_t].to_json(GENFUN_VARS)
        else:
            payload = {"n": args.n, "m": args.m, "tmax": args.tmax,
                       "coefficients": [series[k].to_json(GENFUN_VARS) for k in degrees]}
        out.write(json.dumps(payload, indent=2) + "\n")
    elif args.coeff_of_t is not None:
        out.write(series[args.coeff_of_t].to_text(GENFUN_VARS) + "\n")
    else:
        for k in degrees:
            out.write(f"t^{k}: {series[k].to_text(GENFUN_VARS)}\n")


def _weight_rows(source, d, cartesian, count_key="count"):
    rows = weight_diagram_export(source, cartesian=cartesian)
    if cartesian and d > 4:
        raise UsageError("--cartesian is only available for d <= 4")
    coord_names = ["px", "py", "pz"][: d - 1] if cartesian else []
    header = [f"w{i + 1}" for i in range(d - 1)] + [count_key] + coord_names
    flat = [list(r["w"]) + [r["count"]] + (list(r["xy"]) if cartesian else []) for r in rows]
    return header, flat


def cmd_character(args, out):
    ch = char_V(args.s, args.n, args.d)
    if args.format == "json":
        payload = {"s": args.s, "n": args.n, "d": args.d,
                   "total": str(ch.total()),
                   **ch.to_json([f"x{i + 1}" for i in range(args.d - 1)])}
        if args.cartesian:
            payload["points"] = [
                {"w": list(r["w"]), "count": str(r["count"]), "xy": list(r["xy"])}
                for r in weight_diagram_export(ch)
            ]
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        header, rows = _weight_rows(ch, args.d, args.cartesian)
        _write_rows(out, header, rows)


def cmd_decompose(args, out):
    decomposition = decompose_sl3(char_V(args.s, args.n, 3))
    if args.format == "json":
        payload = {"s": args.s, "n": args.n,
                   "highest_weights": [{"w": list(w), "mult": str(m)} for w, m in decomposition.items()]}
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        source = character_table(_as_poly(decomposition), args.s, args.n)
        header, rows = _weight_rows(source, 3, args.cartesian, count_key="mult")
        _write_rows(out, header, rows)


def _as_poly(decomposition):
    from .laurent import LaurentPolynomial

    return LaurentPolynomial(decomposition, 2)


def cmd_proportion(args, out):
    value = proportion_emc_eq_absd(args.s, args.n)
    out.write(f"{value}\n{float(value):.12f}\n")


def _random_composition(rng, s, n):
    cuts = sorted(rng.randint(0, s) for _ in range(n - 1))
    bounds = [0] + cuts + [s]
    return Composition(tuple(b - a for a, b in zip(bounds, bounds[1:])))


def cmd_selftest(args, out):
    rng = random.Random(args.seed)
    for k in range(args.samples):
        s = rng.randint(0, args.max_s)
        n = rng.randint(1, args.max_n)
        d = rng.randint(2, args.max_d)
        tuple_ = tuple(_random_composition(rng, s, n) for _ in range(d))
        a, b = emc_rsk(tuple_), emc_by(tuple_, "symdiff")
        if a != b:
            sys.stderr.write(f"mismatch at sample {k}: {';'.join(map(str, tuple_))} rsk={a} symdiff={b}\n")
            return EXIT_USAGE
    out.write(f"ok {args.samples} samples (seed {args.seed})\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="emc-young", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("emc", help="earth mover's coefficient of a tuple of compositions")
    p.add_argument("--tuple", required=True, help='e.g. "4,1,1,0,0;3,0,0,0,3"')
    p.add_argument("--method", choices=["symdiff", "rsk", "transport", "prefix"], default="symdiff")
    p.add_argument("--explain", action="store_true", help="print per-column costs and per-cell weights")
    p.set_defaults(func=cmd_emc)

    p = sub.add_parser("enumerate", help="list C(s, n) in lexicographic order")
    p.add_argument("--s", type=_nonneg, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("distribution", help="exhaustive (D, EMC) counts over C(s, n)^d")
    p.add_argument("--s", type=_nonneg, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--d", type=int, choices=range(2, 9), default=2, metavar="D")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--source", choices=["enumerate", "genfun"], default="enumerate")
    p.add_argument("--d-only", action="store_true", help="sum out the EMC column")
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("genfun", help="coefficients of the generating function H[n, m]")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--tmax", type=_nonneg, required=True)
    p.add_argument("--coeff-of-t", type=_nonneg)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("character", help="sl_d character of the tensor power, i.e. the D-distribution")
    p.add_argument("--s", type=_nonneg, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--d", type=int, choices=range(2, 9), default=3, metavar="D")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--cartesian", action="store_true", help="add plot coordinates (d <= 4)")
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("decompose", help="sl3 virtual decomposition by highest weight")
    p.add_argument("--s", type=_nonneg, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--cartesian", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("proportion", help="exact share of pairs with EMC = |D|")
    p.add_argument("--s", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_proportion)

    p = sub.add_parser("selftest", help="randomized check that the RSK and diagram routes agree")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=_positive, default=10_000)
    p.add_argument("--max-s", type=_nonneg, default=8)
    p.add_argument("--max-n", type=_positive, default=8)
    p.add_argument("--max-d", type=int, default=5)
    p.set_defaults(func=cmd_selftest)
    return parser


def _fail(kind, message, status):
    sys.stderr.write(json.dumps({"error": kind, "message": str(message)}) + "\n")
    return status


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return _fail("usage", exc, EXIT_USAGE)
    buf = io.StringIO()
    try:
        status = args.func(args, buf)
    except (UsageError, CompositionError, ValueError) as exc:
        return _fail("usage", exc, EXIT_USAGE)
    except (BudgetExceeded, InstanceTooLarge) as exc:
        return _fail("guard", exc, EXIT_GUARD)
    out.write(buf.getvalue())
    return status or EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
