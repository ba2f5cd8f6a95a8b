"""Command-line surface: counting, listing, bijection traces, series expansion,
and the verification sweep.

Exit codes: 0 success, 1 verification failure, 2 usage error.  The verify
subcommand writes one JSON line per report to stdout followed by an aggregate
summary object; diagnostics go to stderr.  CSV columns for tabular commands
are documented in each subcommand's --help.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import verify
from .bijections import bijection_trace, pi_to_lambda
from .partitions import (
    FrobeniusSymbol,
    count_by_blocks,
    count_by_columns,
    count_exact,
    iter_frobenius_symbols,
    parity_blocks,
)
from .posets import PosetPartition, build_s_beta
from .qseries import (
    SIGNS,
    euler_inverse,
    qbinomial,
    series_by_blocks,
    series_by_columns,
    series_exact,
)


@dataclass
class CliConfig:
    """Defaults for every command; flags override, nothing else does (except an
    optional parallelism override via the RANKBLOCKS_JOBS variable)."""

    precision: int = 40
    max_n: int = 30
    max_d: int = 5
    max_m: int = 5
    max_s: int = 6
    output: str = "text"
    jobs: int = 1

    def __post_init__(self):
        if self.precision < 1 or min(self.max_n, self.max_d, self.max_m, self.max_s) < 1:
            raise ValueError("precision and grid bounds must be >= 1")


DEFAULTS = CliConfig()


def _render_symbol(f: FrobeniusSymbol) -> str:
    """Two rows with a vertical bar between parity blocks, e.g. (3 | 2 1 / 5 | 1 0)."""
    sizes = parity_blocks(f).sizes
    cuts = set()
    acc = 0
    for size in sizes[:-1]:
        acc += size
        cuts.add(acc)

    def row(entries):
        out = []
        for i, x in enumerate(entries, start=1):
            out.append(str(x))
            if i in cuts:
                out.append("|")
        return " ".join(out)

    return f"({row(f.top)} / {row(f.bottom)})"


def _parse_symbol(text: str) -> FrobeniusSymbol:
    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        return FrobeniusSymbol.from_json_dict(data)
    if "/" not in text:
        raise ValueError("inline symbol must look like '3 2 1 / 5 1 0'")
    top_text, bottom_text = text.strip("() \t").split("/", 1)
    parse_row = lambda s: tuple(int(tok) for tok in s.replace("|", " ").split())
    return FrobeniusSymbol(parse_row(top_text), parse_row(bottom_text))


def _emit(args, payload, text_lines, csv_rows=None):
    if args.format == "json":
        print(json.dumps(payload))
    elif args.format == "csv" and csv_rows is not None:
        for row in csv_rows:
            print(",".join(str(x) for x in row))
    else:
        for line in text_lines:
            print(line)


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------


def _cmd_count(args, parser):
    mode = args.mode
    if mode == "exact":
        if args.d is None or args.m is None:
            parser.error("mode 'exact' needs --d and --m")
        value = count_exact(args.n, args.d, args.m, args.sign)
    elif mode == "by-blocks":
        if args.m is None:
            parser.error("mode 'by-blocks' needs --m")
        value = count_by_blocks(args.n, args.m, args.sign)
    else:
        if args.d is None:
            parser.error("mode 'by-columns' needs --d")
        value = count_by_columns(args.n, args.d, args.sign)
    payload = {"mode": mode, "n": args.n, "d": args.d, "m": args.m,
               "sign": args.sign, "count": value}
    _emit(args, payload, [str(value)],
          [("mode", "n", "d", "m", "sign", "count"),
           (mode, args.n, args.d, args.m, args.sign, value)])
    return 0


def _cmd_list(args, parser):
    wanted = "P" if args.sign == "plus" else "N"
    symbols = []
    for f in iter_frobenius_symbols(args.n, args.d):
        pb = parity_blocks(f)
        if pb.m == args.m and pb.last_sign == wanted:
            symbols.append((f, pb))
    payload = [dict(f.to_json_dict(), blocks=pb.to_json_dict()) for f, pb in symbols]
    text = [_render_symbol(f) for f, _ in symbols]
    if args.format == "json":
        print(json.dumps(payload))
    elif args.format == "csv":
        print("top,bottom,sizes,signs")
        for f, pb in symbols:
            print('"{}","{}","{}",{}'.format(
                " ".join(map(str, f.top)), " ".join(map(str, f.bottom)),
                " ".join(map(str, pb.sizes)), pb.sign_word))
    else:
        for line in text:
            print(line)
    return 0


def _cmd_biject(args, parser):
    symbol = _parse_symbol(args.symbol)
    trace = bijection_trace(symbol, args.sign)
    if args.invert:
        pi_stage = trace[-1]
        sign = trace[0]["sign"]
        structure = build_s_beta(pi_stage["beta"])
        pi = PosetPartition.from_rows(structure, pi_stage["rows"])
        recovered = pi_to_lambda(pi, sign)
        trace.append({"stage": "lambda_roundtrip",
                      "top": list(recovered.top), "bottom": list(recovered.bottom),
                      "weight": recovered.size,
                      "matches_input": recovered == symbol})
        if not trace[-1]["matches_input"]:
            print("round trip failed to reproduce the input symbol", file=sys.stderr)
            print(json.dumps(trace, indent=None))
            return 1
    if args.format == "json":
        print(json.dumps(trace))
    else:
        for stage in trace:
            print(json.dumps(stage))
    return 0


def _cmd_series(args, parser):
    target = args.target
    precision = args.precision
    if target == "thm-main":
        if args.d is None or args.m is None:
            parser.error("target 'thm-main' needs --d and --m")
        series = series_exact(args.d, args.m, args.sign,
                              precision if precision is not None else DEFAULTS.precision)
    elif target == "thm-1.2":
        if args.m is None:
            parser.error("target 'thm-1.2' needs --m")
        series = series_by_blocks(args.m, args.sign,
                                  precision if precision is not None else DEFAULTS.precision)
    elif target == "thm-1.4":
        if args.d is None:
            parser.error("target 'thm-1.4' needs --d")
        series = series_by_columns(args.d, args.sign,
                                   precision if precision is not None else DEFAULTS.precision)
    elif target == "euler-inverse":
        series = euler_inverse(precision if precision is not None else DEFAULTS.precision)
    else:  # qbinomial
        if args.n is None or args.k is None:
            parser.error("target 'qbinomial' needs --n and --k")
        series = qbinomial(args.n, args.k, precision)
    payload = series.to_json_dict()
    _emit(args, payload, [",".join(str(c) for c in series.coeffs)],
          [("exponent", "coefficient")] + [(k, c) for k, c in enumerate(series.coeffs)])
    return 0


def _cmd_verify(args, parser):
    wanted = []
    for chunk in args.targets:
        wanted.extend(t for t in chunk.split(",") if t)
    overrides = {k: getattr(args, k) for k in ("d", "m", "s", "t", "r", "sign")
                 if getattr(args, k) is not None}
    config_kwargs = {}
    if args.precision is not None:
        config_kwargs["precision"] = args.precision
    if args.max_d is not None:
        config_kwargs["max_d"] = args.max_d
        config_kwargs["relations_max_d"] = min(args.max_d, 4)
    if args.max_m is not None:
        config_kwargs["max_m"] = args.max_m
    if args.max_s is not None:
        config_kwargs["max_s"] = args.max_s
    if args.max_n is not None:
        config_kwargs["prefix_precision"] = args.max_n
        config_kwargs["relations_precision"] = args.max_n
        config_kwargs["unity_precision"] = args.max_n
    config = verify.GridConfig(**config_kwargs)
    jobs = args.jobs or int(os.environ.get("RANKBLOCKS_JOBS", "1"))
    try:
        reports = verify.run_reports(wanted or "all", config, overrides, jobs=jobs)
    except ValueError as exc:
        parser.error(str(exc))
    failures = 0
    for report in reports:
        print(json.dumps(report.to_json_dict()))
        if not report.passed:
            failures += 1
    summary = {"summary": {"total": len(reports), "passed": len(reports) - failures,
                           "failed": failures}}
    print(json.dumps(summary))
    print(f"verify: {len(reports) - failures}/{len(reports)} checks passed",
          file=sys.stderr)
    return 0 if failures == 0 else 1


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankblocks",
        description="Exact enumeration of partitions by successive-rank parity "
                    "blocks, with closed-form verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json", "csv"),
                       default=DEFAULTS.output, help="output format")

    p_count = sub.add_parser("count", help="count partitions by columns/blocks/sign")
    p_count.add_argument("--n", type=int, required=True)
    p_count.add_argument("--d", type=int)
    p_count.add_argument("--m", type=int)
    p_count.add_argument("--sign", choices=SIGNS, required=True)
    p_count.add_argument("--mode", choices=("exact", "by-blocks", "by-columns"),
                         default="exact")
    add_format(p_count)

    p_list = sub.add_parser(
        "list", help="list the Frobenius symbols behind an exact count "
                     "(CSV columns: top,bottom,sizes,signs)")
    p_list.add_argument("--n", type=int, required=True)
    p_list.add_argument("--d", type=int, required=True)
    p_list.add_argument("--m", type=int, required=True)
    p_list.add_argument("--sign", choices=SIGNS, required=True)
    add_format(p_list)

    p_biject = sub.add_parser("biject", help="trace a symbol through the "
                                             "weight-controlled chain")
    p_biject.add_argument("--symbol", required=True,
                          help="JSON {\"top\": [...], \"bottom\": [...]} or "
                               "inline '3 2 1 / 5 1 0'")
    p_biject.add_argument("--sign", choices=SIGNS,
                          help="defaults to the sign of the last parity block")
    p_biject.add_argument("--invert", action="store_true",
                          help="also run the inverse chain and check the round trip")
    add_format(p_biject)

    p_series = sub.add_parser("series", help="print coefficients of a closed form "
                                             "(CSV columns: exponent,coefficient)")
    p_series.add_argument("--target", required=True,
                          choices=("thm-main", "thm-1.2", "thm-1.4",
                                   "euler-inverse", "qbinomial"))
    p_series.add_argument("--d", type=int)
    p_series.add_argument("--m", type=int)
    p_series.add_argument("--n", type=int)
    p_series.add_argument("--k", type=int)
    p_series.add_argument("--sign", choices=SIGNS, default="plus")
    p_series.add_argument("--precision", type=int)
    add_format(p_series)

    p_verify = sub.add_parser("verify", help="run verification targets "
                                             "(JSON lines + summary on stdout)")
    p_verify.add_argument("--targets", nargs="+", default=["all"],
                          help="target names or 'all': " + ", ".join(verify.TARGETS))
    p_verify.add_argument("--precision", type=int)
    p_verify.add_argument("--max-n", dest="max_n", type=int)
    p_verify.add_argument("--max-d", dest="max_d", type=int)
    p_verify.add_argument("--max-m", dest="max_m", type=int)
    p_verify.add_argument("--max-s", dest="max_s", type=int)
    p_verify.add_argument("--d", type=int)
    p_verify.add_argument("--m", type=int)
    p_verify.add_argument("--s", type=int)
    p_verify.add_argument("--t", type=int)
    p_verify.add_argument("--r", type=int)
    p_verify.add_argument("--sign", choices=SIGNS)
    p_verify.add_argument("--jobs", type=int, default=None,
                          help="parallel target sweeps (default 1; results are "
                               "emitted in canonical order either way)")
    return parser


_HANDLERS = {
    "count": _cmd_count,
    "list": _cmd_list,
    "biject": _cmd_biject,
    "series": _cmd_series,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args, parser)
    except ValueError as exc:
        parser.error(str(exc))
        return 2  # unreachable; parser.error raises SystemExit(2)


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
