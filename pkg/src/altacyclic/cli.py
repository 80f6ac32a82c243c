"""Command-line front end: ``altacyclic <command> ...``.

Exit status is 0 on success, 1 when ``verify`` finds a failing check and 2 for
usage errors or invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Iterable, Optional, Sequence

from . import arrangement, bijections, enumeration, forest, numbers, series, verify
from .errors import AltacyclicError
from .forest import BiorderedCode
from .tournament import Tournament, is_alt_acyclic, is_semiacyclic

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_SEED = 20240101


class UsageError(Exception):
    pass


# -- input parsing -------------------------------------------------------------


def _ints(text: str) -> tuple[int, ...]:
    text = text.translate(str.maketrans("[],", "   "))
    try:
        return tuple(int(tok) for tok in text.split())
    except ValueError as exc:
        raise UsageError(f"expected a list of integers, got {text!r}") from exc


def _load_json(text: str):
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from exc


def _tournament(args) -> Tournament:
    if args.tournament is not None:
        return Tournament.from_dict(_load_json(args.tournament))
    if args.hex is not None:
        if args.n is None:
            raise UsageError("--hex needs --n")
        return Tournament.from_hex(args.n, args.hex)
    raise UsageError("give a tournament with --tournament JSON or --hex HEX --n N")


def _code(args) -> BiorderedCode:
    if args.code is None:
        raise UsageError("give a code with --code JSON")
    return BiorderedCode.from_dict(_load_json(args.code))


# -- output --------------------------------------------------------------------


class Out:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def line(self, text: str = "") -> None:
        self.stream.write(text + "\n")

    def json(self, obj) -> None:
        self.line(json.dumps(obj))

    def scalar(self, name: str, value) -> None:
        if self.fmt == "json":
            self.json({name: value})
        elif self.fmt == "csv":
            self.rows([name], [[value]])
        else:
            self.line(str(value))

    def sequence(self, values: Sequence, as_strings: bool = False) -> None:
        if self.fmt == "json":
            self.json([str(v) for v in values] if as_strings else list(values))
        elif self.fmt == "csv":
            self.rows(["index", "value"], [[k, v] for k, v in enumerate(values, start=1)])
        else:
            self.line(" ".join(str(v) for v in values))

    def rows(self, header: Sequence[str], rows: Iterable[Sequence]) -> None:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        self.stream.write(buf.getvalue())

    def record(self, obj: dict) -> None:
        if self.fmt == "plain":
            for key, value in obj.items():
                self.line(f"{key}: {json.dumps(value) if isinstance(value, (list, dict)) else value}")
        elif self.fmt == "csv":
            self.rows(list(obj), [[json.dumps(v) if isinstance(v, (list, dict)) else v for v in obj.values()]])
        else:
            self.json(obj)


# -- commands ------------------------------------------------------------------

COUNT_METHODS = {
    "alt-acyclic": {
        "brute": lambda n, w: enumeration.count_report(n, w).alt_acyclic,
        "formula": lambda n, w: numbers.median_genocchi(n),
        "table": lambda n, w: numbers.type_table(n).total(),
        "regions": lambda n, w: arrangement.region_count(n),
        "lmax": lambda n, w: sum(1 for _ in enumeration.enumerate_lmax_codes(n)),
    },
    "ascending": {
        "brute": lambda n, w: enumeration.count_report(n, w).ascending,
        "formula": lambda n, w: numbers.genocchi_first(n),
        "table": lambda n, w: sum(numbers.type_table(n)[1, j] for j in range(n)),
        "series": lambda n, w: series.genocchi_first_series(n)[-1],
    },
    "semiacyclic": {
        "brute": lambda n, w: enumeration.count_report(n, w).semiacyclic,
        "formula": lambda n, w: numbers.semiacyclic_formula(n),
    },
    "total": {
        "brute": lambda n, w: enumeration.count_report(n, w).total,
        "formula": lambda n, w: 2 ** (n * (n - 1) // 2),
    },
}


def cmd_count(args, out: Out) -> int:
    if args.kind == "report":
        report = enumeration.count_report(args.n, args.threads)
        if out.fmt == "csv":
            out.stream.write(report.to_csv())
        elif out.fmt == "json":
            out.json(report.to_dict())
        else:
            d = report.to_dict()
            for key in ("n", "total", "alt_acyclic", "ascending", "semiacyclic"):
                out.line(f"{key}: {d[key]}")
            for row in d["by_type"]:
                out.line(f"type ({args.n},{row['i']},{row['j']}): {row['count']}")
        return EXIT_OK
    methods = COUNT_METHODS[args.kind]
    if args.method not in methods:
        raise UsageError(f"method {args.method!r} is not available for {args.kind}; choose from {sorted(methods)}")
    out.scalar("count", methods[args.method](args.n, args.threads))
    return EXIT_OK


def _print_triangle(out: Out, n: int, get) -> None:
    """Rows ``j = n-1 .. 0``, columns ``i = 1..n``; cells with ``i + j > n`` left blank."""
    grid = [[str(get(i, j)) if i + j <= n else "" for i in range(1, n + 1)] for j in reversed(range(n))]
    width = max(len(c) for row in grid for c in row)
    label = max(len(str(n - 1)), 3)
    for j, row in zip(reversed(range(n)), grid):
        out.line(f"{j:>{label}} | " + " ".join(c.rjust(width) for c in row).rstrip())
    out.line("-" * label + "-+-" + "-" * ((width + 1) * n - 1))
    corner = "j\\i"
    out.line(f"{corner:>{label}} | " + " ".join(str(i).rjust(width) for i in range(1, n + 1)))


def cmd_table(args, out: Out) -> int:
    n = args.n
    if args.name == "anij":
        t = numbers.type_table(n)
        get = t.normalized if args.normalized else (lambda i, j: t[i, j])
        cells = [(i, j, get(i, j)) for j in range(n) for i in range(1, n + 1)]
        if out.fmt == "json":
            out.json({"n": n, "normalized": args.normalized, "cells": [{"i": i, "j": j, "value": v} for i, j, v in cells]})
        elif out.fmt == "csv":
            out.rows(["n", "i", "j", "value"], [(n, i, j, v) for i, j, v in cells])
        else:
            _print_triangle(out, n, lambda i, j: get(i, j))
        return EXIT_OK
    if args.name == "legendre-stirling":
        cells = [(m, k, numbers.legendre_stirling(m, k)) for m in range(1, n + 1) for k in range(1, m + 1)]
        header = ["n", "k", "value"]
    elif args.name == "eulerian":
        cells = [(m, j, numbers.eulerian(m, j)) for m in range(1, n + 1) for j in range(m)]
        header = ["n", "j", "value"]
    else:  # chi
        cells = [(n, k, list(poly.coeffs)) for k, poly in arrangement.chi_table(n).items()]
        header = ["n", "k", "coeffs"]
    if out.fmt == "json":
        out.json([dict(zip(header, c)) for c in cells])
    elif out.fmt == "csv":
        out.rows(header, [(a, b, json.dumps(v) if isinstance(v, list) else v) for a, b, v in cells])
    else:
        by_row: dict = {}
        for a, _, v in cells:
            by_row.setdefault(a, []).append(json.dumps(v) if isinstance(v, list) else str(v))
        for vals in by_row.values():
            out.line(" ".join(vals))
    return EXIT_OK


def cmd_seq(args, out: Out) -> int:
    if args.name == "eulerian":
        # triangle read by rows n = 1..terms
        values = [numbers.eulerian(n, j) for n in range(1, args.terms + 1) for j in range(n)]
    else:
        fn = numbers.SEQUENCES[args.name]
        values = [fn(n) for n in range(1, args.terms + 1)]
    out.sequence(values)
    return EXIT_OK


def cmd_classify(args, out: Out) -> int:
    t = _tournament(args)
    alt = is_alt_acyclic(t)
    record = {
        "n": t.n,
        "alt_acyclic": alt,
        "semiacyclic": is_semiacyclic(t),
        "ascending": forest.is_ascending_direct(t),
        "type": None,
    }
    if alt:
        tt = forest.type_of(t)
        record["type"] = [tt.n, tt.i, tt.j]
    out.record(record)
    return EXIT_OK


def _emit_code(out: Out, code: BiorderedCode) -> None:
    if out.fmt == "plain":
        out.line("pi: " + " ".join(map(str, code.pi)))
        out.line("p: " + " ".join("inf" if v == forest.INF else str(v) for v in code.p))
    else:
        out.record(code.to_dict())


def cmd_lmax(args, out: Out) -> int:
    _emit_code(out, forest.largest_maximal_representation(_tournament(args)))
    return EXIT_OK


def cmd_reduce(args, out: Out) -> int:
    _emit_code(out, forest.reduce(_code(args)))
    return EXIT_OK


def _emit_ints(out: Out, values: Sequence[int]) -> None:
    if out.fmt == "plain":
        out.line(" ".join(map(str, values)))
    else:
        out.sequence(values)


def cmd_encode(args, out: Out) -> int:
    if args.what == "ds":
        if args.perm is None:
            raise UsageError("encode ds needs --perm")
        _emit_ints(out, bijections.ds_encode(_ints(args.perm)))
    elif args.what == "code":
        t = _tournament(args)
        if args.pi is None:
            code = forest.largest_maximal_representation(t)
        else:
            pi = _ints(args.pi)
            code = BiorderedCode(pi, forest.decode(t, pi))
        _emit_code(out, code)
    elif args.what == "dumont":
        _emit_ints(out, bijections.ascending_code_to_dumont(_code(args)))
    else:  # pairvec
        pv = bijections.pair_vector_of_code(_code(args))
        out.record({"a": list(pv.a), "b": list(pv.b)})
    return EXIT_OK


def cmd_decode(args, out: Out) -> int:
    if args.what == "ds":
        if args.f is None:
            raise UsageError("decode ds needs --f")
        _emit_ints(out, bijections.ds_decode(_ints(args.f)))
    elif args.what == "code":
        t = forest.induce_tournament(_code(args))
        if out.fmt == "plain":
            out.line(" ".join(f"{i}->{j}" for i, j in t.edges()))
        else:
            out.record(t.to_dict())
    elif args.what == "dumont":
        if args.f is None:
            raise UsageError("decode dumont needs --f")
        _emit_code(out, bijections.dumont_to_ascending_code(_ints(args.f)))
    else:  # pairvec
        if args.a is None or args.b is None:
            raise UsageError("decode pairvec needs --a and --b")
        _emit_code(out, bijections.code_of_pair_vector(bijections.PairVectors(_ints(args.a), _ints(args.b))))
    return EXIT_OK


def _model_items(name: str, n: int, fix_i: Optional[int]):
    if name == "dumont":
        return (list(f) for f in bijections.dumont_functions(n))
    if name == "dumont-pairs":
        return ({"a": list(a), "b": list(b)} for a, b in bijections.dumont_pairs(n))
    if name == "median":
        return (list(f) for f in bijections.median_excedant_model(n, fix_i))
    if name == "pairvec":
        return ({"a": list(pv.a), "b": list(pv.b)} for pv in bijections.pair_vector_model(n, fix_i))
    return ([list(s) for s in seq] for seq in bijections.nm_model(n))


def cmd_model(args, out: Out) -> int:
    if args.fix_i is not None and args.name not in ("median", "pairvec"):
        raise UsageError("--fix-i applies to the median and pairvec models only")
    items = _model_items(args.name, args.n, args.fix_i)
    if args.count_only:
        out.scalar("count", sum(1 for _ in items))
        return EXIT_OK
    for item in items:
        out.json(item)
    return EXIT_OK


def _poly_text(coeffs: Sequence[int], var: str = "q") -> str:
    parts = []
    for d in reversed(range(len(coeffs))):
        c = coeffs[d]
        if not c:
            continue
        mag = abs(c)
        mono = var if d == 1 else f"{var}^{d}" if d else ""
        body = mono if mag == 1 and mono else f"{mag}*{mono}" if mono else str(mag)
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    head_sign, head = parts[0]
    text = ("-" if head_sign == "-" else "") + head
    return text + "".join(f" {s} {b}" for s, b in parts[1:])


def cmd_charpoly(args, out: Out) -> int:
    poly = arrangement.chi_table(args.n)[args.k] if args.k else arrangement.characteristic_polynomial(args.n)
    coeffs = list(poly.coeffs)
    if out.fmt == "plain":
        out.line(_poly_text(coeffs))
    elif out.fmt == "csv":
        out.rows(["degree", "coeff"], enumerate(coeffs))
    else:
        out.json(coeffs)
    return EXIT_OK


def cmd_regions(args, out: Out) -> int:
    out.scalar("regions", arrangement.region_count(args.n))
    return EXIT_OK


def cmd_pointcount(args, out: Out) -> int:
    count = arrangement.direct_point_count(
        args.n, args.q, cap=args.cap, workers=args.threads, y_on_larger=args.y_on_larger
    )
    expected = arrangement.characteristic_polynomial(args.n)(args.q)
    if out.fmt == "plain":
        out.line(str(count))
    else:
        out.record({"n": args.n, "q": args.q, "count": count, "charpoly": expected})
    return EXIT_OK


def cmd_series(args, out: Out) -> int:
    if args.name in ("median", "first"):
        if args.terms is None:
            raise UsageError(f"series {args.name} needs --terms")
        fn = series.median_genocchi_series if args.name == "median" else series.genocchi_first_series
        out.sequence(fn(args.terms), as_strings=True)
    elif args.name == "alpha":
        if args.n is None:
            raise UsageError("series alpha needs --n")
        table = series.alpha_table(args.n)
        rows = [(i, j, str(v)) for (i, j), v in sorted(table.items(), key=lambda kv: (kv[0][1], kv[0][0]))]
        if out.fmt == "json":
            out.json({"n": args.n, "cells": [{"i": i, "j": j, "value": v} for i, j, v in rows]})
        elif out.fmt == "csv":
            out.rows(["n", "i", "j", "value"], [(args.n, *r) for r in rows])
        else:
            _print_triangle(out, args.n, lambda i, j: table[i, j])
    else:  # gamma
        if args.k is None or args.terms is None:
            raise UsageError("series gamma needs --k and --terms")
        s = series.gamma_series(args.k, args.terms)
        coeffs = [[str(c) for c in s.coefficient(m).coeffs] for m in range(args.terms + 1)]
        if out.fmt == "plain":
            for m, c in enumerate(coeffs):
                out.line(f"t^{m}: {' '.join(c) or '0'}")
        elif out.fmt == "csv":
            out.rows(["power", "coeffs"], [(m, " ".join(c)) for m, c in enumerate(coeffs)])
        else:
            out.json(coeffs)
    return EXIT_OK


def cmd_verify(args, out: Out) -> int:
    result = verify.run_suite(max_n=args.max_n, samples=args.samples, seed=args.seed, workers=args.threads)
    for line in result.tap_lines():
        out.line(line)
    if out.fmt == "json":
        out.json(result.to_dict())
    return EXIT_OK if result.passed else EXIT_FAIL


# -- parser ----------------------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    common.add_argument("--threads", type=_positive, default=1, help="worker processes for enumeration")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    tourn = argparse.ArgumentParser(add_help=False)
    tourn.add_argument("--tournament", help='JSON {"n": N, "ascents": [[i, j], ...]} or @file')
    tourn.add_argument("--hex", help="hex bit string (needs --n)")

    parser = argparse.ArgumentParser(prog="altacyclic", description="Alternation acyclic tournaments.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, parents=()):
        p = sub.add_parser(name, parents=[common, *parents], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("count", cmd_count, "count tournaments of a class")
    p.add_argument("kind", choices=("alt-acyclic", "ascending", "semiacyclic", "total", "report"))
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--method", default="brute",
                   choices=("brute", "formula", "table", "regions", "lmax", "series"))

    p = add("table", cmd_table, "print a number triangle")
    p.add_argument("name", choices=("anij", "legendre-stirling", "eulerian", "chi"))
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--normalized", action="store_true", help="divide A(n,i,j) by j!")

    p = add("seq", cmd_seq, "print an integer sequence")
    p.add_argument("name", choices=sorted([*numbers.SEQUENCES, "eulerian"]))
    p.add_argument("--terms", type=_positive, required=True)

    p = add("classify", cmd_classify, "classify one tournament", [tourn])
    p.add_argument("--n", type=_positive)

    p = add("lmax", cmd_lmax, "largest maximal code of a tournament", [tourn])
    p.add_argument("--n", type=_positive)

    p = add("reduce", cmd_reduce, "delete the largest letter of an lmax code")
    p.add_argument("--code", help='JSON {"n": N, "pi": [...], "p": [...]} or @file')

    p = add("encode", cmd_encode, "apply a coding", [tourn])
    p.add_argument("what", choices=("ds", "code", "dumont", "pairvec"))
    p.add_argument("--perm")
    p.add_argument("--pi", help="linear extension used by 'encode code'")
    p.add_argument("--code")
    p.add_argument("--n", type=_positive)

    p = add("decode", cmd_decode, "invert a coding")
    p.add_argument("what", choices=("ds", "code", "dumont", "pairvec"))
    p.add_argument("--f")
    p.add_argument("--code")
    p.add_argument("--a")
    p.add_argument("--b")

    p = add("model", cmd_model, "list a Genocchi model as JSON lines")
    p.add_argument("name", choices=("dumont", "dumont-pairs", "median", "pairvec", "nm"))
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--fix-i", type=_positive)

    p = add("charpoly", cmd_charpoly, "characteristic polynomial, ascending coefficients")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_positive, help="only the chi(n, k, q) part")

    p = add("regions", cmd_regions, "number of regions")
    p.add_argument("--n", type=_positive, required=True)

    p = add("pointcount", cmd_pointcount, "count F_q points off the arrangement")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--cap", type=_positive, default=arrangement.DEFAULT_POINT_CAP)
    p.add_argument("--y-on-larger", action="store_true", help="use x_i - x_j = y_j")

    p = add("series", cmd_series, "generating-function coefficients")
    p.add_argument("name", choices=("median", "first", "alpha", "gamma"))
    p.add_argument("--terms", type=_positive)
    p.add_argument("--n", type=_positive)
    p.add_argument("--k", type=int)

    p = add("verify", cmd_verify, "run the cross-check suite")
    p.add_argument("--max-n", type=_positive, default=6)
    p.add_argument("--samples", type=int, default=10_000, help="random tournaments at n=8")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    out = Out(args.format)
    try:
        return args.func(args, out)
    except (UsageError, AltacyclicError, ValueError, KeyError, OSError) as exc:
        print(f"altacyclic {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
