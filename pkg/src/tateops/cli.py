"""Command-line front door.

Subcommands: residue, trace, ideals, cocycle, kacmoody, demo, selftest.
Output is exact and machine parseable, one result per line; identical inputs
give byte-identical output.  Exit codes: 0 success, 2 parse error, 3
precondition failure, 4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import __version__
from .cocycles import kac_moody_grid, sl2, tate_cocycle
from .counterexamples import check_not_sliced, QpEndo, qp_ideal_membership
from .cubical import cubical_membership, split_i, trace_n, word_factorization
from .fields import NotPrimeError, PrimeField, QQ
from .laurent import LaurentParseError, parse_laurent
from .operators import ideal_membership, split_plus_minus, TateOp
from .random_ops import (random_op, random_op_level2, random_trace_class,
                         random_trace_class_level2)
from .serial import load_op, SchemaError
from .trace import certificate, NotTraceClassError, trace, trace_oracle
from fractions import Fraction

EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_INTERNAL = 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_op(path: str) -> TateOp:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return load_op(fh.read())
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {exc}") from exc
    except SchemaError as exc:
        raise CliError(EXIT_PARSE, f"bad operator file {path}: {exc}") from exc


def _cmd_residue(args) -> list[str]:
    try:
        f = parse_laurent(args.f)
        g = parse_laurent(args.g)
    except LaurentParseError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from exc
    from .cocycles import residue
    return [str(residue(f, g))]


def _cmd_trace(args) -> list[str]:
    op = _read_op(args.op)
    try:
        if op.level == 1:
            value = trace(op)
            cert = certificate(op)
            return [str(value),
                    f"certificate N={cert.N} N'={cert.N_prime} "
                    f"window={cert.window_size()}x{cert.window_size()}"]
        value = trace_n(op)
        return [str(value)]
    except NotTraceClassError as exc:
        raise CliError(EXIT_PRECONDITION, f"not trace-class: {exc}") from exc


def _cmd_ideals(args) -> list[str]:
    op = _read_op(args.op)
    if op.level == 1:
        mem = ideal_membership(op)
        row = "none" if mem.bounding_row is None else str(mem.bounding_row)
        col = "none" if mem.kill_column is None else str(mem.kill_column)
        line = (f"bounded={str(mem.bounded).lower()} "
                f"discrete={str(mem.discrete).lower()} "
                f"trace_class={str(mem.trace_class).lower()}")
        if args.format == "tabular":
            return ["\t".join([str(mem.bounded).lower(), str(mem.discrete).lower(),
                               str(mem.trace_class).lower(), row, col])]
        return [line, f"bounding_row={row} kill_column={col}"]
    report = cubical_membership(op)
    out = []
    for i in range(report.n):
        out.append(f"variable={i + 1} in_plus={str(report.in_plus[i]).lower()} "
                   f"in_minus={str(report.in_minus[i]).lower()}")
    out.append(f"trace_class={str(report.trace_class).lower()}")
    return out


def _cmd_cocycle(args) -> list[str]:
    a = _read_op(args.op_a)
    b = _read_op(args.op_b)
    if a.level != 1 or b.level != 1:
        raise CliError(EXIT_PRECONDITION, "cocycle takes level-1 operators")
    if a.field != b.field:
        raise CliError(EXIT_PRECONDITION, "operands live over different fields")
    return [str(tate_cocycle(a, b))]


def _cmd_kacmoody(args) -> list[str]:
    if args.lie_file is not None:
        import json
        from .cocycles import lie_from_json
        try:
            with open(args.lie_file, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
            lie = lie_from_json(doc, QQ)
        except (OSError, json.JSONDecodeError, SchemaError) as exc:
            raise CliError(EXIT_PARSE, f"bad Lie algebra file: {exc}") from exc
        except Exception as exc:
            raise CliError(EXIT_PRECONDITION, f"bad structure constants: {exc}") from exc
    elif args.lie == "sl2":
        lie = sl2(QQ)
    else:
        raise CliError(EXIT_PARSE, f"unknown Lie algebra {args.lie!r}; "
                       "ship structure constants via --lie-file")
    cells = kac_moody_grid(lie, args.grid)
    out = []
    for cell in cells:
        if args.nonzero and cell.value.is_zero():
            continue
        out.append(f"{cell.x}\t{cell.y}\t{cell.m}\t{cell.n}\t{cell.value}")
    return out


def _cmd_demo(args) -> list[str]:
    try:
        prime = int(args.prime)
        field_check = PrimeField(prime)
    except (ValueError, NotPrimeError) as exc:
        raise CliError(EXIT_PARSE, f"bad prime: {exc}") from exc
    out = []
    if args.what == "qp":
        for q in (Fraction(0), Fraction(1), Fraction(1, prime), Fraction(prime),
                  Fraction(prime + 1, prime)):
            flags = qp_ideal_membership(QpEndo(q, prime))
            out.append(f"q={q} bounded={str(flags.bounded).lower()} "
                       f"discrete={str(flags.discrete).lower()}")
        verdict = check_not_sliced(prime)
        out.append(f"not_sliced={str(verdict).lower()}")
        return out
    rng = random.Random(args.seed)
    checked = 0
    for _ in range(50):
        op = random_op(rng, field_check)
        plus, minus = split_plus_minus(op)
        if not (ideal_membership(plus).bounded and ideal_membership(minus).discrete
                and plus + minus == op):
            raise CliError(EXIT_INTERNAL, "sliced decomposition failed")
        checked += 1
    out.append(f"sliced_split_checks={checked} field=GF({prime}) ok=true")
    return out


def _selftest_suites(rng, quick: bool):
    n = 25 if quick else 100
    field = QQ
    suites = []

    def suite(name):
        def wrap(fn):
            suites.append((name, fn))
            return fn
        return wrap

    @suite("split_level1")
    def _():
        for _ in range(n):
            op = random_op(rng, field)
            plus, minus = split_plus_minus(op)
            assert plus + minus == op
            assert ideal_membership(plus).bounded
            assert ideal_membership(minus).discrete
        return n

    @suite("trace_matches_oracle")
    def _():
        for _ in range(n):
            op = random_trace_class(rng, field)
            assert trace(op) == trace_oracle(op, 32)
        return n

    @suite("commutator_vanishing")
    def _():
        for _ in range(n):
            a = random_trace_class(rng, field)
            b = random_op(rng, field)
            assert trace(a * b - b * a).is_zero()
        return n

    @suite("residue_matches_oracle")
    def _():
        from .cocycles import residue, residue_oracle
        from .random_ops import random_laurent
        for _ in range(n):
            f = random_laurent(rng, field, span=5)
            g = random_laurent(rng, field, span=5)
            assert residue(f, g) == residue_oracle(f, g)
        return n

    @suite("level2_split_and_words")
    def _():
        count = max(5, n // 5)
        for _ in range(count):
            op = random_op_level2(rng, field)
            for i in (1, 2):
                plus, minus = split_i(op, i)
                assert plus + minus == op
                rep_p = cubical_membership(plus)
                rep_m = cubical_membership(minus)
                assert rep_p.in_plus[i - 1] and rep_m.in_minus[i - 1]
            w = [random_trace_class_level2(rng, field) for _ in range(4)]
            assert word_factorization(w).finite_at_all_levels
        return count

    return suites


def _cmd_selftest(args) -> list[str]:
    rng = random.Random(args.seed)
    out = []
    failures = 0
    for name, fn in _selftest_suites(rng, args.quick):
        try:
            count = fn()
            out.append(f"PASS {name} cases={count}")
        except AssertionError:
            failures += 1
            out.append(f"FAIL {name}")
    out.append(f"failures={failures}")
    if failures:
        raise CliError(EXIT_INTERNAL, "\n".join(out))
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tateops",
        description="Exact operator algebra on Laurent-series spaces")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("residue", help="residue of f dg for Laurent polynomials")
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(fn=_cmd_residue)

    p = sub.add_parser("trace", help="trace of a trace-class operator file")
    p.add_argument("op")
    p.set_defaults(fn=_cmd_trace)

    p = sub.add_parser("ideals", help="ideal membership report for an operator file")
    p.add_argument("op")
    p.add_argument("--format", choices=["human", "tabular"], default="human")
    p.set_defaults(fn=_cmd_ideals)

    p = sub.add_parser("cocycle", help="corner 2-cocycle of two operator files")
    p.add_argument("op_a")
    p.add_argument("op_b")
    p.set_defaults(fn=_cmd_cocycle)

    p = sub.add_parser("kacmoody", help="loop-algebra cocycle table")
    p.add_argument("--lie", default="sl2")
    p.add_argument("--lie-file", default=None,
                   help="JSON structure-constants file (overrides --lie)")
    p.add_argument("--grid", type=int, default=3)
    p.add_argument("--nonzero", action="store_true",
                   help="only print nonzero cells")
    p.set_defaults(fn=_cmd_kacmoody)

    p = sub.add_parser("demo", help="counterexample demos")
    p.add_argument("what", choices=["qp", "fpt"])
    p.add_argument("--prime", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_demo)

    p = sub.add_parser("selftest", help="run the invariant suites")
    p.add_argument("--quick", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        for line in args.fn(args):
            print(line)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (LaurentParseError, SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NotTraceClassError, NotPrimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    return 0


if __name__ == "__main__":
    sys.exit(main())
