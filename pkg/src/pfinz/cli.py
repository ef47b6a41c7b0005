"""Command-line front end: ``pfinz <command> ...``.

Exit codes: 0 success, 1 parse/usage error, 2 arithmetic overflow,
3 verification failure (including unrecognized identify input).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from . import autgroup, oracle, structure
from .autgroup import AutElem, Family
from .errors import (
    IntegerOverflow,
    NotDecomposableError,
    NotRecognizedError,
    ParseError,
    PfinzError,
)
from .finset import FinSet, format_set, parse_set

EXIT_OK, EXIT_USAGE, EXIT_OVERFLOW, EXIT_VERIFY = 0, 1, 2, 3

#: every JSON document printed by the CLI validates against this schema
OUTPUT_SCHEMA = {
    "type": "object",
    "required": ["command"],
    "properties": {
        "command": {"type": "string"},
        "result": {"type": "string"},
        "error": {"type": "string"},
        "exit_code": {"type": "integer"},
        "report": {"type": "object"},
        "table": {"type": "object"},
    },
    "oneOf": [{"required": ["result"]}, {"required": ["error"]}],
}


class UsageError(PfinzError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


_DASHED = re.compile(r"-[fg]\[.*|-?\d+\.\.-?\d+")


def _shield(argv: Sequence[str]) -> list:
    # argparse would read "-f[1]" or "-3..3" as options
    return [" " + a if a.startswith("-") and _DASHED.fullmatch(a) else a for a in argv]


def parse_window(text: str) -> tuple:
    m = re.fullmatch(r"\s*(-?\d+)\.\.(-?\d+)\s*", text)
    if m is None:
        raise ParseError("expected lo..hi", text, 0)
    return int(m.group(1)), int(m.group(2))


def parse_sign(text: str) -> int:
    t = text.strip()
    if t in ("+", "+1", "1"):
        return 1
    if t in ("-", "-1"):
        return -1
    raise ParseError("expected + or -", text, 0)


def read_table(path: str) -> dict:
    """Read ``input-set -> output-set`` lines (``→`` also accepted)."""
    table = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = re.split(r"->|→", line)
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: expected 'input -> output'", line, 0)
            x, y = parse_set(parts[0]), parse_set(parts[1])
            if table.get(x, y) != y:
                raise NotRecognizedError(f"line {lineno}: conflicting images for {x}")
            table[x] = y
    return table


def _table_map(table: dict):
    def bb(x: FinSet) -> FinSet:
        try:
            return table[x]
        except KeyError:
            raise NotRecognizedError(f"table has no entry for {x}") from None

    return bb


def _render_alpha(const: int, pa: int, pb: int) -> str:
    terms = []
    for coef, name in ((pa, "a"), (pb, "b")):
        if coef == 0:
            continue
        sign = "-" if coef < 0 else "+"
        mag = "" if abs(coef) == 1 else str(abs(coef))
        terms.append((sign, mag + name))
    if const or not terms:
        terms.append(("-" if const < 0 else "+", str(abs(const))))
    out = "".join(f"{s}{t}" for s, t in terms)
    return out[1:] if out.startswith("+") else out


def family_table() -> dict:
    """Symbolic composition table ``row o col`` over the four sign/family classes."""
    classes = [(1, Family.F), (1, Family.G), (-1, Family.F), (-1, Family.G)]

    def label(sign, fam, var):
        return f"{'-' if sign == -1 else ''}{fam.value}[{var}]"

    table = {}
    for s1, f1 in classes:
        row = {}
        for s2, f2 in classes:
            base = autgroup.compose(AutElem(s1, f1, 0), AutElem(s2, f2, 0))
            da = autgroup.compose(AutElem(s1, f1, 1), AutElem(s2, f2, 0))
            db = autgroup.compose(AutElem(s1, f1, 0), AutElem(s2, f2, 1))
            assert base.family == da.family == db.family and base.sign == da.sign == db.sign
            alpha = _render_alpha(base.alpha, da.alpha - base.alpha, db.alpha - base.alpha)
            row[label(s2, f2, "b")] = label(base.sign, base.family, alpha)
        table[label(s1, f1, "a")] = row
    return table


def _format_table(table: dict) -> str:
    cols = list(next(iter(table.values())))
    width = max(len(c) for r in table.values() for c in list(r.values()) + cols) + 2
    lines = ["o".ljust(8) + "".join(c.ljust(width) for c in cols)]
    for name, row in table.items():
        lines.append(name.ljust(8) + "".join(row[c].ljust(width) for c in cols))
    return "\n".join(line.rstrip() for line in lines)


def _cmd(args) -> tuple:
    """Run one command; returns (exit_code, result_text, extra_json_fields)."""
    cmd = args.command
    if cmd == "eval":
        e, x = autgroup.parse_descriptor(args.descriptor), parse_set(args.set)
        return EXIT_OK, format_set(autgroup.apply(e, x)), {}
    if cmd == "compose":
        e1, e2 = autgroup.parse_descriptor(args.first), autgroup.parse_descriptor(args.second)
        return EXIT_OK, str(autgroup.compose(e1, e2)), {}
    if cmd == "inverse":
        return EXIT_OK, str(autgroup.inverse(autgroup.parse_descriptor(args.descriptor))), {}
    if cmd == "power":
        return EXIT_OK, str(autgroup.power(autgroup.parse_descriptor(args.descriptor), args.n)), {}
    if cmd == "conjugate":
        e1, e2 = autgroup.parse_descriptor(args.first), autgroup.parse_descriptor(args.second)
        return EXIT_OK, str(autgroup.conjugate(e1, e2)), {}
    if cmd == "classify":
        return EXIT_OK, str(autgroup.classify_phi(parse_sign(args.sign), args.a, args.b)), {}
    if cmd == "iso":
        if args.inverse:
            return EXIT_OK, str(autgroup.from_z2dih(autgroup.parse_z2dih(args.element))), {}
        return EXIT_OK, str(autgroup.to_z2dih(autgroup.parse_descriptor(args.element))), {}
    if cmd == "identify":
        table = read_table(args.table)
        e = autgroup.identify(_table_map(table), sweep=list(table))
        return EXIT_OK, str(e), {}
    if cmd == "decompose":
        if args.table:
            table = read_table(args.table)
            d = structure.decompose(_table_map(table), sweep=list(table))
        else:
            e = autgroup.parse_descriptor(args.descriptor)
            d = structure.decompose(e)
        return EXIT_OK, str(d), {}
    if cmd == "table":
        table = family_table()
        return EXIT_OK, _format_table(table), {"table": table}
    if cmd == "verify":
        lo, hi = parse_window(args.window)
        config = oracle.VerifyConfig(
            lo=lo, hi=hi, max_size=args.max_size, alpha_bound=args.alpha_bound, mutate=args.mutate
        )
        report = oracle.run_all(config)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(report.to_json() + "\n")
        code = EXIT_OK if report.passed else EXIT_VERIFY
        return code, "PASS" if report.passed else "FAIL", {"report": report.to_dict(), "_report": report}
    raise UsageError(f"unknown command {cmd!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = _Parser(prog="pfinz", description="Automorphisms of the finitary power monoid of Z.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common], help="apply a descriptor to a set")
    p.add_argument("descriptor")
    p.add_argument("set")
    for name, help_ in (("compose", "first o second"), ("conjugate", "first o second o first^-1")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("first")
        p.add_argument("second")
    p = sub.add_parser("inverse", parents=[common])
    p.add_argument("descriptor")
    p = sub.add_parser("power", parents=[common])
    p.add_argument("descriptor")
    p.add_argument("n", type=int)
    p = sub.add_parser("classify", parents=[common], help="classify sign*phi_{a,b}")
    p.add_argument("sign")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p = sub.add_parser("identify", parents=[common], help="identify a map from an input -> output table")
    p.add_argument("table")
    p = sub.add_parser("decompose", parents=[common])
    p.add_argument("descriptor", nargs="?")
    p.add_argument("--table")
    p = sub.add_parser("iso", parents=[common], help="coordinates in Z2 x Dih_inf")
    p.add_argument("element")
    p.add_argument("--inverse", action="store_true")
    sub.add_parser("table", parents=[common], help="family composition table")
    p = sub.add_parser("verify", parents=[common], help="run the verification suites")
    defaults = oracle.VerifyConfig()
    p.add_argument("--window", default=f"{defaults.lo}..{defaults.hi}")
    p.add_argument("--max-size", type=int, default=defaults.max_size)
    p.add_argument("--alpha-bound", type=int, default=defaults.alpha_bound)
    p.add_argument("--mutate", action="store_true")
    p.add_argument("--output", help="also write the JSON report to this file")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_shield(sys.argv[1:] if argv is None else argv))
    if args.command == "decompose" and not (args.descriptor or args.table):
        parser.error("decompose needs a descriptor or --table")
    try:
        code, result, extra = _cmd(args)
    except (ParseError, UsageError, OSError, ValueError) as exc:
        if isinstance(exc, IntegerOverflow):
            return _fail(args, EXIT_OVERFLOW, exc)
        return _fail(args, EXIT_USAGE, exc)
    except IntegerOverflow as exc:
        return _fail(args, EXIT_OVERFLOW, exc)
    except (NotRecognizedError, NotDecomposableError) as exc:
        return _fail(args, EXIT_VERIFY, exc)

    report = extra.pop("_report", None)
    if args.format == "json":
        print(json.dumps({"command": args.command, "result": result, **extra}, indent=2, ensure_ascii=False))
    elif report is not None:
        print("\n".join(report.summary_lines()))
    else:
        print(result)
    return code


def _fail(args, code: int, exc: Exception) -> int:
    if args.format == "json":
        print(json.dumps({"command": args.command, "error": str(exc), "exit_code": code}, ensure_ascii=False))
    print(f"pfinz {args.command}: error: {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
