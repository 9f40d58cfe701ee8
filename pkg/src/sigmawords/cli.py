"""Command-line interface.

Exit codes: 0 ok (and every checked row agrees), 1 disagreement or
unsupported pattern, 2 usage or parse error, 3 word exceeds the length cap.
"""

from __future__ import annotations

import argparse
import sys

from .errors import CapExceeded, OddLengthRequired, ParseError, Unsupported
from .formulas import formula_count
from .kernel import kernel, m_count
from .oracle import count_generalized, count_pattern
from .patterns import LITERAL, PATTERN, parse_pattern
from .verify import all_agree, check_patterns, sweep_dashless, write_csv, write_jsonl
from .words import DEFAULT_CAP, as_kind, as_word, build_word, sigma_letter

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _word_arg(text: str, cap: int) -> str:
    if ":" in text:
        kind, _, n = text.partition(":")
        return build_word(as_kind(kind), int(n), cap)
    return as_word(text)


def _emit(rows, fmt, out):
    if fmt == "jsonl":
        write_jsonl(rows, out)
    else:
        write_csv(rows, out)
    return EXIT_OK if all_agree(rows) else EXIT_MISMATCH


def cmd_generate(args, out):
    w = build_word(args.kind, args.n, args.cap)
    if args.format == "lines":
        out.write("\n".join(w) + "\n")
    else:
        out.write(w + "\n")
    return EXIT_OK


def cmd_letter(args, out):
    out.write(f"{sigma_letter(args.index)}\n")
    return EXIT_OK


def cmd_kernel(args, out):
    w = _word_arg(args.word, args.cap)
    out.write(kernel(w, args.order) + "\n")
    if args.count:
        out.write(f"{m_count(args.order, as_word(args.count), w)}\n")
    return EXIT_OK


def cmd_count(args, out):
    p = parse_pattern(args.pattern)
    kind = as_kind(args.kind)
    if args.method in ("formula", "auto"):
        try:
            value = formula_count(p, args.n, args.semantics, args.printed)[kind]
            out.write(f"{value}\n")
            return EXIT_OK
        except Unsupported as exc:
            if args.method == "formula":
                print(f"unsupported: {exc}", file=sys.stderr)
                return EXIT_MISMATCH
    w = build_word(kind, args.n, args.cap)
    fn = count_pattern if args.semantics == PATTERN else count_generalized
    out.write(f"{fn(w, p)}\n")
    return EXIT_OK


def cmd_verify(args, out):
    rows = check_patterns([parse_pattern(args.pattern)], args.n_min, args.n_max,
                          args.semantics, args.printed, args.cap)
    return _emit(rows, args.format, out)


def cmd_sweep(args, out):
    rows = sweep_dashless(args.max_len, args.n_max, args.printed, args.cap)
    return _emit(rows, args.format, out)


def cmd_table(args, out):
    with open(args.patterns_file, encoding="ascii") as fh:
        patterns = [parse_pattern(s.strip()) for s in fh if s.strip() and not s.startswith("#")]
    rows = check_patterns(patterns, args.n_min, args.n_max, args.semantics, args.printed, args.cap)
    return _emit(rows, args.format, out)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sigmawords", description="Pattern counts in sigma-words C_n and D_n.")
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="longest word that may be materialized (default 2^26-1)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def kind_arg(p):
        p.add_argument("--kind", type=str.upper, choices=["C", "D"], default="C")

    def shared(p, formats=("csv", "jsonl")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--printed", action="store_true",
                       help="use the formulas exactly as printed instead of the exact corrections")

    def semantics(p):
        p.add_argument("--semantics", choices=[PATTERN, LITERAL], default=PATTERN)

    p = sub.add_parser("generate", help="print C_n or D_n")
    kind_arg(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["raw", "lines"], default="raw")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("letter", help="letter of the sigma-sequence at a position")
    p.add_argument("--index", type=int, required=True)
    p.set_defaults(func=cmd_letter)

    p = sub.add_parser("kernel", help="kernel of an odd-length word")
    p.add_argument("--word", required=True, help="c:N, d:N or a literal word")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--count", help="also print occurrences of this block in the kernel")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("count", help="occurrences of a pattern in C_n or D_n")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", type=int, required=True)
    kind_arg(p)
    p.add_argument("--method", choices=["oracle", "formula", "auto"], default="auto")
    semantics(p)
    p.add_argument("--printed", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="compare formula and oracle over a range of n")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    semantics(p)
    shared(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="verify every dashless pattern up to a length")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    shared(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("table", help="verify every pattern listed in a file")
    p.add_argument("--patterns-file", required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    semantics(p)
    shared(p)
    p.set_defaults(func=cmd_table)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        code = args.func(args, out)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, OddLengthRequired, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.flush()
    return code


def main() -> int:
    sys.stdout.reconfigure(line_buffering=True)
    return run(sys.argv[1:])


if __name__ == "__main__":
    raise SystemExit(main())
