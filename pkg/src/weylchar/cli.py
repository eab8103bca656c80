"""Command-line interface.

    weylchar character --n 5 --dynkin 4,1,0,0 [--format text|json]
    weylchar schur (--generic | --n N) --degree M
    weylchar orbit --n N --partition q1,...,qN
    weylchar verify --n-max N --m-max M [--oracle kostka|freudenthal|weyl|all]

``--n`` is the N of A_{N-1}, so A4 is ``--n 5``.  Exit codes: 0 success,
1 usage error, 2 internal inconsistency or verification mismatch.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import cache
from .document import dumps, format_text, table_to_document
from .multiplicity import InternalInconsistency
from .orbits import weyl_orbit
from .symfunc import degenerated_schur, generic_schur
from .verify import ORACLES, compare_printed_recursion, run_sweep
from .weights import DominantWeight, as_partition, pad

EXIT_USAGE = 1
EXIT_INCONSISTENT = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="weylchar", description="Exact A_{N-1} characters and weight multiplicities.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("character", help="orbit decomposition of an irreducible representation")
    p.add_argument("--n", type=int, required=True, help="N of A_{N-1} (A4 is --n 5)")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--dynkin", type=_int_list, help="Dynkin labels a1,...,a_{N-1}")
    which.add_argument("--partition", type=_int_list, help="partition q1,...,qN")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--cache-dir", help=f"table cache directory (default ${cache.ENV_VAR})")

    p = sub.add_parser("schur", help="print a generic or degenerated Schur function S_M")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--generic", action="store_true", help="unconstrained S_M(x1..xM)")
    kind.add_argument("--n", type=int, help="degenerated S_M in x1..x_{N-1}")
    p.add_argument("--degree", type=int, required=True)

    p = sub.add_parser("orbit", help="list the Weyl orbit of a dominant weight")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--partition", type=_int_list, required=True)

    p = sub.add_parser("verify", help="cross-check multiplicities against independent oracles")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--oracle", choices=(*ORACLES, "all"), default="all")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    p.add_argument(
        "--printed-recursion",
        action="store_true",
        help="also report whether the typeset form of the degeneration recursion reproduces S_M",
    )
    return parser


def _dominant(args) -> DominantWeight:
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    if args.dynkin is not None:
        if len(args.dynkin) != args.n - 1:
            raise UsageError(f"--dynkin needs {args.n - 1} labels for --n {args.n}")
        try:
            return DominantWeight.from_dynkin(args.n, args.dynkin)
        except ValueError as exc:
            raise UsageError(str(exc))
    if len(args.partition) != args.n:
        raise UsageError(f"--partition needs {args.n} parts for --n {args.n}")
    try:
        return DominantWeight(args.n, as_partition(args.partition))
    except ValueError as exc:
        raise UsageError(str(exc))


def cmd_character(args, out) -> int:
    lam = _dominant(args)
    table = cache.cached_multiplicities(cache.resolve_dir(args.cache_dir), lam)
    doc = table_to_document(table)
    out.write(dumps(doc) if args.format == "json" else format_text(doc))
    return 0


def cmd_schur(args, out) -> int:
    if args.degree < 0:
        raise UsageError("--degree must be non-negative")
    if args.generic:
        poly = generic_schur(args.degree)
    else:
        if args.n < 2:
            raise UsageError("--n must be at least 2")
        poly = degenerated_schur(args.n, args.degree)
    out.write(poly.format() + "\n")
    return 0


def cmd_orbit(args, out) -> int:
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    if len(args.partition) != args.n:
        raise UsageError(f"--partition needs {args.n} parts for --n {args.n}")
    try:
        q = pad(as_partition(args.partition), args.n)
    except ValueError as exc:
        raise UsageError(str(exc))
    elements = weyl_orbit(q, args.n)
    for w in elements:
        out.write("(" + ",".join(map(str, w)) + ")\n")
    out.write(f"size {len(elements)}\n")
    return 0


def cmd_verify(args, out) -> int:
    if not 2 <= args.n_max <= 6:
        raise UsageError("--n-max must be between 2 and 6")
    if not 1 <= args.m_max <= 10:
        raise UsageError("--m-max must be between 1 and 10")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    oracles = ORACLES if args.oracle == "all" else (args.oracle,)
    results = run_sweep(args.n_max, args.m_max, oracles, jobs=args.jobs)
    for r in results:
        out.write(r.line(oracles) + "\n")
    failed = sum(1 for r in results if not r.ok)
    out.write(f"summary: {len(results)} cases, {len(results) - failed} passed, {failed} failed\n")
    if args.printed_recursion:
        rows = compare_printed_recursion(args.n_max, args.m_max)
        agree = sum(1 for *_, same in rows if same)
        for n, m, same in rows:
            out.write(f"printed-recursion n={n} M={m}: {'matches' if same else 'differs'}\n")
        out.write(f"printed-recursion: {agree} of {len(rows)} match the degenerated S_M\n")
    return 0 if failed == 0 else EXIT_INCONSISTENT


COMMANDS = {
    "character": cmd_character,
    "schur": cmd_schur,
    "orbit": cmd_orbit,
    "verify": cmd_verify,
}


def main(argv=None, out=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="weylchar: %(message)s", stream=sys.stderr)
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"weylchar {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInconsistency as exc:
        print(f"weylchar: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
