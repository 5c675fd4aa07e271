"""Command-line front end.

Exit codes: 0 success, 1 semantic failure (invalid tableau, count mismatch,
round-trip counterexample), 2 usage or syntax error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from permtab.bijection import perm_to_tableau, tableau_to_perm, tableau_to_perm_traced
from permtab.core import Permutation, validate_tableau
from permtab.enumeration import (
    descent_counts,
    enumerate_permutations,
    enumerate_tableaux,
    eulerian_row,
    tableau_counts,
)
from permtab.errors import InternalInvariantViolation, InvalidTableau, TableauError
from permtab.statistics import (
    descent_positions,
    descent_set,
    rightmost_restricted_zeros,
    unrestricted_rows,
)
from permtab.textio import (
    format_permutation,
    is_document,
    parse_document,
    parse_permutation,
    parse_tableau,
    render_tableau,
    serialize_tableau,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Usage(Exception):
    pass


def _labels(xs) -> str:
    return ",".join(map(str, sorted(xs)))


def _read_text(args, stdin) -> str:
    if args.file:
        try:
            with open(args.file, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise _Usage(f"cannot read {args.file}: {exc.strerror}") from exc
    return stdin.read()


def _read_input(args, stdin):
    """A Permutation from the positional argument, else a document or permutation text."""
    if getattr(args, "perm", None):
        return parse_permutation(args.perm)
    text = _read_text(args, stdin)
    if is_document(text):
        return text
    if not text.strip():
        raise _Usage("no input: give a permutation argument or a tableau document on stdin")
    return parse_permutation(text)


def cmd_to_tableau(args, out, stdin) -> int:
    if args.perm is None:
        perm = parse_permutation(_read_text(args, stdin))
    else:
        perm = parse_permutation(args.perm)
    tableau, trace = perm_to_tableau(perm)
    out.write(serialize_tableau(tableau))
    if args.render:
        out.write(render_tableau(tableau))
    if args.trace:
        for event in trace:
            out.write(f"{event}\n")
    return EXIT_OK


def cmd_to_perm(args, out, stdin) -> int:
    tableau = parse_tableau(_read_text(args, stdin))
    perm, trace = tableau_to_perm_traced(tableau)
    out.write(format_permutation(perm) + "\n")
    if args.trace:
        out.write(f"{trace}\n")
    return EXIT_OK


def cmd_validate(args, out, stdin) -> int:
    source = _read_input(args, stdin)
    if isinstance(source, Permutation):
        out.write("OK\n")
        return EXIT_OK
    report = validate_tableau(*parse_document(source))
    out.write(f"{report}\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_render(args, out, stdin) -> int:
    source = _read_input(args, stdin)
    tableau = perm_to_tableau(source)[0] if isinstance(source, Permutation) else parse_tableau(source)
    out.write(render_tableau(tableau))
    return EXIT_OK


def cmd_stats(args, out, stdin) -> int:
    source = _read_input(args, stdin)
    if isinstance(source, Permutation):
        out.write(f"descents {_labels(descent_set(source))}\n")
        out.write(f"descent positions {_labels(descent_positions(source))}\n")
        return EXIT_OK
    t = parse_tableau(source)
    rrz = rightmost_restricted_zeros(t)
    out.write(f"length {t.n}\n")
    out.write(f"columns {_labels(t.columns)}\n")
    out.write(f"rows {_labels(t.rows)}\n")
    out.write(f"unrestricted rows {_labels(unrestricted_rows(t))}\n")
    out.write("rightmost restricted zeros " + " ".join(str(c) for c in rrz.values()) + "\n")
    return EXIT_OK


def cmd_count(args, out, stdin) -> int:
    tableaux = tableau_counts(args.n, workers=args.workers)
    perms = descent_counts(args.n)
    euler = eulerian_row(args.n)
    ks = range(args.n) if args.columns is None else [args.columns]
    match = True
    for k in ks:
        if not 0 <= k < args.n:
            raise _Usage(f"--columns must be in 0..{args.n - 1}")
        out.write(f"{k} {tableaux[k]} {perms[k]} {euler[k]}\n")
        match &= tableaux[k] == perms[k] == euler[k]
    out.write("MATCH\n" if match else "MISMATCH\n")
    return EXIT_OK if match else EXIT_FAIL


def verify(n: int) -> tuple[bool, str]:
    """Run both round trips and the image-set check for size ``n``."""
    images = set()
    n_perms = 0
    for p in enumerate_permutations(n):
        n_perms += 1
        t, _ = perm_to_tableau(p)
        back = tableau_to_perm(t)
        if back != p:
            return False, f"FAIL: {p} -> {back} after a round trip"
        images.add(t)
    n_tabs = 0
    tableaux = set()
    for t in enumerate_tableaux(n):
        n_tabs += 1
        tableaux.add(t)
        again, _ = perm_to_tableau(tableau_to_perm(t))
        if again != t:
            return False, f"FAIL: tableau round trip broke\n{serialize_tableau(t)}"
    if len(images) != n_perms:
        return False, "FAIL: forward map is not injective"
    if images != tableaux:
        return False, "FAIL: forward image differs from the enumerated tableaux"
    return True, f"{n_perms} permutations, {n_tabs} tableaux, all round trips OK"


def cmd_verify(args, out, stdin) -> int:
    ok, message = verify(args.n)
    out.write(message + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_enumerate(args, out, stdin) -> int:
    if args.count_only:
        if args.columns is None:
            total = sum(tableau_counts(args.n))
        else:
            total = sum(1 for _ in enumerate_tableaux(args.n, args.columns))
        out.write(f"{total}\n")
        return EXIT_OK
    for t in enumerate_tableaux(args.n, args.columns):
        out.write(serialize_tableau(t))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permtab",
        description="Permutation tableaux and the descent/column bijection with permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, perm=False, file=True):
        p = sub.add_parser(name, help=help, description=help)
        if perm:
            p.add_argument("perm", nargs="?", help="permutation such as 2,4,8,5,1,6,3,7")
        if file:
            p.add_argument("--file", help="read input from this path instead of stdin")
        p.set_defaults(func=func)
        return p

    p = add("to-tableau", cmd_to_tableau, "map a permutation to its tableau", perm=True)
    p.add_argument("--render", action="store_true", help="also print the ASCII grid")
    p.add_argument("--trace", action="store_true", help="also print every fill event")

    p = add("to-perm", cmd_to_perm, "map a tableau document (stdin) back to a permutation")
    p.add_argument("--trace", action="store_true", help="also print every insertion")

    add("validate", cmd_validate, "check a tableau document against both axioms", perm=True)
    add("render", cmd_render, "draw a tableau (or a permutation's tableau) as ASCII", perm=True)
    add("stats", cmd_stats,
        "print statistics; descents are VALUES d followed by a smaller entry, not positions",
        perm=True)

    for name, func, help in [
        ("count", cmd_count, "compare tableau, descent and Eulerian counts per column count"),
        ("verify", cmd_verify, "run both round trips exhaustively for one size"),
        ("enumerate", cmd_enumerate, "list every tableau of a given length"),
    ]:
        p = add(name, func, help, file=False)
        p.add_argument("--n", type=int, required=True, help="length / permutation size")
        if name != "verify":
            p.add_argument("--columns", type=int, help="only tableaux with this many columns")
        if name == "count":
            p.add_argument("--workers", type=int, default=None, help="processes for counting")
        if name == "enumerate":
            p.add_argument("--count-only", action="store_true", help="print only the total")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, stdin=None) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out, stdin)
    except InvalidTableau as exc:
        out.write(f"{exc.report}\n")
        return EXIT_FAIL
    except InternalInvariantViolation as exc:
        print(f"permtab: internal error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (TableauError, _Usage) as exc:
        print(f"permtab: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
