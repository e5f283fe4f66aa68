"""
Command line front end.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 for success or
an affirmative verdict, 1 for a negative verdict, 2 for usage or parse
errors.  Output is deterministic, byte-identical across runs and thread
counts.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .free_algebra import expand_left_normed_bracket, format_polynomial
from .group_ring import format_element, parse_element
from .jacobi import (
    is_jacobi_bruteforce,
    is_jacobi_coset_sums,
    is_jacobi_omega,
    is_jacobi_orthogonality,
    subset_count_table,
)
from .lattice import MAX_MATRIX_DEGREE, format_basis, jacobi_lattice_basis
from .permutations import SYMMETRIC_GROUP_CAP
from .search import (
    enumerate_jacobi_subsets,
    format_subsets,
    parse_subsets,
    verify_subset,
)
from .shuffles import omega

__all__ = ["build_parser", "entry_point", "main"]


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _cmd_omega(args: argparse.Namespace) -> int:
    n = args.n
    if not 1 <= n <= SYMMETRIC_GROUP_CAP:
        raise ValueError(f"degree must be in 1..{SYMMETRIC_GROUP_CAP}, got {n}")
    sys.stdout.write(format_element(omega(n)))
    return 0


def _cmd_check_element(args: argparse.Namespace) -> int:
    element = parse_element(_read_input(args.file))
    verdicts = (
        is_jacobi_bruteforce(element),
        is_jacobi_omega(element),
        is_jacobi_orthogonality(element).is_jacobi,
        is_jacobi_coset_sums(element).is_jacobi,
    )
    if len(set(verdicts)) != 1:
        raise RuntimeError(f"internal error: criteria disagree: {verdicts}")
    if verdicts[0]:
        print("JACOBI")
        return 0
    witness = is_jacobi_coset_sums(element).witness
    print("NOT JACOBI")
    print(f"witness: tau = {witness.tau}, value = {witness.value}")
    return 1


def _cmd_check_subset(args: argparse.Namespace) -> int:
    subsets = parse_subsets(_read_input(args.file))
    if not subsets:
        raise ValueError("no subsets found in input")
    all_jacobi = True
    for T in subsets:
        n = next(iter(T)).degree
        report = verify_subset(T, n)
        if report.is_jacobi:
            print("JACOBI")
        else:
            all_jacobi = False
            witness = report.counting.witness
            plus, minus = witness.counts
            print("NOT JACOBI")
            print(
                f"witness: tau = {witness.tau}, plus = {plus}, minus = {minus}"
            )
        if args.table:
            print("# tau : plus minus")
            for tau, plus, minus in subset_count_table(T, n):
                print(f"{tau} : {plus} {minus}")
    return 0 if all_jacobi else 1


def _cmd_basis(args: argparse.Namespace) -> int:
    n = args.n
    if not 1 <= n <= MAX_MATRIX_DEGREE:
        raise ValueError(f"degree must be in 1..{MAX_MATRIX_DEGREE}, got {n}")
    sys.stdout.write(format_basis(jacobi_lattice_basis(n)))
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    if args.threads < 1:
        raise ValueError("--threads must be at least 1")
    subsets = enumerate_jacobi_subsets(
        args.n,
        max_size=args.max_size,
        require_nonempty=args.nonempty,
        require_identity=args.containing_identity,
        threads=args.threads,
    )
    sys.stdout.write(format_subsets(subsets))
    return 0


def _cmd_expand(args: argparse.Namespace) -> int:
    images = args.images
    polynomial = expand_left_normed_bracket(images, len(images))
    sys.stdout.write(format_polynomial(polynomial))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liejacobi",
        description="Jacobi elements and Jacobi subsets of Z[S_n]",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("omega", help="print the riffle sum omega(n)")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_omega)

    p = sub.add_parser(
        "check-element",
        help="decide whether an element (file or stdin) is Jacobi",
    )
    p.add_argument("file", nargs="?", default=None)
    p.set_defaults(func=_cmd_check_element)

    p = sub.add_parser(
        "check-subset",
        help="decide whether each subset stanza (file or stdin) is Jacobi",
    )
    p.add_argument("file", nargs="?", default=None)
    p.add_argument(
        "--table", action="store_true",
        help="print the per-tau intersection counts",
    )
    p.set_defaults(func=_cmd_check_subset)

    p = sub.add_parser("basis", help="print a Z-basis of the Jacobi lattice")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("search", help="enumerate Jacobi subsets of S_n")
    p.add_argument("n", type=int)
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--nonempty", action="store_true")
    p.add_argument("--containing-identity", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser(
        "expand",
        help="expand the left-normed bracket of the given permutation",
    )
    p.add_argument("images", type=int, nargs="+", metavar="P")
    p.set_defaults(func=_cmd_expand)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())
