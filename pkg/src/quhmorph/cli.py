"""Command line entry point.

Exit codes: 0 success, 1 failed verification or an oracle/criterion
inconsistency, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import sys

from . import arithmetic, matrix
from .arithmetic import is_prime, squarefree_part
from .constructions import fks_quh, format_quh, paley_skew, parse_quh, quh_failure
from .errors import QuhmorphError
from .finite_field import field_of_order, jacobsthal
from .morphism import apply_morphism, quartic_is_minimal
from .search import DEFAULT_BUDGET, SearchStatus, exhaustive_search

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise QuhmorphError(f"cannot read {path}: {exc.strerror}") from None


def _cmd_paley(args) -> int:
    sys.stdout.write(matrix.format_pm(paley_skew(args.q)))
    return EXIT_OK


def _cmd_jacobsthal(args) -> int:
    sys.stdout.write(matrix.format_pm(jacobsthal(field_of_order(args.q))))
    return EXIT_OK


def _cmd_fks(args) -> int:
    sys.stdout.write(format_quh(fks_quh(args.q, args.t)))
    return EXIT_OK


def _cmd_morph(args) -> int:
    quh = parse_quh(_read(args.quh_file))
    skew = matrix.parse_pm(_read(args.skew_file))
    result = apply_morphism(quh, skew)
    sys.stdout.write(matrix.format_pm(result.matrix))
    return EXIT_OK


def _cmd_verify(args) -> int:
    text = _read(args.file)
    if args.kind == "quh":
        reason = quh_failure(parse_quh(text))
    elif args.kind == "skew":
        reason = matrix.skew_failure(matrix.parse_pm(text))
    else:
        reason = matrix.hadamard_failure(matrix.parse_pm(text))
    if reason is None:
        print("OK")
        return EXIT_OK
    print(f"FAIL: {reason}")
    return EXIT_FAIL


def _cmd_minpoly_check(args) -> int:
    h = matrix.parse_pm(_read(args.file))
    m = h.shape[0] - 1
    holds = matrix.quartic_identity_check(h)
    print(f"quartic identity (m={m}): {'holds' if holds else 'fails'}")
    if quartic_is_minimal(m):
        print(f"minimal: yes (m+1={m + 1} is not a perfect square)")
    else:
        print(f"minimal: no (m+1={m + 1} is a perfect square, the quartic splits into two quadratics)")
    return EXIT_OK if holds else EXIT_FAIL


def _cmd_nonexist(args) -> int:
    print(arithmetic.nonexistence_witness(args.n, args.p))
    return EXIT_OK


def _cmd_table(args) -> int:
    for n in arithmetic.emptiness_table(args.p, args.max_n):
        print(n)
    return EXIT_OK


def _cmd_split_type(args) -> int:
    print(arithmetic.split_type(args.q, args.p))
    return EXIT_OK


def _cmd_density(args) -> int:
    hits, total = arithmetic.density_counts(args.p, args.limit)
    print(f"{hits}/{total} {hits / total:.6f}" if total else "0/0")
    return EXIT_OK


def _criterion(n: int, m: int):
    """Applicable nonexistence verdict for H(n, X_m), or None."""
    if m == 3:
        return arithmetic.x3_emptiness(n)
    if n % 2 == 1 and m % 4 == 3 and is_prime(m) and squarefree_part(m + 1) > 1:
        return arithmetic.nonexistence_witness(n, m)
    return None


def _cmd_search(args) -> int:
    outcome = exhaustive_search(args.n, args.m, node_budget=args.budget)
    print(outcome)
    if outcome.status is not SearchStatus.FOUND:
        return EXIT_OK
    sys.stdout.write(format_quh(outcome.pair))
    verdict = _criterion(args.n, args.m)
    if verdict is not None and verdict.empty:
        print(f"error: search found a matrix but the criterion says {verdict}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} is not positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quhmorph", description="Skew-Hadamard morphisms and QUH nonexistence."
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    p = sub.add_parser("paley", help="Paley skew-Hadamard matrix of order q+1 (PM format)")
    p.add_argument("q", type=_positive)
    p.set_defaults(func=_cmd_paley)

    p = sub.add_parser("jacobsthal", help="Jacobsthal matrix of order q (PM format)")
    p.add_argument("q", type=_positive)
    p.set_defaults(func=_cmd_jacobsthal)

    p = sub.add_parser("fks", help="FKS QUH matrix of order q^t (QUH format)")
    p.add_argument("q", type=_positive)
    p.add_argument("t", type=_positive)
    p.set_defaults(func=_cmd_fks)

    p = sub.add_parser("morph", help="real Hadamard matrix from a QUH file and a skew PM file")
    p.add_argument("quh_file", help="QUH file, or - for stdin")
    p.add_argument("skew_file", help="PM file, or - for stdin")
    p.set_defaults(func=_cmd_morph)

    p = sub.add_parser("verify", help="check a PM or QUH file")
    p.add_argument("file")
    p.add_argument("--kind", choices=("hadamard", "skew", "quh"), default="hadamard")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("minpoly-check", help="quartic identity and minimality for a skew PM file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_minpoly_check)

    p = sub.add_parser("nonexist", help="Legendre-symbol emptiness test for H(n, X_p)")
    p.add_argument("n", type=_positive)
    p.add_argument("p", type=_positive)
    p.set_defaults(func=_cmd_nonexist)

    p = sub.add_parser("table", help="odd n <= N with H(n, X_p) provably empty")
    p.add_argument("p", type=_positive)
    p.add_argument("--max-n", type=_positive, required=True)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("split-type", help="splitting of the odd prime q in Q[sqrt(-p), sqrt(s)]")
    p.add_argument("q", type=_positive)
    p.add_argument("p", type=_positive)
    p.set_defaults(func=_cmd_split_type)

    p = sub.add_parser("density", help="share of primes q <= N that obstruct H(n, X_p)")
    p.add_argument("p", type=_positive)
    p.add_argument("--limit", type=_positive, required=True)
    p.set_defaults(func=_cmd_density)

    p = sub.add_parser("search", help="exhaustive search for H(n, X_m)")
    p.add_argument("n", type=_positive)
    p.add_argument("m", type=_positive)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.set_defaults(func=_cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except QuhmorphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
