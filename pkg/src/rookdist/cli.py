"""Command-line front end.  Every command prints JSON lines on stdout.

Exit codes: 0 pass / found / distinguishing, 1 negative verdict or failed
check, 2 budget refusal, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import bounds
from .constructor import Policy, Status, solve
from .corpus import STRATA, dumps_corpus, generate_corpus
from .errors import BoundViolation, BudgetExceeded, GridError, Indeterminate, RookDistError
from .exact import distinguishing_number
from .grid import Coloring, GridSpec, ListAssignment
from .oracle import (LIST_BUDGET, NAIVE_BUDGET, SEARCH_BUDGET, is_distinguishing,
                     list_distinguishing_exhaustive, min_distinguishing_number,
                     naive_is_distinguishing)
from .poly import closed_form_coefficient, cn_list_coloring, evaluate_F, target_coefficient
from .validation import DEFAULT_SEED, MODULES, run_full_validation

EXIT_OK, EXIT_NEGATIVE, EXIT_REFUSED, EXIT_INTERNAL = 0, 1, 2, 3


def emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=False, default=str) + "\n")


def _read_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _seed(args) -> int:
    env = os.environ.get("RD_SEED")
    return int(env) if env is not None else args.seed


def _refused(exc: BudgetExceeded) -> int:
    emit({"status": "refused", "detail": str(exc), "needed": exc.needed, "budget": exc.budget})
    return EXIT_REFUSED


def cmd_verify(args) -> int:
    c = Coloring.from_json(_read_json(args.coloring))
    cert = naive_is_distinguishing(c, args.budget) if args.naive else is_distinguishing(c)
    emit(cert.to_json())
    return EXIT_OK if cert.verdict else EXIT_NEGATIVE


def cmd_min_d(args) -> int:
    k, witness = min_distinguishing_number(GridSpec(args.n, args.m), args.budget)
    emit({"n": args.n, "m": args.m, "value": k, "witness": witness.to_json()})
    return EXIT_OK


def cmd_exact_d(args) -> int:
    try:
        res = distinguishing_number(args.n, args.m, args.budget)
    except Indeterminate as exc:
        emit({"status": "indeterminate", "candidates": list(exc.candidates), "detail": str(exc)})
        return EXIT_REFUSED
    emit(res.to_json())
    return EXIT_OK


def cmd_cn_coeff(args) -> int:
    got = target_coefficient(args.n, max_n=args.max_n, full=True if args.full else None)
    want = closed_form_coefficient(args.n)
    emit({"n": args.n, "coefficient": got, "prod_factorials": want, "match": got == want})
    return EXIT_OK if got == want else EXIT_NEGATIVE


def cmd_cn_solve(args) -> int:
    L = ListAssignment.from_json(_read_json(args.lists))
    c = cn_list_coloring(L)
    emit({"status": "found", "coloring": c.to_json(), "F": evaluate_F(L.grid.n, c),
          "certificate": is_distinguishing(c).to_json()})
    return EXIT_OK


def cmd_solve(args) -> int:
    L = ListAssignment.from_json(_read_json(args.lists))
    res = solve(L, budget=args.budget, policy=args.policy, width=args.width)
    emit(res.to_json(emit_certificate=args.emit_certificate))
    return {Status.FOUND: EXIT_OK, Status.NONEXISTENT: EXIT_NEGATIVE,
            Status.REFUSED: EXIT_REFUSED}[res.status]


def cmd_solve_exhaustive(args) -> int:
    L = ListAssignment.from_json(_read_json(args.lists))
    c = list_distinguishing_exhaustive(L, args.budget)
    if c is None:
        emit({"status": "nonexistent"})
        return EXIT_NEGATIVE
    emit({"status": "found", "coloring": c.to_json()})
    return EXIT_OK


def cmd_bounds(args) -> int:
    try:
        if args.which == "lemma4":
            rep = bounds.check_two_term_bound(args.n, args.r)
        elif args.which == "lemma6":
            rep = bounds.check_many_term_bound(args.n, args.k, args.r, prec=args.prec)
        elif args.which == "conjecture":
            rep = bounds.check_multinomial_conjecture(args.n, args.k, args.r)
        elif args.which == "binom":
            rep = bounds.check_binomial_inequality(args.nmax, args.grid, prec=args.prec)
        else:
            rep = bounds.check_log_monotonicity(args.nmax, prec=args.prec)
    except BoundViolation as exc:
        emit({"check": args.which, "pass": False, "detail": str(exc),
              "counterexample": bounds.to_jsonable(exc.counterexample)})
        return EXIT_NEGATIVE
    emit(rep.to_json())
    return EXIT_OK if rep.passed else EXIT_NEGATIVE


def cmd_gen(args) -> int:
    corpus = generate_corpus(args.n, args.m, args.list_size, args.universe, args.count,
                             _seed(args), args.stratum)
    text = dumps_corpus(corpus)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_validate(args) -> int:
    only = set(args.module) if args.module else None
    results = run_full_validation(args.budget, only, _seed(args), args.jobs)
    for r in results:
        emit(r.to_json())
        print(r.line(), file=sys.stderr)
    statuses = {r.status for r in results}
    emit({"summary": True, "criteria": len(results),
          "passed": sum(r.status == "pass" for r in results),
          "failed": sum(r.status == "fail" for r in results),
          "refused": sum(r.status == "refused" for r in results)})
    if "fail" in statuses:
        return EXIT_NEGATIVE
    if "refused" in statuses:
        return EXIT_REFUSED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rookdist", description=__doc__.splitlines()[0])
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="decide whether a coloring is distinguishing")
    s.add_argument("coloring", help="coloring JSON file, or - for stdin")
    s.add_argument("--naive", action="store_true", help="use the full S_n x S_m enumeration")
    s.add_argument("--budget", type=int, default=NAIVE_BUDGET)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("min-d", help="exhaustive distinguishing number")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--budget", type=int, default=SEARCH_BUDGET)
    s.set_defaults(func=cmd_min_d)

    s = sub.add_parser("exact-d", help="closed-form distinguishing number")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--budget", type=int, default=SEARCH_BUDGET)
    s.set_defaults(func=cmd_exact_d)

    s = sub.add_parser("cn-coeff", help="target coefficient of the certificate polynomial")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--full", action="store_true", help="expand every monomial")
    s.add_argument("--max-n", type=int, default=4)
    s.set_defaults(func=cmd_cn_coeff)

    s = sub.add_parser("cn-solve", help="Nullstellensatz solver for K_n x K_{n+1}")
    s.add_argument("--lists", required=True)
    s.set_defaults(func=cmd_cn_solve)

    s = sub.add_parser("solve", help="two-phase list-distinguishing constructor")
    s.add_argument("--lists", required=True)
    s.add_argument("--budget", type=int, default=LIST_BUDGET)
    s.add_argument("--policy", choices=[p.value for p in Policy], default=Policy.UNIFORM.value)
    s.add_argument("--width", type=int, default=None, help="A width for --policy prefix")
    s.add_argument("--emit-certificate", action="store_true")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("solve-exhaustive", help="exhaustive list-distinguishing search")
    s.add_argument("--lists", required=True)
    s.add_argument("--budget", type=int, default=LIST_BUDGET)
    s.set_defaults(func=cmd_solve_exhaustive)

    s = sub.add_parser("bounds", help="coefficient and binomial inequality checks")
    bsub = s.add_subparsers(dest="which", required=True)
    b = bsub.add_parser("lemma4", help="k = 2: coefficients <= binom(n, ceil(n/2))")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--r", type=int, default=None)
    for name, text in (("lemma6", "k >= 3: coefficients <= C k^(n+1) / n^(1/4)"),
                       ("conjecture", "search for coefficients above the balanced multinomial")):
        b = bsub.add_parser(name, help=text)
        b.add_argument("--n", type=int, required=True)
        b.add_argument("--k", type=int, required=True)
        b.add_argument("--r", type=int, default=None)
    b = bsub.add_parser("binom", help="f(n, a) < C for 1 <= a < n <= nmax")
    b.add_argument("--nmax", type=int, required=True)
    b.add_argument("--grid", type=int, default=16)
    b = bsub.add_parser("monotone", help="monotonicity of the log terms behind the binom check")
    b.add_argument("--nmax", type=int, required=True)
    for b in bsub.choices.values():
        b.add_argument("--prec", type=int, default=bounds.DEFAULT_PREC, help="interval precision in bits")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("gen", help="seeded list-assignment corpus (JSON lines)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--list-size", type=int, required=True)
    s.add_argument("--universe", type=int, required=True)
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--stratum", choices=STRATA, default="random")
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("validate", help="run the acceptance suite")
    s.add_argument("--budget", type=int, default=SEARCH_BUDGET)
    s.add_argument("--module", action="append", choices=MODULES,
                   help="only this module's criteria (repeatable)")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    s.set_defaults(func=cmd_validate)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        return _refused(exc)
    except (GridError, RookDistError) as exc:
        print(json.dumps({"error": type(exc).__name__, "detail": str(exc)}), file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001 - last-resort exit code
        print(json.dumps({"error": type(exc).__name__, "detail": str(exc)}), file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
