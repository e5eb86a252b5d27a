"""Command-line front end: ``csym-order <subcommand>``.

Every subcommand writes one JSON document to stdout and a short human
summary to stderr.  Exit codes: 0 all checks pass, 1 a check failed,
2 bad input or a size cap was hit.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fixtures
from .errors import CapExceeded, CsymError
from .lattice import DEFAULT_MINOR_BUDGET, IntMatrix, order_matrix
from .polytope import Polytope, csym_polytope, order_polytope
from .poset import Poset
from .report import (basis_listing, classify, ehrhart_report, groebner_summary,
                     negative_example, parse_order, sweep)


class InputError(Exception):
    pass


def load_poset(ref: str) -> Poset:
    """A poset JSON file path or a named fixture."""
    path = Path(ref)
    if path.is_file():
        try:
            return Poset.from_json(path.read_text())
        except (ValueError, json.JSONDecodeError) as exc:
            raise InputError(f"{ref}: {exc}") from exc
    try:
        return fixtures.named_poset(ref)
    except KeyError as exc:
        raise InputError(f"{ref}: not a file or known fixture") from exc
    except CsymError as exc:
        raise InputError(str(exc)) from exc


def load_matrix(ref: str) -> IntMatrix:
    """An integer matrix JSON file path or a named matrix fixture."""
    path = Path(ref)
    if path.is_file():
        try:
            return IntMatrix.from_json(path.read_text())
        except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
            raise InputError(f"{ref}: {exc}") from exc
    try:
        return fixtures.named_matrix(ref)
    except KeyError as exc:
        raise InputError(f"{ref}: not a file or known matrix fixture") from exc


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_classify(args) -> int:
    p = load_poset(args.poset)
    report = classify(p, seed=args.seed, random_orders=args.random_orders, normal_T=args.dilate_max,
                      minor_budget=args.minor_budget, source=args.poset)
    _emit(report.to_dict())
    g = report.geometry
    _note(f"{report.verdict}: {report.ideals_count} ideals, "
          f"{report.groebner['initial_generators']} initial generators, delta={g['delta']}")
    return 0 if report.passed else 1


def cmd_gb_verify(args) -> int:
    p = load_poset(args.poset)
    try:
        name, order = parse_order(p, args.order)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    summary = groebner_summary(p, order)
    for line in basis_listing(p, order):
        print(line)
    ok = (summary["buchberger_pass"] and summary["all_squarefree"] and summary["all_quadratic"]
          and summary["all_in_kernel"])
    _note(f"order={name} buchberger={'PASS' if summary['buchberger_pass'] else 'FAIL'} "
          f"initial_generators={summary['initial_generators']} "
          f"squarefree={summary['all_squarefree']} quadratic={summary['all_quadratic']}")
    return 0 if ok else 1


def cmd_ehrhart(args) -> int:
    antichain_d = None
    if args.polytope:
        try:
            poly = Polytope.from_json(Path(args.polytope).read_text())
        except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
            raise InputError(f"{args.polytope}: {exc}") from exc
    elif args.matrix:
        try:
            poly = csym_polytope(load_matrix(args.matrix))
        except CsymError as exc:
            raise InputError(str(exc)) from exc
    else:
        if not args.poset:
            raise InputError("give a poset, --matrix or --polytope")
        p = load_poset(args.poset)
        if args.order_polytope:
            poly = order_polytope(p)
        else:
            poly = csym_polytope(order_matrix(p))
            if all(not b for b in p.below):
                antichain_d = p.d
    out = ehrhart_report(poly, args.dilate_max, antichain_d)
    _emit(out)
    _note(f"delta={out['delta']} counts={out['counts']}")
    if "closed_form" in out and not out["closed_form"]["agrees"]:
        return 1
    return 0


def cmd_negative_example(args) -> int:
    if args.kernel_degree < 3:
        raise InputError("the cubic generation check needs --kernel-degree >= 3")
    out = negative_example(normal_T=args.dilate_max, kernel_degree_cap=args.kernel_degree)
    _emit(out)
    for c in out["claims"]:
        _note(f"[{'ok' if c['reproduced'] else 'NOT REPRODUCED'}] {c['claim']}: "
              f"expected {c['expected']}, observed {c['observed']}")
    return 0 if out["all_reproduced"] else 1


def cmd_sweep(args) -> int:
    if args.dmax > 5 or (args.dmax > 4 and not args.allow_slow):
        raise InputError("--dmax above 4 needs --allow-slow (hard cap 5)")
    out = sweep(args.dmax, seed=args.seed, random_orders=args.random_orders)
    _emit(out)
    _note(f"{'d':>2} {'posets':>7} {'pass':>6} {'prop':>6}")
    for d, s in out["summary"].items():
        _note(f"{d:>2} {s['posets']:>7} {s['pass']:>6} {s['prop_equivalence']:>6}")
    return 0 if out["all_pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for random compatible orders")
    common.add_argument("--minor-budget", type=int, default=DEFAULT_MINOR_BUDGET)
    common.add_argument("--dilate-max", type=int, default=3)
    common.add_argument("--kernel-degree", type=int, default=3)
    parser = argparse.ArgumentParser(prog="csym-order", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="full pipeline on one poset", parents=[common])
    p.add_argument("poset", help="poset JSON file or fixture (example-2.1, antichain:<d>, chain:<d>)")
    p.add_argument("--random-orders", type=int, default=3)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gb-verify", help="print and verify the quadratic Gröbner basis", parents=[common])
    p.add_argument("poset")
    p.add_argument("--order", default="canonical", help="canonical or seed:N")
    p.set_defaults(func=cmd_gb_verify)

    p = sub.add_parser("ehrhart", help="dilate counts, Ehrhart polynomial and delta-vector", parents=[common])
    p.add_argument("poset", nargs="?", default=None)
    p.add_argument("--polytope", help="polytope JSON file instead of a poset")
    p.add_argument("--matrix", help="matrix JSON file or fixture; uses its symmetric polytope")
    p.add_argument("--order-polytope", action="store_true", help="use O(P) instead of the symmetric polytope")
    p.set_defaults(func=cmd_ehrhart)

    p = sub.add_parser("negative-example", help="re-check the non-normal configuration", parents=[common])
    p.set_defaults(func=cmd_negative_example)

    p = sub.add_parser("sweep", help="classify every labeled poset up to --dmax", parents=[common])
    p.add_argument("--dmax", type=int, default=4)
    p.add_argument("--allow-slow", action="store_true")
    p.add_argument("--random-orders", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        _note(f"input error: {exc}")
        return 2
    except CapExceeded as exc:
        _note(f"cap exceeded: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
