"""Command-line interface.

Verbs:
  solve     rainbow | transversal | egz | mcpath  (witness JSON or "infeasible")
  verify    drisko | general | bgs | extremal | counting | dichotomy | egz |
            egz-extremal | transversal | sharpness  (campaign report JSON)
  generate  instance files, including the canonical cycle family
  classify  family | multiset  (classification JSON)

Exit codes: 0 success or clean campaign, 1 infeasible instance or campaign
violations, 2 malformed input or impossible generator spec, 3 step budget
exhausted, 4 internal invariant failure (never expected). Results go to
stdout as JSON with sorted keys; diagnostics go to stderr. The environment
variable RAINBOWKIT_BUDGET overrides the default brute-force step budget.

Instance file schemas are documented in ``rainbowkit.jsonio``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import jsonio
from .campaigns import THEOREMS, run_campaign
from .errors import (
    BudgetExceeded,
    DichotomyViolation,
    GuaranteeViolation,
    InfeasibleSpec,
    InputError,
    PreconditionError,
    RainbowkitError,
    TheoremViolation,
)
from .network_paths import find_multicolored_st_path
from .oracle import DEFAULT_BUDGET, GenSpec, canonical_cycle_family, generate
from .rainbow_solver import classify_family, find_rainbow_matching
from .reductions import (
    ResidueMultiset,
    classify_multiset,
    find_transversal,
    find_zero_sum_subset,
)

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_INTERNAL = 4


def _budget() -> int:
    raw = os.environ.get("RAINBOWKIT_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
        if value < 1:
            raise ValueError
    except ValueError:
        raise InputError(f"RAINBOWKIT_BUDGET must be a positive integer, got {raw!r}")
    return value


def _emit(obj: object) -> None:
    print(json.dumps(obj, sort_keys=True))


def _load(path: str) -> object:
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}")


def _parse_elements(raw: str, where: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in raw.split(",") if part != "")
    except ValueError:
        raise InputError(f"{where}: expected a comma-separated integer list, got {raw!r}")


def _multiset_argument(args: argparse.Namespace) -> ResidueMultiset:
    if args.input:
        return jsonio.multiset_from_obj(_load(args.input))
    if args.n is None or args.elements is None:
        raise InputError("need either --input or both --n and --elements")
    try:
        return ResidueMultiset(args.n, _parse_elements(args.elements, "--elements"))
    except PreconditionError as exc:
        raise InputError(str(exc))


def _cmd_solve(args: argparse.Namespace) -> int:
    if args.kind != "egz" and not args.input:
        raise InputError(f"solve {args.kind} needs --input")
    if args.kind == "rainbow":
        family = jsonio.family_from_obj(_load(args.input))
        if args.target is None:
            raise InputError("solve rainbow needs --target")
        found = find_rainbow_matching(family, args.target)
        if found is None:
            print("infeasible")
            return EXIT_INFEASIBLE
        _emit(jsonio.rainbow_to_obj(found))
        return EXIT_OK
    if args.kind == "transversal":
        matrix = jsonio.matrix_from_obj(_load(args.input))
        found = find_transversal(matrix)
        if found is None:
            print("infeasible")
            return EXIT_INFEASIBLE
        _emit(jsonio.transversal_to_obj(found))
        return EXIT_OK
    if args.kind == "egz":
        multiset = _multiset_argument(args)
        witness = find_zero_sum_subset(multiset)
        if witness is None:
            print("infeasible")
            return EXIT_INFEASIBLE
        _emit(jsonio.zero_sum_to_obj(witness))
        return EXIT_OK
    assert args.kind == "mcpath"
    network = jsonio.network_from_obj(_load(args.input))
    witness = find_multicolored_st_path(network, len(network.inner_nodes))
    if witness is None:
        print("infeasible")
        return EXIT_INFEASIBLE
    _emit(jsonio.colored_path_to_obj(witness, network.source_indices))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    report = run_campaign(
        args.theorem,
        n=args.n,
        samples=args.samples,
        exhaustive=args.exhaustive,
        seed=args.seed,
        budget=_budget(),
    )
    _emit(report.to_obj())
    return EXIT_OK if report.violations == 0 else EXIT_INFEASIBLE


def _generate_spec(args: argparse.Namespace):
    chosen = [
        name for name in
        ("canonical", "family_uniform", "family_mixed", "network", "multiset",
         "matrix")
        if getattr(args, name) is not None]
    if len(chosen) != 1:
        raise InputError("pick exactly one instance kind to generate")
    kind = chosen[0]
    if kind == "canonical":
        if args.canonical != "c2n":
            raise InputError(f"unknown canonical instance {args.canonical!r}")
        if args.n is None:
            raise InputError("--canonical c2n needs --n")
        return jsonio.family_to_obj(canonical_cycle_family(args.n))
    if kind == "family_uniform":
        n, m, side = _parse_elements(args.family_uniform, "--family-uniform")[:3]
        return jsonio.family_to_obj(generate(GenSpec.family_uniform(n, m, side, args.seed)))
    if kind == "family_mixed":
        sizes = _parse_elements(args.family_mixed, "--family-mixed")
        if args.side is None:
            raise InputError("--family-mixed needs --side")
        return jsonio.family_to_obj(generate(GenSpec.family_mixed(sizes, args.side, args.seed)))
    if kind == "network":
        inner, groups, per_group = _parse_elements(args.network, "--network")[:3]
        return jsonio.network_to_obj(generate(GenSpec.network(inner, groups, per_group, args.seed)))
    if kind == "multiset":
        n, size = _parse_elements(args.multiset, "--multiset")[:2]
        return jsonio.multiset_to_obj(generate(GenSpec.multiset(n, size, args.seed)))
    assert kind == "matrix"
    m, n, symbols = _parse_elements(args.matrix, "--matrix")[:3]
    return jsonio.matrix_to_obj(generate(GenSpec.matrix(m, n, symbols, args.seed)))


def _cmd_generate(args: argparse.Namespace) -> int:
    obj = _generate_spec(args)
    text = json.dumps(obj, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _cmd_classify(args: argparse.Namespace) -> int:
    if args.kind == "family":
        if not args.input:
            raise InputError("classify family needs --input")
        family = jsonio.family_from_obj(_load(args.input))
        try:
            verdict = classify_family(family)
        except PreconditionError as exc:
            raise InputError(str(exc))
        _emit(jsonio.family_classification_to_obj(verdict))
        return EXIT_OK
    assert args.kind == "multiset"
    multiset = _multiset_argument(args)
    try:
        verdict = classify_multiset(multiset)
    except PreconditionError as exc:
        raise InputError(str(exc))
    _emit(jsonio.multiset_classification_to_obj(verdict))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowkit",
        description="Rainbow matchings, multicolored paths, transversals, "
                    "zero-sum subsets: solvers and verification campaigns.")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="Solve a single instance from a file.")
    solve.add_argument("kind", choices=("rainbow", "transversal", "egz", "mcpath"))
    solve.add_argument("--input", help="Instance file (JSON).")
    solve.add_argument("--target", type=int, help="Rainbow matching size to reach.")
    solve.add_argument("--n", type=int, help="Modulus for inline egz input.")
    solve.add_argument("--elements", help="Comma-separated residues for inline egz input.")

    verify = sub.add_parser("verify", help="Run a theorem-verification campaign.")
    verify.add_argument("theorem", choices=THEOREMS)
    verify.add_argument("--n", type=int, help="Size parameter of the campaign.")
    verify.add_argument("--samples", type=int, help="Number of random instances.")
    verify.add_argument("--exhaustive", action="store_true",
                        help="Enumerate the whole instance space instead of sampling.")
    verify.add_argument("--seed", type=int, default=0)

    gen = sub.add_parser("generate", help="Write an instance file.")
    gen.add_argument("--canonical", help="Named instance; c2n is the split-cycle family.")
    gen.add_argument("--family-uniform", help="n,m,side")
    gen.add_argument("--family-mixed", help="comma-separated matching sizes")
    gen.add_argument("--side", type=int, help="Side size for --family-mixed.")
    gen.add_argument("--network", help="inner,groups,paths_per_group")
    gen.add_argument("--multiset", help="n,size")
    gen.add_argument("--matrix", help="rows,cols,symbols")
    gen.add_argument("--n", type=int, help="Parameter for --canonical.")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", help="Output path; stdout when omitted.")

    classify = sub.add_parser("classify", help="Classify a family or residue multiset.")
    classify.add_argument("kind", choices=("family", "multiset"))
    classify.add_argument("--input", help="Instance file (JSON).")
    classify.add_argument("--n", type=int, help="Modulus for inline multiset input.")
    classify.add_argument("--elements", help="Comma-separated residues.")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = {
        "solve": _cmd_solve,
        "verify": _cmd_verify,
        "generate": _cmd_generate,
        "classify": _cmd_classify,
    }[args.command]
    try:
        return handler(args)
    except (InputError, InfeasibleSpec, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GuaranteeViolation, TheoremViolation, DichotomyViolation) as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except RainbowkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
