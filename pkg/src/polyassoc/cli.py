"""Command-line front end.

Subcommands ``check``, ``classify``, and ``analyze`` take ``--ring z|q|zi``,
``--n N``, ``--poly EXPR`` and emit a report (``--format text|json``);
``enumerate`` walks a coefficient box and writes census files.  Exit codes:
0 analysis completed (whatever the verdict), 1 parse error, 2 invalid
flags or budget, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .assoc import (
    AssocVerdict,
    CompositionWitness,
    compose_closed_form,
    compose_substitution,
    is_associative,
)
from .classify import (
    Classification,
    InternalInvariantError,
    NotAssociative,
    classification_params,
    classify_associative,
)
from .oracle import (
    DEFAULT_BUDGET,
    DEFAULT_SEED,
    BudgetError,
    OracleConfig,
    assoc_pointwise,
    candidates_text,
    census_csv,
    enumerate_associative,
    polys_equal_oracle,
)
from .parse import ParseError, parse_poly
from .poly import MAX_ARITY, SparsePoly
from .rings import Ring
from .structure import StructureReport, analyze
from . import __version__

EXIT_OK = 0
EXIT_PARSE_ERROR = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

MAX_CLI_ARITY = (MAX_ARITY + 1) // 2  # compositions live in 2n-1 variables


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyassoc",
        description="Exact associativity analysis of polynomial n-ary operations.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", required=True, choices=["z", "q", "zi"])
    common.add_argument("--n", required=True, type=int, help="arity of the operation")
    common.add_argument("--poly", required=True, help="expression in x1..xn")
    common.add_argument("--format", choices=["text", "json"], default="text")

    for name, handler, blurb in (
        ("check", cmd_check, "decide associativity"),
        ("classify", cmd_classify, "decide associativity and name the family"),
        ("analyze", cmd_analyze, "full report including group structure"),
    ):
        p = sub.add_parser(name, parents=[common], help=blurb)
        p.set_defaults(func=handler)

    en = sub.add_parser("enumerate", help="census of associative multilinear operations")
    en.add_argument("--ring", required=True, choices=["z", "zi"])
    en.add_argument("--n", required=True, type=int)
    en.add_argument("--bound", required=True, type=int, help="coefficient box half-width")
    en.add_argument("--out", required=True, help="output directory for census files")
    en.add_argument("--jobs", type=int, default=1)
    en.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for spot checks")
    en.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    en.add_argument("--prune", action="store_true", help="use sound search-space filters")
    en.add_argument("--dump-candidates", action="store_true")
    en.set_defaults(func=cmd_enumerate)
    return parser


def _validated_arity(n: int) -> int:
    if not 2 <= n <= MAX_CLI_ARITY:
        raise UsageError(f"--n must be in 2..{MAX_CLI_ARITY}, got {n}")
    return n


def _witness_json(witness: CompositionWitness | None) -> dict | None:
    if witness is None:
        return None
    subset = witness.subset
    return {
        "slot": witness.slot,
        "monomial": witness.monomial_str(),
        "subset": list(subset) if subset is not None else None,
        "lhs": str(witness.lhs),
        "rhs": str(witness.rhs),
    }


def _classification_json(cls: Classification, ring: Ring) -> dict:
    block = {"type": cls.type_tag, "clause": cls.clause or None}
    block.update(classification_params(cls, ring))
    return block


def _structure_json(report: StructureReport, ring: Ring) -> dict:
    reduction = None
    if report.reduction is not None:
        reduction = {"binary_op": report.reduction.render()}
        reduction.update(report.reduction.params)
    return {
        "group": report.group,
        "skew": report.skew.render(ring) if report.skew else None,
        "skew_verified": report.skew_verified,
        "skew_endomorphism": report.skew_endomorphism,
        "medial": report.medial,
        "medial_method": report.medial_method,
        "reducible": report.reducible,
        "reduction": reduction,
        "notes": list(report.notes),
    }


def _oracle_check(p: SparsePoly, verdict: AssocVerdict) -> dict:
    try:
        agrees = assoc_pointwise(p, OracleConfig(mode="grid")) == verdict.associative
        mode = "grid"
    except BudgetError:
        agrees = assoc_pointwise(p, OracleConfig(mode="random")) == verdict.associative
        mode = "random"
    return {"mode": mode, "agrees": agrees}


def _build_report(args, level: str) -> dict:
    ring = Ring(args.ring)
    n = _validated_arity(args.n)
    p = parse_poly(args.poly, n, ring)
    verdict = is_associative(p)
    cls: Classification | None = None
    structure: StructureReport | None = None
    if level in ("classify", "analyze"):
        if verdict.associative:
            cls = classify_associative(p.to_multilinear())
        else:
            cls = NotAssociative(verdict.witness)
    if level == "analyze" and verdict.associative:
        structure = analyze(p, cls, ring)
    oracle = _oracle_check(p, verdict)
    if not oracle["agrees"]:
        raise InternalInvariantError("pointwise oracle disagrees with the symbolic verdict")
    return {
        "ring": ring.label,
        "n": n,
        "input": p.render(),
        "multilinear": p.is_multilinear,
        "associative": verdict.associative,
        "witness": _witness_json(verdict.witness),
        "classification": _classification_json(cls, ring) if cls is not None else None,
        "structure": _structure_json(structure, ring) if structure is not None else None,
        "oracle": oracle,
    }


def _emit(report: dict, fmt: str) -> int:
    if fmt == "json":
        print(json.dumps(report, indent=2))
        return EXIT_OK
    print(f"ring: {report['ring']}")
    print(f"n: {report['n']}")
    print(f"input: {report['input']}")
    print(f"multilinear: {'yes' if report['multilinear'] else 'no'}")
    print(f"associative: {'yes' if report['associative'] else 'no'}")
    w = report["witness"]
    if w is not None:
        where = f"S={{{','.join(map(str, w['subset']))}}}" if w["subset"] else w["monomial"]
        print(
            f"witness: slot {w['slot']} vs slot 1 at {where}: "
            f"{w['lhs']} != {w['rhs']}"
        )
    c = report["classification"]
    if c is not None:
        params = "".join(
            f"; {k} = {v}" for k, v in c.items() if k not in ("type", "clause")
        )
        clause = f" ({c['clause']})" if c["clause"] else ""
        print(f"classification: {c['type']}{clause}{params}")
    s = report["structure"]
    if s is not None:
        print("structure:")
        print(f"  group: {s['group']}" + (f"; skew: {s['skew']}" if s["skew"] else ""))
        if s["skew"]:
            print(
                f"  skew identity: {'ok' if s['skew_verified'] else 'FAILED'}; "
                f"endomorphism: {'ok' if s['skew_endomorphism'] else 'FAILED'}"
            )
        print(f"  medial: {'yes' if s['medial'] else 'no'} ({s['medial_method']})")
        line = f"  reducible: {s['reducible']}"
        if s["reduction"] is not None:
            extras = "; ".join(f"{k} = {v}" for k, v in s["reduction"].items() if k != "binary_op")
            line += f"; x*y -> {s['reduction']['binary_op']}" + (f" ({extras})" if extras else "")
        print(line)
        for note in s["notes"]:
            print(f"  note: {note}")
    print(f"oracle: {report['oracle']['mode']} check agrees")
    return EXIT_OK


def cmd_check(args) -> int:
    return _emit(_build_report(args, "check"), args.format)


def cmd_classify(args) -> int:
    return _emit(_build_report(args, "classify"), args.format)


def cmd_analyze(args) -> int:
    return _emit(_build_report(args, "analyze"), args.format)


def cmd_enumerate(args) -> int:
    ring = Ring(args.ring)
    n = _validated_arity(args.n)
    if args.bound < 0:
        raise UsageError(f"--bound must be nonnegative, got {args.bound}")
    if args.jobs < 1:
        raise UsageError(f"--jobs must be positive, got {args.jobs}")
    result = enumerate_associative(
        n, ring, args.bound, budget=args.budget, prune=args.prune, jobs=args.jobs
    )
    spot_cfg = OracleConfig(mode="random", samples=32, seed=args.seed, value_range=16)
    for ml, _ in result.survivors:
        for slot in range(1, n + 1):
            closed = compose_closed_form(ml, slot).to_sparse()
            expanded = compose_substitution(ml.to_sparse(), slot)
            if closed != expanded or not polys_equal_oracle(closed, expanded, spot_cfg):
                raise InternalInvariantError(
                    f"composition paths disagree for {ml.render()} at slot {slot}"
                )
    os.makedirs(args.out, exist_ok=True)
    census_path = os.path.join(args.out, "census.csv")
    with open(census_path, "w") as fh:
        fh.write(census_csv(result))
    if args.dump_candidates:
        with open(os.path.join(args.out, "candidates.txt"), "w") as fh:
            fh.write(candidates_text(result))
    print(f"candidates: {result.total}")
    print(f"checked individually: {result.checked} (bulk rejected: {result.bulk_rejected})")
    print(f"associative: {len(result.survivors)}")
    print(f"dual-path spot check: ok (seed {args.seed})")
    print(f"census: {census_path}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AssertionError, InternalInvariantError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
