"""Command-line front end.

Subcommands: check, construct, reduce, homology, cohomology, assoc-group,
leibniz, enumerate, inner.  All I/O uses the JSON formats of jsonio.
Exit codes: 0 pass, 1 axiom failure, 2 input error, 3 budget exceeded.
"""

import argparse
import json
import os
import sys

from . import jsonio
from .constructions import (
    FiniteRack,
    abelianization,
    associated_group_presentation,
    build_conjugation_nrack,
    build_gamma_module_nrack,
    build_module_group_nrack,
    build_z4_module_nrack,
    lift_rack_to_nrack,
    reduce_nrack_to_rack,
)
from .core import classify, inner_map, orbits, validate
from .enumeration import DEFAULT_CANDIDATE_BUDGET, FILTERS, enumerate_nracks
from .errors import BudgetExceededError
from .homology import (
    DEFAULT_COLUMN_BUDGET,
    CoefficientGroup,
    cohomology,
    degenerate_subcomplex,
    homology,
    quandle_quotient_complex,
    rack_chain_complex,
)
from .leibniz import (
    check_derivation,
    check_filippov,
    check_fundamental_identity,
    check_multilinearity_sample,
    check_self_derivation,
)


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _load_table(path: str):
    return jsonio.nrack_from_json(jsonio.load_json(path))


def _parse_degrees(spec: str) -> list[int]:
    """Accepts "2", "1,2,3", and ranges "1-3" or "1..3"."""
    degrees: set[int] = set()
    for part in spec.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
        elif "-" in part and not part.lstrip("-").isdigit():
            lo, hi = part.split("-", 1)
        else:
            lo = hi = part
        try:
            lo, hi = int(lo), int(hi)
        except ValueError as exc:
            raise ValueError(f"cannot parse degree specification {spec!r}") from exc
        if lo > hi:
            raise ValueError(f"empty degree range {part!r}")
        degrees.update(range(lo, hi + 1))
    if not degrees:
        raise ValueError("no degrees requested")
    return sorted(degrees)


def cmd_check(args) -> int:
    report = validate(_load_table(args.input))
    _write(jsonio.dump_document(jsonio.validation_to_json(report)), args.output)
    return 0 if report.is_nrack else 1


def _construct_table(args):
    kind = args.kind
    if kind == "z4":
        return build_z4_module_nrack(args.n, args.m)
    if kind == "gamma":
        for name in ("t", "s"):
            if getattr(args, name) is None:
                raise ValueError(f"construct gamma requires --{name}")
        return build_gamma_module_nrack(args.n, args.m, args.t, args.s)
    if kind == "conj":
        if args.group is None:
            raise ValueError("construct conj requires --group")
        G = jsonio.group_from_json(jsonio.load_json(args.group))
        return build_conjugation_nrack(G, args.n)
    if kind == "lift":
        if args.input is None:
            raise ValueError("construct lift requires --input")
        Q = FiniteRack.from_nrack(_load_table(args.input))
        return lift_rack_to_nrack(Q, args.n)
    if kind == "reduce":
        if args.input is None:
            raise ValueError("construct reduce requires --input")
        return reduce_nrack_to_rack(_load_table(args.input)).to_nrack()
    raise ValueError(f"unknown construction kind {kind!r}")


def cmd_construct(args) -> int:
    if args.kind == "module-group":
        if args.input is None:
            raise ValueError("construct module-group requires --input")
        H, bracket, module, arity = jsonio.module_group_from_json(
            jsonio.load_json(args.input)
        )
        rack, report = build_module_group_nrack(H, bracket, module, arity)
        if not report.is_nrack:
            doc = jsonio.validation_to_json(report)
            doc["table"] = jsonio.nrack_to_json(rack)
            _write(jsonio.dump_document(doc), args.output)
            return 1
        _write(jsonio.dump_document(jsonio.nrack_to_json(rack)), args.output)
        return 0
    rack = _construct_table(args)
    report = validate(rack)
    if not report.is_nrack:
        raise AssertionError("constructor emitted a table that fails validation")
    _write(jsonio.dump_document(jsonio.nrack_to_json(rack)), args.output)
    return 0


def _build_variant_complex(R, variant: str, max_degree: int, budget: int):
    full = rack_chain_complex(R, max_degree, budget=budget)
    if variant == "R":
        return full
    sub = degenerate_subcomplex(R, full)
    if variant == "D":
        return sub
    return quandle_quotient_complex(full, sub)


def _cmd_homology_common(args, compute) -> int:
    R = _load_table(args.input)
    flags = classify(R)
    if not flags.is_nrack:
        print("input table is not an n-rack", file=sys.stderr)
        return 1
    if args.variant in ("D", "Q") and not flags.is_nquandle:
        print(
            f"variant {args.variant} requires an n-quandle and the input is not one",
            file=sys.stderr,
        )
        return 1
    degrees = _parse_degrees(args.degrees)
    if degrees[0] < 1:
        raise ValueError("degrees must be >= 1")
    coeffs = CoefficientGroup.parse(args.coefficients)
    complex_ = _build_variant_complex(R, args.variant, degrees[-1] + 1, args.budget)
    lines = [
        jsonio.dump_line(jsonio.homology_result_to_json(compute(complex_, k, coeffs)))
        for k in degrees
    ]
    _write("\n".join(lines) + "\n", args.output)
    if args.dump_matrices:
        os.makedirs(args.dump_matrices, exist_ok=True)
        for k in range(1, complex_.max_degree + 1):
            path = os.path.join(
                args.dump_matrices, f"boundary_{args.variant}_{k}.txt"
            )
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(complex_.boundary_triplets(k))
    return 0


def cmd_homology(args) -> int:
    return _cmd_homology_common(args, homology)


def cmd_cohomology(args) -> int:
    return _cmd_homology_common(args, cohomology)


def cmd_assoc_group(args) -> int:
    R = _load_table(args.input)
    report = validate(R)
    if not report.is_nrack:
        _write(jsonio.dump_document(jsonio.validation_to_json(report)), args.output)
        return 1
    P = associated_group_presentation(R, paper_form=args.paper_relator)
    doc = {
        "presentation": jsonio.presentation_to_json(P),
        "abelianization": jsonio.invariants_to_json(abelianization(P)),
    }
    _write(jsonio.dump_document(doc), args.output)
    return 0


def cmd_leibniz(args) -> int:
    L = jsonio.tensor_from_json(jsonio.load_json(args.input))
    ok, witness = check_fundamental_identity(L)
    doc = {
        "fundamental_identity": ok,
        "witness": None
        if witness is None
        else {
            "prefix": list(witness[0]),
            "arguments": list(witness[1]),
            "lhs": [str(v) for v in witness[2]],
            "rhs": [str(v) for v in witness[3]],
        },
        "filippov": check_filippov(L),
        "self_derivation": check_self_derivation(L),
        "multilinearity_probe": check_multilinearity_sample(L, seed=args.seed),
        "seed": args.seed,
        "derivation": None,
    }
    if args.operator:
        D = jsonio.operator_from_json(jsonio.load_json(args.operator))
        if D.dimension != L.dimension:
            raise ValueError("operator dimension does not match the tensor")
        doc["derivation"] = check_derivation(L, D)
    _write(jsonio.dump_document(doc), args.output)
    return 0 if ok else 1


def cmd_enumerate(args) -> int:
    report = enumerate_nracks(args.n, args.m, args.filter, budget=args.budget)
    _write(jsonio.dump_document(jsonio.enumeration_report_to_json(report)), args.output)
    return 0


def cmd_inner(args) -> int:
    R = _load_table(args.input)
    report = validate(R)
    if not report.is_nrack:
        _write(jsonio.dump_document(jsonio.validation_to_json(report)), args.output)
        return 1
    doc = {
        "inner_maps": [
            {"args": list(xs), "permutation": list(inner_map(R, xs).permutation)}
            for xs in R.prefixes()
        ],
        "orbits": orbits(R),
    }
    _write(jsonio.dump_document(doc), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nracks",
        description="Finite n-rack toolkit: validation, constructions, "
        "homology, associated groups, Leibniz tensors, enumeration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="classify an operation table")
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", help="build a table and write it as JSON")
    p.add_argument(
        "kind", choices=["z4", "gamma", "conj", "lift", "reduce", "module-group"]
    )
    p.add_argument("--n", type=int, default=2, help="arity of the result")
    p.add_argument("--m", type=int, default=4, help="modulus for z4/gamma")
    p.add_argument("--t", type=int, help="twist unit for gamma")
    p.add_argument("--s", type=int, help="shift coefficient for gamma")
    p.add_argument("--group", help="group JSON file for conj")
    p.add_argument("--input", help="table or bundle JSON file for lift/reduce/module-group")
    p.add_argument("--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("reduce", help="alias of construct reduce")
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_construct, kind="reduce")

    for name, func in (("homology", cmd_homology), ("cohomology", cmd_cohomology)):
        p = sub.add_parser(name, help=f"compute {name} groups of a table")
        p.add_argument("--input", required=True)
        p.add_argument("--variant", choices=["R", "D", "Q"], default="R")
        p.add_argument("--degrees", required=True, help='e.g. "2", "1,3", "1-3"')
        p.add_argument("--coefficients", default="Z", help='"Z" or "Z/d"')
        p.add_argument("--budget", type=int, default=DEFAULT_COLUMN_BUDGET)
        p.add_argument("--dump-matrices", help="directory for triplet-text boundary matrices")
        p.add_argument("--output")
        p.set_defaults(func=func)

    p = sub.add_parser("assoc-group", help="associated group presentation and abelianization")
    p.add_argument("--input", required=True)
    p.add_argument("--paper-relator", action="store_true",
                   help="use the alternative relator prefix ordering")
    p.add_argument("--output")
    p.set_defaults(func=cmd_assoc_group)

    p = sub.add_parser("leibniz", help="verify a structure-constant tensor")
    p.add_argument("--input", required=True)
    p.add_argument("--operator", help="optional linear operator JSON to test as derivation")
    p.add_argument("--seed", type=int, default=0, help="seed for the multilinearity probe")
    p.add_argument("--output")
    p.set_defaults(func=cmd_leibniz)

    p = sub.add_parser("enumerate", help="enumerate tables up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--filter", choices=list(FILTERS), default="nrack")
    p.add_argument("--budget", type=int, default=DEFAULT_CANDIDATE_BUDGET)
    p.add_argument("--output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("inner", help="inner-map permutations and orbits")
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_inner)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
