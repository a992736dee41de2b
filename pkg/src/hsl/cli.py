"""Command-line front end.

    hsl antipode   --family graphs --object "G:n=2;E=0-1" --method both
    hsl primitives --family graphs --n 3
    hsl verify     --family simplicial --n 3
    hsl fock       --n 3

Every command supports --format json|text; JSON output is byte-identical
across runs and across --jobs settings.  Exit codes: 0 success, 2 parse
error, 3 element budget exceeded, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .antipode import (antipode_axiom_check, closed_form_antipode,
                       declared_adjunctions, reassembly_poset,
                       takeuchi_antipode, box_indecomposables,
                       primitives_basis)
from .errors import (CarrierOverflow, DEFAULT_BUDGET, EngineError,
                     NotSelfAdjoint, ParseError)
from .families import FAMILIES, parse_structure
from .fock import partition_char_poly_check, power_sum_identity_check
from .species import verify_axioms
from .vectors import duality_pairing_check

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_VERIFY = 4


def _budget_from(args) -> int:
    budget = args.budget
    if budget is None:
        env = os.environ.get("HSL_BUDGET")
        if env:
            try:
                budget = int(env)
            except ValueError:
                raise ParseError(f"HSL_BUDGET must be an integer, got {env!r}") from None
        else:
            budget = DEFAULT_BUDGET
    if budget <= 0:
        raise ParseError(f"element budget must be positive, got {budget}")
    return budget


def _family_from(args):
    fam = FAMILIES.get(args.family)
    if fam is None:
        raise ParseError(f"unknown family {args.family!r}; "
                         f"choose from {sorted(FAMILIES)}")
    return fam


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_antipode(args) -> int:
    budget = _budget_from(args)
    fam = _family_from(args)
    expected = {"graphs": "G", "hypergraphs": "H",
                "simplicial": "S", "partitions": "P"}[fam.tag]
    if not args.object.startswith(expected + ":"):
        raise ParseError(f"object {args.object!r} is not a {fam.tag} encoding")
    x = parse_structure(args.object)

    results = []
    vectors = {}
    if args.method in ("takeuchi", "both"):
        vec = takeuchi_antipode(fam, x, budget, jobs=args.jobs)
        vectors["takeuchi"] = vec
        results.append({"method": "takeuchi", "vector": vec.to_json_dict()})
    if args.method in ("closed", "both"):
        closed = closed_form_antipode(fam, x, budget)
        vectors["closed-upper"] = closed.vector
        results.append({"method": "closed-upper",
                        "vector": closed.vector.to_json_dict()})
        if args.method == "both":
            results.append({"method": "closed-lower-paper-literal",
                            "vector": closed.literal_lower_vector.to_json_dict()})

    payload = {"family": fam.tag, "object": x.encode(), "results": results}
    lines = [f"antipode of {x.encode()} ({fam.tag})"]
    for entry in results:
        lines.append(f"  method {entry['method']}:")
        terms = entry["vector"]["terms"]
        if not terms:
            lines.append("    0")
        for enc, coeff in terms.items():
            lines.append(f"    {coeff:>6}  {enc}")
    if args.method == "both":
        agree = vectors["takeuchi"] == vectors["closed-upper"]
        payload["agree"] = agree
        lines.append(f"  agree: {str(agree).lower()}")
        if not agree:
            _emit(args, payload, lines)
            return EXIT_VERIFY
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_primitives(args) -> int:
    budget = _budget_from(args)
    fam = _family_from(args)
    labels = frozenset(range(args.n))
    adj = declared_adjunctions(fam, budget)[0]
    vectors = primitives_basis(adj, labels)
    indec = box_indecomposables(adj, labels)
    payload = {
        "family": fam.tag,
        "n": args.n,
        "adjunction": adj.display,
        "dimension": len(vectors),
        "indecomposables": [x.encode() for x in indec],
        "vectors": [v.to_json_dict() for v in vectors],
    }
    lines = [f"primitives for {fam.tag} at n={args.n} "
             f"({adj.display}): dimension {len(vectors)}"]
    for x, v in zip(indec, vectors):
        lines.append(f"  {x.encode()}")
        for y, c in v.items():
            lines.append(f"    {str(c):>6}  {y.encode()}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    budget = _budget_from(args)
    fam = _family_from(args)
    failures = []

    report = verify_axioms(fam, args.n, budget)
    axioms_payload = {r.name: {"passed": r.passed, "witness": r.witness}
                      for r in report.results}
    if not report.passed:
        failures.append("axioms")
    lines = report.lines()

    adj_payload = []
    for adj in declared_adjunctions(fam, budget):
        galois = adj.verify_all_splits(frozenset(range(args.n)))
        adj_payload.append({"kind": adj.kind, "display": adj.display,
                            "passed": galois.ok, "reason": galois.reason})
        lines.append(f"adjunction {adj.display}: {'pass' if galois.ok else 'FAIL'}")
        if not galois.ok:
            failures.append(f"adjunction {adj.kind}")
        duality = duality_pairing_check(
            fam, lambda L, a=adj: a.poset(L), adj.box, args.n)
        adj_payload[-1]["duality"] = duality.ok
        lines.append(f"  duality pairing: {'pass' if duality.ok else 'FAIL'}")
        if not duality.ok:
            failures.append(f"duality {adj.kind}")

    poset_ok = _reassembly_poset_axioms(fam, args.n, budget)
    lines.append(f"reassembly order is a poset: {'pass' if poset_ok else 'FAIL'}")
    if not poset_ok:
        failures.append("reassembly poset")

    conv_ok, _ = antipode_axiom_check(fam, min(args.n, 3), budget=budget)
    lines.append(f"antipode convolution identity: {'pass' if conv_ok else 'FAIL'}")
    if not conv_ok:
        failures.append("convolution")

    payload = {"family": fam.tag, "n": args.n, "axioms": axioms_payload,
               "adjunctions": adj_payload, "reassembly_poset": poset_ok,
               "convolution": conv_ok, "passed": not failures}
    lines.append("all checks passed" if not failures
                 else f"FAILED: {', '.join(failures)}")
    _emit(args, payload, lines)
    return EXIT_OK if not failures else EXIT_VERIFY


def _reassembly_poset_axioms(fam, n: int, budget: int) -> bool:
    labels = frozenset(range(n))
    view = reassembly_poset(fam, labels, budget)
    elems = view.carrier()
    for x in elems:
        ups = view.upset(x)
        if x not in ups:
            return False
        for y in ups:
            if view.leq(y, x) and y != x:
                return False
            for z in view.upset(y):
                if not view.leq(x, z):
                    return False
    return True


def cmd_fock(args) -> int:
    budget = _budget_from(args)
    power = power_sum_identity_check(args.n, budget)
    char = partition_char_poly_check(args.n, budget)
    payload = {
        "n": args.n,
        "power_sum": {
            "proportional": power.proportional,
            "scalar": str(power.scalar) if power.scalar is not None else None,
            "printed_expression": power.printed_expression_status,
            "image_monomial": power.image_monomial.to_json_dict(),
        },
        "char_poly": {
            "matching_conventions": [f"{side}/{name}" for side, name in char.matches],
            "falling_factorial": json.loads(char.falling.to_json()),
            "value_at_minus_one_ok": char.value_at_minus_one_ok,
        },
    }
    lines = power.lines() + char.lines()
    ok = power.proportional and char.ok
    payload["passed"] = ok
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hsl",
        description="Exact computations with order-compatible merge/split "
                    "structures: antipodes, primitives, axiom sweeps, and "
                    "symmetric-function checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, family=True, n=False, obj=False, method=False):
        if family:
            p.add_argument("--family", required=True,
                           help="graphs | hypergraphs | simplicial | partitions")
        if obj:
            p.add_argument("--object", required=True,
                           help="canonical structure encoding")
        if n:
            p.add_argument("--n", type=int, required=True,
                           help="label-set size bound")
        if method:
            p.add_argument("--method", choices=("takeuchi", "closed", "both"),
                           default="both")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--budget", type=int, default=None,
                       help=f"element budget (default {DEFAULT_BUDGET}, "
                            f"env HSL_BUDGET)")
        p.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                       help="parallel workers for the alternating sum")

    p_anti = sub.add_parser("antipode", help="antipode of one structure")
    common(p_anti, obj=True, method=True)
    p_anti.set_defaults(fn=cmd_antipode)

    p_prim = sub.add_parser("primitives", help="primitive basis at size n")
    common(p_prim, n=True)
    p_prim.set_defaults(fn=cmd_primitives)

    p_verify = sub.add_parser("verify", help="axiom/adjunction/duality sweep")
    common(p_verify, n=True)
    p_verify.set_defaults(fn=cmd_verify)

    p_fock = sub.add_parser("fock", help="symmetric-function checks")
    common(p_fock, family=False, n=True)
    p_fock.set_defaults(fn=cmd_fock)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CarrierOverflow as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (NotSelfAdjoint, EngineError) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
