"""Command-line front end.

Subcommands::

    field-info      modulus, primitive elements, admissible binomial constants
    check-binomial  is x^n - alpha0 irreducible over GF(p^m)?
    build-code      dimension / size / generators of one code
    distance        closed-form and/or enumerated minimum pair distance
    scan            "mds" or "consistency" sweep over a whole ring
    tables          the MDS codes of a ring, as md / csv / json rows

All commands emit a JSON object {"config": ..., "results": [...],
"version": ...} unless a different --format is chosen where supported.
Exit codes: 0 success, 2 refused construction or invalid parameters,
3 verification mismatch, 4 budget exceeded where exactness was required.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from . import __version__
from .codes import (
    DEFAULT_BUDGET,
    build_code,
    generators,
    log_size,
    spec_from_text,
    spec_generator_text,
    spec_to_text,
)
from .errors import BudgetExceeded, PairCodeError, VerificationMismatch
from .galois import Field, irreducible_binomial_constants
from .pairmetric import min_distance_brute
from .quotient import QuotientRing
from .theory import (
    consistency_scan,
    mds_classify,
    min_pair_distance,
    min_pair_distance_field,
)

EXIT_OK = 0
EXIT_REFUSED = 2
EXIT_MISMATCH = 3
EXIT_BUDGET = 4


def _add_field_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--p", type=int, required=True, help="characteristic")
    sp.add_argument("--m", type=int, default=1, help="extension degree")
    sp.add_argument("--modulus", type=str, default=None,
                    help="field modulus digits, constant first (e.g. 1,0,1)")


def _add_ring_args(sp: argparse.ArgumentParser) -> None:
    _add_field_args(sp)
    sp.add_argument("--s", type=int, required=True, help="p-power exponent")
    sp.add_argument("--n", type=int, required=True, help="coprime length part")
    sp.add_argument("--alpha0", type=str, required=True,
                    help="field element with x^n - alpha0 irreducible "
                         "(digits, constant first)")
    sp.add_argument("--beta", type=str, default=None,
                    help="if given, work over GF+uGF with lam = "
                         "alpha0^(p^s) + u*beta")


def _field_from(args) -> Field:
    modulus = None
    if args.modulus is not None:
        modulus = [int(c) for c in args.modulus.split(",")]
    return Field(args.p, args.m, modulus)


def _ring_from(args) -> QuotientRing:
    field = _field_from(args)
    alpha0 = field.parse_element(args.alpha0)
    beta = field.parse_element(args.beta) if args.beta is not None else None
    return QuotientRing(field, args.n, args.s, alpha0, beta)


def _ring_config(ring: QuotientRing) -> dict:
    return {
        "p": ring.p,
        "m": ring.m,
        "s": ring.s,
        "n": ring.n,
        "N": ring.N,
        "modulus": list(ring.field.modulus),
        "alpha0": ring.field.format_element(ring.alpha0),
        "beta": (None if ring.beta is None
                 else ring.field.format_element(ring.beta)),
        "ring": repr(ring),
    }


def _emit(payload: dict, out) -> None:
    json.dump(payload, out, indent=2, sort_keys=True)
    out.write("\n")


def cmd_field_info(args, out) -> int:
    field = _field_from(args)
    orders = {a: field.order(a) for a in range(1, field.q)}
    primitive = [field.format_element(a) for a, e in orders.items()
                 if e == field.q - 1]
    lams = [field.format_element(a)
            for a in irreducible_binomial_constants(field, args.n)]
    _emit({
        "config": {"p": field.p, "m": field.m, "n": args.n},
        "results": [{
            "q": field.q,
            "modulus": list(field.modulus),
            "primitive_elements": primitive,
            "irreducible_binomial_constants": lams,
        }],
        "version": __version__,
    }, out)
    return EXIT_OK


def cmd_check_binomial(args, out) -> int:
    from .galois import binomial_irreducible

    field = _field_from(args)
    lam = field.parse_element(args.alpha0)
    ok = binomial_irreducible(field, args.n, lam)
    _emit({
        "config": {"p": field.p, "m": field.m, "n": args.n,
                   "alpha0": field.format_element(lam)},
        "results": [{
            "irreducible": ok,
            "order": field.order(lam),
        }],
        "version": __version__,
    }, out)
    return EXIT_OK


def cmd_build_code(args, out) -> int:
    ring = _ring_from(args)
    spec = spec_from_text(args.spec, ring)
    code = build_code(ring, spec)
    _emit({
        "config": _ring_config(ring),
        "results": [{
            "spec": spec_to_text(spec),
            "generator": spec_generator_text(ring, spec),
            "generator_polys": [repr(g) for g in generators(ring, spec)],
            "dim_p": code.dim_p,
            "log_size": log_size(ring, spec),
            "size": code.size,
        }],
        "version": __version__,
    }, out)
    return EXIT_OK


def cmd_distance(args, out) -> int:
    ring = _ring_from(args)
    spec = spec_from_text(args.spec, ring)
    result: dict = {"spec": spec_to_text(spec)}
    formula = None
    if args.method in ("formula", "both"):
        formula = min_pair_distance(ring, spec)
        result["formula"] = {"d_sp": formula, "method": "closed-form"}
        if not ring.is_chain:
            _, branch = min_pair_distance_field(ring.n, ring.p, ring.s, spec.i)
            result["formula"]["branch"] = branch.rule
    exit_code = EXIT_OK
    if args.method in ("brute", "both"):
        code = build_code(ring, spec)
        rep = min_distance_brute(code, "pair", args.budget)
        result["brute"] = rep.to_dict()
        if rep.method != "exhaustive":
            result["brute"]["warning"] = "budget exceeded; upper bound only"
            if args.method == "both":
                raise BudgetExceeded(
                    f"{code.size} codewords exceed --budget {args.budget}; "
                    "cannot verify the closed form exactly")
        if args.method == "both":
            result["match"] = (rep.d_sp == formula)
            if not result["match"]:
                _emit({"config": _ring_config(ring), "results": [result],
                       "version": __version__}, out)
                raise VerificationMismatch(
                    f"closed form {formula} != enumerated {rep.d_sp}")
    _emit({
        "config": _ring_config(ring),
        "results": [result],
        "version": __version__,
    }, out)
    return exit_code


def cmd_scan(args, out) -> int:
    ring = _ring_from(args)
    rng = random.Random(args.seed)
    if args.target == "consistency":
        report = consistency_scan(ring, budget=args.budget,
                                  unit_samples=args.unit_samples, rng=rng)
        _emit({
            "config": _ring_config(ring),
            "results": [report.to_dict()],
            "version": __version__,
        }, out)
        return EXIT_OK if report.ok else EXIT_MISMATCH
    verdicts = mds_classify(ring, budget=None,
                            unit_samples=args.unit_samples, rng=rng)
    _emit({
        "config": _ring_config(ring),
        "results": [v.to_dict() for v in verdicts],
        "version": __version__,
    }, out)
    return EXIT_OK


def _mds_rows(ring: QuotientRing, rng: random.Random,
              unit_samples: int) -> list[dict]:
    rows = []
    seen = set()
    for v in mds_classify(ring, budget=None, unit_samples=unit_samples,
                          rng=rng):
        if not v.is_mds or v.trivial:
            continue
        gen = spec_generator_text(ring, v.spec)
        key = gen
        if key in seen:
            continue
        seen.add(key)
        rows.append({
            "generator": gen,
            "size": f"{ring.p}^{log_size(ring, v.spec)}",
            "pair_distance": v.d_sp,
            "remark": spec_to_text(v.spec).split(":")[0],
        })
    return rows


def cmd_tables(args, out) -> int:
    ring = _ring_from(args)
    rng = random.Random(args.seed)
    rows = _mds_rows(ring, rng, args.unit_samples)
    if args.format == "json":
        _emit({
            "config": _ring_config(ring),
            "results": rows,
            "version": __version__,
        }, out)
        return EXIT_OK
    if args.format == "csv":
        w = csv.DictWriter(out, fieldnames=["generator", "size",
                                            "pair_distance", "remark"])
        w.writeheader()
        for r in rows:
            w.writerow(r)
        return EXIT_OK
    # markdown
    out.write("| generator | size | pair distance | remark |\n")
    out.write("|---|---|---|---|\n")
    for r in rows:
        out.write(f"| {r['generator']} | {r['size']} | "
                  f"{r['pair_distance']} | {r['remark']} |\n")
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="paircodes",
        description="Constacyclic codes over GF(p^m) and GF(p^m)+uGF(p^m): "
                    "symbol-pair distances and MDS classification.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("field-info", help="describe GF(p^m)")
    _add_field_args(sp)
    sp.add_argument("--n", type=int, default=1)
    sp.set_defaults(fn=cmd_field_info)

    sp = sub.add_parser("check-binomial",
                        help="test irreducibility of x^n - alpha0")
    _add_field_args(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--alpha0", type=str, required=True)
    sp.set_defaults(fn=cmd_check_binomial)

    sp = sub.add_parser("build-code", help="materialize one code")
    _add_ring_args(sp)
    sp.add_argument("--spec", type=str, required=True,
                    help='e.g. "field-power:i=2" or "type2:j=7,k=1,b=1"')
    sp.set_defaults(fn=cmd_build_code)

    sp = sub.add_parser("distance", help="minimum pair distance of one code")
    _add_ring_args(sp)
    sp.add_argument("--spec", type=str, required=True)
    sp.add_argument("--method", choices=["formula", "brute", "both"],
                    default="both")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.set_defaults(fn=cmd_distance)

    sp = sub.add_parser("scan", help="sweep every code of a ring")
    sp.add_argument("target", choices=["mds", "consistency"])
    _add_ring_args(sp)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--unit-samples", type=int, default=3)
    sp.set_defaults(fn=cmd_scan)

    sp = sub.add_parser("tables", help="MDS rows for a ring")
    _add_ring_args(sp)
    sp.add_argument("--format", choices=["md", "csv", "json"], default="md")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--unit-samples", type=int, default=3)
    sp.set_defaults(fn=cmd_tables)

    for name, sp in sub.choices.items():
        sp.add_argument("--out", type=str, default=None,
                        help="write output to this file instead of stdout")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = make_parser()
    args = ap.parse_args(argv)
    out = sys.stdout
    opened = None
    if getattr(args, "out", None):
        opened = open(args.out, "w")
        out = opened
    try:
        return args.fn(args, out)
    except VerificationMismatch as exc:
        print(json.dumps({"error": {"type": type(exc).__name__,
                                    "message": str(exc)}}), file=sys.stderr)
        return EXIT_MISMATCH
    except BudgetExceeded as exc:
        print(json.dumps({"error": {"type": type(exc).__name__,
                                    "message": str(exc)}}), file=sys.stderr)
        return EXIT_BUDGET
    except PairCodeError as exc:
        print(json.dumps({"error": {"type": type(exc).__name__,
                                    "message": str(exc)}}), file=sys.stderr)
        return EXIT_REFUSED
    finally:
        if opened is not None:
            opened.close()


if __name__ == "__main__":
    sys.exit(main())
