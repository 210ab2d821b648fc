"""Command-line entry point: every capability as a scriptable check.

Exit codes: 0 when every requested check passes, 1 when any check fails,
2 on usage or input errors.  Output is deterministic for fixed flags;
timing lives only in the JSON ``millis`` fields, which are excluded from
that contract.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from .exactnum import QuadExt
from .hadamard import (build_system, build_W, check_common_zero,
                       check_hadamard_matrix, enumerate_families,
                       nonexistence_check, system_from_ac)
from .identities import verify_identity_suite
from .multipoly import ParseError, parse_quadext
from .schemes import (EigenmatrixTemplate, HadamardSeedError, SchemeError,
                      bush_type_from_hadamard, load_hadamard_seed,
                      load_scheme, params_from_ac, quaternion_scheme,
                      save_scheme, sylvester_hadamard, verify_eigenmatrix,
                      verify_scheme_axioms, z4_scheme)
from .torus import torus_zero_search

PASS, FAIL, USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _sqrt_of_fraction(value: Fraction) -> QuadExt:
    if value <= 0:
        raise InputError("b^2 must be positive")
    return QuadExt(value.numerator * value.denominator, 0,
                   Fraction(1, value.denominator))


def _template_from_args(args) -> EigenmatrixTemplate:
    if args.a is not None and args.c is not None:
        return params_from_ac(args.a, args.c).template()
    raw = (args.k1, args.k2, args.r, args.s, args.b2)
    if any(v is None for v in raw):
        raise InputError("give either --a/--c or all of --k1 --k2 --r --s --b2")
    return EigenmatrixTemplate(args.k1, args.k2, args.r, args.s,
                               _sqrt_of_fraction(Fraction(args.b2)))


def _system_from_args(args):
    if args.a is not None and args.c is not None:
        return system_from_ac(args.a, args.c)
    raw = (args.k1, args.k2, args.r, args.s, args.b2)
    if any(v is None for v in raw):
        raise InputError("give either --a/--c or all of --k1 --k2 --r --s --b2")
    return build_system({"k1": args.k1, "k2": args.k2, "r": args.r,
                         "s": args.s, "b2": Fraction(args.b2)})


def _parse_weights(args) -> tuple[QuadExt, QuadExt, QuadExt]:
    out = []
    for name in ("w1", "w2", "w3"):
        text = getattr(args, name)
        if text is None:
            raise InputError(f"missing --{name}")
        try:
            out.append(parse_quadext(text))
        except ParseError as exc:
            raise InputError(f"bad --{name}: {exc}") from None
    return tuple(out)


def _add_param_flags(sub, with_weights=False):
    sub.add_argument("--a", type=int, default=None)
    sub.add_argument("--c", type=int, default=None)
    sub.add_argument("--k1", type=int, default=None)
    sub.add_argument("--k2", type=int, default=None)
    sub.add_argument("--r", type=int, default=None)
    sub.add_argument("--s", type=int, default=None)
    sub.add_argument("--b2", type=str, default=None,
                     help="b^2 as an integer or fraction p/q")
    if with_weights:
        sub.add_argument("--w1", type=str, default=None)
        sub.add_argument("--w2", type=str, default=None)
        sub.add_argument("--w3", type=str, default=None)


def _add_format_flags(sub):
    fmt = sub.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--text", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hsk",
        description=("exact checks for complex Hadamard matrices in "
                     "Bose-Mesner algebras of nonsymmetric 3-class "
                     "association schemes"))
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("identities",
                        help="replay the full exact identity checklist")
    _add_format_flags(p)

    p = subs.add_parser("families",
                        help="enumerate the classified weight families at (a, c)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--samples", type=int, default=4,
                   help="sample count for the one-parameter family")
    p.add_argument("--verify", choices=("exact", "none"), default="exact")
    _add_format_flags(p)

    p = subs.add_parser("build-matrix",
                        help="assemble W = A0 + w1 A1 + w2 A2 + w3 A3")
    p.add_argument("--scheme", required=True)
    _add_param_flags(p, with_weights=True)
    _add_format_flags(p)

    p = subs.add_parser("check-hadamard",
                        help="exact unitarity check of the assembled matrix")
    p.add_argument("--scheme", required=True)
    _add_param_flags(p, with_weights=True)
    _add_format_flags(p)

    p = subs.add_parser("search",
                        help="numerical torus search for common zeros")
    _add_param_flags(p)
    p.add_argument("--grid", type=int, default=64)
    p.add_argument("--tol", type=float, default=1e-8)
    _add_format_flags(p)

    p = subs.add_parser("scheme-verify",
                        help="axioms and exact eigenmatrix certification")
    p.add_argument("--scheme", required=True)
    _add_param_flags(p)
    _add_format_flags(p)

    p = subs.add_parser("scheme-gen",
                        help="construct a built-in or derived scheme")
    p.add_argument("kind", choices=("z4", "q8", "bush"))
    p.add_argument("--seed", default=None,
                   help="seed Hadamard matrix file for 'bush'")
    p.add_argument("--order", type=int, default=4,
                   help="Sylvester seed order when no --seed is given")
    p.add_argument("-o", "--output", required=True)
    _add_format_flags(p)

    p = subs.add_parser("nonexistence",
                        help="nonexistence argument for the other spectra")
    p.add_argument("case", choices=("ii", "iii"))
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    _add_format_flags(p)

    p = subs.add_parser("report",
                        help="run the full reproduction and summarize")
    p.add_argument("--grid", type=int, default=64)
    p.add_argument("--skip-search", action="store_true")
    _add_format_flags(p)
    return parser


def _weight_json(w: QuadExt) -> dict:
    re, im = w.embed(64)
    return {"exact": str(w), "approx": [float(re), float(im)]}


def cmd_identities(args) -> int:
    report = verify_identity_suite()
    if args.json:
        print(report.to_json())
    else:
        print(report.to_text())
    return PASS if report.ok else FAIL


def cmd_families(args) -> int:
    result = enumerate_families(args.a, args.c, args.samples)
    system = system_from_ac(args.a, args.c)
    rows = []
    all_ok = True
    for cand in result:
        ok = True
        if args.verify == "exact":
            ok = (all(w.is_unit_modulus() for w in cand.weights())
                  and check_common_zero(system, cand))
            all_ok = all_ok and ok
        rows.append((cand, ok))
    if args.json:
        out = {
            "a": args.a, "c": args.c,
            "continuum": result.continuum,
            "notes": list(result.notes),
            "candidates": [{
                "family": cand.family,
                "also": list(cand.also),
                "w1": _weight_json(cand.w1),
                "w2": _weight_json(cand.w2),
                "w3": _weight_json(cand.w3),
                "verified_exact": ok if args.verify == "exact" else None,
            } for cand, ok in rows],
        }
        print(json.dumps(out, indent=2))
    else:
        print(f"families at (a, c) = ({args.a}, {args.c})")
        if result.continuum:
            print(f"continuum: {result.continuum}")
        for note in result.notes:
            print(f"note: {note}")
        for cand, ok in rows:
            mark = "ok" if ok else "FAIL"
            verified = f"  [{mark}]" if args.verify == "exact" else ""
            print(f"{cand}{verified}")
        print(f"{len(rows)} candidates")
    return PASS if all_ok else FAIL


def _load_scheme_arg(path):
    try:
        return load_scheme(path)
    except (OSError, SchemeError) as exc:
        raise InputError(str(exc)) from None


def cmd_build_matrix(args) -> int:
    scheme = _load_scheme_arg(args.scheme)
    weights = _parse_weights(args)
    W = build_W(scheme, weights)
    if args.json:
        print(json.dumps({"n": scheme.n,
                          "rows": [[str(v) for v in row] for row in W]},
                         indent=2))
    else:
        for row in W:
            print("  ".join(str(v) for v in row))
    return PASS


def cmd_check_hadamard(args) -> int:
    scheme = _load_scheme_arg(args.scheme)
    weights = _parse_weights(args)
    W = build_W(scheme, weights)
    ok = check_hadamard_matrix(W)
    if args.json:
        print(json.dumps({"n": scheme.n, "hadamard": ok}))
    else:
        print(f"W conj(W)^T = {scheme.n} I exactly: {'yes' if ok else 'NO'}")
    return PASS if ok else FAIL


def cmd_search(args) -> int:
    system = _system_from_args(args)
    result = torus_zero_search(system, grid_per_angle=args.grid,
                               residual_tol=args.tol)
    if args.json:
        print(json.dumps(result.json_dict(), indent=2))
    else:
        print(f"isolated solutions: {len(result.isolated)}")
        for sol in result.isolated:
            w1, w2, w3 = sol.weights()
            print(f"  w1=({w1.real:+.6f}{w1.imag:+.6f}i) "
                  f"w2=({w2.real:+.6f}{w2.imag:+.6f}i) "
                  f"w3=({w3.real:+.6f}{w3.imag:+.6f}i) "
                  f"residual={sol.residual:.2e}")
        print(f"curve components: {len(result.curves)}")
        for curve in result.curves:
            print(f"  curve with {curve.size} converged points")
        print(f"caveat: {result.caveat}")
    return PASS


def cmd_scheme_verify(args) -> int:
    scheme = _load_scheme_arg(args.scheme)
    axioms = verify_scheme_axioms(scheme)
    lines = [("axioms", axioms.ok,
              f"valencies {axioms.valencies}")]
    ok = axioms.ok
    template = None
    try:
        template = _template_from_args(args)
    except InputError:
        pass
    eigen = None
    if template is not None:
        eigen = verify_eigenmatrix(scheme, template)
        ok = ok and eigen.ok
        lines.append(("eigenmatrix", eigen.ok,
                      f"multiplicities {eigen.multiplicities}"))
    if args.json:
        out = {"n": scheme.n, "d": scheme.d,
               "axioms": {"ok": axioms.ok,
                          "checks": [{"name": nm, "ok": o, "detail": det}
                                     for nm, o, det in axioms.checks],
                          "valencies": axioms.valencies}}
        if eigen is not None:
            out["eigenmatrix"] = {
                "ok": eigen.ok,
                "checks": [{"name": nm, "ok": o, "detail": det}
                           for nm, o, det in eigen.checks],
                "multiplicities": eigen.multiplicities,
            }
        print(json.dumps(out, indent=2))
    else:
        print(f"scheme: n = {scheme.n}, d = {scheme.d}")
        for name, passed, detail in lines:
            print(f"{'PASS' if passed else 'FAIL'}  {name}  ({detail})")
    return PASS if ok else FAIL


def cmd_scheme_gen(args) -> int:
    if args.kind == "z4":
        scheme = z4_scheme()
    elif args.kind == "q8":
        scheme = quaternion_scheme()
    else:
        if args.seed:
            try:
                seed = load_hadamard_seed(args.seed)
            except (OSError, HadamardSeedError) as exc:
                raise InputError(str(exc)) from None
        else:
            try:
                seed = sylvester_hadamard(args.order)
            except ValueError as exc:
                raise InputError(str(exc)) from None
        try:
            _, scheme = bush_type_from_hadamard(seed)
        except (HadamardSeedError, Exception) as exc:
            if isinstance(exc, (HadamardSeedError,)):
                raise InputError(str(exc)) from None
            raise
    save_scheme(scheme, args.output)
    if args.json:
        print(json.dumps({"n": scheme.n, "d": scheme.d,
                          "output": args.output}))
    else:
        print(f"wrote scheme with n = {scheme.n}, d = {scheme.d} "
              f"to {args.output}")
    return PASS


def cmd_nonexistence(args) -> int:
    try:
        report = nonexistence_check(args.case, args.k1, args.k2)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.json:
        print(json.dumps({
            "case": report.case, "k1": report.k1, "k2": report.k2,
            "steps": report.steps,
            "forced_weight": report.forced_weight,
            "m1": str(report.m1) if report.m1 is not None else None,
            "nonexistent": report.nonexistent,
        }, indent=2))
    else:
        print(report)
        print("conclusion: no complex Hadamard matrix of this form"
              if report.nonexistent else "conclusion: INCONCLUSIVE")
    return PASS if report.nonexistent else FAIL


def cmd_report(args) -> int:
    sections = []
    ok = True

    identity = verify_identity_suite()
    ok = ok and identity.ok
    sections.append(("identity checklist",
                     f"{identity.passed}/{len(identity.entries)} passed",
                     identity.ok))

    family_ok = True
    family_counts = {}
    for (a, c) in ((1, 1), (2, 1), (3, 1), (4, 1), (1, 3)):
        result = enumerate_families(a, c)
        system = system_from_ac(a, c)
        good = all(check_common_zero(system, cand) for cand in result)
        family_ok = family_ok and good
        family_counts[f"({a},{c})"] = len(result)
    ok = ok and family_ok
    sections.append(("family algebra", str(family_counts), family_ok))

    scheme_ok = True
    details = []
    for name, scheme, (a, c) in (
            ("z4", z4_scheme(), (1, 1)),
            ("q8", quaternion_scheme(), (1, 3)),
            ("bush16", bush_type_from_hadamard(sylvester_hadamard(4))[1],
             (2, 1))):
        eigen = verify_eigenmatrix(scheme, params_from_ac(a, c).template())
        scheme_ok = scheme_ok and eigen.ok
        details.append(f"{name}: multiplicities {eigen.multiplicities}")
    ok = ok and scheme_ok
    sections.append(("scheme certification", "; ".join(details), scheme_ok))

    nonex_ok = True
    for k1 in range(2, 21, 2):
        for k2 in (1, 2, 3):
            nonex_ok = nonex_ok and nonexistence_check("ii", k1, k2).nonexistent
        nonex_ok = nonex_ok and nonexistence_check("iii", k1, 1).nonexistent
    ok = ok and nonex_ok
    sections.append(("nonexistence for other spectra",
                     "even k1 up to 20", nonex_ok))

    searches = {}
    if not args.skip_search:
        expectations = {(1, 3): (8, 0), (2, 1): (4, 1), (1, 1): (0, 1)}
        search_ok = True
        for (a, c), (n_iso, n_curve) in expectations.items():
            res = torus_zero_search(system_from_ac(a, c),
                                    grid_per_angle=args.grid)
            good = (len(res.isolated), len(res.curves)) == (n_iso, n_curve)
            search_ok = search_ok and good
            searches[f"({a},{c})"] = {
                "isolated": len(res.isolated),
                "curves": len(res.curves), "ok": good}
        ok = ok and search_ok
        sections.append(("torus search", json.dumps(searches, sort_keys=True),
                         search_ok))

    if args.json:
        print(json.dumps({
            "sections": [{"name": n, "detail": d, "ok": o}
                         for n, d, o in sections],
            "ok": ok}, indent=2))
    else:
        for name, detail, passed in sections:
            print(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
        print(f"overall: {'PASS' if ok else 'FAIL'}")
    return PASS if ok else FAIL


COMMANDS = {
    "identities": cmd_identities,
    "families": cmd_families,
    "build-matrix": cmd_build_matrix,
    "check-hadamard": cmd_check_hadamard,
    "search": cmd_search,
    "scheme-verify": cmd_scheme_verify,
    "scheme-gen": cmd_scheme_gen,
    "nonexistence": cmd_nonexistence,
    "report": cmd_report,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else 0
    try:
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (SchemeError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
