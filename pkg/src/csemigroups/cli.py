"""Command-line interface.

Every subcommand loads a semigroup description from a JSON file, runs the
corresponding library operation and prints a machine-readable JSON object
(or an SVG/ASCII diagram for ``plot``).  Exit codes: 0 on success, 2 on
validation errors (a JSON error object naming the violated invariant is
printed), 3 when a bounded search gave up before reaching a certificate.
The environment variable ``SEMIGROUP_BUDGET`` overrides the default
exploration budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import enumeration, fastmember, med, plot, semigroups, serialize
from .errors import BudgetExceeded, InvalidSemigroupFile, SemigroupError
from .ideals import ideal_from_set, ideal_is_csemigroup, isemigroup_from_ideal
from .lattice import MonomialOrder
from .semigroups import GapSemigroup, GenSemigroup, gaps

DEFAULT_ORDER = MonomialOrder("deglex")


def _budget():
    raw = os.environ.get("SEMIGROUP_BUDGET")
    if raw is None:
        return semigroups.DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise InvalidSemigroupFile(
            f"SEMIGROUP_BUDGET={raw!r} is not an integer", "budget"
        ) from exc
    if value <= 0:
        raise InvalidSemigroupFile("SEMIGROUP_BUDGET must be positive", "budget")
    return value


def _parse_point(text):
    try:
        coords = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise InvalidSemigroupFile(
            f"{text!r} is not a comma-separated integer vector", "point"
        ) from exc
    if any(c < 0 for c in coords):
        raise InvalidSemigroupFile(f"{text!r} has negative coordinates", "point")
    return coords


def _parse_window(text):
    parts = text.lower().split("x")
    try:
        values = [int(p) for p in parts]
    except ValueError as exc:
        raise InvalidSemigroupFile(f"bad window {text!r}", "window") from exc
    if len(values) == 1:
        values = [values[0], values[0]]
    if len(values) != 2 or min(values) < 0:
        raise InvalidSemigroupFile(f"bad window {text!r}", "window")
    return tuple(values)


def _load(path):
    sgp, order = serialize.load_semigroup(path)
    return sgp, (order or DEFAULT_ORDER)


def _gap_rep(S, budget) -> GapSemigroup:
    return S if isinstance(S, GapSemigroup) else gaps(S, budget)


def _points(values):
    return [list(p) for p in sorted(values)]


def _isemigroup_doc(T, full=True):
    doc = {
        "genus": T.genus,
        "imsg": _points(T.gens),
    }
    if full:
        doc["gaps"] = _points(T.gaps)
    return doc


def cmd_gaps(args):
    S, _ = _load(args.semigroup)
    G = _gap_rep(S, _budget())
    return {"genus": G.genus, "gaps": _points(G.gaps)}


def cmd_msg(args):
    S, _ = _load(args.semigroup)
    return {"generators": _points(S.minimal_generators())}


def cmd_member(args):
    S, _ = _load(args.semigroup)
    Sg = S if isinstance(S, GenSemigroup) else S.as_generated()
    point = _parse_point(args.point)
    inside = Sg.contains(point)
    doc = {"member": inside}
    if inside:
        witness = Sg.witness(point)
        doc["witness"] = {
            "generators": [list(g) for g in Sg.generators],
            "coefficients": list(witness),
        }
    return doc


def cmd_fast_member(args):
    S, _ = _load(args.semigroup)
    ctx = fastmember.precompute(S)
    result = fastmember.fast_member(ctx, _parse_point(args.point))
    doc = {
        "member": result.member,
        "reason": result.reason,
        "ray_order": [list(r) for r in ctx.rays],
    }
    if result.v is not None:
        doc["v"] = list(result.v)
    if result.remainder is not None:
        doc["remainder"] = list(result.remainder)
        doc["coefficients"] = list(result.coeffs)
    return doc


def _apery_ctx(args):
    S, _ = _load(args.semigroup)
    M = [_parse_point(m) for m in args.m] if args.m else S.multiplicities()
    return semigroups.apery_context(S, M)


def cmd_apery(args):
    ctx = _apery_ctx(args)
    return {
        "m": _points(ctx.ray_elements),
        "multipliers": list(ctx.multipliers),
        "generators": [list(g) for g in ctx.base.generators],
        "core": _points(ctx.core),
    }


def cmd_gamma(args):
    ctx = _apery_ctx(args)
    return {
        "m": _points(ctx.ray_elements),
        "size": len(ctx.sum_box),
        "gamma": _points(ctx.sum_box),
    }


def cmd_pf(args):
    S, _ = _load(args.semigroup)
    G = _gap_rep(S, _budget())
    return {"pseudo_frobenius": _points(semigroups.pseudo_frobenius(G))}


def cmd_ideal(args):
    S, _ = _load(args.semigroup)
    G = _gap_rep(S, _budget())
    X = [_parse_point(p) for p in args.points]
    P = ideal_from_set(G, X)
    doc = {
        "imsg": _points(P.gens),
        "meets_all_rays": ideal_is_csemigroup(P),
    }
    if doc["meets_all_rays"]:
        T = isemigroup_from_ideal(P, _budget())
        doc["genus"] = T.genus
        doc["gaps"] = _points(T.gaps)
    return doc


def cmd_tree(args):
    S, order = _load(args.semigroup)
    G = _gap_rep(S, _budget())
    levels = enumeration.enumerate_tree(G, args.max_genus, order)
    doc = {
        "root_genus": G.genus,
        "total": sum(len(level) for level in levels),
        "levels": [
            {"genus": G.genus + i, "count": len(level)}
            for i, level in enumerate(levels)
        ],
    }
    if args.full:
        doc["semigroups"] = [
            dict(
                _isemigroup_doc(node.semigroup),
                removed=list(node.removed) if node.removed else None,
            )
            for level in levels
            for node in level
        ]
    return doc


def cmd_frobenius_fixed(args):
    S, order = _load(args.semigroup)
    G = _gap_rep(S, _budget())
    fiber = enumeration.with_frobenius(G, _parse_point(args.f), order)
    return {
        "f": list(fiber.f),
        "candidates": _points(fiber.candidates),
        "count": len(fiber.results),
        "semigroups": [_isemigroup_doc(T) for T in fiber.results],
    }


def cmd_mult_fixed(args):
    S, _ = _load(args.semigroup)
    G = _gap_rep(S, _budget())
    M = [_parse_point(m) for m in args.m]
    results = enumeration.with_multiplicities(
        G, M, verify_multiplicities=args.verify_multiplicities
    )
    doc = {
        "m": _points(M),
        "count": len(results),
        "verified": args.verify_multiplicities,
    }
    if args.full:
        doc["semigroups"] = [_isemigroup_doc(T) for T in results]
    else:
        doc["semigroups"] = [_isemigroup_doc(T, full=False) for T in results]
    return doc


def cmd_med(args):
    S, _ = _load(args.semigroup)
    report = med.is_med_definition(S)
    doc = {
        "is_med": report.is_med,
        "pairwise": med.is_med_pairwise(S),
        "via_translates": med.med_via_translates(S),
        "type2": med.med_type2_check(S).value,
        "apery_core": _points(report.apery_core),
        "non_ray_generators": _points(report.non_ray_generators),
    }
    if report.witness is not None:
        doc["witness"] = [list(p) for p in report.witness]
    return doc


def cmd_decompose(args):
    S, _ = _load(args.semigroup)
    dec = med.decompose(S)
    return {
        "ray_elements": _points(dec.ray_elements),
        "head": _points(dec.head),
        "identity_verified_up_to_grade": 40 if dec.verify_on_box(40) else None,
    }


def cmd_plot(args):
    S, _ = _load(args.semigroup)
    window = _parse_window(args.window) if args.window else None
    if args.ascii:
        return plot.render_ascii(S, window)
    return plot.render_svg(S, window)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="csemigroups",
        description="Exact computations with C-semigroups and their ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("semigroup", help="JSON semigroup description")
        p.set_defaults(func=func)
        return p

    add("gaps", cmd_gaps, help="gap set and genus")
    add("msg", cmd_msg, help="minimal generating set")
    p = add("member", cmd_member, help="membership oracle")
    p.add_argument("point", help="query point, e.g. 31,8")
    p = add("fast-member", cmd_fast_member, help="Apery-core membership")
    p.add_argument("point", help="query point, e.g. 31,8")
    p = add("apery", cmd_apery, help="common Apery core for on-ray elements")
    p.add_argument("--m", action="append", help="on-ray element (repeatable)")
    p = add("gamma", cmd_gamma, help="bounded sum box used by the Apery core")
    p.add_argument("--m", action="append", help="on-ray element (repeatable)")
    add("pf", cmd_pf, help="pseudo-Frobenius elements")
    p = add("ideal", cmd_ideal, help="canonical ideal generated by points")
    p.add_argument("points", nargs="+", help="generating points, e.g. 5,1 6,2")
    p = add("tree", cmd_tree, help="genus tree enumeration")
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--full", action="store_true", help="include every semigroup")
    p = add("frobenius-fixed", cmd_frobenius_fixed, help="fixed Frobenius fiber")
    p.add_argument("--f", required=True, help="Frobenius element, e.g. 11,3")
    p = add("mult-fixed", cmd_mult_fixed, help="fixed multiplicities fiber")
    p.add_argument("--m", action="append", required=True, help="ray element")
    p.add_argument("--verify-multiplicities", action="store_true")
    p.add_argument("--full", action="store_true", help="include gap sets")
    add("med", cmd_med, help="maximal-embedding-dimension predicates")
    add("decompose", cmd_decompose, help="head plus ray-section decomposition")
    p = add("plot", cmd_plot, help="SVG (or ASCII) gap diagram")
    p.add_argument("--window", help="window size W or WxH")
    p.add_argument("--ascii", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except BudgetExceeded as exc:
        print(json.dumps({"error": "BudgetExceeded", "message": str(exc)}))
        return 3
    except InvalidSemigroupFile as exc:
        print(
            json.dumps(
                {
                    "error": "InvalidSemigroupFile",
                    "invariant": exc.invariant,
                    "message": str(exc),
                }
            )
        )
        return 2
    except (SemigroupError, ValueError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return 2
    if isinstance(result, str):
        sys.stdout.write(result)
    else:
        print(json.dumps(result, sort_keys=True))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
