"""Command line interface.

Subcommands:

    verify-d4     run every exact check on the dimension-4 projector
    minpoly       minimal polynomial of an expression over the field
    galois        group order, census, and the structure certificate
    units         audit the reconstruction phases and the named units
    search        numerical fiducial search in a chosen dimension
    discriminant  (d - 3)(d + 1) and its squarefree part

Every subcommand accepts --json for machine-readable reports, --config
FILE to preload option defaults from a JSON object, and --precision
{double, extended} to choose how approximate values are computed.
Reports are objects with the four fields check, status, details, and
category; numbers in them are rendered to 12 significant digits with
ties going to even. Exit status is 0 when every check passes, 1 when
any check fails, and 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Any

import mpmath

from .expressions import ExpressionError, evaluate_expression
from .galois import (
    action_table,
    certify_structure,
    fixed_subfield_check,
    generate_group,
    is_abelian,
    order_census,
    standard_generators,
)
from .minpoly import is_algebraic_integer, is_unit, minimal_polynomial
from .search import SearchConfig, search
from .sic4 import (
    canonical_phase_matrix,
    discriminant,
    hermiticity_symmetry_holds,
    phase_unit_audit,
    phases_in_inner_field,
    reconstruct_projector,
    verify_sic_projector,
)
from .tower import CONSTANT_NAMES, FieldElement, constant, embed

EXTENDED_DPS = 50


def render_number(value: Any) -> str:
    """12 significant digits, round half to even."""
    with localcontext() as ctx:
        ctx.prec = 12
        ctx.rounding = ROUND_HALF_EVEN
        if isinstance(value, Fraction):
            dec = Decimal(value.numerator) / Decimal(value.denominator)
        elif isinstance(value, mpmath.mpf):
            dec = Decimal(mpmath.nstr(value, 25))
        elif isinstance(value, int):
            dec = Decimal(value)
        else:
            dec = Decimal(float(value))
        return str(ctx.plus(dec))


def render_complex(value: Any) -> str:
    re = render_number(value.real)
    im = render_number(value.imag)
    sign = "-" if im.startswith("-") else "+"
    return f"{re} {sign} {im.lstrip('-')}i"


def serialize_element(elem: FieldElement, precision: str) -> dict:
    if precision == "extended":
        with mpmath.workdps(EXTENDED_DPS):
            z = embed(elem, dps=EXTENDED_DPS)
            approx = {"re": render_number(z.real), "im": render_number(z.imag)}
    else:
        z = embed(elem)
        approx = {"re": render_number(z.real), "im": render_number(z.imag)}
    return {"coords": [str(c) for c in elem.coords], "approx": approx}


def make_report(category: str, check: str, passed: bool,
                details: dict | None = None, status: str | None = None) -> dict:
    return {
        "check": check,
        "status": status if status is not None else ("pass" if passed else "fail"),
        "details": details or {},
        "category": category,
    }


# -- subcommand handlers ----------------------------------------------------


def cmd_verify_d4(args: argparse.Namespace) -> list[dict]:
    phases = canonical_phase_matrix(negate_entry=args.corrupt)
    reports = [
        make_report(
            "verify-d4", "hermiticity_symmetry", hermiticity_symmetry_holds(phases),
        ),
        make_report(
            "verify-d4", "phases_in_inner_field", phases_in_inner_field(phases),
        ),
    ]
    projector = reconstruct_projector(phases)
    for check in verify_sic_projector(projector):
        details = {"note": check.detail} if check.detail else {}
        reports.append(make_report("verify-d4", check.name, check.passed, details))
    return reports


def cmd_minpoly(args: argparse.Namespace) -> list[dict]:
    elem = evaluate_expression(args.expression)
    result = minimal_polynomial(elem)
    details = {
        "expression": args.expression,
        "element": serialize_element(elem, args.precision),
        "minimal_polynomial": result.primitive.format(),
        "degree": result.degree,
        "algebraic_integer": result.monic.has_integer_coefficients(),
        "unit": is_unit(elem),
    }
    if not args.json:
        print(result.primitive.format())
    return [make_report("minpoly", "minimal_polynomial", True, details)]


def cmd_galois(args: argparse.Namespace) -> list[dict]:
    generators = standard_generators()
    group = generate_group(list(generators.values()))
    census = order_census(group)
    cert = certify_structure(group)
    inner = generate_group([generators[k] for k in ("g1", "g2", "g3")])
    columns = {name: constant(name)
               for name in ("sqrt5", "sqrt2", "isqrt_sqrt5p1", "i", "tau")}
    rows = action_table(list(generators.values()), columns)
    actions = {
        name: {
            col: serialize_element(value, args.precision)
            for col, value in row.items()
        }
        for name, row in zip(generators, rows)
    }
    reports = [
        make_report("galois", "group_order", len(group) == 16,
                    {"order": len(group)}),
        make_report("galois", "generators_are_involutions",
                    all((g * g).is_identity() for g in generators.values())),
        make_report("galois", "order_census", census == {1: 1, 2: 11, 4: 4},
                    {"census": {str(k): v for k, v in sorted(census.items())}}),
        make_report("galois", "abelian_inner_subgroup",
                    len(inner) == 8 and is_abelian(inner),
                    {"order": len(inner)}),
        make_report("galois", "structure_certificate", cert.certified, {
            "isomorphism_type": cert.isomorphism_type,
            "central_involution": cert.central_involution,
            "dihedral_generators": cert.dihedral_generators,
        }),
        make_report("galois", "inner_subgroup_fixes_sqrt5",
                    fixed_subfield_check(inner, constant("sqrt5"))
                    and not fixed_subfield_check(group, constant("sqrt5"))),
        make_report("galois", "generator_actions", True, {"actions": actions}),
    ]
    return reports


def cmd_units(args: argparse.Namespace) -> list[dict]:
    reports = []
    for audit in phase_unit_audit():
        i, j = audit.index
        reports.append(make_report(
            "units", f"phase_{i}{j}",
            audit.unit_modulus and audit.algebraic_unit,
            {
                "unit_modulus": audit.unit_modulus,
                "algebraic_unit": audit.algebraic_unit,
                "minpoly_degree": audit.minpoly_degree,
            },
        ))
    for name in ("u1", "u2", "u3", "u4", "u5"):
        elem = constant(name)
        result = minimal_polynomial(elem)
        reports.append(make_report(
            "units", f"unit_{name}", is_unit(elem),
            {
                "minimal_polynomial": result.primitive.format(),
                "degree": result.degree,
                "algebraic_integer": is_algebraic_integer(elem),
                "element": serialize_element(elem, args.precision),
            },
        ))
    return reports


def cmd_search(args: argparse.Namespace) -> list[dict]:
    if args.dim is None:
        raise ValueError("--dim is required")
    config = SearchConfig(
        dimension=args.dim,
        restarts=args.restarts,
        max_iterations=args.max_iterations,
        tolerance=args.tolerance,
        rng_seed=args.seed,
    )
    result = search(config)
    target = 2 * args.dim / (args.dim + 1)
    details = {
        "dimension": result.dimension,
        "converged": result.converged,
        "residual": render_number(result.residual),
        "restarts_run": len(result.restarts),
        "best_restart": result.restart_index,
        "iterations": result.iterations,
        "fourth_moment": render_number(result.fourth_moment),
        "fourth_moment_target": render_number(target),
        "fiducial": [render_complex(z) for z in result.fiducial],
    }
    if not args.json:
        state = "converged" if result.converged else "did not converge"
        print(f"dimension {args.dim}: {state}, "
              f"residual {render_number(result.residual)}, "
              f"restart {result.restart_index}, "
              f"iterations {result.iterations}")
    return [make_report("search", f"search_d{args.dim}", result.converged, details)]


def cmd_discriminant(args: argparse.Namespace) -> list[dict]:
    if args.dim is None:
        raise ValueError("--dim is required")
    result = discriminant(args.dim)
    if not args.json:
        print(f"(d - 3)(d + 1) = {result.value}, "
              f"squarefree part {result.squarefree_part}")
    return [make_report("discriminant", f"discriminant_d{args.dim}", True, {
        "dimension": result.dimension,
        "value": result.value,
        "squarefree_part": result.squarefree_part,
    })]


# -- argument plumbing -------------------------------------------------------


def _corrupt_pair(text: str) -> tuple[int, int]:
    try:
        i, j = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected a pair like 1,2",
        ) from None
    return i, j


def build_parser() -> tuple[argparse.ArgumentParser, dict[str, argparse.ArgumentParser]]:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit reports as a JSON array")
    common.add_argument("--precision", choices=("double", "extended"),
                        default="double",
                        help="how approximate values are computed")
    common.add_argument("--config", metavar="FILE",
                        help="JSON object with option defaults")

    parser = argparse.ArgumentParser(
        prog="sicfield",
        description="exact arithmetic for the dimension-4 SIC and friends",
    )
    subs = parser.add_subparsers(dest="command", required=True)
    registry: dict[str, argparse.ArgumentParser] = {}

    p = subs.add_parser("verify-d4", parents=[common],
                        help="exact checks on the dimension-4 projector")
    p.add_argument("--corrupt", type=_corrupt_pair, metavar="I,J", default=None,
                   help="negate one phase first, as a negative control")
    p.set_defaults(func=cmd_verify_d4)
    registry["verify-d4"] = p

    p = subs.add_parser("minpoly", parents=[common],
                        help="minimal polynomial of a field expression")
    p.add_argument("expression")
    p.set_defaults(func=cmd_minpoly)
    registry["minpoly"] = p

    p = subs.add_parser("galois", parents=[common],
                        help="Galois group census and certification")
    p.set_defaults(func=cmd_galois)
    registry["galois"] = p

    p = subs.add_parser("units", parents=[common],
                        help="audit the phases and the named units")
    p.set_defaults(func=cmd_units)
    registry["units"] = p

    # --dim is checked by the handler, not argparse, so a config file
    # can supply it
    p = subs.add_parser("search", parents=[common],
                        help="numerical fiducial search")
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--restarts", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=float, default=1e-10)
    p.add_argument("--max-iterations", type=int, default=20_000)
    p.set_defaults(func=cmd_search)
    registry["search"] = p

    p = subs.add_parser("discriminant", parents=[common],
                        help="(d - 3)(d + 1) and its squarefree part")
    p.add_argument("--dim", type=int, default=None)
    p.set_defaults(func=cmd_discriminant)
    registry["discriminant"] = p

    return parser, registry


def _apply_config(parser: argparse.ArgumentParser,
                  registry: dict[str, argparse.ArgumentParser],
                  argv: list[str], args: argparse.Namespace) -> argparse.Namespace:
    try:
        with open(args.config) as handle:
            overrides = json.load(handle)
    except (OSError, json.JSONDecodeError) as err:
        parser.error(f"cannot read config {args.config}: {err}")
    if not isinstance(overrides, dict):
        parser.error("config must be a JSON object")
    sub = registry[args.command]
    valid = {action.dest for action in sub._actions}
    unknown = set(overrides) - valid
    if unknown:
        parser.error(f"unknown config keys: {', '.join(sorted(unknown))}")
    sub.set_defaults(**overrides)
    # reparse so explicit command line flags still win over the config
    return parser.parse_args(argv)


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser, registry = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "config", None):
            args = _apply_config(parser, registry, argv, args)
    except SystemExit as exit_:
        return int(exit_.code or 0)

    try:
        reports = args.func(args)
    except ExpressionError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ZeroDivisionError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2

    if args.json:
        print(json.dumps(reports, indent=2))
    elif args.command in ("verify-d4", "galois", "units"):
        for report in reports:
            label = report["status"].upper()
            line = f"[{label}] {report['category']}:{report['check']}"
            note = report["details"].get("note")
            if note:
                line += f" ({note})"
            print(line)
    return 0 if all(r["status"] == "pass" for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
