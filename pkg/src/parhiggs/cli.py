"""Command-line interface.

Subcommands
    describe     algebra/parabolic dimensions and the predicted image
    verify       sample germs and check the image description
    witness      per-coordinate sharpness of the valuation bounds
    trace-check  a germ whose trace power beats the coordinate bound
    newton       Newton polygon: JSON + CSV of edge pairs + SVG figure
    components   component count / singularity of the image region
    codim        exact codimension identities for a type-D parabolic
    audit-dim    global dimension count at a given genus

Exit status: 0 success, 1 a verification failed, 2 configuration error.
All reports are UTF-8 and byte-identical for a fixed configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .algebras import build_algebra, build_parabolic
from .degrees import (
    BadParabolicError,
    dimension_audit,
    fundamental_degrees,
    is_good_parabolic,
    levi_degrees,
    predicted_image,
)
from .hitchin import (
    coordinate_labels,
    trace_power_check,
    verify_inclusion,
    witness_search,
)
from .linalg import StructureError
from .plotting import render_newton_svg
from .typedd import (
    JordanType,
    NewtonPolygon,
    codim_report,
    component_analysis,
    richardson_jordan_type,
)

SCHEMA_VERSION = 1


class ConfigError(ValueError):
    pass


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else str(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _parse_ints(text: str, field: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise ConfigError(f"{field}: expected comma-separated integers, got {text!r}")


def _build_parabolic(args) -> object:
    if args.rank is None:
        raise ConfigError("rank: required")
    try:
        real = build_algebra(args.type, args.rank)
    except (StructureError, ValueError) as exc:
        raise ConfigError(f"type/rank: {exc}")
    chosen = [
        name
        for name, value in (
            ("blocks", args.blocks),
            ("marked_roots", args.marked_roots),
            ("g2_parabolic", getattr(args, "g2_parabolic", None)),
        )
        if value is not None
    ]
    if len(chosen) != 1:
        raise ConfigError(
            "blocks|marked_roots|g2_parabolic: exactly one must be given"
        )
    try:
        if args.blocks is not None:
            if args.type == "A":
                blocks = _parse_ints(args.blocks, "blocks")
            else:
                if ":" not in args.blocks:
                    raise ConfigError(
                        "blocks: for types B/C/D use 'r1,r2,...:s' "
                        "(isotropic block sizes, then the middle size s)"
                    )
                head, _, tail = args.blocks.partition(":")
                blocks = (_parse_ints(head, "blocks"), int(tail))
            return build_parabolic(real, blocks=blocks)
        if args.marked_roots is not None:
            return build_parabolic(
                real, marked_roots=_parse_ints(args.marked_roots, "marked_roots")
            )
        return build_parabolic(real, g2_parabolic=args.g2_parabolic)
    except ConfigError:
        raise
    except (StructureError, ValueError) as exc:
        raise ConfigError(f"{chosen[0]}: {exc}")


def _delta_of(args) -> JordanType:
    if args.delta is not None:
        try:
            return JordanType(_parse_ints(args.delta, "delta"))
        except StructureError as exc:
            raise ConfigError(f"delta: {exc}")
    par = _build_parabolic(args)
    if par.realization.type_label != "D":
        raise ConfigError("type: Newton polygons apply to type D (or pass --delta)")
    return richardson_jordan_type(par)


def _emit(report: dict, args) -> None:
    report = {"schema_version": SCHEMA_VERSION, **_jsonable(report)}
    if args.format == "json":
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", "value"])
        for key in sorted(report):
            writer.writerow([key, json.dumps(report[key], sort_keys=True)])
        text = buf.getvalue()
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _add_parabolic_args(sub, g2: bool = True):
    sub.add_argument("--type", required=True, choices=("A", "B", "C", "D", "G2"))
    sub.add_argument("--rank", type=int, required=True)
    sub.add_argument("--blocks", help="A: 'n1,n2,...'; B/C/D: 'r1,r2,...:s'")
    sub.add_argument("--marked-roots", dest="marked_roots", help="e.g. '1,4'")
    if g2:
        sub.add_argument(
            "--g2-parabolic",
            dest="g2_parabolic",
            choices=("borel", "line", "plane"),
        )


def _add_common(sub):
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--output", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parhiggs",
        description="local Hitchin map on parabolic Higgs germs, exactly",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("describe", help="dimensions and the predicted image")
    _add_parabolic_args(s)
    _add_common(s)

    s = subs.add_parser("verify", help="sampled image-description check")
    _add_parabolic_args(s)
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--precision", type=int)
    s.add_argument("--coeff-bound", dest="coeff_bound", type=int, default=10)
    _add_common(s)

    s = subs.add_parser("witness", help="sharpness of each valuation bound")
    _add_parabolic_args(s)
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--precision", type=int)
    _add_common(s)

    s = subs.add_parser("trace-check", help="trace power vs coordinate bound")
    _add_parabolic_args(s)
    s.add_argument("--power", type=int, required=True)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--seed", type=int, required=True)
    _add_common(s)

    s = subs.add_parser("newton", help="Newton polygon report, CSV and SVG")
    _add_parabolic_args(s)
    s.add_argument("--delta", help="Jordan type, e.g. '3,3,2,2' (overrides flags)")
    s.add_argument(
        "--output-prefix",
        dest="output_prefix",
        required=True,
        help="writes PREFIX.json, PREFIX.csv and PREFIX.svg",
    )
    _add_common(s)

    s = subs.add_parser("components", help="components of the image region")
    _add_parabolic_args(s)
    s.add_argument("--delta", help="Jordan type, e.g. '3,3,2,2' (overrides flags)")
    _add_common(s)

    s = subs.add_parser("codim", help="type-D codimension identities")
    _add_parabolic_args(s, g2=False)
    _add_common(s)

    s = subs.add_parser("audit-dim", help="global dimension count")
    _add_parabolic_args(s)
    s.add_argument("--genus", type=int, required=True)
    _add_common(s)

    return parser


def _cmd_describe(args) -> int:
    par = _build_parabolic(args)
    real = par.realization
    good, bad_witness = is_good_parabolic(par)
    report = {
        "command": "describe",
        "parabolic": par.describe(),
        "dim_g": real.dim_g,
        "dim_l": par.dim_l,
        "dim_n": par.dim_n,
        "degrees": list(fundamental_degrees(real.type_label, real.rank)),
        "levi_degrees": list(levi_degrees(par)),
        "coordinates": list(coordinate_labels(real.type_label, real.rank)),
        "good": good,
    }
    if good:
        profile = predicted_image(par)
        report["image"] = {
            "kind": "box",
            "exponents": list(profile.exponents),
        }
    else:
        delta = richardson_jordan_type(par)
        report["bad_witness"] = bad_witness
        report["image"] = {
            "kind": "newton-polygon",
            "delta": list(delta.delta),
            "components": component_analysis(delta),
        }
    _emit(report, args)
    return 0


def _cmd_verify(args) -> int:
    par = _build_parabolic(args)
    rep = verify_inclusion(
        par,
        trials=args.trials,
        seed=args.seed,
        precision=args.precision,
        coeff_bound=args.coeff_bound,
    )
    report = {
        "command": "verify",
        "parabolic": rep.parabolic,
        "good": rep.good,
        "trials": rep.trials,
        "passed": rep.passed,
        "failures": rep.failures,
        "min_valuations": rep.min_valuations,
    }
    if rep.exponents is not None:
        report["exponents"] = list(rep.exponents)
        report["sharp"] = rep.sharp_coordinates()
    if rep.delta is not None:
        report["delta"] = list(rep.delta)
    _emit(report, args)
    return 0 if rep.passed else 1


def _cmd_witness(args) -> int:
    par = _build_parabolic(args)
    report = witness_search(
        par, trials=args.trials, seed=args.seed, precision=args.precision
    )
    report = {"command": "witness", **report}
    _emit(report, args)
    return 0 if report["all_sharp"] else 1


def _cmd_trace_check(args) -> int:
    par = _build_parabolic(args)
    degs = fundamental_degrees(par.realization.type_label, par.realization.rank)
    if args.power not in degs:
        raise ConfigError(f"power: {args.power} is not an invariant degree {degs}")
    report = trace_power_check(
        par, power=args.power, trials=args.trials, seed=args.seed
    )
    report = {"command": "trace-check", **report}
    _emit(report, args)
    return 0 if report["found"] else 1


def _cmd_newton(args) -> int:
    delta = _delta_of(args)
    poly = NewtonPolygon(delta)
    drawn = render_newton_svg(delta, args.output_prefix + ".svg")
    pairs = poly.relevant_pairs()
    with open(
        args.output_prefix + ".csv", "w", encoding="utf-8", newline=""
    ) as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["slope", "multiplicity", "alpha", "beta"])
        for dj, ej, pts in pairs:
            for alpha, beta in pts:
                writer.writerow([dj, ej, alpha, beta])
    report = {
        "command": "newton",
        "delta": list(delta.delta),
        "boundary": [[b, poly.min_alpha(b)] for b in range(0, poly.two_n, 2)],
        "relevant_pairs": [
            {"slope": dj, "multiplicity": ej, "points": [list(p) for p in pts]}
            for dj, ej, pts in pairs
        ],
        "figure": args.output_prefix + ".svg",
        "csv": args.output_prefix + ".csv",
        "shaded_cells": [list(c) for c in drawn["shaded_cells"]],
    }
    args.output = args.output_prefix + ".json"
    args.format = "json"
    _emit(report, args)
    return 0


def _cmd_components(args) -> int:
    delta = _delta_of(args)
    report = {"command": "components", **component_analysis(delta)}
    _emit(report, args)
    return 0


def _cmd_codim(args) -> int:
    par = _build_parabolic(args)
    if par.realization.type_label != "D":
        raise ConfigError("type: codim applies to type D")
    report = {"command": "codim", **codim_report(par)}
    _emit(report, args)
    return 0


def _cmd_audit_dim(args) -> int:
    par = _build_parabolic(args)
    if args.genus < 2:
        raise ConfigError("genus: must be >= 2")
    report = {
        "command": "audit-dim",
        "parabolic": par.describe(),
        **dimension_audit(par, args.genus),
    }
    _emit(report, args)
    return 0 if report["match"] else 1


_COMMANDS = {
    "describe": _cmd_describe,
    "verify": _cmd_verify,
    "witness": _cmd_witness,
    "trace-check": _cmd_trace_check,
    "newton": _cmd_newton,
    "components": _cmd_components,
    "codim": _cmd_codim,
    "audit-dim": _cmd_audit_dim,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ConfigError, BadParabolicError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
