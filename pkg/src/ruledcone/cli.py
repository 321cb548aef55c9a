"""Command line interface.

Commands: chamber, walls, strata, inflate, plan, verify-stability, gromov,
decompose, figure, report.  Rationals cross the boundary as ``p/q`` strings
only.  Exit codes: 0 success, 1 internal error, 2 invalid input,
3 verification found a counterexample.  Output is deterministic for a given
flag set: no clocks, no randomness.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import gromov as gromov_mod
from .cone import (active_walls, chamber_of, figure_data, normalized,
                   validity_violations)
from .inflation import InflationStep, inflate, normalize, t_range
from .lattice import B, F, ClassVector, SurfaceParams, parse_class
from .planner import (PlanError, detected_discrepancies, plan,
                      verify_stability)
from .rationals import format_rational, parse_rational
from .strata import (OPEN_LABEL, label_for, stratum_labels,
                     wide_negative_classes)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INVALID = 2
EXIT_COUNTEREXAMPLE = 3


class InputError(ValueError):
    """Bad user input; maps to exit code 2."""


def _parse_point(text: str, policy: bool = True):
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError(f"expected mu,c with rational entries, got {text!r}")
    u = normalized(parse_rational(parts[0]), parse_rational(parts[1]))
    bad = validity_violations(u, policy=policy)
    if bad:
        raise InputError(f"invalid normalized class {text!r}: " + "; ".join(bad))
    return u


def _parse_label(text: str, params: SurfaceParams):
    if text.strip().lower() == "open":
        return OPEN_LABEL
    try:
        cls = parse_class(text, params.n)
        return label_for([cls], params)
    except ValueError as err:
        raise InputError(f"bad stratum label {text!r}: {err}") from None


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_chamber(args) -> int:
    u = _parse_point(args.u)
    cid = chamber_of(u)
    walls = active_walls(u, args.k_max)
    payload = {
        "mu": format_rational(u.mu),
        "c": format_rational(u.c),
        "chamber": cid.index,
        "inequalities": cid.inequalities(),
        "active_walls": [w.name for w in walls],
    }
    lines = [f"u = {u}", f"chamber index: {cid.index}",
             "defining inequalities: " + " and ".join(cid.inequalities())]
    if walls:
        lines.append("active walls: " + ", ".join(w.name for w in walls))
    else:
        lines.append("active walls: none (interior point)")
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_walls(args) -> int:
    # wall queries make sense anywhere in the open cone, policy aside
    u = _parse_point(args.u, policy=False)
    k_max = args.k_max if args.k_max is not None else math.ceil(u.mu) + 1
    walls = active_walls(u, k_max)
    payload = {
        "mu": format_rational(u.mu), "c": format_rational(u.c),
        "k_max": k_max, "active_walls": [w.name for w in walls],
    }
    lines = ([f"active walls at {u}: " + ", ".join(w.name for w in walls)]
             if walls else [f"no active walls at {u} up to k = {k_max}"])
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_strata(args) -> int:
    u = _parse_point(args.u)
    params = SurfaceParams(args.g)
    cid = chamber_of(u)
    labels = stratum_labels(u, params, args.cod_max)
    payload = {
        "chamber": cid.index,
        "labels": [lb.as_json() for lb in labels],
    }
    lines = [f"u = {u} (chamber {cid.index}, g = {params.g})",
             f"{len(labels)} stratum labels:"]
    lines += [f"  {lb.name:<14} codim {lb.codim}" for lb in labels]
    if args.wide is not None:
        wide = wide_negative_classes(u, params, args.wide)
        payload["wide_scan"] = [
            {"class": str(a), "status": status} for a, status in wide]
        lines.append(f"wide scan (|coefficients| <= {args.wide}):")
        lines += [f"  {str(a):<14} {status}" for a, status in wide]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_inflate(args) -> int:
    u = _parse_point(args.u)
    z = parse_class(args.z)
    t = parse_rational(args.t)
    bound = t_range(u, z)
    step = InflationStep(z, t)
    raw = inflate(u, step)
    end = normalize(raw)
    payload = {
        "start": {"mu": format_rational(u.mu), "c": format_rational(u.c)},
        "step": step.as_json(),
        "t_range_sup": format_rational(bound) if bound is not None else None,
        "raw": [format_rational(x)
                for x in (raw.b_area, raw.f_area, *raw.e_area)],
        "end": {"mu": format_rational(end.mu), "c": format_rational(end.c)},
    }
    lines = [
        f"inflate {u} along {z} by t = {format_rational(t)}"
        + (f" (valid range [0, {format_rational(bound)}))"
           if bound is not None else " (unbounded range)"),
        f"raw areas: {raw}",
        f"normalized: {end}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_plan(args) -> int:
    u1 = _parse_point(getattr(args, "from"))
    u2 = _parse_point(args.to)
    params = SurfaceParams(args.g)
    label = _parse_label(args.label, params)
    result = plan(u1, u2, label, params, x=args.x)
    payload = result.as_json()
    lines = [f"plan {u1} -> {u2} in stratum `{label.name}` (g = {params.g}):"]
    if not result.steps:
        lines.append("  empty plan (endpoints coincide)")
    for i, step in enumerate(result.steps, 1):
        lines.append(f"  {i:3d}. inflate along {step.z} by"
                     f" t = {format_rational(step.t)}  [{step.assumption}]")
    lines.append(f"end: {result.end}"
                 + (" (stays in chamber)" if result.stays_in_chamber else ""))
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_verify_stability(args) -> int:
    params = SurfaceParams(args.g)
    report = verify_stability(params, parse_rational(args.mu_max),
                              parse_rational(args.step),
                              mu_min=(parse_rational(args.mu_min)
                                      if args.mu_min else None),
                              min_index=args.min_index, workers=args.workers)
    payload = report.as_json()
    lines = [
        f"stability verification, g = {report.g}, mu in"
        f" ({format_rational(report.mu_min)}, {format_rational(report.mu_max)}],"
        f" step {format_rational(report.grid_step)},"
        f" chambers >= {report.min_index}:",
    ]
    for v in report.chambers:
        status = "ok" if v.failed == 0 else f"FAILED ({v.failed})"
        lines.append(f"  chamber {v.index:3d}: {v.points:3d} points,"
                     f" {len(v.labels):2d} labels, {v.checked:6d} transports"
                     f" checked, {status}")
        if v.first_failure:
            f = v.first_failure
            lines.append(f"    first failure: {f['from']} -> {f['to']}"
                         f" [{f['label']}]: {f['error']}")
    if report.skipped_chambers:
        lines.append("  skipped (below index threshold): "
                     + ", ".join(str(i) for i in report.skipped_chambers))
    lines.append(f"  cross-chamber pairs out of scope: "
                 f"{report.cross_chamber_pairs}")
    lines.append("VERDICT: " + ("all transports certified" if report.ok
                                else "counterexample found"))
    _emit(args, payload, lines)
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


def _cmd_gromov(args) -> int:
    params = SurfaceParams(args.g)
    c = ClassVector(args.p, args.q, (0,) * params.n)
    k = gromov_mod.virtual_dim_k(c, params)
    try:
        value = gromov_mod.gromov_invariant(args.p, args.q, params)
    except ValueError as err:
        raise InputError(str(err)) from None
    criterion = gromov_mod.gromov_nonzero_criterion(args.p, args.q, params)
    payload = {
        "p": args.p, "q": args.q, "g": args.g,
        "virtual_dim": format_rational(k),
        "virtual_dim_integral": k.denominator == 1,
        "gromov_invariant": value,
        "nonzero_criterion_q_ge_g_minus_1": criterion,
    }
    lines = [
        f"C = {c}, g = {args.g}",
        f"virtual dimension k(C) = {format_rational(k)}",
        f"Gr(C) = (p+1)^g = {value}",
        f"nonvanishing criterion (q >= g-1): {'met' if criterion else 'not met'}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    params = SurfaceParams(args.g)
    try:
        decs = gromov_mod.section_decompositions(params, args.q_bound,
                                                 r_bound=args.r_bound)
    except ValueError as err:
        raise InputError(str(err)) from None
    payload = {
        "g": args.g, "q_bound": args.q_bound, "r_bound": args.r_bound,
        "total": str(B + args.g * F),
        "count": len(decs),
        "decompositions": [d.as_json() for d in decs],
    }
    lines = [f"{len(decs)} decompositions of B+{args.g}F"
             f" (q_bound={args.q_bound}, r_bound={args.r_bound}):"]
    for d in decs:
        mark = ""
        if args.report_sections:
            info = d.as_json()
            mark = ("   section " + info["section"]
                    + ("" if info["plain_section"] else "   [exceptional term]"))
        lines.append("  {" + ", ".join(str(p) for p in d.parts) + "}" + mark)
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_figure(args) -> int:
    mu_max = parse_rational(args.mu_max)
    if mu_max <= 1:
        raise InputError("mu-max must exceed 1")
    model = figure_data(mu_max, args.k_max)
    if args.format == "csv":
        text = model.to_csv()
    else:
        text = model.to_svg(scale=args.scale)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_report(args) -> int:
    params = SurfaceParams(args.g)
    mu_max = parse_rational(args.mu_max)
    step = parse_rational(args.step)
    report = verify_stability(params, mu_max, step, workers=args.workers)

    chambers = []
    k_top = math.ceil(mu_max)
    for index in range(1, 2 * k_top):
        cid_k, even = index // 2, index % 2 == 0
        sample = _chamber_sample(index, mu_max)
        entry = {
            "index": index,
            "inequalities": (["mu > %d" % cid_k, "mu <= %d + c" % cid_k]
                             if even else
                             ["mu > %d + c" % cid_k, "mu <= %d" % (cid_k + 1)]),
        }
        if sample is not None:
            entry["labels"] = [lb.as_json()
                               for lb in stratum_labels(sample, params,
                                                        args.cod_max)]
        verdicts = {v.index: v for v in report.chambers}
        if index in verdicts:
            v = verdicts[index]
            entry["stability"] = "verified" if v.failed == 0 else "failed"
        elif index in report.skipped_chambers or index < report.min_index:
            entry["stability"] = "skipped"
        else:
            entry["stability"] = "no-grid-points"
        chambers.append(entry)

    payload = {
        "g": params.g, "n": params.n,
        "mu_max": format_rational(mu_max),
        "grid_step": format_rational(step),
        "chambers": chambers,
        "stability": report.as_json(),
        "paper_discrepancies": detected_discrepancies(params),
    }
    lines = [f"report, g = {params.g}, mu_max = {format_rational(mu_max)}"]
    for entry in chambers:
        labels = entry.get("labels", [])
        lines.append(f"  chamber {entry['index']:3d}: "
                     + " and ".join(entry["inequalities"])
                     + f"; {len(labels)} labels; stability {entry['stability']}")
    lines.append("recorded source discrepancies: "
                 + ", ".join(d["id"] for d in payload["paper_discrepancies"]))
    lines.append("stability verdict: "
                 + ("all certified" if report.ok else "counterexample found"))
    _emit(args, payload, lines)
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


def _chamber_sample(index: int, mu_max: Fraction):
    """An interior grid-friendly point of the chamber, or None if the chamber
    does not meet mu <= mu_max."""
    k, even = index // 2, index % 2 == 0
    if even:
        mu = Fraction(k) + Fraction(1, 2)
        c = Fraction(3, 4)
    else:
        mu = Fraction(k) + Fraction(3, 4)
        c = Fraction(1, 4)
    if index == 1:
        mu, c = Fraction(1), Fraction(1, 2)
    if mu > mu_max:
        return None
    return normalized(mu, c)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ruledcone",
        description="Chamber structure, strata and inflation planning for the"
                    " normalized symplectic cone of one-point blow-ups of"
                    " irrational ruled surfaces (exact arithmetic).")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true",
                       help="emit machine-readable JSON")

    p = sub.add_parser("chamber", help="chamber of a normalized class")
    p.add_argument("--u", required=True, help="normalized class as mu,c")
    p.add_argument("--g", type=int, default=1, help="base genus (default 1)")
    p.add_argument("--k-max", type=int, default=None,
                   help="wall scan bound (default ceil(mu)+1)")
    add_json(p)
    p.set_defaults(func=_cmd_chamber)

    p = sub.add_parser("walls", help="active walls through a class")
    p.add_argument("--u", required=True)
    p.add_argument("--k-max", type=int, default=None)
    add_json(p)
    p.set_defaults(func=_cmd_walls)

    p = sub.add_parser("strata", help="stratum labels present at a class")
    p.add_argument("--u", required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--cod-max", type=int, default=None)
    p.add_argument("--wide", type=int, default=None, metavar="BOUND",
                   help="also run the wide class scan up to |coeff| <= BOUND")
    add_json(p)
    p.set_defaults(func=_cmd_strata)

    p = sub.add_parser("inflate", help="apply one inflation step")
    p.add_argument("--u", required=True)
    p.add_argument("--z", required=True, help="curve class, e.g. B-2F-E")
    p.add_argument("--t", required=True, help="parameter, rational p/q")
    add_json(p)
    p.set_defaults(func=_cmd_inflate)

    p = sub.add_parser("plan", help="certified transport between two classes")
    p.add_argument("--from", required=True, dest="from")
    p.add_argument("--to", required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--label", required=True,
                   help="'open' or a core class such as B-2F")
    p.add_argument("--x", type=int, default=None,
                   help="pin the open-stratum section coefficient (default:"
                        " g, searched downward where needed)")
    add_json(p)
    p.set_defaults(func=_cmd_plan)

    p = sub.add_parser("verify-stability",
                       help="grid-check two-way transport per chamber")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--mu-max", required=True)
    p.add_argument("--step", required=True)
    p.add_argument("--mu-min", default=None)
    p.add_argument("--min-index", type=int, default=None,
                   help="lowest chamber index to attempt (default 2g)")
    p.add_argument("--workers", type=int, default=1)
    add_json(p)
    p.set_defaults(func=_cmd_verify_stability)

    p = sub.add_parser("gromov", help="curve count of a section class")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    add_json(p)
    p.set_defaults(func=_cmd_gromov)

    p = sub.add_parser("decompose",
                       help="stable decompositions of the section class B+gF")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--q-bound", type=int, required=True)
    p.add_argument("--r-bound", type=int, default=1)
    p.add_argument("--report-sections", action="store_true")
    add_json(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("figure", help="emit the chamber diagram")
    p.add_argument("--mu-max", required=True)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--format", choices=["svg", "csv"], default="svg")
    p.add_argument("--scale", type=int, default=100,
                   help="SVG pixels per unit of mu")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_figure)

    p = sub.add_parser("report", help="consolidated JSON report")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--mu-max", required=True)
    p.add_argument("--step", default="1/8")
    p.add_argument("--cod-max", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    add_json(p)
    p.set_defaults(func=_cmd_report)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, PlanError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID
    except Exception as err:  # pragma: no cover - defensive
        print(f"internal error: {err}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
