"""Command-line front end.

    greyrank rank <file> [--stage S] [--format text|json] [--rho R]
                  [--theta-plus T] [--borda-weights w1,w2,w3]
                  [--methods m1,m2] [--normalized PATH] [--out PATH]
    greyrank whatif <file> --set "A2.G3=[6.5,7.5]" [--set ...] [options]

Exit codes: 0 success, 1 validation error, 2 computation error.
Flags override the corresponding values in the problem file's params
block.  JSON is the canonical output format; text is presentation-only.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from .errors import ComputationError, ValidationError
from .interval import interval_grid
from .pipeline import Report, WhatIfResult, run, whatif
from .problem import DecisionProblem, load_problem
from .ranking import Method

METHOD_ALIASES = {
    "topsis": Method.GREY_TOPSIS,
    "grey_topsis": Method.GREY_TOPSIS,
    "incidence": Method.GREY_INCIDENCE,
    "grey_incidence": Method.GREY_INCIDENCE,
    "entropy": Method.MAX_ENTROPY_INCIDENCE,
    "max_entropy_incidence": Method.MAX_ENTROPY_INCIDENCE,
}


class _Parser(argparse.ArgumentParser):
    # route usage errors through the validation exit code
    def error(self, message):
        raise ValidationError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="greyrank", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("file", help="decision problem JSON file")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--rho", type=float, default=None,
                       help="incidence resolution coefficient in (0, 1)")
        p.add_argument("--theta-plus", type=float, default=None,
                       help="positive preference coefficient; theta-minus becomes 1 - value")
        p.add_argument("--borda-weights", default=None, metavar="W1,W2,W3",
                       help="fusion weights for topsis, incidence, entropy")
        p.add_argument("--methods", default=None, metavar="M1,M2,...",
                       help="subset of methods: topsis, incidence, entropy")
        p.add_argument("--out", default=None, help="write output to this path")

    rank = sub.add_parser("rank", help="run the pipeline on a problem file")
    add_common(rank)
    rank.add_argument("--stage", choices=("normalize", "weights", "rank", "all"),
                      default="all")
    rank.add_argument("--normalized", default=None, metavar="PATH",
                      help="inject a precomputed normalized matrix "
                           "(a stage=normalize report or a bare [lo,hi] grid)")

    what = sub.add_parser("whatif", help="re-rank under overrides and diff")
    add_common(what)
    what.add_argument("--set", dest="overrides", action="append", required=True,
                      metavar="TARGET=[LO,HI]",
                      help="override a matrix cell (A2.G3=[6.5,7.5]), a "
                           "preference (q.A2=[0.5,0.6]) or a subjective "
                           "weight (alpha.G1=[0.1,0.3]); repeatable")
    return parser


def apply_param_flags(problem: DecisionProblem, args) -> DecisionProblem:
    updates = {}
    if args.rho is not None:
        updates["rho"] = args.rho
    if args.theta_plus is not None:
        updates["theta_plus"] = args.theta_plus
        updates["theta_minus"] = 1.0 - args.theta_plus
    if args.borda_weights is not None:
        parts = args.borda_weights.split(",")
        if len(parts) != 3:
            raise ValidationError(
                f"--borda-weights expects 3 comma-separated values, got {args.borda_weights!r}"
            )
        try:
            updates["borda_weights"] = tuple(float(p) for p in parts)
        except ValueError:
            raise ValidationError(
                f"--borda-weights values must be numbers, got {args.borda_weights!r}"
            ) from None
    if updates:
        params = dataclasses.replace(problem.params, **updates)
        params.validate()
        problem.params = params
    return problem


def parse_methods(text: str | None):
    if text is None:
        return None
    methods = []
    for part in text.split(","):
        name = part.strip().lower()
        if name not in METHOD_ALIASES:
            raise ValidationError(
                f"unknown method {part.strip()!r}; choose from "
                f"{sorted(set(METHOD_ALIASES))}"
            )
        methods.append(METHOD_ALIASES[name])
    return methods


def load_normalized(path: str):
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read normalized matrix from {path}: {exc}") from None
    if isinstance(data, dict):
        if "normalized" not in data:
            raise ValidationError(
                f"{path} has no 'normalized' key; pass a stage=normalize report"
            )
        data = data["normalized"]
    return interval_grid(data)


def _fmt_interval(pair, digits=5) -> str:
    return f"[{pair[0]:.{digits}f}, {pair[1]:.{digits}f}]"


def render_text(report: Report) -> str:
    problem = report.problem
    plans = problem.plans
    names = problem.attribute_names()
    out = []
    out.append(f"Plans ({len(plans)}): " + ", ".join(plans))
    out.append("Attributes: " + ", ".join(
        f"{a.name} ({a.kind.value})" for a in problem.attributes))
    out.append("")

    width = max(len(p) for p in plans) + 2
    cell = 22

    out.append("Normalized matrix")
    out.append(" " * width + "".join(f"{name:<{cell}}" for name in names))
    for plan, row in zip(plans, report.normalized):
        cells = "".join(f"{_fmt_interval(g.as_pair()):<{cell}}" for g in row)
        out.append(f"{plan:<{width}}{cells}")

    if report.weights is not None:
        w = report.weights.to_dict()
        out.append("")
        out.append("Weights")
        header = f"{'attribute':<12}{'subjective':<22}{'opt':<10}{'ent_lo':<10}{'ent_hi':<10}{'objective':<22}{'final':<22}"
        out.append(header)
        for j, name in enumerate(names):
            out.append(
                f"{name:<12}"
                f"{_fmt_interval(w['subjective'][j]):<22}"
                f"{w['objective_opt'][j]:<10.5f}"
                f"{w['entropy_lo'][j]:<10.5f}"
                f"{w['entropy_hi'][j]:<10.5f}"
                f"{_fmt_interval(w['objective'][j]):<22}"
                f"{_fmt_interval(w['final'][j]):<22}"
            )

    if report.methods:
        out.append("")
        out.append("Scores and ranks")
        name_w = max(len(name) for name in report.methods) + 2
        out.append(" " * name_w + "".join(f"{p:<12}" for p in plans))
        for name, result in report.methods.items():
            row = "".join(f"{s:<12.5f}" for s in result.scores)
            out.append(f"{name:<{name_w}}{row}")
            row = "".join(f"{r:<12}" for r in result.ranks)
            out.append(f"{'  rank':<{name_w}}{row}")

    if report.final_rank is not None:
        out.append("")
        scores = ", ".join(f"{p}={s:g}" for p, s in zip(plans, report.borda_scores))
        out.append(f"Borda scores: {scores}")
        out.append("Final order: " + " > ".join(report.final_order))

    if report.warnings:
        out.append("")
        out.append("Warnings:")
        out.extend(f"  - {w}" for w in report.warnings)
    return "\n".join(out) + "\n"


def render_whatif_text(result: WhatIfResult) -> str:
    out = []
    out.append("Baseline order:  " + " > ".join(result.baseline.final_order))
    out.append("Perturbed order: " + " > ".join(result.perturbed.final_order))
    if result.diff["changed"]:
        out.append("Rank changes:")
        for entry in result.diff["changed"]:
            out.append(
                f"  {entry['plan']}: {entry['baseline_rank']} -> {entry['perturbed_rank']}"
            )
    else:
        out.append("Rank changes: none")
    flags = result.diff["tie_flags"]
    for which in ("baseline", "perturbed"):
        for where, groups in flags[which].items():
            for group in groups:
                out.append(f"Tie ({which}, {where}): " + ", ".join(group))
    warnings = result.perturbed.warnings
    if warnings:
        out.append("Warnings (perturbed):")
        out.extend(f"  - {w}" for w in warnings)
    return "\n".join(out) + "\n"


def _emit(text: str, out_path: str | None):
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        problem = load_problem(args.file)
        problem = apply_param_flags(problem, args)
        methods = parse_methods(args.methods)

        if args.command == "rank":
            normalized = load_normalized(args.normalized) if args.normalized else None
            report = run(problem, stage=args.stage, methods=methods,
                         normalized=normalized)
            text = report.to_json() if args.format == "json" else render_text(report)
        else:
            result = whatif(problem, args.overrides, methods=methods)
            text = (result.to_json() if args.format == "json"
                    else render_whatif_text(result))
        _emit(text, args.out)
        return 0
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ComputationError as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return 2


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
