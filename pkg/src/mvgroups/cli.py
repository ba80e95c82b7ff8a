"""Command-line entry point.

Exit codes: 0 = success / all verdicts pass, 1 = a verdict failed,
2 = usage or config error, 3 = a BFS budget was exceeded.  Output is
deterministic for fixed config and flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .cayley import (
    ball,
    compare_generating_sets,
    growth_csv,
    growth_record,
    power_csv,
    power_record,
    power_table,
)
from .dynamics import (
    bounds_check,
    classify_growth,
    dynamics_csv,
    dynamics_record,
    iterate_dynamic,
)
from .errors import (
    BudgetExceeded,
    ClosureBudgetExceeded,
    InsufficientData,
    MvGroupsError,
    NotReachedWithinCap,
)
from .mvalued import CosetGroup, check_axioms
from .verify import SUITES, run_suite
from .wordspec import Instance, load_instance


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("-c", "--config", required=True, help="instance config JSON file")
    parser.add_argument("--budget", type=int, default=None,
                        help="node budget override (default from config, else 10^6)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mvgroups",
                                     description="Exact computation with n-valued groups")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("axioms", help="check the n-valued group axioms")
    _add_common(p)
    p.add_argument("--sample", type=int, default=10,
                   help="sample size / range bound for infinite carriers")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("growth", help="growth table of balls and spheres")
    _add_common(p)
    p.add_argument("--center", default=None, help="center element word (default: unit)")
    p.add_argument("--radius", type=int, default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--emit-elements", action="store_true")

    p = sub.add_parser("dynamics", help="iterate the dynamic T_z and report xi")
    _add_common(p)
    p.add_argument("--z", required=True, help="word defining z")
    p.add_argument("--y", default=None, help="starting point word (default: unit)")
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--bounds", action="store_true",
                   help="check the monoid-ball sandwich (coset instances)")
    p.add_argument("--classify", action="store_true")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--emit-elements", action="store_true")

    p = sub.add_parser("powers", help="power supports B*/S* of an element")
    _add_common(p)
    p.add_argument("--x", required=True, help="base element word")
    p.add_argument("--radius", type=int, default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--emit-elements", action="store_true")

    p = sub.add_parser("compare", help="generating-set growth equivalence sandwich")
    _add_common(p)
    p.add_argument("--gens2", required=True, help="comma-separated words for S'")
    p.add_argument("--center2", default=None, help="second center word (default: unit)")
    p.add_argument("--radius", type=int, default=None)

    p = sub.add_parser("verify", help="run a named verification suite")
    _add_common(p)
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--radius", type=int, default=None)

    return parser


def _budget(instance: Instance, args) -> int:
    return args.budget if args.budget is not None else instance.config.default_budget


def _radius(instance: Instance, value: Optional[int]) -> int:
    return value if value is not None else instance.config.default_radius


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_axioms(args) -> int:
    instance = load_instance(args.config)
    X = instance.X
    if instance.backend is not None and instance.backend.is_finite():
        sample = X.carrier()
    elif instance.backend is None:
        sample = list(range(args.sample + 1))
    else:
        from .verify import _sample_elements
        sample = _sample_elements(instance, radius=2, limit=args.sample)
    report = check_axioms(X, sample)
    if args.format == "json":
        _emit(json.dumps({"schema": 1, **report.to_record(render=X.render)}, indent=2))
    else:
        _emit(report.to_text(render=X.render))
    return 0 if report.all_ok else 1


def _cmd_growth(args) -> int:
    instance = load_instance(args.config)
    X = instance.X
    center = instance.element(args.center) if args.center is not None else X.unit
    table = ball(X, instance.x_generators, center, _radius(instance, args.radius),
                 budget=_budget(instance, args))
    if args.format == "json":
        _emit(json.dumps(growth_record(table, X, args.emit_elements), indent=2))
    else:
        _emit(growth_csv(table))
    return 0


def _cmd_dynamics(args) -> int:
    instance = load_instance(args.config)
    X = instance.X
    steps = _radius(instance, args.steps)
    budget = _budget(instance, args)
    z = instance.element(args.z)
    y = instance.element(args.y) if args.y is not None else X.unit

    bounds = None
    if args.bounds:
        if not isinstance(X, CosetGroup):
            raise MvGroupsError("--bounds requires a coset instance")
        g = instance.backend_element(args.z)
        bounds = bounds_check(X, g, y, steps, budget=budget)
        table = bounds.dynamics_table
    else:
        table = iterate_dynamic(X, z, y, steps, budget=budget)

    if args.format == "json":
        record = dynamics_record(table, X, bounds, args.emit_elements)
        if args.classify:
            c = classify_growth(table.xi)
            record["classification"] = {
                "kind": c.kind, "degree": c.degree, "base": c.base,
                "heuristic": c.heuristic, "detail": c.detail,
            }
        _emit(json.dumps(record, indent=2))
    else:
        _emit(dynamics_csv(table, bounds))
        if args.classify:
            c = classify_growth(table.xi)
            extras = []
            if c.degree is not None:
                extras.append(f"degree={c.degree:.3f}")
            if c.base is not None:
                extras.append(f"base={c.base:.3f}")
            extras.append("heuristic")
            _emit(f"classification: {c.kind} ({', '.join(extras)})")
    return 0 if bounds is None or bounds.ok else 1


def _cmd_powers(args) -> int:
    instance = load_instance(args.config)
    X = instance.X
    x = instance.element(args.x)
    table = power_table(X, x, _radius(instance, args.radius),
                        budget=_budget(instance, args))
    if args.format == "json":
        _emit(json.dumps(power_record(table, X, args.emit_elements), indent=2))
    else:
        _emit(power_csv(table))
    return 0


def _cmd_compare(args) -> int:
    instance = load_instance(args.config)
    X = instance.X
    gens2 = [instance.element(w) for w in args.gens2.split(",") if w.strip()]
    if not gens2:
        raise MvGroupsError("--gens2 must list at least one word")
    y2 = instance.element(args.center2) if args.center2 is not None else X.unit
    report = compare_generating_sets(
        X, instance.x_generators, gens2, X.unit, y2,
        _radius(instance, args.radius), budget=_budget(instance, args))
    _emit(f"constant l={report.constant}")
    for r, lower, middle, upper in report.rows:
        verdict = "pass" if r not in report.violations else "fail"
        _emit(f"{r},{lower},{middle},{upper},{verdict}")
    status = "PASS" if report.ok else "FAIL"
    _emit(f"{status} compare r={report.rows[-1][0]} l={report.constant}")
    return 0 if report.ok else 1


def _cmd_verify(args) -> int:
    instance = load_instance(args.config)
    result = run_suite(args.suite, instance, r_max=args.radius)
    _emit(result.render())
    return 0 if result.ok else 1


_HANDLERS = {
    "axioms": _cmd_axioms,
    "growth": _cmd_growth,
    "dynamics": _cmd_dynamics,
    "powers": _cmd_powers,
    "compare": _cmd_compare,
    "verify": _cmd_verify,
}


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return _HANDLERS[args.command](args)
    except (BudgetExceeded, ClosureBudgetExceeded) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (NotReachedWithinCap, InsufficientData) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MvGroupsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
