"""Named verification suites: one per headline claim the package reproduces.

Each suite runs an exact per-radius check and reports greppable one-line
verdicts; the CLI `verify` subcommand and the acceptance tests both call
these functions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, List, Optional, Sequence, Tuple

from .cayley import ball, power_table, set_product
from .dynamics import (
    bounds_check,
    classify_growth,
    iterate_dynamic,
    quadratic_bound_check,
)
from .errors import ValidationError
from .groups import SemidirectProduct, monoid_balls, orbit
from .mvalued import CosetGroup, MvGroup, NatGroup
from .wordspec import Instance

SUITES = ("example32", "thm43", "thm48", "lemma47", "example46", "proof34")


@dataclass
class SuiteResult:
    suite: str
    lines: List[Tuple[bool, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(ok for ok, _ in self.lines)

    def add(self, ok: bool, detail: str):
        self.lines.append((ok, detail))

    def render(self) -> str:
        return "\n".join(f"{'PASS' if ok else 'FAIL'} {self.suite} {detail}"
                         for ok, detail in self.lines)


def _sample_elements(instance: Instance, radius: int = 2, limit: int = 32) -> List[Any]:
    """Deterministic element sample: full carrier if finite, else a small ball."""
    X = instance.X
    if hasattr(X, "carrier") and instance.backend is not None and instance.backend.is_finite():
        return list(X.carrier())
    if isinstance(X, NatGroup) or instance.backend is None:
        return list(range(limit))
    gens = instance.x_generators
    if not gens:
        raise ValidationError("instance declares no X generators to sample from")
    table = ball(X, gens, X.unit, radius)
    return table.ball_elements()[:limit]


# ---------------------------------------------------------------------------
# suites


def example32(instance: Instance, x_max: int = 50, r_max: int = 50) -> SuiteResult:
    """Closed form |B(x, r)| = 1 + r + min(x, r) on the builtin 2-valued group."""
    result = SuiteResult("example32")
    X = instance.X
    if not isinstance(X, NatGroup):
        raise ValidationError("example32 requires a builtin_nat instance")
    gens = instance.x_generators or [1]
    failures = 0
    for x in range(x_max + 1):
        table = ball(X, gens, x, r_max)
        for r in range(r_max + 1):
            expected = 1 + r + min(x, r)
            if table.ball_sizes[r] != expected:
                failures += 1
                if failures <= 5:
                    result.add(False, f"r={r} x={x} |B|={table.ball_sizes[r]} expected={expected}")
    if failures == 0:
        result.add(True, f"r={r_max} closed form holds for all x<={x_max}")
    elif failures > 5:
        result.add(False, f"r={r_max} {failures} violations total")
    return result


def thm43(instance: Instance, g_text: Optional[str] = None, r_max: int = 8,
          extra_y: int = 3, seed: int = 0) -> SuiteResult:
    """Sandwich (1/n)|S+(e,r)| <= xi_y(r) <= |B+(e,r)| on a coset instance."""
    result = SuiteResult("thm43")
    X = instance.X
    if not isinstance(X, CosetGroup):
        raise ValidationError("thm43 requires a coset instance")
    if g_text is not None:
        g = instance.backend_element(g_text)
    else:
        if not instance.config.x_generators:
            raise ValidationError("thm43 needs X_generators or an explicit element")
        from .wordspec import evaluate_word
        g = evaluate_word(instance.backend, instance.config.x_generators[0])

    ys = [X.unit]
    pool = [y for y in _sample_elements(instance, radius=2) if y != X.unit]
    rng = random.Random(seed)
    if pool:
        ys.extend(rng.sample(pool, min(extra_y, len(pool))))

    for y in ys:
        report = bounds_check(X, g, y, r_max)
        bad = [r for (r, *_), v in zip(report.rows, report.verdicts) if not v]
        if bad:
            result.add(False, f"r={bad[0]} y={X.render(y)} sandwich violated")
        else:
            result.add(True, f"r={r_max} y={X.render(y)} sandwich holds")
    return result


def thm48(instance: Instance, x_texts: Optional[Sequence[str]] = None,
          r_max: int = 12) -> SuiteResult:
    """Quadratic bound xi_x(r) <= r(r+1) for involutive 2-valued groups."""
    result = SuiteResult("thm48")
    X = instance.X
    if x_texts is not None:
        xs = [instance.element(t) for t in x_texts]
    else:
        xs = instance.x_generators
        if not xs:
            raise ValidationError("thm48 needs X_generators or explicit elements")
    for x in xs:
        report = quadratic_bound_check(X, x, r_max)
        if report.ok:
            margin = min(bound - xi for _, xi, bound in report.rows)
            result.add(True, f"r={r_max} x={X.render(x)} bound holds (min margin {margin})")
        else:
            r, xi, bound = next(row for row in report.rows if row[1] > row[2])
            result.add(False, f"r={r} x={X.render(x)} xi={xi} > {bound}")
    return result


def _sphere_vanishing_ok(pt) -> Optional[int]:
    """Radius of a violation of the once-empty-always-empty lemma, or None."""
    empty_at = None
    for r in range(1, pt.radius + 1):
        if not pt.sstar_sets[r]:
            if empty_at is None:
                empty_at = r
        elif empty_at is not None:
            return r
    return None


def lemma47(instance: Instance, r_max: int = 12, pairs: int = 50,
            pair_r_max: int = 10, seed: int = 0) -> SuiteResult:
    """Power-sphere lemma: (a) vanishing persists; (b) sphere addition."""
    result = SuiteResult("lemma47")
    X = instance.X
    xs = _sample_elements(instance)
    tables = {}
    bad_a = 0
    for x in xs:
        pt = power_table(X, x, max(r_max, pair_r_max))
        tables[x] = pt
        violation = _sphere_vanishing_ok(pt)
        if violation is not None:
            bad_a += 1
            result.add(False, f"r={violation} x={X.render(x)} sphere reappeared")
    if bad_a == 0:
        result.add(True, f"r={r_max} vanishing persists for {len(xs)} base points")

    rng = random.Random(seed)
    checked = 0
    bad_b = 0
    attempts = 0
    while checked < pairs and attempts < pairs * 20:
        attempts += 1
        x = rng.choice(xs)
        pt = tables[x]
        nonempty = [r for r in range(1, pair_r_max + 1) if pt.sstar_sets[r]]
        if not nonempty:
            continue
        k = rng.randint(1, 3)
        decomposition = [rng.choice(nonempty) for _ in range(k)]
        total = sum(decomposition)
        if total > pair_r_max:
            continue
        checked += 1
        lhs = set(pt.sstar_sets[total])
        rhs = pt.sstar_sets[decomposition[0]]
        for r_i in decomposition[1:]:
            rhs = set_product(X, rhs, pt.sstar_sets[r_i])
        if not lhs <= set(rhs):
            bad_b += 1
            result.add(False,
                       f"r={total} x={X.render(x)} decomposition={decomposition} "
                       "sphere not inside the product support")
    if bad_b == 0:
        result.add(True, f"r={pair_r_max} sphere addition holds on {checked} decompositions")
    return result


def example46(instance: Instance, z_text: Optional[str] = None, r_max: int = 20,
              cap: int = 2) -> SuiteResult:
    """Bounded dynamics over an exponential-growth backend: xi_e(r) <= 2."""
    result = SuiteResult("example46")
    X = instance.X
    z = (instance.element(z_text) if z_text is not None
         else instance.x_generators[0])
    table = iterate_dynamic(X, z, X.unit, r_max)
    worst = max(table.xi)
    result.add(worst <= cap, f"r={r_max} max xi={worst} (cap {cap})")
    record = classify_growth(table.xi)
    result.add(record.kind == "bounded", f"r={r_max} classified {record.kind}")
    return result


def proof34(instance: Instance, r_max: int = 5) -> SuiteResult:
    """Coset ball sizes are dominated by the semidirect-product ball sizes."""
    result = SuiteResult("proof34")
    X = instance.X
    if not isinstance(X, CosetGroup):
        raise ValidationError("proof34 requires a coset instance")
    backend, auts = X.backend, X.auts
    from .wordspec import evaluate_word
    words = instance.config.x_generators
    if not words:
        raise ValidationError("proof34 needs X_generators")
    S = [evaluate_word(backend, w) for w in words]

    ga = SemidirectProduct(backend, auts)
    ga_gens = [(s, i) for s in S for i in range(auts.order)]
    ga_table = monoid_balls(ga, ga_gens, r_max)

    x_gens = []
    seen = set()
    for s in S:
        x = X.project(s)
        if x.key not in seen:
            seen.add(x.key)
            x_gens.append(x)
    x_table = ball(X, x_gens, X.unit, r_max)

    ok = True
    for r in range(r_max + 1):
        if x_table.ball_sizes[r] > ga_table.ball_sizes[r]:
            ok = False
            result.add(False, f"r={r} |B_X|={x_table.ball_sizes[r]} > "
                              f"|B_GA|={ga_table.ball_sizes[r]}")
    if ok:
        result.add(True, f"r={r_max} |B_X| <= |B_GA| at every radius "
                         f"(final {x_table.ball_sizes[-1]} <= {ga_table.ball_sizes[-1]})")
    return result


def run_suite(name: str, instance: Instance, r_max: Optional[int] = None) -> SuiteResult:
    """Dispatch by suite name with each criterion's stated default radius."""
    if name == "example32":
        return example32(instance)
    if name == "thm43":
        return thm43(instance, r_max=r_max if r_max is not None else 8)
    if name == "thm48":
        return thm48(instance, r_max=r_max if r_max is not None else 12)
    if name == "lemma47":
        return lemma47(instance, r_max=r_max if r_max is not None else 12)
    if name == "example46":
        return example46(instance, r_max=r_max if r_max is not None else 20)
    if name == "proof34":
        return proof34(instance, r_max=r_max if r_max is not None else 5)
    raise ValidationError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
