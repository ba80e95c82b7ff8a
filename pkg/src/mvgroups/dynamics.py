"""n-valued dynamics T_z and their growth functions.

T_z sends y to the multiset y * z; the growth function xi_y(r) is the
number of distinct elements in T_z^r(y).  For coset groups the sandwich
(1/n)|S+(e, r)| <= xi_y(r) <= |B+(e, r)| relates xi to BFS balls in the
submonoid of G generated by the A-orbit of g, and that is exactly what
``bounds_check`` computes on both sides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple

from .errors import BudgetExceeded, InsufficientData, PreconditionViolated, ValidationError
from .groups import DEFAULT_BUDGET, MonoidBallTable, monoid_balls, orbit
from .cayley import PowerTable, power_table
from .mvalued import CosetGroup, MvGroup


@dataclass
class DynamicsTable:
    """Supports of T_z^r(y) and their sizes xi_y(r), rows 0..radius."""

    z: Any
    y: Any
    radius: int
    supports: List[Tuple[Any, ...]]
    xi: List[int]


def iterate_dynamic(X: MvGroup, z, y, radius: int,
                    budget: int = DEFAULT_BUDGET) -> DynamicsTable:
    if radius < 0:
        raise ValidationError("radius must be >= 0")
    supports = [(y,)]
    xi = [1]
    current = {y}
    for _ in range(radius):
        nxt = set()
        for u in current:
            nxt.update(X.mul(u, z).support())
        if len(nxt) > budget:
            raise BudgetExceeded(f"dynamics iteration exceeded node budget {budget}")
        current = nxt
        supports.append(tuple(sorted(current)))
        xi.append(len(current))
    return DynamicsTable(z, y, radius, supports, xi)


@dataclass
class BoundsReport:
    """Per-radius sandwich (1/n)|S+| <= xi <= |B+| with verdicts."""

    n: int
    rows: List[Tuple[int, Fraction, int, int]]  # (r, lower, xi, upper)
    verdicts: List[bool]
    monoid_table: MonoidBallTable
    dynamics_table: DynamicsTable

    @property
    def ok(self) -> bool:
        return all(self.verdicts)


def bounds_check(X: CosetGroup, g, y, r_max: int,
                 budget: int = DEFAULT_BUDGET) -> BoundsReport:
    """Monoid-ball sandwich for z = pi(g): monoid of the A-orbit of g vs xi_y."""
    gens = orbit(X.auts, g)
    mb = monoid_balls(X.backend, gens, r_max, budget=budget)
    dt = iterate_dynamic(X, X.project(g), y, r_max, budget=budget)
    rows = []
    verdicts = []
    sphere_sizes = mb.sphere_sizes()
    for r in range(r_max + 1):
        lower = Fraction(sphere_sizes[r], X.n)
        upper = mb.ball_sizes[r]
        xi = dt.xi[r]
        rows.append((r, lower, xi, upper))
        verdicts.append(lower <= xi <= upper)
    return BoundsReport(X.n, rows, verdicts, mb, dt)


@dataclass
class QuadraticBoundReport:
    """xi_x(r) <= r(r+1) for an involutive 2-valued group, with margins."""

    x: Any
    rows: List[Tuple[int, int, int]]  # (r, xi, bound)
    power: PowerTable

    @property
    def ok(self) -> bool:
        return all(xi <= bound for _, xi, bound in self.rows)

    def xi_values(self) -> List[int]:
        return [xi for _, xi, _ in self.rows]


def quadratic_bound_check(X: MvGroup, x, r_max: int,
                          budget: int = DEFAULT_BUDGET) -> QuadraticBoundReport:
    """Check xi_x(r) = |Set(x^{*r})| <= r(r+1) for 1 <= r <= r_max.

    Requires n = 2 and inv = id; the involution condition is verified on
    every element the power iteration visits.
    """
    if r_max < 1:
        raise ValidationError("r_max must be >= 1")
    if X.n != 2:
        raise PreconditionViolated(f"need a 2-valued group, got n = {X.n}")
    pt = power_table(X, x, r_max, budget=budget)
    visited = {x}
    for support in pt.set_powers:
        visited.update(support)
    for a in sorted(visited):
        if X.inv(a) != a:
            raise PreconditionViolated(
                f"inv({X.render(a)}) != {X.render(a)}: group is not involutive")
    rows = [(r, len(pt.set_powers[r]), r * (r + 1)) for r in range(1, r_max + 1)]
    return QuadraticBoundReport(x, rows, pt)


# ---------------------------------------------------------------------------
# empirical classification


@dataclass
class ClassificationRecord:
    """Heuristic growth verdict; never a proof (the caveat flag is always set)."""

    kind: str  # bounded | empirically-polynomial | empirically-exponential | inconclusive
    degree: Optional[float] = None
    base: Optional[float] = None
    heuristic: bool = True
    detail: str = ""


# exponential verdict needs every one of the last few successive ratios
# to clear this factor; tuned for desk-scale radii
EXPONENTIAL_RATIO_THRESHOLD = 1.3
RATIO_WINDOW = 5


def classify_growth(values: Sequence[int]) -> ClassificationRecord:
    """Classify a table of sizes indexed by radius 0..len-1."""
    values = list(values)
    if len(values) < 6:
        raise InsufficientData(f"need at least 6 rows, got {len(values)}")
    if any(v < 1 for v in values):
        raise ValidationError("table sizes must be positive")

    tail = values[-RATIO_WINDOW:]
    if len(set(tail)) == 1:
        return ClassificationRecord("bounded", detail=f"last {RATIO_WINDOW} rows = {tail[0]}")

    ratios = [values[i + 1] / values[i]
              for i in range(len(values) - RATIO_WINDOW, len(values) - 1)]
    if min(ratios) >= EXPONENTIAL_RATIO_THRESHOLD:
        base = math.exp(sum(math.log(q) for q in ratios) / len(ratios))
        return ClassificationRecord(
            "empirically-exponential", base=base,
            detail=f"min successive ratio {min(ratios):.3f} over last {RATIO_WINDOW} rows")

    # least-squares fit of log size against log radius over the last two thirds
    start = max(1, len(values) - (2 * len(values)) // 3)
    xs = [math.log(r) for r in range(start, len(values)) if r >= 1]
    ys = [math.log(values[r]) for r in range(start, len(values)) if r >= 1]
    if len(xs) < 2 or len(set(xs)) < 2:
        return ClassificationRecord("inconclusive", detail="too few distinct radii for a fit")
    mean_x = sum(xs) / len(xs)
    mean_y = sum(ys) / len(ys)
    sxx = sum((a - mean_x) ** 2 for a in xs)
    sxy = sum((a - mean_x) * (b - mean_y) for a, b in zip(xs, ys))
    slope = sxy / sxx
    if slope < 0:
        return ClassificationRecord("inconclusive", detail=f"negative fit slope {slope:.3f}")
    return ClassificationRecord(
        "empirically-polynomial", degree=slope,
        detail=f"log-log fit over radii {start}..{len(values) - 1}")


# ---------------------------------------------------------------------------
# serialization


def dynamics_csv(table: DynamicsTable, bounds: Optional[BoundsReport] = None) -> str:
    if bounds is None:
        lines = ["r,xi"]
        for r in range(table.radius + 1):
            lines.append(f"{r},{table.xi[r]}")
        return "\n".join(lines) + "\n"
    lines = ["r,xi,lower_bound,upper_bound,verdict"]
    for (r, lower, xi, upper), verdict in zip(bounds.rows, bounds.verdicts):
        lines.append(f"{r},{xi},{float(lower):.6g},{upper},{'pass' if verdict else 'fail'}")
    return "\n".join(lines) + "\n"


def dynamics_record(table: DynamicsTable, X: MvGroup,
                    bounds: Optional[BoundsReport] = None,
                    emit_elements: bool = False) -> dict:
    record = {
        "schema": 1,
        "z": X.render(table.z),
        "y": X.render(table.y),
        "rows": [{"r": r, "xi": table.xi[r]} for r in range(table.radius + 1)],
    }
    if bounds is not None:
        for row, (_, lower, _, upper), verdict in zip(record["rows"], bounds.rows,
                                                      bounds.verdicts):
            row["lower_bound"] = float(lower)
            row["upper_bound"] = upper
            row["verdict"] = verdict
    if emit_elements:
        record["supports"] = [[X.render(e) for e in s] for s in table.supports]
    return record
