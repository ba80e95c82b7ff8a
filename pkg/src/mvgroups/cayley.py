"""Cayley-graph exploration of an n-valued group.

Balls are computed by layered BFS over supports: the frontier at step i+1
is the union of support(mul(u, s)) over frontier elements u and generators
s, minus everything already reached.  The empty product is admitted, so x
itself is in B(x, r) for every r (this is what makes the closed form
|B(x, r)| = 1 + r + min(x, r) of the builtin 2-valued group come out
right at small radii).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .errors import BudgetExceeded, NotReachedWithinCap, ValidationError
from .groups import DEFAULT_BUDGET
from .mvalued import MvGroup


@dataclass
class GrowthTable:
    """Per-radius |B(x, r)| and |S(x, r)|, with the sphere element sets."""

    center: Any
    radius: int
    sphere_sets: List[Tuple[Any, ...]]
    ball_sizes: List[int]

    def sphere_sizes(self) -> List[int]:
        return [len(s) for s in self.sphere_sets]

    def ball_elements(self) -> List[Any]:
        out = []
        for sphere in self.sphere_sets:
            out.extend(sphere)
        return sorted(out)


@dataclass
class PowerTable:
    """Cumulative power supports B*(x, r) and their spheres S*(x, r).

    Row 0 is empty by convention; ``set_powers[r]`` is Set(x^{*r}) for
    r >= 1 (index 0 unused, kept as an empty tuple).
    """

    base: Any
    radius: int
    sstar_sets: List[Tuple[Any, ...]]
    bstar_sizes: List[int]
    set_powers: List[Tuple[Any, ...]]

    def sstar_sizes(self) -> List[int]:
        return [len(s) for s in self.sstar_sets]


def ball(X: MvGroup, gens: Sequence[Any], x, radius: int,
         budget: int = DEFAULT_BUDGET) -> GrowthTable:
    """B(x, 0..radius) via support BFS; S(x, 0) = {x}."""
    if not gens:
        raise ValidationError("ball BFS needs a nonempty generating set")
    if radius < 0:
        raise ValidationError("radius must be >= 0")
    seen = {x}
    sphere_sets = [(x,)]
    ball_sizes = [1]
    frontier = [x]
    for _ in range(radius):
        fresh = set()
        for u in frontier:
            for s in gens:
                for v in X.mul(u, s).support():
                    if v not in seen:
                        fresh.add(v)
        if len(seen) + len(fresh) > budget:
            raise BudgetExceeded(
                f"ball BFS exceeded node budget {budget} at radius {len(ball_sizes)}")
        seen |= fresh
        frontier = sorted(fresh)
        sphere_sets.append(tuple(frontier))
        ball_sizes.append(len(seen))
    return GrowthTable(x, radius, sphere_sets, ball_sizes)


def length(X: MvGroup, gens: Sequence[Any], x, cap: int = 64,
           budget: int = DEFAULT_BUDGET) -> int:
    """Least m with x in the support of some m-fold generator product.

    The unit has length 0 (empty product).  Raises NotReachedWithinCap if
    x does not appear within the radius cap.
    """
    if x == X.unit:
        return 0
    seen = {X.unit}
    frontier = [X.unit]
    for r in range(1, cap + 1):
        fresh = set()
        for u in frontier:
            for s in gens:
                for v in X.mul(u, s).support():
                    if v not in seen:
                        fresh.add(v)
        if x in fresh:
            return r
        if not fresh:
            break
        if len(seen) + len(fresh) > budget:
            raise BudgetExceeded(f"length BFS exceeded node budget {budget}")
        seen |= fresh
        frontier = sorted(fresh)
    raise NotReachedWithinCap(
        f"element {X.render(x)} not reached within radius cap {cap}")


def power_table(X: MvGroup, x, radius: int, budget: int = DEFAULT_BUDGET) -> PowerTable:
    """Supports of powers: Set(x^{*1}) = {x}, Set(x^{*(i+1)}) = Set(x^{*i}) * x."""
    if radius < 0:
        raise ValidationError("radius must be >= 0")
    sstar_sets: List[Tuple[Any, ...]] = [()]
    set_powers: List[Tuple[Any, ...]] = [()]
    bstar_sizes = [0]
    cumulative = set()
    current = {x}
    for r in range(1, radius + 1):
        set_powers.append(tuple(sorted(current)))
        fresh = current - cumulative
        cumulative |= current
        if len(cumulative) > budget:
            raise BudgetExceeded(f"power table exceeded node budget {budget}")
        sstar_sets.append(tuple(sorted(fresh)))
        bstar_sizes.append(len(cumulative))
        nxt = set()
        for u in current:
            nxt.update(X.mul(u, x).support())
        current = nxt
    return PowerTable(x, radius, sstar_sets, bstar_sizes, set_powers)


def set_product(X: MvGroup, left: Sequence[Any], right: Sequence[Any]) -> Tuple[Any, ...]:
    """Support of the product of two subsets viewed as multisets."""
    out = set()
    for u in left:
        for v in right:
            out.update(X.mul(u, v).support())
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# generating-set comparison


@dataclass
class CompareReport:
    constant: int
    rows: List[Tuple[int, int, int, int]]  # (r, lower, middle, upper)
    violations: List[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def compare_generating_sets(X: MvGroup, gens: Sequence[Any], gens2: Sequence[Any],
                            y, y2, r_max: int, cap: int = 64,
                            budget: int = DEFAULT_BUDGET) -> CompareReport:
    """Check the growth-equivalence sandwich between (S, y) and (S', y') data.

    The constant is l = 1 + max of the four cross-lengths (y' and inv(y')
    with respect to S, the S'-elements with respect to S, and the
    S-elements with respect to S'); the check asserts
    |B(y, floor(r/l))| <= |B'(y', r)| <= |B(y, l*r)| for every r <= r_max.
    """
    cross = [
        length(X, gens, y2, cap=cap, budget=budget),
        length(X, gens, X.inv(y2), cap=cap, budget=budget),
        max(length(X, gens, s, cap=cap, budget=budget) for s in gens2),
        max(length(X, gens2, s, cap=cap, budget=budget) for s in gens),
    ]
    l = 1 + max(cross)
    wide = ball(X, gens, y, l * r_max, budget=budget)
    other = ball(X, gens2, y2, r_max, budget=budget)
    rows = []
    violations = []
    for r in range(r_max + 1):
        lower = wide.ball_sizes[r // l]
        middle = other.ball_sizes[r]
        upper = wide.ball_sizes[l * r]
        rows.append((r, lower, middle, upper))
        if not lower <= middle <= upper:
            violations.append(r)
    return CompareReport(l, rows, violations)


# ---------------------------------------------------------------------------
# serialization


def growth_csv(table: GrowthTable) -> str:
    lines = ["r,ball,sphere"]
    sizes = table.sphere_sizes()
    for r in range(table.radius + 1):
        lines.append(f"{r},{table.ball_sizes[r]},{sizes[r]}")
    return "\n".join(lines) + "\n"


def power_csv(table: PowerTable) -> str:
    lines = ["r,bstar,sstar_size"]
    sizes = table.sstar_sizes()
    for r in range(table.radius + 1):
        lines.append(f"{r},{table.bstar_sizes[r]},{sizes[r]}")
    return "\n".join(lines) + "\n"


def growth_record(table: GrowthTable, X: MvGroup, emit_elements: bool = False) -> dict:
    record = {
        "schema": 1,
        "center": X.render(table.center),
        "rows": [
            {"r": r, "ball": table.ball_sizes[r], "sphere": len(table.sphere_sets[r])}
            for r in range(table.radius + 1)
        ],
    }
    if emit_elements:
        record["spheres"] = [[X.render(e) for e in sphere]
                             for sphere in table.sphere_sets]
    return record


def power_record(table: PowerTable, X: MvGroup, emit_elements: bool = False) -> dict:
    record = {
        "schema": 1,
        "base": X.render(table.base),
        "rows": [
            {"r": r, "bstar": table.bstar_sizes[r], "sstar_size": len(table.sstar_sets[r])}
            for r in range(table.radius + 1)
        ],
    }
    if emit_elements:
        record["sstar"] = [[X.render(e) for e in s] for s in table.sstar_sets]
    return record
