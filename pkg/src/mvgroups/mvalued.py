"""n-valued groups: coset groups, double coset groups, and the builtin
2-valued group on the non-negative integers.

An MvGroup has a unit, an involution-style inverse map, and mul(x, y)
returning a MultiSet of total size exactly n.  Elements are orderable and
hashable; coset classes compare by the canonical key of their minimal
representative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, List, Optional, Sequence, Tuple

from .errors import InfiniteBackendUnsupported, ValidationError
from .groups import AutomorphismGroup, GroupBackend, orbit
from .multiset import MultiSet, flatten


class ClassElement:
    """An orbit or double-coset class, identified by its minimal representative."""

    __slots__ = ("rep", "key", "text")

    def __init__(self, rep, key: bytes, text: str):
        self.rep = rep
        self.key = key
        self.text = text

    def __eq__(self, other):
        return isinstance(other, ClassElement) and self.key == other.key

    def __lt__(self, other):
        return self.key < other.key

    def __hash__(self):
        return hash(self.key)

    def __str__(self):
        return self.text

    def __repr__(self):
        return f"<{type(self).__name__} {self.text}>"


class CosetElement(ClassElement):
    pass


class DoubleCosetElement(ClassElement):
    pass


class MvGroup:
    """Base class: n-valued multiplication with unit and inverse."""

    n: int
    unit: Any

    def mul(self, x, y) -> MultiSet:
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def render(self, x) -> str:
        return str(x)

    def describe(self) -> str:
        return type(self).__name__


class NatGroup(MvGroup):
    """The 2-valued group on N u {0} with x*y = [x+y, |x-y|]."""

    n = 2
    unit = 0

    def mul(self, x, y):
        return MultiSet.of([x + y, abs(x - y)])

    def inv(self, x):
        return x

    def describe(self):
        return "builtin-nat"


class MutatedNatGroup(MvGroup):
    """Negative control: x*y = [x+y, x+y+1] is not associative."""

    n = 2
    unit = 0

    def mul(self, x, y):
        return MultiSet.of([x + y, x + y + 1])

    def inv(self, x):
        return x

    def describe(self):
        return "builtin-nat-mutated"


class CosetGroup(MvGroup):
    """Coset group of (G, A): orbits of G under a finite A <= Aut(G).

    mul(x, y) is the fixed-representative n-family
    [project(x.rep * a(y.rep)) for a in A], so total_size is exactly n
    even on orbits with stabilizers; independence of the representative
    choice is a tested property, not an assumption.
    """

    def __init__(self, backend: GroupBackend, auts: AutomorphismGroup):
        if auts.backend is not backend:
            raise ValidationError("automorphism group does not act on this backend")
        self.backend = backend
        self.auts = auts
        self.n = auts.order
        self.unit = self.project(backend.identity)

    def project(self, g) -> CosetElement:
        orb = orbit(self.auts, g)
        rep = orb[0]
        return CosetElement(rep, self.backend.canonical_key(rep), self.backend.render(rep))

    def mul(self, x, y):
        products = [self.project(self.backend.mul(x.rep, a.apply(y.rep)))
                    for a in self.auts]
        return MultiSet.of(products)

    def inv(self, x):
        return self.project(self.backend.inv(x.rep))

    def carrier(self) -> List[CosetElement]:
        """All classes; finite backends only."""
        if not self.backend.is_finite():
            raise InfiniteBackendUnsupported("carrier enumeration needs a finite backend")
        seen = {}
        for g in self.backend.elements():
            x = self.project(g)
            seen.setdefault(x.key, x)
        return [seen[k] for k in sorted(seen)]

    def describe(self):
        return f"coset({self.backend.kind}, |A|={self.n})"


class DoubleCosetGroup(MvGroup):
    """Double coset group of (G, H) for finite G, with n = |H|."""

    def __init__(self, backend: GroupBackend, subgroup: Sequence[Any]):
        if not backend.is_finite():
            raise InfiniteBackendUnsupported(
                "double coset groups are implemented for finite backends only")
        self.backend = backend
        self.subgroup = self._close_subgroup(subgroup)
        self.n = len(self.subgroup)
        self.unit = self.project(backend.identity)

    def _close_subgroup(self, seed):
        backend = self.backend
        seen = {backend.canonical_key(backend.identity): backend.identity}
        frontier = [backend.identity]
        gens = list(seed)
        while frontier:
            nxt = []
            for g in frontier:
                for s in gens:
                    for h in (backend.mul(g, s), backend.mul(g, backend.inv(s))):
                        key = backend.canonical_key(h)
                        if key not in seen:
                            seen[key] = h
                            nxt.append(h)
            frontier = nxt
        return [seen[k] for k in sorted(seen)]

    def project(self, g) -> DoubleCosetElement:
        backend = self.backend
        best_key, best = None, None
        for h1 in self.subgroup:
            left = backend.mul(h1, g)
            for h2 in self.subgroup:
                cand = backend.mul(left, h2)
                key = backend.canonical_key(cand)
                if best_key is None or key < best_key:
                    best_key, best = key, cand
        return DoubleCosetElement(best, best_key, backend.render(best))

    def mul(self, x, y):
        backend = self.backend
        products = [self.project(backend.mul(backend.mul(x.rep, h), y.rep))
                    for h in self.subgroup]
        return MultiSet.of(products)

    def inv(self, x):
        return self.project(self.backend.inv(x.rep))

    def carrier(self) -> List[DoubleCosetElement]:
        seen = {}
        for g in self.backend.elements():
            x = self.project(g)
            seen.setdefault(x.key, x)
        return [seen[k] for k in sorted(seen)]

    def describe(self):
        return f"double-coset({self.backend.kind}, |H|={self.n})"


# ---------------------------------------------------------------------------
# axiom checking


@dataclass
class AxiomReport:
    associativity_ok: bool
    unit_ok: bool
    inverse_ok: bool
    associativity_witness: Optional[Tuple[Any, Any, Any]] = None
    unit_witness: Optional[Any] = None
    inverse_witness: Optional[Any] = None
    triples_checked: int = 0
    elements_checked: int = 0

    @property
    def all_ok(self) -> bool:
        return self.associativity_ok and self.unit_ok and self.inverse_ok

    def to_record(self, render=str) -> dict:
        return {
            "associativity": {
                "ok": self.associativity_ok,
                "witness": [render(w) for w in self.associativity_witness]
                if self.associativity_witness else None,
            },
            "unit": {
                "ok": self.unit_ok,
                "witness": render(self.unit_witness)
                if self.unit_witness is not None else None,
            },
            "inverse": {
                "ok": self.inverse_ok,
                "witness": render(self.inverse_witness)
                if self.inverse_witness is not None else None,
            },
            "triples_checked": self.triples_checked,
            "elements_checked": self.elements_checked,
        }

    def to_text(self, render=str) -> str:
        lines = []
        status = "PASS" if self.associativity_ok else "FAIL"
        detail = ""
        if self.associativity_witness:
            x, y, z = self.associativity_witness
            detail = f" witness=({render(x)}, {render(y)}, {render(z)})"
        lines.append(f"{status} associativity triples={self.triples_checked}{detail}")
        status = "PASS" if self.unit_ok else "FAIL"
        detail = f" witness={render(self.unit_witness)}" if self.unit_witness is not None else ""
        lines.append(f"{status} unit elements={self.elements_checked}{detail}")
        status = "PASS" if self.inverse_ok else "FAIL"
        detail = (f" witness={render(self.inverse_witness)}"
                  if self.inverse_witness is not None else "")
        lines.append(f"{status} inverse elements={self.elements_checked}{detail}")
        return "\n".join(lines)


def triple_product_left(X: MvGroup, x, y, z) -> MultiSet:
    """The n^2-multiset [x*(y*z)_1, ..., x*(y*z)_n], flattened."""
    return flatten((X.mul(x, w), m) for w, m in X.mul(y, z))


def triple_product_right(X: MvGroup, x, y, z) -> MultiSet:
    """The n^2-multiset [(x*y)_1*z, ..., (x*y)_n*z], flattened."""
    return flatten((X.mul(w, z), m) for w, m in X.mul(x, y))


def check_axioms(X: MvGroup, sample: Sequence[Any]) -> AxiomReport:
    """Verify associativity / unit / inverse on the sample; failures carry witnesses."""
    sample = list(sample)
    if not sample:
        raise ValidationError("axiom check needs a nonempty sample")
    if X.unit not in sample:
        sample = [X.unit] + sample

    report = AxiomReport(True, True, True)
    n = X.n
    for x in sample:
        report.elements_checked += 1
        if report.unit_ok:
            expected = MultiSet.of([x] * n)
            if X.mul(X.unit, x) != expected or X.mul(x, X.unit) != expected:
                report.unit_ok = False
                report.unit_witness = x
        if report.inverse_ok:
            xb = X.inv(x)
            if (X.unit not in X.mul(xb, x).support()
                    or X.unit not in X.mul(x, xb).support()):
                report.inverse_ok = False
                report.inverse_witness = x

    for x in sample:
        for y in sample:
            for z in sample:
                report.triples_checked += 1
                if triple_product_left(X, x, y, z) != triple_product_right(X, x, y, z):
                    report.associativity_ok = False
                    report.associativity_witness = (x, y, z)
                    return report
    return report
