"""Concrete group backends and finite automorphism groups acting on them.

A backend is a finitely generated group with computable multiplication,
inverse, identity and an injective canonical byte key per element.  Element
values are plain immutable Python data (ints, tuples); the backend object
carries the operations.

Automorphisms are given by generator images (plus mandatory inverse
images) and are verified before use: relator-bearing kinds check that
every defining relator maps to the identity, finite kinds check the
homomorphism property exhaustively.  ``close_automorphisms`` builds the
finite subgroup of Aut(G) generated by verified seeds.

``SemidirectProduct`` implements the group GA of pairs (g, a) with
(g, a)(h, b) = (g * a^{-1}(h), a b); ``monoid_balls`` does plain BFS over
right multiplication by a fixed generator set, producing the monoid
spheres S+(e, r) and balls B+(e, r).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import (
    BackendMismatch,
    BudgetExceeded,
    ClosureBudgetExceeded,
    InverseMissing,
    NotAnAutomorphism,
    UnverifiedAutomorphism,
    ValidationError,
)
from .keys import int_key, seq_key, str_key

Word = Tuple[Tuple[int, int], ...]  # ((generator index, nonzero exponent), ...)

DEFAULT_BUDGET = 10**6


class GroupBackend:
    """Base class for group backends.  Subclasses set `kind` and `gen_names`."""

    kind: str = "abstract"
    gen_names: Tuple[str, ...] = ()

    # -- group structure -------------------------------------------------

    @property
    def identity(self):
        raise NotImplementedError

    def mul(self, g, h):
        raise NotImplementedError

    def inv(self, g):
        raise NotImplementedError

    def canonical_key(self, g) -> bytes:
        raise NotImplementedError

    def render(self, g) -> str:
        raise NotImplementedError

    # -- generators and words --------------------------------------------

    def gen(self, index: int):
        """The element of the `index`-th declared generator."""
        raise NotImplementedError

    def generators(self) -> Dict[str, Any]:
        return {name: self.gen(i) for i, name in enumerate(self.gen_names)}

    def power(self, g, k: int):
        if k < 0:
            return self.power(self.inv(g), -k)
        result = self.identity
        base = g
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def evaluate(self, word: Word, images: Optional[Sequence[Any]] = None):
        """Product of images[i]^e over the word; images default to the gens."""
        result = self.identity
        for index, exp in word:
            base = self.gen(index) if images is None else images[index]
            result = self.mul(result, self.power(base, exp))
        return result

    def factor(self, g) -> Word:
        """A word in the declared generators whose product is g."""
        raise NotImplementedError(f"{self.kind} backend does not support factoring")

    def relators(self) -> Optional[List[Word]]:
        """Defining relators, or None when the kind is checked exhaustively."""
        return None

    # -- finiteness -------------------------------------------------------

    def is_finite(self) -> bool:
        return False

    def elements(self) -> List[Any]:
        raise NotImplementedError(f"{self.kind} backend is not finite")


# ---------------------------------------------------------------------------
# backends


class FreeGroup(GroupBackend):
    """Free group of rank k; elements are reduced words ((letter, exp), ...)."""

    kind = "free"

    def __init__(self, rank: int, gen_names: Optional[Sequence[str]] = None):
        if rank < 1:
            raise ValidationError(f"free group rank must be >= 1, got {rank}")
        self.rank = rank
        self.gen_names = tuple(gen_names or (f"g{i+1}" for i in range(rank)))
        if len(self.gen_names) != rank:
            raise ValidationError("generator name count must equal the rank")

    @property
    def identity(self):
        return ()

    def gen(self, index):
        return ((index, 1),)

    def mul(self, g, h):
        out = list(g)
        for letter, exp in h:
            if out and out[-1][0] == letter:
                merged = out[-1][1] + exp
                out.pop()
                if merged:
                    out.append((letter, merged))
            else:
                out.append((letter, exp))
        return tuple(out)

    def inv(self, g):
        return tuple((letter, -exp) for letter, exp in reversed(g))

    def canonical_key(self, g):
        return seq_key(seq_key((int_key(i), int_key(e))) for i, e in g)

    def render(self, g):
        if not g:
            return "e"
        parts = []
        for letter, exp in g:
            name = self.gen_names[letter]
            parts.append(name if exp == 1 else f"{name}^{exp}")
        return "*".join(parts)

    def factor(self, g):
        return tuple(g)

    def relators(self):
        return []


class FreeAbelianGroup(GroupBackend):
    """Z^k; elements are integer vectors."""

    kind = "free_abelian"

    def __init__(self, rank: int, gen_names: Optional[Sequence[str]] = None):
        if rank < 1:
            raise ValidationError(f"free abelian rank must be >= 1, got {rank}")
        self.rank = rank
        self.gen_names = tuple(gen_names or (f"g{i+1}" for i in range(rank)))
        if len(self.gen_names) != rank:
            raise ValidationError("generator name count must equal the rank")

    @property
    def identity(self):
        return (0,) * self.rank

    def gen(self, index):
        return tuple(1 if i == index else 0 for i in range(self.rank))

    def mul(self, g, h):
        return tuple(a + b for a, b in zip(g, h))

    def inv(self, g):
        return tuple(-a for a in g)

    def power(self, g, k):
        return tuple(a * k for a in g)

    def canonical_key(self, g):
        return seq_key(int_key(a) for a in g)

    def render(self, g):
        if self.rank == 1:
            return str(g[0])
        return "(" + ",".join(str(a) for a in g) + ")"

    def factor(self, g):
        return tuple((i, a) for i, a in enumerate(g) if a)

    def relators(self):
        rels = []
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                rels.append(((i, -1), (j, -1), (i, 1), (j, 1)))
        return rels


class CyclicGroup(GroupBackend):
    """Z/m; elements are ints in [0, m)."""

    kind = "cyclic"

    def __init__(self, order: int, gen_names: Optional[Sequence[str]] = None):
        if order < 1:
            raise ValidationError(f"cyclic order must be >= 1, got {order}")
        self.order = order
        self.gen_names = tuple(gen_names or ("g",))
        if len(self.gen_names) != 1:
            raise ValidationError("cyclic groups have exactly one generator")

    @property
    def identity(self):
        return 0

    def gen(self, index):
        return 1 % self.order

    def mul(self, g, h):
        return (g + h) % self.order

    def inv(self, g):
        return (-g) % self.order

    def canonical_key(self, g):
        return int_key(g)

    def render(self, g):
        name = self.gen_names[0]
        if g == 0:
            return "e"
        return name if g == 1 else f"{name}^{g}"

    def factor(self, g):
        return ((0, g),) if g else ()

    def relators(self):
        return [((0, self.order),)]

    def is_finite(self):
        return True

    def elements(self):
        return list(range(self.order))


class HeisenbergGroup(GroupBackend):
    """Discrete Heisenberg group as integer triples (p, q, r).

    Upper unitriangular 3x3 convention: (p,q,r)(p',q',r') =
    (p+p', q+q', r+r'+p*q').  Generators a=(1,0,0), b=(0,1,0) and the
    central c=(0,0,1)=[a,b].
    """

    kind = "heisenberg"
    gen_names = ("a", "b", "c")

    @property
    def identity(self):
        return (0, 0, 0)

    def gen(self, index):
        return tuple(1 if i == index else 0 for i in range(3))

    def mul(self, g, h):
        return (g[0] + h[0], g[1] + h[1], g[2] + h[2] + g[0] * h[1])

    def inv(self, g):
        p, q, r = g
        return (-p, -q, p * q - r)

    def canonical_key(self, g):
        return seq_key(int_key(a) for a in g)

    def render(self, g):
        return "(" + ",".join(str(a) for a in g) + ")"

    def factor(self, g):
        p, q, r = g
        word = ((0, p), (1, q), (2, r - p * q))
        return tuple((i, e) for i, e in word if e)

    def relators(self):
        a, b, c = 0, 1, 2
        return [
            ((a, -1), (b, -1), (a, 1), (b, 1), (c, -1)),  # [a,b] = c
            ((a, -1), (c, -1), (a, 1), (c, 1)),           # c central
            ((b, -1), (c, -1), (b, 1), (c, 1)),
        ]


class PermutationGroup(GroupBackend):
    """Subgroup of Sym(degree) generated by explicit permutations.

    Elements are image tuples on points 0..degree-1; mul(g, h) applies g
    first, then h.
    """

    kind = "permutation"

    def __init__(self, degree: int, gen_names: Sequence[str], gen_images: Sequence[Sequence[int]]):
        if degree < 1:
            raise ValidationError("degree must be >= 1")
        if len(gen_names) != len(gen_images):
            raise ValidationError("one image tuple per generator name required")
        self.degree = degree
        self.gen_names = tuple(gen_names)
        self._gens = []
        for images in gen_images:
            perm = tuple(images)
            if sorted(perm) != list(range(degree)):
                raise ValidationError(f"not a permutation of 0..{degree-1}: {perm}")
            self._gens.append(perm)
        self._elements: Optional[List[Tuple[int, ...]]] = None
        self._words: Optional[Dict[Tuple[int, ...], Word]] = None

    @property
    def identity(self):
        return tuple(range(self.degree))

    def gen(self, index):
        return self._gens[index]

    def mul(self, g, h):
        return tuple(h[g[i]] for i in range(self.degree))

    def inv(self, g):
        out = [0] * self.degree
        for i, image in enumerate(g):
            out[image] = i
        return tuple(out)

    def canonical_key(self, g):
        return seq_key(int_key(a) for a in g)

    def render(self, g):
        cycles = []
        seen = set()
        for start in range(self.degree):
            if start in seen or g[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            point = g[start]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = g[point]
            cycles.append("(" + " ".join(str(p + 1) for p in cycle) + ")")
        return "".join(cycles) if cycles else "e"

    def _close(self):
        if self._elements is not None:
            return
        words: Dict[Tuple[int, ...], Word] = {self.identity: ()}
        frontier = [self.identity]
        steps = [(i, e) for i in range(len(self._gens)) for e in (1, -1)]
        while frontier:
            nxt = []
            for g in frontier:
                for i, e in steps:
                    s = self._gens[i] if e == 1 else self.inv(self._gens[i])
                    h = self.mul(g, s)
                    if h not in words:
                        words[h] = words[g] + ((i, e),)
                        nxt.append(h)
            frontier = nxt
        self._words = words
        self._elements = sorted(words, key=self.canonical_key)

    def factor(self, g):
        self._close()
        try:
            return self._words[g]
        except KeyError:
            raise ValidationError(f"element {g} not in the generated subgroup")

    def is_finite(self):
        return True

    def elements(self):
        self._close()
        return list(self._elements)


class FiniteTableGroup(GroupBackend):
    """Finite group given by its full multiplication table of indices."""

    kind = "finite_table"

    def __init__(self, table: Sequence[Sequence[int]], identity_index: int,
                 gen_names: Sequence[str], gen_indices: Sequence[int]):
        n = len(table)
        for row in table:
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise ValidationError("table must be square over indices 0..n-1")
        self.table = tuple(tuple(row) for row in table)
        self.identity_index = identity_index
        self.gen_names = tuple(gen_names)
        self._gen_indices = tuple(gen_indices)
        if len(self.gen_names) != len(self._gen_indices):
            raise ValidationError("one index per generator name required")
        self._words: Optional[Dict[int, Word]] = None
        self._close()
        if len(self._words) != n:
            raise ValidationError("declared generators do not generate the table group")

    @property
    def identity(self):
        return self.identity_index

    def gen(self, index):
        return self._gen_indices[index]

    def mul(self, g, h):
        return self.table[g][h]

    def inv(self, g):
        for h in range(len(self.table)):
            if self.table[g][h] == self.identity_index:
                return h
        raise ValidationError(f"table row {g} has no inverse; not a group table")

    def canonical_key(self, g):
        return int_key(g)

    def render(self, g):
        return f"#{g}"

    def _close(self):
        words: Dict[int, Word] = {self.identity_index: ()}
        frontier = [self.identity_index]
        steps = [(i, e) for i in range(len(self._gen_indices)) for e in (1, -1)]
        while frontier:
            nxt = []
            for g in frontier:
                for i, e in steps:
                    s = self._gen_indices[i] if e == 1 else self.inv(self._gen_indices[i])
                    h = self.mul(g, s)
                    if h not in words:
                        words[h] = words[g] + ((i, e),)
                        nxt.append(h)
            frontier = nxt
        self._words = words

    def factor(self, g):
        return self._words[g]

    def is_finite(self):
        return True

    def elements(self):
        return list(range(len(self.table)))


class DirectProduct(GroupBackend):
    """Direct product of backends; elements are tuples of components."""

    kind = "direct_product"

    def __init__(self, factors: Sequence[GroupBackend]):
        if not factors:
            raise ValidationError("direct product needs at least one factor")
        self.factors = tuple(factors)
        names: List[str] = []
        self._owner: List[Tuple[int, int]] = []  # gen index -> (factor, local index)
        for fi, backend in enumerate(self.factors):
            for li, name in enumerate(backend.gen_names):
                if name in names:
                    raise ValidationError(f"duplicate generator name across factors: {name}")
                names.append(name)
                self._owner.append((fi, li))
        self.gen_names = tuple(names)

    @property
    def identity(self):
        return tuple(b.identity for b in self.factors)

    def gen(self, index):
        fi, li = self._owner[index]
        return tuple(b.gen(li) if i == fi else b.identity
                     for i, b in enumerate(self.factors))

    def mul(self, g, h):
        return tuple(b.mul(a, c) for b, a, c in zip(self.factors, g, h))

    def inv(self, g):
        return tuple(b.inv(a) for b, a in zip(self.factors, g))

    def canonical_key(self, g):
        return seq_key(b.canonical_key(a) for b, a in zip(self.factors, g))

    def render(self, g):
        return "(" + ", ".join(b.render(a) for b, a in zip(self.factors, g)) + ")"

    def _offset(self, fi: int) -> int:
        return sum(len(b.gen_names) for b in self.factors[:fi])

    def factor(self, g):
        word: List[Tuple[int, int]] = []
        for fi, (backend, comp) in enumerate(zip(self.factors, g)):
            off = self._offset(fi)
            word.extend((off + i, e) for i, e in backend.factor(comp))
        return tuple(word)

    def relators(self):
        rels: List[Word] = []
        for fi, backend in enumerate(self.factors):
            sub = backend.relators()
            if sub is None:
                # finite factor without declared relators: fall back to its
                # full multiplication constraints via exhaustive checking
                return None
            off = self._offset(fi)
            rels.extend(tuple((off + i, e) for i, e in rel) for rel in sub)
        # generators of distinct factors commute
        for fi in range(len(self.factors)):
            for fj in range(fi + 1, len(self.factors)):
                for i in range(len(self.factors[fi].gen_names)):
                    for j in range(len(self.factors[fj].gen_names)):
                        gi = self._offset(fi) + i
                        gj = self._offset(fj) + j
                        rels.append(((gi, -1), (gj, -1), (gi, 1), (gj, 1)))
        return rels

    def is_finite(self):
        return all(b.is_finite() for b in self.factors)

    def elements(self):
        pools = [b.elements() for b in self.factors]
        return [tuple(combo) for combo in itertools.product(*pools)]


# ---------------------------------------------------------------------------
# automorphisms


class Automorphism:
    """An automorphism of a backend, given by generator images."""

    def __init__(self, backend: GroupBackend, name: str,
                 images: Sequence[Any], inverse_images: Optional[Sequence[Any]]):
        if len(images) != len(backend.gen_names):
            raise ValidationError("one image per declared generator required")
        self.backend = backend
        self.name = name
        self.images = tuple(images)
        self.inverse_images = tuple(inverse_images) if inverse_images is not None else None
        self.verified = False
        self._signature = seq_key(backend.canonical_key(img) for img in self.images)

    @property
    def signature(self) -> bytes:
        return self._signature

    def __eq__(self, other):
        return (isinstance(other, Automorphism)
                and self.backend is other.backend
                and self._signature == other._signature)

    def __hash__(self):
        return hash((id(self.backend), self._signature))

    def apply(self, g):
        if not self.verified:
            raise UnverifiedAutomorphism(f"automorphism {self.name!r} is not verified")
        return self.backend.evaluate(self.backend.factor(g), self.images)

    def apply_inverse(self, g):
        if not self.verified:
            raise UnverifiedAutomorphism(f"automorphism {self.name!r} is not verified")
        return self.backend.evaluate(self.backend.factor(g), self.inverse_images)

    def inverse(self) -> "Automorphism":
        inv = Automorphism(self.backend, f"{self.name}^-1", self.inverse_images, self.images)
        inv.verified = self.verified
        return inv

    def verify(self) -> "Automorphism":
        """Check the homomorphism property and two-sided invertibility."""
        backend = self.backend
        if self.inverse_images is None:
            raise InverseMissing(f"automorphism {self.name!r} has no inverse images")
        rels = backend.relators()
        for images, label in ((self.images, "images"), (self.inverse_images, "inverse images")):
            if rels is None:
                self._verify_exhaustive(images, label)
            else:
                for rel in rels:
                    value = backend.evaluate(rel, images)
                    if value != backend.identity:
                        raise NotAnAutomorphism(
                            f"{self.name!r}: relator {rel} maps to {backend.render(value)} "
                            f"under {label}, not the identity")
        # the two maps must be mutually inverse on every generator
        for i, name in enumerate(backend.gen_names):
            forward = backend.evaluate(backend.factor(self.inverse_images[i]), self.images)
            backward = backend.evaluate(backend.factor(self.images[i]), self.inverse_images)
            if forward != backend.gen(i) or backward != backend.gen(i):
                raise NotAnAutomorphism(
                    f"{self.name!r}: inverse images do not invert on generator {name}")
        self.verified = True
        return self

    def _verify_exhaustive(self, images, label):
        backend = self.backend
        if not backend.is_finite():
            raise NotAnAutomorphism(
                f"{self.name!r}: backend kind {backend.kind} has no relator list "
                "and is not finite; cannot verify")

        def image_of(g):
            return backend.evaluate(backend.factor(g), images)

        elems = backend.elements()
        cache = {backend.canonical_key(g): image_of(g) for g in elems}
        for g in elems:
            for h in elems:
                lhs = cache[backend.canonical_key(backend.mul(g, h))]
                rhs = backend.mul(cache[backend.canonical_key(g)],
                                  cache[backend.canonical_key(h)])
                if lhs != rhs:
                    raise NotAnAutomorphism(
                        f"{self.name!r}: {label} break multiplicativity at "
                        f"({backend.render(g)}, {backend.render(h)})")


def identity_automorphism(backend: GroupBackend) -> Automorphism:
    gens = [backend.gen(i) for i in range(len(backend.gen_names))]
    aut = Automorphism(backend, "id", gens, gens)
    aut.verified = True
    return aut


def compose(a: Automorphism, b: Automorphism) -> Automorphism:
    """a after b: (a . b)(g) = a(b(g))."""
    if a.backend is not b.backend:
        raise BackendMismatch("cannot compose automorphisms of different backends")
    images = [a.apply(img) for img in b.images]
    inverse_images = [b.apply_inverse(img) for img in a.inverse_images]
    out = Automorphism(a.backend, f"{a.name}*{b.name}", images, inverse_images)
    out.verified = True
    return out


class AutomorphismGroup:
    """A finite, composition-closed set of verified automorphisms."""

    def __init__(self, backend: GroupBackend, elements: Sequence[Automorphism]):
        self.backend = backend
        self.elements = tuple(sorted(elements, key=lambda a: a.signature))
        self.order = len(self.elements)
        self._index = {a.signature: i for i, a in enumerate(self.elements)}
        ident = identity_automorphism(backend)
        if ident.signature not in self._index:
            raise ValidationError("automorphism set does not contain the identity")
        self.identity_index = self._index[ident.signature]
        self._compose_table = [[self._index[compose(x, y).signature]
                                for y in self.elements] for x in self.elements]
        self.inverse_index = tuple(self._index[a.inverse().signature] for a in self.elements)

    def compose_index(self, i: int, j: int) -> int:
        return self._compose_table[i][j]

    def index_of(self, a: Automorphism) -> int:
        return self._index[a.signature]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return self.order


def close_automorphisms(seeds: Sequence[Automorphism], bound: int = 10_000) -> AutomorphismGroup:
    """Subgroup of Aut(G) generated by the seeds, as a finite closed set."""
    if not seeds:
        raise ValidationError("need at least one seed automorphism")
    backend = seeds[0].backend
    for seed in seeds:
        if seed.backend is not backend:
            raise BackendMismatch("all seeds must act on the same backend")
        if not seed.verified:
            seed.verify()
    found: Dict[bytes, Automorphism] = {}
    ident = identity_automorphism(backend)
    for aut in [ident, *seeds, *(s.inverse() for s in seeds)]:
        found.setdefault(aut.signature, aut)
    frontier = list(found.values())
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(found.values()):
                for c in (compose(a, b), compose(b, a)):
                    if c.signature not in found:
                        found[c.signature] = c
                        nxt.append(c)
                        if len(found) > bound:
                            raise ClosureBudgetExceeded(
                                f"automorphism closure exceeded {bound} elements")
        frontier = nxt
    return AutomorphismGroup(backend, list(found.values()))


def orbit(A: AutomorphismGroup, g) -> Tuple[Any, ...]:
    """The A-orbit of g, deduplicated and sorted by canonical key."""
    backend = A.backend
    seen = {backend.canonical_key(h): h for h in (a.apply(g) for a in A)}
    return tuple(seen[k] for k in sorted(seen))


# ---------------------------------------------------------------------------
# semidirect product GA


class SemidirectProduct(GroupBackend):
    """Pairs (g, a) in G x A with (g, a)(h, b) = (g * a^{-1}(h), a b).

    Elements are (g_element, automorphism_index) with indices into the
    canonical ordering of A.
    """

    kind = "semidirect"

    def __init__(self, group: GroupBackend, auts: AutomorphismGroup):
        if auts.backend is not group:
            raise BackendMismatch("automorphism group does not act on the given backend")
        self.group = group
        self.auts = auts
        self.gen_names = tuple(group.gen_names) + tuple(
            f"aut_{i}" for i in range(auts.order))

    @property
    def identity(self):
        return (self.group.identity, self.auts.identity_index)

    def gen(self, index):
        ngens = len(self.group.gen_names)
        if index < ngens:
            return (self.group.gen(index), self.auts.identity_index)
        return (self.group.identity, index - ngens)

    def mul(self, p, q):
        g, i = p
        h, j = q
        twisted = self.auts.elements[self.auts.inverse_index[i]].apply(h)
        return (self.group.mul(g, twisted), self.auts.compose_index(i, j))

    def inv(self, p):
        g, i = p
        return (self.auts.elements[i].apply(self.group.inv(g)),
                self.auts.inverse_index[i])

    def canonical_key(self, p):
        g, i = p
        return seq_key((self.group.canonical_key(g), int_key(i)))

    def render(self, p):
        g, i = p
        return f"({self.group.render(g)}; {self.auts.elements[i].name})"

    def is_finite(self):
        return self.group.is_finite()

    def elements(self):
        return [(g, i) for g in self.group.elements() for i in range(self.auts.order)]


def semidirect_mul(backend: SemidirectProduct, p, q):
    """The displayed product (g, a)(h, b) = (g * a^{-1}(h), a b)."""
    return backend.mul(p, q)


# ---------------------------------------------------------------------------
# monoid balls


@dataclass
class MonoidBallTable:
    """Spheres S+(e, 0..r) and ball sizes |B+(e, 0..r)| in a submonoid."""

    radius: int
    sphere_sets: List[Tuple[Any, ...]]
    ball_sizes: List[int]

    def sphere_sizes(self) -> List[int]:
        return [len(s) for s in self.sphere_sets]


def monoid_balls(backend: GroupBackend, gens: Sequence[Any], radius: int,
                 budget: int = DEFAULT_BUDGET) -> MonoidBallTable:
    """BFS over right multiplication: S+(e, i+1) = S+(e, i) * gens \\ ball."""
    if not gens:
        raise ValidationError("monoid BFS needs a nonempty generator set")
    if radius < 0:
        raise ValidationError("radius must be >= 0")
    seen = {backend.canonical_key(backend.identity): backend.identity}
    sphere_sets = [(backend.identity,)]
    ball_sizes = [1]
    frontier = [backend.identity]
    for _ in range(radius):
        fresh: Dict[bytes, Any] = {}
        for u in frontier:
            for s in gens:
                v = backend.mul(u, s)
                key = backend.canonical_key(v)
                if key not in seen and key not in fresh:
                    fresh[key] = v
        if len(seen) + len(fresh) > budget:
            raise BudgetExceeded(
                f"monoid BFS exceeded node budget {budget} at radius {len(ball_sizes)}")
        seen.update(fresh)
        frontier = [fresh[k] for k in sorted(fresh)]
        sphere_sets.append(tuple(frontier))
        ball_sizes.append(len(seen))
    return MonoidBallTable(radius, sphere_sets, ball_sizes)
