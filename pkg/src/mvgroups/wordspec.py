"""Parsing of word expressions and JSON instance-definition files.

Word grammar (whitespace insignificant):

    word := term ('*' term)*
    term := NAME ('^' INT)? | INT | 'e'

NAME is an ASCII identifier [A-Za-z][A-Za-z0-9_]*; 'e' is reserved for the
identity and parses to the empty word.  Bare INT terms are element
literals for the builtin-nat carrier, which has no generator alphabet.

Config documents are JSON objects with a versioned "schema": 1 field; see
``parse_config`` for validation and ``build_instance`` for construction.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .errors import (
    SchemaError,
    UnknownGenerator,
    ValidationError,
    WordSyntaxError,
)
from .groups import (
    Automorphism,
    AutomorphismGroup,
    CyclicGroup,
    DirectProduct,
    FiniteTableGroup,
    FreeAbelianGroup,
    FreeGroup,
    GroupBackend,
    HeisenbergGroup,
    PermutationGroup,
    SemidirectProduct,
    close_automorphisms,
)
from .mvalued import CosetGroup, DoubleCosetGroup, MutatedNatGroup, MvGroup, NatGroup

Word = Tuple[Tuple[str, int], ...]

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_INT_RE = re.compile(r"-?[0-9]+")


def parse_word(text: str) -> Word:
    """Parse a word expression into ((symbol, exponent), ...)."""
    pos = 0
    n = len(text)
    terms: List[Tuple[str, int]] = []

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def parse_term():
        nonlocal pos
        skip_ws()
        if pos >= n:
            raise WordSyntaxError("expected a term", pos)
        m = _NAME_RE.match(text, pos)
        if m:
            name = m.group()
            pos = m.end()
            skip_ws()
            if name == "e":
                if pos < n and text[pos] == "^":
                    raise WordSyntaxError("the identity 'e' takes no exponent", pos)
                return
            exp = 1
            if pos < n and text[pos] == "^":
                pos += 1
                skip_ws()
                mi = _INT_RE.match(text, pos)
                if not mi:
                    raise WordSyntaxError("expected an integer exponent", pos)
                exp = int(mi.group())
                pos = mi.end()
                if exp == 0:
                    return
            terms.append((name, exp))
            return
        mi = _INT_RE.match(text, pos)
        if mi and not mi.group().startswith("-"):
            terms.append((mi.group(), 1))
            pos = mi.end()
            return
        raise WordSyntaxError("expected a term", pos)

    parse_term()
    skip_ws()
    while pos < n:
        if text[pos] != "*":
            raise WordSyntaxError("expected '*' between terms", pos)
        pos += 1
        parse_term()
        skip_ws()
    return tuple(terms)


def render_word(word: Word) -> str:
    if not word:
        return "e"
    return "*".join(name if exp == 1 else f"{name}^{exp}" for name, exp in word)


def evaluate_word(backend: GroupBackend, word: Word):
    """Evaluate a word in the backend's declared generators."""
    index = {name: i for i, name in enumerate(backend.gen_names)}
    resolved = []
    for name, exp in word:
        if name not in index:
            raise UnknownGenerator(f"unknown generator {name!r} "
                                   f"(declared: {', '.join(backend.gen_names)})")
        resolved.append((index[name], exp))
    return backend.evaluate(tuple(resolved))


def nat_element(word: Word) -> int:
    """Element literal for the builtin-nat carrier."""
    if not word:
        return 0
    if len(word) == 1 and word[0][1] == 1 and word[0][0].isdigit():
        return int(word[0][0])
    raise ValidationError(
        f"builtin-nat elements are numeric literals, got {render_word(word)!r}")


# ---------------------------------------------------------------------------
# config documents


@dataclass
class AutomorphismSeed:
    name: str
    images: Dict[str, Word]
    inverse_images: Dict[str, Word]


@dataclass
class InstanceConfig:
    schema: int
    group: Optional[dict]
    automorphism_seeds: List[AutomorphismSeed]
    mv_kind: str
    subgroup: List[Word]
    x_generators: List[Word]
    default_radius: int
    default_budget: int


_TOP_KEYS = {"schema", "group", "automorphisms", "mv", "X_generators", "defaults"}
_MV_KINDS = {"coset", "double_coset", "builtin_nat", "builtin_nat_mutated"}
_GROUP_KINDS = {"free", "free_abelian", "heisenberg", "cyclic", "finite_table",
                "permutation", "direct_product", "semidirect"}


def _require(doc: dict, key: str, path: str):
    if key not in doc:
        raise SchemaError(f"missing required field {key!r}", path)
    return doc[key]


def _parse_word_field(text: Any, path: str) -> Word:
    if not isinstance(text, str):
        raise SchemaError("word must be a string", path)
    try:
        return parse_word(text)
    except WordSyntaxError as exc:
        raise SchemaError(f"bad word {text!r}: {exc}", path)


def parse_config(document: Union[dict, str, Path]) -> InstanceConfig:
    """Validate a config document; every failure names the offending path."""
    if isinstance(document, (str, Path)):
        with open(document, "r", encoding="utf-8") as fh:
            document = json.load(fh)
    if not isinstance(document, dict):
        raise SchemaError("config document must be a JSON object")

    extra = set(document) - _TOP_KEYS
    if extra:
        raise SchemaError(f"unknown fields: {sorted(extra)}")
    if document.get("schema") != 1:
        raise SchemaError("schema must be the integer 1", "schema")

    mv = _require(document, "mv", "")
    if not isinstance(mv, dict) or "kind" not in mv:
        raise SchemaError("mv must be an object with a 'kind'", "mv")
    mv_kind = mv["kind"]
    if mv_kind not in _MV_KINDS:
        raise SchemaError(f"unknown mv kind {mv_kind!r}", "mv.kind")

    group = document.get("group")
    if mv_kind in ("builtin_nat", "builtin_nat_mutated"):
        if group is not None:
            raise SchemaError("builtin-nat instances take no group", "group")
    else:
        if not isinstance(group, dict):
            raise SchemaError("group descriptor required for this mv kind", "group")
        _validate_group(group, "group")

    gen_names = _declared_gen_names(group) if group else []

    seeds = []
    for i, entry in enumerate(document.get("automorphisms", [])):
        path = f"automorphisms[{i}]"
        if not isinstance(entry, dict):
            raise SchemaError("automorphism entry must be an object", path)
        name = entry.get("name", f"a{i}")
        images = entry.get("images")
        inverse_images = entry.get("inverse_images")
        if not isinstance(images, dict):
            raise SchemaError("images map required", f"{path}.images")
        if not isinstance(inverse_images, dict):
            raise SchemaError("inverse_images map required", f"{path}.inverse_images")
        for label, mapping in (("images", images), ("inverse_images", inverse_images)):
            for gen in gen_names:
                if gen not in mapping:
                    raise SchemaError(f"no image for generator {gen!r}",
                                      f"{path}.{label}")
            for gen in mapping:
                if gen not in gen_names:
                    raise SchemaError(f"image for undeclared generator {gen!r}",
                                      f"{path}.{label}")
        seeds.append(AutomorphismSeed(
            name,
            {g: _parse_word_field(w, f"{path}.images.{g}") for g, w in images.items()},
            {g: _parse_word_field(w, f"{path}.inverse_images.{g}")
             for g, w in inverse_images.items()},
        ))

    subgroup = [_parse_word_field(w, f"mv.subgroup[{i}]")
                for i, w in enumerate(mv.get("subgroup", []))]
    if mv_kind == "double_coset" and not subgroup:
        raise SchemaError("double_coset requires a nonempty subgroup", "mv.subgroup")
    if mv_kind == "coset" and not seeds:
        raise SchemaError("coset requires at least one automorphism seed", "automorphisms")

    x_generators = [_parse_word_field(w, f"X_generators[{i}]")
                    for i, w in enumerate(document.get("X_generators", []))]

    defaults = document.get("defaults", {})
    if not isinstance(defaults, dict):
        raise SchemaError("defaults must be an object", "defaults")
    radius = defaults.get("radius", 8)
    budget = defaults.get("budget", 10**6)
    if not isinstance(radius, int) or radius < 0:
        raise SchemaError("radius must be a non-negative integer", "defaults.radius")
    if not isinstance(budget, int) or budget < 1:
        raise SchemaError("budget must be a positive integer", "defaults.budget")

    return InstanceConfig(1, group, seeds, mv_kind, subgroup, x_generators,
                          radius, budget)


def _validate_group(desc: dict, path: str):
    kind = desc.get("kind")
    if kind not in _GROUP_KINDS:
        raise SchemaError(f"unknown group kind {kind!r}", f"{path}.kind")
    if kind == "direct_product":
        factors = desc.get("factors")
        if not isinstance(factors, list) or not factors:
            raise SchemaError("direct_product needs a factors list", f"{path}.factors")
        for i, sub in enumerate(factors):
            if not isinstance(sub, dict):
                raise SchemaError("factor must be a group descriptor",
                                  f"{path}.factors[{i}]")
            _validate_group(sub, f"{path}.factors[{i}]")
    if kind == "semidirect":
        sub = desc.get("group")
        if not isinstance(sub, dict):
            raise SchemaError("semidirect needs an inner group", f"{path}.group")
        _validate_group(sub, f"{path}.group")


def _declared_gen_names(desc: dict) -> List[str]:
    kind = desc.get("kind")
    if kind == "heisenberg":
        return ["a", "b", "c"]
    if kind == "direct_product":
        names: List[str] = []
        for sub in desc["factors"]:
            names.extend(_declared_gen_names(sub))
        return names
    if kind == "semidirect":
        return _declared_gen_names(desc["group"])
    gens = desc.get("gens")
    if gens is not None:
        return list(gens)
    if kind in ("free", "free_abelian"):
        rank = desc.get("rank", 1)
        return [f"g{i+1}" for i in range(rank)]
    if kind == "cyclic":
        return ["g"]
    return []


# ---------------------------------------------------------------------------
# construction


def build_backend(desc: dict) -> GroupBackend:
    kind = desc["kind"]
    if kind == "free":
        gens = desc.get("gens")
        rank = desc.get("rank", len(gens) if gens else None)
        if rank is None:
            raise SchemaError("free group needs a rank or gens list", "group")
        return FreeGroup(rank, gens)
    if kind == "free_abelian":
        gens = desc.get("gens")
        rank = desc.get("rank", len(gens) if gens else None)
        if rank is None:
            raise SchemaError("free_abelian needs a rank or gens list", "group")
        return FreeAbelianGroup(rank, gens)
    if kind == "heisenberg":
        return HeisenbergGroup()
    if kind == "cyclic":
        order = desc.get("order")
        if not isinstance(order, int) or order < 1:
            raise SchemaError("cyclic needs a positive order", "group.order")
        return CyclicGroup(order, desc.get("gens"))
    if kind == "permutation":
        return PermutationGroup(desc["degree"], desc["gens"], desc["gen_images"])
    if kind == "finite_table":
        return FiniteTableGroup(desc["table"], desc.get("identity", 0),
                                desc["gens"], desc["gen_elements"])
    if kind == "direct_product":
        return DirectProduct([build_backend(sub) for sub in desc["factors"]])
    if kind == "semidirect":
        inner = build_backend(desc["group"])
        seeds = _build_seeds(inner, [
            AutomorphismSeed(
                entry.get("name", f"a{i}"),
                {g: parse_word(w) for g, w in entry["images"].items()},
                {g: parse_word(w) for g, w in entry["inverse_images"].items()},
            )
            for i, entry in enumerate(desc.get("automorphisms", []))
        ])
        return SemidirectProduct(inner, close_automorphisms(seeds))
    raise SchemaError(f"unknown group kind {kind!r}", "group.kind")


def _build_seeds(backend: GroupBackend, seeds: Sequence[AutomorphismSeed]) -> List[Automorphism]:
    out = []
    for seed in seeds:
        images = [evaluate_word(backend, seed.images[name]) for name in backend.gen_names]
        inverse_images = [evaluate_word(backend, seed.inverse_images[name])
                          for name in backend.gen_names]
        out.append(Automorphism(backend, seed.name, images, inverse_images))
    return out


@dataclass
class Instance:
    """A fully built n-valued group plus the config's generating data."""

    config: InstanceConfig
    X: MvGroup
    backend: Optional[GroupBackend]
    auts: Optional[AutomorphismGroup]
    x_generators: List[Any]

    def element(self, text: str):
        """An X-element from a word expression (projected for coset kinds)."""
        word = parse_word(text)
        if self.backend is None:
            return nat_element(word)
        g = evaluate_word(self.backend, word)
        return self.X.project(g)

    def backend_element(self, text: str):
        """The underlying G-element of a word; nat literals pass through."""
        word = parse_word(text)
        if self.backend is None:
            return nat_element(word)
        return evaluate_word(self.backend, word)


def build_instance(config: InstanceConfig) -> Instance:
    if config.mv_kind in ("builtin_nat", "builtin_nat_mutated"):
        X = NatGroup() if config.mv_kind == "builtin_nat" else MutatedNatGroup()
        words = config.x_generators or [(("1", 1),)]
        gens = [nat_element(w) for w in words]
        return Instance(config, X, None, None, gens)

    backend = build_backend(config.group)
    if config.mv_kind == "coset":
        auts = close_automorphisms(_build_seeds(backend, config.automorphism_seeds))
        X = CosetGroup(backend, auts)
        gens = [X.project(evaluate_word(backend, w)) for w in config.x_generators]
        return Instance(config, X, backend, auts, gens)

    # double_coset
    subgroup = [evaluate_word(backend, w) for w in config.subgroup]
    X = DoubleCosetGroup(backend, subgroup)
    gens = [X.project(evaluate_word(backend, w)) for w in config.x_generators]
    return Instance(config, X, backend, None, gens)


def load_instance(path: Union[str, Path]) -> Instance:
    return build_instance(parse_config(path))
