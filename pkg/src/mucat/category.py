"""Finite slices of small categories and their incidence algebra.

A CategorySlice is a finite window of a (possibly infinite) category: objects,
morphisms, a partial composition table, and an identity per object.  Morphisms
marked *complete* promise that every ambient factorization g∘h of the morphism
has g, h (and the pair entry) inside the slice, so factorization sums are
exact.  Incidence functions take exact rational values (Fraction / int); the
zeta function's convolution inverse is the Möbius function of the slice.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from fractions import Fraction
from typing import Any, Callable

from .errors import (
    IncompleteSlice,
    InvalidSlice,
    NotInvertible,
    NotMoebius,
)
from .poset import FinitePoset

_SLICE_JSON_KEYS = {"objects", "morphisms", "compose", "identities", "complete"}


class CategorySlice:
    """Finite presentation of a window of a small category.

    ``compose`` maps pairs (g, h) with cod(h) = dom(g) to g∘h whenever the
    composite lies in the slice.  Instances are immutable after construction;
    derived tables (hom-sets, factorization index, Möbius function) are cached
    lazily and deterministically.
    """

    __slots__ = (
        "objects", "morphisms", "dom", "cod", "compose", "identities",
        "complete", "_hom", "_facts", "_out", "_in", "_moebius",
    )

    def __init__(self, objects, morphisms, dom, cod, compose, identities, complete=()):
        self.objects = tuple(objects)
        self.morphisms = tuple(morphisms)
        if len(set(self.objects)) != len(self.objects):
            raise InvalidSlice("duplicate objects")
        if len(set(self.morphisms)) != len(self.morphisms):
            raise InvalidSlice("duplicate morphisms")
        mors = set(self.morphisms)
        objs = set(self.objects)
        self.dom = dict(dom)
        self.cod = dict(cod)
        for f in self.morphisms:
            if f not in self.dom or f not in self.cod:
                raise InvalidSlice(f"morphism {f!r} lacks a domain or codomain")
            if self.dom[f] not in objs or self.cod[f] not in objs:
                raise InvalidSlice(f"morphism {f!r} has endpoints outside the slice")
        self.compose = dict(compose)
        for (g, h), k in self.compose.items():
            if g not in mors or h not in mors or k not in mors:
                raise InvalidSlice(f"compose entry ({g!r}, {h!r}) -> {k!r} mentions unknown morphisms")
        self.identities = dict(identities)
        for x in self.objects:
            if x not in self.identities or self.identities[x] not in mors:
                raise InvalidSlice(f"object {x!r} lacks an identity morphism")
        self.complete = frozenset(complete)
        if not self.complete <= mors:
            raise InvalidSlice("complete set mentions unknown morphisms")
        self._hom = None
        self._facts = None
        self._out = None
        self._in = None
        self._moebius = None

    def __repr__(self):
        return f"CategorySlice({len(self.objects)} objects, {len(self.morphisms)} morphisms)"

    def identity_of(self, x):
        return self.identities[x]

    def is_identity(self, f) -> bool:
        return self.identities[self.dom[f]] == f

    def _hom_table(self):
        if self._hom is None:
            table = {}
            for f in self.morphisms:
                table.setdefault((self.dom[f], self.cod[f]), []).append(f)
            self._hom = {k: tuple(v) for k, v in table.items()}
        return self._hom

    def hom(self, x, y) -> tuple:
        """All morphisms x -> y, in slice order."""
        return self._hom_table().get((x, y), ())

    def morphisms_from(self, x) -> tuple:
        if self._out is None:
            out = {}
            for f in self.morphisms:
                out.setdefault(self.dom[f], []).append(f)
            self._out = {k: tuple(v) for k, v in out.items()}
        return self._out.get(x, ())

    def morphisms_into(self, x) -> tuple:
        if self._in is None:
            into = {}
            for f in self.morphisms:
                into.setdefault(self.cod[f], []).append(f)
            self._in = {k: tuple(v) for k, v in into.items()}
        return self._in.get(x, ())

    def _fact_index(self):
        # one pass over the composition table; order: right factor major
        if self._facts is None:
            index = {f: [] for f in self.morphisms}
            for h in self.morphisms:
                for g in self.morphisms_from(self.cod[h]):
                    k = self.compose.get((g, h))
                    if k is not None:
                        index[k].append((g, h))
            self._facts = {f: tuple(v) for f, v in index.items()}
        return self._facts

    def factorizations(self, f) -> tuple[tuple[Any, Any], ...]:
        """All ordered pairs (g, h) with g∘h = f, trivial ones included."""
        if f not in self.complete:
            raise IncompleteSlice(f"morphism {f!r} is not marked factorization-complete")
        return self._fact_index()[f]

    # -- serialization ---------------------------------------------------

    def morphism_key(self, f) -> str:
        return f if isinstance(f, str) else str(f)

    def object_key(self, x) -> str:
        return x if isinstance(x, str) else str(x)

    def to_json(self) -> str:
        """Serialize in the documented slice schema (morphisms become string ids)."""
        mid = {f: self.morphism_key(f) for f in self.morphisms}
        oid = {x: self.object_key(x) for x in self.objects}
        if len(set(mid.values())) != len(mid) or len(set(oid.values())) != len(oid):
            raise InvalidSlice("morphism/object keys are not unique; cannot serialize")
        data = {
            "objects": [oid[x] for x in self.objects],
            "morphisms": [
                {"id": mid[f], "dom": oid[self.dom[f]], "cod": oid[self.cod[f]]}
                for f in self.morphisms
            ],
            "compose": [
                [mid[g], mid[h], mid[k]]
                for h in self.morphisms
                for g in self.morphisms_from(self.cod[h])
                if (k := self.compose.get((g, h))) is not None
            ],
            "identities": {oid[x]: mid[self.identities[x]] for x in self.objects},
            "complete": [mid[f] for f in self.morphisms if f in self.complete],
        }
        return json.dumps(data)

    @classmethod
    def from_json(cls, data) -> "CategorySlice":
        """Load a slice whose objects and morphisms are string ids."""
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        if not isinstance(data, dict):
            raise InvalidSlice("slice JSON must be an object")
        unknown = set(data) - _SLICE_JSON_KEYS
        if unknown:
            raise InvalidSlice(f"unknown keys in slice JSON: {sorted(unknown)}")
        missing = _SLICE_JSON_KEYS - set(data)
        if missing:
            raise InvalidSlice(f"missing keys in slice JSON: {sorted(missing)}")
        morphisms = [rec["id"] for rec in data["morphisms"]]
        dom = {rec["id"]: rec["dom"] for rec in data["morphisms"]}
        cod = {rec["id"]: rec["cod"] for rec in data["morphisms"]}
        compose = {}
        for row in data["compose"]:
            if len(row) != 3:
                raise InvalidSlice(f"compose entry {row!r} is not a triple")
            g, h, k = row
            compose[(g, h)] = k
        return cls(
            data["objects"], morphisms, dom, cod, compose,
            data["identities"], data["complete"],
        )


# -- validation ------------------------------------------------------------

def find_slice_violation(c: CategorySlice) -> str | None:
    """First identity/associativity violation in the slice, or None.

    Associativity is checked on every composable triple for which both
    bracketings are expressible inside the slice.
    """
    for x in c.objects:
        e = c.identities[x]
        if c.dom[e] != x or c.cod[e] != x:
            return f"identity of {x!r} has endpoints ({c.dom[e]!r}, {c.cod[e]!r})"
    for (g, h), k in c.compose.items():
        if c.cod[h] != c.dom[g]:
            return f"compose defined on non-composable pair ({g!r}, {h!r})"
        if c.dom[k] != c.dom[h] or c.cod[k] != c.cod[g]:
            return f"composite {k!r} of ({g!r}, {h!r}) has wrong endpoints"
    for f in c.morphisms:
        if c.compose.get((f, c.identities[c.dom[f]])) != f:
            return f"right identity law fails at {f!r}"
        if c.compose.get((c.identities[c.cod[f]], f)) != f:
            return f"left identity law fails at {f!r}"
    for (g, h), gh in c.compose.items():
        for k in c.morphisms_into(c.dom[h]):
            hk = c.compose.get((h, k))
            left = c.compose.get((gh, k))
            if hk is None:
                continue
            right = c.compose.get((g, hk))
            if (left is None) != (right is None):
                return f"associativity definedness mismatch on ({g!r}, {h!r}, {k!r})"
            if left is not None and left != right:
                return f"associativity fails on ({g!r}, {h!r}, {k!r}): {left!r} != {right!r}"
    return None


def validate_slice(c: CategorySlice) -> bool:
    """True iff the identity and associativity laws hold throughout the slice."""
    return find_slice_violation(c) is None


def is_one_way_category(c: CategorySlice) -> bool:
    """No two distinct objects connected both ways, and every Hom(X, X) = {1_X}."""
    for x in c.objects:
        if len(c.hom(x, x)) != 1:
            return False
    for i, x in enumerate(c.objects):
        for y in c.objects[i + 1:]:
            if c.hom(x, y) and c.hom(y, x):
                return False
    return True


def poset_as_category(p: FinitePoset) -> CategorySlice:
    """The poset as a category: one morphism (x, y) per related pair x <= y.

    Every morphism is factorization-complete (the slice is the whole category).
    """
    morphisms = [(x, y) for x in p.elements for y in p.elements if p.leq(x, y)]
    dom = {f: f[0] for f in morphisms}
    cod = {f: f[1] for f in morphisms}
    compose = {}
    for (y1, z) in morphisms:
        for (x, y2) in morphisms:
            if y1 == y2:
                compose[((y1, z), (x, y2))] = (x, z)
    identities = {x: (x, x) for x in p.elements}
    return CategorySlice(p.elements, morphisms, dom, cod, compose, identities, morphisms)


# -- incidence functions -----------------------------------------------------

def _exact(value):
    """Normalize an exact scalar: Fractions with denominator 1 become ints."""
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, int):
        return value
    raise TypeError(f"incidence values must be exact rationals, got {type(value).__name__}")


class IncidenceFunction(Mapping):
    """A total map from the morphisms of a slice to exact rational scalars."""

    __slots__ = ("_values",)

    def __init__(self, values: Mapping):
        self._values = {f: _exact(v) for f, v in values.items()}

    def __getitem__(self, f):
        return self._values[f]

    def __iter__(self):
        return iter(self._values)

    def __len__(self):
        return len(self._values)

    def __eq__(self, other):
        if isinstance(other, IncidenceFunction):
            return self._values == other._values
        return NotImplemented

    def __repr__(self):
        return f"IncidenceFunction({len(self._values)} values)"

    @classmethod
    def constant(cls, c: CategorySlice, value) -> "IncidenceFunction":
        return cls({f: value for f in c.morphisms})

    @classmethod
    def zeta(cls, c: CategorySlice) -> "IncidenceFunction":
        """The constant-1 function."""
        return cls.constant(c, 1)

    @classmethod
    def delta(cls, c: CategorySlice) -> "IncidenceFunction":
        """The convolution identity: 1 on identities, 0 elsewhere."""
        return cls({f: 1 if c.is_identity(f) else 0 for f in c.morphisms})

    @classmethod
    def from_callable(cls, c: CategorySlice, fn: Callable) -> "IncidenceFunction":
        return cls({f: fn(f) for f in c.morphisms})

    def to_json(self, c: CategorySlice) -> str:
        """Serialize as {morphism id: "p/q"} in slice order."""
        return json.dumps(
            {c.morphism_key(f): str(Fraction(self._values[f])) for f in c.morphisms}
        )

    @classmethod
    def from_json(cls, c: CategorySlice, data) -> "IncidenceFunction":
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        by_key = {c.morphism_key(f): f for f in c.morphisms}
        values = {}
        for key, raw in data.items():
            if key not in by_key:
                raise InvalidSlice(f"incidence value for unknown morphism id {key!r}")
            values[by_key[key]] = Fraction(raw)
        return cls(values)


def _require_total(c: CategorySlice, xi) -> None:
    for f in c.morphisms:
        if f not in xi:
            raise InvalidSlice(f"incidence function is missing morphism {f!r}")


def convolve(c: CategorySlice, xi, eta, f):
    """(xi * eta)(f) = sum over factorizations f = g∘h of xi(g) * eta(h)."""
    _require_total(c, xi)
    _require_total(c, eta)
    return _convolve_at(c, xi, eta, f)


def _convolve_at(c, xi, eta, f):
    return sum(xi[g] * eta[h] for g, h in c.factorizations(f))


def convolution_inverse(c: CategorySlice, xi) -> IncidenceFunction:
    """The two-sided convolution inverse of xi on a fully complete slice.

    Solves (xi * eta)(f) = delta(f) by recursion on right factors:

        eta(f) = (delta(f) - sum_{f = g∘h, g != 1} xi(g) eta(h)) / xi(1_cod(f))

    Raises NotInvertible if xi vanishes on an identity, and NotMoebius if the
    recursion revisits a morphism (the slice is not one-way, so no finite
    recursion computes the inverse).
    """
    _require_total(c, xi)
    if set(c.complete) != set(c.morphisms):
        raise IncompleteSlice("convolution inverse needs every morphism complete")
    for x in c.objects:
        if xi[c.identities[x]] == 0:
            raise NotInvertible(f"function vanishes on the identity of {x!r}")
    eta: dict = {}
    in_progress: set = set()

    def solve(f):
        if f in eta:
            return eta[f]
        if f in in_progress:
            raise NotMoebius(f"factorization recursion revisits {f!r}; slice is not one-way")
        in_progress.add(f)
        one = c.identities[c.cod[f]]
        total = Fraction(1 if f == one else 0)
        for g, h in c.factorizations(f):
            if g != one:
                total -= xi[g] * solve(h)
        value = total / xi[one]
        in_progress.discard(f)
        eta[f] = value
        return value

    for f in c.morphisms:
        solve(f)
    return IncidenceFunction(eta)


def moebius_of_slice(c: CategorySlice) -> IncidenceFunction:
    """The Möbius function: convolution inverse of zeta.  Values are integers.

    Cached on the slice (deterministic, idempotent).
    """
    if c._moebius is None:
        mu = convolution_inverse(c, IncidenceFunction.zeta(c))
        for f, v in mu.items():
            if not isinstance(v, int):
                raise NotMoebius(f"non-integer Möbius value {v} at {f!r}")
        c._moebius = mu
    return c._moebius


def moebius_inversion_check(c: CategorySlice, eta) -> bool:
    """Verify eta = (eta * zeta) * mu pointwise and exactly."""
    _require_total(c, eta)
    zeta = IncidenceFunction.zeta(c)
    mu = moebius_of_slice(c)
    xi = IncidenceFunction({f: _convolve_at(c, eta, zeta, f) for f in c.morphisms})
    return all(_convolve_at(c, xi, mu, f) == eta[f] for f in c.morphisms)
