"""Factorization intervals of morphisms and the Möbius function computed on them.

The interval of a morphism f has the factorizations f = u∘v as objects; an
ambient morphism h connects (u, v) to (u', v') when h∘v = v' and u'∘h = u.
With that convention f itself connects the bottom (f, 1_dom) to the top
(1_cod, f).  When the interval is one-way and thin it is a finite poset and
mu(f) is the poset Möbius value from bottom to top.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .category import CategorySlice
from .errors import InvalidPoset, NotOneWay, NotThin, Unbounded
from .poset import FinitePoset


@dataclass(frozen=True)
class Factorization:
    """An ordered factorization subject = left ∘ right."""

    left: Any
    right: Any
    subject: Any


class LawvereInterval:
    """The factorization category of a single morphism."""

    __slots__ = ("subject", "objects", "homs")

    def __init__(self, subject, objects, homs):
        self.subject = subject
        self.objects = tuple(objects)
        self.homs = dict(homs)

    def __repr__(self):
        return f"LawvereInterval({self.subject!r}, {len(self.objects)} factorizations)"

    def hom(self, a: Factorization, b: Factorization) -> tuple:
        return self.homs.get((a, b), ())


def lawvere_interval(c: CategorySlice, f) -> LawvereInterval:
    """Build the full interval of f inside the slice; f must be complete."""
    objects = [Factorization(g, h, f) for g, h in c.factorizations(f)]
    homs = {}
    for a in objects:
        mid_a = c.cod[a.right]
        for b in objects:
            mid_b = c.cod[b.right]
            connecting = tuple(
                h for h in c.hom(mid_a, mid_b)
                if c.compose.get((h, a.right)) == b.right
                and c.compose.get((b.left, h)) == a.left
            )
            if connecting:
                homs[(a, b)] = connecting
    return LawvereInterval(f, objects, homs)


def is_one_way(iv: LawvereInterval) -> bool:
    """Distinct factorizations never connected both ways; endo hom-sets are singletons."""
    for a in iv.objects:
        if len(iv.hom(a, a)) != 1:
            return False
    for i, a in enumerate(iv.objects):
        for b in iv.objects[i + 1:]:
            if iv.hom(a, b) and iv.hom(b, a):
                return False
    return True


def moebius_test(c: CategorySlice) -> bool:
    """True iff every morphism's interval is finite and one-way.

    Finiteness is automatic in a finite slice (enumeration closes); the
    substance is the one-way check on every interval.
    """
    return all(is_one_way(lawvere_interval(c, f)) for f in c.morphisms)


def interval_as_poset(iv: LawvereInterval) -> FinitePoset:
    """The interval as a poset: F1 <= F2 iff some morphism connects F1 to F2.

    Only defined for thin one-way intervals; raises NotThin when a hom-set has
    two or more elements and NotOneWay when antisymmetry fails.
    """
    for pair, hs in iv.homs.items():
        if len(hs) > 1:
            raise NotThin(f"hom-set {pair!r} has {len(hs)} elements")
    if not is_one_way(iv):
        raise NotOneWay(f"interval of {iv.subject!r} is not one-way")
    pairs = [(a, b) for (a, b) in iv.homs]
    try:
        return FinitePoset(iv.objects, leq=pairs)
    except InvalidPoset as exc:  # connectivity relation fails poset laws
        raise NotOneWay(str(exc)) from exc


def moebius_via_lawvere(c: CategorySlice, f) -> int:
    """mu(f) computed as the interval-poset Möbius value from bottom to top."""
    iv = lawvere_interval(c, f)
    poset = interval_as_poset(iv)
    bottom = Factorization(f, c.identities[c.dom[f]], f)
    top = Factorization(c.identities[c.cod[f]], f, f)
    if bottom not in poset or top not in poset:
        raise Unbounded(f"interval of {f!r} lacks its trivial factorizations")
    if poset.bottom() != bottom or poset.top() != top:
        raise Unbounded(f"interval of {f!r} is not bounded by its trivial factorizations")
    return poset.moebius(bottom, top)
