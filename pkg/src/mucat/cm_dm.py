"""The level category C_m and its one-object-per-residue quotient D_m.

C_m has objects (residue mod m, non-positive level); a morphism (a, x, i, j)
runs from (x, i) to ((a + x) mod m, j) with 0 <= a <= i - j, and composes by
(b, y, j, k) ∘ (a, x, i, j) = (a + b, x, i, k).

D_m has the residues mod m as objects; a morphism (alpha, x) runs from x to
alpha mod m with alpha >= x, and composes by (beta, y) · (alpha, x) =
(beta - y + alpha, x).  The functor F collapses levels: F(a, x, i, j) =
(a + x, x).

Residue classes are stored by their canonical representative in [0, m); all
comparisons such as alpha >= x are against canonical representatives.  Both
categories are infinite; finite windows (a level floor for C_m, a cap on
alpha for D_m) yield slices whose morphisms are all factorization-complete,
because intermediate levels stay inside [j, i] and intermediate alphas inside
[x, alpha].
"""

from __future__ import annotations

from dataclasses import dataclass

from .category import CategorySlice
from .errors import NotComposable


def _require_modulus(m: int) -> None:
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {m!r}")


@dataclass(frozen=True, order=True)
class CmObject:
    """An object (residue, level) with 0 <= residue < m and level <= 0."""

    residue: int
    level: int

    def __str__(self):
        return f"{self.residue},{self.level}"


@dataclass(frozen=True, order=True)
class CmMorphism:
    """A morphism (a, x, i, j): (x, i) -> ((a + x) mod m, j), 0 <= a <= i - j."""

    a: int
    x: int
    i: int
    j: int

    def source(self) -> CmObject:
        return CmObject(self.x, self.i)

    def target(self, m: int) -> CmObject:
        return CmObject((self.a + self.x) % m, self.j)

    def __str__(self):
        return f"{self.a},{self.x},{self.i},{self.j}"


def validate_cm_object(m: int, obj: CmObject) -> None:
    _require_modulus(m)
    if not 0 <= obj.residue < m:
        raise ValueError(f"residue {obj.residue} not in [0, {m})")
    if obj.level > 0:
        raise ValueError(f"level {obj.level} is positive")


def validate_cm_morphism(m: int, f: CmMorphism) -> None:
    _require_modulus(m)
    if not 0 <= f.x < m:
        raise ValueError(f"residue {f.x} not in [0, {m})")
    if f.i > 0 or f.j > 0:
        raise ValueError(f"levels ({f.i}, {f.j}) must be <= 0")
    if f.a < 0 or f.a > f.i - f.j:
        raise ValueError(f"shift a={f.a} not in [0, i-j] = [0, {f.i - f.j}]")


def cm_identity(obj: CmObject) -> CmMorphism:
    return CmMorphism(0, obj.residue, obj.level, obj.level)


def cm_hom(m: int, source: CmObject, target: CmObject) -> list[CmMorphism]:
    """All morphisms source -> target: a in [0, i-j] with a = y - x (mod m), ascending."""
    validate_cm_object(m, source)
    validate_cm_object(m, target)
    i, j = source.level, target.level
    need = (target.residue - source.residue) % m
    return [
        CmMorphism(a, source.residue, i, j)
        for a in range(i - j + 1)
        if a % m == need
    ]


def cm_compose(m: int, g: CmMorphism, f: CmMorphism) -> CmMorphism:
    """g ∘ f = (f.a + g.a, f.x, f.i, g.j); f's codomain must equal g's domain."""
    validate_cm_morphism(m, g)
    validate_cm_morphism(m, f)
    if f.target(m) != g.source():
        raise NotComposable(f"codomain of {f} is {f.target(m)}, domain of {g} is {g.source()}")
    return CmMorphism(f.a + g.a, f.x, f.i, g.j)


def cm_slice(m: int, level_min: int) -> CategorySlice:
    """The full window on objects with level in [level_min, 0].

    Every morphism is factorization-complete: intermediate objects of any
    factorization of (a, x, i, j) have level in [j, i], inside the window.
    """
    _require_modulus(m)
    if level_min > 0:
        raise ValueError(f"level_min must be <= 0, got {level_min}")
    objects = [CmObject(x, i) for i in range(0, level_min - 1, -1) for x in range(m)]
    morphisms = [
        CmMorphism(a, x, i, j)
        for i in range(0, level_min - 1, -1)
        for j in range(i, level_min - 1, -1)
        for a in range(i - j + 1)
        for x in range(m)
    ]
    dom = {f: f.source() for f in morphisms}
    cod = {f: f.target(m) for f in morphisms}
    by_dom: dict = {}
    for f in morphisms:
        by_dom.setdefault(dom[f], []).append(f)
    compose = {}
    for f in morphisms:
        for g in by_dom.get(cod[f], ()):
            compose[(g, f)] = CmMorphism(f.a + g.a, f.x, f.i, g.j)
    identities = {obj: cm_identity(obj) for obj in objects}
    return CategorySlice(objects, morphisms, dom, cod, compose, identities, morphisms)


def cm_moebius_closed_form(f: CmMorphism) -> int:
    """The closed-form Möbius value of (a, x, i, j)."""
    if (f.a == 0 and f.j == f.i) or (f.a == 1 and f.j == f.i - 2):
        return 1
    if (f.a == 0 and f.j == f.i - 1) or (f.a == 1 and f.j == f.i - 1):
        return -1
    return 0


def cm_factorization_objects(m: int, f: CmMorphism) -> list[tuple[int, int, int]]:
    """Closed-form enumeration of the factorizations of f as triples (b, z, k).

    The factorization indexed by (b, z, k) is
    (a-b, z, k, j) ∘ (b, x, i, k) with z = (b + x) mod m and
    a-b+j <= k <= i-b; there are (a+1)(i-j-a+1) triples.
    """
    validate_cm_morphism(m, f)
    return [
        (b, (b + f.x) % m, k)
        for b in range(f.a + 1)
        for k in range(f.a - b + f.j, f.i - b + 1)
    ]


@dataclass(frozen=True, order=True)
class DmMorphism:
    """A morphism (alpha, x): x -> alpha mod m, with alpha >= x."""

    alpha: int
    x: int

    def source(self) -> int:
        return self.x

    def target(self, m: int) -> int:
        return self.alpha % m

    def __str__(self):
        return f"{self.alpha},{self.x}"


def validate_dm_morphism(m: int, f: DmMorphism) -> None:
    _require_modulus(m)
    if not 0 <= f.x < m:
        raise ValueError(f"residue {f.x} not in [0, {m})")
    if f.alpha < f.x:
        raise ValueError(f"alpha={f.alpha} is below the canonical representative {f.x}")


def dm_identity(x: int) -> DmMorphism:
    return DmMorphism(x, x)


def dm_hom_bounded(m: int, x: int, y: int, alpha_max: int) -> list[DmMorphism]:
    """All morphisms x -> y with alpha <= alpha_max, ascending.

    Hom-sets are infinite, so the bound is mandatory.
    """
    _require_modulus(m)
    if not 0 <= x < m or not 0 <= y < m:
        raise ValueError(f"residues ({x}, {y}) not in [0, {m})")
    if alpha_max < 0:
        raise ValueError(f"alpha_max must be >= 0, got {alpha_max}")
    return [
        DmMorphism(alpha, x)
        for alpha in range(x, alpha_max + 1)
        if alpha % m == y
    ]


def dm_compose(m: int, g: DmMorphism, f: DmMorphism) -> DmMorphism:
    """g · f = (g.alpha - g.x + f.alpha, f.x); f's codomain residue must be g.x."""
    validate_dm_morphism(m, g)
    validate_dm_morphism(m, f)
    if f.alpha % m != g.x:
        raise NotComposable(f"codomain of {f} is {f.alpha % m}, domain of {g} is {g.x}")
    return DmMorphism(g.alpha - g.x + f.alpha, f.x)


def dm_slice(m: int, alpha_max: int) -> CategorySlice:
    """The window of all morphisms with alpha <= alpha_max.

    Factorizations of (alpha, x) run over intermediates (gamma, x) with
    x <= gamma <= alpha, so every morphism is complete; composition is partial
    (composites with alpha beyond the cap fall outside the slice).
    """
    _require_modulus(m)
    if alpha_max < m - 1:
        raise ValueError(f"alpha_max must be >= m-1 = {m - 1} so identities exist")
    objects = list(range(m))
    morphisms = [
        DmMorphism(alpha, x) for x in range(m) for alpha in range(x, alpha_max + 1)
    ]
    dom = {f: f.x for f in morphisms}
    cod = {f: f.alpha % m for f in morphisms}
    by_dom: dict = {}
    for f in morphisms:
        by_dom.setdefault(f.x, []).append(f)
    compose = {}
    for f in morphisms:
        for g in by_dom.get(cod[f], ()):
            alpha = g.alpha - g.x + f.alpha
            if alpha <= alpha_max:
                compose[(g, f)] = DmMorphism(alpha, f.x)
    identities = {x: dm_identity(x) for x in objects}
    return CategorySlice(objects, morphisms, dom, cod, compose, identities, morphisms)


def dm_moebius_closed_form(f: DmMorphism) -> int:
    """The closed-form Möbius value of (alpha, x)."""
    if f.alpha == f.x:
        return 1
    if f.alpha == f.x + 1:
        return -1
    return 0


def functor_F_object(obj: CmObject) -> int:
    """F on objects: drop the level."""
    return obj.residue


def functor_F(f: CmMorphism) -> DmMorphism:
    """F on morphisms: (a, x, i, j) -> (a + x, x)."""
    return DmMorphism(f.a + f.x, f.x)
