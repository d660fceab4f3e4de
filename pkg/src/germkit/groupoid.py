"""Germs over truncated profinite base points, with rational affine parts.

A germ is a base point together with a reduced triple ``(shift, num, den)``
standing for the partial map ``x -> (num*x + shift) / den`` near the base.
The base is the *range* side: the point the map arrives at.  Acting on the
base from the right with the inverse map gives the source point

    source value = (den * value - shift) / num,
    source level = den * level / |num|,

which is how a class of modulus ``level`` is transported by the map.  A
germ exists at a truncation only when the level resolves the direction
(``|num|`` divides the level) and the base satisfies
``den * value = shift  (mod |num|)``.

Composition multiplies affine parts (these are lower-triangular 2x2
rational matrices with unit diagonal corner) and keeps the outer base;
equality of germs compares the reduced triples and the bases at the
common level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import Residue
from .profinite import TruncatedProfinite, char_eval
from .semigroup import Element, range_ as element_range

__all__ = [
    "AffineRational",
    "Germ",
    "affine_mul",
    "affine_inverse",
    "germ_new",
    "germ_of",
    "germ_range",
    "germ_source",
    "compose",
    "inverse",
    "germ_eq",
    "isotropy_solutions",
    "translation_orbit_covers",
]


@dataclass(frozen=True)
class AffineRational:
    """Reduced direction triple: ``x -> (num*x + shift) / den``."""

    shift: int
    num: int
    den: int

    def __post_init__(self) -> None:
        if self.num == 0 or self.den == 0:
            raise ValueError("zero argument")
        if self.den < 0:
            raise ValueError("denominator must be positive")
        if math.gcd(self.shift, self.num, self.den) != 1:
            raise ValueError("triple is not reduced")

    @classmethod
    def reduced(cls, shift: int, num: int, den: int) -> "AffineRational":
        if num == 0 or den == 0:
            raise ValueError("zero argument")
        if den < 0:
            shift, num, den = -shift, -num, -den
        g = math.gcd(shift, num, den)
        return cls(shift // g, num // g, den // g)

    @property
    def is_identity(self) -> bool:
        return (self.shift, self.num, self.den) == (0, 1, 1)


def affine_mul(g1: AffineRational, g2: AffineRational) -> AffineRational:
    return AffineRational.reduced(
        g1.shift * g2.den + g1.num * g2.shift,
        g1.num * g2.num,
        g1.den * g2.den,
    )


def affine_inverse(g: AffineRational) -> AffineRational:
    return AffineRational.reduced(-g.shift, g.den, g.num)


@dataclass(frozen=True)
class Germ:
    base: TruncatedProfinite
    direction: AffineRational

    def __str__(self) -> str:
        d = self.direction
        return f"germ({self.base.value},{self.base.level}; {d.shift},{d.num},{d.den})"


def germ_new(base: TruncatedProfinite, shift: int, num: int, den: int) -> Germ:
    """Build and validate a germ; the triple is reduced first, so scaled
    triples give the same germ."""
    direction = AffineRational.reduced(shift, num, den)
    if base.level % abs(direction.num):
        raise ValueError("insufficient level")
    if (direction.den * base.value - direction.shift) % abs(direction.num):
        raise ValueError("base not in domain")
    return Germ(base, direction)


def germ_of(base: TruncatedProfinite, v: Element) -> Germ:
    """The germ of a semigroup element at a point of its image class."""
    if not v or char_eval(base, element_range(v)) != 1:
        raise ValueError("base not in D_s")
    return germ_new(base, v.shift, v.num, v.den)


def germ_range(g: Germ) -> TruncatedProfinite:
    return g.base


def germ_source(g: Germ) -> TruncatedProfinite:
    """Transport the base through the inverse map; the level scales by den/|num|."""
    d = g.direction
    scaled = g.base.level * d.den
    if scaled % abs(d.num):
        raise ValueError("insufficient level")
    level = scaled // abs(d.num)
    value = (d.den * g.base.value - d.shift) // d.num
    return TruncatedProfinite(value % level, level)


def compose(g1: Germ, g2: Germ) -> Germ:
    """Composite germ at the outer base; sources and ranges must agree."""
    src = germ_source(g1)
    rng = g2.base
    common = math.gcd(src.level, rng.level)
    if (src.value - rng.value) % common:
        raise ValueError("source/range mismatch")
    d = affine_mul(g1.direction, g2.direction)
    return germ_new(g1.base, d.shift, d.num, d.den)


def inverse(g: Germ) -> Germ:
    d = affine_inverse(g.direction)
    return germ_new(germ_source(g), d.shift, d.num, d.den)


def germ_eq(g1: Germ, g2: Germ) -> bool:
    """Same direction and same base as far as both truncations can see."""
    if g1.direction != g2.direction:
        return False
    common = math.gcd(g1.base.level, g2.base.level)
    return (g1.base.value - g2.base.value) % common == 0


def isotropy_solutions(direction: AffineRational, level: int) -> list[Residue]:
    """Base values at this level fixed by the direction.

    Fixed points solve ``(den - num) * r = shift  (mod level)``; for
    ``num != den`` there are at most ``gcd(|den - num|, level)`` of them.
    """
    if level <= 0:
        raise ValueError("level must be positive")
    a = direction.den - direction.num
    return [
        Residue(r, level)
        for r in range(level)
        if (a * r - direction.shift) % level == 0
    ]


def translation_orbit_covers(q: int, level: int) -> bool:
    """Do the integer translates of the multiples-of-q class reach every
    class at the level?"""
    if q <= 0 or level <= 0:
        raise ValueError("modulus must be positive")
    if level % q:
        raise ValueError("incompatible modulus")
    covered: set[int] = set()
    for j in range(q):
        covered.update(range(j, level, q))
    return covered == set(range(level))
