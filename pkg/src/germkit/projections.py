"""The commutative semilattice of arithmetic-class projections.

A nonzero projection is the identity on a single class ``shift + modulus*Z``;
the zero projection is the empty partial identity.  Products are set
intersections and reduce to the Chinese remainder theorem.  Conjugation by
the shift ``u`` translates a class, conjugation by the scaling isometry
``s_m`` multiplies it into ``m*Z``, and the reverse conjugation divides back
out (possibly killing the class).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import Residue, crt_meet, solve_congruence

__all__ = [
    "Projection",
    "ZERO",
    "UNIT",
    "meet",
    "leq",
    "orthogonal",
    "refine",
    "conj_u",
    "conj_s",
    "conj_s_star",
    "is_cover",
    "is_tight_sup",
]


@dataclass(frozen=True)
class Projection:
    """Identity on ``shift + modulus*Z``; ``modulus == 0`` encodes the zero projection."""

    shift: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 0:
            raise ValueError("modulus must be nonnegative")
        if self.modulus == 0:
            if self.shift != 0:
                raise ValueError("zero projection is (0, 0)")
        else:
            object.__setattr__(self, "shift", self.shift % self.modulus)

    @property
    def is_zero(self) -> bool:
        return self.modulus == 0

    def __bool__(self) -> bool:
        return self.modulus != 0

    def residue(self) -> Residue:
        if self.is_zero:
            raise ValueError("zero projection has no residue")
        return Residue(self.shift, self.modulus)

    def contains(self, x: int) -> bool:
        return bool(self) and (x - self.shift) % self.modulus == 0

    def __and__(self, other: "Projection") -> "Projection":
        return meet(self, other)

    def __le__(self, other: "Projection") -> bool:
        return leq(self, other)

    def __str__(self) -> str:
        return "0" if self.is_zero else f"p({self.shift},{self.modulus})"


ZERO = Projection(0, 0)
UNIT = Projection(0, 1)


def _from_residue(r: Residue | None) -> Projection:
    return ZERO if r is None else Projection(r.value, r.modulus)


def meet(p: Projection, q: Projection) -> Projection:
    """Product (= intersection): zero iff the classes are disjoint."""
    if not p or not q:
        return ZERO
    return _from_residue(crt_meet(p.residue(), q.residue()))


def leq(p: Projection, q: Projection) -> bool:
    return meet(p, q) == p


def orthogonal(p: Projection, q: Projection) -> bool:
    return not meet(p, q)


def refine(p: Projection, modulus: int) -> list[Projection]:
    """Split ``p`` into the classes mod ``modulus`` it contains.

    ``modulus`` must be a positive multiple of ``p.modulus``; the result is
    a partition of ``p`` into ``modulus // p.modulus`` finer projections.
    The zero projection refines to the empty list.
    """
    if modulus <= 0:
        raise ValueError("modulus must be positive")
    if not p:
        return []
    if modulus % p.modulus:
        raise ValueError("incompatible modulus")
    return [Projection(p.shift + p.modulus * j, modulus) for j in range(modulus // p.modulus)]


def conj_u(p: Projection, n: int) -> Projection:
    """Translate by ``n``: the image of ``p`` under ``x -> x + n``."""
    if not p:
        return ZERO
    return Projection(p.shift + n, p.modulus)


def conj_s(p: Projection, m: int) -> Projection:
    """Image of ``p`` under ``x -> m*x`` (m != 0): a class mod ``|m| * p.modulus``."""
    if m == 0:
        raise ValueError("zero argument")
    if not p:
        return ZERO
    return Projection(m * p.shift, abs(m) * p.modulus)


def conj_s_star(p: Projection, m: int) -> Projection:
    """Preimage of ``p`` under ``x -> m*x`` (m != 0).

    Zero when ``gcd(m, p.modulus)`` does not divide ``p.shift``; otherwise
    the solutions of ``m*x = shift (mod modulus)``, a single class mod
    ``modulus // gcd(m, modulus)``.
    """
    if m == 0:
        raise ValueError("zero argument")
    if not p:
        return ZERO
    return _from_residue(solve_congruence(m, p.shift, p.modulus))


def _check_interval(family: list[Projection], p: Projection) -> None:
    if not p:
        raise ValueError("not a subset of interval")
    for f in family:
        if not f or not leq(f, p):
            raise ValueError("not a subset of interval")


def _level(family: list[Projection], p: Projection) -> int:
    return math.lcm(p.modulus, *(f.modulus for f in family))


def is_cover(family: list[Projection], p: Projection) -> bool:
    """True iff every nonzero projection below ``p`` meets some member.

    Decided at the common level L = lcm of all moduli: each child of ``p``
    at level L is either inside a member or disjoint from it, so covering
    is equivalent to every child lying below some member.
    """
    _check_interval(family, p)
    level = _level(family, p)
    return all(any(leq(child, f) for f in family) for child in refine(p, level))


def is_tight_sup(family: list[Projection], p: Projection) -> bool:
    """True iff the members jointly exhaust ``p`` at the common level."""
    _check_interval(family, p)
    level = _level(family, p)
    covered: set[int] = set()
    for f in family:
        covered.update(c.shift for c in refine(f, level))
    return covered == {c.shift for c in refine(p, level)}
