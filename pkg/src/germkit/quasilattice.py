"""The positive affine cone and its quasi-lattice order.

Cone elements are pairs ``(shift, modulus)`` with ``shift >= 0`` and
``modulus >= 1`` -- the monoid of maps ``x -> modulus*x + shift`` under
composition.  The left-divisibility order ``qleq`` compares them; two
elements admit a common upper bound exactly when their shifts agree mod
the gcd of the moduli, and then a least upper bound ``sigma`` exists
(lcm modulus, least compatible shift).  Cone elements also name
arithmetic classes, which turns cover questions into residue coverage.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import Residue, crt_meet
from .projections import Projection

__all__ = [
    "PElem",
    "pmul",
    "qleq",
    "cub_exists",
    "sigma",
    "covers_P",
    "covers_interval",
    "pelem_to_projection",
    "upper_set_window",
]


@dataclass(frozen=True)
class PElem:
    """The map ``x -> modulus*x + shift`` with nonnegative shift, positive modulus."""

    shift: int
    modulus: int

    def __post_init__(self) -> None:
        if self.shift < 0:
            raise ValueError("shift must be nonnegative")
        if self.modulus < 1:
            raise ValueError("modulus must be positive")

    def __str__(self) -> str:
        return f"pn({self.shift},{self.modulus})"


def pmul(a: PElem, b: PElem) -> PElem:
    """Composition ``a after b``: ``x -> m_a*(m_b*x + k_b) + k_a``."""
    return PElem(a.shift + a.modulus * b.shift, a.modulus * b.modulus)


def qleq(a: PElem, b: PElem) -> bool:
    """Left divisibility: ``a^{-1} b`` stays in the cone."""
    return (
        b.modulus % a.modulus == 0
        and (b.shift - a.shift) % a.modulus == 0
        and b.shift >= a.shift
    )


def cub_exists(a: PElem, b: PElem) -> bool:
    """Common upper bound test: shifts congruent mod gcd of the moduli."""
    return (a.shift - b.shift) % math.gcd(a.modulus, b.modulus) == 0


def sigma(a: PElem, b: PElem) -> PElem | None:
    """Least common upper bound, or None when there is none.

    Modulus is the lcm; the shift is the least solution of both shift
    congruences that is >= both shifts.
    """
    joint = crt_meet(Residue(a.shift, a.modulus), Residue(b.shift, b.modulus))
    if joint is None:
        return None
    bottom = max(a.shift, b.shift)
    k = joint.value
    if k < bottom:
        k += joint.modulus * (-(-(bottom - k) // joint.modulus))
    return PElem(k, joint.modulus)


def covers_P(family: list[PElem]) -> bool:
    """Does every cone element admit a common upper bound with some member?

    Equivalent to the classes ``shift mod modulus`` covering the integers,
    which is decided at the lcm level.
    """
    if not family:
        raise ValueError("empty family")
    level = math.lcm(*(f.modulus for f in family))
    return all(
        any((r - f.shift) % f.modulus == 0 for f in family) for r in range(level)
    )


def covers_interval(family: list[PElem], base: PElem) -> bool:
    """Cover test for the part of the cone above ``base``, by translating back."""
    for f in family:
        if not qleq(base, f):
            raise ValueError("not in interval")
    translated = [
        PElem((f.shift - base.shift) // base.modulus, f.modulus // base.modulus)
        for f in family
    ]
    return covers_P(translated)


def pelem_to_projection(a: PElem) -> Projection:
    """The arithmetic class a cone element names."""
    return Projection(a.shift % a.modulus, a.modulus)


def upper_set_window(a: PElem, window: int) -> list[PElem]:
    """Everything above ``a`` with shift and modulus at most ``window``,
    sorted by (modulus, shift)."""
    return [
        PElem(k, m)
        for m in range(1, window + 1)
        for k in range(0, window + 1)
        if qleq(a, PElem(k, m))
    ]
