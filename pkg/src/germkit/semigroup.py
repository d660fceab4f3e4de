"""Canonical forms and exact arithmetic for the inverse semigroup generated
by the shift, the scaling isometries and their adjoints.

Every nonzero element acts on integers as ``x -> (num*x + shift) / den`` on
a single arithmetic class, so the canonical form is a reduced affine
triple together with a domain projection:

    num != 0,  den >= 1,  gcd(|num|, |shift|, den) == 1,
    dom a nonzero class contained in {x : num*x + shift = 0 (mod den)}.

The zero element is a separate variant (encoded ``num == 0``).  Products
are function compositions; the domain of a product is a pullback computed
with one linear congruence and one Chinese-remainder meet.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from .arith import solve_congruence
from .projections import Projection, UNIT, ZERO as ZERO_PROJ, leq, meet
from .words import Token, Word, e, s, sstar, u

__all__ = [
    "Element",
    "ZERO",
    "ONE",
    "element_of_token",
    "normalize",
    "mul",
    "star",
    "source",
    "range_",
    "as_projection",
    "apply",
    "to_word",
]


@dataclass(frozen=True)
class Element:
    """Reduced affine triple plus domain; ``num == 0`` encodes the zero element."""

    num: int
    shift: int
    den: int
    dom: Projection

    def __post_init__(self) -> None:
        if self.num == 0:
            if (self.shift, self.den, self.dom) != (0, 1, ZERO_PROJ):
                raise ValueError("zero element is (0, 0, 1, zero projection)")
            return
        if self.den < 1:
            raise ValueError("denominator must be positive")
        if math.gcd(self.num, self.shift, self.den) != 1:
            raise ValueError("triple is not reduced")
        if not self.dom:
            raise ValueError("nonzero element needs a nonzero domain")
        if (self.num * self.dom.shift + self.shift) % self.den:
            raise ValueError("domain leaves the natural domain")
        if (self.num * self.dom.modulus) % self.den:
            raise ValueError("domain step is not compatible with the denominator")

    @property
    def is_zero(self) -> bool:
        return self.num == 0

    def __bool__(self) -> bool:
        return self.num != 0

    def __mul__(self, other: "Element") -> "Element":
        return mul(self, other)

    def __str__(self) -> str:
        return "0" if self.is_zero else f"elem({self.num},{self.shift},{self.den},{self.dom})"


ZERO = Element(0, 0, 1, ZERO_PROJ)
ONE = Element(1, 0, 1, UNIT)


def _make(num: int, shift: int, den: int, dom: Projection) -> Element:
    """Reduce a raw triple and intersect the domain with the natural domain."""
    if not dom:
        return ZERO
    if den < 0:
        num, shift, den = -num, -shift, -den
    g = math.gcd(num, shift, den)
    num, shift, den = num // g, shift // g, den // g
    natural = solve_congruence(num, -shift, den)
    if natural is None:
        return ZERO
    dom = meet(dom, Projection(natural.value, natural.modulus))
    if not dom:
        return ZERO
    return Element(num, shift, den, dom)


def element_of_token(t: Token) -> Element:
    if t.kind == "u":
        return Element(1, t.arg, 1, UNIT)
    if t.kind == "s":
        return Element(t.arg, 0, 1, UNIT)
    if t.kind == "e":
        return Element(1, 0, 1, Projection(0, abs(t.arg)))
    # s*: divide by t.arg on the multiples of t.arg
    m = t.arg
    return Element(1 if m > 0 else -1, 0, abs(m), Projection(0, abs(m)))


def normalize(word: Word) -> Element:
    """Fold the word into one canonical element (empty word -> the unit)."""
    return reduce(mul, (element_of_token(t) for t in word), ONE)


def mul(v: Element, w: Element) -> Element:
    """Composition ``v after w``; domains are pulled back exactly."""
    if not v or not w:
        return ZERO
    num = v.num * w.num
    shift = v.num * w.shift + v.shift * w.den
    den = v.den * w.den
    # x contributes iff x is in dom(w) and w(x) lands in dom(v):
    # w(x) = rho_v (mod q_v)  <=>  num_w * x = den_w * rho_v - shift_w (mod den_w * q_v)
    pulled = solve_congruence(
        w.num,
        w.den * v.dom.shift - w.shift,
        w.den * v.dom.modulus,
    )
    if pulled is None:
        return ZERO
    dom = meet(w.dom, Projection(pulled.value, pulled.modulus))
    return _make(num, shift, den, dom)


def range_(v: Element) -> Projection:
    """The image class ``v . dom(v)`` (equals ``v v*`` as a projection)."""
    if not v:
        return ZERO_PROJ
    rho, q = v.dom.shift, v.dom.modulus
    value = (v.num * rho + v.shift) // v.den
    step_size = abs(v.num) * q // v.den
    return Projection(value, step_size)


def source(v: Element) -> Projection:
    """The domain class (equals ``v* v`` as a projection)."""
    return ZERO_PROJ if not v else v.dom


def star(v: Element) -> Element:
    """The adjoint: inverts the partial bijection."""
    if not v:
        return ZERO
    return _make(v.den, -v.shift, v.num, range_(v))


def as_projection(v: Element) -> Projection | None:
    """The projection ``v`` equals, or None when ``v`` is not idempotent."""
    if not v:
        return ZERO_PROJ
    if (v.num, v.shift, v.den) == (1, 0, 1):
        return v.dom
    return None


def apply(v: Element, x: int) -> int | None:
    """Evaluate at an integer point; None outside the domain."""
    if not v or not v.dom.contains(x):
        return None
    return (v.num * x + v.shift) // v.den


def to_word(v: Element) -> Word:
    """A word normalizing back to ``v`` exactly.

    Shape: ``s(den)* u(a) e(c) u(b) s(num)`` with ``c = |num| * q`` chosen so
    the e-factor carves the domain class out of the natural domain; trivial
    factors are dropped, and the unit is rendered as ``e(1)``.
    """
    if not v:
        raise ValueError("no word form chosen for zero")
    q = v.dom.modulus
    c = abs(v.num) * q
    b = (-v.num * v.dom.shift) % c
    a = v.shift - b
    word: list[Token] = []
    if v.den != 1:
        word.append(sstar(v.den))
    if a != 0:
        word.append(u(a))
    if c != 1:
        word.append(e(c))
    if b != 0:
        word.append(u(b))
    if v.num != 1:
        word.append(s(v.num))
    if not word:
        word.append(e(1))
    return tuple(word)
