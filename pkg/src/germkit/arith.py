"""Exact integer helpers used everywhere else in the package.

Residues, gcd/lcm with zero guards, the extended Euclidean algorithm,
single linear congruences, and the intersection of two arithmetic
classes via the Chinese remainder theorem.  All arithmetic is exact;
no floats appear anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "Residue",
    "gcd",
    "lcm",
    "xgcd",
    "solve_congruence",
    "crt_meet",
]


@dataclass(frozen=True)
class Residue:
    """The arithmetic class ``value + modulus*Z``, stored with ``0 <= value < modulus``."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus <= 0:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "value", self.value % self.modulus)

    def contains(self, x: int) -> bool:
        return (x - self.value) % self.modulus == 0

    def __str__(self) -> str:
        return f"{self.value} mod {self.modulus}"


def gcd(a: int, b: int) -> int:
    """Positive greatest common divisor of two nonzero integers."""
    if a == 0 or b == 0:
        raise ValueError("zero argument")
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    """Positive least common multiple of two nonzero integers."""
    if a == 0 or b == 0:
        raise ValueError("zero argument")
    return abs(a * b) // math.gcd(a, b)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)`` (g >= 0)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def solve_congruence(a: int, b: int, n: int) -> Residue | None:
    """Solution set of ``a*x = b (mod n)`` as a Residue, or None if empty.

    ``n`` must be positive.  The solutions, when any exist, form a single
    class mod ``n // gcd(a, n)``.
    """
    if n <= 0:
        raise ValueError("modulus must be positive")
    d = math.gcd(a, n)  # a == 0 gives d == n: either every x works or none does
    if b % d:
        return None
    n_red = n // d
    if n_red == 1:
        return Residue(0, 1)
    inv = pow((a // d) % n_red, -1, n_red)
    return Residue((b // d) * inv % n_red, n_red)


def crt_meet(r1: Residue, r2: Residue) -> Residue | None:
    """Intersection of two arithmetic classes.

    Nonempty exactly when the values agree modulo ``gcd`` of the moduli;
    the intersection is then a single class modulo the ``lcm``.

    >>> str(crt_meet(Residue(1, 2), Residue(2, 3)))
    '5 mod 6'
    >>> crt_meet(Residue(1, 4), Residue(3, 4)) is None
    True
    """
    m1, m2 = r1.modulus, r2.modulus
    d = math.gcd(m1, m2)
    if (r1.value - r2.value) % d:
        return None
    m = m1 * m2 // d
    m2_red = m2 // d
    if m2_red == 1:
        return Residue(r1.value, m)
    t = (r2.value - r1.value) // d * pow((m1 // d) % m2_red, -1, m2_red)
    return Residue(r1.value + m1 * (t % m2_red), m)
