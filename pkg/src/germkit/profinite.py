"""Truncated profinite integers, characters, filters and ultrafilters.

A point of the profinite completion is known here only up to a level: the
pair ``(value, level)`` stands for everything congruent to ``value`` mod
``level``.  Such a point evaluates arithmetic-class projections to 0/1,
and its support -- the set of classes it lies in, one for each divisor of
the level -- is an ultrafilter in the finite semilattice of classes whose
modulus divides the level.  Conversely every maximal filter at a level
arises this way, which ``ultrafilters`` checks by honest enumeration at
small levels.

Working levels should be highly divisible; ``DEFAULT_LEVEL`` is
``lcm(1..12) = 27720``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import Residue
from .projections import Projection, leq, meet, orthogonal

__all__ = [
    "TruncatedProfinite",
    "FilterSet",
    "DEFAULT_LEVEL",
    "BRUTE_FORCE_LEVEL_CAP",
    "divisors",
    "residue",
    "char_eval",
    "filter_support",
    "class_universe",
    "is_filter",
    "is_maximal_filter",
    "ultrafilters",
]

DEFAULT_LEVEL = math.lcm(*range(1, 13))

# Enumerating filters costs a pass over all principal up-sets of the class
# universe; above this level the direct support construction is used instead.
BRUTE_FORCE_LEVEL_CAP = 12


@dataclass(frozen=True)
class TruncatedProfinite:
    """A profinite point known modulo ``level``."""

    value: int
    level: int

    def __post_init__(self) -> None:
        if self.level <= 0:
            raise ValueError("level must be positive")
        object.__setattr__(self, "value", self.value % self.level)

    def __str__(self) -> str:
        return f"zhat({self.value},{self.level})"


@dataclass(frozen=True)
class FilterSet:
    """A set of nonzero classes with moduli dividing ``level``."""

    level: int
    elements: frozenset[Projection]

    def sorted_elements(self) -> list[Projection]:
        return sorted(self.elements, key=lambda p: (p.modulus, p.shift))

    def __str__(self) -> str:
        return "{" + ", ".join(str(p) for p in self.sorted_elements()) + "}"


def divisors(n: int) -> list[int]:
    if n <= 0:
        raise ValueError("positive integer required")
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def residue(r: TruncatedProfinite, q: int) -> Residue:
    """The class of the point mod ``q``; only divisors of the level are known."""
    if q <= 0:
        raise ValueError("modulus must be positive")
    if r.level % q:
        raise ValueError("insufficient level")
    return Residue(r.value % q, q)


def char_eval(r: TruncatedProfinite, p: Projection) -> int:
    """The 0/1 character value of the point on a projection."""
    if not p:
        return 0
    if r.level % p.modulus:
        raise ValueError("insufficient level")
    return 1 if (r.value - p.shift) % p.modulus == 0 else 0


def filter_support(r: TruncatedProfinite) -> FilterSet:
    """All classes the point lies in: one for each divisor of the level."""
    return FilterSet(
        r.level,
        frozenset(Projection(r.value % q, q) for q in divisors(r.level)),
    )


def class_universe(level: int) -> list[Projection]:
    """Every nonzero class with modulus dividing ``level``."""
    return [Projection(rho, q) for q in divisors(level) for rho in range(q)]


def is_filter(a: FilterSet) -> bool:
    """Nonempty, zero-free, closed under meets and upward closed in the universe."""
    elems = a.elements
    if not elems:
        return False
    if any(not p or a.level % p.modulus for p in elems):
        return False
    for p in elems:
        for q in elems:
            if meet(p, q) not in elems:
                return False
    for p in elems:
        for above in class_universe(a.level):
            if leq(p, above) and above not in elems:
                return False
    return True


def is_maximal_filter(a: FilterSet) -> bool:
    """A filter is maximal iff it already contains every class that meets all of it.

    Adjoining such a class would still generate a proper filter, so its
    absence is exactly what a strict enlargement needs.
    """
    if not is_filter(a):
        raise ValueError("not a filter")
    for candidate in class_universe(a.level):
        if candidate in a.elements:
            continue
        if all(not orthogonal(candidate, p) for p in a.elements):
            return False
    return True


def _principal_upset(bottom: Projection, level: int) -> FilterSet:
    return FilterSet(
        level, frozenset(p for p in class_universe(level) if leq(bottom, p))
    )


def _filter_key(a: FilterSet):
    return tuple((p.modulus, p.shift) for p in a.sorted_elements())


def ultrafilters(level: int) -> list[FilterSet]:
    """All maximal filters at a level, in a deterministic order.

    Up to ``BRUTE_FORCE_LEVEL_CAP`` this enumerates: every filter in a
    finite meet-semilattice is the principal up-set of its minimum (the
    meet of its members), so candidates are the up-sets of single classes
    and the maximal ones are kept by the criterion above.  Beyond the cap
    the supports of ``(value, level)`` for each value are returned directly.
    """
    if level <= 0:
        raise ValueError("level must be positive")
    if level <= BRUTE_FORCE_LEVEL_CAP:
        found: dict[tuple, FilterSet] = {}
        for bottom in class_universe(level):
            candidate = _principal_upset(bottom, level)
            if is_maximal_filter(candidate):
                found.setdefault(_filter_key(candidate), candidate)
        return [found[key] for key in sorted(found)]
    return [filter_support(TruncatedProfinite(v, level)) for v in range(level)]
