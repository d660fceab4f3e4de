"""Brute-force reference model: words as partial injections on a window.

Every identity in the package can be checked against this model by
tabulating both sides on the integers in ``[-K, K]`` and comparing the
tables.  The model refutes wrong identities; a match on a window never
certifies one, so the symbolic layer is still the source of truth.

Points are pushed through a word token by token, rightmost token first
(words act like operator products).  Arithmetic is exact at every stage,
so an intermediate value can never be clipped into a false "undefined":
for a window bound K the intermediates of a defined chain stay within
(K + sum of |shifts|) * (product of |scale factors|).
"""

from __future__ import annotations

from dataclasses import dataclass

from .projections import Projection
from .words import Token, Word

__all__ = [
    "PartialInjection",
    "pmap_of_word",
    "step",
    "projection_window",
    "agree",
    "wh_upper_agree",
]


@dataclass(frozen=True)
class PartialInjection:
    """A finite injective table of integer pairs, tabulated on ``[-window, window]``."""

    window: int
    table: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        values = [y for _, y in self.table]
        if len(set(values)) != len(values):
            raise ValueError("not injective")
        if len({x for x, _ in self.table}) != len(self.table):
            raise ValueError("table has a repeated argument")

    @classmethod
    def from_map(cls, window: int, mapping: dict[int, int]) -> "PartialInjection":
        return cls(window, tuple(sorted(mapping.items())))

    def mapping(self) -> dict[int, int]:
        return dict(self.table)

    def __call__(self, x: int) -> int | None:
        return self.mapping().get(x)


def step(token: Token, y: int) -> int | None:
    """One generator applied to one point; None when undefined there."""
    if token.kind == "u":
        return y + token.arg
    if token.kind == "s":
        return y * token.arg
    if token.kind == "e":
        return y if y % token.arg == 0 else None
    # s*: exact division only
    return y // token.arg if y % token.arg == 0 else None


def pmap_of_word(word: Word, window: int) -> PartialInjection:
    """Tabulate the word's action on ``[-window, window]``.

    A point is dropped as soon as any stage is undefined on it.
    """
    table: dict[int, int] = {}
    for x in range(-window, window + 1):
        y: int | None = x
        for token in reversed(word):
            y = step(token, y)
            if y is None:
                break
        if y is not None:
            table[x] = y
    return PartialInjection.from_map(window, table)


def projection_window(p: Projection, window: int) -> set[int]:
    """The members of the class of ``p`` that lie in ``[-window, window]``."""
    if not p:
        return set()
    first = -window + (p.shift + window) % p.modulus
    return set(range(first, window + 1, p.modulus))


def agree(element, word: Word, window: int) -> bool:
    """Does the symbolic element match the word's window table pointwise?

    ``element`` is anything with an ``apply``-compatible action, compared
    on both definedness and values over ``[-window, window]``.
    """
    from .semigroup import apply

    oracle = pmap_of_word(word, window).mapping()
    for x in range(-window, window + 1):
        if apply(element, x) != oracle.get(x):
            return False
    return True


def wh_upper_agree(sp, tp, window: int) -> bool:
    """Window form of the joint-upper-set identity behind the Wiener-Hopf relation.

    The upper sets of two quasi-lattice elements intersect, inside the
    ``k, m <= window`` box, in exactly the upper set of their least upper
    bound -- or in nothing when no common upper bound exists.
    """
    from .quasilattice import sigma, upper_set_window

    left = set(upper_set_window(sp, window)) & set(upper_set_window(tp, window))
    join = sigma(sp, tp)
    right = set() if join is None else set(upper_set_window(join, window))
    return left == right
