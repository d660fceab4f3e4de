"""Words in the generators, and the text grammar for them.

    word := term+          (terms separated by whitespace)
    term := 's' '(' int ')' ['*'] | 'u' '(' int ')' | 'e' '(' int ')'

``s(m)`` scales by m, ``s(m)*`` is its adjoint, ``u(n)`` shifts by n and
``e(m)`` is the identity on the multiples of m.  ``s`` and ``e`` reject a
zero argument; ``u(0)`` is allowed (it is the unit).  Parse errors carry
the character position of the offending term.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "Token",
    "Word",
    "WordSyntaxError",
    "s",
    "sstar",
    "u",
    "e",
    "parse_word",
    "render_word",
]

_KINDS = ("s", "s*", "u", "e")


class WordSyntaxError(ValueError):
    """Raised on malformed word text; ``position`` is a 0-based character index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"position {position}: {message}")
        self.position = position


@dataclass(frozen=True)
class Token:
    kind: str
    arg: int

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown token kind {self.kind!r}")
        if self.kind != "u" and self.arg == 0:
            raise ValueError("zero modulus")

    def __str__(self) -> str:
        if self.kind == "s*":
            return f"s({self.arg})*"
        return f"{self.kind}({self.arg})"


Word = tuple[Token, ...]


def s(m: int) -> Token:
    return Token("s", m)


def sstar(m: int) -> Token:
    return Token("s*", m)


def u(n: int) -> Token:
    return Token("u", n)


def e(m: int) -> Token:
    return Token("e", m)


_TERM = re.compile(r"([sue])\((-?\d+)\)(\*?)\Z")


def parse_word(text: str) -> Word:
    tokens: list[Token] = []
    for chunk in re.finditer(r"\S+", text):
        pos = chunk.start()
        m = _TERM.match(chunk.group())
        if m is None:
            raise WordSyntaxError(
                f"expected s(m), s(m)*, u(n) or e(m), got {chunk.group()!r}", pos
            )
        kind, arg, star = m.group(1), int(m.group(2)), m.group(3)
        if star and kind != "s":
            raise WordSyntaxError(f"'*' is only allowed after s(...), got {chunk.group()!r}", pos)
        if kind != "u" and arg == 0:
            raise WordSyntaxError("zero modulus", pos)
        tokens.append(Token("s*" if star else kind, arg))
    if not tokens:
        raise WordSyntaxError("empty word", 0)
    return tuple(tokens)


def render_word(word: Word) -> str:
    return " ".join(str(t) for t in word)
