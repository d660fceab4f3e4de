"""Request and response models for the HTTP service.

Wire forms carry exactly the canonical-form fields.  Sum types (zero
versus a class, defined versus undefined, a join versus none) are unions
of small models with ``extra="forbid"`` so they deserialize unambiguously.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict

from ..groupoid import Germ
from ..projections import Projection, ZERO
from ..quasilattice import PElem
from ..semigroup import Element, ZERO as ZERO_ELEMENT


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class ZeroOut(_Strict):
    zero: Literal[True] = True


class ClassOut(_Strict):
    shift: int
    modulus: int


ProjectionOut = ZeroOut | ClassOut


class ElementBody(_Strict):
    num: int
    shift: int
    den: int
    dom: ClassOut


ElementOut = ZeroOut | ElementBody


class GermOut(_Strict):
    value: int
    level: int
    shift: int
    num: int
    den: int


class PElemOut(_Strict):
    shift: int
    modulus: int


class NoneOut(_Strict):
    none: Literal[True] = True


class ValueOut(_Strict):
    value: int


class UndefinedOut(_Strict):
    undefined: Literal[True] = True


class BoolOut(_Strict):
    value: bool


class CheckOut(_Strict):
    name: str
    passed: bool
    detail: str


class VerifyOut(_Strict):
    ok: bool
    checks: list[CheckOut]


class OracleCheckOut(_Strict):
    agree: bool
    window: int
    defined: int


# ------------------------------------------------------------- requests

class WordIn(_Strict):
    word: str


class ActIn(_Strict):
    word: str
    x: int


class MeetIn(_Strict):
    p: ProjectionOut
    q: ProjectionOut


class RefineIn(_Strict):
    p: ProjectionOut
    modulus: int


class FamilyIn(_Strict):
    p: ProjectionOut
    family: list[ProjectionOut]


class UltraIn(_Strict):
    level: int


class GermIn(_Strict):
    value: int
    level: int
    shift: int
    num: int
    den: int


class ComposeIn(_Strict):
    g1: GermIn
    g2: GermIn


class SigmaIn(_Strict):
    a: PElemOut
    b: PElemOut


class PFamilyIn(_Strict):
    family: list[PElemOut]


class PIntervalIn(_Strict):
    base: PElemOut
    family: list[PElemOut]


class OracleCheckIn(_Strict):
    word: str
    window: int = 40


class VerifyIn(_Strict):
    seed: int = 0
    trials: int | None = None
    window: int | None = None
    level: int | None = None


# ----------------------------------------------------------- converters

def projection_out(p: Projection) -> ZeroOut | ClassOut:
    return ZeroOut() if not p else ClassOut(shift=p.shift, modulus=p.modulus)


def projection_in(model: ZeroOut | ClassOut) -> Projection:
    if isinstance(model, ZeroOut):
        return ZERO
    return Projection(model.shift, model.modulus)


def element_out(v: Element) -> ZeroOut | ElementBody:
    if not v:
        return ZeroOut()
    return ElementBody(
        num=v.num, shift=v.shift, den=v.den,
        dom=ClassOut(shift=v.dom.shift, modulus=v.dom.modulus),
    )


def germ_out(g: Germ) -> GermOut:
    return GermOut(
        value=g.base.value, level=g.base.level,
        shift=g.direction.shift, num=g.direction.num, den=g.direction.den,
    )


def pelem_out(a: PElem) -> PElemOut:
    return PElemOut(shift=a.shift, modulus=a.modulus)


def pelem_in(model: PElemOut) -> PElem:
    return PElem(model.shift, model.modulus)


def element_in(model: ZeroOut | ElementBody) -> Element:
    if isinstance(model, ZeroOut):
        return ZERO_ELEMENT
    return Element(model.num, model.shift, model.den,
                   Projection(model.dom.shift, model.dom.modulus))
