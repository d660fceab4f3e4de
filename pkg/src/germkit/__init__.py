"""Exact arithmetic for the inverse semigroup generated by the integer
shift and the scaling isometries, together with the structures it
generates: the semilattice of arithmetic-class projections, truncated
profinite characters and their ultrafilters, germs with rational affine
action, and the quasi-lattice order on the positive affine cone.  A
brute-force partial-injection model backs every identity.

Everything is immutable and exact; see ``germkit.verify`` for the
self-check suite, ``germkit.service`` for the HTTP face, and
``germkit.cli`` for the command-line client.
"""

from .arith import Residue, crt_meet
from .projections import Projection, ZERO, UNIT
from .semigroup import Element, normalize, mul, star, apply, to_word
from .words import parse_word, render_word
from .profinite import TruncatedProfinite, DEFAULT_LEVEL
from .groupoid import AffineRational, Germ
from .quasilattice import PElem

__version__ = "0.1.0"

__all__ = [
    "Residue",
    "crt_meet",
    "Projection",
    "ZERO",
    "UNIT",
    "Element",
    "normalize",
    "mul",
    "star",
    "apply",
    "to_word",
    "parse_word",
    "render_word",
    "TruncatedProfinite",
    "DEFAULT_LEVEL",
    "AffineRational",
    "Germ",
    "PElem",
    "__version__",
]
