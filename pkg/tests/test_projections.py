import math

import pytest
from hypothesis import given, strategies as st

from germkit.oracle import projection_window
from germkit.projections import (
    UNIT,
    ZERO,
    Projection,
    conj_s,
    conj_s_star,
    conj_u,
    is_cover,
    is_tight_sup,
    meet,
    leq,
    orthogonal,
    refine,
)

classes = st.builds(Projection, st.integers(-40, 40), st.integers(1, 40))


def test_constructor_normalizes_and_rejects():
    assert Projection(7, 3) == Projection(1, 3)
    assert Projection(-1, 5).shift == 4
    assert str(Projection(5, 6)) == "p(5,6)"
    assert str(ZERO) == "0"
    with pytest.raises(ValueError):
        Projection(1, 0)  # only (0, 0) may carry modulus 0
    with pytest.raises(ValueError):
        Projection(2, -3)


def test_meet_frozen():
    assert meet(Projection(1, 2), Projection(2, 3)) == Projection(5, 6)
    assert not meet(Projection(1, 4), Projection(3, 4))
    assert meet(Projection(2, 6), Projection(5, 15)) == Projection(20, 30)
    assert meet(UNIT, Projection(3, 7)) == Projection(3, 7)
    assert not meet(ZERO, UNIT)


@given(classes, classes)
def test_meet_matches_window(p, q):
    K = 2 * p.modulus * q.modulus
    expect = projection_window(p, K) & projection_window(q, K)
    assert projection_window(meet(p, q), K) == expect


@given(classes, classes, classes)
def test_meet_laws(p, q, r):
    assert meet(p, q) == meet(q, p)
    assert meet(p, p) == p
    assert meet(meet(p, q), r) == meet(p, meet(q, r))
    assert leq(meet(p, q), p)
    assert orthogonal(p, q) == (not meet(p, q))


@given(classes, classes)
def test_order_is_containment(p, q):
    K = 2 * p.modulus * q.modulus
    assert leq(p, q) == (projection_window(p, K) <= projection_window(q, K))


def test_refine_frozen():
    assert refine(Projection(1, 2), 6) == [Projection(1, 6), Projection(3, 6), Projection(5, 6)]
    assert refine(Projection(0, 3), 3) == [Projection(0, 3)]
    assert refine(ZERO, 5) == []
    with pytest.raises(ValueError, match="modulus must be positive"):
        refine(UNIT, 0)
    with pytest.raises(ValueError, match="incompatible modulus"):
        refine(Projection(1, 2), 3)


@given(classes, st.integers(1, 8))
def test_refine_is_a_partition(p, k):
    target = p.modulus * k if p else k
    parts = refine(p, target)
    K = 3 * target
    union: set[int] = set()
    for a in parts:
        assert a.modulus == target
        w = projection_window(a, K)
        assert not (union & w)
        union |= w
    assert union == projection_window(p, K)


def test_conj_frozen():
    # scaling by m maps the class (r mod q) onto (m*r mod |m|*q)
    assert conj_s(Projection(1, 3), 2) == Projection(2, 6)
    assert conj_s(Projection(1, 3), -2) == Projection(4, 6)
    # un-scaling keeps only the part that lands in m*Z
    assert conj_s_star(Projection(0, 3), 2) == Projection(0, 3)
    assert not conj_s_star(Projection(1, 2), 2)
    assert conj_s_star(Projection(2, 6), 2) == Projection(1, 3)
    # translation
    assert conj_u(Projection(0, 4), 3) == Projection(3, 4)
    with pytest.raises(ValueError, match="zero argument"):
        conj_s(UNIT, 0)
    with pytest.raises(ValueError, match="zero argument"):
        conj_s_star(UNIT, 0)


@given(classes, st.integers(-30, 30))
def test_conj_u_matches_window(p, n):
    K = 4 * max(p.modulus, 1) + abs(n)
    expect = {x + n for x in projection_window(p, K)}
    got = projection_window(conj_u(p, n), K)
    edge = K - abs(n)
    assert {x for x in got if abs(x) <= edge} == {x for x in expect if abs(x) <= edge}


@given(classes, st.integers(-9, 9).filter(lambda m: m != 0))
def test_conj_s_pair_matches_window(p, m):
    K = 4 * abs(m) * max(p.modulus, 1)
    window = projection_window(p, K)
    # forward: exactly the m-fold dilates of points of p
    fwd = {m * x for x in window}
    got_fwd = projection_window(conj_s(p, m), abs(m) * K)
    assert got_fwd == {y for y in fwd if abs(y) <= abs(m) * K}
    # backward: the points whose m-fold dilate lies in p
    back = {x // m for x in window if x % m == 0}
    got_back = projection_window(conj_s_star(p, m), K)
    assert {x for x in got_back if abs(x) <= K // abs(m)} == {x for x in back if abs(x) <= K // abs(m)}
    # lossless round trip through the scaled copy
    assert conj_s_star(conj_s(p, m), m) == p


@given(classes, classes, st.integers(-9, 9).filter(lambda m: m != 0))
def test_conj_s_is_meet_homomorphism(p, q, m):
    assert conj_s(meet(p, q), m) == meet(conj_s(p, m), conj_s(q, m))


def test_cover_preconditions():
    with pytest.raises(ValueError, match="not a subset of interval"):
        is_cover([Projection(1, 2)], Projection(0, 2))
    with pytest.raises(ValueError, match="not a subset of interval"):
        is_tight_sup([Projection(1, 4)], Projection(0, 2))
    with pytest.raises(ValueError, match="not a subset of interval"):
        is_cover([ZERO], UNIT)
    with pytest.raises(ValueError, match="not a subset of interval"):
        is_cover([UNIT], ZERO)


def test_cover_frozen():
    p = Projection(1, 2)
    full = refine(p, 6)
    assert is_cover(full, p)
    assert is_tight_sup(full, p)
    assert not is_cover(full[:-1], p)
    assert not is_tight_sup(full[:-1], p)
    # mixed-depth family: one child kept coarse, the others split again
    mixed = [full[0]] + refine(full[1], 12) + refine(full[2], 30)
    assert is_cover(mixed, p)
    assert is_tight_sup(mixed, p)
    # overlap does not spoil a cover
    assert is_cover(full + [p], p)
    assert is_tight_sup(full + [p], p)


@given(classes.filter(bool), st.integers(2, 6), st.integers(0, 5))
def test_cover_equals_window_union(p, k, drop):
    family = refine(p, k * p.modulus)
    if drop < len(family):
        family = family[:drop] + family[drop + 1 :]
    if not family:
        return
    L = math.lcm(p.modulus, *(a.modulus for a in family))
    K = 2 * L
    union: set[int] = set()
    for a in family:
        union |= projection_window(a, K)
    expect = union == projection_window(p, K)
    assert is_cover(family, p) == expect
    assert is_tight_sup(family, p) == expect
