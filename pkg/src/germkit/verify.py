"""The full self-check suite.

Each check pits a symbolic operation against an independent computation:
window tables of partial injections, exhaustive residue scans, subset
enumerations, or brute-force upper-bound searches.  The suite is seeded
and deterministic; ``run_all`` returns one result per check and is what
the CLI ``verify`` command and the service ``/verify`` endpoint execute.

Default sizes match the package's acceptance gates; ``trials`` scales the
randomized checks proportionally, ``window`` caps the oracle windows and
scan bounds, ``level`` replaces the default working level of the germ
checks.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import groupoid, profinite, projections, quasilattice, semigroup
from .arith import crt_meet
from .oracle import pmap_of_word, projection_window, wh_upper_agree
from .oracle import step as oracle_step
from .projections import Projection
from .quasilattice import PElem, cub_exists, covers_P, qleq, sigma
from .semigroup import Element, apply, mul, normalize, star, to_word
from .words import Word, e, parse_word, render_word, s, sstar, u

__all__ = ["CheckResult", "run_all", "CHECK_NAMES"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


CHECK_NAMES = (
    "projection-window-laws",
    "two-factor-product-rule",
    "inverse-semigroup-axioms",
    "ultrafilter-count",
    "cover-tight-equivalence",
    "germ-functoriality",
    "isotropy-translation",
    "upper-bound-lattice",
    "word-roundtrip",
)


# ---------------------------------------------------------------- sampling

def _random_word(rng: random.Random, max_len: int = 6, coeff: int = 9,
                 shift_bound: int = 12) -> Word:
    out = []
    for _ in range(rng.randint(1, max_len)):
        kind = rng.choice(("s", "s*", "u", "e"))
        if kind == "u":
            out.append(u(rng.randint(-shift_bound, shift_bound)))
        else:
            arg = rng.choice([k for k in range(-coeff, coeff + 1) if k])
            out.append({"s": s, "s*": sstar, "e": e}[kind](arg))
    return tuple(out)


def _random_element(rng: random.Random, **kw) -> Element:
    return normalize(_random_word(rng, **kw))


def _random_nonzero(rng: random.Random, **kw) -> Element:
    while True:
        v = _random_element(rng, **kw)
        if v:
            return v


def _point_in(p: Projection, level: int, rng: random.Random) -> profinite.TruncatedProfinite:
    value = p.shift + p.modulus * rng.randrange(level // p.modulus)
    return profinite.TruncatedProfinite(value, level)


def _window_cap(k: int, cap: int | None) -> int:
    return k if cap is None else min(k, cap)


# ------------------------------------------------------- check 1: windows

def check_projection_window_laws(bound: int = 12, cap: int | None = None) -> CheckResult:
    """Meets, refinements and scaling conjugations against window tables.

    Coefficients run over [-bound, bound] without zero and shifts over
    every class mod the modulus (shifts in [-bound, bound] reduce to
    those).  Meets and refinements only see |m|, so their grids iterate
    absolute values; the conjugation grids keep the sign.
    """
    nonzero = [k for k in range(-bound, bound + 1) if k]
    positive = range(1, bound + 1)
    bad = 0
    cases = 0

    for am in positive:
        for an in positive:
            window = _window_cap(4 * math.lcm(am, an) + 24, cap)
            rows = [
                (Projection(t, an), projection_window(Projection(t, an), window))
                for t in range(an)
            ]
            for r in range(am):
                pa = Projection(r, am)
                seta = projection_window(pa, window)
                for pb, setb in rows:
                    cases += 1
                    got = projections.meet(pa, pb)
                    if projection_window(got, window) != seta & setb:
                        bad += 1
                    if projections.orthogonal(pa, pb) != (not got):
                        bad += 1
                # the partition produced by refining one level down
                cases += 1
                children = projections.refine(pa, am * an)
                child_sets = [projection_window(c, window) for c in children]
                union: set[int] = set()
                for cs in child_sets:
                    union |= cs
                if union != seta or sum(len(cs) for cs in child_sets) != len(union):
                    bad += 1

    for m in nonzero:
        for an in positive:
            window = _window_cap(4 * math.lcm(abs(m), an) + 24, cap)
            for t in range(an):
                # preimage of the class t mod an under x -> m*x
                cases += 1
                got = projections.conj_s_star(Projection(t, an), m)
                expect = {x for x in range(-window, window + 1) if (m * x - t) % an == 0}
                if projection_window(got, window) != expect:
                    bad += 1
                # image of the same class under x -> m*x
                cases += 1
                got = projections.conj_s(Projection(t, an), m)
                image = {m * x for x in projection_window(Projection(t, an), window)}
                if projection_window(got, window) != {y for y in image if abs(y) <= window}:
                    bad += 1

    # spot grid straight through the word model
    spot = min(4, bound)
    for m in [k for k in range(-spot, spot + 1) if k]:
        for n in [k for k in range(-spot, spot + 1) if k]:
            window = _window_cap(4 * math.lcm(abs(m), abs(n)) + 24, cap)
            for k in range(-spot, spot + 1):
                cases += 3
                tbl = pmap_of_word((u(k), e(m), u(-k), u(k + 1), e(n), u(-k - 1)), window)
                both = projections.meet(
                    projections.conj_u(Projection(0, abs(m)), k),
                    projections.conj_u(Projection(0, abs(n)), k + 1),
                )
                if tbl.mapping() != {x: x for x in projection_window(both, window)}:
                    bad += 1
                tbl = pmap_of_word((sstar(m), u(k), e(n), u(-k), s(m)), window)
                pulled = projections.conj_s_star(Projection(k, abs(n)), m)
                if tbl.mapping() != {x: x for x in projection_window(pulled, window)}:
                    bad += 1
                tbl = pmap_of_word((s(m), u(k), e(n), u(-k), sstar(m)), window)
                pushed = projections.conj_s(Projection(k, abs(n)), m)
                if tbl.mapping() != {x: x for x in projection_window(pushed, window)}:
                    bad += 1

    return CheckResult(
        "projection-window-laws",
        bad == 0,
        f"{cases} window comparisons over coefficients up to {bound}, {bad} mismatches",
    )


# -------------------------------------------- check 2: two-factor products

def check_two_factor_product_rule(rng: random.Random, trials: int = 1000,
                                  cap: int | None = None) -> CheckResult:
    """The closed form for a product of two shift-scaling factors.

    Both the six-token word and its five-token closed form must normalize
    to the same canonical element, and both words must tabulate to that
    element's window table.
    """
    bad = 0
    for _ in range(trials):
        m1, n1, m2, n2 = (rng.choice([k for k in range(-9, 10) if k]) for _ in range(4))
        k1, k2 = rng.randint(-20, 20), rng.randint(-20, 20)
        lhs = (sstar(m1), u(k1), s(n1), sstar(m2), u(k2), s(n2))
        rhs = (sstar(m1 * m2), u(m2 * k1), e(m2 * n1), u(k2 * n1), s(n1 * n2))
        got = normalize(lhs)
        if got != normalize(rhs):
            bad += 1
            continue
        q = got.dom.modulus if got else 1
        window = _window_cap(min(2 * q + 24, 200), cap)
        for word in (lhs, rhs):
            table = pmap_of_word(word, window).mapping()
            if any(apply(got, x) != table.get(x) for x in range(-window, window + 1)):
                bad += 1
                break
        if got:
            # the window can undersample a sparse domain, so also push a few
            # in-class points of arbitrary size through the raw token chain
            for j in range(-4, 5):
                x = got.dom.shift + q * j
                y: int | None = x
                for token in reversed(lhs):
                    y = oracle_step(token, y)
                    if y is None:
                        break
                if y != apply(got, x):
                    bad += 1
                    break
    return CheckResult(
        "two-factor-product-rule",
        bad == 0,
        f"{trials} random factor pairs, {bad} failures",
    )


# ------------------------------------------------- check 3: algebra axioms

def check_inverse_semigroup_axioms(rng: random.Random, trials: int = 1000) -> CheckResult:
    bad = 0
    for _ in range(trials):
        v = _random_element(rng)
        w = _random_element(rng)
        z = _random_element(rng)
        if mul(mul(v, star(v)), v) != v:
            bad += 1
        if star(mul(v, w)) != mul(star(w), star(v)):
            bad += 1
        pv, pw = mul(v, star(v)), mul(w, star(w))
        if mul(pv, pw) != mul(pw, pv):
            bad += 1
        if mul(mul(v, w), z) != mul(v, mul(w, z)):
            bad += 1
        proj = semigroup.as_projection(pv)
        if proj is None or proj != semigroup.range_(v):
            bad += 1
    return CheckResult(
        "inverse-semigroup-axioms",
        bad == 0,
        f"{trials} random triples, {bad} failures",
    )


# ---------------------------------------------- check 4: ultrafilter count

def _all_filters_by_subsets(level: int) -> set[frozenset[Projection]]:
    """Every subset of the class universe that satisfies the filter axioms."""
    universe = profinite.class_universe(level)
    found = set()
    for mask in range(1, 1 << len(universe)):
        subset = frozenset(p for i, p in enumerate(universe) if mask >> i & 1)
        if profinite.is_filter(profinite.FilterSet(level, subset)):
            found.add(subset)
    return found


def check_ultrafilter_count(max_level: int = 10, subset_scan_level: int = 6) -> CheckResult:
    bad = []
    for level in range(1, max_level + 1):
        ufs = profinite.ultrafilters(level)
        supports = {
            f.elements
            for f in (
                profinite.filter_support(profinite.TruncatedProfinite(v, level))
                for v in range(level)
            )
        }
        if len(ufs) != level or {f.elements for f in ufs} != supports:
            bad.append(f"level {level}: wrong enumeration")
            continue
        if not all(profinite.is_maximal_filter(f) for f in ufs):
            bad.append(f"level {level}: non-maximal member")
        if level <= subset_scan_level:
            everything = _all_filters_by_subsets(level)
            maximal = {
                a for a in everything
                if not any(b > a for b in everything)
            }
            if maximal != supports:
                bad.append(f"level {level}: subset scan disagrees")
    return CheckResult(
        "ultrafilter-count",
        not bad,
        f"levels 1..{max_level}, subset scan to {subset_scan_level}"
        + ("" if not bad else "; " + "; ".join(bad)),
    )


# --------------------------------------- check 5: covers vs tight suprema

def check_cover_tight_equivalence(rng: random.Random, trials: int = 200) -> CheckResult:
    bad = 0
    for _ in range(trials):
        q = rng.randint(1, 12)
        p = Projection(rng.randrange(q), q)
        level = q * rng.randint(2, 6)
        children = projections.refine(p, level)
        keep = [c for c in children if rng.random() < 0.85]
        if rng.random() < 0.3:
            keep = list(children)
        cover = projections.is_cover(keep, p)
        tight = projections.is_tight_sup(keep, p)
        if cover != tight:
            bad += 1
        if cover != (len(keep) == len(children)):  # a strict subfamily misses a child
            bad += 1
        if len(keep) == len(children):
            for i in range(len(children)):
                rest = children[:i] + children[i + 1:]
                if projections.is_cover(rest, p) or projections.is_tight_sup(rest, p):
                    bad += 1
    return CheckResult(
        "cover-tight-equivalence",
        bad == 0,
        f"{trials} refinement families, {bad} failures",
    )


# ------------------------------------------- check 6: germ functoriality

def check_germ_functoriality(rng: random.Random, pairs: int = 500, aux: int = 200,
                             level: int = profinite.DEFAULT_LEVEL) -> CheckResult:
    bad = 0
    built = 0
    attempts = 0
    while built < pairs and attempts < 400 * pairs:
        attempts += 1
        v = _random_nonzero(rng, max_len=3)
        w = _random_nonzero(rng, max_len=3)
        prod = mul(v, w)
        if not prod:
            continue
        rng_prod = semigroup.range_(prod)
        if level % rng_prod.modulus:
            continue
        base = _point_in(rng_prod, level, rng)
        try:
            g1 = groupoid.germ_of(base, v)
            mid = groupoid.germ_source(g1)
            g2 = groupoid.germ_of(mid, w)
            composed = groupoid.compose(g1, g2)
            direct = groupoid.germ_of(base, prod)
        except ValueError:
            continue  # truncation too coarse for this sample; try another
        built += 1
        if composed != direct or not groupoid.germ_eq(composed, direct):
            bad += 1

    omitted = 0
    tries = 0
    while omitted < aux and tries < 400 * aux:
        tries += 1
        mp, m = (rng.choice([k for k in range(-9, 10) if k]) for _ in range(2))
        kk = rng.choice([k for k in range(-9, 10) if k])
        n, np_ = rng.randint(-12, 12), rng.randint(-12, 12)
        with_proj = normalize((sstar(mp), u(np_), e(kk), u(n), s(m)))
        without = normalize((sstar(mp), u(n + np_), s(m)))
        if not with_proj:
            continue
        rp = semigroup.range_(with_proj)
        if level % rp.modulus:
            continue
        base = _point_in(rp, level, rng)
        try:
            ga = groupoid.germ_of(base, with_proj)
            gb = groupoid.germ_of(base, without)
        except ValueError:
            continue
        omitted += 1
        if not groupoid.germ_eq(ga, gb):
            bad += 1

    scaled = 0
    tries = 0
    while scaled < aux and tries < 400 * aux:
        tries += 1
        k = rng.randint(-20, 20)
        n = rng.choice([x for x in range(-12, 13) if x])
        m = rng.randint(1, 12)
        lam = rng.choice([x for x in range(-5, 6) if x])
        direction = groupoid.AffineRational.reduced(k, n, m)
        if level % abs(direction.num):
            continue
        sol = None
        for r in range(abs(direction.num)):
            if (direction.den * r - direction.shift) % abs(direction.num) == 0:
                sol = r
                break
        if sol is None:
            continue
        base = _point_in(Projection(sol, abs(direction.num)), level, rng)
        scaled += 1
        if groupoid.germ_new(base, lam * k, lam * n, lam * m) != groupoid.germ_new(base, k, n, m):
            bad += 1

    complete = built == pairs and omitted == aux and scaled == aux
    return CheckResult(
        "germ-functoriality",
        bad == 0 and complete,
        f"{built} composable pairs, {omitted} projection omissions, "
        f"{scaled} rescalings at level {level}, {bad} failures"
        + ("" if complete else " (sampling incomplete at this level)"),
    )


# ------------------------------------- check 7: isotropy and translations

def check_isotropy_translation(rng: random.Random, trials: int = 100,
                               level: int = profinite.DEFAULT_LEVEL) -> CheckResult:
    bad = 0
    for _ in range(trials):
        while True:
            m = rng.randint(1, 12)
            n = rng.choice([x for x in range(-12, 13) if x])
            if m != n and abs(m - n) <= 12:
                break
        k = rng.randint(-100, 100)
        direction = groupoid.AffineRational.reduced(k, n, m)  # m != n keeps it off the identity
        hits = groupoid.isotropy_solutions(direction, level)
        if len(hits) > math.gcd(abs(m - n), level):
            bad += 1
        for r in hits:  # every reported solution really is fixed
            if ((direction.den - direction.num) * r.value - direction.shift) % level:
                bad += 1
    for q in range(1, 13):
        if level % q == 0 and not groupoid.translation_orbit_covers(q, level):
            bad += 1
    return CheckResult(
        "isotropy-translation",
        bad == 0,
        f"{trials} directions at level {level} plus all small translation orbits, {bad} failures",
    )


# ----------------------------------------- check 8: the upper-bound order

def check_upper_bound_lattice(rng: random.Random, shift_bound: int = 16,
                              mod_bound: int = 8, scan: int = 200,
                              families: int = 100, wh_pairs: int = 200,
                              wh_window: int = 60) -> CheckResult:
    bad = 0
    # The least join of a pair from the box has shift below
    # shift_bound + lcm(moduli) <= shift_bound + mod_bound*(mod_bound - 1);
    # a shorter scan could miss a real join, so clamp to that sound floor.
    scan = max(scan, shift_bound + mod_bound * (mod_bound - 1))
    elements = [PElem(k, m) for k in range(shift_bound + 1) for m in range(1, mod_bound + 1)]

    # Least-upper-bound law against a raw scan: every common upper bound
    # with shift and modulus at most `scan` must sit above the claimed
    # join (or none may exist).  An upper bound of both is any (k, m) with
    # k in both shift progressions and m a common multiple of the moduli;
    # the two coordinates vary independently, so the scan is two sweeps.
    # The same pass checks the bridge to the projection semilattice.
    for a in elements:
        pa = quasilattice.pelem_to_projection(a)
        for b in elements:
            ks = set(range(a.shift, scan + 1, a.modulus)) & set(
                range(b.shift, scan + 1, b.modulus)
            )
            common_lcm = math.lcm(a.modulus, b.modulus)
            join = sigma(a, b)
            has_join = join is not None
            if cub_exists(a, b) != has_join:
                bad += 1
            pb = quasilattice.pelem_to_projection(b)
            if (not projections.orthogonal(pa, pb)) != cub_exists(a, b):
                bad += 1
            if join is None:
                if ks:
                    bad += 1
                continue
            if not (qleq(a, join) and qleq(b, join)):
                bad += 1
            if any(m % join.modulus for m in range(common_lcm, scan + 1, common_lcm)):
                bad += 1
            if not all(k >= join.shift and (k - join.shift) % join.modulus == 0 for k in ks):
                bad += 1

    # raw product scan over the full (k, m) box on a subsample, in case the
    # two-sweep factorization above hides a joint failure
    for _ in range(40):
        a, b = rng.choice(elements), rng.choice(elements)
        join = sigma(a, b)
        found = False
        for m in range(1, scan + 1):
            if m % a.modulus or m % b.modulus:
                continue
            for k in range(scan + 1):
                if (
                    k >= a.shift and (k - a.shift) % a.modulus == 0
                    and k >= b.shift and (k - b.shift) % b.modulus == 0
                ):
                    found = True
                    if join is None or not qleq(join, PElem(k, m)):
                        bad += 1
        if join is not None and not found:  # the join itself fits in the box
            bad += 1

    # covering the cone == covering every (k, lcm) element
    for _ in range(families):
        fam = [
            PElem(rng.randint(0, 12), rng.randint(1, 8))
            for _ in range(rng.randint(1, 5))
        ]
        level = math.lcm(*(f.modulus for f in fam))
        definitional = all(
            any(cub_exists(PElem(k, level), f) for f in fam) for k in range(level)
        )
        if covers_P(fam) != definitional:
            bad += 1

    for _ in range(wh_pairs):
        a = PElem(rng.randint(0, 16), rng.randint(1, 8))
        b = PElem(rng.randint(0, 16), rng.randint(1, 8))
        if not wh_upper_agree(a, b, wh_window):
            bad += 1

    return CheckResult(
        "upper-bound-lattice",
        bad == 0,
        f"joins scanned to {scan} over shifts<={shift_bound} mods<={mod_bound}, "
        f"{families} cover families, {wh_pairs} window pairs, {bad} failures",
    )


# --------------------------------------------- check 9: words round-trip

def check_word_roundtrip(rng: random.Random, trials: int = 300) -> CheckResult:
    bad = 0
    for _ in range(trials):
        v = _random_nonzero(rng)
        word = to_word(v)
        back = normalize(parse_word(render_word(word)))
        if back != v:
            bad += 1
    return CheckResult(
        "word-roundtrip",
        bad == 0,
        f"{trials} canonical words re-parsed, {bad} failures",
    )


# ----------------------------------------------------------------- runner

def run_all(seed: int = 0, trials: int | None = None, window: int | None = None,
            level: int | None = None) -> list[CheckResult]:
    """Run every check with one seeded generator; returns results in order."""
    rng = random.Random(seed)
    lvl = profinite.DEFAULT_LEVEL if level is None else level

    def scaled(default: int) -> int:
        if trials is None:
            return default
        return max(1, default * trials // 1000)

    scan = 200 if window is None else max(20, 3 * window)
    wh_window = 60 if window is None else min(60, window)

    return [
        check_projection_window_laws(cap=window),
        check_two_factor_product_rule(rng, trials=scaled(1000), cap=window),
        check_inverse_semigroup_axioms(rng, trials=scaled(1000)),
        check_ultrafilter_count(),
        check_cover_tight_equivalence(rng, trials=scaled(200)),
        check_germ_functoriality(
            rng, pairs=scaled(500), aux=scaled(200), level=lvl
        ),
        check_isotropy_translation(rng, trials=scaled(100), level=lvl),
        check_upper_bound_lattice(
            rng,
            scan=min(scan, 200),
            families=scaled(100),
            wh_pairs=scaled(200),
            wh_window=wh_window,
        ),
        check_word_roundtrip(rng, trials=scaled(300)),
    ]
