"""The HTTP face of the toolkit.

Stateless: every endpoint parses a request, calls the corresponding core
operation and serializes the canonical form back.  Domain errors map to
400, malformed word text to 422 with the character position; the CLI
turns those into its exit codes.
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from .. import groupoid, profinite, projections, quasilattice, semigroup
from ..oracle import pmap_of_word
from ..profinite import TruncatedProfinite
from ..verify import run_all
from ..words import WordSyntaxError, parse_word
from . import schemas as sc

app = FastAPI(title="germkit", version="0.1.0")


@app.exception_handler(WordSyntaxError)
async def _syntax_error(request, exc: WordSyntaxError):
    return JSONResponse(
        status_code=422,
        content={"detail": {"message": str(exc), "position": exc.position}},
    )


@app.exception_handler(ValueError)
async def _domain_error(request, exc: ValueError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.get("/health")
async def health() -> dict:
    return {"ok": True}


@app.post("/normalize", response_model=sc.ElementOut)
async def normalize(body: sc.WordIn):
    return sc.element_out(semigroup.normalize(parse_word(body.word)))


@app.post("/act", response_model=sc.ValueOut | sc.UndefinedOut)
async def act(body: sc.ActIn):
    y = semigroup.apply(semigroup.normalize(parse_word(body.word)), body.x)
    return sc.UndefinedOut() if y is None else sc.ValueOut(value=y)


@app.post("/meet", response_model=sc.ProjectionOut)
async def meet(body: sc.MeetIn):
    return sc.projection_out(
        projections.meet(sc.projection_in(body.p), sc.projection_in(body.q))
    )


@app.post("/refine", response_model=list[sc.ClassOut])
async def refine(body: sc.RefineIn):
    parts = projections.refine(sc.projection_in(body.p), body.modulus)
    return [sc.ClassOut(shift=c.shift, modulus=c.modulus) for c in parts]


@app.post("/cover", response_model=sc.BoolOut)
async def cover(body: sc.FamilyIn):
    family = [sc.projection_in(f) for f in body.family]
    return sc.BoolOut(value=projections.is_cover(family, sc.projection_in(body.p)))


@app.post("/tight-sup", response_model=sc.BoolOut)
async def tight_sup(body: sc.FamilyIn):
    family = [sc.projection_in(f) for f in body.family]
    return sc.BoolOut(value=projections.is_tight_sup(family, sc.projection_in(body.p)))


@app.post("/ultrafilters", response_model=list[list[sc.ClassOut]])
async def ultrafilters(body: sc.UltraIn):
    return [
        [sc.ClassOut(shift=p.shift, modulus=p.modulus) for p in f.sorted_elements()]
        for f in profinite.ultrafilters(body.level)
    ]


@app.post("/germ", response_model=sc.GermOut)
async def germ(body: sc.GermIn):
    g = groupoid.germ_new(
        TruncatedProfinite(body.value, body.level), body.shift, body.num, body.den
    )
    return sc.germ_out(g)


@app.post("/compose", response_model=sc.GermOut)
async def compose(body: sc.ComposeIn):
    def build(m: sc.GermIn) -> groupoid.Germ:
        return groupoid.germ_new(
            TruncatedProfinite(m.value, m.level), m.shift, m.num, m.den
        )

    return sc.germ_out(groupoid.compose(build(body.g1), build(body.g2)))


@app.post("/sigma", response_model=sc.PElemOut | sc.NoneOut)
async def sigma(body: sc.SigmaIn):
    join = quasilattice.sigma(sc.pelem_in(body.a), sc.pelem_in(body.b))
    return sc.NoneOut() if join is None else sc.pelem_out(join)


@app.post("/covers-p", response_model=sc.BoolOut)
async def covers_p(body: sc.PFamilyIn):
    return sc.BoolOut(
        value=quasilattice.covers_P([sc.pelem_in(f) for f in body.family])
    )


@app.post("/covers-interval", response_model=sc.BoolOut)
async def covers_interval(body: sc.PIntervalIn):
    return sc.BoolOut(
        value=quasilattice.covers_interval(
            [sc.pelem_in(f) for f in body.family], sc.pelem_in(body.base)
        )
    )


@app.post("/oracle-check", response_model=sc.OracleCheckOut)
async def oracle_check(body: sc.OracleCheckIn):
    word = parse_word(body.word)
    element = semigroup.normalize(word)
    table = pmap_of_word(word, body.window).mapping()
    ok = all(
        semigroup.apply(element, x) == table.get(x)
        for x in range(-body.window, body.window + 1)
    )
    return sc.OracleCheckOut(agree=ok, window=body.window, defined=len(table))


@app.post("/verify", response_model=sc.VerifyOut)
async def verify(body: sc.VerifyIn):
    results = run_all(
        seed=body.seed, trials=body.trials, window=body.window, level=body.level
    )
    return sc.VerifyOut(
        ok=all(r.passed for r in results),
        checks=[
            sc.CheckOut(name=r.name, passed=r.passed, detail=r.detail)
            for r in results
        ],
    )
