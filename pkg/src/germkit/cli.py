"""Command-line client for the toolkit service.

The CLI never computes anything itself: each command is serialized into a
request against the HTTP service -- an in-process instance by default, or
a remote one named with ``--server``.  Responses come back as canonical-
form JSON and are printed either as the compact text forms (``elem(...)``,
``p(...)``, ``germ(...)``, ``pn(...)``) or, with ``--json``, one object
per line.

Exit codes: 0 success, 1 domain error, 2 malformed input, 3 failed verify.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import re
import sys

import httpx

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PARSE = 2
EXIT_VERIFY = 3


class ArgumentFormError(ValueError):
    pass


# --------------------------------------------------------- request layer

def _request(path: str, payload: dict, server: str | None) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=120.0) as client:
            return client.post(path, json=payload)

    async def go() -> httpx.Response:
        from .service.app import app

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://germkit", timeout=None
        ) as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


# ------------------------------------------------------- argument parsing

_PROJ = re.compile(r"p\((-?\d+),(-?\d+)\)\Z")
_GERM = re.compile(r"germ\((-?\d+),(-?\d+);\s*(-?\d+),(-?\d+),(-?\d+)\)\Z")


def parse_projection_arg(text: str) -> dict:
    if text.strip() == "0":
        return {"zero": True}
    m = _PROJ.match(text.strip())
    if not m:
        raise ArgumentFormError(f"expected p(shift,modulus) or 0, got {text!r}")
    return {"shift": int(m.group(1)), "modulus": int(m.group(2))}


def parse_germ_arg(text: str) -> dict:
    m = _GERM.match(text.strip())
    if not m:
        raise ArgumentFormError(f"expected germ(value,level; k,n,m), got {text!r}")
    value, level, shift, num, den = (int(g) for g in m.groups())
    return {"value": value, "level": level, "shift": shift, "num": num, "den": den}


def _pairs(numbers: list[int], what: str) -> list[dict]:
    if not numbers or len(numbers) % 2:
        raise ArgumentFormError(f"{what} takes shift/modulus pairs, got {len(numbers)} numbers")
    return [
        {"shift": numbers[i], "modulus": numbers[i + 1]}
        for i in range(0, len(numbers), 2)
    ]


# -------------------------------------------------------------- rendering

def render_projection(obj: dict) -> str:
    if obj.get("zero"):
        return "0"
    return f"p({obj['shift']},{obj['modulus']})"


def render_element(obj: dict) -> str:
    if obj.get("zero"):
        return "0"
    return f"elem({obj['num']},{obj['shift']},{obj['den']},{render_projection(obj['dom'])})"


def render_germ(obj: dict) -> str:
    return f"germ({obj['value']},{obj['level']}; {obj['shift']},{obj['num']},{obj['den']})"


def render_pelem(obj: dict) -> str:
    return f"pn({obj['shift']},{obj['modulus']})"


def render_filter(classes: list[dict]) -> str:
    return "{" + ", ".join(render_projection(c) for c in classes) + "}"


def _bool_text(value: bool) -> str:
    return "true" if value else "false"


def _emit_json(data) -> None:
    if isinstance(data, list):
        for item in data:
            print(json.dumps(item, sort_keys=True))
    else:
        print(json.dumps(data, sort_keys=True))


# ------------------------------------------------------------- the parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="germkit",
        description="Exact arithmetic for the shift-and-scale inverse semigroup, "
        "its projections, germs and quasi-lattice order.",
    )
    parser.add_argument("--json", action="store_true", help="print canonical-form JSON, one object per line")
    parser.add_argument("--server", metavar="URL", help="talk to a running service instead of in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norm", help="normalize a word to its canonical element")
    p.add_argument("word")

    p = sub.add_parser("meet", help="product of two projections")
    p.add_argument("p")
    p.add_argument("q")

    p = sub.add_parser("refine", help="split a projection into classes at a finer modulus")
    p.add_argument("p")
    p.add_argument("modulus", type=int)

    p = sub.add_parser("cover", help="does the family cover the projection?")
    p.add_argument("p")
    p.add_argument("family", nargs="+")

    p = sub.add_parser("tight", help="is the family a tight supremum of the projection?")
    p.add_argument("p")
    p.add_argument("family", nargs="+")

    p = sub.add_parser("ultra", help="all maximal filters at a level")
    p.add_argument("level", type=int)

    p = sub.add_parser("act", help="apply a word to an integer")
    p.add_argument("word")
    p.add_argument("x", type=int)

    p = sub.add_parser("germ", help="build and validate a germ")
    p.add_argument("value", type=int)
    p.add_argument("level", type=int)
    p.add_argument("shift", type=int)
    p.add_argument("num", type=int)
    p.add_argument("den", type=int)

    p = sub.add_parser("compose", help="compose two germs")
    p.add_argument("g1")
    p.add_argument("g2")

    p = sub.add_parser("sigma", help="least common upper bound in the cone")
    p.add_argument("ka", type=int)
    p.add_argument("ma", type=int)
    p.add_argument("kb", type=int)
    p.add_argument("mb", type=int)

    p = sub.add_parser("covers-p", help="does the family cover the cone? (shift/modulus pairs)")
    p.add_argument("numbers", type=int, nargs="+")

    p = sub.add_parser(
        "covers-interval",
        help="does the family cover the part of the cone above a base? (base pair, then pairs)",
    )
    p.add_argument("numbers", type=int, nargs="+")

    p = sub.add_parser("oracle-check", help="compare a word against its window table")
    p.add_argument("word")
    p.add_argument("--window", type=int, default=40)

    p = sub.add_parser("verify", help="run the full self-check suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--level", type=int, default=None)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


# ------------------------------------------------------------ dispatching

def _build_request(args: argparse.Namespace) -> tuple[str, dict]:
    cmd = args.command
    if cmd == "norm":
        return "/normalize", {"word": args.word}
    if cmd == "meet":
        return "/meet", {"p": parse_projection_arg(args.p), "q": parse_projection_arg(args.q)}
    if cmd == "refine":
        return "/refine", {"p": parse_projection_arg(args.p), "modulus": args.modulus}
    if cmd in ("cover", "tight"):
        path = "/cover" if cmd == "cover" else "/tight-sup"
        return path, {
            "p": parse_projection_arg(args.p),
            "family": [parse_projection_arg(f) for f in args.family],
        }
    if cmd == "ultra":
        return "/ultrafilters", {"level": args.level}
    if cmd == "act":
        return "/act", {"word": args.word, "x": args.x}
    if cmd == "germ":
        return "/germ", {
            "value": args.value, "level": args.level,
            "shift": args.shift, "num": args.num, "den": args.den,
        }
    if cmd == "compose":
        return "/compose", {"g1": parse_germ_arg(args.g1), "g2": parse_germ_arg(args.g2)}
    if cmd == "sigma":
        return "/sigma", {
            "a": {"shift": args.ka, "modulus": args.ma},
            "b": {"shift": args.kb, "modulus": args.mb},
        }
    if cmd == "covers-p":
        return "/covers-p", {"family": _pairs(args.numbers, "covers-p")}
    if cmd == "covers-interval":
        pairs = _pairs(args.numbers, "covers-interval")
        if len(pairs) < 2:
            raise ArgumentFormError("covers-interval needs a base pair and at least one family pair")
        return "/covers-interval", {"base": pairs[0], "family": pairs[1:]}
    if cmd == "oracle-check":
        return "/oracle-check", {"word": args.word, "window": args.window}
    if cmd == "verify":
        return "/verify", {
            "seed": args.seed, "trials": args.trials,
            "window": args.window, "level": args.level,
        }
    raise AssertionError(cmd)


def _print_response(cmd: str, data, as_json: bool) -> int:
    if cmd == "verify":
        if as_json:
            _emit_json(data["checks"])
            _emit_json({"ok": data["ok"]})
        else:
            for check in data["checks"]:
                mark = "ok  " if check["passed"] else "FAIL"
                print(f"{mark} {check['name']}: {check['detail']}")
            failed = [c for c in data["checks"] if not c["passed"]]
            print("all checks passed" if not failed else f"{len(failed)} check(s) failed")
        return EXIT_OK if data["ok"] else EXIT_VERIFY

    if as_json:
        _emit_json(data)
        return EXIT_OK

    if cmd == "norm":
        print(render_element(data))
    elif cmd in ("meet",):
        print(render_projection(data))
    elif cmd == "refine":
        print(" ".join(render_projection(c) for c in data) if data else "(empty)")
    elif cmd in ("cover", "tight", "covers-p", "covers-interval"):
        print(_bool_text(data["value"]))
    elif cmd == "ultra":
        for f in data:
            print(render_filter(f))
    elif cmd == "act":
        print("undefined" if data.get("undefined") else data["value"])
    elif cmd in ("germ", "compose"):
        print(render_germ(data))
    elif cmd == "sigma":
        print("none" if data.get("none") else render_pelem(data))
    elif cmd == "oracle-check":
        verdict = "agree" if data["agree"] else "DISAGREE"
        print(f"{verdict} on window {data['window']} ({data['defined']} points defined)")
    else:
        print(json.dumps(data, sort_keys=True))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return EXIT_OK

    try:
        path, payload = _build_request(args)
    except ArgumentFormError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    try:
        response = _request(path, payload, args.server)
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        return EXIT_DOMAIN

    if response.status_code == 422:
        detail = response.json().get("detail")
        if isinstance(detail, dict) and "position" in detail:
            print(f"error: {detail['message']}", file=sys.stderr)
        else:
            print(f"error: malformed request: {detail}", file=sys.stderr)
        return EXIT_PARSE
    if response.status_code != 200:
        detail = response.json().get("detail", response.text)
        print(f"error: {detail}", file=sys.stderr)
        return EXIT_DOMAIN

    return _print_response(args.command, response.json(), args.json)


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
