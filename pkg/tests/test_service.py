import pytest
from fastapi.testclient import TestClient

from germkit.service.app import app

client = TestClient(app)


def post(path, payload):
    return client.post(path, json=payload)


def test_health():
    r = client.get("/health")
    assert r.status_code == 200 and r.json() == {"ok": True}


def test_normalize():
    r = post("/normalize", {"word": "u(3) s(2)"})
    assert r.status_code == 200
    assert r.json() == {"num": 2, "shift": 3, "den": 1, "dom": {"shift": 0, "modulus": 1}}
    r = post("/normalize", {"word": "e(2) u(1) e(2)"})
    assert r.json() == {"zero": True}


def test_normalize_syntax_error_carries_position():
    r = post("/normalize", {"word": "s(2) x(3)"})
    assert r.status_code == 422
    detail = r.json()["detail"]
    assert detail["position"] == 5
    assert "position 5:" in detail["message"]


def test_act():
    assert post("/act", {"word": "s(2)* u(1) s(3) s(5)* u(2) s(7)", "x": 9}).json() == {"value": 20}
    assert post("/act", {"word": "s(2)*", "x": 3}).json() == {"undefined": True}


def test_meet():
    r = post("/meet", {"p": {"shift": 1, "modulus": 2}, "q": {"shift": 2, "modulus": 3}})
    assert r.json() == {"shift": 5, "modulus": 6}
    r = post("/meet", {"p": {"shift": 1, "modulus": 4}, "q": {"shift": 3, "modulus": 4}})
    assert r.json() == {"zero": True}
    r = post("/meet", {"p": {"zero": True}, "q": {"shift": 0, "modulus": 2}})
    assert r.json() == {"zero": True}


def test_meet_rejects_malformed_union_member():
    r = post("/meet", {"p": {"zero": True, "shift": 1}, "q": {"shift": 0, "modulus": 2}})
    assert r.status_code == 422


def test_refine():
    r = post("/refine", {"p": {"shift": 1, "modulus": 2}, "modulus": 6})
    assert r.json() == [
        {"shift": 1, "modulus": 6},
        {"shift": 3, "modulus": 6},
        {"shift": 5, "modulus": 6},
    ]
    r = post("/refine", {"p": {"shift": 1, "modulus": 2}, "modulus": 3})
    assert r.status_code == 400 and r.json()["detail"] == "incompatible modulus"


def test_cover_and_tight_sup():
    family = [{"shift": 1, "modulus": 6}, {"shift": 3, "modulus": 6}, {"shift": 5, "modulus": 6}]
    p = {"shift": 1, "modulus": 2}
    assert post("/cover", {"p": p, "family": family}).json() == {"value": True}
    assert post("/tight-sup", {"p": p, "family": family}).json() == {"value": True}
    assert post("/cover", {"p": p, "family": family[:-1]}).json() == {"value": False}
    r = post("/cover", {"p": p, "family": [{"shift": 0, "modulus": 2}]})
    assert r.status_code == 400 and r.json()["detail"] == "not a subset of interval"


def test_ultrafilters():
    r = post("/ultrafilters", {"level": 4})
    filters = r.json()
    assert len(filters) == 4
    assert filters[0] == [
        {"shift": 0, "modulus": 1},
        {"shift": 0, "modulus": 2},
        {"shift": 0, "modulus": 4},
    ]


def test_germ():
    r = post("/germ", {"value": 2, "level": 27720, "shift": 1, "num": 3, "den": 2})
    assert r.json() == {"value": 2, "level": 27720, "shift": 1, "num": 3, "den": 2}
    # scaled triple comes back reduced
    r = post("/germ", {"value": 2, "level": 27720, "shift": 2, "num": 6, "den": 4})
    assert r.json() == {"value": 2, "level": 27720, "shift": 1, "num": 3, "den": 2}
    r = post("/germ", {"value": 1, "level": 6, "shift": 0, "num": 2, "den": 1})
    assert r.status_code == 400 and r.json()["detail"] == "base not in domain"
    r = post("/germ", {"value": 1, "level": 6, "shift": 0, "num": 4, "den": 1})
    assert r.status_code == 400 and r.json()["detail"] == "insufficient level"


def test_compose():
    g1 = {"value": 2, "level": 27720, "shift": 1, "num": 3, "den": 2}
    g2 = {"value": 1, "level": 18480, "shift": 5, "num": 7, "den": 5}
    r = post("/compose", {"g1": g1, "g2": g2})
    assert r.json() == {"value": 2, "level": 27720, "shift": 20, "num": 21, "den": 10}
    bad = {"value": 8, "level": 18480, "shift": 5, "num": 7, "den": 5}
    r = post("/compose", {"g1": g1, "g2": bad})
    assert r.status_code == 400 and r.json()["detail"] == "source/range mismatch"


def test_sigma():
    r = post("/sigma", {"a": {"shift": 0, "modulus": 2}, "b": {"shift": 1, "modulus": 3}})
    assert r.json() == {"shift": 4, "modulus": 6}
    r = post("/sigma", {"a": {"shift": 0, "modulus": 2}, "b": {"shift": 1, "modulus": 2}})
    assert r.json() == {"none": True}


def test_covers():
    r = post("/covers-p", {"family": [{"shift": 0, "modulus": 2}, {"shift": 1, "modulus": 2}]})
    assert r.json() == {"value": True}
    r = post("/covers-p", {"family": []})
    assert r.status_code == 400 and r.json()["detail"] == "empty family"
    r = post(
        "/covers-interval",
        {
            "base": {"shift": 1, "modulus": 2},
            "family": [{"shift": 1, "modulus": 4}, {"shift": 3, "modulus": 4}],
        },
    )
    assert r.json() == {"value": True}
    r = post(
        "/covers-interval",
        {"base": {"shift": 1, "modulus": 2}, "family": [{"shift": 0, "modulus": 2}]},
    )
    assert r.status_code == 400 and r.json()["detail"] == "not in interval"


def test_oracle_check():
    r = post("/oracle-check", {"word": "s(2)* u(2)", "window": 40})
    assert r.json() == {"agree": True, "window": 40, "defined": 41}


def test_verify_small():
    r = post("/verify", {"seed": 1, "trials": 20, "window": 20})
    body = r.json()
    assert r.status_code == 200
    assert body["ok"] is True
    assert len(body["checks"]) == 9
    assert all(c["passed"] for c in body["checks"])
