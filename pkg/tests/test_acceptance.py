"""Acceptance suite: each test runs one criterion at full size and prints
one PASS/FAIL line (visible with ``pytest -v -s`` or on failure)."""

import random
import time

from germkit.cli import EXIT_OK, EXIT_PARSE, main
from germkit.semigroup import normalize, to_word
from germkit.verify import (
    check_cover_tight_equivalence,
    check_germ_functoriality,
    check_inverse_semigroup_axioms,
    check_isotropy_translation,
    check_projection_window_laws,
    check_two_factor_product_rule,
    check_ultrafilter_count,
    check_upper_bound_lattice,
    check_word_roundtrip,
    _random_element,
)
from germkit.words import render_word


def report(number: int, result, elapsed: float | None = None) -> None:
    verdict = "PASS" if result.passed else "FAIL"
    timing = f" [{elapsed:.2f}s]" if elapsed is not None else ""
    line = f"criterion {number}: {verdict}{timing} -- {result.name}: {result.detail}"
    print(line)
    assert result.passed, line


def test_criterion_1_projection_window_laws():
    start = time.perf_counter()
    result = check_projection_window_laws(bound=12)
    elapsed = time.perf_counter() - start
    report(1, result, elapsed)
    assert elapsed < 10.0, f"criterion 1 took {elapsed:.2f}s, bound is 10s"


def test_criterion_2_two_factor_product_rule():
    result = check_two_factor_product_rule(random.Random(2), trials=1000)
    report(2, result)


def test_criterion_3_inverse_semigroup_axioms():
    result = check_inverse_semigroup_axioms(random.Random(3), trials=1000)
    report(3, result)


def test_criterion_4_ultrafilter_enumeration():
    start = time.perf_counter()
    result = check_ultrafilter_count()
    elapsed = time.perf_counter() - start
    report(4, result, elapsed)
    assert elapsed < 30.0, f"criterion 4 took {elapsed:.2f}s, bound is 30s"


def test_criterion_5_cover_tight_equivalence():
    result = check_cover_tight_equivalence(random.Random(5), trials=200)
    report(5, result)


def test_criterion_6_germ_functoriality():
    result = check_germ_functoriality(random.Random(6), pairs=500, aux=200, level=27720)
    report(6, result)


def test_criterion_7_isotropy_and_translation():
    result = check_isotropy_translation(random.Random(7), trials=100, level=27720)
    report(7, result)


def test_criterion_8_upper_bound_lattice():
    result = check_upper_bound_lattice(random.Random(8))
    report(8, result)


def test_criterion_9_word_roundtrip_data_path():
    result = check_word_roundtrip(random.Random(9), trials=300)
    report(9, result)


def test_criterion_9_cli_roundtrips(capsys):
    rng = random.Random(99)
    done = 0
    while done < 300:
        v = _random_element(rng)
        if not v:
            continue
        text = render_word(to_word(v))
        code = main(["norm", text])
        out = capsys.readouterr().out.strip()
        assert code == EXIT_OK and out == str(v), f"{text!r} -> {out!r}, want {v}"
        assert normalize(to_word(v)) == v
        done += 1
    print(f"criterion 9: PASS -- 300 canonical elements round-tripped through the CLI")


def test_criterion_9_cli_malformed_input(capsys):
    code = main(["norm", "s(2) x(3)"])
    captured = capsys.readouterr()
    assert code == EXIT_PARSE
    assert "position 5" in captured.err
    code = main(["norm", "u(1) s(0)*"])
    captured = capsys.readouterr()
    assert code == EXIT_PARSE and "position 5" in captured.err
    print("criterion 9: PASS -- malformed words exit 2 and name the position")


def test_criterion_9_verify_deterministic(capsys):
    argv = ["verify", "--seed", "1", "--trials", "100", "--window", "40"]
    code1 = main(list(argv))
    first = capsys.readouterr().out
    code2 = main(list(argv))
    second = capsys.readouterr().out
    assert code1 == code2 == EXIT_OK
    assert first == second, "verify output differs between identical runs"
    assert first.strip().endswith("all checks passed")
    print("criterion 9: PASS -- verify --seed 1 is bit-identical across runs")
