"""Exit criteria for the package, one test per criterion.

Each test records its outcome in ``conftest.ACCEPTANCE``; the terminal
summary prints one PASS/FAIL line per criterion.
"""

import contextlib
import json
import time

import jsonschema

import conftest
from stickkit import coefficients, oracle
from stickkit.cli import main
from stickkit.coefficients import binomial, row_cache, trinomial, trinomial_row
from stickkit.identities import (
    Family,
    big_stick_puck,
    pascal_hockey_lhs,
    pascal_hockey_rhs,
    trinomial_hockey_lhs,
    trinomial_hockey_rhs,
    verify_family,
)
from stickkit.oracle import binomial_oracle, trinomial_oracle
from stickkit.report import REPORT_SCHEMA, canonical_json


@contextlib.contextmanager
def criterion(number, title):
    start = time.perf_counter()
    detail = ""
    try:
        yield
    except BaseException as exc:
        detail = f"({type(exc).__name__})"
        conftest.ACCEPTANCE[number] = (title, False, detail)
        raise
    else:
        detail = f"({(time.perf_counter() - start) * 1000:.1f} ms)"
        conftest.ACCEPTANCE[number] = (title, True, detail)


def cold_caches():
    row_cache().clear()
    coefficients._binomial.cache_clear()
    oracle._pow.cache_clear()


def timed(fn, *args):
    start = time.perf_counter()
    value = fn(*args)
    return value, time.perf_counter() - start


def test_01_pascal_stick_n1_k3():
    with criterion(1, "Pascal stick n=1 k=3: 1+3+10+35 = 56-7"):
        cold_caches()
        (lhs, t_l), (rhs, t_r) = timed(pascal_hockey_lhs, 1, 3), timed(pascal_hockey_rhs, 1, 3)
        assert lhs.terms == (1, 3, 10, 35) and lhs.total == 49
        assert rhs.terms == (56, -7) and rhs.total == 49
        assert t_l < 1e-3 and t_r < 1e-3


def test_02_trinomial_stick_n1_k4():
    with criterion(2, "trinomial stick n=1 k=4: 1+2+6+16+45 = 90-21+1"):
        cold_caches()
        (lhs, t_l), (rhs, t_r) = timed(trinomial_hockey_lhs, 1, 4), timed(trinomial_hockey_rhs, 1, 4)
        assert lhs.terms == (1, 2, 6, 16, 45) and lhs.total == 70
        assert rhs.terms == (90, -21, 1) and rhs.total == 70
        assert t_l < 1e-3 and t_r < 1e-3


TRINOMIAL_ROWS_0_TO_6 = [
    [1],
    [1, 1, 1],
    [1, 2, 3, 2, 1],
    [1, 3, 6, 7, 6, 3, 1],
    [1, 4, 10, 16, 19, 16, 10, 4, 1],
    [1, 5, 15, 30, 45, 51, 45, 30, 15, 5, 1],
    [1, 6, 21, 50, 90, 126, 141, 126, 90, 50, 21, 6, 1],
]


def test_03_trinomial_fixture():
    with criterion(3, "trinomial rows 0..6 exact"):
        assert [list(trinomial_row(n)) for n in range(7)] == TRINOMIAL_ROWS_0_TO_6


def test_04_big_stick_puck_sweep():
    with criterion(4, "big stick and puck, n <= 100"):
        start = time.perf_counter()
        for n in range(101):
            lhs, rhs = big_stick_puck(n)
            assert lhs.total == rhs.total
            assert rhs.terms == pascal_hockey_rhs(n, 3).terms
        assert time.perf_counter() - start < 1.0


def test_05_pascal_sweep():
    with criterion(5, "Pascal hockey stick, n, k <= 50"):
        cold_caches()
        start = time.perf_counter()
        report = verify_family(Family.PASCAL_HOCKEY, 50, 50)
        assert (report.checked, report.failed) == (2601, 0)
        assert time.perf_counter() - start < 10.0


def test_06_trinomial_sweep():
    with criterion(6, "trinomial hockey stick, n, k <= 50"):
        cold_caches()
        start = time.perf_counter()
        report = verify_family(Family.TRINOMIAL_HOCKEY, 50, 50)
        assert report.checked == 2601 and report.failed == 0
        assert time.perf_counter() - start < 30.0


def test_07_oracle_equivalence():
    with criterion(7, "recurrences equal polynomial expansion, n <= 60"):
        cold_caches()
        start = time.perf_counter()
        for n in range(61):
            for k in range(-n, n + 1):
                assert trinomial(n, k) == trinomial_oracle(n, k)
            for k in range(n + 1):
                assert binomial(n, k) == binomial_oracle(n, k)
        assert time.perf_counter() - start < 10.0


def test_08_pyramid_translation():
    with criterion(8, "Pascal pyramid form, n, k <= 20"):
        cold_caches()
        start = time.perf_counter()
        report = verify_family(Family.PYRAMID, 20, 20)
        assert report.checked == 441 and report.failed == 0
        for result in report.cases:
            n, k = result.case.n, result.case.k
            assert result.lhs.total == trinomial_hockey_lhs(n, k).total
            assert result.rhs.total == trinomial_hockey_rhs(n, k).total
        assert time.perf_counter() - start < 30.0


def test_09_inductive_steps():
    with criterion(9, "inductive-step identities, n, k <= 40"):
        for n in range(41):
            for k in range(41):
                step = pascal_hockey_rhs(n, k + 1).total - pascal_hockey_rhs(n, k).total
                assert step == binomial(n + 2 * k + 2, k + 1)
                step = trinomial_hockey_rhs(n, k + 1).total - trinomial_hockey_rhs(n, k).total
                assert step == trinomial(n + k + 1, n)


def test_10_cli_contract(capsys):
    with criterion(10, "CLI verify-all JSON and trinomial 1,4 highlight"):
        code = main(["verify", "--family", "all", "--n-max", "10", "--k-max", "10", "--format", "json"])
        out = capsys.readouterr().out
        assert code == 0
        docs = json.loads(out)
        assert len(docs) == len(Family)
        for doc in docs:
            jsonschema.validate(doc, REPORT_SCHEMA)
            assert doc["failed"] == 0
        assert canonical_json(json.loads(out)) == out

        code = main(["triangle", "--kind", "trinomial", "--rows", "7", "--highlight", "1,4"])
        text = capsys.readouterr().out
        assert code == 0
        lines = text.splitlines()
        assert len(lines) == 7
        sticks = [(i, cell) for i, line in enumerate(lines) for cell in _between(line, "[", "]")]
        pucks = [(i, cell) for i, line in enumerate(lines) for cell in _between(line, "(", ")")]
        assert sticks == [(1, "1"), (2, "2"), (3, "6"), (4, "16"), (5, "45")]
        assert pucks == [(6, "90"), (6, "21"), (6, "1")]


def _between(line, open_, close):
    cells, rest = [], line
    while open_ in rest:
        head, rest = rest.split(open_, 1)
        cell, rest = rest.split(close, 1)
        cells.append(cell)
    return cells
