import json
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from domfractal import counting
from domfractal.counting import SEED, STEP_POLYNOMIALS, CountVector, count_mds, growth_report, step_counts
from domfractal.graph import Family
from domfractal.verify import PUBLISHED_COUNTS

GOLDEN = Path(__file__).parent / "golden"
WEB, SIERP = Family.PSEUDOFRACTAL_WEB, Family.SIERPINSKI


def test_polynomial_term_counts():
    assert {k: len(p.monomials) for k, p in STEP_POLYNOMIALS.items()} == {"a": 6, "b": 9, "c": 9, "d": 7, "e": 1}
    assert (1, (0, 0, 0, 0, 3)) in STEP_POLYNOMIALS["d"].monomials


def test_polynomial_evaluation():
    assert STEP_POLYNOMIALS["e"]((0, 5, 0, 0, 2)) == 20
    assert STEP_POLYNOMIALS["a"]((1, 1, 1, 1, 1)) == 6 + 2 + 3 + 9 + 6 + 1


def test_seed_is_table_column():
    assert SEED.as_tuple() == PUBLISHED_COUNTS[3] and SEED.n == 3


@pytest.mark.parametrize("n", [4, 5, 6])
def test_recurrence_reproduces_table(n):
    assert counting.sierpinski_counts(n).as_tuple() == PUBLISHED_COUNTS[n]


def test_single_step():
    assert step_counts(SEED) == CountVector(392, 381, 356, 315, 3, n=4)


def test_count_mds_examples():
    assert count_mds(SIERP, 2) == 6
    assert count_mds(WEB, 4) == 1
    assert count_mds(SIERP, 6) == 84494691003170101058068575600


def test_web_small_counts_from_fixtures():
    assert [count_mds(WEB, n) for n in (1, 2)] == [3, 6]


def test_growth_report_rows():
    rows = {r.n: r for r in growth_report(8)}
    assert (rows[4].n_vertices, rows[4].mds_count) == (42, 392)
    assert (rows[3].n_vertices, rows[3].mds_count) == (15, 2)
    golden = json.loads((GOLDEN / "count_sierpinski_n8.json").read_text())
    assert rows[8].counts.to_json() == golden["counts"]
    assert rows[8].source == "recurrence"


@pytest.mark.parametrize("n", range(4, 12))
def test_counts_grow(n):
    prev, cur = counting.sierpinski_counts(n), counting.sierpinski_counts(n + 1)
    assert all(y > x for x, y in zip(prev.as_tuple()[:4], cur.as_tuple()[:4]))


def test_counts_are_ints():
    for n in range(1, 10):
        assert all(type(x) is int for x in counting.sierpinski_counts(n).as_tuple())


def test_report_json_uses_strings():
    data = counting.report_json(6)
    assert data["family"] == "Sierpinski" and data["method"] == "recurrence"
    row6 = data["rows"][5]
    assert row6["N"] == "366" and row6["counts"]["a"] == "84494691003170101058068575600"
    assert all(isinstance(v, str) for r in data["rows"] for v in r["counts"].values())


def test_web_report():
    data = counting.report_json(5, WEB)
    assert [r["counts"]["a"] for r in data["rows"]] == ["3", "6", "1", "1", "1"]
    assert data["rows"][4]["source"] == "uniqueness theorem"


@pytest.mark.parametrize("n", range(1, 6))
def test_transfer_method_web(n):
    assert count_mds(WEB, n, "transfer") == count_mds(WEB, n)


def test_guards():
    with pytest.raises(ValueError):
        CountVector(1, -1, 0, 0, 0, n=3)
    with pytest.raises(ValueError):
        step_counts(CountVector(6, 1, 0, 0, 1, n=2))
    with pytest.raises(ValueError):
        count_mds(SIERP, 0)
    with pytest.raises(ValueError):
        counting.sierpinski_counts(3, method="guess")


small = st.integers(0, 10**6)


@given(st.tuples(*[small] * 5), st.tuples(*[small] * 5))
def test_step_monotone(x, bump):
    y = tuple(a + b for a, b in zip(x, bump))
    sx = step_counts(CountVector(*x, n=3)).as_tuple()
    sy = step_counts(CountVector(*y, n=3)).as_tuple()
    assert all(p <= q for p, q in zip(sx, sy))
