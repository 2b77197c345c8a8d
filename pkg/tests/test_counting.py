from math import comb

import pytest
import sympy

from bcross.complexes import enumerate_facets
from bcross.counting import (
    bareiss_det,
    bounds_report,
    catalan,
    hankel_catalan,
    typeA_count,
    typeA_product,
    typeB_lower,
    typeB_lower_forms,
    typeB_upper,
)
from bcross.polygon import Mode, ground_set


def test_catalan():
    assert [catalan(m) for m in (0, 4, 6)] == [1, 14, 132]
    with pytest.raises(ValueError):
        catalan(-1)


def test_bareiss_against_sympy():
    import random
    rng = random.Random(5)
    for size in range(0, 6):
        for _ in range(20):
            M = [[rng.randint(-4, 4) for _ in range(size)] for _ in range(size)]
            assert bareiss_det(M) == (sympy.Matrix(M).det() if size else 1)


@pytest.mark.parametrize("n,k,count", [(5, 1, 5), (8, 2, 84), (7, 3, 1), (9, 4, 1)])
def test_typeA_examples(n, k, count):
    assert typeA_count(n, k) == count


@pytest.mark.parametrize("n", range(3, 13))
def test_typeA_forms_agree(n):
    for k in range(1, (n - 1) // 2 + 1):
        assert hankel_catalan(n, k) == typeA_product(n, k)


@pytest.mark.parametrize("n", range(2, 13))
def test_typeB_forms_agree(n):
    for k in range(1, n):
        d1, d2, p = typeB_lower_forms(n, k)
        assert d1 == d2 == p
    assert typeB_lower(n, n - 1) == n
    assert typeB_lower(n, 1) == comb(2 * n - 2, n - 1)


def test_typeB_lower_examples():
    assert typeB_lower(3, 1) == 6
    assert typeB_lower(4, 2) == 20
    assert typeB_lower(5, 3) == 50
    assert typeB_lower(5, 2) == 400 - 225


def test_upper_bounds():
    assert typeB_upper(4, 2) == (20, 40)
    assert typeB_upper(3, 1)[0] == 6
    op, lit = typeB_upper(4, 1)
    assert op == lit == 20


@pytest.mark.parametrize("n", range(2, 9))
def test_lower_below_upper(n):
    for k in range(1, n):
        assert typeB_lower(n, k) <= typeB_upper(n, k)[0]


@pytest.mark.parametrize("n,k", [(3, 1), (4, 2), (5, 2)])
def test_bounds_report(n, k):
    rep = bounds_report(n, k, with_enumeration=True)
    assert rep.sandwich_ok and rep.lower_is_tight
    assert rep.enumerated == len(enumerate_facets(ground_set(Mode.B, n, k)))


def test_bounds_report_42_literal_discrepancy():
    d = bounds_report(4, 2, with_enumeration=True).to_dict()
    assert d["lower"] == d["enumerated"] == d["upper_operative"] == 20
    assert d["upper_literal"] == 40 and not d["literal_matches_operative"]


def test_range_errors():
    with pytest.raises(ValueError):
        typeA_count(4, 2)
    with pytest.raises(ValueError):
        typeB_lower(3, 3)
