from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from bcross.errors import BudgetExceeded
from bcross.groebner import (
    ModP,
    MonomialIdeal,
    buchberger,
    check_dreitenoere,
    initial_ideal,
    is_groebner_basis,
    minors_ideal,
    normal_form,
    s_polynomial,
    to_mod_p,
)
from bcross.monomials import Polynomial, minor, mono_mul, monomial, phi, sr_generators


def x(i, j, n):
    return monomial([(i, j)], n)


def _symbols(n):
    """Matrix variables, largest rank first: sympy's grevlex then matches ours."""
    entries = sorted(((i, j) for i in range(1, n + 1) for j in range(1, n + 1)),
                     key=lambda e: -phi(*e, n))
    return entries, sympy.symbols([f"x{i}{j}" for i, j in entries])


def to_sympy(p, n):
    entries, syms = _symbols(n)
    expr = 0
    for m, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for (i, j), s in zip(entries, syms):
            term *= s ** m[x(i, j, n).index(1)]
        expr += term
    return sympy.expand(expr)


def sympy_basis(polys, n):
    _, syms = _symbols(n)
    G = sympy.groebner([to_sympy(p, n) for p in polys], *syms, order="grevlex", domain="QQ")
    return {sympy.expand(g) for g in G.exprs}


def test_normal_form_examples():
    n = 2
    det = minor((1, 2), (1, 2), n)
    assert not normal_form(det, [det])
    off = Polynomial.from_monomial(mono_mul(x(1, 2, n), x(2, 1, n)), n)
    diag = Polynomial.from_monomial(mono_mul(x(1, 1, n), x(2, 2, n)), n)
    assert normal_form(off, [det]) == diag
    assert not normal_form(Polynomial({}, n), [det])


def test_principal_ideals():
    det = minor((1, 2, 3), (1, 2, 3), 3)
    G = buchberger([det])
    assert len(G.gens) == 1 and G.input_was_gb
    assert initial_ideal(G) == MonomialIdeal([det.lm], 3)


def test_minors_n3_k1_already_a_basis():
    I = minors_ideal(3, 1)
    assert len(I.gens) == 9 and is_groebner_basis(I.gens)
    G = buchberger(I.gens)
    assert G.input_was_gb
    assert initial_ideal(G) == MonomialIdeal(sr_generators(3, 1), 3)
    assert sympy_basis(G.gens, 3) == {to_sympy(g, 3) for g in G.gens}


def test_initial_ideal_n2():
    G = buchberger(minors_ideal(2, 1).gens)
    assert initial_ideal(G).mingens == [mono_mul(x(1, 2, 2), x(2, 1, 2))]


exps = st.lists(st.integers(0, 2), min_size=4, max_size=4).map(tuple)
polys = st.dictionaries(exps, st.integers(-2, 2).filter(bool), min_size=1, max_size=3)


@settings(max_examples=40, deadline=None)
@given(st.lists(polys, min_size=1, max_size=3))
def test_buchberger_matches_sympy(raw):
    n = 2
    gens = [Polynomial({m: Fraction(c) for m, c in t.items()}, n) for t in raw]
    G = buchberger(gens, max_seconds=20)
    assert is_groebner_basis(G.gens)
    assert {to_sympy(g, n) for g in G.gens} == sympy_basis(gens, n)


def test_s_polynomial_cancels_leads():
    n = 2
    f = Polynomial({x(2, 1, n): Fraction(1), x(1, 1, n): Fraction(3)}, n)
    g = Polynomial({mono_mul(x(2, 1, n), x(1, 2, n)): Fraction(2), x(2, 2, n): Fraction(1)}, n)
    s = s_polynomial(f, g)
    assert mono_mul(x(2, 1, n), x(1, 2, n)) not in s.terms


def test_mod_p_agrees():
    G = buchberger([to_mod_p(p) for p in minors_ideal(3, 1).gens])
    assert isinstance(G.gens[0].lc, ModP)
    assert len(G.gens) == 9


def test_budget():
    gens = minors_ideal(4, 2).gens
    with pytest.raises(BudgetExceeded):
        buchberger(gens, max_pairs=1, check_input=False)


@pytest.mark.parametrize("n,k", [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)])
def test_equivalence_all_true(n, k):
    rep = check_dreitenoere(n, k)
    assert rep.agree and rep.all_true and rep.containment
    assert rep.facets == rep.lower and rep.initial_squarefree
    assert rep.modp_agree


def test_equivalence_42():
    rep = check_dreitenoere(4, 2, max_seconds=300)
    assert rep.all_true and rep.containment
