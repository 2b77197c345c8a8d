from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bcross.complexes import enumerate_facets, face_indices
from bcross.monomials import (
    Polynomial,
    band,
    class_crossings,
    compare,
    divides,
    minor,
    mono_lcm,
    mono_mul,
    mono_str,
    monomial,
    n_set,
    one,
    order_key,
    phi,
    phi_inv,
    psi,
    sr_generator_supports,
    sr_generators,
    support,
    verify_nab,
)
from bcross.polygon import Mode, all_classes, ground_set


def x(i, j, n):
    return monomial([(i, j)], n)


@pytest.mark.parametrize("i,j,rank", [(1, 1, 5), (2, 1, 25), (5, 5, 1), (3, 4, 7)])
def test_phi_rank_table(i, j, rank):
    assert phi(i, j, 5) == rank


def test_phi_n2_and_bijective():
    assert (phi(2, 2, 2), phi(1, 1, 2), phi(1, 2, 2), phi(2, 1, 2)) == (1, 2, 3, 4)
    for n in range(1, 9):
        ranks = {phi(i, j, n) for i in range(1, n + 1) for j in range(1, n + 1)}
        assert ranks == set(range(1, n * n + 1))
    with pytest.raises(ValueError):
        phi(0, 1, 3)


def test_order_examples():
    n = 2
    assert compare(mono_mul(x(2, 1, n), x(1, 2, n)), mono_mul(x(1, 1, n), x(2, 2, n))) == 1
    chain = [x(2, 2, n), x(1, 1, n), x(1, 2, n), x(2, 1, n)]
    assert all(compare(a, b) == -1 for a, b in zip(chain, chain[1:]))
    assert all(compare(one(3), x(i, j, 3)) == -1 for i in range(1, 4) for j in range(1, 4))


def _reference_compare(m1, m2):
    """Degree first; then the larger entry at the largest differing rank index loses."""
    if sum(m1) != sum(m2):
        return -1 if sum(m1) < sum(m2) else 1
    n = int(round(len(m1) ** 0.5))

    def beta(m):
        # 1-based beta index l carries the variable of rank n^2 + 1 - l
        b = [0] * (n * n + 1)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                b[n * n + 1 - phi(i, j, n)] = m[x(i, j, n).index(1)]
        return b

    b1, b2 = beta(m1), beta(m2)
    for l in range(n * n, 0, -1):
        if b1[l] != b2[l]:
            return -1 if b1[l] > b2[l] else 1
    return 0


exps3 = st.lists(st.integers(0, 2), min_size=9, max_size=9).map(tuple)


@settings(max_examples=300, deadline=None)
@given(exps3, exps3, exps3)
def test_order_properties(a, b, c):
    assert compare(a, b) == -compare(b, a)
    assert compare(a, b) == _reference_compare(a, b)
    assert (compare(a, b) > 0) == (order_key(a) > order_key(b))
    if compare(a, b) < 0:
        assert compare(mono_mul(a, c), mono_mul(b, c)) < 0
    if compare(a, b) <= 0 and compare(b, c) <= 0:
        assert compare(a, c) <= 0
    assert compare(one(3), a) <= 0


poly3 = st.dictionaries(exps3, st.integers(-3, 3).filter(bool), min_size=1, max_size=4)


@settings(max_examples=150, deadline=None)
@given(poly3, poly3)
def test_lm_is_multiplicative(p, q):
    P, Q = Polynomial(p, 3), Polynomial(q, 3)
    assert (P * Q).lm == mono_mul(P.lm, Q.lm)


def test_divisibility_helpers():
    a, b = x(1, 2, 3), x(2, 1, 3)
    L = mono_lcm(a, b)
    assert divides(a, L) and divides(b, L) and not divides(L, a)
    assert mono_str(L, 3) in ("x[1,2] * x[2,1]", "x[2,1] * x[1,2]")


@pytest.mark.parametrize("A,B,n,ell,N", [
    ((1, 3, 6, 8), (3, 4, 7, 9), 10, 2, {(6, 3), (8, 4), (1, 7), (3, 9)}),
    ((1, 2), (1, 2), 2, 1, {(2, 1), (1, 2)}),
    ((1, 2, 3, 4), (1, 2, 3, 4), 5, 1, {(2, 1), (3, 2), (4, 3), (1, 4)}),
])
def test_n_set_examples(A, B, n, ell, N):
    sel = n_set(A, B, n)
    assert sel.ell == ell and set(sel.nset) == N


def test_n10_leading_monomial():
    lm = minor((1, 3, 6, 8), (3, 4, 7, 9), 10).lm
    assert set(support(lm, 10)) == {(6, 3), (8, 4), (1, 7), (3, 9)}


def test_n_set_rejects_bad_input():
    with pytest.raises(ValueError):
        n_set((2, 1), (1, 2), 3)
    with pytest.raises(ValueError):
        n_set((1,), (1, 2), 3)


def test_minor_examples():
    n = 2
    m = minor((1, 2), (1, 2), n)
    assert m.terms == {mono_mul(x(1, 1, n), x(2, 2, n)): 1, mono_mul(x(1, 2, n), x(2, 1, n)): -1}
    assert m.lm == mono_mul(x(1, 2, n), x(2, 1, n))
    assert minor((2,), (3,), 4).terms == {x(2, 3, 4): 1}
    full = minor((1, 2, 3), (1, 2, 3), 3)
    assert len(full.terms) == 6 and sum(full.terms.values()) == 0


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 7) for k in range(1, min(n, 4))])
def test_leading_monomials_exhaustive(n, k):
    rep = verify_nab(n, k)
    assert rep.passed, rep.counterexamples[:3]


def test_nab_pairs_n5():
    assert verify_nab(5, 1).checked == 100


@pytest.mark.parametrize("n", range(2, 9))
def test_psi_phi_inverse(n):
    seen = set()
    for c in all_classes(n):
        pos = psi(c, n)
        assert phi_inv(*pos, n) == c
        seen.add(pos)
    assert len(seen) == n * n


@pytest.mark.parametrize("n", range(2, 7))
def test_band_is_the_short_classes(n):
    for k in range(1, n):
        short = {psi(c, n) for c in all_classes(n) if c.length <= k}
        assert short == band(n, k)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 6) for k in range(1, n)])
def test_crossings_correspond_to_n_sets(n, k):
    from_classes = {tuple(sorted(psi(c, n) for c in combo)) for combo in class_crossings(n, k)}
    assert from_classes == set(sr_generator_supports(n, k))
    assert all(not (set(s) & band(n, k)) for s in from_classes)


def test_sr_generator_examples():
    n = 2
    assert sr_generators(2, 1) == [mono_mul(x(1, 2, n), x(2, 1, n))]
    gens = sr_generators(3, 1)
    assert len(gens) == 9 and all(sum(g) == 2 for g in gens)


@pytest.mark.parametrize("n,k", [(3, 1), (4, 1), (4, 2), (5, 2)])
def test_sr_generators_are_minimal_nonfaces(n, k):
    ground = ground_set(Mode.B, n, k)
    cx = enumerate_facets(ground)
    pos = {psi(c, n): i for i, c in enumerate(ground.vertices)}
    faces = [set(face_indices(f)) for f in cx.facets]
    for g in sr_generators(n, k):
        idx = {pos[e] for e in support(g, n)}
        assert not any(idx <= f for f in faces)
        for v in idx:
            assert any(idx - {v} <= f for f in faces)


def test_polynomial_arithmetic():
    n = 2
    p = Polynomial({x(1, 1, n): Fraction(1), x(2, 2, n): Fraction(2)}, n)
    assert not (p - p)
    assert (p + p).terms[x(2, 2, n)] == 4
    assert p.lm == x(1, 1, n)  # rank 2 beats rank 1
    assert p.lc == 1 and p.degree == 1
