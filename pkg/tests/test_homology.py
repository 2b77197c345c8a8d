import random
from functools import reduce
from itertools import combinations

import pytest

from bcross.complexes import SimplicialComplex, all_faces, enumerate_facets, face_from_indices
from bcross.homology import (
    ChainComplexGF2,
    betti_gf2,
    complex_betti,
    is_homology_sphere,
    rank_gf2,
    reduced_betti,
    sphere_profile,
)
from bcross.polygon import Mode, ground_set


def _cx(facets, m):
    return SimplicialComplex(tuple(face_from_indices(f) for f in facets), m)


def span_rank(rows):
    span = {reduce(lambda a, b: a ^ b, sub, 0)
            for r in range(len(rows) + 1) for sub in combinations(rows, r)}
    return len(span).bit_length() - 1


def test_rank_against_span_size():
    rng = random.Random(3)
    for _ in range(200):
        rows = [rng.getrandbits(6) for _ in range(rng.randint(0, 7))]
        assert rank_gf2(rows) == span_rank(rows)


def test_hexagon_and_simplex():
    hexagon = enumerate_facets(ground_set(Mode.B, 3, 1))
    assert betti_gf2(all_faces(hexagon)) == [0, 1]
    tetra = _cx(combinations(range(4), 3), 4)
    assert betti_gf2(all_faces(tetra)) == [0, 0, 1]
    assert complex_betti(tetra) == sphere_profile(2)


def test_d42_is_a_3_sphere():
    cx = enumerate_facets(ground_set(Mode.B, 4, 2))
    assert betti_gf2(all_faces(cx)) == [0, 0, 0, 1]


def test_non_spheres():
    two_edges = _cx([(0, 1), (2, 3)], 4)
    assert reduced_betti(all_faces(two_edges)) == [0, 1, 0]
    wedge = _cx([(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)], 5)
    assert betti_gf2(all_faces(wedge)) == [0, 2]
    rep = is_homology_sphere(wedge, "all")
    assert not rep.passed and () in rep.failures
    assert betti_gf2(all_faces(_cx([(0, 1, 2)], 3))) == [0, 0, 0]


def test_point_pair_is_s0():
    assert reduced_betti(all_faces(_cx([(0,), (1,)], 2))) == sphere_profile(0)


def test_build_rejects_non_closed_input():
    with pytest.raises(ValueError):
        ChainComplexGF2.build([[0], [0b011]])


def test_boundary_squares_to_zero():
    cx = enumerate_facets(ground_set(Mode.B, 4, 1))
    assert ChainComplexGF2.build(all_faces(cx)).check_dd_zero()


@pytest.mark.parametrize("n,k", [(3, 1), (4, 1), (4, 2), (4, 3), (5, 4)])
def test_typeb_spheres_all_links(n, k):
    rep = is_homology_sphere(enumerate_facets(ground_set(Mode.B, n, k)), "all")
    assert rep.passed and rep.betti == sphere_profile(k * (n - k) - 1)
    assert rep.faces_checked > 1 and not rep.failures


def test_sampled_links_record_seed():
    cx = enumerate_facets(ground_set(Mode.B, 5, 1))
    a = is_homology_sphere(cx, ("sample", 12), seed=11)
    b = is_homology_sphere(cx, ("sample", 12), seed=11)
    assert a.passed and a.seed == 11
    assert [f for f, _ in a.checked] == [f for f, _ in b.checked]
    assert is_homology_sphere(cx, "none").faces_checked == 1


def test_bowtie_fails():
    # two triangles glued at a vertex; the vertex link is four points
    bowtie = _cx([(0, 1, 2), (0, 3, 4)], 5)
    rep = is_homology_sphere(bowtie, "all")
    assert not rep.passed
    assert (0,) in rep.failures
