import math
from itertools import combinations

import pytest

from bcross.polygon import (
    Diagonal,
    DiagonalClass,
    Mode,
    all_classes,
    all_diagonals,
    crosses,
    ground_set,
    max_crossing_number,
    never_crosses_own_rotation,
    rotate,
)


def _point(v, N):
    t = 2 * math.pi * v / N
    return math.cos(t), -math.sin(t)


def _orient(p, q, r):
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def segments_cross(d1, d2):
    """Open-interior intersection of two chords of the unit circle."""
    if {d1.a, d1.b} & {d2.a, d2.b}:
        return False
    p, q = _point(d1.a, d1.N), _point(d1.b, d1.N)
    r, s = _point(d2.a, d2.N), _point(d2.b, d2.N)
    return _orient(p, q, r) * _orient(p, q, s) < 0 and _orient(r, s, p) * _orient(r, s, q) < 0


def D(a, b, N):
    return Diagonal.of(a, b, N)


@pytest.mark.parametrize("d1,d2,expected", [
    (D(0, 2, 4), D(1, 3, 4), True),
    (D(0, 2, 6), D(2, 4, 6), False),
    (D(0, 5, 8), D(1, 4, 8), False),
])
def test_crossing_examples(d1, d2, expected):
    assert crosses(d1, d2) is expected
    assert crosses(d2, d1) is expected


@pytest.mark.parametrize("N", range(4, 11))
def test_crossing_matches_geometry(N):
    for d1, d2 in combinations(all_diagonals(N), 2):
        assert crosses(d1, d2) == segments_cross(d1, d2), (d1, d2)


def test_crossing_rejects_mixed_polygons():
    with pytest.raises(ValueError):
        crosses(D(0, 2, 6), D(1, 3, 8))


def test_diagonal_validation():
    with pytest.raises(ValueError):
        Diagonal(3, 1, 6)
    with pytest.raises(ValueError):
        D(2, 8, 6)
    assert D(5, 1, 6) == Diagonal(1, 5, 6)
    assert D(1, 5, 6).length == 2


@pytest.mark.parametrize("d,expected", [
    (D(0, 3, 6), D(0, 3, 6)),
    (D(0, 2, 6), D(3, 5, 6)),
    (D(1, 6, 8), D(2, 5, 8)),
])
def test_rotate(d, expected):
    assert rotate(d) == expected
    assert rotate(rotate(d)) == d


def test_never_crosses_own_rotation_examples():
    assert never_crosses_own_rotation(D(0, 5, 8)) is False
    assert never_crosses_own_rotation(D(0, 3, 6)) is False


@pytest.mark.parametrize("N", range(4, 17, 2))
def test_never_crosses_own_rotation_exhaustive(N):
    assert not any(never_crosses_own_rotation(d) for d in all_diagonals(N))
    assert not any(segments_cross(d, rotate(d)) for d in all_diagonals(N))


def test_classes():
    assert len(all_classes(3)) == 9
    c = DiagonalClass.of(D(3, 5, 6))
    assert set(c.members) == {D(0, 2, 6), D(3, 5, 6)}
    assert DiagonalClass.of(D(0, 3, 6)).is_diameter()


@pytest.mark.parametrize("mode,n,k,size", [
    (Mode.A, 6, 1, 9),
    (Mode.B, 3, 1, 6),
])
def test_ground_set_examples(mode, n, k, size):
    assert len(ground_set(mode, n, k)) == size


@pytest.mark.parametrize("n", range(2, 9))
def test_typeb_ground_size(n):
    for k in range(1, n):
        g = ground_set(Mode.B, n, k)
        assert len(g) == n * (n - k)
        assert len(g.labels()) == len(set(g.labels()))


def test_ground_set_range_errors():
    with pytest.raises(ValueError):
        ground_set(Mode.A, 4, 2)
    with pytest.raises(ValueError):
        ground_set(Mode.B, 3, 3)


def brute_max_crossing(diags):
    best = 0
    for r in range(1, len(diags) + 1):
        for sub in combinations(diags, r):
            if all(crosses(x, y) for x, y in combinations(sub, 2)):
                best = r
    return best


@pytest.mark.parametrize("diags,expected", [
    ([D(0, 3, 6), D(1, 4, 6), D(2, 5, 6)], 3),
    ([D(0, 2, 6), D(0, 3, 6), D(0, 4, 6)], 1),
    # no three of these pairwise cross: 13/35 and 14/13, 14/24 share endpoints
    ([D(1, 3, 6), D(2, 4, 6), D(3, 5, 6), D(1, 4, 6)], 2),
    ([], 0),
])
def test_max_crossing_examples(diags, expected):
    assert max_crossing_number(diags) == expected == brute_max_crossing(diags)


def test_max_crossing_random_subsets():
    import random
    rng = random.Random(7)
    pool = all_diagonals(9)
    for _ in range(60):
        sub = rng.sample(pool, rng.randint(1, 9))
        assert max_crossing_number(sub) == brute_max_crossing(sub)
