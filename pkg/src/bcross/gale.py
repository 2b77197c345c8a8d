"""Cyclic polytopes via Gale's evenness condition, and the isomorphism
between D*_{n,n-2} and the boundary of C_{2n-4}(2n).

Vertices of C_d(N) are labeled 1..N.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable

from .complexes import enumerate_facets, face_indices
from .counting import cyclic_facet_count
from .errors import BudgetExceeded, VerificationError
from .monomials import n_set, phi_inv, psi
from .polygon import Mode, ground_set


@dataclass(frozen=True)
class CyclicSpec:
    d: int
    N: int

    def __post_init__(self):
        if not (1 <= self.d < self.N):
            raise ValueError(f"need 1 <= d < N, got d={self.d}, N={self.N}")


def cycle_components(sigma: Iterable[int], N: int) -> list[int]:
    """Sizes of the connected components of the cycle graph C_N induced on sigma."""
    s = set(sigma)
    if len(s) == N:
        return [N]
    if not s:
        return []
    # start each run just after a gap
    start = next(v for v in range(1, N + 1) if (v - 2) % N + 1 not in s and v in s)
    sizes = []
    run = 0
    for step in range(N):
        v = (start - 1 + step) % N + 1
        if v in s:
            run += 1
        elif run:
            sizes.append(run)
            run = 0
    if run:
        sizes.append(run)
    return sizes


def _interior_odd_runs(sigma: set, N: int) -> int:
    """Odd runs of the path 1..N that contain neither endpoint."""
    odd = 0
    v = 1
    while v <= N:
        if v in sigma:
            w = v
            while w + 1 <= N and w + 1 in sigma:
                w += 1
            if v != 1 and w != N and (w - v + 1) % 2:
                odd += 1
            v = w + 1
        else:
            v += 1
    return odd


def gale_is_face(sigma: Iterable[int], spec: CyclicSpec) -> bool:
    """Is sigma a face of the boundary complex of C_d(N)?

    Even d uses the cycle count |sigma| + (odd components) <= d.  Odd d has
    no cyclic symmetry; there the runs touching vertex 1 or N are free and
    only interior odd runs count.
    """
    s = set(sigma)
    if any(not 1 <= v <= spec.N for v in s):
        raise ValueError("vertex label outside 1..N")
    if len(s) > spec.d:
        return False
    if spec.d % 2 == 0:
        omega = sum(1 for c in cycle_components(s, spec.N) if c % 2)
        return len(s) + omega <= spec.d
    return len(s) + _interior_odd_runs(s, spec.N) <= spec.d


def cyclic_facets(spec: CyclicSpec, max_subsets: int = 10**7) -> list[tuple[int, ...]]:
    """All d-subsets passing Gale's condition, lexicographically sorted."""
    if comb(spec.N, spec.d) > max_subsets:
        raise BudgetExceeded(f"C({spec.N},{spec.d}) subsets exceed {max_subsets}")
    out = [s for s in combinations(range(1, spec.N + 1), spec.d) if gale_is_face(s, spec)]
    expected = cyclic_facet_count(spec.d, spec.N)
    if len(out) != expected:
        raise VerificationError(f"C_{spec.d}({spec.N}): {len(out)} facets, formula gives {expected}")
    return out


def _mod1(x: int, m: int) -> int:
    return (x - 1) % m + 1


def cyclic_positions(n: int) -> set[tuple[int, int]]:
    """Matrix positions of the vertices of D*_{n,n-2}: two per row and column."""
    return {(i, _mod1(i + l, n)) for i in range(1, n + 1) for l in (n - 2, n - 1)}


def cyclic_numbering(n: int, reverse: bool = False) -> dict[tuple[int, int], int]:
    """Number the 2n positions along the row/column cycle.

    (1, n) gets 1 and its row partner 2; steps then alternate between column
    and row partners.  ``reverse`` walks the cycle the other way.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    pos = cyclic_positions(n)
    rows: dict[int, list] = {}
    cols: dict[int, list] = {}
    for p in pos:
        rows.setdefault(p[0], []).append(p)
        cols.setdefault(p[1], []).append(p)

    def partner(p, by_row: bool):
        group = rows[p[0]] if by_row else cols[p[1]]
        (q,) = [x for x in group if x != p]
        return q

    numbering = {(1, n): 1}
    cur = (1, n)
    by_row = not reverse
    for label in range(2, 2 * n + 1):
        cur = partner(cur, by_row)
        if cur in numbering:
            raise AssertionError("position graph is not a single 2n-cycle")
        numbering[cur] = label
        by_row = not by_row
    if partner(cur, by_row) != (1, n):
        raise AssertionError("position graph does not close up")
    return numbering


def position_graph_is_cycle(n: int) -> bool:
    """Is 'same row or same column' on the positions one connected 2n-cycle?"""
    pos = sorted(cyclic_positions(n))
    adj = {p: [q for q in pos if q != p and (q[0] == p[0] or q[1] == p[1])] for p in pos}
    if any(len(v) != 2 for v in adj.values()):
        return False
    seen = {pos[0]}
    stack = [pos[0]]
    while stack:
        for q in adj[stack.pop()]:
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return len(seen) == 2 * n


@dataclass
class CyclicIsoReport:
    n: int
    facets_typeb: int
    facets_cyclic: int
    identical: bool
    nonfaces_ok: bool
    reverse: bool = False
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.identical and self.nonfaces_ok


def verify_cyclic_iso(n: int, reverse: bool = False, cx=None) -> CyclicIsoReport:
    """Compare the relabeled facets of D*_{n,n-2} with those of C_{2n-4}(2n).

    ``cx`` may carry a precomputed (e.g. cached) type-B complex for (n, n-2).
    """
    ground = ground_set(Mode.B, n, n - 2)
    if cx is None:
        cx = enumerate_facets(ground)
    elif cx.ground != ground:
        raise ValueError(f"complex is not D*_({n},{n - 2})")
    number = cyclic_numbering(n, reverse)
    label = [number[psi(c, n)] for c in ground.vertices]
    image = {tuple(sorted(label[i] for i in face_indices(f))) for f in cx.facets}
    spec = CyclicSpec(2 * n - 4, 2 * n)
    gale = set(cyclic_facets(spec))

    # minimal nonfaces: N(A,B) for (n-1)-subsets <-> (n-1)-sets with n-1 components
    nf_images = set()
    ok = True
    for A in combinations(range(1, n + 1), n - 1):
        for B in combinations(range(1, n + 1), n - 1):
            s = tuple(sorted(number[p] for p in n_set(A, B, n).nset))
            if len(cycle_components(s, 2 * n)) != n - 1:
                ok = False
            nf_images.add(s)
    gale_nf = {s for s in combinations(range(1, 2 * n + 1), n - 1)
               if len(cycle_components(s, 2 * n)) == n - 1}
    ok = ok and nf_images == gale_nf
    mism = sorted(image ^ gale)[:10]
    return CyclicIsoReport(n, len(image), len(gale), image == gale, ok, reverse, mism)


def class_of_number(n: int, reverse: bool = False) -> dict[int, str]:
    """Number -> canonical class label, for display."""
    return {v: phi_inv(i, j, n).label for (i, j), v in cyclic_numbering(n, reverse).items()}
