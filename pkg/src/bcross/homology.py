"""Reduced simplicial homology with coefficients in GF(2)."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .complexes import (
    DEFAULT_MAX_FACES,
    Face,
    SimplicialComplex,
    all_faces,
    face_indices,
    link,
)
from .errors import VerificationError


@dataclass
class ChainComplexGF2:
    """Boundary maps over GF(2).

    ``boundary[d][j]`` is the bit set (over the (d-1)-faces) of the boundary of
    the j-th face of dimension d, for d = 0..dim; the (-1)-face is the empty set.
    """

    faces: list[list[Face]]
    boundary: list[list[int]] = field(default_factory=list)

    @classmethod
    def build(cls, faces: Sequence[Sequence[Face]]) -> "ChainComplexGF2":
        faces = [list(g) for g in faces]
        index = [{f: i for i, f in enumerate(g)} for g in faces]
        bd: list[list[int]] = []
        for size in range(1, len(faces)):
            lower = index[size - 1]
            cols = []
            for f in faces[size]:
                col = 0
                g = f
                while g:
                    low = g & -g
                    g ^= low
                    try:
                        col |= 1 << lower[f ^ low]
                    except KeyError:
                        raise ValueError(
                            f"face {face_indices(f)} has a missing facet; input not closed"
                        ) from None
                cols.append(col)
            bd.append(cols)
        return cls(faces, bd)

    def check_dd_zero(self) -> bool:
        for d in range(1, len(self.boundary)):
            lower = self.boundary[d - 1]
            for col in self.boundary[d]:
                acc = 0
                c = col
                while c:
                    low = c & -c
                    c ^= low
                    acc ^= lower[low.bit_length() - 1]
                if acc:
                    return False
        return True


def rank_gf2(rows: Sequence[int]) -> int:
    """Rank of a GF(2) matrix given as integer bit rows."""
    pivots: dict[int, int] = {}
    rank = 0
    for r in rows:
        while r:
            top = r.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = r
                rank += 1
                break
            r ^= p
    return rank


def reduced_betti(faces: Sequence[Sequence[Face]], check: bool = True) -> list[int]:
    """Reduced Betti numbers for dimensions -1..dim (list index 0 is dim -1)."""
    if not faces:
        return []
    cc = ChainComplexGF2.build(faces)
    if check and not cc.check_dd_zero():
        raise VerificationError("boundary of boundary is nonzero")
    ranks = [rank_gf2(cols) for cols in cc.boundary]  # ranks[d-1] = rank of d_d
    out = []
    for size, group in enumerate(faces):
        rk_out = ranks[size - 1] if size >= 1 else 0
        rk_in = ranks[size] if size < len(ranks) else 0
        out.append(len(group) - rk_out - rk_in)
    return out


def betti_gf2(faces: Sequence[Sequence[Face]]) -> list[int]:
    """Reduced Betti numbers b_0..b_dim."""
    return reduced_betti(faces)[1:]


def sphere_profile(dim: int) -> list[int]:
    """Reduced Betti numbers of S^dim, indexed from dimension -1."""
    return [int(i - 1 == dim) for i in range(dim + 2)]


def complex_betti(cx: SimplicialComplex, max_faces: int = DEFAULT_MAX_FACES) -> list[int]:
    return reduced_betti(all_faces(cx, max_faces))


@dataclass
class SphereReport:
    dim: int
    betti: list[int]
    passed: bool
    checked: list[tuple[tuple[int, ...], bool]] = field(default_factory=list)
    policy: str = "all"
    seed: Optional[int] = None

    @property
    def faces_checked(self) -> int:
        return len(self.checked)

    @property
    def failures(self) -> list[tuple[int, ...]]:
        return [f for f, ok in self.checked if not ok]


def is_homology_sphere(cx: SimplicialComplex, link_policy="auto", seed: Optional[int] = None,
                       max_faces: int = DEFAULT_MAX_FACES) -> SphereReport:
    """Check the complex and the links of its faces against sphere homology.

    ``link_policy`` is "all", "none", ("sample", m) or "auto" (all faces
    when there are at most 12 vertices, otherwise a sample of 50).
    """
    if not cx.pure:
        raise ValueError("homology-sphere check needs a pure complex")
    d = cx.dim
    faces = all_faces(cx, max_faces)
    betti = reduced_betti(faces)
    ok_whole = betti == sphere_profile(d)
    checked: list[tuple[tuple[int, ...], bool]] = [((), ok_whole)]

    policy = link_policy
    if policy == "auto":
        policy = "all" if cx.n_vertices <= 12 else ("sample", 50)
    nonempty = [f for g in faces[1:] for f in g]
    if policy == "all":
        targets = nonempty
        label = "all"
    elif policy == "none":
        targets = []
        label = "none"
    else:
        _, m = policy
        rng = random.Random(seed)
        targets = rng.sample(nonempty, min(m, len(nonempty)))
        label = f"sample({m})"
    for sigma in targets:
        lk = link(cx, sigma)
        expect = sphere_profile(d - sigma.bit_count())
        got = complex_betti(lk, max_faces)
        checked.append((face_indices(sigma), got == expect))
    passed = all(ok for _, ok in checked)
    return SphereReport(d, betti, passed, checked, label, seed)
