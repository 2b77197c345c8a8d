"""Diagonals of a convex polygon, crossings, 180-degree rotation classes and
the ground sets of the type-A and type-B complexes.

Vertices of an N-gon are numbered 0..N-1 clockwise.  A diagonal is any chord
between two distinct vertices, hull edges included.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


@dataclass(frozen=True, order=True)
class Diagonal:
    a: int
    b: int
    N: int

    def __post_init__(self):
        if not (0 <= self.a < self.b < self.N):
            raise ValueError(f"invalid diagonal {self.a}-{self.b} of a {self.N}-gon")

    @classmethod
    def of(cls, a: int, b: int, N: int) -> "Diagonal":
        """Build from two vertex labels taken mod N, in either order."""
        a, b = a % N, b % N
        if a == b:
            raise ValueError("a diagonal needs two distinct endpoints")
        return cls(min(a, b), max(a, b), N)

    @property
    def length(self) -> int:
        """Cyclic length: number of polygon edges on the shorter side."""
        return min(self.b - self.a, self.N - (self.b - self.a))

    def is_diameter(self) -> bool:
        return self.N % 2 == 0 and self.b - self.a == self.N // 2

    @property
    def label(self) -> str:
        return f"{self.a}-{self.b}"

    def __str__(self):
        return self.label


def crosses(d1: Diagonal, d2: Diagonal) -> bool:
    """True iff the two chords meet in the open interior of the polygon."""
    if d1.N != d2.N:
        raise ValueError("diagonals live on different polygons")
    a, b = d1.a, d1.b
    inside_c = a < d2.a < b
    inside_d = a < d2.b < b
    if d2.a in (a, b) or d2.b in (a, b):
        return False
    return inside_c != inside_d


def rotate(d: Diagonal) -> Diagonal:
    """Rotation of a diagonal of the 2n-gon by 180 degrees."""
    if d.N % 2:
        raise ValueError("rotation by 180 degrees needs an even polygon")
    n = d.N // 2
    return Diagonal.of(d.a + n, d.b + n, d.N)


def never_crosses_own_rotation(d: Diagonal) -> bool:
    return crosses(d, rotate(d))


@dataclass(frozen=True, order=True)
class DiagonalClass:
    """Orbit {d, rotate(d)} of a diagonal of the 2n-gon.

    ``rep`` is the lexicographically least member.
    """

    rep: Diagonal

    @classmethod
    def of(cls, d: Diagonal) -> "DiagonalClass":
        return cls(min(d, rotate(d)))

    @property
    def N(self) -> int:
        return self.rep.N

    @property
    def members(self) -> tuple[Diagonal, ...]:
        r = rotate(self.rep)
        return (self.rep,) if r == self.rep else (self.rep, r)

    @property
    def length(self) -> int:
        return self.rep.length

    def is_diameter(self) -> bool:
        return self.rep.is_diameter()

    @property
    def label(self) -> str:
        return self.rep.label

    def __str__(self):
        return self.label


class Mode(str, enum.Enum):
    A = "A"          # Delta*_{n,k} on the n-gon
    B = "B"          # D*_{n,k}: rotation classes of the 2n-gon
    BSYM = "BSym"    # Delta*_{2n,k} on the 2n-gon, with rotation metadata

    @classmethod
    def parse(cls, s: "str | Mode") -> "Mode":
        if isinstance(s, Mode):
            return s
        for m in cls:
            if m.value.lower() == str(s).lower():
                return m
        raise ValueError(f"unknown mode {s!r}")


def all_diagonals(N: int) -> list[Diagonal]:
    return [Diagonal(a, b, N) for a, b in combinations(range(N), 2)]


def all_classes(n: int) -> list[DiagonalClass]:
    """The rotation classes of all chords of the 2n-gon, canonically sorted."""
    return sorted({DiagonalClass.of(d) for d in all_diagonals(2 * n)})


@dataclass(frozen=True)
class GroundSet:
    """Vertex set of a reduced complex plus the frozen part of the join."""

    mode: Mode
    n: int
    k: int
    vertices: tuple
    frozen: tuple

    @property
    def polygon_size(self) -> int:
        return self.n if self.mode is Mode.A else 2 * self.n

    def __len__(self):
        return len(self.vertices)

    def index(self, v) -> int:
        return self._index[v]

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {v: i for i, v in enumerate(self.vertices)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def diagonals_of(self, i: int) -> tuple[Diagonal, ...]:
        """The polygon chords that vertex ``i`` stands for."""
        v = self.vertices[i]
        return v.members if isinstance(v, DiagonalClass) else (v,)

    def labels(self) -> list[str]:
        return [v.label for v in self.vertices]

    @property
    def expected_facet_size(self) -> int:
        n, k = self.n, self.k
        if self.mode is Mode.A:
            return k * (n - 2 * k - 1)
        if self.mode is Mode.B:
            return k * (n - k)
        return k * (2 * n - 2 * k - 1)


def ground_set(mode, n: int, k: int) -> GroundSet:
    mode = Mode.parse(mode)
    if k < 1:
        raise ValueError("k must be positive")
    if mode is Mode.A:
        if n < 2 * k + 1:
            raise ValueError(f"type A needs n >= 2k+1, got n={n}, k={k}")
        diags = all_diagonals(n)
        verts = tuple(d for d in diags if d.length > k)
        frozen = tuple(d for d in diags if d.length <= k)
        return GroundSet(mode, n, k, verts, frozen)
    if not (1 <= k <= n - 1):
        raise ValueError(f"type B needs 1 <= k <= n-1, got n={n}, k={k}")
    if mode is Mode.B:
        classes = all_classes(n)
        verts = tuple(c for c in classes if c.length > k)
        frozen = tuple(c for c in classes if c.length <= k)
        return GroundSet(mode, n, k, verts, frozen)
    diags = all_diagonals(2 * n)
    verts = tuple(d for d in diags if d.length > k)
    frozen = tuple(d for d in diags if d.length <= k)
    return GroundSet(mode, n, k, verts, frozen)


# -- crossing graphs as bit rows ------------------------------------------

def crossing_rows(diags: Sequence[Diagonal]) -> list[int]:
    """Adjacency of the crossing graph; bit j of row i set iff i crosses j."""
    rows = [0] * len(diags)
    for i, j in combinations(range(len(diags)), 2):
        if crosses(diags[i], diags[j]):
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return rows


def has_clique(rows: Sequence[int], mask: int, size: int) -> bool:
    """Does ``mask`` contain ``size`` pairwise adjacent nodes?"""
    if size <= 0:
        return True
    if size == 1:
        return mask != 0
    if mask.bit_count() < size:
        return False
    while mask:
        low = mask & -mask
        i = low.bit_length() - 1
        mask ^= low
        if has_clique(rows, rows[i] & mask, size - 1):
            return True
    return False


def clique_number(rows: Sequence[int], mask: int) -> int:
    best = 0

    def expand(size: int, cand: int):
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            i = low.bit_length() - 1
            cand ^= low
            expand(size + 1, rows[i] & cand)

    expand(0, mask)
    return best


def max_crossing_number(diags: Iterable[Diagonal]) -> int:
    """Size of the largest pairwise crossing subset."""
    diags = sorted(set(diags))
    if not diags:
        return 0
    if len({d.N for d in diags}) != 1:
        raise ValueError("diagonals live on different polygons")
    rows = crossing_rows(diags)
    return clique_number(rows, (1 << len(diags)) - 1)


def k_crossings(diags: Sequence[Diagonal], size: int) -> list[tuple[Diagonal, ...]]:
    """All pairwise crossing ``size``-subsets of ``diags``."""
    diags = list(diags)
    rows = crossing_rows(diags)
    out = []

    def grow(chosen: list[int], cand: int):
        if len(chosen) == size:
            out.append(tuple(diags[i] for i in chosen))
            return
        while cand:
            low = cand & -cand
            i = low.bit_length() - 1
            cand ^= low
            grow(chosen + [i], rows[i] & cand)

    grow([], (1 << len(diags)) - 1)
    return out
