"""Facet enumeration and face bookkeeping for the crossing complexes.

Faces are Python ints used as bit sets over the vertex order of a
:class:`~bcross.polygon.GroundSet`.  Every complex handled here is of the form
"sets of vertices whose union of chords has no (k+1)-clique in a fixed graph",
so one search engine serves type A, type B and the symmetric complexes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence

from .errors import BudgetExceeded, VerificationError
from .polygon import (
    GroundSet,
    Mode,
    crosses,
    crossing_rows,
    ground_set,
    has_clique,
    rotate,
)

DEFAULT_MAX_NODES = 10**7
DEFAULT_MAX_FACES = 10**6

Face = int


def face_from_indices(indices: Iterable[int]) -> Face:
    f = 0
    for i in indices:
        f |= 1 << i
    return f


def face_indices(face: Face) -> tuple[int, ...]:
    out = []
    while face:
        low = face & -face
        out.append(low.bit_length() - 1)
        face ^= low
    return tuple(out)


def _canonical(facets: Iterable[Face]) -> tuple[Face, ...]:
    return tuple(sorted(set(facets), key=face_indices))


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex stored through its facets.

    ``ground`` is None for complexes not coming from a polygon (links taken
    over a renamed vertex set, Stanley-Reisner complexes of monomial ideals).
    """

    facets: tuple[Face, ...]
    n_vertices: int
    ground: Optional[GroundSet] = None
    reading: str = "symmetrized"

    @property
    def dim(self) -> int:
        if not self.facets:
            return -2  # void complex
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def pure(self) -> bool:
        return len({f.bit_count() for f in self.facets}) <= 1

    def facet_indices(self) -> list[tuple[int, ...]]:
        return [face_indices(f) for f in self.facets]

    def facet_labels(self) -> list[list[str]]:
        if self.ground is None:
            return [[str(i) for i in fi] for fi in self.facet_indices()]
        labels = self.ground.labels()
        return [[labels[i] for i in fi] for fi in self.facet_indices()]

    def contains(self, face: Face) -> bool:
        return any(face & f == face for f in self.facets)

    def __len__(self):
        return len(self.facets)


# -- the clique-free search structure ---------------------------------------

@dataclass
class CrossingStructure:
    """Vertices as bundles of atoms in a graph; faces avoid (k+1)-cliques."""

    rows: list[int]
    vertex_atoms: list[int]
    k: int
    atoms: list = field(default_factory=list)

    def atoms_of(self, face: Face) -> int:
        u = 0
        for i in face_indices(face):
            u |= self.vertex_atoms[i]
        return u

    def is_face_atoms(self, u: int) -> bool:
        return not has_clique(self.rows, u, self.k + 1)

    def addable(self, u: int, v: int) -> bool:
        """Can vertex ``v`` join a face whose atom set is ``u``?"""
        va = self.vertex_atoms[v]
        w = u | va
        a_mask = va
        while a_mask:
            low = a_mask & -a_mask
            a = low.bit_length() - 1
            a_mask ^= low
            if has_clique(self.rows, self.rows[a] & w, self.k):
                return False
        return True

    def blockable(self, pot: int, v: int) -> bool:
        """Could atoms inside ``pot`` ever block ``v``?"""
        a_mask = self.vertex_atoms[v]
        while a_mask:
            low = a_mask & -a_mask
            a = low.bit_length() - 1
            a_mask ^= low
            if has_clique(self.rows, self.rows[a] & pot, self.k):
                return True
        return False


def crossing_structure(ground: GroundSet, reading: str = "symmetrized") -> CrossingStructure:
    """Search structure for a ground set.

    ``reading="symmetrized"`` expands type-B classes to both rotated chords
    (the operative definition).  ``reading="pairwise"`` treats two classes as
    crossing when any of their representatives cross; it is only used to
    compare the two readings.
    """
    k = ground.k
    if ground.mode is not Mode.B:
        rows = crossing_rows(list(ground.vertices))
        return CrossingStructure(rows, [1 << i for i in range(len(ground))], k,
                                 list(ground.vertices))
    if reading == "pairwise":
        m = len(ground)
        rows = [0] * m
        for i, j in combinations(range(m), 2):
            if any(crosses(x, y) for x in ground.diagonals_of(i)
                   for y in ground.diagonals_of(j)):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        return CrossingStructure(rows, [1 << i for i in range(m)], k,
                                 list(ground.vertices))
    if reading != "symmetrized":
        raise ValueError(f"unknown reading {reading!r}")
    atoms = sorted(d for i in range(len(ground)) for d in ground.diagonals_of(i))
    pos = {d: i for i, d in enumerate(atoms)}
    va = [face_from_indices(pos[d] for d in ground.diagonals_of(i))
          for i in range(len(ground))]
    return CrossingStructure(crossing_rows(atoms), va, k, atoms)


def _as_face(S) -> Face:
    return S if isinstance(S, int) else face_from_indices(S)


def is_face(ground: GroundSet, S, reading: str = "symmetrized") -> bool:
    st = crossing_structure(ground, reading)
    return st.is_face_atoms(st.atoms_of(_as_face(S)))


def maximal_faces(st: CrossingStructure, max_nodes: int = DEFAULT_MAX_NODES) -> list[Face]:
    """All maximal faces, by include/exclude depth-first search.

    A vertex skipped while still addable must be blocked by the time the
    leaf is reached; branches where it can no longer be blocked are cut.
    """
    m = len(st.vertex_atoms)
    rest = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        rest[i] = rest[i + 1] | st.vertex_atoms[i]
    out: list[Face] = []
    nodes = 0

    def rec(i: int, face: int, u: int, skipped: tuple):
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise BudgetExceeded(f"facet search exceeded {max_nodes} nodes")
        if skipped:
            pot = u | rest[i]
            for v in skipped:
                if not st.blockable(pot, v):
                    return
        if i == m:
            for v in skipped:
                if st.addable(u, v):
                    return
            out.append(face)
            return
        if st.addable(u, i):
            rec(i + 1, face | (1 << i), u | st.vertex_atoms[i], skipped)
            rec(i + 1, face, u, skipped + (i,))
        else:
            rec(i + 1, face, u, skipped)

    rec(0, 0, 0, ())
    return out


def enumerate_facets(ground: GroundSet, reading: str = "symmetrized", check: bool = True,
                     max_nodes: int = DEFAULT_MAX_NODES) -> SimplicialComplex:
    """Facets of Delta*_{n,k} (type A), D*_{n,k} (type B) or Delta*_{2n,k}.

    With ``check`` purity and the expected facet size are asserted for the
    operative reading; a violation raises :class:`VerificationError`.
    """
    st = crossing_structure(ground, reading)
    cx = SimplicialComplex(_canonical(maximal_faces(st, max_nodes)), len(ground),
                           ground, reading)
    if check and reading == "symmetrized":
        size = ground.expected_facet_size
        bad = [f for f in cx.facets if f.bit_count() != size]
        if bad:
            raise VerificationError(
                f"{ground.mode.value}({ground.n},{ground.k}): {len(bad)} facets "
                f"not of size {size}, e.g. {face_indices(bad[0])}")
    return cx


def rotate_face(ground: GroundSet, face: Face) -> Face:
    """Image of a face of the 2n-gon complex under the 180-degree rotation."""
    if ground.mode is not Mode.BSYM:
        raise ValueError("rotation acts on the 2n-gon ground set")
    return face_from_indices(ground.index(rotate(ground.vertices[i]))
                             for i in face_indices(face))


def diameter_count(ground: GroundSet, face: Face) -> int:
    return sum(ground.vertices[i].is_diameter() for i in face_indices(face))


def enumerate_symmetric_facets(n2: int, k: int, max_nodes: int = DEFAULT_MAX_NODES,
                               check: bool = True) -> SimplicialComplex:
    """Facets F of Delta*_{2n,k} with rotate(F) == F."""
    if n2 % 2:
        raise ValueError("symmetric facets need an even polygon")
    ground = ground_set(Mode.BSYM, n2 // 2, k)
    full = enumerate_facets(ground, max_nodes=max_nodes, check=check)
    sym = tuple(f for f in full.facets if rotate_face(ground, f) == f)
    return SimplicialComplex(sym, len(ground), ground)


def symmetrize(typeb: GroundSet, face: Face, target: GroundSet) -> Face:
    """Map a face of D*_{n,k} to the union of its chords in Delta*_{2n,k}."""
    return face_from_indices(target.index(d) for i in face_indices(face)
                             for d in typeb.diagonals_of(i))


# -- faces, f- and h-vectors -----------------------------------------------

def all_faces(cx: SimplicialComplex, max_faces: int = DEFAULT_MAX_FACES) -> list[list[Face]]:
    """Every face, grouped by dimension -1..dim, each group sorted."""
    if not cx.facets:
        return []
    seen: set[int] = set()
    for f in cx.facets:
        s = f
        while True:
            if s not in seen:
                seen.add(s)
                if len(seen) > max_faces:
                    raise BudgetExceeded(f"more than {max_faces} faces")
            if s == 0:
                break
            s = (s - 1) & f
    groups: list[list[Face]] = [[] for _ in range(cx.dim + 2)]
    for s in seen:
        groups[s.bit_count()].append(s)
    return [sorted(g, key=face_indices) for g in groups]


@dataclass(frozen=True)
class FHVector:
    f: tuple[int, ...]  # f_{-1}, f_0, ..., f_{d-1}
    h: tuple[int, ...]  # h_0, ..., h_d

    @property
    def symmetric(self) -> bool:
        return self.h == self.h[::-1]

    @property
    def unimodal(self) -> bool:
        h = self.h
        i = 0
        while i + 1 < len(h) and h[i] <= h[i + 1]:
            i += 1
        while i + 1 < len(h) and h[i] >= h[i + 1]:
            i += 1
        return i == len(h) - 1


def h_from_f(f: Sequence[int]) -> tuple[int, ...]:
    """h(t) = f(t-1) with f(t) = sum_i f_{i-1} t^{d-i}."""
    d = len(f) - 1
    return tuple(sum((-1) ** (j - i) * comb(d - i, j - i) * f[i] for i in range(j + 1))
                 for j in range(d + 1))


def fh_vector(cx: SimplicialComplex, max_faces: int = DEFAULT_MAX_FACES) -> FHVector:
    f = tuple(len(g) for g in all_faces(cx, max_faces))
    return FHVector(f, h_from_f(f))


def hilbert_series(h: Sequence[int]) -> str:
    terms = []
    for i, c in enumerate(h):
        if c == 0:
            continue
        t = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        if not t:
            terms.append(str(c))
        elif c == 1:
            terms.append(t)
        else:
            terms.append(f"{c}*{t}")
    num = " + ".join(terms).replace("+ -", "- ") or "0"
    return f"({num})/(1-t)^{len(h)}"


def link(cx: SimplicialComplex, sigma: Face) -> SimplicialComplex:
    """Link of a face of a pure complex (same vertex numbering)."""
    if not cx.pure:
        raise ValueError("link via facets is only valid for pure complexes")
    star = [f ^ sigma for f in cx.facets if f & sigma == sigma]
    if not star:
        raise ValueError(f"{face_indices(sigma)} is not a face")
    return SimplicialComplex(_canonical(star), cx.n_vertices, cx.ground, cx.reading)


# -- complexes given by minimal nonfaces -------------------------------------

def facets_from_nonfaces(n_vertices: int, nonfaces: Iterable[Face],
                         max_nodes: int = DEFAULT_MAX_NODES) -> SimplicialComplex:
    """Maximal subsets of [n_vertices] containing none of ``nonfaces``."""
    nonfaces = list(set(nonfaces))
    by_vertex: list[list[int]] = [[] for _ in range(n_vertices)]
    for nf in nonfaces:
        for i in face_indices(nf):
            by_vertex[i].append(nf)

    def addable(face: int, v: int) -> bool:
        w = face | (1 << v)
        return all(nf & w != nf for nf in by_vertex[v])

    def blockable(pot: int, v: int) -> bool:
        w = pot | (1 << v)
        return any(nf & w == nf for nf in by_vertex[v])

    out: list[Face] = []
    nodes = 0
    full = (1 << n_vertices) - 1

    def rec(i: int, face: int, skipped: tuple):
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise BudgetExceeded(f"facet search exceeded {max_nodes} nodes")
        pot = face | (full >> i << i)
        for v in skipped:
            if not blockable(pot, v):
                return
        if i == n_vertices:
            if all(not addable(face, v) for v in skipped):
                out.append(face)
            return
        if addable(face, i):
            rec(i + 1, face | (1 << i), skipped)
            rec(i + 1, face, skipped + (i,))
        else:
            rec(i + 1, face, skipped)

    rec(0, 0, ())
    return SimplicialComplex(_canonical(out), n_vertices)


def minimal_nonfaces(ground: GroundSet, size: int) -> list[Face]:
    """The ``size``-element minimal nonfaces, i.e. (k+1)-crossings when size=k+1."""
    st = crossing_structure(ground)
    out = []
    for combo in combinations(range(len(ground)), size):
        f = face_from_indices(combo)
        if st.is_face_atoms(st.atoms_of(f)):
            continue
        if all(st.is_face_atoms(st.atoms_of(f ^ (1 << i))) for i in combo):
            out.append(f)
    return out


def compare_readings(n: int, k: int, max_nodes: int = DEFAULT_MAX_NODES) -> dict:
    """Do the symmetrized and the pairwise-class readings of D*_{n,k} coincide?"""
    ground = ground_set(Mode.B, n, k)
    sym = enumerate_facets(ground, max_nodes=max_nodes)
    pw = enumerate_facets(ground, reading="pairwise", check=False, max_nodes=max_nodes)
    return {
        "n": n, "k": k,
        "symmetrized_facets": len(sym), "pairwise_facets": len(pw),
        "pairwise_pure": pw.pure, "pairwise_dim": pw.dim,
        "coincide": sym.facets == pw.facets,
    }
