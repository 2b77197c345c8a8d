"""Buchberger's algorithm under the phi-ranked graded reverse-lex order, and
the equivalence between Groebner bases of minors, Stanley-Reisner ideals
and facet counts of D*_{n,k}.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .complexes import enumerate_facets, face_from_indices, facets_from_nonfaces
from .counting import typeB_lower
from .errors import BudgetExceeded, VerificationError
from .monomials import (
    Monomial,
    Polynomial,
    coprime,
    divides,
    minimize_monomials,
    minors,
    mono_div,
    mono_lcm,
    order_key,
    sr_generators,
    support,
)
from .polygon import Mode, ground_set

PRIME = 32003


class ModP:
    """Element of GF(p); only used to cross-check the rational computation."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int = PRIME):
        self.v = v % p
        self.p = p

    @classmethod
    def from_fraction(cls, c, p: int = PRIME) -> "ModP":
        c = Fraction(c)
        return cls(c.numerator * pow(c.denominator, -1, p), p)

    def _coerce(self, o):
        return o.v if isinstance(o, ModP) else o

    def __add__(self, o):
        return ModP(self.v + self._coerce(o), self.p)

    __radd__ = __add__

    def __sub__(self, o):
        return ModP(self.v - self._coerce(o), self.p)

    def __rsub__(self, o):
        return ModP(self._coerce(o) - self.v, self.p)

    def __mul__(self, o):
        return ModP(self.v * self._coerce(o), self.p)

    __rmul__ = __mul__

    def __truediv__(self, o):
        return ModP(self.v * pow(self._coerce(o), -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __eq__(self, o):
        return self.v == (self._coerce(o) % self.p)

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return str(self.v)


def to_mod_p(f: Polynomial, p: int = PRIME) -> Polynomial:
    return Polynomial({m: ModP.from_fraction(c, p) for m, c in f.terms.items()}, f.n)


@dataclass
class IdealBasis:
    gens: list[Polynomial]
    n: int
    is_groebner: bool = False
    input_was_gb: Optional[bool] = None
    pairs_reduced: int = 0

    def lms(self) -> list[Monomial]:
        return [g.lm for g in self.gens]

    def to_json(self) -> list:
        return [g.to_json() for g in self.gens]


@dataclass
class MonomialIdeal:
    mingens: list[Monomial]
    n: int

    def __post_init__(self):
        self.mingens = minimize_monomials(self.mingens)

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.mingens)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and set(self.mingens) == set(other.mingens)

    @property
    def squarefree(self) -> bool:
        return all(e <= 1 for g in self.mingens for e in g)

    def supports(self) -> list[list[tuple[int, int]]]:
        return sorted(support(g, self.n) for g in self.mingens)


def monic(f: Polynomial) -> Polynomial:
    lc = f.lc
    return Polynomial({m: c / lc for m, c in f.terms.items()}, f.n)


def _lead(terms: dict) -> Monomial:
    return max(terms, key=order_key)


def normal_form(p: Polynomial, G: Sequence[Polynomial]) -> Polynomial:
    """Full reduction; the first basis element whose lm divides is used."""
    work = dict(p.terms)
    rem: dict = {}
    leads = [(g.lm, g.lc, g) for g in G]
    while work:
        m = _lead(work)
        c = work[m]
        for lm, lc, g in leads:
            if divides(lm, m):
                q = mono_div(m, lm)
                f = c / lc
                for gm, gc in g.terms.items():
                    t = tuple(a + b for a, b in zip(gm, q))
                    v = work.get(t, 0) - f * gc
                    if v:
                        work[t] = v
                    else:
                        work.pop(t, None)
                break
        else:
            rem[m] = c
            del work[m]
    return Polynomial(rem, p.n)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    L = mono_lcm(f.lm, g.lm)
    return f.scale(g.lc, mono_div(L, f.lm)) - g.scale(f.lc, mono_div(L, g.lm))


def is_groebner_basis(G: Sequence[Polynomial]) -> bool:
    """Buchberger's criterion; coprime leading monomials are skipped."""
    G = list(G)
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if coprime(G[i].lm, G[j].lm):
                continue
            if normal_form(s_polynomial(G[i], G[j]), G):
                return False
    return True


def buchberger(gens: Sequence[Polynomial], max_pairs: int = 100_000,
               max_seconds: Optional[float] = None, check_input: bool = True) -> IdealBasis:
    """Reduced Groebner basis with the product and chain criteria, sugar selection."""
    start = time.monotonic()
    gens = [monic(g) for g in gens if g]
    if not gens:
        return IdealBasis([], 0, True, True)
    n = gens[0].n
    input_gb = is_groebner_basis(gens) if check_input else None

    G: list[Polynomial] = []
    sugar: list[int] = []
    pairs: dict[tuple[int, int], tuple] = {}

    def add(f: Polynomial, s: int):
        G.append(f)
        sugar.append(s)
        j = len(G) - 1
        for i in range(j):
            L = mono_lcm(G[i].lm, f.lm)
            ps = max(sugar[i] + sum(L) - sum(G[i].lm), s + sum(L) - sum(f.lm))
            pairs[(i, j)] = (ps, order_key(L), i, j)

    for g in gens:
        add(g, g.degree)

    reduced = 0
    while pairs:
        if max_seconds is not None and time.monotonic() - start > max_seconds:
            raise BudgetExceeded(f"Buchberger exceeded {max_seconds} s")
        if reduced >= max_pairs:
            raise BudgetExceeded(f"Buchberger exceeded {max_pairs} S-pairs")
        s, _, i, j = min(pairs.values())
        del pairs[(i, j)]
        fi, fj = G[i], G[j]
        if coprime(fi.lm, fj.lm):
            continue
        L = mono_lcm(fi.lm, fj.lm)
        chain = False
        for t in range(len(G)):
            if t in (i, j) or not divides(G[t].lm, L):
                continue
            if (min(i, t), max(i, t)) not in pairs and (min(j, t), max(j, t)) not in pairs:
                chain = True
                break
        if chain:
            continue
        reduced += 1
        r = normal_form(s_polynomial(fi, fj), G)
        if r:
            add(monic(r), s)

    return IdealBasis(_reduce_basis(G), n, True, input_gb, reduced)


def _reduce_basis(G: Sequence[Polynomial]) -> list[Polynomial]:
    lms = [g.lm for g in G]
    keep = []
    for i, g in enumerate(G):
        dominated = any(
            j != i and divides(lms[j], lms[i]) and (lms[j] != lms[i] or j < i)
            for j in range(len(G)))
        if not dominated:
            keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        lt = Polynomial({g.lm: g.lc}, g.n)
        tail = normal_form(g - lt, others)
        out.append(monic(lt + tail))
    return sorted(out, key=lambda p: order_key(p.lm), reverse=True)


def initial_ideal(G: IdealBasis) -> MonomialIdeal:
    return MonomialIdeal([g.lm for g in G.gens], G.n)


def minors_ideal(n: int, k: int) -> IdealBasis:
    """The (k+1)-minors of a generic n x n matrix, as given."""
    return IdealBasis(minors(n, k + 1), n)


def stanley_reisner_complex(J: MonomialIdeal):
    """Complex whose Stanley-Reisner ideal is the squarefree ideal J.

    Vertices are the n^2 beta positions.
    """
    if not J.squarefree:
        raise ValueError("only squarefree ideals have a Stanley-Reisner complex")
    nonfaces = [face_from_indices(p for p, e in enumerate(g) if e) for g in J.mingens]
    return facets_from_nonfaces(J.n * J.n, nonfaces)


@dataclass
class DreitenoereReport:
    n: int
    k: int
    minors_are_gb: bool
    sr_equals_initial: bool
    count_matches_lower: bool
    containment: bool
    facets: int
    lower: int
    gb_size: int
    initial_squarefree: bool
    krull_ok: Optional[bool] = None
    multiplicity_ok: Optional[bool] = None
    modp_agree: Optional[bool] = None
    elapsed: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return self.minors_are_gb == self.sr_equals_initial == self.count_matches_lower

    @property
    def all_true(self) -> bool:
        return self.minors_are_gb and self.sr_equals_initial and self.count_matches_lower

    def to_dict(self) -> dict:
        d = dict(self.__dict__)
        d["agree"] = self.agree
        d["all_true"] = self.all_true
        return d


def check_dreitenoere(n: int, k: int, max_seconds: Optional[float] = None,
                      max_pairs: int = 100_000, modp: bool = True,
                      strict: bool = True) -> DreitenoereReport:
    """Compute the three equivalent statements and compare them.

    (a) the (k+1)-minors form a Groebner basis, (b) the Stanley-Reisner ideal
    of D_{n,k} equals the initial ideal of the minors ideal, (c) the number of
    facets of D*_{n,k} meets the determinantal lower bound.  With ``strict``
    a disagreement raises :class:`VerificationError`.
    """
    start = time.monotonic()
    I = minors_ideal(n, k)
    G = buchberger(I.gens, max_pairs=max_pairs, max_seconds=max_seconds)
    a = bool(G.input_was_gb)
    J = initial_ideal(G)
    SR = MonomialIdeal(sr_generators(n, k), n)
    b = SR == J
    containment = all(J.contains(m) for m in SR.mingens)

    cx = enumerate_facets(ground_set(Mode.B, n, k))
    lower = typeB_lower(n, k)
    c = len(cx) == lower

    rep = DreitenoereReport(n, k, a, b, c, containment, len(cx), lower, len(G.gens),
                            J.squarefree)
    if J.squarefree:
        jcx = stanley_reisner_complex(J)
        top = jcx.dim
        rep.krull_ok = (not b) or top == k * (n - k) - 1 + n * k
        n_top = sum(1 for f in jcx.facets if f.bit_count() == top + 1)
        if top == k * (n - k) - 1 + n * k:
            rep.multiplicity_ok = len(cx) >= n_top
    else:
        rep.notes.append("initial ideal not squarefree; multiplicity check needs polarization")
    if modp:
        Gp = buchberger([to_mod_p(f) for f in I.gens], max_pairs=max_pairs,
                        max_seconds=max_seconds, check_input=False)
        rep.modp_agree = sorted(g.lm for g in Gp.gens) == sorted(g.lm for g in G.gens)
        if not rep.modp_agree:
            raise VerificationError(f"({n},{k}): leading monomials differ over GF({PRIME})")
    rep.elapsed = time.monotonic() - start
    if strict and not rep.agree:
        raise VerificationError(f"({n},{k}): equivalent statements disagree: {a}, {b}, {c}")
    if strict and not containment:
        raise VerificationError(f"({n},{k}): Stanley-Reisner ideal not inside the initial ideal")
    return rep
