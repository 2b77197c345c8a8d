"""Monomials and polynomials in the entries of a generic n x n matrix.

Matrix indices (i, j) are 1-based here.  Variables are ranked by

    phi(i, j) = [((2 - i) n + (j - 1)(n - 1) - 1) mod n^2] + 1,

and a monomial is stored as its exponent vector ``beta`` of length n^2 where
position ``l`` (0-based) carries the exponent of the variable of rank n^2 - l.
Monomials are compared by total degree, then reverse-lexicographically: at
the last position where two vectors differ, the larger entry marks the smaller
monomial.  All other modules treat monomials as plain tuples in this layout.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

from .errors import VerificationError
from .polygon import Diagonal, DiagonalClass, all_classes, crosses

Monomial = tuple  # tuple[int, ...] of length n*n in beta layout


def phi(i: int, j: int, n: int) -> int:
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"({i},{j}) outside a {n}x{n} matrix")
    return ((2 - i) * n + (j - 1) * (n - 1) - 1) % (n * n) + 1


@dataclass(frozen=True)
class VarRank:
    n: int

    def __post_init__(self):
        ranks = {phi(i, j, self.n) for i in range(1, self.n + 1) for j in range(1, self.n + 1)}
        if ranks != set(range(1, self.n * self.n + 1)):
            raise ValueError(f"phi is not a bijection for n={self.n}")

    def rank(self, i: int, j: int) -> int:
        return phi(i, j, self.n)

    def position(self, i: int, j: int) -> int:
        """0-based index into the beta vector."""
        return self.n * self.n - phi(i, j, self.n)

    def entry(self, pos: int) -> tuple[int, int]:
        return _entry_table(self.n)[pos]

    def variables_descending(self) -> list[tuple[int, int]]:
        """Matrix entries from the largest variable to the smallest."""
        return list(_entry_table(self.n))


@lru_cache(maxsize=None)
def _entry_table(n: int) -> tuple[tuple[int, int], ...]:
    table = [None] * (n * n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            table[n * n - phi(i, j, n)] = (i, j)
    return tuple(table)


@lru_cache(maxsize=None)
def _positions(n: int) -> dict:
    return {e: p for p, e in enumerate(_entry_table(n))}


def one(n: int) -> Monomial:
    return (0,) * (n * n)


def monomial(entries: Iterable[tuple[int, int]], n: int) -> Monomial:
    """Product of x_{ij} over ``entries`` (repeats raise the exponent)."""
    exps = [0] * (n * n)
    pos = _positions(n)
    for e in entries:
        exps[pos[tuple(e)]] += 1
    return tuple(exps)


def support(m: Monomial, n: int) -> list[tuple[int, int]]:
    """Matrix entries dividing ``m``, sorted by (i, j)."""
    table = _entry_table(n)
    return sorted(table[p] for p, e in enumerate(m) if e)


def order_key(m: Monomial) -> tuple:
    """Sort key: larger key means larger monomial."""
    return (sum(m), tuple(-e for e in reversed(m)))


def compare(m1: Monomial, m2: Monomial) -> int:
    if len(m1) != len(m2):
        raise ValueError("monomials over different rings")
    d1, d2 = sum(m1), sum(m2)
    if d1 != d2:
        return -1 if d1 < d2 else 1
    for a, b in zip(reversed(m1), reversed(m2)):
        if a != b:
            return -1 if a > b else 1
    return 0


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(m1, m2))


def divides(m1: Monomial, m2: Monomial) -> bool:
    return all(a <= b for a, b in zip(m1, m2))


def mono_div(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(a - b for a, b in zip(m1, m2))


def mono_lcm(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(m1, m2))


def coprime(m1: Monomial, m2: Monomial) -> bool:
    return not any(a and b for a, b in zip(m1, m2))


def mono_str(m: Monomial, n: int) -> str:
    table = _entry_table(n)
    parts = []
    for p in sorted(range(len(m)), key=lambda p: table[p]):
        e = m[p]
        if e:
            i, j = table[p]
            parts.append(f"x[{i},{j}]" + (f"^{e}" if e > 1 else ""))
    return " * ".join(parts) or "1"


class Polynomial:
    """Sparse polynomial: dict from monomial to a nonzero field element."""

    __slots__ = ("terms", "n", "_lm")

    def __init__(self, terms: dict, n: int):
        self.terms = {m: c for m, c in terms.items() if c}
        self.n = n
        self._lm = None

    @classmethod
    def from_monomial(cls, m: Monomial, n: int, c=1) -> "Polynomial":
        return cls({m: Fraction(c) if isinstance(c, int) else c}, n)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return Polynomial(t, self.n)

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()}, self.n)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                t[m] = t.get(m, 0) + c1 * c2
        return Polynomial(t, self.n)

    def scale(self, c, m: Monomial | None = None) -> "Polynomial":
        if m is None:
            return Polynomial({t: c * v for t, v in self.terms.items()}, self.n)
        return Polynomial({mono_mul(t, m): c * v for t, v in self.terms.items()}, self.n)

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        return sorted(self.terms.items(), key=lambda mc: order_key(mc[0]), reverse=True)

    @property
    def lm(self) -> Monomial:
        if self._lm is None:
            self._lm = max(self.terms, key=order_key)
        return self._lm

    @property
    def lc(self):
        return self.terms[self.lm]

    @property
    def degree(self) -> int:
        return max(sum(m) for m in self.terms)

    def to_json(self) -> list:
        return [[str(c), [[i, j, e] for (i, j), e in _entry_exps(m, self.n)]]
                for m, c in self.sorted_terms()]

    def __repr__(self):
        if not self.terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            out.append(f"{c}*{mono_str(m, self.n)}")
        return " + ".join(out).replace("+ -", "- ")


def _entry_exps(m: Monomial, n: int) -> Iterator[tuple[tuple[int, int], int]]:
    table = _entry_table(n)
    for p in sorted(range(len(m)), key=lambda p: table[p]):
        if m[p]:
            yield table[p], m[p]


def leading_monomial(p: Polynomial) -> Monomial:
    return p.lm


# -- minors and the index set N(A, B) ----------------------------------------

@dataclass(frozen=True)
class MinorSelection:
    A: tuple[int, ...]
    B: tuple[int, ...]
    ell: int
    nset: tuple[tuple[int, int], ...]  # ordered by column position i = 1..k+1

    def monomial(self, n: int) -> Monomial:
        return monomial(self.nset, n)


def _check_selection(A: Sequence[int], B: Sequence[int], n: int):
    if len(A) != len(B) or not A:
        raise ValueError("A and B must be nonempty and of equal size")
    for S in (A, B):
        if any(x >= y for x, y in zip(S, S[1:])):
            raise ValueError(f"{S} is not strictly increasing")
        if S[0] < 1 or S[-1] > n:
            raise ValueError(f"{S} leaves [1..{n}]")


def n_set(A: Sequence[int], B: Sequence[int], n: int) -> MinorSelection:
    """Row/column pairs carrying the leading monomial of det M(A, B)."""
    A, B = tuple(A), tuple(B)
    _check_selection(A, B, n)
    s = len(A)
    for ell in range(s + 1):
        # a_{i+ell} > b_i for i = 1..s-ell (1-based)
        if all(A[i + ell] > B[i] for i in range(s - ell)):
            break
    # residues of (i + ell) mod s taken in 1..s
    nset = tuple((A[(i + ell - 1) % s], B[i - 1]) for i in range(1, s + 1))
    return MinorSelection(A, B, ell, nset)


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def minor(A: Sequence[int], B: Sequence[int], n: int, max_size: int = 5) -> Polynomial:
    """det M(A, B) expanded over permutations."""
    A, B = tuple(A), tuple(B)
    _check_selection(A, B, n)
    if len(A) > max_size:
        raise ValueError(f"minor of size {len(A)} exceeds the expansion budget {max_size}")
    terms = {}
    for p in permutations(range(len(A))):
        m = monomial(((A[r], B[p[r]]) for r in range(len(A))), n)
        terms[m] = Fraction(_perm_sign(p))
    return Polynomial(terms, n)


def minors(n: int, size: int) -> list[Polynomial]:
    return [minor(A, B, n) for A in combinations(range(1, n + 1), size)
            for B in combinations(range(1, n + 1), size)]


@dataclass
class NABReport:
    n: int
    k: int
    checked: int
    counterexamples: list

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def verify_nab(n: int, k: int, max_size: int = 4) -> NABReport:
    """Check lm(det M(A,B)) == prod_{N(A,B)} x_ij for every (k+1)-selection."""
    if k + 1 > max_size:
        raise ValueError(f"minors of size {k + 1} exceed the budget {max_size}")
    bad = []
    count = 0
    for A in combinations(range(1, n + 1), k + 1):
        for B in combinations(range(1, n + 1), k + 1):
            count += 1
            lm = minor(A, B, n).lm
            sel = n_set(A, B, n)
            if lm != sel.monomial(n):
                bad.append({"A": A, "B": B, "lm": support(lm, n), "N": sorted(sel.nset)})
    return NABReport(n, k, count, bad)


# -- the bijections between rotation classes and matrix positions ------------

def _mod1(x: int, m: int) -> int:
    """Residue of x mod m in 1..m."""
    return (x - 1) % m + 1


def psi(c: DiagonalClass, n: int) -> tuple[int, int]:
    """Matrix position of a rotation class of the 2n-gon (0-based vertices)."""
    if c.N != 2 * n:
        raise ValueError(f"class of a {c.N}-gon, expected {2 * n}")
    a, b = c.rep.a, c.rep.b
    if b - a <= n:
        return _mod1(a + 1, n), _mod1(b, n)
    return _mod1(b + 1, n), _mod1(a, n)


def phi_inv(i: int, j: int, n: int) -> DiagonalClass:
    """Inverse of :func:`psi`."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"({i},{j}) outside a {n}x{n} matrix")
    N = 2 * n
    if i <= j:
        d = Diagonal.of((i - 1) % N, j, N)
    else:
        d = Diagonal.of(i - 1 + n, j, N)
    return DiagonalClass.of(d)


def band(n: int, k: int) -> set[tuple[int, int]]:
    """Positions j = (i + l) mod n with 0 <= l < k; images of the short classes."""
    return {(i, _mod1(i + l, n)) for i in range(1, n + 1) for l in range(k)}


def classes_cross(classes: Sequence[DiagonalClass]) -> bool:
    """Do the classes admit pairwise crossing representatives?"""
    def pick(i: int, chosen: list[Diagonal]) -> bool:
        if i == len(classes):
            return True
        for d in classes[i].members:
            if all(crosses(d, e) for e in chosen) and pick(i + 1, chosen + [d]):
                return True
        return False

    return pick(0, [])


def class_crossings(n: int, k: int) -> list[tuple[DiagonalClass, ...]]:
    """All (k+1)-crossings among the classes of length > k of the 2n-gon."""
    verts = [c for c in all_classes(n) if c.length > k]
    return [combo for combo in combinations(verts, k + 1) if classes_cross(combo)]


def sr_generator_supports(n: int, k: int) -> list[tuple[tuple[int, int], ...]]:
    """Distinct sets N(A, B) over all (k+1)-subsets A, B of [n], sorted."""
    sups = {tuple(sorted(n_set(A, B, n).nset))
            for A in combinations(range(1, n + 1), k + 1)
            for B in combinations(range(1, n + 1), k + 1)}
    return sorted(sups)


def minimize_monomials(monos: Iterable[Monomial]) -> list[Monomial]:
    """Minimal generators under divisibility, in ascending term order."""
    ms = sorted(set(monos), key=order_key)
    out: list[Monomial] = []
    for m in ms:
        if not any(divides(g, m) for g in out):
            out.append(m)
    return out


def sr_generators(n: int, k: int, verify: bool = True) -> list[Monomial]:
    """Minimal monomial generators prod_{N(A,B)} x_ij of the Stanley-Reisner ideal.

    With ``verify`` each support is checked to come from a (k+1)-crossing
    of classes under :func:`phi_inv`.
    """
    if not (1 <= k <= n - 1):
        raise ValueError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    sups = sr_generator_supports(n, k)
    if verify:
        for s in sups:
            cls = [phi_inv(i, j, n) for i, j in s]
            if len(set(cls)) != k + 1 or not classes_cross(cls):
                raise VerificationError(f"N-set {s} does not map to a {k + 1}-crossing")
    gens = minimize_monomials(monomial(s, n) for s in sups)
    return sorted(gens, key=lambda m: support(m, n))
