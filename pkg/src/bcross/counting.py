"""Closed-form facet counts and bounds, in exact integer arithmetic."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from .errors import VerificationError


def catalan(m: int) -> int:
    if m < 0:
        raise ValueError("Catalan numbers start at index 0")
    return comb(2 * m, m) // (m + 1)


def bareiss_det(M: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination; exact for integer matrices."""
    a = [list(r) for r in M]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def hankel_catalan(n: int, k: int) -> int:
    """det [C_{n-i-j}]_{i,j=1..k}."""
    return bareiss_det([[catalan(n - i - j) for j in range(1, k + 1)] for i in range(1, k + 1)])


def typeA_product(n: int, k: int) -> Fraction:
    p = Fraction(1)
    m = n - 2 * k - 1
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            p *= Fraction(i + j + 2 * k, i + j)
    return p


def typeA_count(n: int, k: int) -> int:
    """Number of facets of Delta*_{n,k}; determinant and product must agree."""
    if k < 1 or n < 2 * k + 1:
        raise ValueError(f"need n >= 2k+1, got n={n}, k={k}")
    det = hankel_catalan(n, k)
    prod = typeA_product(n, k)
    if prod != det:
        raise VerificationError(f"type-A count: determinant {det} != product {prod}")
    return det


def typeB_lower_forms(n: int, k: int) -> tuple[int, int, Fraction]:
    d1 = bareiss_det([[comb(2 * n - i - j, n - i) for j in range(1, k + 1)]
                      for i in range(1, k + 1)])
    m = n - k
    d2 = bareiss_det([[comb(2 * m, m + i - j) if 0 <= m + i - j <= 2 * m else 0
                       for j in range(1, k + 1)] for i in range(1, k + 1)])
    p = Fraction(1)
    for h in range(1, m + 1):
        for i in range(1, k + 1):
            for j in range(1, m + 1):
                p *= Fraction(h + i + j - 1, h + i + j - 2)
    return d1, d2, p


def typeB_lower(n: int, k: int) -> int:
    """Determinantal lower bound for the number of facets of D*_{n,k}."""
    if not (1 <= k <= n - 1):
        raise ValueError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    d1, d2, p = typeB_lower_forms(n, k)
    if not (d1 == d2 == p):
        raise VerificationError(f"type-B lower bound forms disagree: {d1}, {d2}, {p}")
    return d1


def cyclic_facet_count(d: int, N: int) -> int:
    """Number of facets of the cyclic polytope C_d(N), d < N."""
    if not (1 <= d < N):
        raise ValueError(f"need 1 <= d < N, got d={d}, N={N}")
    if d % 2 == 0:
        h = d // 2
        return comb(N - h, h) + comb(N - h - 1, h - 1)
    return 2 * comb(N - (d + 1) // 2, (d - 1) // 2)


def typeB_upper_literal(n: int, k: int) -> int:
    """The upper-bound case formula as printed, evaluated verbatim."""
    m2 = (n - k) ** 2
    d = k * (n - k)
    if d % 2:
        return 2 * comb(m2 + (d - 1) // 2, m2)
    return 2 * comb(m2 + d // 2, m2) + comb(m2 - 1 + d // 2, m2 - 1)


def typeB_upper(n: int, k: int) -> tuple[int, int]:
    """(operative, literal) upper bound: facets of C_{k(n-k)}(n(n-k))."""
    if not (1 <= k <= n - 1):
        raise ValueError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    return cyclic_facet_count(k * (n - k), n * (n - k)), typeB_upper_literal(n, k)


@dataclass
class BoundsReport:
    n: int
    k: int
    lower: int
    enumerated: Optional[int]
    upper_operative: int
    upper_literal: int
    typeA_count: Optional[int] = None

    @property
    def lower_is_tight(self) -> Optional[bool]:
        return None if self.enumerated is None else self.enumerated == self.lower

    @property
    def sandwich_ok(self) -> Optional[bool]:
        if self.enumerated is None:
            return None
        return self.lower <= self.enumerated <= self.upper_operative

    def to_dict(self) -> dict:
        d = asdict(self)
        d["lower_is_tight"] = self.lower_is_tight
        d["sandwich_ok"] = self.sandwich_ok
        d["literal_matches_operative"] = self.upper_literal == self.upper_operative
        return d


def bounds_report(n: int, k: int, with_enumeration: bool = False, **budget) -> BoundsReport:
    lower = typeB_lower(n, k)
    op, lit = typeB_upper(n, k)
    enumerated = None
    if with_enumeration:
        from .complexes import enumerate_facets
        from .polygon import Mode, ground_set
        enumerated = len(enumerate_facets(ground_set(Mode.B, n, k), **budget))
    ta = typeA_count(2 * n, k) if 2 * n >= 2 * k + 1 else None
    rep = BoundsReport(n, k, lower, enumerated, op, lit, ta)
    if rep.sandwich_ok is False:
        raise VerificationError(f"({n},{k}): {lower} <= {enumerated} <= {op} fails")
    return rep
