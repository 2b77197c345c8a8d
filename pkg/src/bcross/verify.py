"""The verification suite: one item per structural claim, run on desk-scale data."""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

from .complexes import (
    diameter_count,
    enumerate_facets,
    enumerate_symmetric_facets,
    fh_vector,
    symmetrize,
)
from .counting import bounds_report, catalan, cyclic_facet_count, typeA_count
from .errors import BudgetExceeded, VerificationError
from .gale import CyclicSpec, cyclic_facets, verify_cyclic_iso
from .groebner import check_dreitenoere
from .homology import is_homology_sphere, sphere_profile
from .monomials import (
    band,
    class_crossings,
    minor,
    n_set,
    phi_inv,
    psi,
    sr_generator_supports,
    verify_nab,
)
from .polygon import Mode, all_classes, ground_set

PASS, FAIL, SKIP = "pass", "fail", "skipped-budget"


@dataclass
class VerificationOutcome:
    item: str
    title: str
    status: str
    expected: object = None
    actual: object = None
    elapsed: float = 0.0
    diff: list = field(default_factory=list)
    limit: Optional[float] = None

    def line(self) -> str:
        lim = f" (limit {self.limit:g}s)" if self.limit else ""
        return f"[{self.status.upper():>14}] {self.item:<4} {self.title}  {self.elapsed:.2f}s{lim}"

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class Context:
    cache: Optional[str] = None
    seed: Optional[int] = None
    stretch_seconds: float = 300.0
    _complexes: dict = field(default_factory=dict)

    def typeb(self, n: int, k: int):
        key = (n, k)
        if key not in self._complexes:
            from .cache import facets_cached
            self._complexes[key] = facets_cached(ground_set(Mode.B, n, k), self.cache,
                                                 use_cache=self.cache is not None)
        return self._complexes[key]


# -- items: each returns (expected, actual, diff) ----------------------------

def item_typea_counts(ctx):
    expected = {f"({n},1)": catalan(n - 2) for n in range(5, 9)}
    expected["(8,2)"] = 84
    actual = {f"({n},1)": len(enumerate_facets(ground_set(Mode.A, n, 1))) for n in range(5, 9)}
    actual["(8,2)"] = len(enumerate_facets(ground_set(Mode.A, 8, 2)))
    closed = {f"({n},1)": typeA_count(n, 1) for n in range(5, 9)}
    closed["(8,2)"] = typeA_count(8, 2)
    diff = [key for key in expected if not expected[key] == actual[key] == closed[key]]
    return expected, actual, diff


def item_typea_purity(ctx):
    actual, diff = {}, []
    for n in range(3, 9):
        for k in range(1, 4):
            if n < 2 * k + 1:
                continue
            cx = enumerate_facets(ground_set(Mode.A, n, k), check=False)
            sizes = sorted({f.bit_count() for f in cx.facets})
            actual[f"({n},{k})"] = sizes
            if sizes != [k * (n - 2 * k - 1)]:
                diff.append({"n": n, "k": k, "sizes": sizes})
    return "facet size k(n-2k-1)", actual, diff


def item_typeb_counts(ctx):
    expected = {(3, 1): 6, (4, 1): 20, (5, 1): 70, (4, 2): 20, (5, 3): 50}
    for n in range(2, 7):
        expected[(n, n - 1)] = n
    actual = {nk: len(ctx.typeb(*nk)) for nk in expected}
    diff = [f"{nk}" for nk in expected if expected[nk] != actual[nk]]
    fmt = lambda d: {f"T{nk}": v for nk, v in sorted(d.items())}
    return fmt(expected), fmt(actual), diff


def item_typeb_purity(ctx):
    actual, diff = {}, []
    for n in range(2, 6):
        for k in range(1, n):
            sizes = sorted({f.bit_count() for f in ctx.typeb(n, k).facets})
            actual[f"({n},{k})"] = sizes
            if sizes != [k * (n - k)]:
                diff.append({"n": n, "k": k, "sizes": sizes})
    return "facet size k(n-k)", actual, diff


def item_diameters(ctx):
    actual, diff = {}, []
    for n in range(2, 6):
        for k in range(1, n):
            sym = enumerate_symmetric_facets(2 * n, k)
            counts = sorted({diameter_count(sym.ground, f) for f in sym.facets})
            actual[f"2n={2 * n},k={k}"] = {"facets": len(sym), "diameters": counts}
            if counts != [k] or not sym.facets:
                diff.append({"2n": 2 * n, "k": k, "diameter_counts": counts})
    return "exactly k diameters per symmetric facet", actual, diff


def item_homsphere(ctx):
    cases = [(3, 1), (4, 1), (4, 2), (4, 3), (5, 1), (5, 4)]
    actual, diff = {}, []
    for n, k in cases:
        cx = ctx.typeb(n, k)
        rep = is_homology_sphere(cx, "all", seed=ctx.seed)
        actual[f"({n},{k})"] = {"betti": rep.betti[1:], "faces_checked": rep.faces_checked,
                                "passed": rep.passed}
        if rep.betti != sphere_profile(k * (n - k) - 1) or not rep.passed:
            diff.append({"n": n, "k": k, "betti": rep.betti, "failures": rep.failures[:5]})
    return "S^{k(n-k)-1} profile and sphere links", actual, diff


def item_nab(ctx):
    actual, diff = {}, []
    for n in range(2, 7):
        for k in range(1, min(3, n - 1) + 1):
            rep = verify_nab(n, k)
            actual[f"({n},{k})"] = rep.checked
            diff.extend(rep.counterexamples)
    A, B = (1, 3, 6, 8), (3, 4, 7, 9)
    sel = n_set(A, B, 10)
    fig = [(6, 3), (8, 4), (1, 7), (3, 9)]
    lm_ok = minor(A, B, 10).lm == sel.monomial(10)
    actual["n10_example"] = {"ell": sel.ell, "N": [list(p) for p in sel.nset], "lm_matches": lm_ok}
    if list(sel.nset) != fig or not lm_ok:
        diff.append({"n10_example": actual["n10_example"]})
    return "lm(det M(A,B)) = prod N(A,B)", actual, diff


def item_bijection(ctx):
    diff = []
    for n in range(1, 9):
        for c in all_classes(n):
            if phi_inv(*psi(c, n), n) != c:
                diff.append({"n": n, "class": c.label})
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if psi(phi_inv(i, j, n), n) != (i, j):
                    diff.append({"n": n, "pos": (i, j)})
    actual = {"inverse_n_max": 8}
    for n in range(2, 6):
        for k in range(1, n):
            via_psi = {tuple(sorted(psi(c, n) for c in K)) for K in class_crossings(n, k)}
            nsets = set(sr_generator_supports(n, k))
            actual[f"({n},{k})"] = len(nsets)
            if via_psi != nsets:
                diff.append({"n": n, "k": k, "only_crossings": sorted(via_psi - nsets)[:3],
                             "only_N": sorted(nsets - via_psi)[:3]})
    for n in range(2, 7):
        for k in range(1, n):
            excluded = band(n, k)
            if any(p in excluded for s in sr_generator_supports(n, k) for p in s):
                diff.append({"n": n, "k": k, "band_hit": True})
    return "Psi/Phi inverse; crossings <-> N(A,B); band avoided", actual, diff


def item_dreitenoere(ctx):
    actual, diff = {}, []
    for n, k in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)]:
        rep = check_dreitenoere(n, k, strict=False)
        flags = [rep.minors_are_gb, rep.sr_equals_initial, rep.count_matches_lower]
        actual[f"({n},{k})"] = {"gb": flags[0], "sr=in": flags[1], "count": flags[2],
                                "containment": rep.containment, "modp": rep.modp_agree}
        if not (all(flags) and rep.containment and rep.modp_agree):
            diff.append(rep.to_dict())
    return "all three statements true, containment holds", actual, diff


def item_dreitenoere_stretch(ctx):
    rep = check_dreitenoere(4, 2, max_seconds=ctx.stretch_seconds, strict=False)
    actual = {"gb": rep.minors_are_gb, "sr=in": rep.sr_equals_initial,
              "count": rep.count_matches_lower, "containment": rep.containment,
              "elapsed": round(rep.elapsed, 3)}
    diff = [] if rep.all_true and rep.containment else [rep.to_dict()]
    return "(4,2) all true", actual, diff


def item_gale(ctx):
    actual, diff = {}, []
    for d, N, expect in [(4, 8, 20), (6, 10, 50)]:
        got = len(cyclic_facets(CyclicSpec(d, N)))
        actual[f"C_{d}({N})"] = got
        if not got == expect == cyclic_facet_count(d, N):
            diff.append({"d": d, "N": N, "got": got})
    for n in (3, 4, 5):
        for rev in (False, True):
            rep = verify_cyclic_iso(n, reverse=rev)
            actual[f"iso n={n}{' rev' if rev else ''}"] = rep.passed
            if not rep.passed:
                diff.append({"n": n, "reverse": rev, "mismatches": rep.mismatches})
    return {"C_4(8)": 20, "C_6(10)": 50, "iso": True}, actual, diff


def item_bounds(ctx):
    actual, diff = {}, []
    for n in range(2, 6):
        for k in range(1, n):
            T = len(ctx.typeb(n, k))
            rep = bounds_report(n, k)
            rep.enumerated = T
            actual[f"({n},{k})"] = [rep.lower, T, rep.upper_operative]
            if not rep.sandwich_ok:
                diff.append(rep.to_dict())
    r42 = bounds_report(4, 2)
    actual["literal_even_case_(4,2)"] = {"literal": r42.upper_literal,
                                         "enumerated": len(ctx.typeb(4, 2)),
                                         "operative": r42.upper_operative}
    if (r42.upper_literal, r42.upper_operative) != (40, 20):
        diff.append({"literal_check": actual["literal_even_case_(4,2)"]})
    return "lower <= T <= upper", actual, diff


def item_hvector(ctx):
    actual, diff = {}, []
    for n in range(2, 6):
        for k in range(1, n):
            fh = fh_vector(ctx.typeb(n, k))
            actual[f"({n},{k})"] = list(fh.h)
            if not (fh.symmetric and fh.unimodal):
                diff.append({"n": n, "k": k, "h": list(fh.h)})
    return "symmetric and unimodal h", actual, diff


@dataclass
class SuiteItem:
    item: str
    title: str
    run: Callable
    limit: Optional[float] = None
    stretch: bool = False


SMALL = [
    SuiteItem("1", "type-A facet counts", item_typea_counts, 30),
    SuiteItem("2", "type-A purity and dimension", item_typea_purity),
    SuiteItem("3", "type-B facet counts", item_typeb_counts, 60),
    SuiteItem("4", "type-B purity and dimension", item_typeb_purity),
    SuiteItem("5", "k diameters per symmetric facet", item_diameters),
    SuiteItem("6", "mod-2 homology spheres", item_homsphere, 180),
    SuiteItem("7", "leading monomials of minors", item_nab, 60),
    SuiteItem("8", "bijections and Stanley-Reisner generators", item_bijection),
    SuiteItem("9", "Groebner equivalences", item_dreitenoere, 120),
    SuiteItem("9s", "Groebner equivalences (4,2), stretch", item_dreitenoere_stretch, stretch=True),
    SuiteItem("10", "Gale evenness and the cyclic isomorphism", item_gale),
    SuiteItem("11", "bounds sandwich", item_bounds),
    SuiteItem("12", "h-vectors of the spheres", item_hvector),
]

SUITES = {"small": SMALL, "quick": [it for it in SMALL if it.item in {"1", "3", "7", "10"}]}


def run_item(it: SuiteItem, ctx: Context) -> VerificationOutcome:
    start = time.monotonic()
    try:
        expected, actual, diff = it.run(ctx)
        status = PASS if not diff else FAIL
    except BudgetExceeded as exc:
        expected, actual, diff, status = None, str(exc), [], SKIP
    except VerificationError as exc:
        expected, actual, diff, status = None, str(exc), [str(exc)], FAIL
    elapsed = time.monotonic() - start
    if status == PASS and it.limit is not None and elapsed > it.limit:
        status = FAIL
        diff = [f"elapsed {elapsed:.1f}s over limit {it.limit}s"]
    return VerificationOutcome(it.item, it.title, status, expected, actual, elapsed, diff, it.limit)


def run_suite(name: str = "small", ctx: Optional[Context] = None,
              only: Optional[set] = None) -> list[VerificationOutcome]:
    ctx = ctx or Context()
    items = SUITES[name]
    return [run_item(it, ctx) for it in items if only is None or it.item in only]


def suite_exit_code(outcomes: list[VerificationOutcome], allow_skip: bool = False) -> int:
    if any(o.status == FAIL for o in outcomes):
        return 1
    if any(o.status == SKIP for o in outcomes) and not allow_skip:
        return 1
    return 0


def symmetric_bijection_holds(n: int, k: int) -> bool:
    """Symmetrizing the facets of D*_{n,k} gives exactly the symmetric facets of Delta*_{2n,k}."""
    typeb = ground_set(Mode.B, n, k)
    cx = enumerate_facets(typeb)
    sym = enumerate_symmetric_facets(2 * n, k)
    images = [symmetrize(typeb, f, sym.ground) for f in cx.facets]
    return len(set(images)) == len(images) and set(images) == set(sym.facets)

