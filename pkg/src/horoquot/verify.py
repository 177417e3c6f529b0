"""Named verification suites that replay the library's mathematical guarantees.

Each suite is a deterministic function returning a :class:`SuiteResult`; the
random ones use fixed seeds so repeated runs are byte-identical.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from math import prod
from typing import Callable

from .cones import Cone
from .quotient_analysis import (
    NOT_COFREE,
    NodeSet,
    POLYNOMIAL_NOT_COFREE,
    classify_cofree,
    diagram_automorphisms,
    dual_admissibility_cone,
    enumerate_sparse_sets,
    hv_report,
    nonsimple_root_cone,
    nullcone_codim2_witness,
    s_variety_report,
)
from .repdata import (
    chain_weight,
    dynkin_paths,
    freudenthal_multiplicity,
    multiplicity_table,
    u2_weight_set,
    weyl_dimension,
)
from .rootsystem import RootSystem, build_root_system, cartan_inverse_diagonal
from .weylgroup import min_length_satisfying


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.checks > 0 and not self.failures

    def check(self, ok: bool, what: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(what)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {self.checks} checks, {len(self.failures)} failures -> {status}"


def simple_types(max_rank: int, min_rank: int = 1) -> list[str]:
    """Every simple type of rank in [min_rank, max_rank], families in order A..G."""
    out = []
    lo = {"A": 1, "B": 2, "C": 2, "D": 3}
    for fam in "ABCD":
        out += [f"{fam}{r}" for r in range(max(lo[fam], min_rank), max_rank + 1)]
    for name, r in (("E6", 6), ("E7", 7), ("E8", 8), ("F4", 4), ("G2", 2)):
        if min_rank <= r <= max_rank:
            out.append(name)
    return out


def _dominant_box(r: int, bound: int):
    return product(range(bound + 1), repeat=r)


# ---------------------------------------------------------------------------


def suite_u2_cardinality() -> SuiteResult:
    res = SuiteResult("u2-cardinality")
    rng = random.Random(1001)
    for ty in simple_types(6):
        rs = build_root_system(ty)
        for _ in range(500):
            lam = tuple(rng.randint(0, 5) for _ in range(rs.rank))
            n = len(u2_weight_set(rs, lam))
            res.check(n == prod(a + 1 for a in lam), f"{ty} {lam}: |I| = {n}")
    return res


def suite_a3_example() -> SuiteResult:
    res = SuiteResult("a3-example")
    rs = build_root_system("A3")
    rep = s_variety_report(rs, [(1, 0, 0), (0, 0, 1)])
    res.check(rep.dim_X == 7, f"dim_X = {rep.dim_X}")
    res.check(rep.dim_quotient_U2 == 4, f"dim_quotient_U2 = {rep.dim_quotient_U2}")
    res.check(rep.polynomial is True, "polynomial")
    res.check(rep.equidimensional is False, "equidimensional")
    res.check(weyl_dimension(rs, (1, 0, 0)) == 4, "dim R(w1)")
    res.check(weyl_dimension(rs, (0, 0, 1)) == 4, "dim R(w3)")
    return res


def _hv_expectation(lam: tuple[int, ...]) -> int | None:
    """0 for fundamental, 1 for w_i + w_j or 2 w_i, None otherwise."""
    s = sum(lam)
    if s == 1:
        return 0
    if s == 2:
        return 1
    return None


def suite_hv_formulas() -> SuiteResult:
    res = SuiteResult("hv-formulas")
    for ty in simple_types(5):
        rs = build_root_system(ty)
        for lam in _dominant_box(rs.rank, 3):
            if not any(lam):
                continue
            hd = hv_report(rs, lam).hd
            want = _hv_expectation(lam)
            res.check((hd == 0) == (want == 0), f"{ty} {lam}: hd={hd}")
            res.check((hd == 1) == (want == 1), f"{ty} {lam}: hd={hd}")
    return res


def small_weights(rs: RootSystem, max_dim: int) -> list[tuple[int, ...]]:
    """Dominant weights with Weyl dimension <= max_dim (dimension grows in every coordinate)."""
    out = []

    def grow(lam: list[int], k: int):
        if k == rs.rank:
            out.append(tuple(lam))
            return
        a = 0
        while True:
            lam[k] = a
            probe = lam[:k + 1] + [0] * (rs.rank - k - 1)
            if weyl_dimension(rs, probe) > max_dim:
                break
            grow(lam, k + 1)
            a += 1
        lam[k] = 0

    grow([0] * rs.rank, 0)
    return out


def suite_oracle_agreement() -> SuiteResult:
    res = SuiteResult("oracle-agreement")
    for ty in simple_types(6):
        rs = build_root_system(ty)
        for lam in small_weights(rs, 2000):
            d = weyl_dimension(rs, lam)
            total = multiplicity_table(rs, lam).dimension()
            res.check(d == total, f"{ty} {lam}: Weyl {d} vs Freudenthal {total}")
    return res


def suite_chain_multiplicity() -> SuiteResult:
    res = SuiteResult("chain-multiplicity")
    for ty in simple_types(6):
        rs = build_root_system(ty)
        for path in dynkin_paths(rs):
            mu = chain_weight(rs, path)
            lam = rs.fundamental_weight(path[0])
            m = freudenthal_multiplicity(rs, lam, mu)
            res.check(m == 1, f"{ty} path {path}: multiplicity {m}")
    return res


def suite_length_bound() -> SuiteResult:
    res = SuiteResult("length-bound")
    for ty in simple_types(4):
        rs = build_root_system(ty)
        for M in enumerate_sparse_sets(rs):
            ell = min_length_satisfying(rs, M.nodes)
            # None means no w meets the hypothesis, so the bound holds vacuously
            ok = ell is None or ell >= 2 * len(M)
            res.check(ok, f"{ty} M={M}: min length {ell}")
    return res


def suite_cone_identity() -> SuiteResult:
    res = SuiteResult("cone-identity")
    for ty in simple_types(6, 2):
        rs = build_root_system(ty)
        lhs = dual_admissibility_cone(rs)
        rhs = nonsimple_root_cone(rs, "coweight")
        same = lhs.rays == rhs.rays and lhs.lineality == rhs.lineality
        res.check(same, f"{ty}: {lhs.rays} vs {rhs.rays}")
    return res


def _is_type_a(ty: str) -> bool:
    # D3 is A3 with other labels
    return ty.startswith("A") or ty == "D3"


def suite_cartan_inverse() -> SuiteResult:
    res = SuiteResult("cartan-inverse")
    for ty in simple_types(6, 2):
        rs = build_root_system(ty)
        cone = nonsimple_root_cone(rs, "weight")
        diag = cartan_inverse_diagonal(rs)
        if _is_type_a(ty):
            if ty.startswith("A"):
                res.check(not cone.contains(rs.fundamental_weight(1)), f"{ty}: w1 inside")
                res.check(diag[0] < 1 and diag[-1] < 1, f"{ty}: diagonal {diag}")
            else:
                res.check(min(diag) < 1, f"{ty}: diagonal {diag}")
        else:
            fund = Cone(rs.rank, [rs.fundamental_weight(i).coords for i in range(1, rs.rank + 1)], "weight")
            res.check(cone.contains_cone(fund), f"{ty}: fundamental cone not contained")
            res.check(all(x >= 1 for x in diag), f"{ty}: diagonal {diag}")
    return res


def suite_nullcone_witness() -> SuiteResult:
    res = SuiteResult("nullcone-witness")
    for ty in simple_types(5, 2):
        rs = build_root_system(ty)
        for lam in _dominant_box(rs.rank, 2):
            if not any(lam):
                continue
            w = nullcone_codim2_witness(rs, lam)
            res.check(w.certified, f"{ty} {lam}: {w.to_json()}")
    return res


# Independently written list (Bourbaki numbering, every diagram-symmetric
# image and low-rank coincidence spelled out) with the module dimension.
_GOOD = {
    ("A3", 2): 6, ("B2", 2): 4, ("C2", 2): 5,
    ("B3", 3): 8, ("B4", 4): 16, ("D3", 2): 4, ("D3", 3): 4,
    ("D4", 3): 8, ("D4", 4): 8, ("D5", 4): 16, ("D5", 5): 16,
    ("E6", 1): 27, ("E6", 6): 27, ("G2", 1): 7,
}
_BAD = {("B5", 5): 32, ("D6", 5): 32, ("D6", 6): 32, ("E7", 7): 56, ("F4", 4): 26}


def _expected_cofree(ty: str, i: int) -> str:
    fam, r = ty[0], int(ty[1:])
    if (ty, i) in _GOOD:
        return "cofree"
    if i == 1 and fam in "BCD":
        return "cofree"
    if fam == "A" and i in (1, r):
        return "cofree"
    if (ty, i) in _BAD:
        return POLYNOMIAL_NOT_COFREE
    if fam == "A" and r >= 4 and i in (2, r - 1):
        return POLYNOMIAL_NOT_COFREE
    return NOT_COFREE


def suite_cofree_table() -> SuiteResult:
    res = SuiteResult("cofree-table")
    for (ty, i), dim in sorted({**_GOOD, **_BAD}.items()):
        rs = build_root_system(ty)
        d = weyl_dimension(rs, rs.fundamental_weight(i))
        res.check(d == dim, f"{ty} w{i}: dimension {d}, expected {dim}")
    listed = 0
    for ty in simple_types(8, 2):
        rs = build_root_system(ty)
        t = rs.factors[0]
        r = rs.rank
        for i in range(1, r + 1):
            want = _expected_cofree(ty, i)
            listed += want != NOT_COFREE
            lam = rs.fundamental_weight(i)
            v = classify_cofree(rs, lam)
            res.check(v.tag == want and v.cofree == (want == "cofree"), f"{ty} w{i}: {v.tag}, expected {want}")
            for perm in diagram_automorphisms(t):
                img = [0] * r
                img[perm[i - 1]] = 1
                u = classify_cofree(rs, img)
                res.check(u.tag == v.tag and u.normalized_weight == v.normalized_weight,
                          f"{ty} w{i} vs image {img}: {u.tag}")
        # a few non-fundamental weights, never cofree
        for lam in ([2] + [0] * (r - 1), [1, 1] + [0] * (r - 2)):
            v = classify_cofree(rs, lam)
            res.check(v.tag == NOT_COFREE, f"{ty} {lam}: {v.tag}")
    res.check(listed >= 40, f"only {listed} listed pairs")
    return res


def suite_cone_invariance() -> SuiteResult:
    res = SuiteResult("cone-invariance")
    rng = random.Random(1011)
    for ty in simple_types(5):
        rs = build_root_system(ty)
        r = rs.rank
        sparse = [M for M in enumerate_sparse_sets(rs) if len(M)]
        others = [M for M in _all_nonempty(r) if M not in {frozenset(s.nodes) for s in sparse}]
        for trial in range(50):
            pool = sparse if trial % 5 or not others else [NodeSet(o) for o in others]
            M = sorted(rng.choice(pool).nodes)
            base = [rs.fundamental_weight(i).coords for i in M]
            verdict = s_variety_report(rs, base).equidimensional
            res.check(verdict == (pool is sparse), f"{ty} M={M}: base verdict {verdict}")
            doubled = [tuple(2 * x for x in g) for g in base]
            res.check(s_variety_report(rs, doubled).equidimensional == verdict, f"{ty} M={M}: doubled")
            res.check(s_variety_report(rs, base + doubled).equidimensional == verdict, f"{ty} M={M}: both")
            interior = [tuple(rng.randint(1, 3) if k + 1 in M else 0 for k in range(r)) for _ in range(2)]
            res.check(s_variety_report(rs, base + interior).equidimensional == verdict, f"{ty} M={M}: interior {interior}")
    return res


def _all_nonempty(r: int) -> list[frozenset[int]]:
    return [frozenset(i + 1 for i in range(r) if mask >> i & 1) for mask in range(1, 1 << r)]


SUITES: dict[str, Callable[[], SuiteResult]] = {
    "u2-cardinality": suite_u2_cardinality,
    "a3-example": suite_a3_example,
    "hv-formulas": suite_hv_formulas,
    "oracle-agreement": suite_oracle_agreement,
    "chain-multiplicity": suite_chain_multiplicity,
    "length-bound": suite_length_bound,
    "cone-identity": suite_cone_identity,
    "cartan-inverse": suite_cartan_inverse,
    "nullcone-witness": suite_nullcone_witness,
    "cofree-table": suite_cofree_table,
    "cone-invariance": suite_cone_invariance,
}


def run_suite(name: str) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name]()
