"""Decision procedures for U'-quotients of horospherical varieties.

Everything here is combinatorics of the Dynkin diagram, the weight lattice
and a few rational cones:

* sparse node sets and their enumeration,
* dimension / embedding-dimension formulas for HV-varieties (``hv_report``),
* polynomiality and equidimensionality of C(S)//U' (``s_variety_report``),
* the Weyl-group witness that the null-cone has codimension 2,
* admissible one-parameter subgroups and the cone con(positive non-simple roots),
* the contraction hypotheses and the classification of U'-cofree simple modules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import prod
from typing import Iterable, Sequence

from . import linalg
from .cones import Cone, dual_cone
from .repdata import in_u2_weight_set
from .rootsystem import (
    RootSystem,
    RootSystemError,
    SimpleType,
    Weight,
    build_root_system,
    pairing,
)
from .weylgroup import WeylElement, act_on_root, from_word

MAX_GENERATORS = 32
MAX_COORD = 10**6
SEARCH_BUDGET = 2_000_000


class AnalysisError(ValueError):
    pass


class ResourceLimitError(RuntimeError):
    """A bounded search ran out of budget; the caller should shrink the input."""


class HypothesisError(ValueError):
    """The input lies outside the setting where a procedure makes sense."""


def _fmt(x) -> str:
    return str(Fraction(x))


def _weight_json(w: Weight) -> list[str]:
    return [_fmt(c) for c in w.coords]


# ---------------------------------------------------------------------------
# data types


@dataclass(frozen=True)
class NodeSet:
    nodes: frozenset[int]

    def __init__(self, nodes: Iterable[int] = ()):
        object.__setattr__(self, "nodes", frozenset(int(n) for n in nodes))

    def check(self, rs: RootSystem) -> "NodeSet":
        for n in self.nodes:
            rs.check_node(n)
        return self

    def __iter__(self):
        return iter(sorted(self.nodes))

    def __len__(self):
        return len(self.nodes)

    def __contains__(self, n):
        return n in self.nodes

    def sort_key(self):
        return (len(self.nodes), tuple(sorted(self.nodes)))

    def __repr__(self):
        return "{" + ", ".join(str(n) for n in sorted(self.nodes)) + "}"


@dataclass(frozen=True)
class MonoidSpec:
    """Generators of a monoid of dominant weights."""

    generators: tuple[Weight, ...]

    def __init__(self, generators: Iterable):
        object.__setattr__(self, "generators", tuple(Weight(g) for g in generators))

    def validate(self, rs: RootSystem) -> "MonoidSpec":
        if not self.generators:
            raise AnalysisError("a monoid needs at least one generator")
        for g in self.generators:
            rs.weight(g)
            if not g.is_dominant_integral():
                raise AnalysisError(f"generator {g} is not dominant integral")
            if g.is_zero():
                raise AnalysisError("zero generator")
        return self

    def to_json(self):
        return [_weight_json(g) for g in self.generators]


@dataclass(frozen=True)
class SparseViolation:
    """Why a node set fails to be sparse.

    ``kind`` is ``"adjacent"`` (nodes = (i, j), both in M) or
    ``"common_neighbour"`` (nodes = (i, j, k), k outside M adjacent to i and j).
    """

    kind: str
    nodes: tuple[int, ...]

    def to_json(self):
        return {"kind": self.kind, "nodes": list(self.nodes)}


@dataclass(frozen=True)
class SparseResult:
    sparse: bool
    witness: SparseViolation | None = None

    def __bool__(self):
        return self.sparse


@dataclass(frozen=True)
class HvReport:
    weight: Weight
    dim_X: int
    dim_quotient: int
    ed: int
    hd: int
    k: int

    def to_json(self):
        return {"lambda": _weight_json(self.weight), "dim_X": self.dim_X,
                "dim_quotient": self.dim_quotient, "ed": self.ed, "hd": self.hd, "k": self.k}


@dataclass(frozen=True)
class AnalysisReport:
    monoid: MonoidSpec
    minimal_generators: MonoidSpec
    rk_S: int
    srk_L: int
    dim_G_mod_P: int
    dim_X: int
    dim_quotient_U: int
    dim_quotient_U2: int
    polynomial: bool
    equidimensional: bool
    polynomial_and_equidim: bool
    cone_rays: tuple[tuple[int, ...], ...]
    witnesses: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "monoid": self.monoid.to_json(),
            "minimal_generators": self.minimal_generators.to_json(),
            "rk_S": self.rk_S,
            "srk_L": self.srk_L,
            "dim_G_mod_P": self.dim_G_mod_P,
            "dim_X": self.dim_X,
            "dim_quotient_U": self.dim_quotient_U,
            "dim_quotient_U2": self.dim_quotient_U2,
            "polynomial": self.polynomial,
            "equidimensional": self.equidimensional,
            "polynomial_and_equidim": self.polynomial_and_equidim,
            "cone_rays": [list(r) for r in self.cone_rays],
            "witnesses": self.witnesses,
        }


# ---------------------------------------------------------------------------
# sparse sets


def is_sparse(rs: RootSystem, M: NodeSet | Iterable[int]) -> SparseResult:
    """Pairwise non-adjacent, and no outside node adjacent to two members."""
    M = M if isinstance(M, NodeSet) else NodeSet(M)
    M.check(rs)
    nodes = sorted(M.nodes)
    for i, j in combinations(nodes, 2):
        if rs.is_adjacent(i, j):
            return SparseResult(False, SparseViolation("adjacent", (i, j)))
    for k in range(1, rs.rank + 1):
        if k in M:
            continue
        hits = [i for i in rs.neighbours(k) if i in M]
        if len(hits) >= 2:
            return SparseResult(False, SparseViolation("common_neighbour", (hits[0], hits[1], k)))
    return SparseResult(True)


def enumerate_sparse_sets(rs: RootSystem) -> list[NodeSet]:
    """All sparse node sets, ordered by size and then lexicographically."""
    if rs.rank > 16:
        raise AnalysisError("sparse-set enumeration is limited to rank 16")
    out = []

    def grow(current: list[int], start: int):
        out.append(NodeSet(current))
        for n in range(start, rs.rank + 1):
            cand = current + [n]
            if is_sparse(rs, cand):
                grow(cand, n + 1)

    # sparseness is inherited by subsets, so extending only sparse sets loses nothing
    grow([], 1)
    return sorted(out, key=NodeSet.sort_key)


# ---------------------------------------------------------------------------
# dimension formulas


def _roots_meeting(rs: RootSystem, support: Iterable[int]) -> int:
    keep = {n - 1 for n in support}
    return sum(1 for c in rs.positive_roots if any(c[k] for k in keep))


def _is_fundamental(w: Weight) -> int | None:
    """Node i if w is exactly varpi_i, else None."""
    nz = [i for i, c in enumerate(w.coords) if c != 0]
    if len(nz) == 1 and w.coords[nz[0]] == 1:
        return nz[0] + 1
    return None


def _fundamental_direction(v: Sequence) -> int | None:
    """Node i if v is a positive multiple of varpi_i."""
    nz = [i for i, c in enumerate(v) if c != 0]
    if len(nz) == 1 and v[nz[0]] > 0:
        return nz[0] + 1
    return None


def hv_report(rs: RootSystem, lam) -> HvReport:
    """Dimension data of C(lam) and its U'-quotient."""
    lam = rs.weight(lam)
    if not lam.is_dominant_integral():
        raise AnalysisError(f"{lam} is not dominant integral")
    if lam.is_zero():
        raise AnalysisError("lambda must be nonzero")
    a = lam.as_ints()
    k = sum(1 for x in a if x)
    ed = prod(x + 1 for x in a)
    dim_q = 1 + k
    return HvReport(lam, _roots_meeting(rs, lam.support()) + 1, dim_q, ed, ed - dim_q, k)


# ---------------------------------------------------------------------------
# minimal generators


def _representable(target: tuple[int, ...], gens: list[tuple[int, ...]], budget: list[int]) -> bool:
    """Is target a nonnegative integer combination of gens?  Depth-first with memo."""
    failed: set[tuple[int, tuple[int, ...]]] = set()

    def search(idx: int, rem: tuple[int, ...]) -> bool:
        if not any(rem):
            return True
        if idx == len(gens) or (idx, rem) in failed:
            return False
        budget[0] -= 1
        if budget[0] < 0:
            raise ResourceLimitError("minimal-generator search exceeded its budget")
        g = gens[idx]
        # every coordinate of g is bounded by rem, which caps the coefficient
        cap = min(rem[k] // g[k] for k in range(len(g)) if g[k])
        for c in range(cap, -1, -1):
            nxt = tuple(x - c * y for x, y in zip(rem, g))
            if search(idx + 1, nxt):
                return True
        failed.add((idx, rem))
        return False

    return search(0, target)


def minimal_generators(spec: MonoidSpec, budget: int = SEARCH_BUDGET) -> MonoidSpec:
    """Drop every generator that is a nonnegative integer combination of the others.

    Generators must be nonzero dominant integral weights, so the monoid is pointed
    and the result (the set of irreducible elements) is unique.
    """
    gens = []
    for g in spec.generators:
        if not g.is_dominant_integral() or g.is_zero():
            raise AnalysisError(f"generator {g} must be a nonzero dominant integral weight")
        t = g.as_ints()
        if max(t) > MAX_COORD:
            raise ResourceLimitError(f"coordinate above {MAX_COORD} in {g}")
        if t not in gens:
            gens.append(t)
    if len(gens) > MAX_GENERATORS:
        raise ResourceLimitError(f"more than {MAX_GENERATORS} distinct generators")
    left = [budget]
    keep = list(gens)
    for g in gens:
        others = sorted((h for h in keep if h != g), reverse=True)
        if _representable(g, others, left):
            keep.remove(g)
    return MonoidSpec(Weight(t) for t in keep)


# ---------------------------------------------------------------------------
# S-varieties


def s_variety_report(rs: RootSystem, spec: MonoidSpec | Iterable) -> AnalysisReport:
    """Dimensions, polynomiality and equidimensionality for C(S)//U'."""
    spec = spec if isinstance(spec, MonoidSpec) else MonoidSpec(spec)
    spec.validate(rs)
    r = rs.rank
    gens = spec.generators
    rk_S = linalg.rank(g.coords for g in gens)
    zero_nodes = [i + 1 for i in range(r) if all(g.coords[i] == 0 for g in gens)]
    srk_L = len(zero_nodes)
    support = set(range(1, r + 1)) - set(zero_nodes)
    dim_gp = _roots_meeting(rs, support)

    witnesses: dict = {}
    mins = minimal_generators(spec)
    offending = [g for g in mins.generators if _is_fundamental(g) is None]
    polynomial = not offending
    if offending:
        witnesses["non_fundamental_generator"] = _weight_json(offending[0])

    cone = Cone(r, [g.coords for g in gens], "weight")
    rays = cone.rays
    ray_nodes = []
    bad_ray = None
    for ray in rays:
        n = _fundamental_direction(ray)
        if n is None:
            bad_ray = ray
            break
        ray_nodes.append(n)
    if bad_ray is not None:
        equidim = False
        witnesses["non_fundamental_ray"] = list(bad_ray)
    else:
        sp = is_sparse(rs, ray_nodes)
        equidim = sp.sparse
        if not sp.sparse:
            witnesses["sparse_violation"] = sp.witness.to_json()

    if polynomial:
        min_nodes = [_is_fundamental(g) for g in mins.generators]
        both = is_sparse(rs, min_nodes).sparse
    else:
        both = False

    return AnalysisReport(
        monoid=spec,
        minimal_generators=mins,
        rk_S=rk_S,
        srk_L=srk_L,
        dim_G_mod_P=dim_gp,
        dim_X=dim_gp + rk_S,
        dim_quotient_U=rk_S,
        dim_quotient_U2=rk_S + (r - srk_L),
        polynomial=polynomial,
        equidimensional=equidim,
        polynomial_and_equidim=both,
        cone_rays=tuple(rays),
        witnesses=witnesses,
    )


# ---------------------------------------------------------------------------
# null-cone witness


@dataclass(frozen=True)
class NullconeWitness:
    weight: Weight
    element: WeylElement
    image: Weight
    length: int
    in_W_lambda: bool
    image_outside_box: bool
    length_one: dict[int, bool]

    @property
    def certified(self) -> bool:
        return (self.length == 2 and self.in_W_lambda and self.image_outside_box
                and all(self.length_one.values()))

    def to_json(self):
        return {
            "lambda": _weight_json(self.weight),
            "word": list(self.element.word),
            "image": _weight_json(self.image),
            "length": self.length,
            "in_W_lambda": self.in_W_lambda,
            "image_outside_box": self.image_outside_box,
            "length_one_images_in_box": {str(j): ok for j, ok in sorted(self.length_one.items())},
            "certified": self.certified,
        }


def in_parabolic_quotient(rs: RootSystem, w: WeylElement, lam: Weight) -> bool:
    """w in W^lam: w(alpha_k) > 0 for every k with (lam, alpha_k^vee) = 0."""
    for k in range(rs.rank):
        if lam.coords[k] == 0:
            img = act_on_root(rs, w, tuple(int(j == k) for j in range(rs.rank)))
            if sum(img) < 0:
                return False
    return True


def nullcone_codim2_witness(rs: RootSystem, lam) -> NullconeWitness:
    """w = s_{i'} s_i of length 2 in W^lam with w(lam) outside the U'-weight box.

    Also checks that every length-one s_j in W^lam keeps lam inside the box,
    so the smallest U-orbit missing the box has codimension exactly 2.
    """
    lam = rs.weight(lam)
    if not lam.is_dominant_integral() or lam.is_zero():
        raise AnalysisError("lambda must be a nonzero dominant integral weight")
    candidate = None
    for fac, nodes in zip(rs.factors, rs.factor_nodes):
        if fac.rank < 2:
            continue
        for i in nodes:
            if lam.coords[i - 1] != 0:
                candidate = (i, min(rs.neighbours(i)))
                break
        if candidate:
            break
    if candidate is None:
        raise HypothesisError(
            "lambda is supported only on A1 factors, where U' is trivial and no witness exists")
    i, i2 = candidate
    w = from_word(rs, (i2, i))
    image = w(lam)
    length_one = {}
    for j in range(1, rs.rank + 1):
        if lam.coords[j - 1] != 0:
            s = from_word(rs, (j,))
            length_one[j] = in_u2_weight_set(rs, lam, s(lam))
    return NullconeWitness(
        weight=lam,
        element=w,
        image=image,
        length=w.length,
        in_W_lambda=in_parabolic_quotient(rs, w, lam),
        image_outside_box=not in_u2_weight_set(rs, lam, image),
        length_one=length_one,
    )


# ---------------------------------------------------------------------------
# Hilbert-Mumford admissibility


def admissibility_generators(rs: RootSystem) -> list[Weight]:
    """varpi_i and varpi_i - alpha_i for every node."""
    out = []
    for i in range(1, rs.rank + 1):
        w = rs.fundamental_weight(i)
        out += [w, w - rs.simple_root(i)]
    return out


def admissibility_cone(rs: RootSystem) -> Cone:
    return Cone(rs.rank, [g.coords for g in admissibility_generators(rs)], "weight")


def nonsimple_root_cone(rs: RootSystem, space: str = "weight") -> Cone:
    """con(positive roots that are not simple), in weight or coweight coordinates."""
    roots = [rs.from_root_basis(c) for c in rs.positive_roots if sum(c) > 1]
    if space == "weight":
        gens = [b.coords for b in roots]
    elif space == "coweight":
        gens = [rs.weight_to_coweight(b).coords for b in roots]
    else:
        raise AnalysisError(f"unknown space {space!r}")
    return Cone(rs.rank, gens, space)


def dual_admissibility_cone(rs: RootSystem) -> Cone:
    return dual_cone(admissibility_cone(rs), rs)


@dataclass(frozen=True)
class HmVerdict:
    admissible: bool
    outside_hypotheses: bool
    pairings: tuple[Fraction, ...]

    def to_json(self):
        return {"admissible": self.admissible, "outside_hypotheses": self.outside_hypotheses,
                "pairings": [_fmt(p) for p in self.pairings]}


def hm_verdict(rs: RootSystem, tau) -> HmVerdict:
    """All pairings <tau, varpi_i> and <tau, varpi_i - alpha_i>, and whether they are positive.

    ``outside_hypotheses`` flags root systems with an A1 or A2 factor.
    """
    tau = rs.coweight(tau)
    vals = tuple(pairing(rs, tau, g) for g in admissibility_generators(rs))
    small = any(f.family == "A" and f.rank <= 2 for f in rs.factors)
    return HmVerdict(all(v > 0 for v in vals), small, vals)


def hm_admissible(rs: RootSystem, tau) -> bool:
    return hm_verdict(rs, tau).admissible


# ---------------------------------------------------------------------------
# contraction hypotheses


@dataclass(frozen=True)
class ContractionVerdict:
    passes: bool
    nodes: tuple[int, ...]
    ignored_invariant_generators: int
    problems: tuple[str, ...]
    krull_dim: int | None

    def to_json(self):
        return {"passes": self.passes, "nodes": list(self.nodes),
                "ignored_invariant_generators": self.ignored_invariant_generators,
                "problems": list(self.problems), "krull_dim": self.krull_dim}


def check_contraction_hypotheses(rs: RootSystem, weights: Iterable) -> ContractionVerdict:
    """Are the nonzero generator weights fundamental, pairwise different and sparse?

    Zero weights (G-invariant generators) are skipped and counted.
    """
    weights = [rs.weight(w) for w in weights]
    for w in weights:
        if not w.is_dominant():
            raise AnalysisError(f"weight {w} is not dominant")
    zeros = sum(1 for w in weights if w.is_zero())
    problems = []
    nodes = []
    for w in weights:
        if w.is_zero():
            continue
        n = _is_fundamental(w)
        if n is None:
            problems.append(f"not fundamental: {w}")
        elif n in nodes:
            problems.append(f"repeated: varpi_{n}")
        else:
            nodes.append(n)
    sp = is_sparse(rs, nodes)
    if not sp.sparse:
        problems.append(f"not sparse: {sp.witness.kind} {list(sp.witness.nodes)}")
    ok = not problems
    return ContractionVerdict(ok, tuple(sorted(nodes)), zeros, tuple(problems),
                              2 * (len(weights) - zeros) if ok else None)


# ---------------------------------------------------------------------------
# cofree classification

_VO_TO_BOURBAKI = {
    ("E", 6): {1: 1, 2: 3, 3: 4, 4: 5, 5: 6, 6: 2},
    ("E", 7): {1: 7, 2: 6, 3: 5, 4: 4, 5: 3, 6: 1, 7: 2},
    ("F", 4): {1: 4, 2: 3, 3: 2, 4: 1},
}


def _vo_to_bourbaki(t: SimpleType, coords: tuple) -> tuple:
    if t.family == "E" and t.rank == 8:
        raise AnalysisError("no table-numbering conversion is provided for E8")
    perm = _VO_TO_BOURBAKI.get((t.family, t.rank))
    if perm is None:
        return coords
    out = [0] * t.rank
    for vo, b in perm.items():
        out[b - 1] = coords[vo - 1]
    return tuple(out)


def _canonical_type(t: SimpleType, coords: tuple) -> tuple[SimpleType, tuple]:
    """Rewrite C2 as B2 and D3 as A3 so each simple group has one name."""
    if t == SimpleType("C", 2):
        return SimpleType("B", 2), (coords[1], coords[0])
    if t == SimpleType("D", 3):
        return SimpleType("A", 3), (coords[1], coords[0], coords[2])
    return t, coords


def diagram_automorphisms(t: SimpleType) -> list[tuple[int, ...]]:
    """Node permutations (as 0-based images) preserving the Dynkin diagram."""
    r = t.rank
    ident = tuple(range(r))
    if t.family == "A" and r > 1:
        return [ident, tuple(reversed(ident))]
    if t.family == "D":
        swap = tuple(range(r - 2)) + (r - 1, r - 2)
        if r == 4:
            # the outer nodes 1, 3, 4 (0-based 0, 2, 3) can be permuted freely
            out = []
            for p in ((0, 2, 3), (0, 3, 2), (2, 0, 3), (2, 3, 0), (3, 0, 2), (3, 2, 0)):
                perm = [0, 1, 2, 3]
                for src, dst in zip((0, 2, 3), p):
                    perm[src] = dst
                out.append(tuple(perm))
            return out
        return [ident, swap]
    if t.family == "E" and r == 6:
        return [ident, (5, 1, 4, 3, 2, 0)]
    return [ident]


def normalize_by_automorphisms(t: SimpleType, coords: Sequence) -> tuple:
    """Lexicographically largest image of coords under the diagram automorphisms."""
    coords = tuple(coords)
    best = None
    for perm in diagram_automorphisms(t):
        img = [0] * t.rank
        for src, dst in enumerate(perm):
            img[dst] = coords[src]
        img = tuple(img)
        if best is None or img > best:
            best = img
    return best


def _unit(r: int, i: int) -> tuple[int, ...]:
    return tuple(int(k == i - 1) for k in range(r))


def _good_pairs(t: SimpleType) -> list[tuple]:
    f, r = t.family, t.rank
    out = []
    if f in "ABC" and r >= 2:
        out.append(_unit(r, 1))
    if f == "D" and r >= 3:
        out.append(_unit(r, 1))
    extra = {("B", 3): 3, ("B", 4): 4, ("D", 5): 5, ("E", 6): 1, ("G", 2): 1}
    if (f, r) in extra:
        out.append(_unit(r, extra[(f, r)]))
    return out


def _bad_pairs(t: SimpleType) -> list[tuple]:
    f, r = t.family, t.rank
    if f == "A" and r >= 4:
        return [_unit(r, 2)]
    # E7 minuscule (56) and F4 little adjoint (26), written in Bourbaki numbering
    extra = {("B", 5): 5, ("D", 6): 6, ("E", 7): 7, ("F", 4): 4}
    if (f, r) in extra:
        return [_unit(r, extra[(f, r)])]
    return []


def _identities(pairs_of, t: SimpleType) -> set[tuple]:
    """Normalized canonical forms of the listed pairs of every type naming the same group."""
    sources = [t]
    if t == SimpleType("B", 2):
        sources.append(SimpleType("C", 2))
    if t == SimpleType("A", 3):
        sources.append(SimpleType("D", 3))
    out = set()
    for s in sources:
        for coords in pairs_of(s):
            ct, cc = _canonical_type(s, coords)
            out.add(normalize_by_automorphisms(ct, cc))
    return out


COFREE = "cofree"
POLYNOMIAL_NOT_COFREE = "polynomial invariants but not cofree"
NOT_COFREE = "not cofree"


@dataclass(frozen=True)
class CofreeVerdict:
    cofree: bool
    tag: str
    normalized_type: str
    normalized_weight: tuple[int, ...]

    def __bool__(self):
        return self.cofree

    def to_json(self):
        return {"cofree": self.cofree, "tag": self.tag, "normalized_type": self.normalized_type,
                "normalized_weight": list(self.normalized_weight)}


def classify_cofree(rs: RootSystem, lam, convention: str = "bourbaki") -> CofreeVerdict:
    """Is k[R(lam)] a free module over its U'-invariants?

    ``convention="vo"`` reads lam in the table numbering used by Onishchik-Vinberg
    (differs from Bourbaki for E6, E7, F4).
    """
    if not rs.is_simple:
        raise AnalysisError("classify_cofree needs a simple group")
    t = rs.factors[0]
    if t.rank < 2:
        raise AnalysisError("rank 1 is excluded")
    lam = rs.weight(lam)
    if not lam.is_dominant_integral() or lam.is_zero():
        raise AnalysisError("lambda must be a nonzero dominant integral weight")
    coords = lam.as_ints()
    if convention == "vo":
        coords = _vo_to_bourbaki(t, coords)
    elif convention != "bourbaki":
        raise AnalysisError(f"unknown convention {convention!r}")
    ct, cc = _canonical_type(t, coords)
    norm = normalize_by_automorphisms(ct, cc)
    if norm in _identities(_good_pairs, ct):
        tag = COFREE
    elif norm in _identities(_bad_pairs, ct):
        tag = POLYNOMIAL_NOT_COFREE
    else:
        tag = NOT_COFREE
    return CofreeVerdict(tag == COFREE, tag, str(ct), norm)


def cofree_table(max_rank: int = 8) -> list[tuple[str, tuple[int, ...], str]]:
    """Every listed good and bad pair up to ``max_rank``, in Bourbaki numbering."""
    out = []
    for fam in "ABCDEFG":
        for r in range(2, max_rank + 1):
            try:
                t = SimpleType(fam, r)
            except RootSystemError:
                continue
            for coords in _good_pairs(t):
                out.append((str(t), coords, COFREE))
            for coords in _bad_pairs(t):
                out.append((str(t), coords, POLYNOMIAL_NOT_COFREE))
    return out


def simple_root_system(name: str) -> RootSystem:
    rs = build_root_system(name)
    if not rs.is_simple:
        raise AnalysisError(f"{name} is not simple")
    return rs
