"""Exact rational polyhedral cones via the double description method.

A :class:`Cone` keeps both descriptions:

* generators -> extreme rays plus a lineality basis,
* facet normals plus equations (a basis of the orthogonal complement of the span),

and  x in cone  <=>  f.x >= 0 for every facet normal f and e.x = 0 for every equation e.

All arithmetic is on integers (vectors are scaled to primitive form), so the
results are exact.  Vectors may carry a space tag (``"weight"`` or
``"coweight"``); the dual of a tagged cone lives in the other space.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

from . import linalg
from .rootsystem import Coweight, Weight

MAX_DIM = 16

_DUAL_SPACE = {"weight": "coweight", "coweight": "weight", None: None}
_CLASSES = {"weight": Weight, "coweight": Coweight}


class ConeError(ValueError):
    pass


class SpaceMismatch(ConeError):
    """A weight was tested against a coweight cone (or vice versa)."""


def _prim(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def _idot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def double_description(constraints: Sequence[Sequence[int]], dim: int):
    """Generators of {x in Q^dim : a.x >= 0 for every row a}.

    Returns ``(rays, lineality)``: primitive integer vectors such that the cone
    equals cone(rays) + span(lineality), with ``rays`` irredundant modulo the
    lineality space.  Rows must be integer vectors.
    """
    lin = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    rays: list[tuple[int, ...]] = []
    zeros: list[frozenset[int]] = []
    for idx, a in enumerate(constraints):
        hit = next((k for k, l in enumerate(lin) if _idot(a, l) != 0), None)
        if hit is not None:
            l = lin.pop(hit)
            al = _idot(a, l)
            if al < 0:
                l = tuple(-x for x in l)
                al = -al
            # make the remaining lineality and the old rays tight on a
            lin = [_prim(tuple(al * y - _idot(a, m) * x for x, y in zip(l, m))) for m in lin]
            rays = [_prim(tuple(al * y - _idot(a, r) * x for x, y in zip(l, r))) for r in rays]
            zeros = [z | {idx} for z in zeros]
            rays.append(l)
            zeros.append(frozenset(range(idx)))
            continue
        vals = [_idot(a, r) for r in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        zer = [k for k, v in enumerate(vals) if v == 0]
        if not neg:
            for k in zer:
                zeros[k] = zeros[k] | {idx}
            continue
        need = dim - len(lin) - 2
        new_rays, new_zeros = [], []
        for p in pos:
            for n in neg:
                common = zeros[p] & zeros[n]
                if len(common) < need:
                    continue
                if any(k != p and k != n and common <= zeros[k] for k in range(len(rays))):
                    continue
                vp, vn = vals[p], -vals[n]
                new = _prim(tuple(vp * y + vn * x for x, y in zip(rays[p], rays[n])))
                new_rays.append(new)
                new_zeros.append(common | {idx})
        keep = pos + zer
        rays = [rays[k] for k in keep] + new_rays
        zeros = [zeros[k] | ({idx} if vals[k] == 0 else frozenset()) for k in keep] + new_zeros
    return rays, lin


def _canonical_basis(vectors: Iterable[Sequence]) -> tuple[tuple[int, ...], ...]:
    """RREF basis of the span, each row scaled to primitive integers."""
    return tuple(linalg.primitive(row) for row in linalg.row_reduce(vectors))


def _project_off(v: Sequence, basis: Sequence[Sequence]) -> tuple[int, ...]:
    """Primitive form of the orthogonal projection of v onto span(basis)^perp."""
    if not basis:
        return _prim(tuple(int(x) for x in v))
    # solve Gram * t = B v, then v - B^T t
    B = [[Fraction(x) for x in b] for b in basis]
    gram = tuple(tuple(linalg.dot(b, c) for c in B) for b in B)
    rhs = [linalg.dot(b, v) for b in B]
    t = linalg.mat_vec(linalg.inverse(gram), rhs)
    w = [Fraction(x) - sum(ti * b[k] for ti, b in zip(t, B)) for k, x in enumerate(v)]
    return linalg.primitive(w)


def _to_int_rows(vectors: Iterable[Sequence]) -> list[tuple[int, ...]]:
    return [linalg.primitive(v) for v in vectors if any(v)]


class Cone:
    """Finitely generated cone con(generators) in Q^ambient_dim."""

    def __init__(self, ambient_dim: int, generators: Iterable[Sequence] = (), space: str | None = None):
        if not 0 <= ambient_dim <= MAX_DIM:
            raise ConeError(f"ambient dimension {ambient_dim} outside 0..{MAX_DIM}")
        gens = []
        for g in generators:
            if isinstance(g, (Weight, Coweight)):
                if space is not None and g.space != space:
                    raise SpaceMismatch(f"{g!r} is not in {space} space")
            v = tuple(Fraction(x) for x in g)
            if len(v) != ambient_dim:
                raise ConeError(f"generator {v} has dimension {len(v)}, expected {ambient_dim}")
            gens.append(v)
        self.ambient_dim = ambient_dim
        self.generators = tuple(gens)
        self.space = space

    @classmethod
    def from_inequalities(cls, ambient_dim: int, inequalities: Iterable[Sequence],
                          equations: Iterable[Sequence] = (), space: str | None = None) -> "Cone":
        """The cone {x : f.x >= 0, e.x = 0}, converted to generators."""
        rows = _to_int_rows(inequalities)
        eqs = _to_int_rows(equations)
        rows += eqs + [tuple(-x for x in e) for e in eqs]
        rays, lin = double_description(rows, ambient_dim)
        lin_vecs = [tuple(x) for x in lin]
        gens = list(rays) + lin_vecs + [tuple(-x for x in l) for l in lin_vecs]
        return cls(ambient_dim, gens, space)

    # -- H-description -----------------------------------------------------
    @cached_property
    def _h(self):
        rows = _to_int_rows(self.generators)
        dual_rays, dual_lin = double_description(rows, self.ambient_dim)
        equations = _canonical_basis(dual_lin)
        facets = sorted({_project_off(f, equations) for f in dual_rays})
        return tuple(facets), equations

    @property
    def facets(self) -> tuple[tuple[int, ...], ...]:
        """Facet normals (primitive, inside the span of the cone)."""
        return self._h[0]

    @property
    def equations(self) -> tuple[tuple[int, ...], ...]:
        """Basis of the orthogonal complement of the linear span."""
        return self._h[1]

    # -- V-description -----------------------------------------------------
    @cached_property
    def _v(self):
        facets, equations = self._h
        rows = list(facets) + list(equations) + [tuple(-x for x in e) for e in equations]
        rays, lin = double_description(rows, self.ambient_dim)
        lineality = _canonical_basis(lin)
        reps = sorted({_project_off(r, lineality) for r in rays})
        return tuple(reps), lineality

    @property
    def rays(self) -> tuple[tuple[int, ...], ...]:
        """Extreme-ray representatives (modulo lineality), primitive integer vectors."""
        return self._v[0]

    @property
    def lineality(self) -> tuple[tuple[int, ...], ...]:
        return self._v[1]

    @property
    def lineality_dim(self) -> int:
        return len(self.lineality)

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.equations)

    def is_pointed(self) -> bool:
        return not self.lineality

    def is_full_dimensional(self) -> bool:
        return not self.equations

    # -- queries -----------------------------------------------------------
    def _vector(self, x) -> tuple[Fraction, ...]:
        if isinstance(x, (Weight, Coweight)) and self.space is not None and x.space != self.space:
            raise SpaceMismatch(f"cannot test a {x.space} against a {self.space} cone")
        v = tuple(Fraction(c) for c in x)
        if len(v) != self.ambient_dim:
            raise ConeError(f"vector of dimension {len(v)} tested against a cone in dimension {self.ambient_dim}")
        return v

    def contains(self, x) -> bool:
        v = self._vector(x)
        return (all(linalg.dot(e, v) == 0 for e in self.equations)
                and all(linalg.dot(f, v) >= 0 for f in self.facets))

    def interior_contains(self, x) -> bool:
        """Membership in the relative interior."""
        v = self._vector(x)
        return (all(linalg.dot(e, v) == 0 for e in self.equations)
                and all(linalg.dot(f, v) > 0 for f in self.facets))

    def contains_cone(self, other: "Cone") -> bool:
        return all(self.contains(g) for g in other.generators)

    def same_as(self, other: "Cone") -> bool:
        return self.contains_cone(other) and other.contains_cone(self)

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and self.space == other.space
                and self.rays == other.rays and self.lineality == other.lineality)

    def __hash__(self):
        return hash((self.ambient_dim, self.space, self.rays, self.lineality))

    def __repr__(self):
        return (f"Cone(dim={self.dim}/{self.ambient_dim}, rays={list(self.rays)}, "
                f"lineality={list(self.lineality)}, space={self.space})")

    def tagged_rays(self) -> list:
        cls = _CLASSES.get(self.space)
        return [cls(r) if cls else r for r in self.rays]


def cone_from(vectors: Iterable[Sequence], ambient_dim: int | None = None, space: str | None = None) -> Cone:
    vectors = list(vectors)
    if ambient_dim is None:
        if not vectors:
            raise ConeError("ambient_dim is required for an empty generator list")
        ambient_dim = len(vectors[0])
    if space is None and vectors and isinstance(vectors[0], (Weight, Coweight)):
        space = vectors[0].space
    return Cone(ambient_dim, vectors, space)


def dual_cone(c: Cone, rs=None) -> Cone:
    """{y : <y, x> >= 0 for all x in c}, in the dual space.

    Untagged cones use the dot product.  A weight or coweight cone needs the
    root system, whose pairing is <tau, w> = tau . (C^-1 w).
    """
    gens = list(c.facets) + list(c.equations) + [tuple(-x for x in e) for e in c.equations]
    if c.space is not None:
        if rs is None:
            raise ConeError(f"dualizing a {c.space} cone needs the root system")
        if rs.rank != c.ambient_dim:
            raise ConeError("root system rank does not match the cone dimension")
        C = rs.cartan
        r = rs.rank
        # <y, x> = y . (P x) with P = C^-1 (weight cone) or C^-T (coweight cone);
        # then y = P^-T f for each dot-product dual generator f
        if c.space == "weight":
            gens = [tuple(sum(C[k][j] * f[k] for k in range(r)) for j in range(r)) for f in gens]
        else:
            gens = [tuple(sum(C[j][k] * f[k] for k in range(r)) for j in range(r)) for f in gens]
    return Cone(c.ambient_dim, gens, _DUAL_SPACE[c.space])


def contains(c: Cone, x) -> bool:
    return c.contains(x)


def interior_contains(c: Cone, x) -> bool:
    return c.interior_contains(x)


def extreme_rays(c: Cone) -> list[tuple[int, ...]]:
    if not c.is_pointed():
        raise ConeError("extreme rays are only defined for pointed cones")
    return list(c.rays)
