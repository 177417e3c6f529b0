from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest

from horoquot import linalg
from horoquot.cones import (
    MAX_DIM,
    Cone,
    ConeError,
    SpaceMismatch,
    cone_from,
    contains,
    dual_cone,
    extreme_rays,
    interior_contains,
)
from horoquot.quotient_analysis import admissibility_cone, nonsimple_root_cone
from horoquot.rootsystem import Coweight, Weight, build_root_system
from horoquot.verify import simple_types


def random_cones(count: int, seed: int = 2024):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        d = rng.randint(1, 8)
        n = rng.randint(1, d + 3)
        pointed = rng.random() < 0.6
        gens = []
        for _ in range(n):
            v = [rng.randint(-3, 3) for _ in range(d)]
            if pointed:
                v[0] = abs(v[0]) + 1 + sum(abs(x) for x in v[1:])
            gens.append(v)
        out.append(cone_from(gens, d))
    return out


CORPUS = random_cones(500)


def brute_force_facets(gens: list[tuple[int, ...]], d: int) -> set[tuple[int, ...]]:
    """Facets of a full-dimensional cone from hyperplanes through d-1 generators."""
    out = set()
    for sub in combinations(gens, d - 1):
        ns = linalg.nullspace(sub, d)
        if len(ns) != 1:
            continue
        f = linalg.primitive(ns[0])
        vals = [linalg.dot(f, g) for g in gens]
        if all(v >= 0 for v in vals) and any(v > 0 for v in vals):
            out.add(f)
        elif all(v <= 0 for v in vals) and any(v < 0 for v in vals):
            out.add(tuple(-x for x in f))
    return out


# -- examples ---------------------------------------------------------------


def test_cone_from_examples():
    assert cone_from([(1, 0), (1, 1)]).rays == ((1, 0), (1, 1))
    assert cone_from([(1, 0), (2, 0)]).rays == ((1, 0),)
    half = cone_from([(1, 0), (-1, 0), (0, 1)])
    assert not half.is_pointed()
    assert half.lineality_dim == 1
    assert half.rays == ((0, 1),)
    assert half.contains((-5, 0)) and not half.contains((0, -1))


def test_empty_and_zero_cones():
    z = cone_from([], ambient_dim=3)
    assert z.rays == () and z.dim == 0
    assert z.contains((0, 0, 0)) and not z.contains((1, 0, 0))
    assert cone_from([(0, 0)]).dim == 0
    with pytest.raises(ConeError):
        cone_from([])
    with pytest.raises(ConeError):
        cone_from([(1, 0), (1, 0, 0)])
    with pytest.raises(ConeError):
        Cone(MAX_DIM + 1, [])


def test_dual_examples():
    orthant = cone_from([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert dual_cone(orthant) == orthant
    assert dual_cone(cone_from([(1, 0), (1, 1)])) == cone_from([(0, 1), (1, -1)])
    # the dual of the zero cone is everything and back
    z = cone_from([], ambient_dim=2)
    assert dual_cone(z).dim == 2 and dual_cone(z).lineality_dim == 2
    assert dual_cone(dual_cone(z)) == z


def test_membership_examples():
    orthant = cone_from([(1, 0), (0, 1)])
    assert contains(orthant, (0, 0)) and not interior_contains(orthant, (0, 0))
    assert interior_contains(orthant, (1, Fraction(1, 3)))
    ray = cone_from([(1, 0)])
    assert interior_contains(ray, (1, 0))
    assert not interior_contains(ray, (0, 0))
    assert not contains(ray, (1, 1))
    with pytest.raises(ConeError):
        contains(ray, (1, 0, 0))


def test_a2_nonsimple_root_cone():
    a2 = build_root_system("A2")
    k = nonsimple_root_cone(a2, "weight")
    # alpha_1 + alpha_2 = varpi_1 + varpi_2 in weight coordinates
    assert k.rays == ((1, 1),)
    assert not k.contains(a2.fundamental_weight(1))
    assert not k.contains(a2.fundamental_weight(2))


def test_extreme_rays_examples():
    assert extreme_rays(cone_from([(1, 0), (0, 1), (1, 1)])) == [(0, 1), (1, 0)]
    assert extreme_rays(cone_from([(2, 4)])) == [(1, 2)]
    a2 = build_root_system("A2")
    w1, w2 = a2.fundamental_weight(1), a2.fundamental_weight(2)
    c = cone_from([w1 + w2, w1, w2])
    assert c.space == "weight"
    assert set(extreme_rays(c)) == {(1, 0), (0, 1)}
    assert c.tagged_rays() == [Weight((0, 1)), Weight((1, 0))]
    with pytest.raises(ConeError):
        extreme_rays(cone_from([(1, 0), (-1, 0)]))


def test_space_tags():
    a2 = build_root_system("A2")
    wc = cone_from([a2.fundamental_weight(1)])
    with pytest.raises(SpaceMismatch):
        wc.contains(Coweight((1, 0)))
    with pytest.raises(SpaceMismatch):
        Cone(2, [Coweight((1, 0))], space="weight")
    with pytest.raises(ConeError):
        dual_cone(wc)
    d = dual_cone(wc, a2)
    assert d.space == "coweight"
    assert dual_cone(d, a2) == wc
    with pytest.raises(ConeError):
        dual_cone(wc, build_root_system("A3"))


@pytest.mark.parametrize("name", ["A2", "B3", "G2", "F4", "D4"])
def test_tagged_dual_uses_the_pairing(name):
    from horoquot.rootsystem import pairing

    rs = build_root_system(name)
    rng = random.Random(name)
    for _ in range(10):
        gens = [Weight(rng.randint(-2, 3) for _ in range(rs.rank)) for _ in range(rs.rank + 1)]
        c = cone_from(gens, space="weight")
        d = dual_cone(c, rs)
        for tau in d.generators:
            for g in gens:
                assert pairing(rs, Coweight(tau), g) >= 0


# -- properties -------------------------------------------------------------


def test_double_description_soundness():
    for c in CORPUS:
        for g in c.generators:
            assert c.contains(g)
            assert all(linalg.dot(f, g) >= 0 for f in c.facets)
        for r in c.rays:
            assert c.contains(r)
            tight = [f for f in c.facets if linalg.dot(f, r) == 0]
            assert linalg.rank(tight + list(c.equations)) == c.ambient_dim - c.lineality_dim - 1
        for v in c.lineality:
            assert c.contains(v) and c.contains(tuple(-x for x in v))
        # the rays and lineality regenerate the cone
        regen = Cone(c.ambient_dim, list(c.rays) + list(c.lineality) +
                     [tuple(-x for x in v) for v in c.lineality])
        assert regen == c and regen.same_as(c)


def test_duality_involution():
    for c in CORPUS:
        assert dual_cone(dual_cone(c)) == c


def test_facets_match_brute_force():
    checked = 0
    for c in CORPUS:
        if not c.is_full_dimensional() or c.ambient_dim < 2 or len(c.generators) > 9:
            continue
        gens = [linalg.primitive(g) for g in c.generators if any(g)]
        if c.is_pointed():
            assert set(c.facets) == brute_force_facets(gens, c.ambient_dim)
            checked += 1
    assert checked >= 50


def test_interior_points_are_strict():
    rng = random.Random(5)
    for c in CORPUS[:200]:
        # a positive combination of all generators lies in the relative interior
        coeffs = [Fraction(rng.randint(1, 4)) for _ in c.generators]
        pt = [sum(a * g[k] for a, g in zip(coeffs, c.generators)) for k in range(c.ambient_dim)]
        assert c.interior_contains(pt) or c.dim == 0 and not any(pt)


@pytest.mark.parametrize("name", simple_types(6, 2))
def test_admissibility_dual_is_nonsimple_root_cone(name):
    rs = build_root_system(name)
    assert dual_cone(admissibility_cone(rs), rs) == nonsimple_root_cone(rs, "coweight")


@pytest.mark.parametrize("name", simple_types(6, 2))
def test_fundamental_weights_in_nonsimple_root_cone(name):
    rs = build_root_system(name)
    k = nonsimple_root_cone(rs, "weight")
    inside = all(k.contains(rs.fundamental_weight(i)) for i in range(1, rs.rank + 1))
    type_a = name.startswith("A") or name == "D3"
    assert inside != type_a
