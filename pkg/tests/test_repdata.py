from __future__ import annotations

import random
from fractions import Fraction
from itertools import product
from math import prod

import pytest

from horoquot.repdata import (
    RepresentationError,
    chain_weight,
    dynkin_paths,
    freudenthal_multiplicity,
    in_u2_weight_set,
    is_weight_of,
    multiplicity_table,
    u2_invariant_dim,
    u2_weight_set,
    weyl_dimension,
)
from horoquot.rootsystem import RootSystemError, Weight, build_root_system
from horoquot.verify import simple_types
from horoquot.weylgroup import simple_reflection


def hook_content_dimension(a: tuple[int, ...]) -> int:
    """dim of the GL_{r+1} module with partition built from Dynkin labels a."""
    n = len(a) + 1
    parts = [sum(a[k:]) for k in range(len(a))]
    conj = [sum(1 for p in parts if p > j) for j in range(parts[0] if parts else 0)]
    num, den = 1, 1
    for i, p in enumerate(parts):
        for j in range(p):
            num *= n + j - i
            den *= (p - j - 1) + (conj[j] - i - 1) + 1
    return num // den


def dominant_weights(rs, total: int) -> list[Weight]:
    """Dominant weights with coordinate sum at most total."""
    return [Weight(a) for a in product(range(total + 1), repeat=rs.rank) if sum(a) <= total]


# -- examples ---------------------------------------------------------------


def test_weyl_dimension_examples():
    a3 = build_root_system("A3")
    assert weyl_dimension(a3, a3.fundamental_weight(1)) == 4
    assert weyl_dimension(a3, a3.fundamental_weight(3)) == 4
    g2 = build_root_system("G2")
    assert weyl_dimension(g2, g2.fundamental_weight(1)) == 7
    assert weyl_dimension(g2, g2.fundamental_weight(2)) == 14
    for name in ("A1", "B3", "E6", "F4"):
        rs = build_root_system(name)
        assert weyl_dimension(rs, rs.zero()) == 1


def test_weyl_dimension_known_values():
    assert weyl_dimension(build_root_system("E8"), (0,) * 7 + (1,)) == 248
    assert weyl_dimension(build_root_system("E7"), (0,) * 6 + (1,)) == 56
    assert weyl_dimension(build_root_system("E6"), (1,) + (0,) * 5) == 27
    assert weyl_dimension(build_root_system("F4"), (0, 0, 0, 1)) == 26
    assert weyl_dimension(build_root_system("B4"), (0, 0, 0, 1)) == 16
    assert weyl_dimension(build_root_system("D5"), (0, 0, 0, 0, 1)) == 16
    assert weyl_dimension(build_root_system("C3"), (0, 1, 0)) == 14


def test_weyl_dimension_rejects_bad_weights():
    a2 = build_root_system("A2")
    for bad in ((-1, 0), (Fraction(1, 2), 0)):
        with pytest.raises(RepresentationError):
            weyl_dimension(a2, bad)
    with pytest.raises((RepresentationError, RootSystemError)):
        weyl_dimension(a2, (1, 0, 0))


@pytest.mark.parametrize("r", range(1, 7))
def test_weyl_dimension_matches_hook_content(r):
    rs = build_root_system(f"A{r}")
    for lam in dominant_weights(rs, 3):
        assert weyl_dimension(rs, lam) == hook_content_dimension(lam.as_ints())


def test_freudenthal_examples():
    a2 = build_root_system("A2")
    adj = a2.fundamental_weight(1) + a2.fundamental_weight(2)
    assert freudenthal_multiplicity(a2, adj, a2.zero()) == 2
    assert freudenthal_multiplicity(a2, adj, adj) == 1
    a3 = build_root_system("A3")
    mu = a3.fundamental_weight(1) - a3.simple_root(1) - a3.simple_root(2)
    assert freudenthal_multiplicity(a3, a3.fundamental_weight(1), mu) == 1
    # outside the weight polytope and off the root lattice coset
    assert freudenthal_multiplicity(a3, a3.fundamental_weight(1), 2 * a3.fundamental_weight(1)) == 0
    assert freudenthal_multiplicity(a3, a3.fundamental_weight(1), a3.fundamental_weight(2)) == 0
    assert not is_weight_of(a3, a3.fundamental_weight(1), Weight((Fraction(1, 2), 0, 0)))


def test_adjoint_zero_weight_is_rank():
    for name in ("B3", "C3", "D4", "G2", "F4", "E6"):
        rs = build_root_system(name)
        hr = rs.from_root_basis(rs.positive_roots[-1])
        assert freudenthal_multiplicity(rs, hr, rs.zero()) == rs.rank


def test_u2_examples():
    a3 = build_root_system("A3")
    for i in (1, 2, 3):
        w = a3.fundamental_weight(i)
        s = u2_weight_set(a3, w)
        assert set(s) == {w, w - a3.simple_root(i)}
        assert len(s) == 2 and s.base == w
        assert u2_invariant_dim(a3, w) == 2
    assert set(u2_weight_set(a3, a3.zero())) == {a3.zero()}
    assert u2_invariant_dim(a3, a3.zero()) == 1
    a2 = build_root_system("A2")
    assert len(u2_weight_set(a2, (2, 1))) == 6
    d6 = build_root_system("D6")
    assert u2_invariant_dim(d6, d6.fundamental_weight(2) + d6.fundamental_weight(4)) == 4


def test_u2_set_membership():
    a2 = build_root_system("A2")
    s = u2_weight_set(a2, (2, 1))
    lam = Weight((2, 1))
    a1, a2r = a2.simple_root(1), a2.simple_root(2)
    assert lam - 2 * a1 - a2r in s
    assert lam - 3 * a1 not in s
    assert Weight((Fraction(1, 2), 0)) not in s
    assert Weight((1000, -1000)) not in s and Weight((2, 1, 0)) not in s
    assert s.members == frozenset(s) and len(s.members) == 6
    for b1, b2 in product(range(-1, 4), range(-1, 3)):
        mu = lam - b1 * a1 - b2 * a2r
        assert (mu in s) == (0 <= b1 <= 2 and 0 <= b2 <= 1) == in_u2_weight_set(a2, lam, mu)


def test_chain_weight_examples():
    a2 = build_root_system("A2")
    mu = chain_weight(a2, (1, 2))
    assert mu == a2.fundamental_weight(1) - a2.simple_root(1) - a2.simple_root(2)
    assert freudenthal_multiplicity(a2, a2.fundamental_weight(1), mu) == 1
    d4 = build_root_system("D4")
    mu = chain_weight(d4, (1, 2, 3))
    assert mu == d4.fundamental_weight(1) - d4.simple_root(1) - d4.simple_root(2) - d4.simple_root(3)
    assert freudenthal_multiplicity(d4, d4.fundamental_weight(1), mu) == 1
    for i in range(1, 5):
        assert chain_weight(d4, (i,)) == d4.fundamental_weight(i) - d4.simple_root(i)


def test_chain_weight_errors():
    a3 = build_root_system("A3")
    for bad in ((), (1, 3), (1, 2, 1), (1, 5), (0,)):
        with pytest.raises(RootSystemError):
            chain_weight(a3, bad)


# -- properties -------------------------------------------------------------


@pytest.mark.parametrize("name", simple_types(6))
def test_multiplicities_sum_to_weyl_dimension(name):
    rs = build_root_system(name)
    for lam in dominant_weights(rs, 2):
        if weyl_dimension(rs, lam) > 2000:
            continue
        table = multiplicity_table(rs, lam)
        assert table[lam] == 1
        assert table.dimension() == weyl_dimension(rs, lam)
        assert all(m > 0 for m in table.entries.values())


@pytest.mark.parametrize("name", simple_types(6))
def test_chain_multiplicity_is_one(name):
    rs = build_root_system(name)
    for path in dynkin_paths(rs):
        lam = rs.fundamental_weight(path[0])
        assert freudenthal_multiplicity(rs, lam, chain_weight(rs, path)) == 1


@pytest.mark.parametrize("name", simple_types(5))
def test_u2_members_are_weights(name):
    rs = build_root_system(name)
    for lam in dominant_weights(rs, 2):
        table = multiplicity_table(rs, lam)
        s = u2_weight_set(rs, lam)
        assert len(s) == prod(a + 1 for a in lam.as_ints()) == u2_invariant_dim(rs, lam)
        assert all(table[mu] > 0 for mu in s)


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2", "F4"])
def test_multiplicities_are_weyl_invariant(name):
    rs = build_root_system(name)
    rng = random.Random(name)
    lams = [lam for lam in dominant_weights(rs, 2) if weyl_dimension(rs, lam) <= 1500]
    for lam in rng.sample(lams, min(5, len(lams))):
        table = multiplicity_table(rs, lam)
        mus = list(table.entries)
        for mu in rng.sample(mus, min(20, len(mus))):
            i = rng.randint(1, rs.rank)
            assert table[simple_reflection(rs, i)(mu)] == table[mu]


def test_dynkin_paths_counts():
    # A_r: each ordered pair (including singletons) gives one path
    for r in range(1, 6):
        assert len(dynkin_paths(build_root_system(f"A{r}"))) == r * r
    assert len(dynkin_paths(build_root_system("A1xA1"))) == 2
