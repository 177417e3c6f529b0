from __future__ import annotations

import random
from collections import Counter
from itertools import permutations

import pytest

from horoquot import linalg
from horoquot.quotient_analysis import enumerate_sparse_sets
from horoquot.rootsystem import RootSystemError, Weight, build_root_system, root_leq, root_less
from horoquot.verify import simple_types
from horoquot.weylgroup import (
    WeylOrderError,
    act_on_root,
    enumerate_weyl,
    from_word,
    identity,
    inversion_count,
    min_length_satisfying,
    min_length_satisfying_bruteforce,
    minimal_coset_reps,
    satisfies_length_hypothesis,
    simple_reflection,
    weyl_orbit,
)


def test_simple_reflection_examples():
    rs = build_root_system("A2")
    s1 = simple_reflection(rs, 1)
    w1, w2 = rs.fundamental_weight(1), rs.fundamental_weight(2)
    assert s1(w1) == w1 - rs.simple_root(1)
    assert s1(w2) == w2
    assert s1.length == 1
    assert (s1 * s1).matrix == identity(rs).matrix
    with pytest.raises(RootSystemError):
        simple_reflection(rs, 3)
    with pytest.raises(RootSystemError):
        simple_reflection(rs, 0)


def test_g2_two_step_image_is_low_enough():
    rs = build_root_system("G2")
    w1 = rs.fundamental_weight(1)
    img = from_word(rs, (2, 1))(w1)
    bound = w1 - rs.simple_root(1) - rs.simple_root(2)
    assert root_leq(rs, img, bound)


@pytest.mark.parametrize("name", simple_types(8))
def test_reflections_are_involutions(name):
    rs = build_root_system(name)
    for i in range(1, rs.rank + 1):
        s = simple_reflection(rs, i)
        assert linalg.mat_mul(s.matrix, s.matrix) == linalg.identity(rs.rank)


def test_enumeration_examples():
    a2 = enumerate_weyl(build_root_system("A2"))
    assert len(a2) == 6
    assert sorted(w.length for w in a2) == [0, 1, 1, 2, 2, 3]
    b2 = enumerate_weyl(build_root_system("B2"))
    assert len(b2) == 8
    assert max(w.length for w in b2) == 4
    assert len(enumerate_weyl(build_root_system("A1"))) == 2


@pytest.mark.parametrize("name", simple_types(4))
def test_lengths_equal_inversion_counts(name):
    rs = build_root_system(name)
    elems = enumerate_weyl(rs)
    assert len(elems) == rs.weyl_order()
    assert len({w.matrix for w in elems}) == len(elems)
    for w in elems:
        assert w.length == inversion_count(rs, w)
        # the stored word reproduces the matrix
        assert from_word(rs, w.word).matrix == w.matrix
    assert elems[0].matrix == linalg.identity(rs.rank) and elems[0].length == 0
    keys = [(w.length, w.word) for w in elems]
    assert keys == sorted(keys)


def test_a3_elements_match_permutations():
    # independent model: S4 acting on e_1..e_4; lengths are inversion numbers
    rs = build_root_system("A3")
    lengths = Counter(w.length for w in enumerate_weyl(rs))
    perm_lengths = Counter(sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j])
                           for p in permutations(range(4)))
    assert lengths == perm_lengths


def test_enumeration_cap():
    rs = build_root_system("E7")
    with pytest.raises(WeylOrderError) as err:
        enumerate_weyl(rs)
    assert err.value.order == 2903040
    with pytest.raises(WeylOrderError):
        enumerate_weyl(build_root_system("B3"), max_order=10)


def test_coset_examples():
    a2 = build_root_system("A2")
    reps = minimal_coset_reps(a2, {2})
    assert len(reps) == 3
    assert sorted(w.length for w in reps.reps) == [0, 1, 2]
    assert reps.codim == {w: w.length for w in reps.reps}
    full = minimal_coset_reps(a2, {1, 2})
    assert len(full) == 1 and full.reps[0].length == 0
    assert len(minimal_coset_reps(build_root_system("A3"), {2, 3})) == 4


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2", "F4", "A1xA2"])
def test_coset_reps_properties(name):
    rs = build_root_system(name)
    r = rs.rank
    rng = random.Random(name)
    for _ in range(6):
        I = {i for i in range(1, r + 1) if rng.random() < 0.5}
        reps = minimal_coset_reps(rs, I)
        assert len(reps) == rs.weyl_order() // rs.weyl_order(I)
        for w in reps.reps:
            for i in I:
                img = act_on_root(rs, w, tuple(int(k == i - 1) for k in range(r)))
                assert all(x >= 0 for x in img)
            assert w.length == inversion_count(rs, w)
        # the independent characterization over the whole group
        if rs.weyl_order() <= 2000:
            expected = {w.matrix for w in enumerate_weyl(rs)
                        if all(all(x >= 0 for x in act_on_root(rs, w, tuple(int(k == i - 1) for k in range(r))))
                               for i in I)}
            assert {w.matrix for w in reps.reps} == expected


def test_orbit_examples():
    a2 = build_root_system("A2")
    assert len(weyl_orbit(a2, a2.fundamental_weight(1))) == 3
    assert weyl_orbit(a2, a2.zero()) == {a2.zero()}
    b2 = build_root_system("B2")
    assert len(weyl_orbit(b2, b2.fundamental_weight(1))) == 4


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "D4", "F4"])
def test_orbit_closed_with_one_dominant(name):
    rs = build_root_system(name)
    rng = random.Random(name)
    for _ in range(5):
        w = Weight(rng.randint(-2, 2) for _ in range(rs.rank))
        orb = weyl_orbit(rs, w)
        for mu in orb:
            for i in range(1, rs.rank + 1):
                assert simple_reflection(rs, i)(mu) in orb
        assert sum(1 for mu in orb if mu.is_dominant()) == 1


def test_min_length_examples():
    a3 = build_root_system("A3")
    assert min_length_satisfying(a3, {1}) >= 2
    assert min_length_satisfying(build_root_system("A2"), set()) == 0
    assert min_length_satisfying(a3, {1, 3}) == min_length_satisfying_bruteforce(a3, {1, 3})


@pytest.mark.parametrize("name", simple_types(3) + ["B4", "D4", "G2"])
def test_min_length_matches_bruteforce(name):
    rs = build_root_system(name)
    r = rs.rank
    for mask in range(1 << r):
        M = {i + 1 for i in range(r) if mask >> i & 1}
        assert min_length_satisfying(rs, M) == min_length_satisfying_bruteforce(rs, M)


@pytest.mark.parametrize("name", simple_types(4))
def test_length_lower_bound_on_sparse_sets(name):
    rs = build_root_system(name)
    for M in enumerate_sparse_sets(rs):
        ell = min_length_satisfying(rs, M.nodes)
        assert ell is None or ell >= 2 * len(M)


def test_length_hypothesis_on_identity_is_vacuous_only_for_empty_set():
    rs = build_root_system("A3")
    e = identity(rs)
    assert satisfies_length_hypothesis(rs, e, [])
    assert not satisfies_length_hypothesis(rs, e, [1])


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "F4"])
def test_root_order_is_a_partial_order(name):
    rs = build_root_system(name)
    rng = random.Random(name)
    # random weights in one coset of the root lattice so comparisons are frequent
    base = Weight(rng.randint(0, 2) for _ in range(rs.rank))
    def rand_weight():
        c = [rng.randint(-2, 2) for _ in range(rs.rank)]
        return base - rs.from_root_basis(c)
    for _ in range(200):
        x, y, z = rand_weight(), rand_weight(), rand_weight()
        assert root_leq(rs, x, x)
        if root_leq(rs, x, y) and root_leq(rs, y, x):
            assert x == y
        if root_leq(rs, x, y) and root_leq(rs, y, z):
            assert root_leq(rs, x, z)
        assert root_less(rs, x, y) == (root_leq(rs, x, y) and x != y)
