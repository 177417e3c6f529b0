"""Weight data of irreducible modules: dimensions, multiplicities and U'-invariant weights."""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from math import lcm, prod
from typing import Sequence

from .rootsystem import RootSystem, RootSystemError, Weight


class RepresentationError(ValueError):
    pass


def _dominant_integral(rs: RootSystem, lam) -> Weight:
    lam = rs.weight(lam)
    if not lam.is_dominant_integral():
        raise RepresentationError(f"highest weight {lam} must be dominant integral")
    return lam


class WeightSet:
    """A finite set of weights attached to a highest weight ``base``.

    Members are packed into single integers, one base-``radix`` digit per
    coordinate offset by ``offset``, so shifting by a root is one subtraction.
    """

    def __init__(self, base: Weight, packed: frozenset[int], offset: int, radix: int):
        self.base = base
        self._packed = packed
        self._offset = offset
        self._radix = radix

    def _pack(self, coords: Sequence[int]) -> int | None:
        key = 0
        for c in reversed(coords):
            d = c + self._offset
            if not 0 <= d < self._radix:
                return None
            key = key * self._radix + d
        return key

    def _unpack(self, key: int) -> tuple[int, ...]:
        out = []
        for _ in range(len(self.base.coords)):
            key, d = divmod(key, self._radix)
            out.append(d - self._offset)
        return tuple(out)

    @cached_property
    def members(self) -> frozenset[Weight]:
        return frozenset(Weight(self._unpack(k)) for k in self._packed)

    def __len__(self):
        return len(self._packed)

    def __contains__(self, mu):
        mu = Weight(mu)
        if len(mu.coords) != len(self.base.coords) or not mu.is_integral():
            return False
        key = self._pack(mu.as_ints())
        return key is not None and key in self._packed

    def __iter__(self):
        return (Weight(m) for m in sorted((self._unpack(k) for k in self._packed), reverse=True))


class MultiplicityTable:
    """Weight multiplicities of R(highest); ``entries`` maps Weight -> multiplicity."""

    def __init__(self, highest: Weight, raw: dict[tuple[int, ...], int]):
        self.highest = highest
        self._raw = raw

    @cached_property
    def entries(self) -> dict[Weight, int]:
        return {Weight(mu): m for mu, m in self._raw.items()}

    def __getitem__(self, mu: Weight) -> int:
        if not mu.is_integral():
            return 0
        return self._raw.get(mu.as_ints(), 0)

    def dimension(self) -> int:
        return sum(self._raw.values())

    def __len__(self):
        return len(self._raw)


def weyl_dimension(rs: RootSystem, lam) -> int:
    """prod over positive roots of <lam + rho, beta^vee> / <rho, beta^vee>."""
    lam = _dominant_integral(rs, lam)
    shifted = [c + 1 for c in lam.coords]
    num = den = Fraction(1)
    for cv in rs.positive_coroots:
        num *= sum((x * y for x, y in zip(shifted, cv)), Fraction(0))
        den *= sum(cv, Fraction(0))
    d = num / den
    assert d.denominator == 1, d
    return int(d)


def _int_form_scale(rs: RootSystem) -> tuple[int, ...]:
    """Integers D_i proportional to (alpha_i, alpha_i) / 2 (common positive factor)."""
    d = rs.half_lengths
    s = reduce(lcm, (x.denominator for x in d), 1)
    return tuple(int(x * s) for x in d)


def _dominant_below(rs: RootSystem, lam: tuple[int, ...]) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Dominant weights mu <= lam, mapped to the root coordinates of lam - mu.

    Every such mu is reachable from lam through dominant weights by subtracting
    positive roots one at a time.
    """
    r = rs.rank
    roots = rs.positive_roots
    roots_wt = [tuple(sum(rs.cartan[k][j] * c[j] for j in range(r)) for k in range(r)) for c in roots]
    seen = {lam: (0,) * r}
    stack = [lam]
    while stack:
        mu = stack.pop()
        b = seen[mu]
        for c, a in zip(roots, roots_wt):
            nu = tuple(x - y for x, y in zip(mu, a))
            if min(nu) >= 0 and nu not in seen:
                seen[nu] = tuple(x + y for x, y in zip(b, c))
                stack.append(nu)
    return seen


def _all_weights(rs: RootSystem, lam: tuple[int, ...]) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Every weight of R(lam), mapped to the root coordinates of lam - mu."""
    r = rs.rank
    C = rs.cartan
    out = _dominant_below(rs, lam)
    for dom in list(out):
        stack = [dom]
        while stack:
            mu = stack.pop()
            bm = out[mu]
            for i in range(r):
                a = mu[i]
                if a:
                    nu = tuple(mu[k] - a * C[k][i] for k in range(r))
                    if nu not in out:
                        bn = list(bm)
                        bn[i] += a
                        out[nu] = tuple(bn)
                        stack.append(nu)
    return out


@lru_cache(maxsize=512)
def _multiplicities(rs: RootSystem, lam: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    r = rs.rank
    C = rs.cartan
    D = _int_form_scale(rs)
    weights = _all_weights(rs, lam)
    roots = rs.positive_roots
    roots_wt = [tuple(sum(C[k][j] * c[j] for j in range(r)) for k in range(r)) for c in roots]
    twice_rho_lam = [lam[k] + 2 for k in range(r)]
    # (mu, beta) up to the common factor of D is dot(mu, scaled[beta])
    scaled = [tuple(c[k] * D[k] for k in range(r)) for c in roots]
    steps = list(enumerate(zip(scaled, roots_wt)))

    mult: dict[tuple[int, ...], int] = {}
    # running sums S_beta(mu) = sum_{k >= 1} m(mu + k beta) (mu + k beta, beta)
    tails: dict[tuple[int, tuple[int, ...]], int] = {}
    for mu in sorted(weights, key=lambda m: sum(weights[m])):
        b = weights[mu]
        total = 0
        for idx, (cd, a) in steps:
            nu = tuple(x + y for x, y in zip(mu, a))
            if nu in weights:
                s = mult[nu] * sum(x * y for x, y in zip(nu, cd)) + tails.get((idx, nu), 0)
                if s:
                    tails[(idx, mu)] = s
                total += s
        if not any(b):
            mult[mu] = 1
            continue
        denom = sum(b[k] * D[k] * (twice_rho_lam[k] + mu[k]) for k in range(r))
        m, rem = divmod(2 * total, denom)
        if rem:
            raise ArithmeticError(f"non-integral multiplicity at {mu} in R({lam})")
        mult[mu] = m
    return {mu: m for mu, m in mult.items() if m}


def multiplicity_table(rs: RootSystem, lam) -> MultiplicityTable:
    """All weight multiplicities of R(lam) by Freudenthal's recursion."""
    lam = _dominant_integral(rs, lam)
    return MultiplicityTable(lam, _multiplicities(rs, lam.as_ints()))


def freudenthal_multiplicity(rs: RootSystem, lam, mu) -> int:
    """dim R(lam)_mu; zero when mu is not a weight of R(lam)."""
    lam = _dominant_integral(rs, lam)
    mu = rs.weight(mu)
    if not mu.is_integral():
        return 0
    return _multiplicities(rs, lam.as_ints()).get(mu.as_ints(), 0)


def is_weight_of(rs: RootSystem, lam, mu) -> bool:
    return freudenthal_multiplicity(rs, lam, mu) > 0


def u2_weight_set(rs: RootSystem, lam) -> WeightSet:
    """The box {lam - sum b_i alpha_i : 0 <= b_i <= a_i} of T-weights of R(lam)^{U'}."""
    lam = _dominant_integral(rs, lam)
    a = lam.as_ints()
    C = rs.cartan
    r = rs.rank
    # every coordinate of a member is bounded by this in absolute value
    offset = max(a, default=0) + sum(ai * max(abs(C[k][i]) for k in range(r)) for i, ai in enumerate(a))
    radix = 2 * offset + 1
    packed = WeightSet(lam, frozenset(), offset, radix)
    members = [packed._pack(a)]
    for i, ai in enumerate(a):
        if not ai:
            continue
        # alpha_i is column i of the Cartan matrix; packing is linear in the coordinates
        step = sum(C[k][i] * radix**k for k in range(r))
        shifts = [b * step for b in range(ai + 1)]
        members = [m - sh for m in members for sh in shifts]
    return WeightSet(lam, frozenset(members), offset, radix)


def in_u2_weight_set(rs: RootSystem, lam, mu) -> bool:
    """Membership in the box without building it."""
    from .rootsystem import to_root_basis

    lam = _dominant_integral(rs, lam)
    b = to_root_basis(rs, lam - rs.weight(mu))
    return all(x.denominator == 1 and 0 <= x <= a for x, a in zip(b, lam.coords))


def u2_invariant_dim(rs: RootSystem, lam) -> int:
    lam = _dominant_integral(rs, lam)
    return prod(int(a) + 1 for a in lam.coords)


def chain_weight(rs: RootSystem, nodes: Sequence[int]) -> Weight:
    """varpi_{i1} - (alpha_{i1} + ... + alpha_{il}) for a path i1, ..., il in the Dynkin diagram."""
    nodes = list(nodes)
    if not nodes:
        raise RootSystemError("chain needs at least one node")
    for n in nodes:
        rs.check_node(n)
    if len(set(nodes)) != len(nodes):
        raise RootSystemError(f"repeated node in chain {nodes}")
    for a, b in zip(nodes, nodes[1:]):
        if not rs.is_adjacent(a, b):
            raise RootSystemError(f"nodes {a} and {b} are not adjacent")
    mu = rs.fundamental_weight(nodes[0])
    for n in nodes:
        mu = mu - rs.simple_root(n)
    return mu


def dynkin_paths(rs: RootSystem) -> list[tuple[int, ...]]:
    """Every simple path (as an ordered node sequence, length >= 1) in the Dynkin diagram."""
    out = []

    def extend(path):
        out.append(tuple(path))
        for n in rs.neighbours(path[-1]):
            if n not in path:
                extend(path + [n])

    for start in range(1, rs.rank + 1):
        extend([start])
    return out
