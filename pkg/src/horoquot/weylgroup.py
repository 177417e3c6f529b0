"""Weyl group elements acting on the weight lattice.

An element is identified with its integer matrix acting on fundamental-weight
coordinates; the stored word is one reduced word (lexicographically smallest for
:func:`enumerate_weyl`),
read left to right as ``s_{i1} s_{i2} ... s_{ik}``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from . import linalg
from .rootsystem import RootSystem, RootSystemError, Weight, to_root_basis

DEFAULT_MAX_ORDER = 51840


class WeylOrderError(RuntimeError):
    """Refusal to enumerate a Weyl group (or coset space) above the configured cap."""

    def __init__(self, what: str, order: int, cap: int):
        super().__init__(f"{what} has {order} elements, above the cap of {cap}")
        self.order = order
        self.cap = cap


@dataclass(frozen=True)
class WeylElement:
    matrix: tuple[tuple[int, ...], ...]
    word: tuple[int, ...] = field(compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def __call__(self, w: Weight) -> Weight:
        return Weight(linalg.mat_vec(self.matrix, w.coords))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # product words need not be reduced; callers that care re-reduce via enumeration
        return WeylElement(linalg.mat_mul(self.matrix, other.matrix), self.word + other.word)

    def __repr__(self):
        w = "".join(f"s{i}" for i in self.word) or "e"
        return f"WeylElement({w})"


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(linalg.identity(rs.rank), ())


def _reflection_matrix(rs: RootSystem, i: int) -> tuple[tuple[int, ...], ...]:
    C = rs.cartan
    r = rs.rank
    # s_i(lam) = lam - a_i alpha_i; alpha_i is column i of C
    return tuple(
        tuple(int(k == j) - (C[k][i] if j == i else 0) for j in range(r)) for k in range(r)
    )


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    rs.check_node(i)
    return WeylElement(_reflection_matrix(rs, i - 1), (i,))


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    m = linalg.identity(rs.rank)
    word = tuple(word)
    for i in word:
        rs.check_node(i)
        m = linalg.mat_mul(m, _reflection_matrix(rs, i - 1))
    return WeylElement(m, word)


def act_on_root(rs: RootSystem, w: WeylElement, root: tuple) -> tuple:
    """Image of a root (simple-root coordinates) under w, in simple-root coordinates."""
    wt = rs.from_root_basis(root)
    img = w(wt)
    return tuple(int(x) for x in to_root_basis(rs, img))


def inversion_count(rs: RootSystem, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    return sum(1 for beta in rs.positive_roots if sum(act_on_root(rs, w, beta)) < 0)


def enumerate_weyl(rs: RootSystem, max_order: int = DEFAULT_MAX_ORDER) -> list[WeylElement]:
    """All elements of W, sorted by length and then by (lexicographically minimal) word."""
    order = rs.weyl_order()
    if order > max_order:
        raise WeylOrderError(f"W({rs})", order, max_order)
    r = rs.rank
    C = rs.cartan
    start = linalg.identity(r)
    seen = {start: ()}
    layer = [start]
    while layer:
        nxt = []
        for m in layer:
            word = seen[m]
            for i in range(r):
                # right multiplication by s_i only alters column i
                col = [m[k][i] - sum(m[k][j] * C[j][i] for j in range(r)) for k in range(r)]
                new = tuple(
                    tuple(col[k] if j == i else m[k][j] for j in range(r)) for k in range(r)
                )
                if new not in seen:
                    seen[new] = word + (i + 1,)
                    nxt.append(new)
        layer = nxt
    elems = [WeylElement(m, w) for m, w in seen.items()]
    elems.sort(key=lambda e: (e.length, e.word))
    return elems


@dataclass(frozen=True)
class CosetReps:
    """Minimal-length representatives W^I of W / W_I.

    ``codim`` maps each representative to the codimension ``l(w)`` of the
    corresponding U-orbit in G/P_I^-.
    """

    subset: frozenset[int]
    reps: tuple[WeylElement, ...]

    @property
    def codim(self) -> dict[WeylElement, int]:
        return {w: w.length for w in self.reps}

    def __len__(self):
        return len(self.reps)


def minimal_coset_reps(rs: RootSystem, I: Iterable[int], max_order: int = DEFAULT_MAX_ORDER) -> CosetReps:
    """W^I = {w : w(alpha_i) > 0 for all i in I}.

    Walks the W-orbit of the weight sum_{i not in I} varpi_i, whose stabiliser
    is exactly W_I, so only |W|/|W_I| elements are ever built.
    """
    I = frozenset(I)
    for i in I:
        rs.check_node(i)
    count = rs.weyl_order() // rs.weyl_order(I)
    if count > max_order:
        raise WeylOrderError(f"W^I for {rs}, I={sorted(I)}", count, max_order)
    r = rs.rank
    C = rs.cartan
    base = tuple(0 if i + 1 in I else 1 for i in range(r))
    found = {base: identity(rs)}
    layer = [base]
    while layer:
        nxt = []
        for mu in layer:
            w = found[mu]
            for i in range(r):
                if mu[i] > 0:
                    new = tuple(mu[k] - mu[i] * C[k][i] for k in range(r))
                    if new not in found:
                        s = WeylElement(_reflection_matrix(rs, i), (i + 1,))
                        found[new] = s * w
                        nxt.append(new)
        layer = sorted(nxt)
    reps = sorted(found.values(), key=lambda e: (e.length, e.word))
    return CosetReps(I, tuple(reps))


def weyl_orbit(rs: RootSystem, w: Weight) -> set[Weight]:
    """Closure of {w} under simple reflections."""
    w = rs.weight(w)
    C = rs.cartan
    r = rs.rank
    seen = {w.coords}
    queue = deque([w.coords])
    while queue:
        mu = queue.popleft()
        for i in range(r):
            if mu[i]:
                new = tuple(mu[k] - mu[i] * C[k][i] for k in range(r))
                if new not in seen:
                    seen.add(new)
                    queue.append(new)
    return {Weight(c) for c in seen}


def dominant_representative(rs: RootSystem, w: Weight) -> Weight:
    C = rs.cartan
    mu = list(rs.weight(w).coords)
    r = rs.rank
    while True:
        i = next((k for k in range(r) if mu[k] < 0), None)
        if i is None:
            return Weight(mu)
        a = mu[i]
        for k in range(r):
            mu[k] -= a * C[k][i]


def _strictly_below(rs: RootSystem, mu: Weight, nu: Weight) -> bool:
    diff = to_root_basis(rs, nu - mu)
    return any(diff) and all(x >= 0 and x.denominator == 1 for x in diff)


def satisfies_length_hypothesis(rs: RootSystem, w: WeylElement, M: Iterable[int]) -> bool:
    """w(varpi_i) strictly below varpi_i - alpha_i in the root order, for all i in M."""
    for i in M:
        target = rs.fundamental_weight(i) - rs.simple_root(i)
        if not _strictly_below(rs, w(rs.fundamental_weight(i)), target):
            return False
    return True


def min_length_satisfying(rs: RootSystem, M: Iterable[int], max_order: int = DEFAULT_MAX_ORDER) -> int | None:
    """Minimal l(w) over w in W with w(varpi_i) < varpi_i - alpha_i for every i in M.

    The condition depends only on the coset w W_J, J = complement of M, and the
    minimal-length element of a coset is its W^J representative, so the scan runs
    over W^J.  Returns None when no element qualifies.
    """
    M = frozenset(M)
    for i in M:
        rs.check_node(i)
    J = frozenset(range(1, rs.rank + 1)) - M
    best = None
    for w in minimal_coset_reps(rs, J, max_order).reps:
        if best is not None and w.length >= best:
            break
        if satisfies_length_hypothesis(rs, w, M):
            best = w.length
    return best


def min_length_satisfying_bruteforce(rs: RootSystem, M: Iterable[int], max_order: int = DEFAULT_MAX_ORDER) -> int | None:
    """Same quantity by scanning the whole group; kept as an independent check."""
    M = frozenset(M)
    for w in enumerate_weyl(rs, max_order):
        if satisfies_length_hypothesis(rs, w, M):
            return w.length
    return None
