"""Exact Cartan data for simple and semisimple root systems.

Conventions
-----------
* Dynkin nodes are numbered as in Bourbaki and are **1-based** in every public
  function; coordinate tuples are ordinary 0-based Python sequences.
* ``cartan[i][j] = <alpha_i^vee, alpha_j>``, so the simple root ``alpha_j``
  written in fundamental-weight coordinates is column ``j`` of the Cartan matrix.
* The invariant form is normalised per simple factor so that long roots have
  squared length 2; ``alpha^vee = 2 alpha / (alpha, alpha)``.
* A :class:`Coweight` is stored by its coordinates in the basis of fundamental
  coweights, the basis dual to the simple roots: coordinate i is
  ``<tau, alpha_i>``.  Hence ``pairing(tau, w)`` is the dot product of tau with
  the root-basis coordinates of w, and the coroot ``alpha_i^vee`` has
  coordinates given by row i of the Cartan matrix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import linalg

FAMILIES = "ABCDEFG"


class RootSystemError(ValueError):
    """Invalid Cartan type or malformed input."""


def _min_rank(family: str) -> int:
    return {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}[family]


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise RootSystemError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise RootSystemError(f"rank must be a positive integer, got {self.rank!r}")
        ok = {
            "E": self.rank in (6, 7, 8),
            "F": self.rank == 4,
            "G": self.rank == 2,
        }.get(self.family, self.rank >= _min_rank(self.family))
        if not ok:
            raise RootSystemError(f"invalid rank {self.rank} for type {self.family}")

    def __str__(self):
        return f"{self.family}{self.rank}"


class _Vec:
    """Exact rational coordinate vector; subclasses tag the ambient space."""

    __slots__ = ("coords",)
    space = "plain"

    def __init__(self, coords: Iterable):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in coords))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        if type(other) is type(self):
            return self.coords == other.coords
        return NotImplemented

    def __hash__(self):
        return hash((self.space, self.coords))

    def __lt__(self, other):
        return self.coords < other.coords

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if len(other) != len(self):
            raise ValueError("dimension mismatch")

    def __add__(self, other):
        self._check(other)
        return type(self)(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        self._check(other)
        return type(self)(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return type(self)(-a for a in self.coords)

    def __mul__(self, k):
        return type(self)(Fraction(k) * a for a in self.coords)

    __rmul__ = __mul__

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(str(c) for c in self.coords)})"

    def __str__(self):
        return ",".join(str(c) for c in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def as_ints(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError(f"{self!r} is not integral")
        return tuple(int(c) for c in self.coords)


class Weight(_Vec):
    """A weight in fundamental-weight coordinates ``a_i = (lambda, alpha_i^vee)``."""

    __slots__ = ()
    space = "weight"

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_dominant_integral(self) -> bool:
        return self.is_dominant() and self.is_integral()

    def support(self) -> frozenset[int]:
        """1-based nodes with nonzero coordinate."""
        return frozenset(i + 1 for i, c in enumerate(self.coords) if c != 0)


class Coweight(_Vec):
    """A rational one-parameter subgroup in fundamental-coweight coordinates.

    Coordinate i is <tau, alpha_i>, so the pairing with a weight w is the dot
    product of these coordinates with the root-basis coordinates of w.
    """

    __slots__ = ()
    space = "coweight"


def _simple_form(t: SimpleType) -> list[list[Fraction]]:
    """Symmetric matrix of (alpha_i, alpha_j) for one simple factor (Bourbaki numbering)."""
    r = t.rank
    B = [[Fraction(0)] * r for _ in range(r)]

    def link(i, j, v):
        B[i - 1][j - 1] = B[j - 1][i - 1] = Fraction(v)

    f = t.family
    if f in "AD":
        for i in range(r):
            B[i][i] = Fraction(2)
        chain = r if f == "A" else r - 1
        for i in range(1, chain):
            link(i, i + 1, -1)
        if f == "D":
            link(r - 2, r, -1)
    elif f == "B":
        for i in range(r):
            B[i][i] = Fraction(2)
        B[r - 1][r - 1] = Fraction(1)
        for i in range(1, r):
            link(i, i + 1, -1)
    elif f == "C":
        for i in range(r):
            B[i][i] = Fraction(1)
        B[r - 1][r - 1] = Fraction(2)
        for i in range(1, r - 1):
            link(i, i + 1, Fraction(-1, 2))
        link(r - 1, r, -1)
    elif f == "E":
        for i in range(r):
            B[i][i] = Fraction(2)
        link(1, 3, -1)
        link(2, 4, -1)
        for i in range(3, r):
            link(i, i + 1, -1)
    elif f == "F":
        for i, d in enumerate((2, 2, 1, 1)):
            B[i][i] = Fraction(d)
        link(1, 2, -1)
        link(2, 3, -1)
        link(3, 4, Fraction(-1, 2))
    elif f == "G":
        B[0][0] = Fraction(2, 3)
        B[1][1] = Fraction(2)
        link(1, 2, -1)
    return B


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable Cartan data; build with :func:`build_root_system`."""

    factors: tuple[SimpleType, ...]
    simple_form: tuple[tuple[Fraction, ...], ...] = field(repr=False)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __str__(self):
        return "x".join(str(t) for t in self.factors)

    @property
    def rank(self) -> int:
        return len(self.simple_form)

    @property
    def is_simple(self) -> bool:
        return len(self.factors) == 1

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        B = self.simple_form
        return tuple(
            tuple(int(2 * B[i][j] / B[i][i]) for j in range(self.rank))
            for i in range(self.rank)
        )

    @cached_property
    def cartan_inv(self) -> tuple[tuple[Fraction, ...], ...]:
        return linalg.inverse(self.cartan)

    @cached_property
    def half_lengths(self) -> tuple[Fraction, ...]:
        """(alpha_i, alpha_i) / 2 for every simple root."""
        return tuple(self.simple_form[i][i] / 2 for i in range(self.rank))

    @cached_property
    def bilinear_form(self) -> tuple[tuple[Fraction, ...], ...]:
        """Gram matrix (varpi_i, varpi_j) of the fundamental weights."""
        d = self.half_lengths
        inv = self.cartan_inv
        return tuple(tuple(d[i] * inv[i][j] for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def adjacency(self) -> tuple[tuple[bool, ...], ...]:
        C = self.cartan
        return tuple(tuple(i != j and C[i][j] != 0 for j in range(self.rank)) for i in range(self.rank))

    def neighbours(self, node: int) -> list[int]:
        self.check_node(node)
        return [j + 1 for j, adj in enumerate(self.adjacency[node - 1]) if adj]

    def is_adjacent(self, i: int, j: int) -> bool:
        self.check_node(i)
        self.check_node(j)
        return self.adjacency[i - 1][j - 1]

    def check_node(self, node: int) -> None:
        if not isinstance(node, int) or not 1 <= node <= self.rank:
            raise RootSystemError(f"node index {node!r} out of range 1..{self.rank}")

    @cached_property
    def factor_nodes(self) -> tuple[tuple[int, ...], ...]:
        """Global 1-based node labels of each simple factor."""
        out, start = [], 1
        for t in self.factors:
            out.append(tuple(range(start, start + t.rank)))
            start += t.rank
        return tuple(out)

    def factor_index(self, node: int) -> int:
        self.check_node(node)
        return next(k for k, nodes in enumerate(self.factor_nodes) if node in nodes)

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots in simple-root coordinates, sorted by height then lexicographically.

        Generated by closing the simple roots under addition of simple roots,
        using alpha_i-strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0,
        where p is the largest k with beta - k alpha_i a root.
        """
        r = self.rank
        C = self.cartan
        simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        found = set(simple)
        layer = list(simple)
        while layer:
            nxt = set()
            for beta in layer:
                for i in range(r):
                    p = 0
                    down = list(beta)
                    while True:
                        down[i] -= 1
                        if tuple(down) in found:
                            p += 1
                        else:
                            break
                    pairing = sum(C[i][j] * beta[j] for j in range(r))
                    if p - pairing > 0:
                        up = list(beta)
                        up[i] += 1
                        nxt.add(tuple(up))
            nxt -= found
            found |= nxt
            layer = sorted(nxt)
        return tuple(sorted(found, key=lambda c: (sum(c), c)))

    @cached_property
    def positive_coroots(self) -> tuple[tuple[Fraction, ...], ...]:
        """beta^vee for each positive root beta, in simple-coroot coordinates (same order)."""
        out = []
        for c in self.positive_roots:
            norm = self.root_norm(c)
            out.append(tuple(Fraction(c[k]) * 2 * self.half_lengths[k] / norm for k in range(self.rank)))
        return tuple(out)

    def root_norm(self, c: Sequence) -> Fraction:
        """(beta, beta) for beta given in simple-root coordinates."""
        B = self.simple_form
        r = self.rank
        return sum((c[i] * c[j] * B[i][j] for i in range(r) for j in range(r)), Fraction(0))

    @cached_property
    def rho(self) -> Weight:
        """Half-sum of the positive roots (= sum of fundamental weights)."""
        return Weight([1] * self.rank)

    @cached_property
    def half_sum_coroots(self) -> Coweight:
        """Half-sum of the positive coroots, as a coweight."""
        tot = [Fraction(0)] * self.rank
        for cv in self.positive_coroots:
            for k, x in enumerate(cv):
                tot[k] += x
        C = self.cartan
        r = self.rank
        return Coweight(sum(tot[k] * C[k][j] for k in range(r)) / 2 for j in range(r))

    def simple_root(self, i: int) -> Weight:
        self.check_node(i)
        return Weight(self.cartan[k][i - 1] for k in range(self.rank))

    def fundamental_weight(self, i: int) -> Weight:
        self.check_node(i)
        return Weight(int(k == i - 1) for k in range(self.rank))

    def simple_coroot(self, i: int) -> Coweight:
        """alpha_i^vee; its coordinates are row i of the Cartan matrix."""
        self.check_node(i)
        return Coweight(self.cartan[i - 1])

    def fundamental_coweight(self, i: int) -> Coweight:
        self.check_node(i)
        return Coweight(int(k == i - 1) for k in range(self.rank))

    def zero(self) -> Weight:
        return Weight([0] * self.rank)

    def from_root_basis(self, c: Sequence) -> Weight:
        """Weight sum_i c_i alpha_i."""
        if len(c) != self.rank:
            raise ValueError("dimension mismatch")
        return Weight(linalg.mat_vec(self.cartan, [Fraction(x) for x in c]))

    def weight(self, coords: Sequence) -> Weight:
        w = coords if isinstance(coords, Weight) else Weight(coords)
        if len(w) != self.rank:
            raise RootSystemError(f"weight has {len(w)} coordinates, expected {self.rank}")
        return w

    def coweight(self, coords: Sequence) -> Coweight:
        t = coords if isinstance(coords, Coweight) else Coweight(coords)
        if len(t) != self.rank:
            raise RootSystemError(f"coweight has {len(t)} coordinates, expected {self.rank}")
        return t

    def form(self, x: Weight, y: Weight) -> Fraction:
        """Invariant form (x, y) of two weights."""
        G = self.bilinear_form
        r = self.rank
        return sum((x[i] * G[i][j] * y[j] for i in range(r) for j in range(r) if x[i] and y[j]),
                   Fraction(0))

    def weight_to_coweight(self, w: Weight) -> Coweight:
        """The coweight tau with <tau, mu> = (w, mu) for every weight mu."""
        # <tau, alpha_j> = (w, alpha_j) = a_j (alpha_j, alpha_j) / 2
        w = self.weight(w)
        return Coweight(x * d for x, d in zip(w.coords, self.half_lengths))

    def coweight_to_weight(self, tau: Coweight) -> Weight:
        """Inverse of :meth:`weight_to_coweight`."""
        tau = self.coweight(tau)
        return Weight(x / d for x, d in zip(tau.coords, self.half_lengths))

    @cached_property
    def pairing_matrix(self) -> tuple[tuple[Fraction, ...], ...]:
        """P with <tau, w> = tau . (P w): the inverse Cartan matrix."""
        return self.cartan_inv

    def sub_root_system_size(self, nodes: Iterable[int]) -> int:
        """Number of positive roots supported on ``nodes``."""
        keep = {n - 1 for n in nodes}
        return sum(1 for c in self.positive_roots
                   if all(x == 0 or k in keep for k, x in enumerate(c)))

    def weyl_order(self, nodes: Iterable[int] | None = None) -> int:
        """|W| (or |W_J| for the parabolic subgroup on ``nodes``).

        Uses the product formula prod (ht(beta) + 1) / ht(beta) over positive roots.
        """
        keep = set(range(self.rank)) if nodes is None else {n - 1 for n in nodes}
        num = den = 1
        for c in self.positive_roots:
            if all(x == 0 or k in keep for k, x in enumerate(c)):
                h = sum(c)
                num *= h + 1
                den *= h
        return num // den


def build_root_system(factors: Sequence[SimpleType] | SimpleType | str) -> RootSystem:
    """Construct a :class:`RootSystem` from simple factors or a type string like ``"A1xA2"``."""
    if isinstance(factors, str):
        factors = parse_type(factors)
    if isinstance(factors, SimpleType):
        factors = [factors]
    factors = tuple(factors)
    if not factors:
        raise RootSystemError("at least one simple factor is required")
    n = sum(t.rank for t in factors)
    B = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for t in factors:
        blk = _simple_form(t)
        for i in range(t.rank):
            for j in range(t.rank):
                B[off + i][off + j] = blk[i][j]
        off += t.rank
    return RootSystem(factors, tuple(tuple(row) for row in B))


_TYPE_RE = re.compile(r"^([A-Ga-g])(\d+)$")


def parse_type(text: str) -> list[SimpleType]:
    """Parse ``"A3"``, ``"E7"`` or products such as ``"A1xA2"`` (order significant)."""
    parts = [p.strip() for p in text.strip().split("x")] if text.strip() else []
    if not parts or any(not p for p in parts):
        raise RootSystemError(f"cannot parse type string {text!r}")
    out = []
    for p in parts:
        m = _TYPE_RE.match(p)
        if not m:
            raise RootSystemError(f"cannot parse type {p!r}")
        out.append(SimpleType(m.group(1).upper(), int(m.group(2))))
    return out


def parse_weight(text: str) -> tuple[Fraction, ...]:
    """Parse comma-separated integers or rationals, e.g. ``"1,0,2"`` or ``"1/2,-1"``."""
    try:
        vals = tuple(Fraction(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise RootSystemError(f"cannot parse weight {text!r}") from exc
    return vals


def to_root_basis(rs: RootSystem, w: Weight) -> tuple[Fraction, ...]:
    """Coefficients c with w = sum_i c_i alpha_i."""
    w = rs.weight(w)
    return linalg.mat_vec(rs.cartan_inv, w.coords)


def cartan_inverse_diagonal(rs: RootSystem) -> tuple[Fraction, ...]:
    if not rs.is_simple:
        raise RootSystemError("cartan_inverse_diagonal needs a simple root system; call it per factor")
    return tuple(rs.cartan_inv[i][i] for i in range(rs.rank))


def pairing(rs: RootSystem, tau: Coweight, w: Weight) -> Fraction:
    """Canonical pairing <tau, w> between a coweight and a weight."""
    tau = rs.coweight(tau)
    return linalg.dot(tau.coords, to_root_basis(rs, w))


def root_leq(rs: RootSystem, mu: Weight, lam: Weight) -> bool:
    """Root order: mu <= lam iff lam - mu is a nonnegative integral combination of simple roots."""
    c = to_root_basis(rs, rs.weight(lam) - rs.weight(mu))
    return all(x >= 0 and x.denominator == 1 for x in c)


def root_less(rs: RootSystem, mu: Weight, lam: Weight) -> bool:
    return mu != lam and root_leq(rs, mu, lam)
