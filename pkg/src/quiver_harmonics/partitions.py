"""Partitions and sparse integer weight vectors in the epsilon/omega bases.

A partition indexes an irreducible polynomial GL_n representation.  Weight
vectors live in Z^infty (finitely supported) and carry an explicit basis tag:
``epsilon`` coordinates count boxes per row, ``omega`` coordinates count
columns per height.  The omega basis turns partition containment into the
componentwise product order, which is what most of the downstream
combinatorics relies on.
"""

from __future__ import annotations

from functools import lru_cache

EPSILON = "epsilon"
OMEGA = "omega"


class BasisError(ValueError):
    """Raised when a weight vector is used in the wrong basis."""


class Partition:
    """Weakly decreasing finite sequence of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive integers: {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (1-based), zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        """Containment of Young diagrams: other fits inside self."""
        return all(other.parts[i] <= self.part(i + 1) for i in range(other.length()))

    def to_epsilon(self) -> "WeightVector":
        return WeightVector(self.parts, EPSILON)

    def to_omega(self) -> "WeightVector":
        return epsilon_to_omega(self.to_epsilon())

    def to_json(self) -> list:
        return list(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(("Partition", self.parts))

    def __repr__(self):
        return f"Partition({list(self.parts)})"


class WeightVector:
    """Finitely supported integer vector, tagged epsilon or omega.

    Coordinates are 1-indexed and stored sparsely; zero entries are never
    kept.  Arithmetic requires both operands to carry the same basis tag.
    """

    __slots__ = ("coords", "basis")

    def __init__(self, coords=(), basis=EPSILON):
        if basis not in (EPSILON, OMEGA):
            raise BasisError(f"unknown basis tag: {basis!r}")
        if isinstance(coords, dict):
            items = coords.items()
        else:
            items = ((i + 1, c) for i, c in enumerate(coords))
        stored = {}
        for i, c in items:
            i, c = int(i), int(c)
            if i < 1:
                raise ValueError(f"coordinate index must be positive: {i}")
            if c != 0:
                stored[i] = c
        object.__setattr__(self, "coords", stored)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("WeightVector is immutable")

    def coord(self, i: int) -> int:
        return self.coords.get(i, 0)

    def support(self) -> int:
        """Largest index with a nonzero coordinate (0 for the zero vector)."""
        return max(self.coords, default=0)

    def is_zero(self) -> bool:
        return not self.coords

    def as_tuple(self, length: int | None = None) -> tuple:
        n = self.support() if length is None else length
        return tuple(self.coord(i) for i in range(1, n + 1))

    def _check_same_basis(self, other):
        if not isinstance(other, WeightVector):
            raise TypeError(f"expected WeightVector, got {type(other).__name__}")
        if self.basis != other.basis:
            raise BasisError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other):
        self._check_same_basis(other)
        idx = set(self.coords) | set(other.coords)
        return WeightVector({i: self.coord(i) + other.coord(i) for i in idx}, self.basis)

    def __sub__(self, other):
        self._check_same_basis(other)
        idx = set(self.coords) | set(other.coords)
        return WeightVector({i: self.coord(i) - other.coord(i) for i in idx}, self.basis)

    def __neg__(self):
        return WeightVector({i: -c for i, c in self.coords.items()}, self.basis)

    def __eq__(self, other):
        return (
            isinstance(other, WeightVector)
            and self.basis == other.basis
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.basis, frozenset(self.coords.items())))

    def __repr__(self):
        return f"WeightVector({self.coords}, {self.basis!r})"


def zero_weight(basis=EPSILON) -> WeightVector:
    return WeightVector((), basis)


def epsilon_to_omega(w: WeightVector) -> WeightVector:
    """Change of basis b_i = a_i - a_{i+1} (a_i = 0 beyond the support)."""
    if w.basis != EPSILON:
        raise BasisError("epsilon_to_omega expects epsilon coordinates")
    n = w.support()
    return WeightVector({i: w.coord(i) - w.coord(i + 1) for i in range(1, n + 1)}, OMEGA)


def omega_to_epsilon(w: WeightVector) -> WeightVector:
    """Change of basis a_i = sum_{j >= i} b_j; inverse of epsilon_to_omega."""
    if w.basis != OMEGA:
        raise BasisError("omega_to_epsilon expects omega coordinates")
    n = w.support()
    coords = {}
    running = 0
    for i in range(n, 0, -1):
        running += w.coord(i)
        coords[i] = running
    return WeightVector(coords, EPSILON)


def leq_omega(u: WeightVector, v: WeightVector) -> bool:
    """Product order on Z^infty: u <= v componentwise, in omega coordinates."""
    if u.basis != OMEGA or v.basis != OMEGA:
        raise BasisError("leq_omega expects omega coordinates on both sides")
    for i in set(u.coords) | set(v.coords):
        if v.coord(i) - u.coord(i) < 0:
            return False
    return True


def partition_shift(p: Partition, w: WeightVector) -> WeightVector:
    """Componentwise sum of p (as epsilon coordinates) and w."""
    if w.basis != EPSILON:
        raise BasisError("partition_shift expects epsilon coordinates")
    return p.to_epsilon() + w


def as_partition(w: WeightVector) -> Partition | None:
    """The partition with these epsilon coordinates, or None if there is none.

    Failure (negative or non-decreasing coordinates) is a normal negative
    result, not an error.
    """
    if w.basis != EPSILON:
        raise BasisError("as_partition expects epsilon coordinates")
    parts = w.as_tuple()
    prev = None
    for c in parts:
        if c < 0 or (prev is not None and c > prev):
            return None
        prev = c
    return Partition(tuple(c for c in parts if c > 0))


def partitions_of(n: int, max_part: int | None = None):
    """Partitions of n in reverse-lexicographic order, as tuples."""
    return _partitions_of(n, n if max_part is None else min(max_part, n))


@lru_cache(maxsize=None)
def _partitions_of(n: int, max_part: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(max_part, n), 0, -1):
        for rest in _partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(max_size: int) -> list[Partition]:
    """All partitions of size <= max_size, ordered by (size, reverse-lex)."""
    if max_size < 0:
        raise ValueError("max_size must be nonnegative")
    return [Partition(p) for d in range(max_size + 1) for p in partitions_of(d)]


def partition_count(n: int) -> int:
    """p(n), computed by the bounded-largest-part recursion."""
    return _count_with_max(n, n)


@lru_cache(maxsize=None)
def _count_with_max(n: int, max_part: int) -> int:
    if n == 0:
        return 1
    if max_part == 0:
        return 0
    return sum(_count_with_max(n - first, min(first, n - first))
               for first in range(1, max_part + 1))
