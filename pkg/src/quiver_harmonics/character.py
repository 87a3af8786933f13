"""Explicit character theory on tiny quivers, used as an independent oracle.

The graded character of the coordinate ring is expanded monomial by
monomial on the torus of K, decomposed into products of rational Schur
characters by leading-term peeling, and divided (gradedly) by the invariant
ring via the exact Euler factor.  A separate Hesselink-formula route covers
the k = 1 Kostant case.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .partitions import EPSILON, Partition, WeightVector
from .qseries import QSeries
from .stable import KType
from .tableaux import enumerate_sst

MAX_COORDINATES = 12  # dim p guard: explicit expansion beyond this explodes
MAX_ORACLE_DEGREE = 6


class CapacityError(RuntimeError):
    """The requested explicit computation exceeds desk scale."""


class NotACharacterError(ValueError):
    """Peeling met a negative multiplicity: the input was not a character."""


class QuiverConfig:
    """Cyclic quiver with node dimensions n_1..n_k; n = min(dims)."""

    __slots__ = ("k", "dims", "n")

    def __init__(self, dims):
        dims = tuple(int(d) for d in dims)
        if not dims or any(d < 1 for d in dims):
            raise ValueError(f"dims must be positive integers: {dims}")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "k", len(dims))
        object.__setattr__(self, "n", min(dims))

    def __setattr__(self, name, value):
        raise AttributeError("QuiverConfig is immutable")

    def dim_p(self) -> int:
        return sum(self.dims[i] * self.dims[(i + 1) % self.k] for i in range(self.k))

    def offsets(self) -> tuple[int, ...]:
        """Starting index of each node's torus coordinates in the flat tuple."""
        out, acc = [], 0
        for d in self.dims:
            out.append(acc)
            acc += d
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, QuiverConfig) and self.dims == other.dims

    def __hash__(self):
        return hash(self.dims)

    def __repr__(self):
        return f"QuiverConfig({list(self.dims)})"


class RationalWeight:
    """Weakly decreasing integer vector: a rational GL_n highest weight."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        entries = tuple(int(e) for e in entries)
        for a, b in zip(entries, entries[1:]):
            if a < b:
                raise ValueError(f"entries not weakly decreasing: {entries}")
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("RationalWeight is immutable")

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, RationalWeight) and self.entries == other.entries

    def __hash__(self):
        return hash(("RationalWeight", self.entries))

    def __repr__(self):
        return f"RationalWeight({list(self.entries)})"


class LaurentPolynomial:
    """Integer Laurent polynomial in a fixed number of torus variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=()):
        stored = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for expo, coeff in items:
            expo = tuple(int(e) for e in expo)
            if len(expo) != nvars:
                raise ValueError(f"exponent arity {len(expo)} != nvars {nvars}")
            coeff = int(coeff)
            if coeff:
                stored[expo] = stored.get(expo, 0) + coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", {e: c for e, c in stored.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    @staticmethod
    def one(nvars: int) -> "LaurentPolynomial":
        return LaurentPolynomial(nvars, {(0,) * nvars: 1})

    def _check(self, other):
        if not isinstance(other, LaurentPolynomial) or other.nvars != self.nvars:
            raise TypeError("operands must share the variable count")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(self.nvars, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return LaurentPolynomial(self.nvars, out)

    def __mul__(self, other):
        self._check(other)
        out: dict[tuple, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(self.nvars, out)

    def scale(self, c: int) -> "LaurentPolynomial":
        return LaurentPolynomial(self.nvars, {e: c * v for e, v in self.terms.items()})

    def at_ones(self) -> int:
        """Evaluation at every variable = 1 (the dimension, for a character)."""
        return sum(self.terms.values())

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPolynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"LaurentPolynomial({self.nvars}, {self.terms})"


def rational_weight(nu_plus: Partition, nu_minus: Partition, n: int) -> RationalWeight:
    """Highest weight (nu_plus, 0..0, -reversed(nu_minus)) of length n."""
    if nu_plus.length() + nu_minus.length() > n:
        raise ValueError(
            f"lengths {nu_plus.length()}+{nu_minus.length()} exceed n={n}: "
            "the rational type is not realizable"
        )
    zeros = n - nu_plus.length() - nu_minus.length()
    entries = nu_plus.parts + (0,) * zeros + tuple(-p for p in reversed(nu_minus.parts))
    return RationalWeight(entries)


def schur_rational(w: RationalWeight) -> LaurentPolynomial:
    """Character of the rational GL_n irrep with highest weight w.

    Computed as (x_1...x_n)^c times the tableau-monomial expansion of the
    shifted partition; equal to the Weyl bialternant (asserted in tests by
    multiplying through the Vandermonde determinant).
    """
    return _schur_rational(w.entries)


@lru_cache(maxsize=None)
def _schur_rational(entries: tuple[int, ...]) -> LaurentPolynomial:
    n = len(entries)
    if n == 0:
        return LaurentPolynomial.one(0)
    c = entries[-1]
    mu = Partition(tuple(e - c for e in entries if e - c > 0))
    terms: dict[tuple, int] = {}
    for t in enumerate_sst(mu, n):
        expo = [c] * n
        for row in t.rows:
            for e in row:
                expo[e - 1] += 1
        expo = tuple(expo)
        terms[expo] = terms.get(expo, 0) + 1
    return LaurentPolynomial(n, terms)


def _coordinate_weights(cfg: QuiverConfig) -> list[tuple[int, ...]]:
    """Torus weights of the coordinate functions on p: one monomial
    x^(i)_s / x^(i+1)_r per matrix entry of Hom(V_i, V_{i+1})."""
    nvars = sum(cfg.dims)
    offs = cfg.offsets()
    weights = []
    for i in range(cfg.k):
        j = (i + 1) % cfg.k
        for s in range(cfg.dims[i]):
            for r in range(cfg.dims[j]):
                expo = [0] * nvars
                expo[offs[i] + s] += 1
                expo[offs[j] + r] -= 1
                weights.append(tuple(expo))
    return weights


def graded_coordinate_character(cfg: QuiverConfig, d: int) -> LaurentPolynomial:
    """Character of the degree-d polynomials on p: the complete homogeneous
    symmetric function h_d of the coordinate weights."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if cfg.dim_p() > MAX_COORDINATES or d > MAX_ORACLE_DEGREE:
        raise CapacityError(
            f"explicit character expansion limited to dim p <= {MAX_COORDINATES} "
            f"and degree <= {MAX_ORACLE_DEGREE} (got dim p = {cfg.dim_p()}, d = {d})"
        )
    nvars = sum(cfg.dims)
    terms: dict[tuple, int] = {}
    for combo in itertools.combinations_with_replacement(_coordinate_weights(cfg), d):
        expo = tuple(map(sum, zip(*combo))) if combo else (0,) * nvars
        terms[expo] = terms.get(expo, 0) + 1
    return LaurentPolynomial(nvars, terms)


def _split_blocks(expo: tuple, cfg: QuiverConfig):
    offs = cfg.offsets()
    return [expo[offs[i]: offs[i] + cfg.dims[i]] for i in range(cfg.k)]


def _product_character(blocks) -> LaurentPolynomial:
    polys = [_schur_rational(tuple(b)) for b in blocks]
    out = polys[0]
    for p in polys[1:]:
        combined: dict[tuple, int] = {}
        for e1, c1 in out.terms.items():
            for e2, c2 in p.terms.items():
                combined[e1 + e2] = combined.get(e1 + e2, 0) + c1 * c2
        out = LaurentPolynomial(out.nvars + p.nvars, combined)
    return out


def decompose_into_ktypes(ch: LaurentPolynomial, cfg: QuiverConfig) -> dict:
    """Decompose a K character by peeling off the lexicographically greatest
    monomial, which is the joint highest weight of some product of rational
    Schur characters.  Keys are tuples of per-node RationalWeight."""
    if ch.nvars != sum(cfg.dims):
        raise ValueError("character has the wrong number of torus variables")
    remaining = ch
    out: dict[tuple, int] = {}
    while not remaining.is_zero():
        top = max(remaining.terms)
        mult = remaining.terms[top]
        if mult < 0:
            raise NotACharacterError(f"negative multiplicity {mult} at weight {top}")
        blocks = _split_blocks(top, cfg)
        for b in blocks:
            if any(x < y for x, y in zip(b, b[1:])):
                raise NotACharacterError(f"leading weight {top} is not dominant")
        remaining = remaining - _product_character(blocks).scale(mult)
        out[tuple(RationalWeight(b) for b in blocks)] = mult
    return out


@lru_cache(maxsize=None)
def graded_decomposition(cfg: QuiverConfig, d: int) -> dict:
    """Cached K-type decomposition of the degree-d coordinate polynomials."""
    return decompose_into_ktypes(graded_coordinate_character(cfg, d), cfg)


def _realizable(cfg: QuiverConfig, nu: KType) -> bool:
    return all(
        nu.plus(i + 1).length() + nu.minus(i + 1).length() <= cfg.dims[i]
        for i in range(cfg.k)
    )


def harmonic_multiplicity_oracle(cfg: QuiverConfig, nu: KType, max_degree: int) -> QSeries:
    """Graded multiplicity of nu in the harmonics, valid up to degree n:
    the coordinate-ring multiplicity series times the exact Euler factor
    over the n invariant generators of degrees k, 2k, ..., nk."""
    if nu.k != cfg.k:
        raise ValueError(f"K-type has {nu.k} nodes, quiver has {cfg.k}")
    if max_degree > cfg.n:
        raise ValueError(
            f"oracle valid only up to degree n = {cfg.n}, asked for {max_degree}"
        )
    if not _realizable(cfg, nu):
        raise ValueError("K-type is not realizable on these node dimensions")
    target = tuple(
        rational_weight(nu.plus(i + 1), nu.minus(i + 1), cfg.dims[i])
        for i in range(cfg.k)
    )
    coord_series = QSeries(
        [graded_decomposition(cfg, d).get(target, 0) for d in range(max_degree + 1)],
        max_degree,
    )
    euler = QSeries.one(max_degree)
    for i in range(1, cfg.n + 1):
        euler = euler * (
            QSeries.one(max_degree) - QSeries.monomial(cfg.k * i, max_degree)
        )
    return euler * coord_series


@lru_cache(maxsize=None)
def _kostant_table(n: int, truncation: int) -> dict:
    """DP over positive roots of gl_n: maps an epsilon-coordinate tuple v to
    the coefficient list of sum_m N_m(v) q^m, N_m = number of ways to write
    v with m positive roots."""
    table: dict[tuple, list[int]] = {(0,) * n: [1] + [0] * truncation}
    for i in range(n):
        for j in range(i + 1, n):
            updated = {v: list(poly) for v, poly in table.items()}
            for v, poly in table.items():
                base = min(d for d, c in enumerate(poly) if c)
                for t in range(1, truncation - base + 1):
                    nv = list(v)
                    nv[i] += t
                    nv[j] -= t
                    nv = tuple(nv)
                    dest = updated.setdefault(nv, [0] * (truncation + 1))
                    for d, c in enumerate(poly):
                        if c and d + t <= truncation:
                            dest[d + t] += c
            table = updated
    return {v: tuple(poly) for v, poly in table.items()}


def q_kostant_partition(w: WeightVector, n: int, truncation: int) -> QSeries:
    """Generating series of the number of ways to write w as a sum of m
    positive roots epsilon_i - epsilon_j (i < j <= n)."""
    if w.basis != EPSILON:
        raise ValueError("q_kostant_partition expects epsilon coordinates")
    if w.support() > n:
        return QSeries.zero(truncation)
    key = w.as_tuple(n)
    poly = _kostant_table(n, truncation).get(key)
    if poly is None:
        return QSeries.zero(truncation)
    return QSeries(poly, truncation)


def _sign(perm: tuple[int, ...]) -> int:
    inv = sum(
        1
        for a in range(len(perm))
        for b in range(a + 1, len(perm))
        if perm[a] > perm[b]
    )
    return -1 if inv % 2 else 1


def hesselink_exponent(lam: RationalWeight, truncation: int) -> QSeries:
    """Lusztig q-analogue at the zero weight: the alternating Weyl-group sum
    of the q-Kostant partition function at w(lam + rho) - rho, with
    rho = (n-1, ..., 1, 0)."""
    n = len(lam)
    if sum(lam.entries) != 0:
        raise ValueError("hesselink_exponent expects a weight summing to zero")
    rho = tuple(n - 1 - i for i in range(n))
    shifted = tuple(a + b for a, b in zip(lam.entries, rho))
    table = _kostant_table(n, truncation)
    coeffs = [0] * (truncation + 1)
    for perm in itertools.permutations(range(n)):
        vec = tuple(shifted[perm[i]] - rho[i] for i in range(n))
        poly = table.get(vec)
        if poly is None:
            continue
        s = _sign(perm)
        for d, c in enumerate(poly):
            coeffs[d] += s * c
    return QSeries(coeffs, truncation)
