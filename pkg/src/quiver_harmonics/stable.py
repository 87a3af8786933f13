"""Stable graded multiplicities of K-types on a cyclic quiver.

The main formula sums q^(total profile degree) over distinguished tableau
tuples: members of the product crystal SST(nu) whose signed node weights sum
to zero.  Each such tuple admits a one-parameter family of LR data, whose
minimal member lambda_min is built coordinatewise in the omega basis; the
per-node lambda_i / alpha_i profile at the minimal parameter carries the
degree.  The definition-based oracle reassembles the same series from
classical LR coefficients and the Euler factor of the invariants.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .lr import lr_coefficient_classical
from .partitions import (
    EPSILON,
    Partition,
    WeightVector,
    as_partition,
    epsilon_to_omega,
    omega_to_epsilon,
    partition_shift,
    partitions_of,
    zero_weight,
)
from .qseries import QSeries, euler_factor, partition_series
from .tableaux import Tableau, enumerate_sst, epsilon_vector, weight


class KType:
    """A K-type: one (plus, minus) pair of partitions per quiver node."""

    __slots__ = ("k", "pairs")

    def __init__(self, pairs):
        pairs = tuple((Partition(p.parts if isinstance(p, Partition) else p),
                       Partition(m.parts if isinstance(m, Partition) else m))
                      for p, m in pairs)
        if not pairs:
            raise ValueError("a K-type needs at least one node")
        object.__setattr__(self, "k", len(pairs))
        object.__setattr__(self, "pairs", pairs)

    def __setattr__(self, name, value):
        raise AttributeError("KType is immutable")

    def plus(self, i: int) -> Partition:
        """nu_i^+ with 1-based cyclic index."""
        return self.pairs[(i - 1) % self.k][0]

    def minus(self, i: int) -> Partition:
        return self.pairs[(i - 1) % self.k][1]

    def total_boxes(self) -> int:
        return sum(p.size() + m.size() for p, m in self.pairs)

    @staticmethod
    def from_json(doc: dict) -> "KType":
        if not isinstance(doc, dict) or "nu" not in doc:
            raise ValueError('K-type JSON must be {"k": ..., "nu": [...]}')
        pairs = [(entry["plus"], entry["minus"]) for entry in doc["nu"]]
        kt = KType(pairs)
        if "k" in doc and int(doc["k"]) != kt.k:
            raise ValueError(f'stated k={doc["k"]} but {kt.k} node entries given')
        return kt

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "nu": [{"plus": p.to_json(), "minus": m.to_json()} for p, m in self.pairs],
        }

    def __eq__(self, other):
        return isinstance(other, KType) and self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        return f"KType({[(list(p.parts), list(m.parts)) for p, m in self.pairs]})"


class TableauTuple:
    """One (plus, minus) tableau pair per node."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        entries = tuple((tp, tm) for tp, tm in entries)
        for tp, tm in entries:
            if not isinstance(tp, Tableau) or not isinstance(tm, Tableau):
                raise TypeError("entries must be (Tableau, Tableau) pairs")
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("TableauTuple is immutable")

    @property
    def k(self) -> int:
        return len(self.entries)

    def pair(self, i: int):
        return self.entries[(i - 1) % self.k]

    def max_entry(self) -> int:
        return max((t.max_entry() for pair in self.entries for t in pair), default=0)

    def to_json(self) -> list:
        return [{"plus": tp.to_json(), "minus": tm.to_json()} for tp, tm in self.entries]

    def __eq__(self, other):
        return isinstance(other, TableauTuple) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"TableauTuple({self.to_json()})"


class LambdaProfile:
    """The minimal-parameter LR data of a distinguished tuple."""

    __slots__ = ("lambda_min", "lambdas", "alphas", "degree")

    def __init__(self, lambda_min, lambdas, alphas):
        object.__setattr__(self, "lambda_min", lambda_min)
        object.__setattr__(self, "lambdas", tuple(lambdas))
        object.__setattr__(self, "alphas", tuple(alphas))
        object.__setattr__(self, "degree", sum(l.size() for l in self.lambdas))

    def __setattr__(self, name, value):
        raise AttributeError("LambdaProfile is immutable")

    def to_json(self) -> dict:
        return {
            "lambda_min": self.lambda_min.to_json(),
            "lambdas": [l.to_json() for l in self.lambdas],
            "alphas": [a.to_json() for a in self.alphas],
            "degree": self.degree,
        }

    def __repr__(self):
        return f"LambdaProfile({self.to_json()})"


def tuple_weight(t: TableauTuple, i: int) -> WeightVector:
    """Signed node weight wt(T_i) = wt(T_i^+) - wt(T_i^-)."""
    if not 1 <= i <= t.k:
        raise IndexError(f"node index {i} out of range 1..{t.k}")
    tp, tm = t.pair(i)
    return weight(tp) - weight(tm)


def is_distinguished(t: TableauTuple) -> bool:
    """True iff the signed node weights sum to zero."""
    total = zero_weight(EPSILON)
    for i in range(1, t.k + 1):
        total = total + tuple_weight(t, i)
    return total.is_zero()


def _weight_prefix_sums(t: TableauTuple) -> list[WeightVector]:
    """csum[i] = sum_{j=2..i} wt(T_j) in epsilon coordinates (csum[1] = 0)."""
    csums = [None, zero_weight(EPSILON)]
    for j in range(2, t.k + 1):
        csums.append(csums[-1] + tuple_weight(t, j))
    return csums


def lambda_min(t: TableauTuple) -> Partition:
    """Coordinatewise (omega basis) supremum of the 2k bound vectors
    eps(T_i^+-) + wt(T_i^+) - sum_{j=2..i} wt(T_j)."""
    if not is_distinguished(t):
        raise ValueError("lambda_min requires a distinguished tuple")
    csums = _weight_prefix_sums(t)
    bounds = []
    for i in range(1, t.k + 1):
        tp, tm = t.pair(i)
        base = epsilon_to_omega(weight(tp) - csums[i])
        bounds.append(epsilon_vector(tp) + base)
        bounds.append(epsilon_vector(tm) + base)
    support = set()
    for s in bounds:
        support |= set(s.coords)
    sup = WeightVector({i: max(s.coord(i) for s in bounds) for i in support}, "omega")
    result = as_partition(omega_to_epsilon(sup))
    assert result is not None, "supremum has a negative omega coordinate"
    return result


def lambda_profile(t: TableauTuple) -> LambdaProfile:
    """lambda_i and alpha_i at the minimal parameter delta = empty."""
    lmin = lambda_min(t)
    csums = _weight_prefix_sums(t)
    lambdas, alphas = [], []
    for i in range(1, t.k + 1):
        lam = as_partition(partition_shift(lmin, csums[i]))
        tp, _ = t.pair(i)
        alpha = as_partition(partition_shift(lmin, csums[i] - weight(tp)))
        assert lam is not None and alpha is not None, (
            "profile entry is not a partition; lambda_min is broken"
        )
        lambdas.append(lam)
        alphas.append(alpha)
    return LambdaProfile(lmin, lambdas, alphas)


def enumerate_distinguished(nu: KType, max_degree: int):
    """All distinguished tuples for nu with profile degree <= max_degree.

    Entries are bounded by max_degree: an entry m in any tableau forces a
    profile lambda with at least m rows, hence degree >= m, so the bound
    loses nothing.  Slots are filled node by node (plus then minus) with the
    running signed weight pruned against the boxes still to come.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    shapes = []  # (shape, sign) in slot order
    for p, m in nu.pairs:
        shapes.append((p, +1))
        shapes.append((m, -1))

    # boxes still available after each slot, by sign
    plus_rest = [0] * (len(shapes) + 1)
    minus_rest = [0] * (len(shapes) + 1)
    for idx in range(len(shapes) - 1, -1, -1):
        shape, sign = shapes[idx]
        plus_rest[idx] = plus_rest[idx + 1] + (shape.size() if sign > 0 else 0)
        minus_rest[idx] = minus_rest[idx + 1] + (shape.size() if sign < 0 else 0)

    candidates = [enumerate_sst(shape, max_degree) for shape, _ in shapes]
    results = []

    def extend(idx: int, chosen: list, running: WeightVector):
        # the remaining slots can cancel at most minus_rest positive and
        # plus_rest negative boxes of the running signed weight
        excess_pos = sum(c for c in running.coords.values() if c > 0)
        excess_neg = sum(-c for c in running.coords.values() if c < 0)
        if excess_pos > minus_rest[idx] or excess_neg > plus_rest[idx]:
            return
        if idx == len(shapes):
            if running.is_zero():
                tt = TableauTuple(list(zip(chosen[0::2], chosen[1::2])))
                profile = lambda_profile(tt)
                if profile.degree <= max_degree:
                    results.append((tt, profile))
            return
        _, sign = shapes[idx]
        for t in candidates[idx]:
            w = weight(t)
            extend(idx + 1, chosen + [t], running + w if sign > 0 else running - w)

    extend(0, [], zero_weight(EPSILON))
    return results


def stable_multiplicity(nu: KType, max_degree: int) -> QSeries:
    """Main formula: coefficient of q^d counts distinguished tuples of
    profile degree d."""
    coeffs = [0] * (max_degree + 1)
    for _, profile in enumerate_distinguished(nu, max_degree):
        coeffs[profile.degree] += 1
    return QSeries(coeffs, max_degree)


@lru_cache(maxsize=None)
def _edge_sum(lam_prev: tuple, lam_cur: tuple, alpha_size: int,
              nu_plus: tuple, nu_minus: tuple) -> int:
    """sum over alpha of size alpha_size of
    c^{lam_cur}_{alpha, nu_plus} * c^{lam_prev}_{alpha, nu_minus}."""
    prev_p, cur_p = Partition(lam_prev), Partition(lam_cur)
    nup, num = Partition(nu_plus), Partition(nu_minus)
    total = 0
    for alpha in partitions_of(alpha_size):
        alpha_p = Partition(alpha)
        if not (cur_p.contains(alpha_p) and prev_p.contains(alpha_p)):
            continue
        a = lr_coefficient_classical(cur_p, alpha_p, nup)
        if a == 0:
            continue
        b = lr_coefficient_classical(prev_p, alpha_p, num)
        if b:
            total += a * b
    return total


def branching_sum(nu: KType, max_degree: int) -> QSeries:
    """The raw double sum over (alpha_i, lambda_i) tuples, no Euler factor:
    sum q^(sum |lambda_i|) prod_i c^{lambda_i}_{alpha_i, nu_i^+}
    c^{lambda_{i-1}}_{alpha_i, nu_i^-}.

    LR sizes force |lambda_i| = |alpha_i| + |nu_i^+| and
    |lambda_{i-1}| = |alpha_i| + |nu_i^-|, so all sizes are linear in
    |alpha_1| and the sum over partition tuples is finite per degree.
    """
    k = nu.k
    coeffs = [0] * (max_degree + 1)
    plus_total = sum(nu.plus(i).size() for i in range(1, k + 1))
    minus_total = sum(nu.minus(i).size() for i in range(1, k + 1))
    if plus_total != minus_total:
        return QSeries(coeffs, max_degree)

    # |alpha_i| = |alpha_1| + offset_i, from the size recurrence
    offsets = [0]
    for i in range(1, k):
        offsets.append(offsets[-1] + nu.plus(i).size() - nu.minus(i + 1).size())
    a1_lo = max(0, max(-o for o in offsets))
    a1 = a1_lo
    while True:
        alpha_sizes = [a1 + o for o in offsets]
        lam_sizes = [alpha_sizes[i] + nu.plus(i + 1).size() for i in range(k)]
        degree = sum(lam_sizes)
        if degree > max_degree:
            break
        for lams in itertools.product(*(partitions_of(s) for s in lam_sizes)):
            term = 1
            for i in range(1, k + 1):
                term *= _edge_sum(
                    lams[(i - 2) % k], lams[i - 1], alpha_sizes[i - 1],
                    nu.plus(i).parts, nu.minus(i).parts,
                )
                if term == 0:
                    break
            coeffs[degree] += term
        a1 += 1
    return QSeries(coeffs, max_degree)


def stable_multiplicity_definition(nu: KType, max_degree: int) -> QSeries:
    """Definition-based oracle: Euler factor times the raw branching sum."""
    return euler_factor(nu.k, max_degree) * branching_sum(nu, max_degree)


def separation_check(nu: KType, max_degree: int) -> bool:
    """Combinatorial separation of variables: the raw branching sum equals
    the partition series in q^k times the main formula."""
    lhs = branching_sum(nu, max_degree)
    rhs = partition_series(nu.k, max_degree) * stable_multiplicity(nu, max_degree)
    return lhs == rhs
