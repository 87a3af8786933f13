"""Littlewood-Richardson coefficients, two independent ways.

The crystal route counts tableaux of shape nu whose string-length vector is
dominated by alpha and whose content shifts alpha to lambda.  The classical
route counts skew semistandard fillings of lambda/alpha with content nu and
a lattice reverse reading word.  The two never share code beyond the
Partition type, so each serves as an oracle for the other.
"""

from __future__ import annotations

from functools import lru_cache

from .partitions import (
    Partition,
    as_partition,
    leq_omega,
    partition_shift,
)
from .tableaux import Tableau, enumerate_sst, epsilon_vector, weight


def clr_contains(t: Tableau, alpha: Partition, lam: Partition) -> bool:
    """Membership in the crystal LR set: alpha dominates the string vector
    of t and alpha + wt(t) = lam."""
    if not leq_omega(epsilon_vector(t), alpha.to_omega()):
        return False
    return as_partition(partition_shift(alpha, weight(t))) == lam


def lr_coefficient_crystal(lam: Partition, alpha: Partition, nu: Partition) -> int:
    """c^lam_{alpha,nu} by counting crystal LR members in SST(nu).

    Entries above length(lam) cannot occur: a tableau entry m > l(lam) would
    force a positive epsilon coordinate of alpha + wt(t) beyond row l(lam).
    """
    return _lr_crystal(lam.parts, alpha.parts, nu.parts)


@lru_cache(maxsize=None)
def _lr_crystal(lam: tuple, alpha: tuple, nu: tuple) -> int:
    lam_p, alpha_p, nu_p = Partition(lam), Partition(alpha), Partition(nu)
    if not nu:
        return 1 if alpha == lam else 0
    bound = lam_p.length()
    return sum(
        1
        for t in enumerate_sst(nu_p, bound)
        if clr_contains(t, alpha_p, lam_p)
    )


def lr_coefficient_classical(lam: Partition, alpha: Partition, nu: Partition) -> int:
    """c^lam_{alpha,nu} by the classical skew lattice-word rule."""
    return _lr_classical(lam.parts, alpha.parts, nu.parts)


@lru_cache(maxsize=None)
def _lr_classical(lam: tuple, alpha: tuple, nu: tuple) -> int:
    lam_p, alpha_p = Partition(lam), Partition(alpha)
    if sum(alpha) + sum(nu) != sum(lam) or not lam_p.contains(alpha_p):
        return 0
    if not nu:
        return 1

    # skew cells in reverse reading order: rows top to bottom, each row
    # right to left, so the ballot condition can be checked incrementally
    cells = []
    for r in range(lam_p.length()):
        left = alpha_p.part(r + 1)
        for c in range(lam[r] - 1, left - 1, -1):
            cells.append((r, c))

    nentries = len(nu)
    grid = {}
    counts = [0] * (nentries + 1)  # counts[v] = occurrences of v so far
    total = 0

    def fill(pos: int) -> None:
        nonlocal total
        if pos == len(cells):
            total += 1
            return
        r, c = cells[pos]
        for v in range(1, nentries + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # lattice word would break
            right = grid.get((r, c + 1))
            if right is not None and v > right:
                continue
            above = grid.get((r - 1, c))
            if above is not None and v <= above:
                continue
            grid[(r, c)] = v
            counts[v] += 1
            fill(pos + 1)
            counts[v] -= 1
            del grid[(r, c)]

    fill(0)
    return total
