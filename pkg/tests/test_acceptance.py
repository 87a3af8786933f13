"""Acceptance suite: one test per criterion, printed pass/fail lines.

Every tolerance is exact integer equality; the sweeps are the full stated
ranges, not samples.
"""

import itertools

import pytest

from quiver_harmonics.character import (
    QuiverConfig,
    harmonic_multiplicity_oracle,
    hesselink_exponent,
    rational_weight,
)
from quiver_harmonics.lr import lr_coefficient_classical, lr_coefficient_crystal
from quiver_harmonics.partitions import (
    Partition,
    WeightVector,
    enumerate_partitions,
    partitions_of,
)
from quiver_harmonics.qseries import QSeries, euler_factor, partition_series
from quiver_harmonics.stable import (
    KType,
    enumerate_distinguished,
    separation_check,
    stable_multiplicity,
    stable_multiplicity_definition,
)
from quiver_harmonics.tableaux import (
    enumerate_sst,
    epsilon_string,
    lower,
    phi_string,
    raise_,
    weight,
)

SWEEP_BOXES = 4
SWEEP_KS = (1, 2, 3)
SWEEP_DEGREE = 6


def _report(name, ok):
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, name


def sweep_ktypes():
    """Every K-type with total box count <= SWEEP_BOXES, k in SWEEP_KS."""
    parts = enumerate_partitions(SWEEP_BOXES)
    for k in SWEEP_KS:
        for combo in itertools.product(parts, repeat=2 * k):
            if sum(p.size() for p in combo) > SWEEP_BOXES:
                continue
            yield KType(list(zip(combo[0::2], combo[1::2])))


def test_criterion_1_main_theorem_equivalence():
    ok = True
    for nu in sweep_ktypes():
        if stable_multiplicity(nu, SWEEP_DEGREE) != stable_multiplicity_definition(
            nu, SWEEP_DEGREE
        ):
            ok = False
            print(f"  counterexample: {nu}")
    _report("1 main-theorem equivalence", ok)


def test_criterion_2_unstable_agreement():
    ok = True
    for dims in ((1, 1), (2, 2), (1, 1, 1)):
        cfg = QuiverConfig(dims)
        n = cfg.n
        parts = enumerate_partitions(n)
        # any K-type with more than n boxes on either side is zero on both
        # routes in degrees <= n, so this sweep covers every realizable type
        for plus in itertools.product(parts, repeat=cfg.k):
            if sum(p.size() for p in plus) > n:
                continue
            for minus in itertools.product(parts, repeat=cfg.k):
                if sum(m.size() for m in minus) > n:
                    continue
                nu = KType(list(zip(plus, minus)))
                if any(
                    nu.plus(i + 1).length() + nu.minus(i + 1).length() > cfg.dims[i]
                    for i in range(cfg.k)
                ):
                    continue
                if harmonic_multiplicity_oracle(cfg, nu, n) != stable_multiplicity(nu, n):
                    ok = False
                    print(f"  counterexample: dims={dims} {nu}")
    _report("2 unstable agreement on small quivers", ok)


def test_criterion_3_kostant_recovery():
    adjoint = KType([((1,), (1,))])
    ok = True
    for d in range(1, 6):
        formula = stable_multiplicity(adjoint, d)
        if formula.coeffs != (0,) + (1,) * d:
            ok = False
            print(f"  formula wrong at D={d}: {formula}")
        for n in range(d + 1, 7):
            lam = rational_weight(Partition((1,)), Partition((1,)), n)
            if hesselink_exponent(lam, d) != formula:
                ok = False
                print(f"  Hesselink mismatch at D={d}, n={n}")
    _report("3 Kostant recovery at k=1", ok)


def test_criterion_4_lr_cross_validation():
    ok = True
    checked = 0
    for lam in enumerate_partitions(6):
        for a in range(lam.size() + 1):
            for alpha in partitions_of(a):
                for nu in partitions_of(lam.size() - a):
                    alpha_p, nu_p = Partition(alpha), Partition(nu)
                    checked += 1
                    if lr_coefficient_crystal(lam, alpha_p, nu_p) != (
                        lr_coefficient_classical(lam, alpha_p, nu_p)
                    ):
                        ok = False
                        print(f"  counterexample: {lam} {alpha_p} {nu_p}")
    ok = ok and checked > 1000
    print(f"  ({checked} triples)")
    _report("4 LR cross-validation", ok)


def test_criterion_5_separation_of_variables():
    ok = True
    for nu in sweep_ktypes():
        if not separation_check(nu, SWEEP_DEGREE):
            ok = False
            print(f"  counterexample: {nu}")
    _report("5 combinatorial separation of variables", ok)


def test_criterion_6_euler_identity():
    ok = True
    for k in range(1, 5):
        for trunc in range(17):
            if euler_factor(k, trunc) * partition_series(k, trunc) != QSeries.one(trunc):
                ok = False
                print(f"  failure at k={k}, truncation={trunc}")
    _report("6 Euler identity", ok)


def test_criterion_7_vanishing_off_balance():
    ok = True
    for nu in sweep_ktypes():
        plus = sum(p.size() for p, _ in nu.pairs)
        minus = sum(m.size() for _, m in nu.pairs)
        if plus != minus and not stable_multiplicity(nu, SWEEP_DEGREE).is_zero():
            ok = False
            print(f"  nonzero series for unbalanced {nu}")
    _report("7 vanishing for unbalanced K-types", ok)


def test_criterion_8_entry_bound_soundness():
    ok = True
    for nu in sweep_ktypes():
        for tt, profile in enumerate_distinguished(nu, SWEEP_DEGREE):
            if profile.degree < tt.max_entry():
                ok = False
                print(f"  violation: {tt} degree={profile.degree}")
    _report("8 entry-bound soundness", ok)


def test_criterion_9_crystal_axioms():
    ok = True
    for p in enumerate_partitions(5):
        for t in enumerate_sst(p, 5):
            wt = weight(t)
            for i in range(1, 6):
                up = raise_(t, i)
                if up is not None and lower(up, i) != t:
                    ok = False
                down = lower(t, i)
                if down is not None:
                    expected = wt - WeightVector({i: 1}) + WeightVector({i + 1: 1})
                    if weight(down) != expected or raise_(down, i) != t:
                        ok = False
                if phi_string(t, i) - epsilon_string(t, i) != wt.coord(i) - wt.coord(i + 1):
                    ok = False
    _report("9 crystal axioms", ok)
