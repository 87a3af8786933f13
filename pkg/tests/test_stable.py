import itertools

import pytest

from quiver_harmonics.lr import clr_contains
from quiver_harmonics.partitions import (
    Partition,
    WeightVector,
    as_partition,
    enumerate_partitions,
    leq_omega,
    partition_shift,
)
from quiver_harmonics.qseries import QSeries, partition_series
from quiver_harmonics.stable import (
    KType,
    TableauTuple,
    branching_sum,
    enumerate_distinguished,
    is_distinguished,
    lambda_min,
    lambda_profile,
    separation_check,
    stable_multiplicity,
    stable_multiplicity_definition,
    tuple_weight,
)
from quiver_harmonics.tableaux import Tableau, weight

P = Partition
ADJOINT = KType([((1,), (1,))])
HOOKED = KType([((1,), ()), ((), (1,))])  # k=2, one box up, one box down


def boxpair(a, b):
    return (Tableau([[a]]), Tableau([[b]]))


def test_ktype_json_round_trip():
    doc = {"k": 2, "nu": [{"plus": [2, 1], "minus": []}, {"plus": [], "minus": [1]}]}
    kt = KType.from_json(doc)
    assert kt.to_json() == doc
    with pytest.raises(ValueError):
        KType.from_json({"k": 3, "nu": doc["nu"]})


def test_cyclic_indexing():
    kt = KType([((1,), ()), ((2,), (1, 1))])
    assert kt.plus(1) == P((1,))
    assert kt.plus(3) == kt.plus(1)  # index mod k
    assert kt.minus(0) == kt.minus(2)


def test_tuple_weight():
    tt = TableauTuple([boxpair(2, 2)])
    assert tuple_weight(tt, 1).is_zero()
    tt = TableauTuple([(Tableau([[1]]), Tableau(()))])
    assert tuple_weight(tt, 1) == WeightVector({1: 1})
    tt = TableauTuple([(Tableau([[1, 1]]), Tableau([[2]]))])
    assert tuple_weight(tt, 1) == WeightVector({1: 2, 2: -1})
    with pytest.raises(IndexError):
        tuple_weight(tt, 2)


def test_is_distinguished():
    assert is_distinguished(TableauTuple([boxpair(2, 2)]))
    assert not is_distinguished(TableauTuple([boxpair(1, 2)]))
    assert is_distinguished(TableauTuple([(Tableau(()), Tableau(()))]))


def test_lambda_min_columns():
    for m in range(1, 5):
        tt = TableauTuple([boxpair(m, m)])
        assert lambda_min(tt) == P((1,) * m)


def test_lambda_min_requires_distinguished():
    with pytest.raises(ValueError):
        lambda_min(TableauTuple([boxpair(1, 2)]))


def test_lambda_min_k2_crossed_boxes():
    # nu = ((1), {}; {}, (1)), boxes placed as (T_1^+, T_2^-), both entry 1
    tt = TableauTuple([(Tableau([[1]]), Tableau(())), (Tableau(()), Tableau([[1]]))])
    assert lambda_min(tt) == P((1,))


def test_lambda_min_is_minimal_member():
    """lambda_min is the smallest lambda_1 admitting the tuple into an LR
    family, found independently by searching all partitions of bounded size."""
    tuples = [tt for tt, _ in enumerate_distinguished(HOOKED, 5)]
    tuples += [tt for tt, _ in enumerate_distinguished(ADJOINT, 4)]
    for tt in tuples:
        lmin = lambda_min(tt)
        members = [
            lam1
            for lam1 in enumerate_partitions(lmin.size() + 2)
            if _in_clr_family(tt, lam1)
        ]
        assert members, tt
        assert min(members, key=lambda p: (p.size(), p.parts)) == lmin
        for lam1 in members:
            assert leq_omega(lmin.to_omega(), lam1.to_omega())


def _in_clr_family(tt, lam1):
    """Direct membership test: reconstruct the lambda/alpha family from
    lambda_1 and check every CLR condition."""
    k = tt.k
    csum = WeightVector(())
    lambdas, alphas = [], []
    for i in range(1, k + 1):
        if i > 1:
            csum = csum + tuple_weight(tt, i)
        lam = as_partition(partition_shift(lam1, csum))
        alpha = as_partition(partition_shift(lam1, csum - weight(tt.pair(i)[0])))
        if lam is None or alpha is None:
            return False
        lambdas.append(lam)
        alphas.append(alpha)
    for i in range(1, k + 1):
        tp, tm = tt.pair(i)
        if not clr_contains(tp, alphas[i - 1], lambdas[i - 1]):
            return False
        if not clr_contains(tm, alphas[i - 1], lambdas[(i - 2) % k]):
            return False
    return True


def test_profile_membership_at_lambda_min():
    """The profile at delta = empty satisfies every CLR membership."""
    for nu in (ADJOINT, HOOKED, KType([((2,), (1, 1))])):
        for tt, profile in enumerate_distinguished(nu, 5):
            assert _in_clr_family(tt, profile.lambda_min)
            for i in range(1, nu.k + 1):
                tp, tm = tt.pair(i)
                assert clr_contains(tp, profile.alphas[i - 1], profile.lambdas[i - 1])
                assert clr_contains(
                    tm, profile.alphas[i - 1], profile.lambdas[(i - 2) % nu.k]
                )


def test_profile_additivity_in_delta():
    """Shifting lambda_1 by a partition delta shifts every profile entry by
    delta (checked against the reconstruction used by the membership test)."""
    deltas = enumerate_partitions(3)
    for tt, profile in enumerate_distinguished(HOOKED, 5):
        for delta in deltas:
            shifted1 = as_partition(profile.lambda_min.to_epsilon() + delta.to_epsilon())
            if shifted1 is None:
                continue
            assert _in_clr_family(tt, shifted1)
            csum = WeightVector(())
            for i in range(1, tt.k + 1):
                if i > 1:
                    csum = csum + tuple_weight(tt, i)
                lam_i = as_partition(partition_shift(shifted1, csum))
                expected = as_partition(
                    profile.lambdas[i - 1].to_epsilon() + delta.to_epsilon()
                )
                assert lam_i == expected


def test_profile_examples():
    for m in range(1, 4):
        tt = TableauTuple([boxpair(m, m)])
        profile = lambda_profile(tt)
        assert profile.lambdas == (P((1,) * m),)
        assert profile.degree == m
    empty = TableauTuple([(Tableau(()), Tableau(()))])
    profile = lambda_profile(empty)
    assert profile.degree == 0 and profile.lambda_min == P(())

    # k=2 crossed boxes with entry p: lambda_1 = 1^p, lambda_2 = 1^(p-1)
    for p in range(1, 4):
        tt = TableauTuple([
            (Tableau([[p]]), Tableau(())),
            (Tableau(()), Tableau([[p]])),
        ])
        profile = lambda_profile(tt)
        assert profile.lambdas[0] == P((1,) * p)
        assert profile.lambdas[1] == P((1,) * (p - 1))
        assert profile.degree == 2 * p - 1


def test_enumerate_distinguished_examples():
    rows = enumerate_distinguished(ADJOINT, 3)
    assert len(rows) == 3
    assert sorted(profile.degree for _, profile in rows) == [1, 2, 3]

    trivial = KType([((), ())])
    rows = enumerate_distinguished(trivial, 4)
    assert len(rows) == 1 and rows[0][1].degree == 0

    rows = enumerate_distinguished(HOOKED, 5)
    assert len(rows) == 3
    assert sorted(profile.degree for _, profile in rows) == [1, 3, 5]


def test_stable_multiplicity_examples():
    assert stable_multiplicity(ADJOINT, 4).coeffs == (0, 1, 1, 1, 1)
    assert stable_multiplicity(KType([((), ())]), 3) == QSeries.one(3)
    assert stable_multiplicity(HOOKED, 5).coeffs == (0, 1, 0, 1, 0, 1)


def test_definition_oracle_examples():
    for nu, degree in ((ADJOINT, 4), (HOOKED, 5), (KType([((), ())]), 3)):
        assert stable_multiplicity(nu, degree) == stable_multiplicity_definition(nu, degree)
    unbalanced = KType([((1,), ())])
    assert stable_multiplicity_definition(unbalanced, 5).is_zero()
    trivial2 = KType([((), ()), ((), ())])
    assert stable_multiplicity_definition(trivial2, 4) == QSeries.one(4)


def test_separation_check_examples():
    assert separation_check(ADJOINT, 4)
    assert separation_check(KType([((), ())]), 6)
    assert separation_check(HOOKED, 5)


def test_separation_trivial_is_partition_series():
    trivial = KType([((), ()), ((), ())])
    assert branching_sum(trivial, 8) == partition_series(2, 8)


def test_balance_vanishing():
    for nu in (KType([((1,), ())]), KType([((2,), (1,))]), KType([((), (1,)), ((), ())])):
        assert stable_multiplicity(nu, 5).is_zero()
        assert stable_multiplicity_definition(nu, 5).is_zero()


def test_entry_bound_soundness_small():
    """No distinguished tuple with max entry m has profile degree < m."""
    for nu in (ADJOINT, HOOKED, KType([((1, 1), (2,))])):
        for tt, profile in enumerate_distinguished(nu, 6):
            assert profile.degree >= tt.max_entry()
