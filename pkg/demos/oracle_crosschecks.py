"""Cross-check the main formula against the two independent oracles.

First the explicit character decomposition of the coordinate ring on a
(2,2) quiver (valid up to degree n = 2), then Hesselink's alternating-sum
formula for generalized exponents in the k = 1 Kostant case.
"""

from quiver_harmonics import (
    KType,
    Partition,
    QuiverConfig,
    harmonic_multiplicity_oracle,
    hesselink_exponent,
    rational_weight,
    stable_multiplicity,
)

cfg = QuiverConfig((2, 2))
print(f"quiver dims {cfg.dims}, dim p = {cfg.dim_p()}, n = {cfg.n}")
for nu in [
    KType([((1,), ()), ((), (1,))]),
    KType([((1,), (1,)), ((), ())]),
    KType([((2,), ()), ((), (2,))]),
]:
    oracle = harmonic_multiplicity_oracle(cfg, nu, cfg.n)
    formula = stable_multiplicity(nu, cfg.n)
    mark = "ok" if oracle == formula else "MISMATCH"
    print(f"  {nu}: character oracle {oracle}  formula {formula}  [{mark}]")

print()
print("k = 1 adjoint type vs Hesselink generalized exponents:")
adjoint = KType([((1,), (1,))])
for n in range(2, 7):
    lam = rational_weight(Partition((1,)), Partition((1,)), n)
    exponents = hesselink_exponent(lam, n - 1)
    formula = stable_multiplicity(adjoint, n - 1)
    mark = "ok" if exponents == formula else "MISMATCH"
    print(f"  GL_{n}: {exponents}  [{mark}]")
