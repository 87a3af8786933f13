"""Walk through the main formula on a few K-types.

For each K-type we list the distinguished tableau tuples with their minimal
LR profile, then print the resulting q-series next to the definition-based
oracle (Euler factor times the raw Littlewood-Richardson sum).
"""

from quiver_harmonics import (
    KType,
    enumerate_distinguished,
    stable_multiplicity,
    stable_multiplicity_definition,
)

EXAMPLES = [
    ("adjoint, k=1", KType([((1,), (1,))]), 5),
    ("crossed boxes, k=2", KType([((1,), ()), ((), (1,))]), 6),
    ("two adjoint nodes, k=2", KType([((1,), (1,)), ((1,), (1,))]), 6),
    ("column pair, k=1", KType([((1, 1), (1, 1))]), 6),
]

for label, nu, degree in EXAMPLES:
    print(f"== {label}: {nu}")
    for tt, profile in enumerate_distinguished(nu, degree):
        print(f"  degree {profile.degree}: tableaux {tt.to_json()}")
        print(f"    lambda_min {profile.lambda_min.to_json()} "
              f"lambdas {[l.to_json() for l in profile.lambdas]}")
    print(f"  main formula:      {stable_multiplicity(nu, degree)}")
    print(f"  definition oracle: {stable_multiplicity_definition(nu, degree)}")
    print()
