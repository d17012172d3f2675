"""Differential homogeneity of a Chow form, checked two ways.

Euler-type sums vanish for every non-identity operator exactly when F is
differentially homogeneous; the lambda check perturbs the coefficient block
by a random rational function and compares derivatives at zero.
"""

import random

from pdchow import AutoreducedSet, RingContext, Ranking, compute_chow_form, parse_poly, print_poly
from pdchow.chowform import delta_degree, lambda_check

ctx = RingContext(2, ("y1", "y2"))
F = compute_chow_form(AutoreducedSet([parse_poly("d1(y1)", ctx), parse_poly("y2 - y1^2", ctx)],
                                     Ranking(ctx))).F
rep = delta_degree(F, 0)
print("degree in block u0:", rep.r)
for theta, e in sorted(rep.euler.items()):
    shown = f"{rep.r}*F" if e == F * rep.r else print_poly(e)
    print(f"  Euler sum for operator {tuple(theta)}: {shown}")

rng = random.Random(7)
print("lambda check at 10 random points:", all(lambda_check(F, 0, rep.r, rng) for _ in range(10)))

bad = parse_poly("d1(u0_0) + u0_0", F.ctx)
print("d1(u0_0) + u0_0:", delta_degree(bad, 0).message)
