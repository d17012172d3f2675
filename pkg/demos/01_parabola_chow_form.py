"""Chow form of the curve y1' = 0, y2 = y1^2 with two derivations.

The solutions are parabola points whose first coordinate is killed by
delta_1.  We compute the Chow form by elimination, compare it with a
resultant computed independently in sympy, and read off its invariants.
"""

import sympy

from pdchow import AutoreducedSet, RingContext, Ranking, compute_chow_form, parse_poly, print_poly
from pdchow.chowform import degree_bounds, verification_ranking, verify_charset_representation

ctx = RingContext(2, ("y1", "y2"))
A = AutoreducedSet([parse_poly("d1(y1)", ctx), parse_poly("y2 - y1^2", ctx)], Ranking(ctx))
res = compute_chow_form(A)
rk = verification_ranking(res.F.ctx)

print("characteristic set:", ", ".join(print_poly(a) for a in A))
print("hyperplane:", print_poly(res.hyperplanes[0].poly))
print("F =", print_poly(res.F, rk))
print(f"order s = {res.s}, dimension d = {res.d}, degree r = {res.r}")

# A point on the curve is (x, x^2) with d1(x) = 0, so substituting into the
# hyperplane and its d1-derivative leaves two quadratics in x that must share a root.
x, u0, u1, u2, v0, v1, v2 = sympy.symbols("x u0 u1 u2 v0 v1 v2")
res_x = sympy.expand(sympy.resultant(u2 * x**2 + u1 * x + u0, v2 * x**2 + v1 * x + v0, x))
print("sympy resultant (v = d1 u):", res_x)

mem = verify_charset_representation(res, A)
for j, ok in mem.members.items():
    print(f"S_F*y{j} - dF/d(d1 u0_{j}) lies in the joint ideal: {ok}")

b = degree_bounds(2, res.d, res.s, res.r, 2)
print(f"degree of the order-{res.s} jet closure lies in [{b.lower}, {b.upper}]")
