"""Cutting varieties with generic hypersurfaces, one jet order at a time.

For each truncation order t we measure the dimension of the jet variety
intersected with all derivatives of L up to order t, and compare with
omega_V(t) - C(t + m - s, m).  A variety of differential dimension zero
misses a generic hypersurface entirely.
"""

from pdchow import AutoreducedSet, RingContext, Ranking, parse_poly
from pdchow.quasigeneric import QuasiGenericSpec, multi_intersection_predict, run_intersection_experiment


def show(label, A, spec, t_max):
    exp = run_intersection_experiment(A, spec, t_max)
    print(label)
    for t in range(t_max + 1):
        got = "empty" if exp.measured[t] is None else exp.measured[t]
        print(f"  t = {t}: V alone {exp.baseline[t]:3d}   with L {got!s:>5}   predicted {exp.predicted[t]}")
    print("  agrees:", exp.agrees)


c2 = RingContext(2, ("y1", "y2"))
c1 = RingContext(2, ("y1",))
show("plane cut by a generic hyperplane", AutoreducedSet([], Ranking(c2)), QuasiGenericSpec.hyperplane(c2, 0), 2)
show("curve y2 = y1^2 cut by a generic order-1 polynomial",
     AutoreducedSet([parse_poly("y2 - y1^2", c2)], Ranking(c2)), QuasiGenericSpec.generic(c2, 1), 2)
show("constants cut by a generic hyperplane",
     AutoreducedSet([parse_poly("d1(y1)", c1), parse_poly("d2(y1)", c1)], Ranking(c1)),
     QuasiGenericSpec.hyperplane(c1, 0), 2)

w, inv = multi_intersection_predict([1, 2], 2, 2)
print("\ntwo generic polynomials of orders 1 and 2 in A^2, m = 2:", w, inv)
