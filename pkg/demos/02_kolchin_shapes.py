"""Kolchin polynomials from leaders, and which of them allow a Chow form."""

from pdchow import AutoreducedSet, RingContext, Ranking, parse_poly
from pdchow.kolchin import (ExponentSet, charset_summary, chow_admissible_shape, differential_invariants,
                            kolchin_from_charset, omega_brute, omega_E)

systems = {
    "parabola with d1(y1) = 0": (("y1", "y2"), ["d1(y1)", "y2 - y1^2"]),
    "constants": (("y1",), ["d1(y1)", "d2(y1)"]),
    "one curve": (("y1", "y2"), ["y2 - y1^2"]),
    "free plane": (("y1", "y2"), []),
}

for label, (names, texts) in systems.items():
    ctx = RingContext(2, names)
    A = AutoreducedSet([parse_poly(t, ctx) for t in texts], Ranking(ctx))
    w = kolchin_from_charset(charset_summary(A))
    shape = chow_admissible_shape(w, ctx.n)
    inv = differential_invariants(w)
    verdict = "no Chow form" if shape is None else f"Chow form with d = {shape[0]}, s = {shape[1]}"
    print(f"{label:28s} omega = {str(w):24s} type {inv['type']:2d}  {verdict}")

# the closed form counts lattice points outside the cones over E
E = ExponentSet(2, [(2, 1), (0, 3)])
w = omega_E(E)
print("\nE =", sorted(E.points), " omega_E =", w)
for t in range(E.threshold(), E.threshold() + 4):
    print(f"  t = {t}: closed form {w(t)}, direct count {omega_brute(E, t)}")
