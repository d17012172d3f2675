"""Random inputs shared by the property tests."""

from fractions import Fraction

from pdchow.diffpoly import DerOp, DiffPoly, DiffVar, RingContext, derops_upto
from pdchow.ranking import AutoreducedSet, Ranking
from pdchow.textio import parse_poly


def random_var(rng, ctx, max_order):
    op = rng.choice(derops_upto(ctx.m, max_order))
    return DiffVar(rng.randrange(ctx.n), DerOp(op))


def random_coeff(rng, size=5):
    num = rng.randint(-size, size) or 1
    return Fraction(num, rng.choice([1, 1, 1, 2, 3]))


def random_poly(rng, ctx, terms=3, max_order=2, max_deg=2, constant=True):
    f = ctx.zero()
    for _ in range(rng.randint(1, terms)):
        mono = {}
        for _ in range(rng.randint(0 if constant else 1, max_deg)):
            v = random_var(rng, ctx, max_order)
            mono[v] = mono.get(v, 0) + 1
        f = f + DiffPoly.monomial(ctx, tuple(mono.items()), random_coeff(rng))
    return f


def random_context(rng, max_m=3, max_n=2):
    m = rng.randint(1, max_m)
    n = rng.randint(1, max_n)
    return RingContext(m, tuple(f"y{j}" for j in range(1, n + 1)))


PAIR_CTX = RingContext(2, ("y1", "y2"))


def random_charset(rng, ctx=PAIR_CTX):
    """A random autoreduced set in y1, y2 drawn from a few shapes, with random lower-order tails."""
    P = lambda text: parse_poly(text, ctx)
    order = Ranking(ctx, "orderly")
    tail = lambda: random_poly(rng, ctx, terms=2, max_order=0, max_deg=2)
    shapes = [
        lambda: [P("d1(y1)") + P("y1") * rng.randint(-2, 2), P("y2") * rng.randint(1, 3) - P("y1^2")],
        lambda: [P("y1^2") + P("y1") * rng.randint(-2, 2) - 1],
        lambda: [P("y1") * P("d2(y2)") - P("y1^2") * rng.randint(1, 2), P("d1(y1)") - rng.randint(1, 3)],
        lambda: [P("y2^2") * (rng.randint(1, 2)) - P("y1") * rng.randint(1, 3)],
        lambda: [P("d1(y1)"), P("d2(y1)")],
    ]
    for _ in range(20):
        elems = rng.choice(shapes)()
        if rng.random() < 0.3:
            elems = [e + tail() for e in elems]
        elems = [e for e in elems if not e.is_constant()]
        try:
            return AutoreducedSet(elems, order)
        except ValueError:
            continue
    return AutoreducedSet([P("d1(y1)")], order)
