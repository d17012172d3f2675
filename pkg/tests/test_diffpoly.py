from fractions import Fraction

import pytest

from pdchow.diffpoly import (ContextMismatch, DerOp, DiffPoly, DiffVar, RingContext, derop_divide, derop_order,
                             derops_upto, divisors)
from pdchow.textio import parse_poly
from polygen import random_context, random_poly

CTX = RingContext(2, ("y1", "y2"))


def P(text, ctx=CTX):
    return parse_poly(text, ctx)


@pytest.mark.parametrize("op, order", [((0, 0), 0), ((1, 0), 1), ((2, 3), 5)])
def test_derop_order(op, order):
    assert derop_order(DerOp(op)) == order == DerOp(op).order


def test_derop_divide_examples():
    assert derop_divide(DerOp((2, 1)), DerOp((1, 0))) == (DerOp((1, 1)), 2)
    assert derop_divide(DerOp((1, 0)), DerOp((0, 1))) is None
    assert derop_divide(DerOp((3, 2)), DerOp((1, 2))) == (DerOp((2, 0)), 3)


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        DerOp((1, -1))


def test_product_rule_examples():
    assert P("d1(y1*y2)") == P("d1(y1)*y2 + y1*d1(y2)")
    assert P("y1^2").differentiate((2, 0)) == P("2*y1*d1^2(y1) + 2*d1(y1)^2")
    assert DiffPoly.constant(CTX, 5).differentiate((1, 1)).is_zero()


def test_arithmetic_examples():
    f = P("y1*d2(y2) - 3/4")
    assert (f + (-f)).is_zero()
    assert P("(y1 + 1)*(y1 - 1)") == P("y1^2 - 1")
    assert (f * 0).is_zero()
    assert f - f == 0


def test_context_mismatch():
    other = RingContext(2, ("y1", "y3"))
    with pytest.raises(ContextMismatch):
        P("y1") + parse_poly("y1", other)


def test_rejects_floats():
    with pytest.raises(TypeError):
        P("y1") * 0.5


def test_queries():
    f = P("d1^2(y1)*y2^3 + d2(y2) - 7")
    assert f.order() == 2
    assert f.total_degree() == 4
    assert f.degree_in(DiffVar(1, DerOp((0, 0)))) == 3
    assert P("5").order() == -1
    assert f.coeff(DiffVar(1, DerOp((0, 0))), 3) == P("d1^2(y1)")
    assert f.partial(DiffVar(1, DerOp((0, 0)))) == P("3*d1^2(y1)*y2^2")
    point = {v: Fraction(2) for v in f.variables()}
    assert f.evaluate(point) == 2 * 8 + 2 - 7


def test_leibniz_identity(seeded):
    for _ in range(60):
        ctx = random_context(seeded)
        f = random_poly(seeded, ctx, max_order=1)
        g = random_poly(seeded, ctx, max_order=1)
        theta = seeded.choice(derops_upto(ctx.m, 3))
        rhs = ctx.zero()
        for tau in divisors(theta):
            quo, binom = derop_divide(theta, tau)
            rhs = rhs + f.differentiate(quo) * g.differentiate(tau) * binom
        assert (f * g).differentiate(theta) == rhs


def test_derivations_commute(seeded):
    for _ in range(60):
        ctx = random_context(seeded)
        f = random_poly(seeded, ctx)
        i, j = seeded.randrange(ctx.m), seeded.randrange(ctx.m)
        assert f.derive(i).derive(j) == f.derive(j).derive(i)


def test_differentiate_is_linear(seeded):
    for _ in range(40):
        ctx = random_context(seeded)
        f, g = random_poly(seeded, ctx), random_poly(seeded, ctx)
        a, b = Fraction(seeded.randint(-5, 5), 3), Fraction(seeded.randint(-5, 5), 7)
        theta = seeded.choice(derops_upto(ctx.m, 2))
        assert (f * a + g * b).differentiate(theta) == f.differentiate(theta) * a + g.differentiate(theta) * b


def test_canonical_form_has_no_zero_terms():
    f = P("y1 + y2 - y1")
    assert f == P("y2")
    assert all(c != 0 for c in f.terms.values())
    assert hash(f) == hash(P("y2"))


def test_embed_and_rename():
    big = CTX.extend(["u0_0"])
    f = P("d1(y1)*y2")
    g = f.embed(big)
    assert g.ctx == big and g.terms == f.terms
    swapped = f.rename(CTX, {0: 1, 1: 0})
    assert swapped == P("d1(y2)*y1")
    with pytest.raises(ContextMismatch):
        g.embed(CTX)
