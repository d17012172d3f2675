from math import comb

import pytest

from pdchow.diffpoly import RingContext
from pdchow.groebner import buchberger
from pdchow.jetspace import IncoherentCharset, JetRing, b_s_variety, contract, prolong, truncated_ideal
from pdchow.ranking import AutoreducedSet, Ranking, ritt_reduce
from pdchow.textio import parse_poly

C2 = RingContext(2, ("y1", "y2"))


def P(text, ctx=C2):
    return parse_poly(text, ctx)


def charset(ctx, *texts):
    return AutoreducedSet([parse_poly(t, ctx) for t in texts], Ranking(ctx))


def test_prolong_examples():
    assert prolong(P("y2 - y1^2"), 1) == [P("y2 - y1^2"), P("d1(y2) - 2*y1*d1(y1)"), P("d2(y2) - 2*y1*d2(y1)")]
    f = P("d1(y1)*d2(y2)")
    assert prolong(f, 1) == [f]
    assert prolong(P("d1(y1)"), 2) == [P("d1(y1)"), P("d1^2(y1)"), P("d1d2(y1)")]
    with pytest.raises(ValueError):
        prolong(P("d1^2(y1)"), 1)


def test_jet_ring_counts():
    for m in (1, 2, 3):
        ctx = RingContext(m, ("a", "b", "c"))
        for t in range(4):
            assert len(JetRing(ctx, t).variables) == 3 * comb(t + m, m)
    assert len(JetRing(C2, 2, {"y2": 0}).variables) == comb(4, 2) + 1


def _same_ideal(ti, polys):
    gb = buchberger([ti.jet.to_poly(p) for p in polys], ti.jet.ring)
    return gb == ti.basis


def test_truncated_ideal_examples():
    ti = truncated_ideal(charset(C2, "d1(y1)", "y2 - y1^2"), 1)
    assert _same_ideal(ti, [P("d1(y1)"), P("y2 - y1^2"), P("d1(y2) - 2*y1*d1(y1)"), P("d2(y2) - 2*y1*d2(y1)")])
    c1 = RingContext(2, ("y1",))
    assert _same_ideal(truncated_ideal(charset(c1, "y1"), 0), [parse_poly("y1", c1)])


def test_saturation_by_initial():
    c1 = RingContext(1, ("y1",))
    ti = truncated_ideal(charset(c1, "y1*d1(y1) - 1"), 1)
    # y1 is invertible on the variety, so saturation leaves the ideal unchanged
    assert _same_ideal(ti, [parse_poly("y1*d1(y1) - 1", c1)])


def test_saturation_removes_initial_component():
    ti = truncated_ideal(charset(C2, "y1*y2"), 0)
    assert _same_ideal(ti, [P("y2")])


def test_b_s_examples():
    assert b_s_variety(charset(C2, "d1(y1)", "y2 - y1^2"), 1).basis == truncated_ideal(
        charset(C2, "d1(y1)", "y2 - y1^2"), 1).basis
    assert b_s_variety(AutoreducedSet([], Ranking(C2)), 2).basis.is_zero()
    c1 = RingContext(2, ("y",))
    assert _same_ideal(b_s_variety(charset(c1, "d1(y)", "d2(y)"), 1),
                       [parse_poly("d1(y)", c1), parse_poly("d2(y)", c1)])


def test_incoherent_charset_rejected():
    c1 = RingContext(2, ("y",))
    with pytest.raises(IncoherentCharset):
        truncated_ideal(charset(c1, "d1(y) - 1", "d2(y) - y"), 1)


def test_order_above_truncation():
    A = charset(C2, "d1(y1)", "y2 - y1^2")
    with pytest.raises(ValueError):
        truncated_ideal(A, 0)
    loose = truncated_ideal(A, 0, strict=False)
    assert _same_ideal(loose, [P("y2 - y1^2")])


@pytest.mark.parametrize("texts", [("d1(y1)", "y2 - y1^2"), ("y2 - y1^2",), ("y1*y2 - 1",)])
def test_generators_reduce_to_zero(texts):
    A = charset(C2, *texts)
    for t in range(A.max_order(), A.max_order() + 2):
        for g in truncated_ideal(A, t).generators:
            assert ritt_reduce(g, A).remainder.is_zero()


@pytest.mark.parametrize("texts", [("d1(y1)", "y2 - y1^2"), ("y2 - y1^2",), ("y1*y2 - 1",)])
def test_contraction_is_consistent(texts):
    A = charset(C2, *texts)
    t = A.max_order()
    small = truncated_ideal(A, t)
    for big_t in (t + 1, t + 2):
        assert contract(truncated_ideal(A, big_t), t) == small.basis
