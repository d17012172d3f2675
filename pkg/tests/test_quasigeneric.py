from fractions import Fraction

import pytest

from pdchow.diffpoly import RingContext
from pdchow.kolchin import NumericalPolynomial
from pdchow.quasigeneric import (QuasiGenericSpec, baseline_dimension, binomial_drop, intersection_dimension,
                                 multi_intersection_predict, predicted_polynomial, run_intersection_experiment,
                                 validate_support)
from pdchow.ranking import AutoreducedSet, Ranking
from pdchow.textio import parse_poly

C1 = RingContext(2, ("y1",))
C2 = RingContext(2, ("y1", "y2"))


def charset(ctx, *texts):
    return AutoreducedSet([parse_poly(t, ctx) for t in texts], Ranking(ctx))


def spec(ctx, s, *monos):
    return QuasiGenericSpec(ctx, s, [parse_poly(x, ctx) for x in monos])


class TestSupport:
    def test_product_of_first_derivatives_has_order_one(self):
        # order of a monomial is the largest order among its factors
        assert validate_support(spec(C1, 1, "1", "d1(y1)*d2(y1)"))
        rep = validate_support(spec(C1, 2, "1", "d1(y1)*d2(y1)"))
        assert not rep and any("purely" in msg for msg in rep.messages)

    def test_missing_pure_monomial(self):
        rep = validate_support(spec(C2, 1, "1", "d1(y1)", "d1(y1)*y2"))
        assert not rep and rep.messages == ["no monomial purely in y2 of order 1"]

    def test_line_support_valid(self):
        rep = validate_support(spec(RingContext(1, ("y1",)), 0, "1", "y1"))
        assert rep and rep.generic

    def test_missing_one(self):
        rep = validate_support(spec(C1, 1, "y1", "d1(y1)"))
        assert not rep and "1 is not in the support" in rep.messages

    def test_order_too_high(self):
        assert not validate_support(spec(C1, 0, "1", "y1", "d2(y1)"))

    def test_hyperplane_is_valid_but_not_generic_at_order_one(self):
        rep = validate_support(QuasiGenericSpec.hyperplane(C2, 1))
        assert rep and not rep.generic

    def test_generic_spec_size(self):
        # 1 plus the jets of order <= 1 of two indeterminates in two derivations
        assert len(QuasiGenericSpec.generic(C2, 1).support) == 1 + 2 * 3
        assert validate_support(QuasiGenericSpec.generic(C2, 1)).generic

    def test_repeated_monomial_rejected(self):
        with pytest.raises(ValueError):
            spec(C1, 0, "1", "y1", "y1")

    def test_non_monomial_rejected(self):
        with pytest.raises(ValueError):
            spec(C1, 0, "1", "y1 + 1")

    def test_symbol_clash(self):
        ctx = RingContext(1, ("u0_0",))
        with pytest.raises(ValueError):
            QuasiGenericSpec.hyperplane(ctx, 0).polynomial()


def test_polynomial_shape():
    L = QuasiGenericSpec.hyperplane(C2, 1).polynomial()
    assert L == parse_poly("u0_0 + u0_1*d1(y1) + u0_2*d1(y2)", L.ctx)


def test_plane_with_generic_hyperplane():
    exp = run_intersection_experiment(charset(C2), QuasiGenericSpec.hyperplane(C2, 0), 2)
    assert exp.measured == [1, 3, 6]
    assert exp.baseline == [2, 6, 12]
    assert exp.agrees and not exp.empty


def test_parabola_with_order_one_hyperplane():
    A = charset(C2, "y2 - y1^2")
    exp = run_intersection_experiment(A, QuasiGenericSpec.hyperplane(C2, 1), 2)
    assert [exp.measured[t] for t in (1, 2)] == [2, 3]
    assert all(exp.matches(t) for t in (1, 2))
    assert exp.agrees


def test_constant_line_meets_nothing():
    A = charset(C1, "d1(y1)", "d2(y1)")
    exp = run_intersection_experiment(A, spec(C1, 0, "1", "y1"), 2)
    assert exp.measured[1:] == [None, None]
    assert exp.delta_dimension == 0 and exp.empty and exp.agrees


def test_symbolic_agrees_with_specialization():
    for A, sp in ((charset(C2), QuasiGenericSpec.hyperplane(C2, 0)),
                  (charset(C2, "y2 - y1^2"), QuasiGenericSpec.hyperplane(C2, 1))):
        for t in (0, 1):
            assert intersection_dimension(A, sp, t, "symbolic") == intersection_dimension(A, sp, t)


def test_specialization_is_seed_stable():
    A = charset(C2, "y2 - y1^2")
    sp = QuasiGenericSpec.hyperplane(C2, 1)
    assert {intersection_dimension(A, sp, 1, seed=k) for k in range(4)} == {2}


def test_unknown_method():
    with pytest.raises(ValueError):
        intersection_dimension(charset(C2), QuasiGenericSpec.hyperplane(C2, 0), 1, method="numeric")


def test_baseline_is_kolchin_polynomial():
    A = charset(C2, "y2 - y1^2")
    assert [baseline_dimension(A, t) for t in range(3)] == [1, 3, 6]


def test_prediction_formula():
    A = charset(C2, "y2 - y1^2")
    w = predicted_polynomial(A, 1)
    assert [w(t) for t in range(4)] == [1, 2, 3, 4]
    assert binomial_drop(2, 1, 3) == 6


def test_t_max_below_order():
    with pytest.raises(ValueError):
        run_intersection_experiment(charset(C2), QuasiGenericSpec.hyperplane(C2, 2), 1)


def test_invalid_support_rejected_by_experiment():
    with pytest.raises(ValueError):
        run_intersection_experiment(charset(C1), spec(C1, 0, "y1"), 1)


class TestMultiPredict:
    def test_single_order_one(self):
        w, inv = multi_intersection_predict([1], 1, 2)
        assert w == NumericalPolynomial(2, [0, 1])
        assert inv["type"] == 1 and inv["typical_dimension"] == 1

    def test_all_zero_orders(self):
        w, _ = multi_intersection_predict([0, 0], 2, 2)
        assert w == NumericalPolynomial.zero(2)

    def test_ordinary_case_sums_orders(self):
        w, inv = multi_intersection_predict([1, 2], 2, 1)
        assert w(0) == w(7) == 3 and inv["type"] == 0

    def test_too_many(self):
        with pytest.raises(ValueError):
            multi_intersection_predict([1, 1, 1], 2, 2)

    def test_negative_order(self):
        with pytest.raises(ValueError):
            multi_intersection_predict([-1], 2, 2)

    def test_values_against_binomials(self):
        w, _ = multi_intersection_predict([2, 3], 3, 2)
        for t in range(3, 8):
            expect = sum(binomial_drop(2, 0, t) - binomial_drop(2, s, t) for s in (2, 3))
            assert w(t) == expect
