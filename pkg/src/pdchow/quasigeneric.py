"""Quasi-generic differential polynomials and dimension-drop experiments.

A quasi-generic polynomial of order s is ``sum_k u0_k * M_k`` over a support
of differential monomials M_k with fresh coefficient symbols u0_k.  The
support must contain 1 and, for every indeterminate, a pure monomial in it
of order exactly s.  Intersecting a variety V with such a hypersurface
should lower its Kolchin polynomial by C(t+m-s, m); the experiment measures
the dimension of every truncation B_t directly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from .diffpoly import DiffPoly, DiffVar, RingContext, derops_upto
from .groebner import ideal_dimension
from .jetspace import IncoherentCharset, JetRing, prolong, truncated_ideal
from .kolchin import (NumericalPolynomial, charset_summary, differential_invariants, gbinom,
                      kolchin_from_charset)
from .ranking import AutoreducedSet, coherence_check


def _as_monomial(ctx: RingContext, m) -> tuple:
    if isinstance(m, DiffPoly):
        if len(m.terms) != 1 or next(iter(m.terms.values())) != 1:
            raise ValueError("support entries must be monic monomials")
        return next(iter(m.terms))
    return tuple(sorted(m))


@dataclass
class QuasiGenericSpec:
    ctx: RingContext  # context of the y-indeterminates
    s: int
    support: list  # canonical monomials (tuples of (DiffVar, exponent))
    prefix: str = "u0"

    def __post_init__(self):
        self.support = [_as_monomial(self.ctx, m) for m in self.support]
        if len(set(self.support)) != len(self.support):
            raise ValueError("repeated support monomial")

    @classmethod
    def generic(cls, ctx: RingContext, s: int, g: int = 1) -> "QuasiGenericSpec":
        """All monomials of order <= s and degree <= g."""
        jets = [DiffVar(i, op) for i in range(ctx.n) for op in derops_upto(ctx.m, s)]
        monos = [()]
        for deg in range(1, g + 1):
            for combo in combinations_with_replacement(sorted(jets), deg):
                counts = {}
                for v in combo:
                    counts[v] = counts.get(v, 0) + 1
                monos.append(tuple(sorted(counts.items())))
        return cls(ctx, s, monos)

    @classmethod
    def hyperplane(cls, ctx: RingContext, s: int = 0) -> "QuasiGenericSpec":
        """u0_0 + sum_j u0_j * delta_1^s(y_j)."""
        op = (s,) + (0,) * (ctx.m - 1)
        return cls(ctx, s, [()] + [((DiffVar(j, op), 1),) for j in range(ctx.n)])

    @property
    def symbols(self) -> tuple:
        return tuple(f"{self.prefix}_{k}" for k in range(len(self.support)))

    def extended_context(self) -> RingContext:
        clash = set(self.symbols) & set(self.ctx.names)
        if clash:
            raise ValueError(f"coefficient symbols collide with indeterminates: {sorted(clash)}")
        return self.ctx.extend(self.symbols)

    def polynomial(self) -> DiffPoly:
        ext = self.extended_context()
        L = ext.zero()
        for name, mono in zip(self.symbols, self.support):
            L = L + ext.var(name) * DiffPoly.monomial(ext, mono)
        return L


@dataclass
class SupportReport:
    valid: bool
    generic: bool
    messages: list = field(default_factory=list)

    def __bool__(self):
        return self.valid


def validate_support(spec: QuasiGenericSpec) -> SupportReport:
    msgs = []
    if () not in spec.support:
        msgs.append("1 is not in the support")
    orders = [max((v.order for v, _ in mono), default=0) for mono in spec.support]
    if any(o > spec.s for o in orders):
        msgs.append(f"support monomial of order {max(orders)} exceeds s = {spec.s}")
    for j in range(spec.ctx.n):
        pure = [mono for mono in spec.support
                if mono and all(v.index == j for v, _ in mono)
                and max(v.order for v, _ in mono) == spec.s]
        if not pure:
            msgs.append(f"no monomial purely in {spec.ctx.names[j]} of order {spec.s}")
    g = max((sum(e for _, e in mono) for mono in spec.support), default=0)
    generic = (not msgs) and set(spec.support) == set(QuasiGenericSpec.generic(spec.ctx, spec.s, g).support)
    return SupportReport(not msgs, generic, msgs)


def predicted_polynomial(A: AutoreducedSet, s: int) -> NumericalPolynomial:
    """omega_V(t) - C(t+m-s, m)."""
    m = A.ranking.ctx.m
    return kolchin_from_charset(charset_summary(A)) - NumericalPolynomial.binomial(m, shift=s)


@dataclass
class IntersectionExperiment:
    charset: AutoreducedSet
    spec: QuasiGenericSpec
    t_max: int
    measured: list  # dimension of the order-t intersection, None when empty
    predicted: list  # omega_V(t) - C(t+m-s, m)
    baseline: list = field(default_factory=list)  # dimension of B_t(V) alone
    delta_dimension: Fraction = Fraction(0)  # leading coefficient of omega_V

    @property
    def empty(self) -> bool:
        return any(x is None for x in self.measured)

    def matches(self, t: int) -> bool:
        # a variety of differential dimension 0 must miss L, so the drop
        # formula is only binding while the intersection is non-empty
        got, want = self.measured[t], self.predicted[t]
        if got is None:
            return want < 0 or self.delta_dimension == 0
        return Fraction(got) == want

    @property
    def agrees(self) -> bool:
        ok = all(self.matches(t) for t in range(self.spec.s, self.t_max + 1))
        return ok and self.empty == (self.delta_dimension == 0)

    def mismatches(self) -> list:
        return [(t, self.measured[t], self.predicted[t])
                for t in range(self.spec.s, self.t_max + 1) if not self.matches(t)]


def intersection_dimension(A: AutoreducedSet, spec: QuasiGenericSpec, t: int,
                           method: str = "specialize", seed: int = 0):
    """Dimension of B_t(V) cut by the prolongations of L over Q(u); None if empty.

    ``symbolic`` keeps the coefficient jets as parameters of a block order.
    ``specialize`` substitutes random rationals for them at two independent
    points and falls back to the symbolic computation when they disagree.
    """
    ti = truncated_ideal(A, t, strict=False, check=False)
    if t < spec.s:
        return ideal_dimension(ti.basis.generators, (), ti.jet.ring)
    ext = spec.extended_context()
    base = A.ranking.ctx
    prolonged = prolong(spec.polynomial(), t)
    if method == "symbolic":
        jet = JetRing(ext, t, {name: t - spec.s for name in spec.symbols})
        gens = ti.polys_in(jet) + [jet.to_poly(g) for g in prolonged]
        return ideal_dimension(gens, jet.jets_of(range(base.n, ext.n)), jet.ring)
    if method != "specialize":
        raise ValueError(f"unknown method {method!r}")
    rng = random.Random(seed * 7919 + t)
    ujets = [DiffVar(k, op) for k in range(base.n, ext.n) for op in derops_upto(ext.m, t - spec.s)]
    answers = []
    for _ in range(2):
        values = {v: ext.const(Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))) for v in ujets}
        gens = list(ti.basis.generators)
        for g in prolonged:
            h = g.substitute(values)
            gens.append(ti.jet.to_poly(DiffPoly(base, h.terms)))
        answers.append(ideal_dimension(gens, (), ti.jet.ring))
    if answers[0] != answers[1]:
        return intersection_dimension(A, spec, t, "symbolic")
    return answers[0]


def baseline_dimension(A: AutoreducedSet, t: int):
    ti = truncated_ideal(A, t, strict=False, check=False)
    return ideal_dimension(ti.basis.generators, (), ti.jet.ring)


def run_intersection_experiment(A: AutoreducedSet, spec: QuasiGenericSpec, t_max: int,
                                validate: bool = True, method: str = "specialize",
                                seed: int = 0) -> IntersectionExperiment:
    if t_max < spec.s:
        raise ValueError(f"t_max = {t_max} is below the order s = {spec.s}")
    if spec.ctx != A.ranking.ctx:
        raise ValueError("spec and characteristic set use different contexts")
    if validate:
        rep = validate_support(spec)
        if not rep:
            raise ValueError("invalid support: " + "; ".join(rep.messages))
    coh = coherence_check(A)
    if not coh:
        raise IncoherentCharset(f"characteristic set is not coherent (pair {coh.pair})")
    w = predicted_polynomial(A, spec.s)
    measured, base = [], []
    for t in range(t_max + 1):
        measured.append(intersection_dimension(A, spec, t, method, seed))
        base.append(baseline_dimension(A, t))
    dim = kolchin_from_charset(charset_summary(A)).leading
    return IntersectionExperiment(A, spec, t_max, measured, [w(t) for t in range(t_max + 1)], base, dim)


def multi_intersection_predict(orders, n: int, m: int):
    """sum_i [C(t+m, m) - C(t+m-s_i, m)] with its differential invariants."""
    orders = list(orders)
    if len(orders) > n:
        raise ValueError(f"{len(orders)} polynomials exceed n = {n}")
    if any(s < 0 for s in orders):
        raise ValueError("orders must be non-negative")
    total = NumericalPolynomial.zero(m)
    for s in orders:
        total = total + NumericalPolynomial.binomial(m) - NumericalPolynomial.binomial(m, shift=s)
    return total, differential_invariants(total)


def binomial_drop(m: int, s: int, t: int) -> Fraction:
    return gbinom(t + m - s, m)
