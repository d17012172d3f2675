"""Truncated jet rings: prolongation and the order-t slices of a
characteristic-set variety, flattened into commutative polynomial rings."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .diffpoly import DiffPoly, DiffVar, RingContext, derops_upto
from .groebner import GREVLEX, GroebnerBasis, Poly, PolyRing, buchberger, eliminate, saturate
from .ranking import AutoreducedSet, Ranking, coherence_check


class IncoherentCharset(ValueError):
    pass


class JetRing:
    """Jet variables theta(x) with ord(theta) <= bound(x).

    The polynomial ring lists them in decreasing orderly rank, so the
    default grevlex order follows the ranking.
    """

    def __init__(self, ctx: RingContext, t: int, bounds: dict | None = None, order=GREVLEX):
        self.ctx = ctx
        self.t = t
        self.bounds = {i: t for i in range(ctx.n)}
        for k, b in (bounds or {}).items():
            self.bounds[ctx.index(k) if isinstance(k, str) else k] = b
        r = Ranking(ctx, "orderly")
        jets = [DiffVar(i, op) for i in range(ctx.n) if self.bounds[i] >= 0
                for op in derops_upto(ctx.m, self.bounds[i])]
        self.variables = r.sorted_desc(jets)
        self.ring = PolyRing(self.variables, order)

    def count(self, index) -> int:
        return comb(self.bounds[index] + self.ctx.m, self.ctx.m) if self.bounds[index] >= 0 else 0

    def jets_of(self, indices) -> list:
        indices = set(indices)
        return [v for v in self.variables if v.index in indices]

    def to_poly(self, f: DiffPoly) -> Poly:
        if f.ctx != self.ctx:
            raise ValueError("polynomial from another context")
        ring = self.ring
        out = {}
        for mono, c in f.terms.items():
            e = [0] * ring.nvars
            for v, a in mono:
                try:
                    e[ring.index(v)] = a
                except KeyError:
                    raise ValueError(f"jet variable {v} lies outside the truncation") from None
            out[tuple(e)] = c
        return Poly(ring, out)

    def from_poly(self, p: Poly) -> DiffPoly:
        out = {}
        for e, c in p.terms.items():
            mono = tuple(sorted((p.ring.variables[i], a) for i, a in enumerate(e) if a))
            out[mono] = out.get(mono, 0) + c
        return DiffPoly(self.ctx, out)


def prolong(f: DiffPoly, t: int) -> list:
    """[theta(f) for ord(theta) <= t - ord(f)] in canonical operator order."""
    k = max(f.order(), 0)
    if k > t:
        raise ValueError(f"order {k} exceeds truncation order {t}")
    return [f.differentiate(op) for op in derops_upto(f.ctx.m, t - k)]


@dataclass
class TruncatedIdeal:
    jet: JetRing
    basis: GroebnerBasis
    multipliers: list = field(default_factory=list)

    @property
    def generators(self) -> list:
        return [self.jet.from_poly(g) for g in self.basis.generators]

    def contains(self, f: DiffPoly) -> bool:
        return self.basis.contains(self.jet.to_poly(f))

    def polys_in(self, jet: JetRing) -> list:
        """Generators moved into a larger jet ring (extended context allowed)."""
        return [jet.to_poly(g.embed(jet.ctx) if g.ctx != jet.ctx else g) for g in self.generators]


def saturation_multiplier(A: AutoreducedSet) -> tuple:
    """Distinct non-constant initials and separants, and their product."""
    ctx = A.ranking.ctx
    hs = []
    for ld in A.data:
        for h in (ld.initial, ld.separant):
            if not h.is_constant() and h not in hs:
                hs.append(h)
    prod = ctx.one()
    for h in hs:
        prod = prod * h
    return hs, prod


def truncated_ideal(A: AutoreducedSet, t: int, strict: bool = True, check: bool = True) -> TruncatedIdeal:
    """Prolongations of A to order t saturated by its initials and separants.

    With ``strict=False`` elements of order above t are skipped instead of
    rejected; this is what intersection experiments need at small t.
    """
    if check:
        coh = coherence_check(A)
        if not coh:
            raise IncoherentCharset(f"characteristic set is not coherent (pair {coh.pair})")
    if strict and A.max_order() > t:
        raise ValueError(f"characteristic set has order {A.max_order()} > {t}")
    ctx = A.ranking.ctx
    jet = JetRing(ctx, t)
    gens = []
    for f in A:
        if f.order() <= t:
            gens.extend(jet.to_poly(g) for g in prolong(f, t))
    hs, h = saturation_multiplier(A)
    if not gens:
        return TruncatedIdeal(jet, buchberger([], jet.ring), hs)
    usable = [x for x in hs if x.order() <= t]
    hp = jet.ring.const(1)
    for x in usable:
        hp = hp * jet.to_poly(x)
    if len(usable) and not all(not any(e) for e in hp.terms):
        gb = buchberger(saturate(gens, hp), jet.ring)
    else:
        gb = buchberger(gens, jet.ring)
    return TruncatedIdeal(jet, gb, hs)


def b_s_variety(A: AutoreducedSet, s: int) -> TruncatedIdeal:
    """Defining ideal of B_s(V): the order-s truncation."""
    return truncated_ideal(A, s)


def contract(ti: TruncatedIdeal, t: int) -> GroebnerBasis:
    """Intersect a truncated ideal with the order-t jet subring."""
    small = JetRing(ti.jet.ctx, t)
    drop = [v for v in ti.jet.variables if v.order > t]
    kept = eliminate(ti.basis.generators, drop, ti.jet.ring)
    return buchberger([small.to_poly(ti.jet.from_poly(g)) for g in kept], small.ring)
