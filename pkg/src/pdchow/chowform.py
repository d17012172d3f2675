"""Differential Chow forms of characteristic-set varieties.

The pipeline intersects the order-s truncation of V with d+1 generic
hyperplanes ``L_i = u{i}_0 + sum_j u{i}_j * y_j``, each prolonged to order
s, and eliminates every y-jet.  The surviving principal ideal is generated
by the Chow form F.  The module also checks differential homogeneity,
extracts the degree r, tests the characteristic-set description of the
joint ideal and evaluates the degree bounds for B_s(V).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, gcd, lcm

from .diffpoly import DerOp, DiffPoly, DiffVar, RingContext, derop_divide, derops_upto, divisors
from .groebner import GREVLEX, PolyRing, buchberger, eliminate
from .jetspace import IncoherentCharset, JetRing, prolong, truncated_ideal
from .kolchin import charset_summary, chow_admissible_shape, kolchin_from_charset, leader_structure_check
from .ranking import AutoreducedSet, coherence_check, leader, with_top


class NoChowFormError(ValueError):
    """The Kolchin polynomial does not have the Chow-form shape."""


class ChowFormConsistencyError(RuntimeError):
    """Elimination did not produce a principal ideal."""


def u_name(i: int, j: int) -> str:
    return f"u{i}_{j}"


@dataclass(frozen=True)
class GenericHyperplane:
    index: int
    symbols: tuple  # names u{i}_0 .. u{i}_n
    poly: DiffPoly  # lives in the context extended by every hyperplane's symbols


def build_hyperplanes(n: int, d: int, m: int = 1, base: RingContext | None = None) -> list:
    """d+1 generic hyperplanes over ``base`` (default y1..yn with m derivations)."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    base = base or RingContext(m, tuple(f"y{j}" for j in range(1, n + 1)))
    if base.n != n:
        raise ValueError("base context has the wrong number of indeterminates")
    symbols = [tuple(u_name(i, j) for j in range(n + 1)) for i in range(d + 1)]
    clash = set(base.names) & {s for block in symbols for s in block}
    if clash:
        raise ValueError(f"indeterminate names collide with coefficient symbols: {sorted(clash)}")
    ext = base.extend(s for block in symbols for s in block)
    out = []
    for i, block in enumerate(symbols):
        L = ext.var(block[0])
        for j in range(1, n + 1):
            L = L + ext.var(block[j]) * ext.var(base.names[j - 1])
        out.append(GenericHyperplane(i, block, L))
    return out


def coefficient_context(hyperplanes) -> RingContext:
    """Context holding only the u-symbols, in block order."""
    ext = hyperplanes[0].poly.ctx
    return RingContext(ext.m, tuple(s for h in hyperplanes for s in h.symbols))


def to_coefficient_ring(f: DiffPoly, hyperplanes) -> DiffPoly:
    uctx = coefficient_context(hyperplanes)
    offset = f.ctx.n - uctx.n
    if any(v.index < offset for v in f.variables()):
        raise ValueError("polynomial still involves y-jets")
    return f.rename(uctx, {k: k - offset for k in range(offset, f.ctx.n)})


def to_joint_ring(F: DiffPoly, hyperplanes) -> DiffPoly:
    ext = hyperplanes[0].poly.ctx
    offset = ext.n - F.ctx.n
    return F.rename(ext, {k: k + offset for k in range(F.ctx.n)})


def verification_ranking(ctx: RingContext):
    """Orderly ranking with u0_0 above every other symbol."""
    return with_top(ctx, u_name(0, 0))


def normalize(F: DiffPoly, ranking) -> DiffPoly:
    """Primitive integer coefficients, positive on the export-largest monomial."""
    if F.is_zero():
        raise ValueError("cannot normalize zero")
    den = lcm(*(c.denominator for c in F.terms.values()))
    nums = [int(c * den) for c in F.terms.values()]
    g = 0
    for x in nums:
        g = gcd(g, x)
    top = max(F.terms, key=ranking.mono_key)
    scale = Fraction(den, g)
    if F.terms[top] < 0:
        scale = -scale
    return F * scale


def joint_ideal(A: AutoreducedSet, hyperplanes, s: int):
    """(jet ring, generators) for I(V)_s plus every hyperplane prolonged to order s."""
    ext = hyperplanes[0].poly.ctx
    jet = JetRing(ext, s)
    ti = truncated_ideal(A, s, check=False)
    gens = ti.polys_in(jet)
    for h in hyperplanes:
        gens.extend(jet.to_poly(g) for g in prolong(h.poly, s))
    return jet, gens


@dataclass
class DeltaDegreeReport:
    block: int
    r: int | None
    euler: dict = field(default_factory=dict)  # theta -> Euler sum E_theta
    message: str = ""

    @property
    def homogeneous(self) -> bool:
        return self.r is not None

    def __bool__(self):
        return self.homogeneous


def block_indices(ctx: RingContext, block: int) -> list:
    prefix = f"u{block}_"
    idx = [k for k, nm in enumerate(ctx.names) if nm.startswith(prefix)]
    if not idx:
        raise ValueError(f"no coefficient symbols in block {block}")
    return idx


def euler_sum(F: DiffPoly, theta, indices) -> DiffPoly:
    """sum over phi with theta | phi of C(phi, theta) (phi/theta)(u_j) dF/d phi(u_j)."""
    ctx = F.ctx
    out = ctx.zero()
    for v in F.variables():
        if v.index not in indices:
            continue
        q = derop_divide(v.op, theta)
        if q is None:
            continue
        tau, binom = q
        out = out + DiffPoly.variable(ctx, DiffVar(v.index, tau)) * F.partial(v) * binom
    return out


def delta_degree(F: DiffPoly, block: int = 0, indices=None) -> DeltaDegreeReport:
    """Differential homogeneity of F in one block of u-symbols."""
    if F.is_zero():
        raise ValueError("zero polynomial has no degree")
    indices = set(indices if indices is not None else block_indices(F.ctx, block))
    k = max(F.order(), 0)
    report = DeltaDegreeReport(block, None)
    for theta in derops_upto(F.ctx.m, k):
        report.euler[theta] = euler_sum(F, theta, indices)
    E1 = report.euler[DerOp.identity(F.ctx.m)]
    mono, c = next(iter(F.terms.items()))
    r = E1.terms.get(mono, Fraction(0)) / c
    if E1 != F * r or r.denominator != 1 or r < 0:
        report.message = f"not differentially homogeneous in block {block}: Euler sum is not a multiple"
        return report
    bad = [th for th, e in report.euler.items() if any(th) and not e.is_zero()]
    if bad:
        report.message = f"not differentially homogeneous in block {block}: nonzero sum at {tuple(bad[0])}"
        return report
    report.r = int(r)
    return report


def lambda_check(F: DiffPoly, block: int = 0, r: int | None = None, rng: random.Random | None = None,
                 size: int = 7) -> bool:
    """Compare F((1 + eps*mu) u_block) with the Euler sums at a random rational point.

    The eps-derivative at 0 is obtained by exact interpolation in eps and must
    equal both sum_sigma mu_sigma E_sigma(point) and r * mu_1 * F(point).
    """
    rng = rng or random.Random(0)
    ctx = F.ctx
    indices = set(block_indices(ctx, block))
    k = max(F.order(), 0)

    def rand():
        return Fraction(rng.randint(-size, size), rng.randint(1, size))

    point = {v: rand() for v in F.variables()}
    for v in list(point):  # lower jets of the block feed the perturbation
        if v.index in indices:
            for tau in divisors(v.op):
                point.setdefault(DiffVar(v.index, tau), rand())
    mu = {op: rand() for op in derops_upto(ctx.m, k)}

    def shift(v):
        if v.index not in indices:
            return Fraction(0)
        total = Fraction(0)
        for tau in divisors(v.op):
            quo, binom = derop_divide(v.op, tau)
            total += binom * mu[quo] * point[DiffVar(v.index, tau)]
        return total

    deltas = {v: shift(v) for v in F.variables()}
    deg = F.total_degree()
    xs = list(range(deg + 1))
    ys = [F.evaluate({v: point[v] + e * deltas[v] for v in F.variables()}) for e in xs]
    # derivative at 0 of the Lagrange interpolant through (xs, ys)
    deriv = Fraction(0)
    for i, xi in enumerate(xs):
        # l_i'(0)
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                denom *= xi - xj
        s = Fraction(0)
        for skip in range(len(xs)):
            if skip == i:
                continue
            prod = Fraction(1)
            for j, xj in enumerate(xs):
                if j not in (i, skip):
                    prod *= -xj
            s += prod
        deriv += ys[i] * s / denom
    euler = sum((mu[th] * euler_sum(F, th, indices).evaluate(point) for th in mu), Fraction(0))
    if deriv != euler:
        return False
    if r is not None:
        return deriv == r * mu[DerOp.identity(ctx.m)] * F.evaluate(point)
    return True


@dataclass
class ChowFormResult:
    F: DiffPoly  # over the coefficient context only
    s: int
    d: int
    r: int
    leader: DiffVar
    g: int
    hyperplanes: list
    coordinates: tuple = ()
    coordinate_monomials: tuple = ()
    leader_structure: bool = True

    @property
    def n(self) -> int:
        return len(self.hyperplanes[0].symbols) - 1

    def separant(self) -> DiffPoly:
        return self.F.partial(self.leader)


def _chow_shape(A: AutoreducedSet):
    n = A.ranking.ctx.n
    w = kolchin_from_charset(charset_summary(A))
    shape = chow_admissible_shape(w, n)
    if shape is None:
        raise NoChowFormError(f"no Chow form: Kolchin polynomial {w} fails the shape test")
    return w, shape


def compute_chow_form(A: AutoreducedSet, n: int | None = None, m: int | None = None) -> ChowFormResult:
    ctx = A.ranking.ctx
    if (n is not None and n != ctx.n) or (m is not None and m != ctx.m):
        raise ValueError("n and m must match the characteristic set's context")
    coh = coherence_check(A)
    if not coh:
        raise IncoherentCharset(f"characteristic set is not coherent (pair {coh.pair})")
    _, (d, s) = _chow_shape(A)
    hyps = build_hyperplanes(ctx.n, d, base=ctx)
    jet, gens = joint_ideal(A, hyps, s)
    ydrop = jet.jets_of(range(ctx.n))
    kept = eliminate(gens, ydrop, jet.ring)
    if len(kept) != 1:
        raise ChowFormConsistencyError(
            f"elimination ideal has {len(kept)} generators, expected one: "
            + "; ".join(str(jet.from_poly(g)) for g in kept[:4]))
    F = to_coefficient_ring(jet.from_poly(kept[0]), hyps)
    rk = verification_ranking(F.ctx)
    F = normalize(F, rk)
    if F.order() != s:
        raise ChowFormConsistencyError(f"Chow form has order {F.order()}, expected {s}")
    reports = [delta_degree(F, i) for i in range(d + 1)]
    if not all(reports) or len({rep.r for rep in reports}) != 1:
        raise ChowFormConsistencyError("; ".join(rep.message or f"r={rep.r}" for rep in reports))
    r = reports[0].r
    ld = leader(F, rk)
    monos, coords = chow_coordinates(F, s, r)
    return ChowFormResult(F, s, d, r, ld, F.degree_in(ld), hyps, coords, monos,
                          leader_structure_check(A.leaders, ctx.n, d, s))


def chow_coordinates(F: DiffPoly, s: int, r: int):
    """Dense coefficient vector over all monomials of degree r in each block's jets."""
    ctx = F.ctx
    rk = verification_ranking(ctx)
    nblocks = len({nm.split("_")[0] for nm in ctx.names})
    per_block = []
    for b in range(nblocks):
        jets = [DiffVar(k, op) for k in block_indices(ctx, b) for op in derops_upto(ctx.m, s)]
        per_block.append(list(combinations_with_replacement(sorted(jets), r)))
    monos = [()]
    for choices in per_block:
        monos = [a + b for a in monos for b in choices]
    keyed = []
    for vars_ in monos:
        counts = {}
        for v in vars_:
            counts[v] = counts.get(v, 0) + 1
        keyed.append(tuple(sorted(counts.items())))
    keyed.sort(key=rk.mono_key, reverse=True)
    extra = set(F.terms) - set(keyed)
    if extra:
        raise ChowFormConsistencyError("F has monomials outside the multidegree enumeration")
    return tuple(keyed), tuple(F.terms.get(mono, Fraction(0)) for mono in keyed)


def swap_blocks(F: DiffPoly, i: int, j: int) -> DiffPoly:
    """Interchange the u-blocks i and j."""
    ctx = F.ctx
    perm = {}
    for k, nm in enumerate(ctx.names):
        b, idx = nm[1:].split("_")
        b = int(b)
        b = j if b == i else i if b == j else b
        perm[k] = ctx.index(f"u{b}_{idx}")
    return F.rename(ctx, perm)


# characteristic-set membership --------------------------------------------

@dataclass
class MembershipReport:
    leader: DiffVar
    separant: DiffPoly
    members: dict  # j (1-based) -> bool
    candidates: dict  # j -> S_F y_j - dF/d theta(u0_j)

    @property
    def passed(self) -> bool:
        return all(self.members.values())

    def __bool__(self):
        return self.passed


def verify_charset_representation(F, A: AutoreducedSet, hyperplanes=None, s: int | None = None) -> MembershipReport:
    """Check S_F*y_j - dF/d theta(u0_j) in the joint ideal saturated by S_F.

    ``F`` is a :class:`ChowFormResult` or a bare polynomial over the
    coefficient context (then ``hyperplanes`` and ``s`` are required).
    """
    if isinstance(F, ChowFormResult):
        hyperplanes = hyperplanes or F.hyperplanes
        s = F.s if s is None else s
        F = F.F
    if hyperplanes is None or s is None:
        raise ValueError("hyperplanes and s are required for a bare polynomial")
    uctx = F.ctx
    rk = verification_ranking(uctx)
    ld = leader(F, rk)
    theta = ld.op
    S = F.partial(ld)
    jet, gens = joint_ideal(A, hyperplanes, s)
    ext = jet.ctx
    n = len(hyperplanes[0].symbols) - 1
    big = PolyRing((("__sep_inverse__",),) + jet.ring.variables, GREVLEX)
    z = big.gen(("__sep_inverse__",))
    Sj = to_joint_ring(S, hyperplanes)
    system = [g.in_ring(big) for g in gens] + [z * jet.to_poly(Sj).in_ring(big) - 1]
    gb = buchberger(system, big)
    members, candidates = {}, {}
    for j in range(1, n + 1):
        dF = F.partial(DiffVar(uctx.index(u_name(0, j)), theta))
        G = Sj * ext.var(ext.names[j - 1]) - to_joint_ring(dF, hyperplanes)
        candidates[j] = G
        members[j] = gb.contains(jet.to_poly(G).in_ring(big))
    return MembershipReport(ld, S, members, candidates)


# degree bounds ----------------------------------------------------------------

@dataclass(frozen=True)
class DegreeBounds:
    lower: Fraction
    upper: int

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")


def degree_bounds(n: int, d: int, s: int, r: int, m: int) -> DegreeBounds:
    """r / C(s+m, m) <= deg B_s(V) <= ((s+1)(d+1)r)^(n(s+1)C(s+m,m)+1)."""
    if min(n, d, s, m) < 0 or r < 1:
        raise ValueError("need non-negative n, d, s, m and r >= 1")
    c = comb(s + m, m)
    return DegreeBounds(Fraction(r, c), ((s + 1) * (d + 1) * r) ** (n * (s + 1) * c + 1))
