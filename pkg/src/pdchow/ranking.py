"""Rankings, leaders/initials/separants, Ritt reduction and coherence."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .diffpoly import DerOp, DiffPoly, DiffVar, RingContext


class Ranking:
    """A derivation-compatible total order on jet variables.

    ``kind`` is ``"orderly"`` (order first) or ``"elimination"`` (indeterminate
    first).  ``priority`` lists indeterminate indices from lowest to highest;
    the default ranks a higher index higher.  Remaining ties are broken by the
    lexicographic order of the operator exponent vectors.
    """

    def __init__(self, ctx: RingContext, kind: str = "orderly", priority=None):
        if kind in ("elim", "elimination"):
            kind = "elimination"
        if kind not in ("orderly", "elimination"):
            raise ValueError(f"unknown ranking kind {kind!r}")
        self.ctx = ctx
        self.kind = kind
        if priority is None:
            priority = range(ctx.n)
        priority = list(priority)
        if sorted(priority) != list(range(ctx.n)):
            raise ValueError("priority must be a permutation of indeterminate indices")
        self.priority = tuple(priority)
        self._rank = {idx: pos for pos, idx in enumerate(priority)}

    def key(self, v: DiffVar):
        if self.kind == "orderly":
            return (v.order, self._rank[v.index], tuple(v.op))
        return (self._rank[v.index], v.order, tuple(v.op))

    def greater(self, a: DiffVar, b: DiffVar) -> bool:
        return self.key(a) > self.key(b)

    def sorted_desc(self, variables):
        return sorted(variables, key=self.key, reverse=True)

    def mono_key(self, mono):
        """Leader-major lexicographic key on monomials."""
        return tuple((self.key(v), e) for v, e in sorted(mono, key=lambda ve: self.key(ve[0]), reverse=True))

    def __repr__(self):
        return f"Ranking({self.kind!r}, priority={self.priority})"


def with_top(ctx: RingContext, top: str, kind: str = "orderly") -> Ranking:
    """Ranking with the named indeterminate above all others."""
    t = ctx.index(top)
    return Ranking(ctx, kind, [i for i in range(ctx.n) if i != t] + [t])


@dataclass(frozen=True)
class LeaderData:
    leader: DiffVar
    degree: int
    initial: DiffPoly
    separant: DiffPoly


def leader(f: DiffPoly, r: Ranking) -> DiffVar:
    vs = f.variables()
    if not vs:
        raise ValueError("constant polynomial has no leader")
    return max(vs, key=r.key)


def leader_data(f: DiffPoly, r: Ranking) -> LeaderData:
    v = leader(f, r)
    d = f.degree_in(v)
    return LeaderData(v, d, f.coeff(v, d), f.partial(v))


def rank_key(f: DiffPoly, r: Ranking):
    """Comparable rank; constants sit below every non-constant."""
    if f.is_constant():
        return (0,)
    v = leader(f, r)
    return (1, r.key(v), f.degree_in(v))


def is_proper_derivative(w: DiffVar, v: DiffVar) -> bool:
    return w.index == v.index and w.op != v.op and DerOp(v.op).divides(w.op)


def is_reduced(g: DiffPoly, f: DiffPoly, r: Ranking) -> bool:
    ld = leader_data(f, r)
    if any(is_proper_derivative(w, ld.leader) for w in g.variables()):
        return False
    return g.degree_in(ld.leader) < ld.degree


def is_autoreduced(elements, r: Ranking) -> bool:
    elements = list(elements)
    if any(e.is_constant() for e in elements):
        return False
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            if i != j and not is_reduced(a, b, r):
                return False
    return True


class AutoreducedSet:
    """Autoreduced differential polynomials sorted by nondecreasing rank."""

    def __init__(self, elements, ranking: Ranking, check: bool = True):
        elements = sorted(elements, key=lambda f: rank_key(f, ranking))
        if check and not is_autoreduced(elements, ranking):
            raise ValueError("set is not autoreduced under the given ranking")
        self.elements = tuple(elements)
        self.ranking = ranking
        self.data = tuple(leader_data(e, ranking) for e in self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    @property
    def leaders(self):
        return [d.leader for d in self.data]

    def max_order(self) -> int:
        return max((e.order() for e in self.elements), default=0)

    def __repr__(self):
        return f"AutoreducedSet({list(self.elements)!r})"


@dataclass
class ReductionResult:
    remainder: DiffPoly
    exponents: list  # per element (separant power d_i, initial power e_i)
    combination: dict = field(default_factory=dict)  # (element index, DerOp) -> cofactor

    def multiplier(self, A: AutoreducedSet) -> DiffPoly:
        h = A.ranking.ctx.one() if not A.elements else A.elements[0].ctx.one()
        for (d, e), ld in zip(self.exponents, A.data):
            h = h * ld.separant ** d * ld.initial ** e
        return h

    def verify(self, F: DiffPoly, A: AutoreducedSet) -> bool:
        """Re-check prod S^d I^e * F == R + sum T * theta(A_i) exactly."""
        rhs = self.remainder
        for (i, op), T in self.combination.items():
            rhs = rhs + T * A[i].differentiate(op)
        return self.multiplier(A) * F == rhs


def ritt_reduce(F: DiffPoly, A: AutoreducedSet) -> ReductionResult:
    """Ritt remainder of F w.r.t. A with an explicit membership certificate.

    The highest offending jet variable is eliminated first; a proper
    derivative of a leader is removed with a separant step, an over-degree
    leader with an initial step.  Among applicable elements the lowest
    ranked is used.
    """
    r = A.ranking
    ctx = F.ctx
    exps = [[0, 0] for _ in A.elements]
    combo: dict = {}
    R = F
    prolonged = {}

    def scale_all(h):
        for k in combo:
            combo[k] = combo[k] * h

    def add(key, T):
        combo[key] = combo.get(key, ctx.zero()) + T
        if combo[key].is_zero():
            del combo[key]

    while True:
        step = None
        for v in r.sorted_desc(R.variables()):
            for i, ld in enumerate(A.data):
                if is_proper_derivative(v, ld.leader):
                    step = ("S", v, i)
                    break
                if v == ld.leader and R.degree_in(v) >= ld.degree:
                    step = ("I", v, i)
                    break
            if step:
                break
        if step is None:
            break
        kind, v, i = step
        ld = A.data[i]
        e = R.degree_in(v)
        c = R.coeff(v, e)
        vpoly = DiffPoly.variable(ctx, v)
        if kind == "S":
            op = DerOp(b - a for a, b in zip(ld.leader.op, v.op))
            if (i, op) not in prolonged:
                prolonged[(i, op)] = A[i].differentiate(op)
            P = prolonged[(i, op)]
            T = c * vpoly ** (e - 1)
            R = ld.separant * R - T * P
            scale_all(ld.separant)
            add((i, op), T)
            exps[i][0] += 1
        else:
            op = DerOp.identity(ctx.m)
            T = c * vpoly ** (e - ld.degree)
            R = ld.initial * R - T * A[i]
            scale_all(ld.initial)
            add((i, op), T)
            exps[i][1] += 1
    return ReductionResult(R, [tuple(x) for x in exps], combo)


class RankComparison(Enum):
    LOWER = "lower"
    EQUAL = "equal-rank"
    HIGHER = "higher"


def compare_autoreduced(A: AutoreducedSet, B: AutoreducedSet) -> RankComparison:
    r = A.ranking
    for a, b in zip(A.elements, B.elements):
        ka, kb = rank_key(a, r), rank_key(b, r)
        if ka < kb:
            return RankComparison.LOWER
        if ka > kb:
            return RankComparison.HIGHER
    if len(A) > len(B):
        return RankComparison.LOWER
    if len(A) < len(B):
        return RankComparison.HIGHER
    return RankComparison.EQUAL


def delta_polynomial(A: AutoreducedSet, i: int, j: int) -> DiffPoly | None:
    """S_j * (theta/theta_i)(A_i) - S_i * (theta/theta_j)(A_j), or None when
    the leaders are on different indeterminates."""
    li, lj = A.data[i].leader, A.data[j].leader
    if li.index != lj.index:
        return None
    theta = DerOp(li.op).lcm(lj.op)
    qi = DerOp(t - a for t, a in zip(theta, li.op))
    qj = DerOp(t - a for t, a in zip(theta, lj.op))
    return A.data[j].separant * A[i].differentiate(qi) - A.data[i].separant * A[j].differentiate(qj)


@dataclass
class CoherenceReport:
    coherent: bool
    pair: tuple | None = None
    remainder: DiffPoly | None = None

    def __bool__(self):
        return self.coherent


def coherence_check(A: AutoreducedSet) -> CoherenceReport:
    for i in range(len(A)):
        for j in range(i + 1, len(A)):
            dp = delta_polynomial(A, i, j)
            if dp is None:
                continue
            rem = ritt_reduce(dp, A).remainder
            if not rem.is_zero():
                return CoherenceReport(False, (i, j), rem)
    return CoherenceReport(True)


@dataclass
class CharsetReport:
    verified: bool
    order: int
    coherent: bool
    prime: bool | None  # None means not certified
    message: str


def charset_criterion(A: AutoreducedSet) -> CharsetReport:
    """Check coherence and primality of asat(A) at truncation order max-order(A).

    Primality is certified only for triangular sets in which every element
    except possibly the lowest is linear in its leader, and the lowest element
    has exactly one irreducible factor involving its leader, to multiplicity 1.
    """
    from .groebner import leader_factor_count

    t = A.max_order()
    coh = coherence_check(A)
    if not coh:
        return CharsetReport(False, t, False, None, f"not coherent: pair {coh.pair} leaves remainder")
    if not len(A):
        return CharsetReport(True, t, True, True, f"verified at order {t}")
    if any(d.degree != 1 for d in A.data[1:]):
        return CharsetReport(False, t, True, None, "primality not certified")
    factors = leader_factor_count(A[0], A.data[0].leader)
    if factors == (1, 1):
        return CharsetReport(True, t, True, True, f"verified at order {t}")
    if factors[0] > 1:
        return CharsetReport(False, t, True, False, "asat(A) is not prime: lowest element factors")
    return CharsetReport(False, t, True, None, "primality not certified: repeated factor")
