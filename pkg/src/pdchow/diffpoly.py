"""Differential polynomials over Q with m commuting derivations.

A jet variable ``theta(x)`` is a :class:`DiffVar` pairing an indeterminate
index with a :class:`DerOp` exponent vector.  Polynomials are sparse maps
from canonical monomials to nonzero :class:`fractions.Fraction` coefficients.
All derivations act as zero on rational constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian
from math import comb
from typing import Iterable, Iterator, NamedTuple

Monomial = tuple  # tuple of (DiffVar, exponent) pairs sorted by DiffVar


class ContextMismatch(ValueError):
    pass


@dataclass(frozen=True)
class RingContext:
    """Number of derivations plus the ordered indeterminate names."""

    m: int
    names: tuple

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("need at least one derivation")
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError("indeterminate names must be unique")

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def extend(self, names: Iterable[str]) -> "RingContext":
        return RingContext(self.m, self.names + tuple(names))

    def var(self, name: str, op=None) -> "DiffPoly":
        i = self.index(name)
        return DiffPoly.variable(self, DiffVar(i, DerOp(op or (0,) * self.m)))

    def const(self, c) -> "DiffPoly":
        return DiffPoly.constant(self, c)

    def zero(self) -> "DiffPoly":
        return DiffPoly(self, {})

    def one(self) -> "DiffPoly":
        return DiffPoly.constant(self, 1)

    def derops(self, max_order: int) -> list:
        """All operators of order <= max_order, graded then lexicographic."""
        return derops_upto(self.m, max_order)


class DerOp(tuple):
    """theta = prod delta_i^{a_i}, stored as the exponent tuple (a_1..a_m)."""

    __slots__ = ()

    def __new__(cls, exps):
        exps = tuple(int(a) for a in exps)
        if any(a < 0 for a in exps):
            raise ValueError("negative exponent in derivative operator")
        return super().__new__(cls, exps)

    @classmethod
    def identity(cls, m: int) -> "DerOp":
        return cls((0,) * m)

    @classmethod
    def delta(cls, m: int, i: int) -> "DerOp":
        """delta_i with 0-based i."""
        e = [0] * m
        e[i] = 1
        return cls(e)

    @property
    def order(self) -> int:
        return sum(self)

    def __mul__(self, other):
        return DerOp(a + b for a, b in zip(self, other))

    def divides(self, other) -> bool:
        return all(a <= b for a, b in zip(self, other))

    def lcm(self, other) -> "DerOp":
        return DerOp(max(a, b) for a, b in zip(self, other))

    def __repr__(self):
        return f"DerOp{tuple(self)}"


def derop_order(op) -> int:
    return sum(op)


def derop_divide(num, den):
    """Return (num/den, prod C(b_i, a_i)) when den | num, else None."""
    if not all(a <= b for a, b in zip(den, num)):
        return None
    binom = 1
    for a, b in zip(den, num):
        binom *= comb(b, a)
    return DerOp(b - a for a, b in zip(den, num)), binom


def derops_of_order(m: int, k: int) -> list:
    """Operators of order exactly k, delta_1-heavy first."""
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(DerOp(prefix + [left]))
            return
        for a in range(left, -1, -1):
            rec(prefix + [a], left - a, slots - 1)

    rec([], k, m)
    return out


def derops_upto(m: int, max_order: int) -> list:
    out = []
    for k in range(max_order + 1):
        out.extend(derops_of_order(m, k))
    return out


def divisors(op) -> Iterator[DerOp]:
    """All tau with tau | op."""
    for exps in _cartesian(*(range(a + 1) for a in op)):
        yield DerOp(exps)


class DiffVar(NamedTuple):
    index: int
    op: DerOp

    @property
    def order(self) -> int:
        return sum(self.op)

    def apply(self, op) -> "DiffVar":
        return DiffVar(self.index, DerOp(a + b for a, b in zip(self.op, op)))


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"exact rational expected, got {type(c).__name__}")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono)


class DiffPoly:
    """Immutable sparse differential polynomial with rational coefficients."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: RingContext, terms: dict):
        self.ctx = ctx
        self.terms = {k: v for k, v in terms.items() if v != 0}
        self._hash = None

    # construction -----------------------------------------------------
    @classmethod
    def constant(cls, ctx, c) -> "DiffPoly":
        c = _as_fraction(c)
        return cls(ctx, {(): c} if c else {})

    @classmethod
    def variable(cls, ctx, v: DiffVar) -> "DiffPoly":
        if not 0 <= v.index < ctx.n:
            raise ValueError(f"indeterminate index {v.index} out of range")
        if len(v.op) != ctx.m:
            raise ValueError("operator length does not match m")
        return cls(ctx, {((v, 1),): Fraction(1)})

    @classmethod
    def monomial(cls, ctx, mono: Monomial, c=1) -> "DiffPoly":
        return cls(ctx, {tuple(sorted(mono)): _as_fraction(c)})

    # basic queries ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not mono for mono in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def variables(self) -> set:
        return {v for mono in self.terms for v, _ in mono}

    def order(self) -> int:
        """Max order of any occurring jet variable; -1 for constants."""
        return max((v.order for v in self.variables()), default=-1)

    def total_degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=-1)

    def degree_in(self, v: DiffVar) -> int:
        return max((dict(mono).get(v, 0) for mono in self.terms), default=0)

    def coeff(self, v: DiffVar, k: int) -> "DiffPoly":
        """Coefficient of v**k, viewing self as a polynomial in v."""
        out = {}
        for mono, c in self.terms.items():
            d = dict(mono)
            if d.get(v, 0) == k:
                d.pop(v, None)
                out[tuple(sorted(d.items()))] = c
        return DiffPoly(self.ctx, out)

    def partial(self, v: DiffVar) -> "DiffPoly":
        """Ordinary partial derivative with respect to the jet variable v."""
        out = {}
        for mono, c in self.terms.items():
            d = dict(mono)
            e = d.get(v, 0)
            if not e:
                continue
            if e == 1:
                del d[v]
            else:
                d[v] = e - 1
            key = tuple(sorted(d.items()))
            out[key] = out.get(key, 0) + c * e
        return DiffPoly(self.ctx, out)

    def evaluate(self, point: dict) -> Fraction:
        """Exact value at a point mapping every occurring DiffVar to a rational."""
        total = Fraction(0)
        for mono, c in self.terms.items():
            t = c
            for v, e in mono:
                t *= _as_fraction(point[v]) ** e
            total += t
        return total

    def substitute(self, mapping: dict) -> "DiffPoly":
        """Replace jet variables by polynomials (same context)."""
        out = self.ctx.zero()
        for mono, c in self.terms.items():
            t = DiffPoly.constant(self.ctx, c)
            rest = []
            for v, e in mono:
                if v in mapping:
                    t = t * mapping[v] ** e
                else:
                    rest.append((v, e))
            out = out + t * DiffPoly.monomial(self.ctx, tuple(rest))
        return out

    def rename(self, ctx: RingContext, index_map) -> "DiffPoly":
        """Move into ``ctx`` by mapping indeterminate indices."""
        out = {}
        for mono, c in self.terms.items():
            key = tuple(sorted((DiffVar(index_map[v.index], v.op), e) for v, e in mono))
            out[key] = out.get(key, 0) + c
        return DiffPoly(ctx, out)

    def embed(self, ctx: RingContext) -> "DiffPoly":
        """Move into a context whose names extend this one's."""
        if ctx.names[: self.ctx.n] != self.ctx.names or ctx.m != self.ctx.m:
            raise ContextMismatch("target context does not extend source")
        return DiffPoly(ctx, self.terms)

    # arithmetic -------------------------------------------------------
    def _check(self, other):
        if isinstance(other, DiffPoly):
            if other.ctx != self.ctx:
                raise ContextMismatch("polynomials live in different contexts")
            return other
        return DiffPoly.constant(self.ctx, other)

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return DiffPoly(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return DiffPoly(self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, DiffPoly):
            c = _as_fraction(other)
            return DiffPoly(self.ctx, {k: v * c for k, v in self.terms.items()})
        other = self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                k = mono_mul(m1, m2)
                out[k] = out.get(k, 0) + c1 * c2
        return DiffPoly(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ctx.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, DiffPoly):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(): Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        from .textio import print_poly

        return f"DiffPoly({print_poly(self)!r})"

    # differentiation --------------------------------------------------
    def derive(self, i: int) -> "DiffPoly":
        """Apply the single derivation delta_i (0-based i)."""
        step = DerOp.delta(self.ctx.m, i)
        out = {}
        for mono, c in self.terms.items():
            for pos, (v, e) in enumerate(mono):
                d = dict(mono)
                if e == 1:
                    del d[v]
                else:
                    d[v] = e - 1
                w = v.apply(step)
                d[w] = d.get(w, 0) + 1
                key = tuple(sorted(d.items()))
                out[key] = out.get(key, 0) + c * e
        return DiffPoly(self.ctx, out)

    def differentiate(self, op) -> "DiffPoly":
        """theta(self) for theta given by an exponent vector."""
        if len(op) != self.ctx.m:
            raise ValueError("operator length does not match m")
        f = self
        for i, a in enumerate(op):
            for _ in range(a):
                f = f.derive(i)
        return f


def differentiate(f: DiffPoly, op) -> DiffPoly:
    return f.differentiate(op)


def variable_poly(ctx: RingContext, index: int, op=None) -> DiffPoly:
    return DiffPoly.variable(ctx, DiffVar(index, DerOp(op or (0,) * ctx.m)))
