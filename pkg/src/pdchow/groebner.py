"""Commutative polynomials over Q and a Buchberger Groebner basis engine.

Monomials are exponent tuples indexed by the ring's variable list; a
:class:`MonomialOrder` is a sort key on those tuples.  The engine favours
determinism over speed: normal selection strategy with Buchberger's coprime
and chain criteria, reduced monic output sorted by leading monomial.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from itertools import combinations
from typing import Sequence

# Set by the test suite: every computed basis is re-checked with the
# S-polynomial criterion before being returned.
CHECK_BASES = False


class MonomialOrder:
    """``lex``, ``grevlex`` or a two-block elimination order.

    The block order compares the first ``split`` exponents with ``front`` and
    breaks ties on the rest with ``back``.
    """

    def __init__(self, kind: str = "grevlex", split: int | None = None,
                 front: str = "grevlex", back: str = "grevlex"):
        if kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "block" and split is None:
            raise ValueError("block order needs a split position")
        self.kind, self.split, self.front, self.back = kind, split, front, back
        if kind == "block":
            kf, kb, k = _simple_key(front), _simple_key(back), split
            self.key = lambda e: kf(e[:k]) + kb(e[k:])
        else:
            self.key = _simple_key(kind)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (
            self.kind, self.split, self.front, self.back) == (
            other.kind, other.split, other.front, other.back)

    def __hash__(self):
        return hash((self.kind, self.split, self.front, self.back))

    def __repr__(self):
        if self.kind == "block":
            return f"MonomialOrder(block {self.split}: {self.front}|{self.back})"
        return f"MonomialOrder({self.kind})"


def _lex_key(e):
    return e


def _grevlex_key(e):
    return (sum(e),) + tuple(-a for a in reversed(e))


def _simple_key(kind):
    if kind == "lex":
        return _lex_key
    if kind == "grevlex":
        return _grevlex_key
    raise ValueError(f"unknown block kind {kind!r}")


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


class PolyRing:
    def __init__(self, variables: Sequence, order: MonomialOrder | str = GREVLEX):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("ring variables must be distinct")
        self.order = MonomialOrder(order) if isinstance(order, str) else order
        self.nvars = len(self.variables)
        self._pos = {v: i for i, v in enumerate(self.variables)}

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.variables == other.variables and self.order == other.order

    def __hash__(self):
        return hash((self.variables, self.order))

    def index(self, v) -> int:
        return self._pos[v]

    @property
    def gens(self):
        return tuple(self.gen(v) for v in self.variables)

    def gen(self, v) -> "Poly":
        e = [0] * self.nvars
        e[self._pos[v]] = 1
        return Poly(self, {tuple(e): Fraction(1)})

    def const(self, c) -> "Poly":
        c = Fraction(c)
        return Poly(self, {(0,) * self.nvars: c} if c else {})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def with_order(self, order) -> "PolyRing":
        return PolyRing(self.variables, order)

    def __repr__(self):
        return f"PolyRing({len(self.variables)} vars, {self.order!r})"


class Poly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = {k: v for k, v in terms.items() if v}

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring.variables != self.ring.variables:
                raise ValueError("polynomials from different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = Fraction(other)
            return Poly(self.ring, {k: v * c for k, v in self.terms.items()})
        other = self._coerce(other)
        return Poly(self.ring, _mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.ring.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring.variables == other.ring.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.variables, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def lm(self):
        return max(self.terms, key=self.ring.order.key)

    def lc(self) -> Fraction:
        return self.terms[self.lm()]

    def monic(self) -> "Poly":
        return self * (1 / self.lc()) if self.terms else self

    def support(self) -> set:
        return {self.ring.variables[i] for e in self.terms for i, a in enumerate(e) if a}

    def in_ring(self, ring: PolyRing) -> "Poly":
        """Re-express in a ring over a superset (any order) of the variables."""
        if ring.variables == self.ring.variables:
            return Poly(ring, self.terms)
        idx = [ring.index(v) for v in self.ring.variables]
        out = {}
        for e, c in self.terms.items():
            f = [0] * ring.nvars
            for i, a in zip(idx, e):
                f[i] = a
            out[tuple(f)] = c
        return Poly(ring, out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: self.ring.order.key(kv[0]), reverse=True)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = [str(v) if a == 1 else f"{v}^{a}" for v, a in zip(self.ring.variables, e) if a]
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


# dict-level kernels --------------------------------------------------------

def _mul(a: dict, b: dict) -> dict:
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            k = tuple(x + y for x, y in zip(m1, m2))
            out[k] = out.get(k, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _normal_form(f: dict, basis, key) -> dict:
    """Full reduction of f by (lm, monic poly) pairs."""
    # keys are flat integer tuples, so negating them turns heapq into a max-heap
    f = dict(f)
    heap = [(tuple(-x for x in key(m)), m) for m in f]
    heapq.heapify(heap)
    queued = set(f)
    rem = {}
    while heap:
        _, m = heapq.heappop(heap)
        queued.discard(m)
        c = f.get(m)
        if not c:
            continue
        for lm, g in basis:
            if _divides(lm, m):
                q = tuple(x - y for x, y in zip(m, lm))
                for gm, gc in g.items():
                    k = tuple(x + y for x, y in zip(q, gm))
                    v = f.get(k, 0) - c * gc
                    if v:
                        f[k] = v
                        if k not in queued:
                            queued.add(k)
                            heapq.heappush(heap, (tuple(-x for x in key(k)), k))
                    else:
                        f.pop(k, None)
                break
        else:
            rem[m] = c
            del f[m]
    return rem


def _monic(f: dict, key) -> tuple:
    lm = max(f, key=key)
    inv = 1 / f[lm]
    return lm, {k: v * inv for k, v in f.items()}


def _spoly(f, g, key):
    (lf, pf), (lg, pg) = f, g
    lcm = _lcm(lf, lg)
    qf = tuple(x - y for x, y in zip(lcm, lf))
    qg = tuple(x - y for x, y in zip(lcm, lg))
    out = {}
    for m, c in pf.items():
        k = tuple(x + y for x, y in zip(qf, m))
        out[k] = out.get(k, 0) + c
    for m, c in pg.items():
        k = tuple(x + y for x, y in zip(qg, m))
        out[k] = out.get(k, 0) - c
    return {k: v for k, v in out.items() if v}


def _buchberger(polys: list, key) -> list:
    basis = []  # (lm, monic dict)
    pairs = set()
    heap = []  # normal strategy: smallest lcm first

    def add(p):
        basis.append(_monic(p, key))
        j = len(basis) - 1
        for i in range(j):
            pairs.add((i, j))
            heapq.heappush(heap, (key(_lcm(basis[i][0], basis[j][0])), i, j))

    for p in polys:
        p = _normal_form(p, basis, key)
        if p:
            add(p)
    while heap:
        _, i, j = heapq.heappop(heap)
        pairs.discard((i, j))
        li, lj = basis[i][0], basis[j][0]
        lcm = _lcm(li, lj)
        # coprime leading monomials
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        # chain criterion
        chain = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides(basis[k][0], lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pairs and pjk not in pairs:
                    chain = True
                    break
        if chain:
            continue
        s = _normal_form(_spoly(basis[i], basis[j], key), basis, key)
        if s:
            add(s)
            if all(a == 0 for a in basis[-1][0]):
                return [basis[-1]]
    return _reduce_basis(basis, key)


def _reduce_basis(basis, key) -> list:
    basis = sorted(basis, key=lambda b: key(b[0]))
    minimal = []
    for lm, g in basis:
        if not any(_divides(l2, lm) for l2, _ in minimal):
            minimal.append((lm, g))
    out = []
    for idx, (lm, g) in enumerate(minimal):
        others = [b for k, b in enumerate(minimal) if k != idx]
        rest = {k: v for k, v in g.items() if k != lm}
        red = _normal_form(rest, others, key)
        red[lm] = Fraction(1)
        out.append((lm, red))
    out.sort(key=lambda b: key(b[0]), reverse=True)
    return out


class GroebnerBasis:
    """Reduced Groebner basis of an ideal in ``ring`` (order taken from it)."""

    def __init__(self, ring: PolyRing, pairs: list):
        self.ring = ring
        self._pairs = pairs
        self.generators = [Poly(ring, g) for _, g in pairs]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def is_unit(self) -> bool:
        return len(self._pairs) == 1 and not any(self._pairs[0][0])

    def is_zero(self) -> bool:
        return not self._pairs

    def reduce(self, f: Poly) -> Poly:
        f = f.in_ring(self.ring)
        return Poly(self.ring, _normal_form(f.terms, self._pairs, self.ring.order.key))

    def contains(self, f: Poly) -> bool:
        return self.reduce(f).is_zero()

    def leading_monomials(self):
        return [lm for lm, _ in self._pairs]

    def satisfies_criterion(self) -> bool:
        """Every S-polynomial reduces to zero."""
        key = self.ring.order.key
        for a, b in combinations(self._pairs, 2):
            if all(x == 0 or y == 0 for x, y in zip(a[0], b[0])):
                continue  # coprime leading monomials: reduces to zero
            if _normal_form(_spoly(a, b, key), self._pairs, key):
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and self.ring == other.ring and self._pairs == other._pairs

    def __repr__(self):
        return f"GroebnerBasis({self.generators!r})"


def buchberger(gens, ring: PolyRing | None = None) -> GroebnerBasis:
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("ring required for an empty generator list")
        ring = gens[0].ring
    key = ring.order.key
    polys = [g.in_ring(ring).terms for g in gens if not g.is_zero()]
    gb = GroebnerBasis(ring, _buchberger(polys, key) if polys else [])
    if CHECK_BASES and not gb.satisfies_criterion():
        raise AssertionError("Buchberger criterion failed on computed basis")
    return gb


def ideal_member(f: Poly, gb: GroebnerBasis) -> bool:
    return gb.contains(f)


def _elim_ring(ring: PolyRing, drop) -> PolyRing:
    drop = [v for v in ring.variables if v in set(drop)]
    keep = [v for v in ring.variables if v not in set(drop)]
    return PolyRing(drop + keep, MonomialOrder("block", len(drop)))


def eliminate(gens, drop_vars, ring: PolyRing | None = None) -> list:
    """Generators of (gens) intersected with the subring omitting drop_vars."""
    gens = list(gens)
    ring = ring or (gens[0].ring if gens else None)
    if ring is None:
        return []
    unknown = set(drop_vars) - set(ring.variables)
    if unknown:
        raise ValueError(f"unknown variables to eliminate: {unknown}")
    er = _elim_ring(ring, drop_vars)
    gb = buchberger([g.in_ring(er) for g in gens], er)
    nd = len([v for v in ring.variables if v in set(drop_vars)])
    out = [g for lm, g in zip(gb.leading_monomials(), gb.generators) if not any(lm[:nd])]
    return [g.in_ring(ring) for g in out]


_SAT = ("__saturation__",)


def saturate(gens, h: Poly) -> list:
    """(gens) : h^infinity via an inverse variable z with z*h - 1."""
    if h.is_zero():
        raise ValueError("cannot saturate by the zero polynomial")
    ring = h.ring
    if all(not any(e) for e in h.terms):
        return buchberger(gens, ring).generators
    big = PolyRing((_SAT,) + ring.variables, GREVLEX)
    z = big.gen(_SAT)
    sys = [g.in_ring(big) for g in gens] + [z * h.in_ring(big) - 1]
    kept = eliminate(sys, [_SAT], big)
    sub = PolyRing(ring.variables, ring.order)
    out = []
    for g in kept:
        terms = {e[1:]: c for e, c in g.terms.items()}
        out.append(Poly(sub, terms))
    return buchberger(out, sub).generators if out else []


def _min_hitting_set(supports: list, bound: int) -> int:
    """Size of the smallest variable set meeting every support, or bound+1."""
    if not supports:
        return 0
    if bound <= 0:
        return 1
    s = min(supports, key=len)
    best = bound + 1
    for v in sorted(s):
        if best < 2:
            break
        rest = [t for t in supports if v not in t]
        k = 1 + _min_hitting_set(rest, best - 2)
        best = min(best, k)
    return best


def monomial_dimension(leading, nvars: int) -> int | None:
    """Krull dimension of the monomial ideal generated by ``leading``."""
    supports = []
    for e in leading:
        s = frozenset(i for i, a in enumerate(e) if a)
        if not s:
            return None
        supports.append(s)
    minimal = [s for s in set(supports) if not any(t < s for t in supports)]
    return nvars - _min_hitting_set(minimal, nvars)


def ideal_dimension(gens, parameter_vars=(), ring: PolyRing | None = None) -> int | None:
    """Dimension of (gens), with ``parameter_vars`` treated as field parameters.

    Returns ``None`` for the unit ideal (over the parameter field when
    parameters are given).
    """
    gens = list(gens)
    ring = ring or (gens[0].ring if gens else None)
    if ring is None:
        raise ValueError("ring required for an empty generator list")
    params = [v for v in ring.variables if v in set(parameter_vars)]
    main = [v for v in ring.variables if v not in set(parameter_vars)]
    if not params:
        r = ring.with_order(GREVLEX)
        gb = buchberger([g.in_ring(r) for g in gens], r)
        return monomial_dimension(gb.leading_monomials(), r.nvars)
    r = PolyRing(main + params, MonomialOrder("block", len(main)))
    gb = buchberger([g.in_ring(r) for g in gens], r)
    k = len(main)
    return monomial_dimension([lm[:k] for lm in gb.leading_monomials()], k)


def leader_factor_count(f, leader) -> tuple:
    """(number of distinct irreducible factors of f over Q involving ``leader``,
    largest multiplicity among them).  ``f`` is a DiffPoly."""
    import sympy

    names = {}
    for v in sorted(f.variables()):
        names[v] = sympy.Symbol(f"x_{v.index}_{'_'.join(map(str, v.op))}")
    expr = 0
    for mono, c in f.terms.items():
        t = sympy.Rational(c.numerator, c.denominator)
        for v, e in mono:
            t *= names[v] ** e
        expr += t
    _, factors = sympy.factor_list(sympy.expand(expr))
    lead = names[leader]
    hits = [mult for fac, mult in factors if fac.has(lead)]
    return len(hits), max(hits, default=0)
