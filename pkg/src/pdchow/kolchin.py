"""Numerical polynomials, the lattice counts omega_E, and Kolchin polynomials
read off the leaders of an orderly characteristic set."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import factorial



def gbinom(x, k: int) -> Fraction:
    """Generalized binomial C(x, k) = x(x-1)...(x-k+1)/k! for rational x."""
    out = Fraction(1)
    for j in range(k):
        out *= Fraction(x) - j
    return out / factorial(k)


class NumericalPolynomial:
    """omega(t) = sum_i a_i * C(t+i, i), i = 0..m, with rational a_i."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > m + 1:
            if any(coeffs[m + 1:]):
                raise ValueError("degree exceeds m")
            coeffs = coeffs[: m + 1]
        coeffs += [Fraction(0)] * (m + 1 - len(coeffs))
        self.m = m
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_values(cls, m: int, fn) -> "NumericalPolynomial":
        """Interpolate a polynomial of degree <= m given as a callable on t.

        At t = -k only the basis elements with i < k are nonzero, so the
        values at t = -1, ..., -(m+1) determine the coefficients by forward
        substitution.
        """
        a = []
        for k in range(1, m + 2):
            t = -k
            acc = Fraction(fn(t))
            for i, ai in enumerate(a):
                acc -= ai * gbinom(t + i, i)
            a.append(acc / gbinom(t + k - 1, k - 1))
        return cls(m, a)

    @classmethod
    def binomial(cls, m: int, shift: int = 0) -> "NumericalPolynomial":
        """C(t + m - shift, m)."""
        return cls.from_values(m, lambda t: gbinom(t + m - shift, m))

    @classmethod
    def zero(cls, m: int) -> "NumericalPolynomial":
        return cls(m, [])

    def __call__(self, t) -> Fraction:
        return sum((a * gbinom(Fraction(t) + i, i) for i, a in enumerate(self.coeffs)), Fraction(0))

    def degree(self) -> int:
        """Degree in t; -1 for the zero polynomial."""
        for i in range(self.m, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    @property
    def leading(self) -> Fraction:
        """a_m, the coefficient of C(t+m, m)."""
        return self.coeffs[self.m]

    def _check(self, other):
        if not isinstance(other, NumericalPolynomial) or other.m != self.m:
            raise ValueError("numerical polynomials with different m")
        return other

    def __add__(self, other):
        other = self._check(other)
        return NumericalPolynomial(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        other = self._check(other)
        return NumericalPolynomial(self.m, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, c):
        return NumericalPolynomial(self.m, [a * Fraction(c) for a in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, NumericalPolynomial) and self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def power_coeffs(self) -> list:
        """Coefficients in the monomial basis 1, t, ..., t^m."""
        out = [Fraction(0)] * (self.m + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            # C(t+i, i) = prod_{j=1..i} (t + j) / i!
            p = [Fraction(1)]
            for j in range(1, i + 1):
                q = [Fraction(0)] * (len(p) + 1)
                for k, c in enumerate(p):
                    q[k] += c * j
                    q[k + 1] += c
                p = q
            for k, c in enumerate(p):
                out[k] += a * c / factorial(i)
        return out

    def __str__(self):
        terms = []
        for i, a in enumerate(self.coeffs):
            if a:
                terms.append(f"{a}*C(t+{i},{i})" if i else f"{a}")
        return " + ".join(terms) or "0"

    def __repr__(self):
        return f"NumericalPolynomial(m={self.m}, coeffs={[str(c) for c in self.coeffs]})"


class ExponentSet:
    """Finite subset of N^m kept as its minimal elements (product order)."""

    def __init__(self, m: int, points=()):
        pts = {tuple(int(a) for a in p) for p in points}
        if any(len(p) != m or min(p, default=0) < 0 for p in pts):
            raise ValueError("points must be vectors in N^m")
        self.m = m
        self.points = frozenset(
            p for p in pts if not any(q != p and all(a <= b for a, b in zip(q, p)) for q in pts))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(sorted(self.points))

    def __eq__(self, other):
        return isinstance(other, ExponentSet) and self.m == other.m and self.points == other.points

    def __repr__(self):
        return f"ExponentSet(m={self.m}, {sorted(self.points)})"

    def subset_lubs(self):
        """(size, coordinate sum of lub) for every nonempty subset."""
        pts = sorted(self.points)
        for k in range(1, len(pts) + 1):
            for sub in combinations(pts, k):
                lub = [max(col) for col in zip(*sub)]
                yield k, sum(lub)

    def threshold(self) -> int:
        """Beyond this t the closed form counts V_E(t) exactly."""
        return max((c for _, c in self.subset_lubs()), default=0)


def omega_E(E: ExponentSet) -> NumericalPolynomial:
    """Inclusion-exclusion over subsets S of E: sum (-1)^|S| C(t - |lub S| + m, m)."""
    m = E.m
    total = NumericalPolynomial.binomial(m)
    for k, c in E.subset_lubs():
        term = NumericalPolynomial.binomial(m, shift=c)
        total = total - term if k % 2 else total + term
    return total


def omega_brute(E: ExponentSet, t: int) -> int:
    """Count v in N^m with |v| <= t that dominate no element of E."""
    if t < 0:
        return 0
    pts = list(E.points)
    count = 0
    for v in product(range(t + 1), repeat=E.m):
        if sum(v) > t:
            continue
        if not any(all(a >= b for a, b in zip(v, p)) for p in pts):
            count += 1
    return count


@dataclass(frozen=True)
class CharSetSummary:
    n: int
    m: int
    exponent_sets: tuple  # per indeterminate: ExponentSet or None when parametric

    @property
    def parametric(self) -> list:
        return [j for j, E in enumerate(self.exponent_sets) if E is None]


def charset_summary(A, indices=None) -> CharSetSummary:
    """Per-indeterminate leader exponents of an autoreduced set."""
    ctx = A.ranking.ctx
    indices = list(range(ctx.n)) if indices is None else list(indices)
    pts = {j: [] for j in indices}
    for v in A.leaders:
        if v.index not in pts:
            raise ValueError("leader on an indeterminate outside the summary")
        pts[v.index].append(tuple(v.op))
    sets = tuple(ExponentSet(ctx.m, pts[j]) if pts[j] else None for j in indices)
    return CharSetSummary(len(indices), ctx.m, sets)


def kolchin_from_charset(summary: CharSetSummary) -> NumericalPolynomial:
    total = NumericalPolynomial.zero(summary.m)
    for E in summary.exponent_sets:
        total = total + (NumericalPolynomial.binomial(summary.m) if E is None else omega_E(E))
    return total


def chow_shape_polynomial(m: int, d: int, s: int) -> NumericalPolynomial:
    """(d+1) C(t+m, m) - C(t+m-s, m)."""
    return NumericalPolynomial.binomial(m) * (d + 1) - NumericalPolynomial.binomial(m, shift=s)


def chow_admissible_shape(w: NumericalPolynomial, n: int):
    """The unique (d, s) with w = (d+1) C(t+m,m) - C(t+m-s,m), or None.

    d is forced by the leading binomial coefficient and s by the t^(m-1)
    coefficient; the candidate is then confirmed by exact comparison.
    """
    m = w.m
    d = w.leading
    if d.denominator != 1 or d < 0:
        return None
    d = int(d)
    rest = NumericalPolynomial.binomial(m) * (d + 1) - w  # should be C(t+m-s, m)
    gap = NumericalPolynomial.binomial(m) - rest
    s = gap.power_coeffs()[m - 1] * factorial(m - 1)
    if s.denominator != 1 or s < 0:
        return None
    s = int(s)
    if chow_shape_polynomial(m, d, s) != w:
        return None
    if d > n or (s > 0 and d > n - 1):
        return None
    return d, s


def leader_structure_check(leaders, n: int, d: int, s: int) -> bool:
    """Leaders are n-d-1 order-zero variables plus one theta(y) with ord = s,
    all on distinct indeterminates."""
    leaders = list(leaders)
    if len(leaders) != n - d or n - d < 1:
        return False
    if len({v.index for v in leaders}) != len(leaders):
        return False
    orders = sorted(v.order for v in leaders)
    return orders == [0] * (n - d - 1) + [s]


def omega_degree_statements(E: ExponentSet) -> dict:
    """Evaluate the three degree statements about omega_E on one set."""
    w = omega_E(E)
    m = E.m
    out = {
        "deg_le_m": w.degree() <= m,
        "deg_m_iff_empty": (w.degree() == m) == (len(E) == 0),
        "zero_iff_origin": (w.degree() == -1) == ((0,) * m in E.points),
    }
    if len(E) and all(min(col) == 0 for col in zip(*E.points)):
        out["zero_column_minima"] = w.degree() < m - 1
    return out


def differential_invariants(w: NumericalPolynomial) -> dict:
    """Differential dimension, differential type and typical dimension of w."""
    tau = w.degree()
    typical = w.power_coeffs()[tau] * factorial(tau) if tau >= 0 else Fraction(0)
    return {"dimension": w.leading, "type": tau, "typical_dimension": typical}
