"""Graded power-series combinators over a commutative Q-algebra.

The host ring plugs in through a small context record (add, scale, multiply,
unit, zero, graded-component extraction) so that Newton's identities, graded
exp/log, and the Todd-logarithm coefficients can be evaluated both in Chow
rings and in a free polynomial algebra that serves as an independent test
bed for the universal identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable


@dataclass(frozen=True)
class GradedContext:
    """Hooks into a commutative graded algebra, truncated above `truncation`.

    `mul` must already enforce the truncation; `component(a, k)` extracts the
    degree-k graded piece.
    """

    truncation: int
    zero: object
    one: object
    add: Callable
    scale: Callable
    mul: Callable
    component: Callable


@lru_cache(maxsize=None)
def bernoulli(k: int) -> Fraction:
    """The k-th Bernoulli number, B_1 = -1/2 convention, exact.

    Defining recurrence: sum_{j=0}^{k} binom(k+1, j) B_j = 0 for k >= 1.
    """
    if k < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    if k == 0:
        return Fraction(1)
    acc = Fraction(0)
    for j in range(k):
        acc += comb(k + 1, j) * bernoulli(j)
    return -acc / (k + 1)


# -- scalar power series (dense lists of Fractions, index = exponent) --------


def _series_reciprocal(a: list, trunc: int) -> list:
    if a[0] != 1:
        raise ValueError("reciprocal needs constant term 1")
    r = [Fraction(0)] * (trunc + 1)
    r[0] = Fraction(1)
    for k in range(1, trunc + 1):
        r[k] = -sum(a[i] * r[k - i] for i in range(1, min(k, len(a) - 1) + 1))
    return r


def _series_log(a: list, trunc: int) -> list:
    # l' * a = a'  =>  l_k = a_k - (1/k) * sum_{i<k} i * l_i * a_{k-i}
    if a[0] != 1:
        raise ValueError("log needs constant term 1")
    out = [Fraction(0)] * (trunc + 1)
    for k in range(1, trunc + 1):
        s = k * a[k]
        for i in range(1, k):
            s -= i * out[i] * a[k - i]
        out[k] = s / k
    return out


@dataclass(frozen=True)
class ToddLogCoeffs:
    """Coefficients a_m of log(x / (1 - e^{-x})), so td = exp(sum a_m m! ch_m)."""

    truncation: int
    a: tuple

    def __getitem__(self, m: int) -> Fraction:
        if not 0 <= m <= self.truncation:
            raise IndexError(f"coefficient index {m} out of range")
        return self.a[m]


@lru_cache(maxsize=None)
def todd_log_coeffs(trunc: int) -> ToddLogCoeffs:
    """Formal log of x/(1 - e^{-x}) up to the given degree, exact.

    Computed by series reciprocal and logarithm; a_1 = 1/2 and the odd
    coefficients a_3, a_5, ... all vanish (the series minus x/2 is even).
    """
    if trunc < 1:
        raise ValueError("truncation must be at least 1")
    # (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
    denom = [Fraction((-1) ** k, factorial(k + 1)) for k in range(trunc + 1)]
    q = _series_reciprocal(denom, trunc)
    return ToddLogCoeffs(trunc, tuple(_series_log(q, trunc)))


# -- Newton's identities in a host algebra -----------------------------------


def power_sums_from_elementary(e: list, rank: int, ctx: GradedContext) -> list:
    """Power sums p_1..p_D from elementary symmetric classes e_1..e_rank.

    Entries of `e` beyond the rank (or beyond the list) count as zero.
    Newton: p_m = e_1 p_{m-1} - e_2 p_{m-2} + ... + (-1)^{m-1} m e_m.
    """

    def e_at(i: int):
        if i < 1 or i > rank or i > len(e):
            return ctx.zero
        return e[i - 1]

    p: list = []
    for m in range(1, ctx.truncation + 1):
        acc = ctx.scale(Fraction((-1) ** (m - 1) * m), e_at(m))
        for i in range(1, m):
            ei = e_at(i)
            if ei == ctx.zero:
                continue
            acc = ctx.add(acc, ctx.scale((-1) ** (i - 1), ctx.mul(ei, p[m - i - 1])))
        p.append(acc)
    return p


def elementary_from_power_sums(p: list, ctx: GradedContext) -> list:
    """Inverse of `power_sums_from_elementary`: m e_m = sum (-1)^{i-1} e_{m-i} p_i."""
    e = [ctx.one]
    for m in range(1, ctx.truncation + 1):
        acc = ctx.zero
        for i in range(1, m + 1):
            if i > len(p) or p[i - 1] == ctx.zero:
                continue
            acc = ctx.add(acc, ctx.scale((-1) ** (i - 1), ctx.mul(e[m - i], p[i - 1])))
        e.append(ctx.scale(Fraction(1, m), acc))
    return e[1:]


# -- graded exponential and logarithm ----------------------------------------


def exp_graded(x, ctx: GradedContext):
    """sum_k x^k / k! truncated at the context degree; x needs zero constant term.

    Evaluated through the derivation recurrence
    y_k = (1/k) sum_j j * x_j * y_{k-j}, which reproduces the exponential
    series one graded component at a time.
    """
    if ctx.component(x, 0) != ctx.zero:
        raise ValueError("exp_graded needs a vanishing degree-0 part")
    comps = {}
    for j in range(1, ctx.truncation + 1):
        xj = ctx.component(x, j)
        if xj != ctx.zero:
            comps[j] = xj
    y = [ctx.one] + [ctx.zero] * ctx.truncation
    for k in range(1, ctx.truncation + 1):
        acc = ctx.zero
        for j, xj in comps.items():
            if j > k or y[k - j] == ctx.zero:
                continue
            acc = ctx.add(acc, ctx.scale(j, ctx.mul(xj, y[k - j])))
        y[k] = ctx.scale(Fraction(1, k), acc)
    total = y[0]
    for k in range(1, ctx.truncation + 1):
        total = ctx.add(total, y[k])
    return total


def log_graded(u, ctx: GradedContext):
    """sum_k (-1)^{k-1} (u-1)^k / k truncated; u needs constant term 1."""
    if ctx.component(u, 0) != ctx.one:
        raise ValueError("log_graded needs degree-0 part equal to 1")
    v = ctx.add(u, ctx.scale(-1, ctx.one))
    acc = ctx.zero
    power = ctx.one
    for k in range(1, ctx.truncation + 1):
        power = ctx.mul(power, v)
        if power == ctx.zero:
            break
        acc = ctx.add(acc, ctx.scale(Fraction((-1) ** (k - 1), k), power))
    return acc


# -- free polynomial test algebra --------------------------------------------


@dataclass(frozen=True)
class PolyElement:
    """Element of a PolynomialAlgebra: map from exponent tuples to Fractions."""

    algebra: "PolynomialAlgebra"
    terms: dict

    def coefficient(self, monomial: dict) -> Fraction:
        key = self.algebra._key(monomial)
        return self.terms.get(key, Fraction(0))

    def degrees(self) -> tuple:
        return tuple(sorted({self.algebra._degree(k) for k in self.terms}))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.algebra.constant(other)
        return self.algebra.add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return self.algebra.scale(-1, self)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.algebra.constant(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.algebra.scale(other, self)
        return self.algebra.mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self.algebra.scale(Fraction(1, 1) / Fraction(scalar), self)

    def __pow__(self, k: int):
        out = self.algebra.one()
        for _ in range(k):
            out = self.algebra.mul(out, self)
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.algebra.names
        bits = []
        for key in sorted(self.terms):
            mono = "*".join(
                f"{names[i]}^{e}" if e > 1 else names[i]
                for i, e in enumerate(key) if e
            )
            bits.append(f"{self.terms[key]}*{mono}" if mono else str(self.terms[key]))
        return " + ".join(bits)


class PolynomialAlgebra:
    """Free commutative Q-algebra on weighted generators, degree-truncated.

    Used as the series module's test bed: universal identities (Newton round
    trips, exp/log inversion, the Todd and Chern-character expansions) are
    checked here with no geometry involved.
    """

    def __init__(self, generators: dict, truncation: int):
        self.names = tuple(generators)
        self.degrees = tuple(generators[g] for g in self.names)
        if any(d < 1 for d in self.degrees):
            raise ValueError("generator degrees must be positive")
        self.truncation = truncation

    def _degree(self, key: tuple) -> int:
        return sum(e * d for e, d in zip(key, self.degrees))

    def _key(self, monomial: dict) -> tuple:
        unknown = set(monomial) - set(self.names)
        if unknown:
            raise KeyError(f"unknown generators: {sorted(unknown)}")
        return tuple(monomial.get(g, 0) for g in self.names)

    def zero(self) -> PolyElement:
        return PolyElement(self, {})

    def one(self) -> PolyElement:
        return PolyElement(self, {(0,) * len(self.names): Fraction(1)})

    def constant(self, q) -> PolyElement:
        q = Fraction(q)
        return PolyElement(self, {(0,) * len(self.names): q} if q else {})

    def generator(self, name: str) -> PolyElement:
        i = self.names.index(name)
        key = tuple(1 if j == i else 0 for j in range(len(self.names)))
        return PolyElement(self, {key: Fraction(1)})

    def add(self, a: PolyElement, b: PolyElement) -> PolyElement:
        out = dict(a.terms)
        for k, c in b.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return PolyElement(self, out)

    def scale(self, q, a: PolyElement) -> PolyElement:
        q = Fraction(q)
        if not q:
            return self.zero()
        return PolyElement(self, {k: q * c for k, c in a.terms.items()})

    def mul(self, a: PolyElement, b: PolyElement) -> PolyElement:
        out: dict = {}
        for ka, ca in a.terms.items():
            for kb, cb in b.terms.items():
                key = tuple(x + y for x, y in zip(ka, kb))
                if self._degree(key) > self.truncation:
                    continue
                s = out.get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return PolyElement(self, out)

    def component(self, a: PolyElement, k: int) -> PolyElement:
        return PolyElement(
            self, {key: c for key, c in a.terms.items() if self._degree(key) == k}
        )

    def context(self) -> GradedContext:
        return GradedContext(
            truncation=self.truncation,
            zero=self.zero(),
            one=self.one(),
            add=self.add,
            scale=self.scale,
            mul=self.mul,
            component=self.component,
        )
