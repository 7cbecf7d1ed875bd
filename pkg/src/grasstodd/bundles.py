"""Tautological-bundle classes on a Grassmannian.

Chern classes and Chern characters of the quotient bundle Q, the subbundle
S and its dual, and of the tangent bundle S* (x) Q, together with the Todd
class of the tangent bundle — everything as exact Schubert-basis classes.

All constructors accept `max_degree` to truncate the computation early;
the default carries every class up to the top degree t = d(n-d).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .chow import ChowElement, graded_context, multiply, pieri, scale, sigma, unit, zero
from .partitions import GrassmannShape
from .series import (
    elementary_from_power_sums,
    exp_graded,
    power_sums_from_elementary,
    todd_log_coeffs,
)


@dataclass(frozen=True)
class BundleCharacter:
    """Graded Chern character: parts[k] is the degree-k component, k = 0..D.

    parts[0] is rank * unit; each parts[k] is homogeneous of degree k or zero.
    """

    shape: GrassmannShape
    rank: int
    parts: tuple

    def component(self, m: int) -> ChowElement:
        if 0 <= m < len(self.parts):
            return self.parts[m]
        return zero(self.shape)

    @property
    def ch(self) -> tuple:
        """Components indexed from degree 1 (rank excluded)."""
        return self.parts[1:]


@dataclass(frozen=True)
class BundleChern:
    """Chern classes c_1..c_D of a bundle; c_i = 0 for i > rank is implicit."""

    shape: GrassmannShape
    rank: int
    c: tuple

    def component(self, i: int) -> ChowElement:
        if 1 <= i <= len(self.c):
            return self.c[i - 1]
        return zero(self.shape)


def _cap(shape: GrassmannShape, max_degree: int | None) -> int:
    return shape.dim if max_degree is None else max(0, min(max_degree, shape.dim))


def chern_Q(shape: GrassmannShape) -> BundleChern:
    """Chern classes of the rank-(n-d) quotient bundle: c_m = sigma_m."""
    return BundleChern(
        shape, shape.cols, tuple(sigma(shape, m) for m in range(1, shape.cols + 1))
    )


def ch_Q(shape: GrassmannShape, max_degree: int | None = None) -> BundleCharacter:
    """Chern character of Q via Newton power sums of the special classes."""
    return _ch_Q(shape, _cap(shape, max_degree))


@lru_cache(maxsize=None)
def _ch_Q(shape: GrassmannShape, cap: int) -> BundleCharacter:
    ctx = graded_context(shape, cap)
    e = [sigma(shape, m) for m in range(1, shape.cols + 1)]
    p = power_sums_from_elementary(e, shape.cols, ctx)
    parts = [scale(shape.cols, unit(shape))]
    parts += [scale(Fraction(1, factorial(m)), p[m - 1]) for m in range(1, cap + 1)]
    return BundleCharacter(shape, shape.cols, tuple(parts))


def ch_S(shape: GrassmannShape, max_degree: int | None = None) -> BundleCharacter:
    """Chern character of the subbundle: ch(S) = n - ch(Q) by additivity."""
    return _ch_S(shape, _cap(shape, max_degree))


@lru_cache(maxsize=None)
def _ch_S(shape: GrassmannShape, cap: int) -> BundleCharacter:
    q = _ch_Q(shape, cap)
    parts = [scale(shape.d, unit(shape))]
    parts += [-p for p in q.parts[1:]]
    return BundleCharacter(shape, shape.d, tuple(parts))


def ch_S_dual(shape: GrassmannShape, max_degree: int | None = None) -> BundleCharacter:
    """Chern character of S*: degree-m component picks up (-1)^m."""
    return _ch_S_dual(shape, _cap(shape, max_degree))


@lru_cache(maxsize=None)
def _ch_S_dual(shape: GrassmannShape, cap: int) -> BundleCharacter:
    s = _ch_S(shape, cap)
    parts = [s.parts[0]]
    parts += [p if m % 2 == 0 else -p for m, p in enumerate(s.parts[1:], start=1)]
    return BundleCharacter(shape, shape.d, tuple(parts))


@lru_cache(maxsize=None)
def chern_S_inverse_series(shape: GrassmannShape) -> tuple:
    """Degree-1..t coefficients of the formal inverse of 1 + sigma_1 + ... .

    Degrees 1..d are the Chern classes of S; every degree above d must
    evaluate to zero in the Chow ring (the Whitney relations), which is what
    the invariant tests pin down.
    """
    t = shape.dim
    out = [unit(shape)]
    for k in range(1, t + 1):
        acc = zero(shape)
        for i in range(1, min(k, shape.cols) + 1):
            acc = acc - pieri(out[k - i], i)
        out.append(acc)
    return tuple(out[1:])


def ch_tangent(shape: GrassmannShape, max_degree: int | None = None) -> BundleCharacter:
    """Chern character of the tangent bundle as the graded product ch(S*)ch(Q)."""
    return _ch_tangent(shape, _cap(shape, max_degree))


@lru_cache(maxsize=None)
def _ch_tangent(shape: GrassmannShape, cap: int) -> BundleCharacter:
    sd = _ch_S_dual(shape, cap)
    q = _ch_Q(shape, cap)
    parts = []
    for m in range(cap + 1):
        acc = zero(shape)
        for i in range(m + 1):
            a, b = sd.component(i), q.component(m - i)
            if a.is_zero() or b.is_zero():
                continue
            acc = acc + multiply(a, b)
        parts.append(acc)
    return BundleCharacter(shape, shape.d * shape.cols, tuple(parts))


def chern_tangent(shape: GrassmannShape, max_degree: int | None = None) -> BundleChern:
    """Chern classes of the tangent bundle, recovered from its character."""
    return _chern_tangent(shape, _cap(shape, max_degree))


@lru_cache(maxsize=None)
def _chern_tangent(shape: GrassmannShape, cap: int) -> BundleChern:
    cht = _ch_tangent(shape, cap)
    p = [scale(factorial(m), cht.component(m)) for m in range(1, cap + 1)]
    ctx = graded_context(shape, cap)
    return BundleChern(shape, shape.d * shape.cols, tuple(elementary_from_power_sums(p, ctx)))


def todd_tangent(shape: GrassmannShape, max_degree: int | None = None) -> ChowElement:
    """Todd class of the tangent bundle: exp(sum_m a_m m! ch_m), exact.

    Inhomogeneous, degree-0 part 1, components up to max_degree (default t).
    """
    return _todd_tangent(shape, _cap(shape, max_degree))


@lru_cache(maxsize=None)
def _todd_tangent(shape: GrassmannShape, cap: int) -> ChowElement:
    if cap == 0:
        return unit(shape)
    cht = _ch_tangent(shape, cap)
    coeffs = todd_log_coeffs(cap)
    x = zero(shape)
    for m in range(1, cap + 1):
        a = coeffs[m]
        if a:
            x = x + scale(a * factorial(m), cht.component(m))
    return exp_graded(x, graded_context(shape, cap))
