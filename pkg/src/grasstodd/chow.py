"""The rational Chow ring of a Grassmannian on its Schubert basis.

Classes are sparse rational linear combinations of Schubert classes, indexed
by partitions inside the d x (n-d) box. Multiplication by a special class
uses the interlacing (Pieri) rule; general products expand one factor as a
determinant in special classes and apply Pieri repeatedly. Reduction modulo
the hyperplane class h = sigma_1 is exact linear algebra over the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .partitions import GrassmannShape, Partition, enumerate_box, fits_box, normalize_partition
from .series import GradedContext


class ShapeMismatchError(ValueError):
    """Combining classes attached to different Grassmannians."""


class NonHomogeneousError(ValueError):
    """An operation requiring a homogeneous class received a mixed one."""


@dataclass(frozen=True)
class ChowElement:
    """Sparse rational combination of Schubert classes for a fixed shape.

    `terms` maps box partitions to nonzero Fractions. Instances are treated
    as immutable values; the dict is never mutated after construction.
    """

    shape: GrassmannShape
    terms: dict

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, lam: Partition) -> Fraction:
        return self.terms.get(tuple(lam), Fraction(0))

    def component(self, degree: int) -> "ChowElement":
        """Graded piece: restriction to keys of the given weight."""
        picked = {lam: c for lam, c in self.terms.items() if sum(lam) == degree}
        return ChowElement(self.shape, picked)

    def degrees(self) -> tuple[int, ...]:
        """Sorted weights occurring in the support."""
        return tuple(sorted({sum(lam) for lam in self.terms}))

    def homogeneous_degree(self) -> int:
        """Weight of a homogeneous element; raises on mixed support."""
        ws = self.degrees()
        if len(ws) != 1:
            raise NonHomogeneousError(f"element has degrees {ws}")
        return ws[0]

    def __add__(self, other: "ChowElement") -> "ChowElement":
        if not isinstance(other, ChowElement):
            return NotImplemented
        _check_shapes(self, other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            s = out.get(lam, 0) + c
            if s:
                out[lam] = s
            else:
                out.pop(lam, None)
        return ChowElement(self.shape, out)

    def __neg__(self) -> "ChowElement":
        return ChowElement(self.shape, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other: "ChowElement") -> "ChowElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ChowElement):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return scale(other, self)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for lam in sorted(self.terms, key=lambda p: (sum(p), _lex_key(p))):
            c = self.terms[lam]
            if lam:
                name = "[" + ",".join(map(str, lam)) + "]"
                mag = name if abs(c) == 1 else f"{abs(c)}*{name}"
            else:
                mag = str(abs(c))
            if not out:
                out = mag if c > 0 else f"-{mag}"
            else:
                out += f" + {mag}" if c > 0 else f" - {mag}"
        return out


def _lex_key(lam: Partition) -> tuple:
    # graded-lex descending: larger parts first within a degree
    return tuple(-p for p in lam)


def _check_shapes(a: ChowElement, b: ChowElement) -> None:
    if a.shape != b.shape:
        raise ShapeMismatchError(f"shapes differ: {a.shape} vs {b.shape}")


def zero(shape: GrassmannShape) -> ChowElement:
    return ChowElement(shape, {})


def unit(shape: GrassmannShape) -> ChowElement:
    return ChowElement(shape, {(): Fraction(1)})


def schubert(shape: GrassmannShape, lam, coeff=1) -> ChowElement:
    """The class of a single box partition, optionally scaled."""
    lam = normalize_partition(lam)
    if not fits_box(lam, shape):
        raise ValueError(f"partition {lam} does not fit the box of {shape}")
    c = Fraction(coeff)
    return ChowElement(shape, {lam: c} if c else {})


def sigma(shape: GrassmannShape, m: int) -> ChowElement:
    """Special class sigma_m = [(m)]; zero outside 1 <= m <= n-d, unit at 0."""
    if m == 0:
        return unit(shape)
    if 1 <= m <= shape.cols:
        return schubert(shape, (m,))
    return zero(shape)


def from_terms(shape: GrassmannShape, mapping) -> ChowElement:
    out = {}
    for lam, c in mapping.items():
        lam = normalize_partition(lam)
        if not fits_box(lam, shape):
            raise ValueError(f"partition {lam} does not fit the box of {shape}")
        c = Fraction(c)
        if c:
            out[lam] = out.get(lam, Fraction(0)) + c
    return ChowElement(shape, {k: v for k, v in out.items() if v})


def add(a: ChowElement, b: ChowElement) -> ChowElement:
    return a + b


def scale(q, a: ChowElement) -> ChowElement:
    q = Fraction(q)
    if not q:
        return zero(a.shape)
    return ChowElement(a.shape, {lam: q * c for lam, c in a.terms.items()})


class _Ring:
    """Per-shape multiplication engine with memoised integer kernels.

    All caches hold integer data only; they are keyed on immutable tuples, so
    concurrent reads are safe and racing inserts are idempotent.
    """

    def __init__(self, shape: GrassmannShape):
        self.shape = shape
        self._pieri: dict = {}
        self._giambelli: dict = {}
        self._chain: dict = {}
        self._pair: dict = {}

    def pieri_partitions(self, lam: Partition, m: int) -> tuple[Partition, ...]:
        """Box partitions obtained from lam by adding a horizontal m-strip."""
        key = (lam, m)
        hit = self._pieri.get(key)
        if hit is not None:
            return hit
        d, cols = self.shape.d, self.shape.cols
        padded = lam + (0,) * (d - len(lam))
        # max extra addable in rows i.. using static caps (row above's old part)
        suffix = [0] * (d + 1)
        for i in range(d - 1, -1, -1):
            cap = cols if i == 0 else padded[i - 1]
            suffix[i] = suffix[i + 1] + (cap - padded[i])
        out = []

        def rec(i: int, rem: int, prefix: tuple):
            if rem == 0:
                tail = padded[i:]
                full = prefix + tail
                while full and full[-1] == 0:
                    full = full[:-1]
                out.append(full)
                return
            if i == d:
                return
            # interlacing: mu_i is capped by the row above's OLD part
            cap = cols if i == 0 else padded[i - 1]
            hi = min(cap, padded[i] + rem)
            for v in range(hi, padded[i] - 1, -1):
                left = rem - (v - padded[i])
                if left > suffix[i + 1]:
                    break
                rec(i + 1, left, prefix + (v,))

        rec(0, m, ())
        result = tuple(out)
        self._pieri[key] = result
        return result

    def giambelli(self, lam: Partition) -> tuple:
        """Signed expansion of det(sigma_{lam_i + j - i}) as sigma-monomials.

        Returns ((coeff, mono), ...) with mono a descending tuple of indices
        in 1..n-d; index-0 entries contribute the unit and are omitted.
        """
        hit = self._giambelli.get(lam)
        if hit is not None:
            return hit
        ell = len(lam)
        cols = self.shape.cols
        acc: dict = {}

        def rec(row: int, used: int, sign: int, factors: tuple):
            if row == ell:
                mono = tuple(sorted(factors, reverse=True))
                acc[mono] = acc.get(mono, 0) + sign
                return
            for col in range(ell):
                if used >> col & 1:
                    continue
                idx = lam[row] + col - row
                if idx < 0 or idx > cols:
                    continue
                flip = -1 if _inversions_above(used, col) & 1 else 1
                rec(row + 1, used | 1 << col, sign * flip,
                    factors + (idx,) if idx else factors)

        rec(0, 0, 1, ())
        result = tuple(sorted(
            ((c, mono) for mono, c in acc.items() if c),
            key=lambda item: item[1],
        ))
        self._giambelli[lam] = result
        return result

    def chain(self, lam: Partition, mono: tuple) -> dict:
        """Integer coefficients of [lam] * sigma_{mono[0]} * ... (mono ascending)."""
        if not mono:
            return {lam: 1}
        key = (lam, mono)
        hit = self._chain.get(key)
        if hit is not None:
            return hit
        prev = self.chain(lam, mono[:-1])
        last = mono[-1]
        out: dict = {}
        for nu, c in prev.items():
            for rho in self.pieri_partitions(nu, last):
                out[rho] = out.get(rho, 0) + c
        self._chain[key] = out
        return out

    def pair_product(self, lam: Partition, mu: Partition) -> dict:
        """Integer coefficients of the basis product [lam] * [mu]."""
        if sum(lam) + sum(mu) > self.shape.dim:
            return {}
        if (len(mu), sum(mu), mu) > (len(lam), sum(lam), lam):
            lam, mu = mu, lam
        # expand mu (the side with fewer rows) through its determinant
        key = (lam, mu)
        hit = self._pair.get(key)
        if hit is not None:
            return hit
        out: dict = {}
        for coeff, mono in self.giambelli(mu):
            for nu, c in self.chain(lam, tuple(sorted(mono))).items():
                s = out.get(nu, 0) + coeff * c
                if s:
                    out[nu] = s
                else:
                    out.pop(nu, None)
        self._pair[key] = out
        return out


def _inversions_above(used: int, col: int) -> int:
    # number of already-used columns to the right of col (parity of the swap)
    return (used >> (col + 1)).bit_count()


@lru_cache(maxsize=None)
def ring(shape: GrassmannShape) -> _Ring:
    return _Ring(shape)


def pieri(a: ChowElement, m: int) -> ChowElement:
    """Multiply by the special class sigma_m via the interlacing rule.

    For m outside [1, n-d] the special class is zero, so the result is the
    zero element.
    """
    shape = a.shape
    if not 1 <= m <= shape.cols:
        return zero(shape)
    r = ring(shape)
    out: dict = {}
    for lam, c in a.terms.items():
        for mu in r.pieri_partitions(lam, m):
            s = out.get(mu, 0) + c
            if s:
                out[mu] = s
            else:
                out.pop(mu, None)
    return ChowElement(shape, out)


def giambelli_expand(lam, shape: GrassmannShape) -> list:
    """Determinantal expansion of a Schubert class in special classes.

    Returns a list of (coefficient, monomial) pairs, the monomial a
    descending tuple of sigma indices; the unit monomial is ().
    """
    lam = normalize_partition(lam)
    if not fits_box(lam, shape):
        raise ValueError(f"partition {lam} does not fit the box of {shape}")
    return list(ring(shape).giambelli(lam))


def multiply(a: ChowElement, b: ChowElement, max_degree: int | None = None) -> ChowElement:
    """Product of two classes; terms above max_degree are dropped."""
    _check_shapes(a, b)
    shape = a.shape
    limit = shape.dim if max_degree is None else min(max_degree, shape.dim)
    r = ring(shape)
    out: dict = {}
    by_weight: dict = {}
    for mu, cb in b.terms.items():
        by_weight.setdefault(sum(mu), []).append((mu, cb))
    for lam, ca in a.terms.items():
        wa = sum(lam)
        for wb, bucket in by_weight.items():
            if wa + wb > limit:
                continue
            for mu, cb in bucket:
                c = ca * cb
                for nu, k in r.pair_product(lam, mu).items():
                    s = out.get(nu, 0) + c * k
                    if s:
                        out[nu] = s
                    else:
                        out.pop(nu, None)
    return ChowElement(shape, out)


def lr_coefficient(lam, mu, nu) -> int:
    """Structure constant of [nu] in [lam]*[mu], free of box truncation."""
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    nu = normalize_partition(nu)
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    rows = max(1, len(lam) + len(mu))
    cols = max(1, (lam[0] if lam else 0) + (mu[0] if mu else 0))
    big = GrassmannShape(rows, rows + cols)
    if not fits_box(nu, big):
        return 0
    return ring(big).pair_product(lam, mu).get(nu, 0)


@dataclass(frozen=True)
class HMatrixSet:
    """Multiplication-by-h matrices for every degree, with echelon data.

    For degree i in 1..dim, `matrix[i]` has one row per degree-i basis
    partition and one column per degree-(i-1) one; entries are 0 or 1.
    `echelon[i]` is a reduced integer row basis of the column space, stored
    as (pivot position, vector) pairs; `rank[i]` is its length.
    """

    shape: GrassmannShape
    matrices: dict
    echelons: dict
    ranks: dict

    def rank(self, degree: int) -> int:
        return self.ranks[degree]


def _integer_rref(vectors: list, width: int) -> list:
    """Reduced echelon form over the integers; returns (pivot, row) pairs."""
    echelon: list = []
    for vec in vectors:
        row = list(vec)
        for piv, base in echelon:
            if row[piv]:
                f, g = base[piv], row[piv]
                row = [a * f - b * g for a, b in zip(row, base)]
        piv = next((j for j, a in enumerate(row) if a), None)
        if piv is None:
            continue
        g = 0
        for a in row:
            g = gcd(g, a)
        if row[piv] < 0:
            g = -g
        row = [a // g for a in row]
        # back-substitute to keep stored rows reduced at the new pivot
        updated = []
        for pc, base in echelon:
            if base[piv]:
                f, g2 = row[piv], base[piv]
                base = [a * f - b * g2 for a, b in zip(base, row)]
                norm = 0
                for a in base:
                    norm = gcd(norm, a)
                if base[pc] < 0:
                    norm = -norm
                base = [a // norm for a in base]
            updated.append((pc, base))
        echelon = updated
        echelon.append((piv, row))
        echelon.sort()
    return echelon


@lru_cache(maxsize=None)
def build_h_matrices(shape: GrassmannShape) -> HMatrixSet:
    """The 0/1 matrices of multiplication by sigma_1 on the graded bases."""
    r = ring(shape)
    matrices: dict = {}
    echelons: dict = {}
    ranks: dict = {}
    for i in range(1, shape.dim + 1):
        source = enumerate_box(shape, i - 1)
        target = enumerate_box(shape, i)
        index = {lam: k for k, lam in enumerate(target)}
        columns = []
        for lam in source:
            col = [0] * len(target)
            for mu in r.pieri_partitions(lam, 1):
                col[index[mu]] = 1
            columns.append(col)
        matrices[i] = tuple(
            tuple(columns[c][rr] for c in range(len(source)))
            for rr in range(len(target))
        )
        ech = _integer_rref(columns, len(target))
        echelons[i] = tuple((piv, tuple(row)) for piv, row in ech)
        ranks[i] = len(ech)
    return HMatrixSet(shape, matrices, echelons, ranks)


def reduce_mod_h(a: ChowElement, hmats: HMatrixSet) -> tuple[ChowElement, bool]:
    """Canonical representative of a homogeneous class modulo h times the
    previous graded piece, plus a membership flag.

    The coordinate vector is eliminated against the fixed echelon basis of
    the image of multiplication by h; the flag is True exactly when the
    residual vanishes.
    """
    if a.shape != hmats.shape:
        raise ShapeMismatchError(f"shapes differ: {a.shape} vs {hmats.shape}")
    if a.is_zero():
        return a, True
    degree = a.homogeneous_degree()
    if degree < 1:
        raise NonHomogeneousError("reduction needs degree at least 1")
    basis = enumerate_box(a.shape, degree)
    vec = [a.terms.get(lam, Fraction(0)) for lam in basis]
    for piv, row in hmats.echelons[degree]:
        if vec[piv]:
            f = Fraction(vec[piv], row[piv])
            vec = [v - f * r for v, r in zip(vec, row)]
    terms = {lam: v for lam, v in zip(basis, vec) if v}
    return ChowElement(a.shape, terms), not terms


def graded_context(shape: GrassmannShape, truncation: int | None = None) -> GradedContext:
    """Adapter exposing the Chow ring to the graded series combinators."""
    limit = shape.dim if truncation is None else min(truncation, shape.dim)
    return GradedContext(
        truncation=limit,
        zero=zero(shape),
        one=unit(shape),
        add=lambda a, b: a + b,
        scale=scale,
        mul=lambda a, b: multiply(a, b, max_degree=limit),
        component=lambda a, k: a.component(k),
    )
