"""Roberts-ring verdicts for the affine cone over a Grassmannian.

The cone's rational Chow groups are cokernels of multiplication by the
hyperplane class h on the Chow ring of the base, with A_i matching the
degree-(t+1-i) graded piece modulo h. The Riemann-Roch image of the cone's
fundamental class is realized by the Todd class of the tangent bundle, so
the cone is a Roberts ring exactly when every Todd component of degree
1..t reduces to zero mod h.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .bundles import todd_tangent
from .chow import ChowElement, build_h_matrices, reduce_mod_h
from .partitions import GrassmannShape, enumerate_box


@dataclass(frozen=True)
class TauRecord:
    """One reduced Todd component.

    `degree` is the cohomological degree j on the Grassmannian; `tau_index`
    is the dimension label t+1-j of the corresponding cone Chow group. Both
    are carried to keep the two indexing conventions straight.
    """

    degree: int
    tau_index: int
    representative: ChowElement
    is_zero: bool


@dataclass(frozen=True)
class RobertsReport:
    shape: GrassmannShape
    cone_dim: int
    records: tuple
    verdict: bool
    witness: int | None

    def record(self, degree: int) -> TauRecord:
        for r in self.records:
            if r.degree == degree:
                return r
        raise KeyError(f"no record for degree {degree}")


@dataclass(frozen=True)
class ConeChowDims:
    """dims[i] = rational dimension of A_i for the cone, i = 0..t+1."""

    shape: GrassmannShape
    dims: tuple


def cone_chow_dims(shape: GrassmannShape) -> ConeChowDims:
    """Chow-group dimensions of the cone: cokernels of multiplication by h.

    A_i has dimension |basis(t+1-i)| - rank(h-matrix into degree t+1-i) for
    1 <= i <= t; A_0 = 0 and A_{t+1} is one-dimensional.
    """
    t = shape.dim
    hm = build_h_matrices(shape)
    dims = [0] * (t + 2)
    dims[t + 1] = 1
    for i in range(1, t + 1):
        j = t + 1 - i
        dims[i] = len(enumerate_box(shape, j)) - hm.ranks[j]
    return ConeChowDims(shape, tuple(dims))


def _reduced_component(shape, hm, td, j: int) -> TauRecord:
    rep, flag = reduce_mod_h(td.component(j), hm)
    return TauRecord(j, shape.dim + 1 - j, rep, flag)


@lru_cache(maxsize=None)
def tau_components(shape: GrassmannShape) -> RobertsReport:
    """Every reduced Todd component of degree 1..t, no short-circuits."""
    t = shape.dim
    td = todd_tangent(shape)
    hm = build_h_matrices(shape)
    records = tuple(_reduced_component(shape, hm, td, j) for j in range(1, t + 1))
    witness = min((r.degree for r in records if not r.is_zero), default=None)
    return RobertsReport(shape, t + 1, records, witness is None, witness)


def roberts_verdict(shape: GrassmannShape, mode: str = "report") -> RobertsReport:
    """Decide whether the cone is a Roberts ring.

    In "report" mode every degree is computed. In "verdict" mode even
    degrees are scanned first in increasing order with the Todd class
    truncated as it goes, stopping at the first nonzero component; odd
    degrees only need checking when all even ones vanish.
    """
    if mode not in ("report", "verdict"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "report":
        return tau_components(shape)
    t = shape.dim
    hm = build_h_matrices(shape)
    records = []
    for j in range(2, t + 1, 2):
        td = todd_tangent(shape, max_degree=j)
        rec = _reduced_component(shape, hm, td, j)
        records.append(rec)
        if not rec.is_zero:
            return RobertsReport(shape, t + 1, tuple(records), False, j)
    return tau_components(shape)


def gorenstein_parity_check(shape: GrassmannShape) -> bool:
    """True iff every odd-degree Todd component reduces to zero mod h."""
    report = tau_components(shape)
    return all(r.is_zero for r in report.records if r.degree % 2 == 1)


@dataclass(frozen=True)
class TableEntry:
    d: int
    n: int
    roberts: bool
    witness: int | None


def _table_entry(pair: tuple) -> TableEntry:
    d, n = pair
    report = roberts_verdict(GrassmannShape(d, n), mode="verdict")
    return TableEntry(d, n, report.verdict, report.witness)


def verdict_table(max_n: int, jobs: int | None = None) -> tuple:
    """Verdicts for every shape with 2 <= n <= max_n, in (n, d) order.

    With jobs > 1 the shapes are farmed out to worker processes; each worker
    builds its own memo tables, and the result order is fixed either way.
    """
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    pairs = [(d, n) for n in range(2, max_n + 1) for d in range(1, n)]
    if jobs is not None and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return tuple(pool.map(_table_entry, pairs))
    return tuple(_table_entry(p) for p in pairs)
