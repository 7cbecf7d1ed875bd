"""Tautological bundle classes, pinned by global invariants.

The strongest checks here are integral ones: the Todd class integrates to 1
(arithmetic genus of a rational variety), the top Chern class of the tangent
bundle integrates to the number of Schubert cells, and Riemann-Roch for the
Plucker line bundle reproduces the tableau count of sections.
"""

from fractions import Fraction
from math import comb, factorial

from grasstodd import (
    GrassmannShape,
    ch_Q,
    ch_S,
    ch_S_dual,
    ch_tangent,
    chern_Q,
    chern_S_inverse_series,
    chern_tangent,
    conjugate,
    multiply,
    power_sums_from_elementary,
    scale,
    schubert,
    sigma,
    ssyt_count,
    todd_tangent,
    unit,
    zero,
)
from grasstodd.chow import graded_context
from grasstodd.series import exp_graded

SHAPES = [GrassmannShape(d, n) for n in range(4, 9) for d in range(2, n - 1)]


def box_coefficient(element, shape):
    box = tuple([shape.cols] * shape.d)
    return element.component(shape.dim).coefficient(box)


def test_chern_Q_is_special_classes():
    s = GrassmannShape(3, 7)
    cq = chern_Q(s)
    assert cq.rank == 4
    for m in range(1, 5):
        assert cq.component(m) == sigma(s, m)
    assert cq.component(5).is_zero()


def test_ch_Q_low_degrees():
    s = GrassmannShape(3, 7)
    q = ch_Q(s)
    assert q.component(0) == scale(4, unit(s))
    assert q.component(1) == sigma(s, 1)
    # ch_2 = (sigma_1^2 - 2 sigma_2) / 2 = (sigma_{11} - sigma_2) / 2
    ch2 = q.component(2)
    assert ch2.coefficient((1, 1)) == Fraction(1, 2)
    assert ch2.coefficient((2,)) == Fraction(-1, 2)
    # ch_3 = (sigma_3 - sigma_{21} + sigma_{111}) / 6
    ch3 = q.component(3)
    assert ch3.coefficient((3,)) == Fraction(1, 6)
    assert ch3.coefficient((2, 1)) == Fraction(-1, 6)
    assert ch3.coefficient((1, 1, 1)) == Fraction(1, 6)


def test_ch_S_is_complement():
    s = GrassmannShape(2, 6)
    q, sub = ch_Q(s), ch_S(s)
    assert sub.component(0) == scale(2, unit(s))
    for m in range(1, s.dim + 1):
        assert sub.component(m) == -q.component(m)


def test_ch_S_dual_alternates_signs():
    s = GrassmannShape(2, 6)
    sub, dual = ch_S(s), ch_S_dual(s)
    for m in range(s.dim + 1):
        want = sub.component(m) if m % 2 == 0 else -sub.component(m)
        assert dual.component(m) == want


def test_whitney_inverse_series():
    # Degrees 1..d are the Chern classes of S; everything above d dies.
    for s in SHAPES:
        inv = chern_S_inverse_series(s)
        assert len(inv) == s.dim
        for k in range(1, s.d + 1):
            want = schubert(s, conjugate((k,)), coeff=(-1) ** k)
            assert inv[k - 1] == want
        for k in range(s.d + 1, s.dim + 1):
            assert inv[k - 1].is_zero(), (s, k)


def test_ch_S_from_its_chern_classes():
    # Independent route: Newton power sums of c(S) from the inverse series
    # must agree with ch(S) = d - ch(Q) from additivity.
    for s in [GrassmannShape(2, 5), GrassmannShape(3, 6), GrassmannShape(3, 7)]:
        ctx = graded_context(s)
        e = list(chern_S_inverse_series(s)[: s.d])
        p = power_sums_from_elementary(e, s.d, ctx)
        sub = ch_S(s)
        for m in range(1, s.dim + 1):
            assert scale(Fraction(1, factorial(m)), p[m - 1]) == sub.component(m)


def test_ch_tangent_low_degrees():
    # ch_1(T) = n sigma_1; ch_2(T) = (2d-n) ch_2(Q) + sigma_1^2
    for s in [GrassmannShape(2, 5), GrassmannShape(3, 6), GrassmannShape(2, 6)]:
        t = ch_tangent(s)
        assert t.rank == s.dim
        assert t.component(0) == scale(s.dim, unit(s))
        assert t.component(1) == scale(s.n, sigma(s, 1))
        q2 = ch_Q(s).component(2)
        h2 = multiply(sigma(s, 1), sigma(s, 1))
        assert t.component(2) == scale(2 * s.d - s.n, q2) + h2


def test_ch_tangent_example_g25():
    s = GrassmannShape(2, 5)
    ch2 = ch_tangent(s).component(2)
    assert ch2.coefficient((2,)) == Fraction(3, 2)
    assert ch2.coefficient((1, 1)) == Fraction(1, 2)


def test_chern_tangent_first_class_and_euler():
    for s in [GrassmannShape(2, 4), GrassmannShape(2, 5), GrassmannShape(3, 6)]:
        ct = chern_tangent(s)
        assert ct.component(1) == scale(s.n, sigma(s, 1))
        # top Chern class integrates to the cell count
        assert box_coefficient(ct.component(s.dim), s) == comb(s.n, s.d)


def test_todd_low_degrees():
    # td_0 = 1, td_1 = c_1/2, td_2 = (c_1^2 + c_2)/12
    for s in [GrassmannShape(2, 5), GrassmannShape(3, 6)]:
        td = todd_tangent(s)
        ct = chern_tangent(s)
        c1, c2 = ct.component(1), ct.component(2)
        assert td.component(0) == unit(s)
        assert td.component(1) == scale(Fraction(1, 2), c1)
        want2 = scale(Fraction(1, 12), multiply(c1, c1) + c2)
        assert td.component(2) == want2


def test_todd_integrates_to_one():
    for s in SHAPES:
        if s.dim > 12:
            continue
        assert box_coefficient(todd_tangent(s), s) == 1, s


def test_riemann_roch_for_plucker_twists():
    # chi(O(k)) = integral of e^{k h} td(T) = number of semistandard
    # tableaux on the k-fold rectangle; ties Todd, products, and the
    # hook-content count together through one identity.
    for s in [GrassmannShape(2, 4), GrassmannShape(2, 5), GrassmannShape(3, 6)]:
        td = todd_tangent(s)
        ctx = graded_context(s)
        for k in range(4):
            twist = exp_graded(scale(k, sigma(s, 1)), ctx)
            chi = box_coefficient(multiply(twist, td), s)
            want = ssyt_count(tuple([k] * s.d), s.n) if k else 1
            assert chi == want, (s, k)


def test_max_degree_truncation_consistency():
    s = GrassmannShape(3, 6)
    full = todd_tangent(s)
    part = todd_tangent(s, max_degree=4)
    assert max(part.degrees()) <= 4
    for m in range(5):
        assert part.component(m) == full.component(m)
    cht_full = ch_tangent(s)
    cht_part = ch_tangent(s, max_degree=3)
    for m in range(4):
        assert cht_part.component(m) == cht_full.component(m)
    assert cht_part.component(5).is_zero()


def test_component_out_of_range_is_zero():
    s = GrassmannShape(2, 5)
    assert ch_Q(s).component(99).is_zero()
    assert chern_Q(s).component(99).is_zero()
    assert ch_Q(s).component(0) == scale(3, unit(s))
    assert len(ch_Q(s).ch) == s.dim
