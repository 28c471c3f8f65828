"""Hurwitz model: cut-and-join counts, xi-basis reconstruction, WKB layer."""

import math
from fractions import Fraction as Q

import pytest

from eocurves import hurwitz as hur
from eocurves import oracles
from eocurves.errors import InvalidProfile
from eocurves.laurent import SparseLaurent
from eocurves.ratfunc import RatFunc, UPoly, substitute_mobius
from eocurves.series import TruncatedSeries


def test_base_values():
    assert hur.hurwitz_number(0, 1, [3]) == Q(1, 2)
    assert hur.hurwitz_number(0, 2, [1, 1]) == Q(1, 2)
    assert hur.hurwitz_number(1, 1, [2]) == Q(1, 12)
    assert hur.hurwitz_number(1, 1, [1]) == 0
    # one-pole closed form d^{d-2}/d!
    for d in range(1, 8):
        assert hur.hurwitz_number(0, 1, [d]) == Q(d ** (d - 2) if d > 1 else 1,
                                                  math.factorial(d))
    # two-pole closed form
    for a in range(1, 5):
        for b in range(1, 5):
            expect = Q(a ** a, math.factorial(a)) * Q(b ** b, math.factorial(b)) / (a + b)
            assert hur.hurwitz_number(0, 2, [a, b]) == expect


def test_against_monodromy_oracle():
    for g, mu in [(0, (3,)), (0, (1, 1)), (0, (2,)), (1, (2,)), (0, (1, 1, 1)),
                  (0, (2, 1)), (1, (1, 1)), (0, (4,))]:
        got = hur.hurwitz_number(g, len(mu), list(mu))
        assert got == oracles.hurwitz_by_factorizations(g, mu), (g, mu)


def test_labeled_conversion():
    assert hur.labeled_hurwitz(1, [2]) == Q(1, 2)
    assert hur.labeled_hurwitz(0, [1, 1, 1]) == 4
    assert hur.labeled_hurwitz(0, [1]) == 1
    for g, mu in [(0, (2, 1)), (1, (3,))]:
        assert hur.labeled_hurwitz(g, mu) == \
            oracles.labeled_hurwitz_by_factorizations(g, mu)


def test_invalid_profiles():
    with pytest.raises(InvalidProfile):
        hur.hurwitz_number(0, 1, [0])
    with pytest.raises(InvalidProfile):
        hur.hurwitz_number(0, 0, [])


def test_nonnegativity_and_weight():
    import random
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(1, 3)
        mu = tuple(rng.randint(1, 5) for _ in range(n))
        g = rng.randint(0, 2)
        h = hur.hurwitz_number(g, n, mu)
        assert h >= 0
        r = 2 * g - 2 + n + sum(mu)
        aut = 1
        for v in set(mu):
            aut *= math.factorial(mu.count(v))
        assert hur.labeled_hurwitz(g, mu) * Q(aut, math.factorial(r)) == h


def test_xi_polynomials():
    assert hur.xi_polynomial(0).coeffs == [Q(-1), Q(1)]
    assert hur.xi_polynomial(1).coeffs == [Q(0), Q(0), Q(-1), Q(1)]
    assert hur.xi_polynomial(2).coeffs == [Q(0), Q(0), Q(0), Q(2), Q(-5), Q(3)]
    for k in range(7):
        assert hur.xi_polynomial(k).degree() == 2 * k + 1
        assert hur.xi_polynomial(k).eval(Q(1)) == 0


def test_xi_frame_consistency():
    """x d/dx on the series side equals t^2(t-1) d/dt on the polynomial side."""
    order = 14
    t_series = TruncatedSeries(
        [Q(1)] + [Q(mu ** mu, math.factorial(mu)) for mu in range(1, order + 1)], "x")

    def compose(poly: UPoly) -> TruncatedSeries:
        acc = TruncatedSeries([Q(0)] * (order + 1), "x")
        for c in reversed(poly.coeffs):
            acc = acc * t_series + TruncatedSeries(
                [c] + [Q(0)] * order, "x")
        return acc

    for k in range(7):
        lhs = compose(hur.xi_polynomial(k))
        # x d/dx acts diagonally on the x-series
        xd = TruncatedSeries([m * c for m, c in enumerate(lhs.coeffs)], "x")
        rhs = compose(hur.xi_polynomial(k + 1))
        assert xd.coeffs == rhs.coeffs


def test_elsv_tables():
    assert hur.elsv_coefficients(0, 3) == {(0, 0, 0): Q(1)}
    table = hur.elsv_coefficients(1, 1)
    assert table == {(1,): Q(1, 24), (0,): Q(-1, 24)}
    # consistency: predicted H_{1,1}(3) equals the recursion value
    predicted = Q(3 ** 3, math.factorial(3)) * (table[(1,)] * 3 + table[(0,)])
    assert predicted == hur.hurwitz_number(1, 1, [3])


def test_elsv_symmetry_of_coefficients():
    table = hur.elsv_coefficients(1, 2)
    for k in table:
        assert tuple(sorted(k, reverse=True)) == k


def test_free_energy_one_one():
    fe = hur.free_energy(1, 1)
    assert fe.terms == {(3,): Q(1, 24), (2,): Q(-1, 24), (1,): Q(-1, 24),
                        (0,): Q(1, 24)}
    assert fe.eval_all([Q(1)]) == 0


LEVELS = [(1, 1), (0, 3), (0, 4), (1, 2), (0, 5), (1, 3), (2, 1)]


@pytest.mark.parametrize("g,n", LEVELS)
def test_free_energy_shape(g, n):
    fe = hur.free_energy(g, n)
    assert fe.is_symmetric()
    assert fe.eval_partial(0, Q(1)).is_zero()
    assert fe.total_degree() <= 6 * g - 6 + 3 * n
    assert all(all(e >= 0 for e in key) for key in fe.terms)


@pytest.mark.parametrize("g,n,ws,cap", [
    (0, 3, (3.0, 3.1, 3.2), 40),
    (1, 1, (3.0,), 40),
    (1, 2, (3.0, 3.1), 30),
    (0, 4, (3.0, 3.1, 3.2, 3.3), 28),
])
def test_free_energy_matches_laplace_sum(g, n, ws, cap):
    xs = [math.exp(-w) for w in ws]
    exact = hur.free_energy_float(g, n, xs)
    direct = hur.laplace_sum_float(g, n, xs, cap)
    assert abs(exact - direct) <= 1e-8 * abs(direct)


@pytest.mark.parametrize("g,n", LEVELS)
def test_recursion_residual_vanishes(g, n):
    assert hur.fh_recursion_residual(g, n).is_zero()


def test_recursion_residual_detects_fault():
    bad = SparseLaurent(1, {(3,): Q(1, 23), (2,): Q(-1, 23),
                            (1,): Q(-1, 24), (0,): Q(1, 24)})
    res = hur.fh_recursion_residual(1, 1, fe_override={(1, 1): bad})
    assert not res.is_zero()


def test_two_point_diagonal_formula():
    """The hard-coded pair-correlation diagonal against a series oracle."""
    order = 12
    t_series = TruncatedSeries(
        [Q(1)] + [Q(mu ** mu, math.factorial(mu)) for mu in range(1, order + 3)], "x")
    dt_dx = t_series.diff()
    dx_dt = dt_dx.reciprocal()
    # sum mu1 mu2 H(mu1,mu2) x^(mu1+mu2-2), then times (dx/dt)^2
    coeffs = [Q(0)] * (order + 1)
    for m1 in range(1, order + 3):
        for m2 in range(1, order + 3):
            k = m1 + m2 - 2
            if k <= order:
                coeffs[k] += m1 * m2 * hur.hurwitz_number(0, 2, [m1, m2])
    series = TruncatedSeries(coeffs, "x") * dx_dt.truncate(order) \
        * dx_dt.truncate(order)
    # the closed form (3t^2+2t+1)/(12 t^4) как x-series
    t4inv = (t_series * t_series * t_series * t_series).reciprocal()
    tsq = t_series * t_series
    closed = (tsq * 3 + t_series * 2
              + TruncatedSeries([Q(1)] + [Q(0)] * (order + 2), "x")) * t4inv
    closed = closed * Q(1, 12)
    assert series.coeffs[:order + 1] == closed.coeffs[:order + 1]


def test_s_coefficients_against_counts():
    # truths pinned by the x^2..x^4 Laplace coefficients of the counts
    assert hur.s_coefficient(2) == UPoly([-1, 1]).pow(2) * UPoly([-3, 5]) * Q(1, 24)
    assert hur.s_coefficient(3) == (UPoly([0, 0, 1]) * UPoly([-1, 1]).pow(2)
                                    * UPoly([6, -20, 15]) * Q(1, 48))
    s4 = hur.s_coefficient(4)
    assert s4.degree() == 9
    assert s4.eval(Q(1)) == 0


def test_s_coefficient_series_matches_counts():
    """Low-order x-expansion of S_2 equals the direct weighted count sums."""
    s2 = hur.s_coefficient(2)
    order = 6
    t_series = TruncatedSeries(
        [Q(1)] + [Q(mu ** mu, math.factorial(mu)) for mu in range(1, order + 1)], "x")
    acc = TruncatedSeries([Q(0)] * (order + 1), "x")
    for c in reversed(s2.coeffs):
        acc = acc * t_series + TruncatedSeries([c] + [Q(0)] * order, "x")
    direct = [Q(0)] * (order + 1)
    for total in range(2, order + 1):
        val = hur.hurwitz_number(1, 1, [total])
        direct[total] += val
        for m1 in range(1, total):
            for m2 in range(1, total - m1 + 1):
                m3 = total - m1 - m2
                if m3 >= 1:
                    direct[total] += hur.hurwitz_number(0, 3, [m1, m2, m3]) / 6
    assert acc.coeffs[:order + 1] == direct


def test_heat_residuals():
    res = hur.heat_residuals(3)
    assert all(r.is_zero() for r in res)
    assert hur.s0_quadratic_identity_residual().is_zero()


def test_heat_residual_detects_fault():
    bad = RatFunc(hur.s_coefficient(2), UPoly([1]), "t") + RatFunc.x("t")
    res = hur.heat_residuals(3, s_override={2: bad})
    assert res[0].is_zero()
    assert not res[1].is_zero()


def test_printed_closed_forms_fail_heat_hierarchy():
    """Negative control: the widely quoted closed z-form for the first WKB
    correction is inconsistent with the heat hierarchy satisfied by the
    actual counts (its lowest x-order is already wrong)."""
    # integrate z^3(4+z^2)/(8(1-z)^5) * (dz in the log frame) from the claim
    # x dS2/dx = that; in t: claimed x dS2/dx = (t-1)^3 (5t^2-2t+1)/(8)
    claimed_logx = substitute_mobius(
        RatFunc(UPoly([0, 0, 0, 4, 0, 1]), UPoly([1, -1]).pow(5) * 8, "z"),
        (Q(1), Q(-1), Q(1), Q(0)), "t")  # z = (t-1)/t
    true_logx = hur.s_prime_logx(2)
    assert claimed_logx != true_logx


def test_lambert_inversion():
    rep = hur.lambert_inversion_check(8)
    assert rep["pass"]
    z = hur.tree_series(5)
    assert z.coeffs[1] == 1
    assert z.coeffs[3] == Q(3, 2)  # 3^2/3!


def test_overdetermination_guard():
    # every table reproduces at least 3 off-grid values (exercised inside)
    for g, n in [(0, 3), (1, 1), (0, 4), (1, 2)]:
        hur.elsv_coefficients(g, n)
