"""Catalan model: counts, free energies, WKB coefficients, quantum curve."""

from fractions import Fraction as Q

import pytest

from eocurves import catalan as cat
from eocurves import oracles
from eocurves.errors import InvalidProfile
from eocurves.ratfunc import RatFunc, UPoly


CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012]


def test_base_sequence_is_catalan():
    for m, c in enumerate(CATALAN):
        assert cat.catalan_count(0, 1, [2 * m]) == c


def test_odd_degree_vanishes():
    assert cat.catalan_count(0, 1, [3]) == 0
    assert cat.catalan_count(1, 2, [3, 4]) == 0


def test_invalid_profile():
    with pytest.raises(InvalidProfile):
        cat.catalan_count(0, 0, [])
    with pytest.raises(InvalidProfile):
        cat.dessin_number(0, 1, [0])


def test_one_vertex_counts_match_pairing_oracle():
    for g in (0, 1, 2):
        for m in (1, 2, 3, 4):
            expected = oracles.one_vertex_map_count(g, 2 * m)
            assert cat.catalan_count(g, 1, [2 * m]) == expected


def test_two_vertex_single_edge():
    assert cat.catalan_count(0, 2, [1, 1]) == oracles.two_vertex_single_edge_count()


def test_dessin_numbers():
    assert cat.dessin_number(0, 1, [2]) == Q(1, 2)
    assert cat.dessin_number(0, 1, [4]) == Q(1, 2)
    assert cat.dessin_number(1, 1, [4]) == Q(1, 4)
    # closed form D_{0,1}(2m) = binom(2m, m) / (2m (m+1))
    from math import comb
    for m in range(1, 9):
        assert cat.dessin_number(0, 1, [2 * m]) == Q(comb(2 * m, m), 2 * m * (m + 1))


def test_count_integrality_and_weight_relation():
    import random
    rng = random.Random(0)
    for _ in range(25):
        n = rng.randint(1, 3)
        mu = [rng.randint(1, 6) for _ in range(n)]
        g = rng.randint(0, 2)
        c = cat.catalan_count(g, n, mu)
        assert isinstance(c, int) and c >= 0
        prod = 1
        for m in mu:
            prod *= m
        assert cat.dessin_number(g, n, mu) * prod == c


def test_count_symmetric_in_vertices():
    assert cat.catalan_count(1, 2, [2, 6]) == cat.catalan_count(1, 2, [6, 2])
    assert cat.catalan_count(0, 3, [1, 2, 3]) == cat.catalan_count(0, 3, [3, 1, 2])


# -- curve inversion ----------------------------------------------------------

def test_curve_inversion():
    assert cat.curve_inversion_check(5)["pass"]
    assert cat.curve_inversion_check(1)["pass"]
    bad = cat.curve_inversion_check(4, corrupt={2: Q(3)})
    assert not bad["pass"]
    assert bad["first_failing_x_power"] == -3


# -- free energies ------------------------------------------------------------

LEVELS = [(1, 1), (0, 3), (0, 4), (1, 2), (0, 5), (1, 3), (2, 1)]


def test_free_energy_one_one_closed_form():
    fe = cat.free_energy(1, 1)
    expected = {(-3,): Q(-1, 384), (-1,): Q(3, 128), (0,): Q(1, 24),
                (1,): Q(3, 128), (3,): Q(-1, 384)}
    assert fe.terms == expected


def test_free_energy_three_point_closed_form():
    fe = cat.free_energy(0, 3)
    for pt in ([Q(2), Q(3), Q(5)], [Q(-3), Q(7), Q(2)], [Q(5, 2), Q(1, 3), Q(4)]):
        t1, t2, t3 = pt
        expected = -Q(1, 16) * (t1 + 1) * (t2 + 1) * (t3 + 1) * (1 + 1 / (t1 * t2 * t3))
        assert fe.eval_all(pt) == expected


@pytest.mark.parametrize("g,n", LEVELS)
def test_free_energy_symmetry_and_vanishing(g, n):
    fe = cat.free_energy(g, n)
    assert fe.is_symmetric()
    assert fe.eval_partial(0, Q(-1)).is_zero()


@pytest.mark.parametrize("g,n,xs,cap", [
    (1, 1, [10.0], 60),
    (0, 3, [10.0, 11.0, 12.0], 60),
    (0, 4, [10.0, 11.0, 12.0, 13.0], 32),
    (1, 2, [10.0, 11.0], 40),
    (2, 1, [10.0], 40),
    (0, 5, [10.0, 10.5, 11.0, 11.5, 12.0], 26),
    (1, 3, [10.0, 11.0, 12.0], 30),
])
def test_free_energy_matches_laplace_sum(g, n, xs, cap):
    exact = cat.free_energy_float(g, n, xs)
    direct = cat.laplace_sum_float(g, n, xs, cap)
    assert abs(exact - direct) <= 1e-8 * abs(direct)


def test_euler_characteristic_specialization():
    for g, n in [(1, 1), (0, 3), (1, 2), (2, 1)]:
        value = cat.principal_ratfunc(cat.free_energy(g, n)).eval(Q(1))
        assert value == (-1) ** n * oracles.moduli_euler_characteristic(g, n)


# -- WKB coefficients -----------------------------------------------------------

def s_printed_z(m: int) -> RatFunc:
    """The closed z-forms of S_2..S_4 (typo-resolved denominators)."""
    if m == 2:
        return RatFunc(UPoly([0, 0, 0, 0, 9, 0, 1]),
                       UPoly([1, 0, -1]).pow(3) * 12, "z")
    if m == 3:
        return RatFunc(UPoly([0] * 6 + [5, 0, 5]),
                       UPoly([-1, 0, 1]).pow(6) * 2, "z")
    num = UPoly([0] * 8 + [-4725, 0, -12879, 0, -4524, 0, 36, 0, -9, 0, 1])
    return RatFunc(num, UPoly([-1, 0, 1]).pow(9) * 360, "z")


@pytest.mark.parametrize("m", [2, 3, 4])
def test_s_coefficient_cross_paths_and_table(m):
    assembled = cat.s_coefficient_assembled(m)
    recursive = cat.s_coefficient_recursive(m)
    assert assembled == recursive
    assert cat.to_z(assembled) == s_printed_z(m)
    assert assembled.eval(Q(-1)) == 0


@pytest.mark.parametrize("m", [2, 3, 4])
def test_s_polynomiality_in_s(m):
    p = cat.s_polynomial(cat.s_coefficient_assembled(m))
    assert p.degree() <= 3 * m - 3


def test_schrodinger_residuals_vanish():
    res = cat.schrodinger_residuals(3)
    assert len(res) == 5
    assert all(r.is_zero() for r in res)


def test_schrodinger_residual_detects_fault():
    bad = cat.s_coefficient_assembled(2) + RatFunc.x("t")
    res = cat.schrodinger_residuals(3, s_override={2: bad})
    assert not res[2].is_zero()
    assert res[0].is_zero() and res[1].is_zero()


def test_s1_seed_forms():
    # dS_1/dx = -(t^2-1)(t+1)^2/(16 t^2); dS_0/dx = -z
    t = Q(7, 3)
    z = (t + 1) / (t - 1)
    assert cat.s0_prime_x().eval(t) == -z
    assert cat.s1_prime_x().eval(t) == -(t * t - 1) * (t + 1) ** 2 / (16 * t * t)
