"""Foundation layer: Laurent polynomials, rational functions, series, solver."""

from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eocurves.errors import (
    DegenerateMap,
    ExactDivisionError,
    NonzeroResidue,
    SeriesOrderError,
    SingularMatrix,
    UnfactoredDenominator,
)
from eocurves.laurent import (
    BinomialFraction,
    SparseLaurent,
    factor_diff,
    factor_lin,
    factor_sum,
)
from eocurves.linsolve import solve_exact
from eocurves.ratfunc import (
    RatFunc,
    UPoly,
    differentiate,
    even_part,
    integrate_no_log,
    substitute_mobius,
)
from eocurves.rationals import parse_q, qstr
from eocurves.series import TruncatedSeries


# -- strategies -----------------------------------------------------------

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def laurent_polys(arity: int, max_terms: int = 5):
    keys = st.tuples(*[st.integers(min_value=-3, max_value=3)] * arity)
    return st.dictionaries(keys, rationals, max_size=max_terms).map(
        lambda d: SparseLaurent(arity, d))


mobius = st.tuples(rationals, rationals, rationals, rationals).filter(
    lambda m: m[0] * m[3] - m[1] * m[2] != 0)


def ratfuncs():
    coeffs = st.lists(rationals, min_size=1, max_size=4)
    return st.tuples(coeffs, coeffs).filter(lambda p: any(c != 0 for c in p[1])).map(
        lambda p: RatFunc(UPoly(p[0]), UPoly(p[1])))


# -- rationals --------------------------------------------------------------

def test_rational_encoding_roundtrip():
    for x in (Q(0), Q(-3), Q(22, 7), Q(-5, 9)):
        assert parse_q(qstr(x)) == x
    assert qstr(Q(4, 2)) == "2"
    assert qstr(Q(-1, 3)) == "-1/3"


# -- SparseLaurent -----------------------------------------------------------

@settings(max_examples=60)
@given(laurent_polys(2), laurent_polys(2), laurent_polys(2))
def test_laurent_ring_laws(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert (f * g) * h == f * (g * h)
    assert f + g == g + f
    assert f - f == SparseLaurent.zero(2)


@given(laurent_polys(2), laurent_polys(2))
@settings(max_examples=40)
def test_laurent_eval_homomorphism(f, g):
    pt = [Q(3, 2), Q(-5, 3)]
    assert (f * g).eval_all(pt) == f.eval_all(pt) * g.eval_all(pt)
    assert (f + g).eval_all(pt) == f.eval_all(pt) + g.eval_all(pt)


def test_laurent_diff_integrate_inverse():
    f = SparseLaurent(1, {(3,): Q(2), (-2,): Q(5), (0,): Q(7)})
    g = f.integrate(0, base=Q(-1))
    assert g.diff(0) == f
    assert g.eval_all([Q(-1)]) == 0


def test_laurent_integrate_log_case():
    f = SparseLaurent(1, {(-1,): Q(1)})
    with pytest.raises(NonzeroResidue):
        f.integrate(0)


def test_laurent_binomial_division():
    t1 = SparseLaurent.var(2, 0)
    t2 = SparseLaurent.var(2, 1)
    f = (t1 * t1 - t2 * t2) * (t1 + t2).pow(2)
    q = f.divide_var_binomial(0, 1, +1)
    assert q == (t1 + t2).pow(3)
    with pytest.raises(ExactDivisionError):
        (t1 * t1 + t2 * t2).divide_var_binomial(0, 1, +1)


def test_laurent_division_with_negative_exponents():
    inv1 = SparseLaurent.var(2, 0, -1)
    inv2 = SparseLaurent.var(2, 1, -1)
    q = (inv1 - inv2).divide_var_binomial(0, 1, +1)
    assert q == SparseLaurent(2, {(-1, -1): Q(-1)})


def test_laurent_linear_division():
    t = SparseLaurent.var(1, 0)
    f = (t - SparseLaurent.const(1, 1)).pow(3)
    q = f.divide_var_linear(0, Q(1))
    assert q == (t - SparseLaurent.const(1, 1)).pow(2)


def test_binomial_fraction_clears():
    t1 = SparseLaurent.var(2, 0)
    t2 = SparseLaurent.var(2, 1)
    a = BinomialFraction(t1 * t1 - t2 * t2).div_factor(factor_diff(0, 1)[0])
    b = BinomialFraction(t1 + t2)
    assert (a - b).finalize().is_zero()
    c = BinomialFraction(t1 * t1 - SparseLaurent.const(2, 1)).div_factor(
        factor_lin(0, Q(1)))
    assert c.finalize() == t1 + SparseLaurent.const(2, 1)
    d = BinomialFraction(t1.pow(2) - t2.pow(2)).div_factor(factor_sum(0, 1))
    assert d.finalize() == t1 - t2


def test_laurent_symmetry_and_principal():
    t1 = SparseLaurent.var(2, 0)
    t2 = SparseLaurent.var(2, 1)
    f = t1 * t2 + t1 + t2
    assert f.is_symmetric()
    assert not (t1 - t2).is_symmetric()
    assert f.principal() == {2: Q(1), 1: Q(2)}


# -- RatFunc ----------------------------------------------------------------

def test_differentiate_power_rule():
    f = RatFunc(UPoly([0, 0, 1]))  # t^2
    assert differentiate(f) == RatFunc(UPoly([0, 2]))
    assert differentiate(RatFunc.const(5)).is_zero()


def test_differentiate_matches_finite_difference():
    # f = z^4 (9 + z^2) / (12 (1 - z^2)^3)
    num = UPoly([0, 0, 0, 0, 9, 0, 1])
    den = UPoly([1, 0, -1]).pow(3) * 12
    f = RatFunc(num, den, var="z")
    df = differentiate(f)
    z, h = Q(1, 3), Q(1, 10 ** 5)
    fd = (-f.eval(z + 2 * h) + 8 * f.eval(z + h)
          - 8 * f.eval(z - h) + f.eval(z - 2 * h)) / (12 * h)
    assert abs(float(fd) - df.eval_float(1 / 3)) < 1e-12 * max(1.0, abs(float(fd)))


def test_integrate_no_log_basic():
    f = RatFunc(UPoly([0, 0, 3]))  # 3t^2
    g = integrate_no_log(f, Q(-1), [Q(0), Q(1), Q(-1)])
    assert g == RatFunc(UPoly([1, 0, 0, 1]))


def test_integrate_no_log_rejects_log():
    f = RatFunc(UPoly([1]), UPoly([0, 1]))  # 1/t
    with pytest.raises(NonzeroResidue):
        integrate_no_log(f, Q(1), [Q(0)])


def test_integrate_no_log_unfactored():
    f = RatFunc(UPoly([1]), UPoly([2, 0, 1]))  # 1/(t^2+2)
    with pytest.raises(UnfactoredDenominator):
        integrate_no_log(f, Q(1), [Q(0), Q(1)])


@given(ratfuncs())
@settings(max_examples=40)
def test_diff_then_integrate_identity(f):
    # force a denominator supported on the allowed factors
    den = UPoly([0, 1]).pow(2) * UPoly([-1, 1]) * UPoly([1, 1])
    g = RatFunc(f.num, den)
    base = Q(2)
    df = differentiate(g)
    try:
        h = integrate_no_log(df, base, [Q(0), Q(1), Q(-1)])
    except NonzeroResidue:
        return  # g itself had a log-free derivative only up to residues
    diff = h - (g - RatFunc.const(g.eval(base)))
    assert diff.is_zero()


def test_substitute_mobius_examples():
    z = RatFunc.x("z")
    m = (Q(1), Q(1), Q(1), Q(-1))  # z -> (t+1)/(t-1)
    assert substitute_mobius(z, m, "t") == RatFunc(UPoly([1, 1]), UPoly([-1, 1]), "t")
    # z^2/(z^2-1) -> (t+1)^2/(4t)
    f = RatFunc(UPoly([0, 0, 1]), UPoly([-1, 0, 1]), "z")
    g = substitute_mobius(f, m, "t")
    expect = RatFunc(UPoly([1, 2, 1]), UPoly([0, 4]), "t")
    assert g == expect
    for pt in (Q(2), Q(3), Q(5, 2), Q(-7, 3), Q(9)):
        zval = (pt + 1) / (pt - 1)
        assert g.eval(pt) == f.eval(zval)
    with pytest.raises(DegenerateMap):
        substitute_mobius(z, (Q(1), Q(2), Q(2), Q(4)))


@given(ratfuncs(), mobius, mobius)
@settings(max_examples=30)
def test_mobius_composition(f, m1, m2):
    a1, b1, c1, d1 = m1
    a2, b2, c2, d2 = m2
    # applying m1 then m2 equals applying the matrix product m1*m2
    comp = (a1 * a2 + b1 * c2, a1 * b2 + b1 * d2,
            c1 * a2 + d1 * c2, c1 * b2 + d1 * d2)
    if comp[0] * comp[3] - comp[1] * comp[2] == 0:
        return
    lhs = substitute_mobius(substitute_mobius(f, m1), m2)
    rhs = substitute_mobius(f, comp)
    assert lhs == rhs


@given(ratfuncs())
@settings(max_examples=40)
def test_float_vs_exact_eval(f):
    pts = [Q(1, 3), Q(7, 2), Q(-9, 4), Q(11, 5), Q(13, 7),
           Q(-2, 9), Q(5), Q(-8, 3), Q(17, 6), Q(3, 11)]
    for pt in pts:
        try:
            exact = f.eval(pt)
        except ZeroDivisionError:
            continue
        approx = f.eval_float(float(pt))
        scale = max(1.0, abs(float(exact)))
        if abs(float(exact)) > 1e12:
            continue
        assert abs(approx - float(exact)) <= 1e-10 * scale


def test_even_part():
    # z^4 (9+z^2) / (1-z^2)^3 is even
    f = RatFunc(UPoly([0, 0, 0, 0, 9, 0, 1]), UPoly([1, 0, -1]).pow(3), "z")
    g = even_part(f, "u")
    assert g == RatFunc(UPoly([0, 0, 9, 1]), UPoly([1, -1]).pow(3), "u")
    with pytest.raises(ValueError):
        even_part(RatFunc(UPoly([0, 1])), "u")


# -- solver --------------------------------------------------------------------

def test_solve_identity():
    b = [Q(3), Q(-7), Q(1, 2)]
    eye = [[Q(int(i == j)) for j in range(3)] for i in range(3)]
    assert solve_exact(eye, b) == b


def test_solve_vandermonde():
    # nodes 1, 2 with rhs (3, 5): p(x) = 1 + 2x
    m = [[Q(1), Q(1)], [Q(1), Q(2)]]
    assert solve_exact(m, [Q(3), Q(5)]) == [Q(1), Q(2)]


def test_solve_singular():
    with pytest.raises(SingularMatrix):
        solve_exact([[Q(0), Q(0)], [Q(0), Q(0)]], [Q(1), Q(2)])


@given(st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=3, max_size=3),
       st.lists(rationals, min_size=3, max_size=3))
@settings(max_examples=30)
def test_solve_random_systems(m, b):
    try:
        x = solve_exact(m, b)
    except SingularMatrix:
        return
    for row, bi in zip(m, b):
        assert sum(r * v for r, v in zip(row, x)) == bi


# -- series ------------------------------------------------------------------------

def test_series_strict_access():
    s = TruncatedSeries([1, 2, 3], "x")
    assert s[2] == 3
    with pytest.raises(SeriesOrderError):
        s[3]


def test_series_exp_reciprocal():
    # exp(x) * exp(-x) = 1
    x = TruncatedSeries([0, 1] + [0] * 8, "x")
    e = x.exp()
    assert e[3] == Q(1, 6)
    prod = e * (-x).exp()
    assert prod.coeffs == [Q(1)] + [Q(0)] * 9
    r = e.reciprocal()
    assert r.coeffs == (-x).exp().coeffs


@given(laurent_polys(2), st.sampled_from([(0, 1, 1), (0, 1, -1), (1, 0, 1)]))
@settings(max_examples=40)
def test_binomial_division_roundtrip(f, spec):
    a, b, sign = spec
    factor = SparseLaurent.var(2, a) + SparseLaurent.var(2, b).scale(Q(-sign))
    assert (f * factor).divide_var_binomial(a, b, sign) == f


@given(laurent_polys(2), rationals)
@settings(max_examples=40)
def test_linear_division_roundtrip(f, c):
    factor = SparseLaurent.var(2, 0) - SparseLaurent.const(2, c)
    assert (f * factor).divide_var_linear(0, c) == f


@given(laurent_polys(3, max_terms=4))
@settings(max_examples=30)
def test_laurent_json_roundtrip(f):
    assert SparseLaurent.from_json(3, f.to_json()) == f


@given(ratfuncs())
@settings(max_examples=30)
def test_ratfunc_json_roundtrip(f):
    assert RatFunc.from_json(f.to_json()) == f


@given(laurent_polys(2), laurent_polys(2))
@settings(max_examples=30)
def test_laurent_diff_is_derivation(f, g):
    lhs = (f * g).diff(0)
    rhs = f.diff(0) * g + f * g.diff(0)
    assert lhs == rhs
