"""Transport of the WKB data onto the curve symbol.

The operators d_n = sum_{r=1}^{n+1} S_{n+1-r}^{(r)}/r! (d/dy)^r are
assembled into D_r via exp(sum h^n d_n) = sum h^r D_r; applying D_r to
the y-derivative tower of the curve symbol, restricted to the curve,
exposes the corrections A_k of the quantized operator order by order.
Both shipped models have A_k = 0 for all k >= 1, which is also how the
coefficients S_n' can be solved for one at a time.

Coefficients live in the curve-uniformizing coordinate z.  Each model
fixes its own base derivative: d/dx for the Catalan curve, the
logarithmic x d/dx for the exponential curve (that is the only frame in
which its S-derivatives stay rational).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Mapping, Sequence

from . import catalan as _catalan
from . import hurwitz as _hurwitz
from .errors import DivisionBySingularSymbol, InsufficientData
from .ratfunc import RatFunc, UPoly, substitute_mobius

Q = Fraction


class YPolyOperator:
    """Polynomial in d/dy with rational-function coefficients in z.

    Coefficients are y-independent, so operator composition is plain
    convolution of the coefficient maps.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, RatFunc] | None = None):
        self.coeffs: dict[int, RatFunc] = {
            r: c for r, c in (coeffs or {}).items() if not c.is_zero()}

    @classmethod
    def identity(cls) -> "YPolyOperator":
        return cls({0: RatFunc.const(1, "z")})

    @classmethod
    def zero(cls) -> "YPolyOperator":
        return cls({})

    def order(self) -> int:
        return max(self.coeffs, default=0)

    def __add__(self, other: "YPolyOperator") -> "YPolyOperator":
        out = dict(self.coeffs)
        for r, c in other.coeffs.items():
            out[r] = out[r] + c if r in out else c
        return YPolyOperator(out)

    def __mul__(self, other: "YPolyOperator") -> "YPolyOperator":
        out: dict[int, RatFunc] = {}
        for r1, c1 in self.coeffs.items():
            for r2, c2 in other.coeffs.items():
                r = r1 + r2
                term = c1 * c2
                out[r] = out[r] + term if r in out else term
        return YPolyOperator(out)

    def scale(self, c: Fraction) -> "YPolyOperator":
        return YPolyOperator({r: v * c for r, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs


class CurveSymbol:
    """On-shell y-derivative tower of a plane-curve symbol.

    ``tower(r)`` is (d/dy)^r A restricted to the curve, as a rational
    function of z; ``dz_factor`` converts the model's base derivative to
    d/dz (base = d/dx for the polynomial curve, x d/dx for the
    exponential one).  ``ordering`` records the normal-ordering rule of
    the quantized operator; neither shipped symbol has mixed monomials,
    so it is metadata only.
    """

    __slots__ = ("model", "tower", "dz_factor", "ordering")

    def __init__(self, model: str, tower: Callable[[int], RatFunc],
                 dz_factor: RatFunc,
                 ordering: str = "derivatives right of multiplication"):
        self.model = model
        self.tower = tower
        self.dz_factor = dz_factor
        self.ordering = ordering


def catalan_symbol() -> CurveSymbol:
    """y^2 + x y + 1 on y = -z, x = z + 1/z; derivative frame d/dx."""
    dy1 = RatFunc(UPoly([1, 0, -1]), UPoly([0, 1]), "z")  # (1 - z^2)/z
    two = RatFunc.const(2, "z")
    zero = RatFunc.zero("z")

    def tower(r: int) -> RatFunc:
        if r == 0:
            return zero
        if r == 1:
            return dy1
        if r == 2:
            return two
        return zero

    dz = RatFunc(UPoly([0, 0, 1]), UPoly([-1, 0, 1]), "z")  # z^2/(z^2-1)
    return CurveSymbol("catalan", tower, dz)


def hurwitz_symbol() -> CurveSymbol:
    """-y + x e^y on y = z, x = z e^{-z}; derivative frame x d/dx."""
    dy1 = RatFunc(UPoly([-1, 1]), UPoly([1]), "z")  # z - 1
    zc = RatFunc.x("z")
    zero = RatFunc.zero("z")

    def tower(r: int) -> RatFunc:
        if r == 0:
            return zero
        if r == 1:
            return dy1
        return zc

    dz = RatFunc(UPoly([0, 1]), UPoly([1, -1]), "z")  # z/(1-z)
    return CurveSymbol("hurwitz", tower, dz)


def curve_symbol(model: str) -> CurveSymbol:
    if model == "catalan":
        return catalan_symbol()
    if model == "hurwitz":
        return hurwitz_symbol()
    raise ValueError(f"unknown model {model!r}")


# ---------------------------------------------------------------------------
# model S-derivatives in z
# ---------------------------------------------------------------------------

Z_OF_T_CATALAN = (Q(1), Q(1), Q(1), Q(-1))   # t = (z+1)/(z-1)
Z_OF_T_HURWITZ = (Q(0), Q(1), Q(-1), Q(1))   # t = 1/(1-z)


def model_s_primes(model: str, m_max: int) -> list[RatFunc]:
    """First base-frame derivatives S_0'..S_max' as functions of z."""
    if model == "catalan":
        primes_t = _catalan._x_frame_primes(m_max)
        return [substitute_mobius(p, Z_OF_T_CATALAN, "z") for p in primes_t]
    if model == "hurwitz":
        out = [substitute_mobius(_hurwitz.s0_prime_w(), Z_OF_T_HURWITZ, "z") * -1,
               substitute_mobius(_hurwitz.s1_prime_w(), Z_OF_T_HURWITZ, "z") * -1]
        for m in range(2, m_max + 1):
            out.append(substitute_mobius(_hurwitz.s_prime_logx(m),
                                         Z_OF_T_HURWITZ, "z"))
        return out
    raise ValueError(f"unknown model {model!r}")


def _derivative_tower(first: RatFunc, dz_factor: RatFunc, depth: int) -> list[RatFunc]:
    """[S^(1), S^(2), ..., S^(depth)] from the first derivative."""
    out = [first]
    for _ in range(depth - 1):
        out.append(dz_factor * out[-1].diff())
    return out


def build_d_operators(order: int, s_primes: Sequence[RatFunc],
                      dz_factor: RatFunc) -> list[YPolyOperator]:
    """The operators D_0..D_order from exp(sum h^n d_n).

    ``s_primes[m]`` must hold the first base-frame derivative of S_m for
    m <= order; higher derivatives are generated with dz_factor.
    """
    if len(s_primes) <= order:
        raise InsufficientData(
            f"need S_0..S_{order}, got {len(s_primes)} entries")
    towers = [_derivative_tower(s_primes[m], dz_factor, order + 1 - m + 1)
              for m in range(order + 1)]

    def little_d(n: int) -> YPolyOperator:
        coeffs: dict[int, RatFunc] = {}
        for r in range(1, n + 2):
            m = n + 1 - r
            coeffs[r] = towers[m][r - 1] * Q(1, factorial(r))
        return YPolyOperator(coeffs)

    # exp of the h-graded sum, collected by h-power
    ds = [little_d(n) for n in range(1, order + 1)]
    result = [YPolyOperator.identity()] + [YPolyOperator.zero()] * order
    # power series: sum_k (sum_n h^n d_n)^k / k!
    power = [YPolyOperator.identity()] + [YPolyOperator.zero()] * order
    for k in range(1, order + 1):
        nxt = [YPolyOperator.zero() for _ in range(order + 1)]
        for h1 in range(k - 1, order):
            if power[h1].is_zero():
                continue
            for nn in range(1, order - h1 + 1):
                nxt[h1 + nn] = nxt[h1 + nn] + power[h1] * ds[nn - 1]
        power = nxt
        inv = Q(1, factorial(k))
        for h in range(order + 1):
            if not power[h].is_zero():
                result[h] = result[h] + power[h].scale(inv)
    return result


def apply_to_symbol(op: YPolyOperator, curve: CurveSymbol) -> RatFunc:
    """sum_r coeff_r * (d/dy)^r A, restricted to the curve."""
    total = RatFunc.zero("z")
    for r, c in op.coeffs.items():
        t = curve.tower(r)
        if not t.is_zero():
            total = total + c * t
    return total


def recover_corrections(model: str, order: int,
                        s_primes: Sequence[RatFunc] | None = None
                        ) -> list[RatFunc]:
    """A_1..A_order solved from the transport hierarchy.

    Both shipped models must return identically zero functions.  The
    recovered corrections are y-independent, so only D_n applied to the
    base symbol feeds each step.
    """
    curve = curve_symbol(model)
    if s_primes is None:
        s_primes = model_s_primes(model, order)
    ops = build_d_operators(order, s_primes, curve.dz_factor)
    corrections: list[RatFunc] = []
    for n in range(1, order + 1):
        known = apply_to_symbol(ops[n], curve)
        # D_r applied to an already-recovered scalar A_k contributes only
        # through its (d/dy)^0 part, which is empty for r >= 1
        corrections.append(-known)
    return corrections


def s_prime_from_hierarchy(model: str, n: int) -> RatFunc:
    """Solve the order-n transport equation for the base-frame S_n'.

    D_n A = S_n' (dA/dy) + lower-order data on the curve; the shipped
    models make every full order vanish, so S_n' = -(known)/(dA/dy).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    curve = curve_symbol(model)
    lower = model_s_primes(model, n - 1)
    padded = list(lower) + [RatFunc.zero("z")]
    ops = build_d_operators(n, padded, curve.dz_factor)
    known = apply_to_symbol(ops[n], curve)
    dy1 = curve.tower(1)
    if dy1.is_zero():
        raise DivisionBySingularSymbol("dA/dy vanishes on the curve")
    return -known / dy1
