"""Univariate polynomials and reduced rational functions over the rationals.

``UPoly`` is a dense coefficient list (low to high).  ``RatFunc`` keeps a
coprime numerator/denominator pair with monic denominator, so equality is
literal coefficient comparison.  Antiderivatives are computed by partial
fractions over a declared set of linear factors only; a nonzero residue at
a simple pole (which would produce a logarithm) is an error.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateMap, NonzeroResidue, UnfactoredDenominator
from .rationals import QONE, QZERO, qstr, parse_q


class UPoly:
    """Dense univariate polynomial, coefficients low to high."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = cs

    @classmethod
    def const(cls, c: Fraction | int) -> "UPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "UPoly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, n: int, c: Fraction | int = 1) -> "UPoly":
        return cls([0] * n + [Fraction(c)])

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self) -> str:
        return f"UPoly({[qstr(c) for c in self.coeffs]})"

    def __add__(self, other: "UPoly") -> "UPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        out = [QZERO] * n
        for i, c in enumerate(self.coeffs):
            out[i] += c
        for i, c in enumerate(other.coeffs):
            out[i] += c
        return UPoly(out)

    def __sub__(self, other: "UPoly") -> "UPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        out = [QZERO] * n
        for i, c in enumerate(self.coeffs):
            out[i] += c
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return UPoly(out)

    def __neg__(self) -> "UPoly":
        return UPoly([-c for c in self.coeffs])

    def __mul__(self, other: "UPoly | Fraction | int") -> "UPoly":
        if isinstance(other, (Fraction, int)):
            return self.scale(Fraction(other))
        if not self.coeffs or not other.coeffs:
            return UPoly()
        out = [QZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return UPoly(out)

    __rmul__ = __mul__

    def scale(self, c: Fraction) -> "UPoly":
        if c == 0:
            return UPoly()
        return UPoly([a * c for a in self.coeffs])

    def pow(self, n: int) -> "UPoly":
        res = UPoly([1])
        base = self
        while n:
            if n & 1:
                res = res * base
            n >>= 1
            if n:
                base = base * base
        return res

    def divmod(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn = other.coeffs
        dd = other.degree()
        lead = dn[-1]
        if len(rem) - 1 < dd:
            return UPoly(), UPoly(rem)
        quot = [QZERO] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c / lead
            quot[i - dd] = q
            for j, b in enumerate(dn):
                rem[i - dd + j] -= q * b
        return UPoly(quot), UPoly(rem)

    def __floordiv__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[1]

    def monic(self) -> "UPoly":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return UPoly([c / lead for c in self.coeffs])

    def gcd(self, other: "UPoly") -> "UPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        if a.is_zero():
            return a
        return a.monic()

    def diff(self) -> "UPoly":
        return UPoly([c * i for i, c in enumerate(self.coeffs)][1:])

    def integrate(self) -> "UPoly":
        return UPoly([QZERO] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def eval(self, x: Fraction) -> Fraction:
        acc = QZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def compose_linear(self, a: Fraction, b: Fraction) -> "UPoly":
        """p(a*x + b) by Horner."""
        lin = UPoly([b, a])
        acc = UPoly()
        for c in reversed(self.coeffs):
            acc = acc * lin + UPoly([c])
        return acc

    def to_json(self) -> list[str]:
        return [qstr(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Iterable[str]) -> "UPoly":
        return cls([parse_q(c) for c in data])


class RatFunc:
    """Reduced ratio of two univariate polynomials with a variable tag."""

    __slots__ = ("num", "den", "var")

    def __init__(self, num: UPoly, den: UPoly | None = None, var: str = "t",
                 _reduced: bool = False):
        if den is None:
            den = UPoly([1])
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            if num.is_zero():
                den = UPoly([1])
            else:
                g = num.gcd(den)
                if g.degree() > 0:
                    num = num // g
                    den = den // g
                lead = den.coeffs[-1]
                if lead != 1:
                    num = num.scale(1 / lead)
                    den = den.scale(1 / lead)
        self.num = num
        self.den = den
        self.var = var

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, var: str = "t") -> "RatFunc":
        return cls(UPoly(), UPoly([1]), var, _reduced=True)

    @classmethod
    def const(cls, c: Fraction | int, var: str = "t") -> "RatFunc":
        return cls(UPoly([c]), UPoly([1]), var, _reduced=True)

    @classmethod
    def x(cls, var: str = "t") -> "RatFunc":
        return cls(UPoly([0, 1]), UPoly([1]), var, _reduced=True)

    @classmethod
    def from_laurent_dict(cls, d: dict[int, Fraction], var: str = "t") -> "RatFunc":
        """Build from exponent -> coefficient with possibly negative exponents."""
        if not d:
            return cls.zero(var)
        shift = -min(min(d), 0)
        num = [QZERO] * (max(d) + shift + 1)
        for e, c in d.items():
            num[e + shift] = c
        return cls(UPoly(num), UPoly.monomial(shift), var)

    # -- basics ----------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r} / {self.den!r}, var={self.var!r})"

    # -- field operations ---------------------------------------------------------

    def __add__(self, other: "RatFunc | Fraction | int") -> "RatFunc":
        other = self._coerce(other)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den, self.var)

    __radd__ = __add__

    def __sub__(self, other: "RatFunc | Fraction | int") -> "RatFunc":
        other = self._coerce(other)
        return RatFunc(self.num * other.den - other.num * self.den,
                       self.den * other.den, self.var)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, self.var, _reduced=True)

    def __mul__(self, other: "RatFunc | Fraction | int") -> "RatFunc":
        other = self._coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other: "RatFunc | Fraction | int") -> "RatFunc":
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num, self.var)

    def _coerce(self, other: "RatFunc | Fraction | int") -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        return RatFunc.const(Fraction(other), self.var)

    def pow(self, n: int) -> "RatFunc":
        if n < 0:
            inv = RatFunc(self.den, self.num, self.var)
            return inv.pow(-n)
        return RatFunc(self.num.pow(n), self.den.pow(n), self.var)

    # -- calculus -------------------------------------------------------------------

    def diff(self) -> "RatFunc":
        return RatFunc(self.num.diff() * self.den - self.num * self.den.diff(),
                       self.den * self.den, self.var)

    def eval(self, x: Fraction) -> Fraction:
        d = self.den.eval(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {qstr(x)}")
        return self.num.eval(x) / d

    def eval_float(self, x: float) -> float:
        return self.num.eval_float(x) / self.den.eval_float(x)

    def to_json(self) -> dict:
        return {"var": self.var, "num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "RatFunc":
        return cls(UPoly.from_json(data["num"]), UPoly.from_json(data["den"]),
                   data.get("var", "t"))


def differentiate(f: RatFunc) -> RatFunc:
    """d f / d var, in reduced form."""
    return f.diff()


def substitute_mobius(f: RatFunc, coeffs: tuple[Fraction, Fraction, Fraction, Fraction],
                      new_var: str | None = None) -> RatFunc:
    """Substitute var -> (a*u + b)/(c*u + d) into f.

    Raises DegenerateMap when ad - bc = 0.
    """
    a, b, c, d = (Fraction(v) for v in coeffs)
    if a * d - b * c == 0:
        raise DegenerateMap("ad - bc = 0")
    up = UPoly([b, a])
    dn = UPoly([d, c])
    m = max(f.num.degree(), f.den.degree(), 0)

    def homogenize(p: UPoly) -> UPoly:
        acc = UPoly()
        deg = p.degree()
        for i, coeff in enumerate(p.coeffs):
            if coeff == 0:
                continue
            acc = acc + up.pow(i) * dn.pow(m - i) * coeff
        return acc

    num = homogenize(f.num)
    den = homogenize(f.den)
    return RatFunc(num, den, new_var or f.var)


def partial_fractions(f: RatFunc, roots: Sequence[Fraction]
                      ) -> tuple[UPoly, dict[Fraction, dict[int, Fraction]]]:
    """Decompose f as poly + sum of a_{r,k}/(x-r)^k over the declared roots.

    The denominator must factor completely into powers of (x - r) for the
    given roots, otherwise UnfactoredDenominator is raised.
    """
    num, den = f.num, f.den
    lead = den.coeffs[-1] if den.coeffs else QONE
    mults: dict[Fraction, int] = {}
    rest = den
    for r in roots:
        fac = UPoly([-r, 1])
        while True:
            q, rem = rest.divmod(fac)
            if rem.is_zero():
                mults[r] = mults.get(r, 0) + 1
                rest = q
            else:
                break
    if rest.degree() != 0:
        raise UnfactoredDenominator(
            f"denominator factor of degree {rest.degree()} outside declared roots")
    num = num.scale(1 / rest.coeffs[0])

    parts: dict[Fraction, dict[int, Fraction]] = {}
    den_left = UPoly([1])
    for r, e in mults.items():
        den_left = den_left * UPoly([-r, 1]).pow(e)
    for r, e in mults.items():
        fac = UPoly([-r, 1])
        for k in range(e, 0, -1):
            dtilde = den_left // fac.pow(k)
            a = num.eval(r) / dtilde.eval(r)
            if a != 0:
                parts.setdefault(r, {})[k] = a
            num = (num - dtilde.scale(a)) // fac
            den_left = den_left // fac
    # what is left of the denominator is 1, so num is the polynomial part
    return num, parts


def integrate_no_log(f: RatFunc, base_point: Fraction,
                     roots: Sequence[Fraction]) -> RatFunc:
    """The unique antiderivative of f vanishing at base_point.

    Partial fractions over the declared linear factors; a nonzero residue
    at a simple pole raises NonzeroResidue.
    """
    poly, parts = partial_fractions(f, roots)
    anti = RatFunc(poly.integrate(), UPoly([1]), f.var)
    for r, table in parts.items():
        for k, a in table.items():
            if k == 1:
                raise NonzeroResidue(f"residue {qstr(a)} at {qstr(r)}")
            # integral of a/(x-r)^k is a*(x-r)^(1-k)/(1-k)
            anti = anti + RatFunc(UPoly([a / (1 - k)]),
                                  UPoly([-r, 1]).pow(k - 1), f.var)
    return anti - RatFunc.const(anti.eval(Fraction(base_point)), f.var)


def even_part(f: RatFunc, new_var: str = "u") -> RatFunc:
    """Rewrite an even rational function of x as a function of u = x^2."""
    # f(x) = N(x) D(-x) / (D(x) D(-x)); both products must be even.
    def negate(p: UPoly) -> UPoly:
        return UPoly([c if i % 2 == 0 else -c for i, c in enumerate(p.coeffs)])

    num = f.num * negate(f.den)
    den = f.den * negate(f.den)

    def squeeze(p: UPoly) -> UPoly:
        if any(c != 0 for c in p.coeffs[1::2]):
            raise ValueError("function is not even")
        return UPoly(p.coeffs[0::2])

    return RatFunc(squeeze(num), squeeze(den), new_var)
