"""
Exact rational arithmetic and univariate polynomial algebra over Q.

Every identity checked by this package that holds exactly is checked here
with ``fractions.Fraction`` coefficients, so a "zero" result is a true zero and
not a small float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Tuple, Union

from core.errors import DomainError

Rational = Fraction
Scalar = Union[int, Fraction]


def as_rational(value) -> Fraction:
    """Coerce int / Fraction / "p/q" text to a Fraction. Floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise DomainError(f"not a rational literal: {value!r}") from e
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """Serialize as "p/q" (or "p" for integers)."""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def pochhammer(a: Scalar, n: int) -> Fraction:
    """Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1."""
    if n < 0:
        raise DomainError(f"pochhammer length must be nonnegative, got {n}")
    a = as_rational(a)
    result = Fraction(1)
    for i in range(n):
        result *= a + i
        if not result:
            break
    return result


def is_rational_square(value: Scalar) -> bool:
    value = as_rational(value)
    if value < 0:
        return False
    num, den = value.numerator, value.denominator
    return math.isqrt(num) ** 2 == num and math.isqrt(den) ** 2 == den


class MobiusResult(NamedTuple):
    numerator: "RationalPoly"
    cleared_power: int  # numerator = p((a+bx)/(c+dx)) * (c+dx)**cleared_power


@dataclass(frozen=True)
class RationalPoly:
    """Polynomial with Fraction coefficients; coeffs[i] multiplies x**i.

    Trailing zeros are stripped on construction, so the zero polynomial is the
    empty tuple and equality is canonical.
    """

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = [as_rational(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "RationalPoly":
        return cls(())

    @classmethod
    def constant(cls, value: Scalar) -> "RationalPoly":
        return cls((value,))

    @classmethod
    def x(cls) -> "RationalPoly":
        return cls((0, 1))

    @classmethod
    def linear(cls, c0: Scalar, c1: Scalar) -> "RationalPoly":
        """c0 + c1*x"""
        return cls((c0, c1))

    # -- basic properties -------------------------------------------------

    @property
    def degree(self) -> int:
        """len(coeffs) - 1; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "RationalPoly":
        if isinstance(other, RationalPoly):
            return other
        return RationalPoly.constant(as_rational(other))

    def __add__(self, other) -> "RationalPoly":
        other = self._coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(
            tuple(self.coefficient(i) + other.coefficient(i) for i in range(size))
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "RationalPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            factor = as_rational(other)
            return RationalPoly(tuple(c * factor for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return RationalPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPoly(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "RationalPoly":
        scalar = as_rational(scalar)
        if not scalar:
            raise ZeroDivisionError("polynomial divided by zero scalar")
        return RationalPoly(tuple(c / scalar for c in self.coeffs))

    def __pow__(self, exponent: int) -> "RationalPoly":
        if exponent < 0:
            raise DomainError("negative polynomial power")
        result = RationalPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- evaluation and calculus ------------------------------------------

    def evaluate(self, x):
        """Horner evaluation; exact for int/Fraction arguments, float otherwise."""
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        xf = float(x)
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * xf + float(c)
        return acc

    __call__ = evaluate

    def derivative(self) -> "RationalPoly":
        return RationalPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def scale_argument(self, b: Scalar) -> "RationalPoly":
        """p(b*x)"""
        b = as_rational(b)
        out, power = [], Fraction(1)
        for c in self.coeffs:
            out.append(c * power)
            power *= b
        return RationalPoly(tuple(out))

    def mobius_substitute(self, a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> MobiusResult:
        """p((a+bx)/(c+dx)) * (c+dx)**deg(p), returned with the cleared power."""
        a, b, c, d = (as_rational(v) for v in (a, b, c, d))
        if b == 0 and d == 0:
            raise DomainError("Mobius substitution needs b or d nonzero")
        if c == 0 and d == 0:
            raise DomainError("Mobius substitution with zero denominator")
        if self.is_zero:
            return MobiusResult(RationalPoly.zero(), 0)
        deg = self.degree
        top = RationalPoly.linear(a, b)
        bottom = RationalPoly.linear(c, d)
        top_powers = [RationalPoly.constant(1)]
        bottom_powers = [RationalPoly.constant(1)]
        for _ in range(deg):
            top_powers.append(top_powers[-1] * top)
            bottom_powers.append(bottom_powers[-1] * bottom)
        total = RationalPoly.zero()
        for i, coeff in enumerate(self.coeffs):
            if coeff:
                total = total + top_powers[i] * bottom_powers[deg - i] * coeff
        return MobiusResult(total, deg)

    # -- normalisation ----------------------------------------------------

    def monic(self) -> "RationalPoly":
        if self.is_zero:
            return self
        return self / self.leading_coefficient

    def primitive_part(self) -> "RationalPoly":
        """Integer coefficients with gcd 1 and positive leading coefficient."""
        if self.is_zero:
            return self
        lcm = 1
        for c in self.coeffs:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return RationalPoly(tuple(Fraction(v, g) for v in ints))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            text = format_rational(c)
            terms.append(text if i == 0 else f"({text})*x^{i}")
        return " + ".join(terms)


def poly_divmod(p: RationalPoly, q: RationalPoly) -> Tuple[RationalPoly, RationalPoly]:
    """Euclidean division over Q: p = quotient*q + remainder, deg remainder < deg q."""
    if q.is_zero:
        raise ZeroDivisionError("polynomial division by zero polynomial")
    rem = list(p.coeffs)
    quot = [Fraction(0)] * max(len(rem) - q.degree, 1)
    lead = q.leading_coefficient
    while len(rem) - 1 >= q.degree and rem:
        shift = len(rem) - 1 - q.degree
        factor = rem[-1] / lead
        quot[shift] = factor
        for i, c in enumerate(q.coeffs):
            rem[i + shift] -= factor * c
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return RationalPoly(tuple(quot)), RationalPoly(tuple(rem))


def poly_gcd(p: RationalPoly, q: RationalPoly) -> RationalPoly:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    a, b = p, q
    while not b.is_zero:
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def _pseudo_remainder(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    """R with lc(b)**(deg a - deg b + 1) * a = b*Q + R, computed without division."""
    lead = b.leading_coefficient
    rem = a
    e = a.degree - b.degree + 1
    while not rem.is_zero and rem.degree >= b.degree:
        shift = rem.degree - b.degree
        term = RationalPoly((0,) * shift + (rem.leading_coefficient,))
        rem = rem * lead - term * b
        e -= 1
    return rem * (lead**e)


def poly_resultant(p: RationalPoly, q: RationalPoly) -> Fraction:
    """Resultant in the Sylvester-determinant convention, by the subresultant PRS."""
    if p.is_zero or q.is_zero:
        raise DomainError("undefined resultant: zero polynomial argument")
    a, b = p, q
    sign = 1
    if a.degree < b.degree:
        a, b = b, a
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            sign = -1
    g = Fraction(1)
    h = Fraction(1)
    while b.degree > 0:
        delta = a.degree - b.degree
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            sign = -sign
        rem = _pseudo_remainder(a, b)
        a, b = b, rem / (g * h**delta)
        if b.is_zero:
            return Fraction(0)
        g = a.leading_coefficient
        h = h ** (1 - delta) * g**delta
    h = h ** (1 - a.degree) * b.leading_coefficient**a.degree
    return sign * h


def poly_discriminant(p: RationalPoly) -> Fraction:
    """(-1)**(d(d-1)/2) * Res(p, p') / lc(p), d = deg p >= 1."""
    d = p.degree
    if d < 1:
        raise DomainError("discriminant of a constant polynomial is undefined")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * poly_resultant(p, p.derivative()) / p.leading_coefficient
