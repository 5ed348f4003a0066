"""Univariate polynomials and rational functions in z over the parameter field.

The verifier manipulates solutions as exact rational functions of the ODE
variable z, with coefficients in Q(z1, z2).  Polynomials are dense coefficient
tuples; rational functions are reduced via monic Euclidean gcd and kept with
a monic denominator, so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Tuple, Union

from .scalars import ParamScalar

Coeffs = Tuple[ParamScalar, ...]


def _trim(coeffs) -> Coeffs:
    out = list(coeffs)
    while out and out[-1].is_zero:
        out.pop()
    return tuple(out)


class ZPoly:
    """Polynomial in z with ParamScalar coefficients, lowest power first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(
            c if isinstance(c, ParamScalar) else ParamScalar.from_rational(c)
            for c in coeffs
        )

    @classmethod
    def zero(cls) -> "ZPoly":
        return cls()

    @classmethod
    def one(cls) -> "ZPoly":
        return cls((ParamScalar.one(),))

    @classmethod
    def constant(cls, value: ParamScalar) -> "ZPoly":
        return cls((value,))

    @classmethod
    def z(cls) -> "ZPoly":
        return cls((ParamScalar.zero(), ParamScalar.one()))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def leading(self) -> ParamScalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: "ZPoly") -> "ZPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        zero = ParamScalar.zero()
        return ZPoly(
            tuple(
                (self.coeffs[i] if i < len(self.coeffs) else zero)
                + (other.coeffs[i] if i < len(other.coeffs) else zero)
                for i in range(n)
            )
        )

    def __sub__(self, other: "ZPoly") -> "ZPoly":
        return self + (-other)

    def __neg__(self) -> "ZPoly":
        return ZPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "ZPoly") -> "ZPoly":
        if self.is_zero or other.is_zero:
            return ZPoly.zero()
        zero = ParamScalar.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return ZPoly(tuple(out))

    def scale(self, factor: ParamScalar) -> "ZPoly":
        return ZPoly(tuple(factor * c for c in self.coeffs))

    def __pow__(self, n: int) -> "ZPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = ZPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def divmod(self, other: "ZPoly") -> Tuple["ZPoly", "ZPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        quot = [ParamScalar.zero()] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        rem = list(self.coeffs)
        d = other.degree()
        lead = other.leading()
        while len(rem) - 1 >= d and any(not c.is_zero for c in rem):
            while rem and rem[-1].is_zero:
                rem.pop()
            if len(rem) - 1 < d:
                break
            shift = len(rem) - 1 - d
            factor = rem[-1] / lead
            quot[shift] = quot[shift] + factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - factor * c
        return ZPoly(tuple(quot)), ZPoly(tuple(rem))

    def derivative(self) -> "ZPoly":
        return ZPoly(
            tuple(
                self.coeffs[i] * ParamScalar.from_rational(i)
                for i in range(1, len(self.coeffs))
            )
        )

    def evaluate(self, point: ParamScalar) -> ParamScalar:
        acc = ParamScalar.zero()
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def monic(self) -> "ZPoly":
        if self.is_zero:
            return self
        lead = self.leading()
        if lead == ParamScalar.one():
            return self
        return self.scale(ParamScalar.one() / lead)

    def __repr__(self) -> str:
        return f"ZPoly({[str(c) for c in self.coeffs]})"


def zpoly_gcd(a: ZPoly, b: ZPoly) -> ZPoly:
    """Monic gcd by the Euclidean algorithm over the coefficient field."""
    while not b.is_zero:
        a, b = b, a.divmod(b)[1]
    return a.monic()


def divide_by_linear(p: ZPoly, root: ParamScalar) -> Tuple[ZPoly, ParamScalar]:
    """Synthetic division of p by (z - root): quotient and remainder p(root)."""
    acc = ParamScalar.zero()
    quotient = []
    for c in reversed(p.coeffs):
        acc = acc * root + c
        quotient.append(acc)
    remainder = quotient.pop()
    quotient.reverse()
    return ZPoly(tuple(quotient)), remainder


class ZRat:
    """Reduced rational function in z over Q(z1, z2); denominator monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: ZPoly, den: ZPoly = None):
        if den is None:
            den = ZPoly.one()
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self.num = ZPoly.zero()
            self.den = ZPoly.one()
            return
        g = zpoly_gcd(num, den)
        if g.degree() > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        lead = den.leading()
        if not lead == ParamScalar.one():
            inv = ParamScalar.one() / lead
            num = num.scale(inv)
            den = den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def _from_reduced(cls, num: ZPoly, den: ZPoly) -> "ZRat":
        # Internal: caller guarantees gcd(num, den) = 1 and den monic.
        out = cls.__new__(cls)
        out.num = num
        out.den = den
        return out

    @classmethod
    def zero(cls) -> "ZRat":
        return cls(ZPoly.zero())

    @classmethod
    def one(cls) -> "ZRat":
        return cls(ZPoly.one())

    @classmethod
    def from_scalar(cls, value: ParamScalar) -> "ZRat":
        return cls(ZPoly.constant(value))

    @classmethod
    def z(cls) -> "ZRat":
        return cls(ZPoly.z())

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other: "ZRat") -> "ZRat":
        return ZRat(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "ZRat") -> "ZRat":
        return ZRat(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> "ZRat":
        out = ZRat.__new__(ZRat)
        out.num = -self.num
        out.den = self.den
        return out

    def __mul__(self, other: "ZRat") -> "ZRat":
        return ZRat(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "ZRat") -> "ZRat":
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return ZRat(self.num * other.den, self.den * other.num)

    def derivative(self) -> "ZRat":
        return ZRat(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def evaluate(self, point: ParamScalar) -> ParamScalar:
        den_value = self.den.evaluate(point)
        if den_value.is_zero:
            raise ZeroDivisionError("evaluation at a pole of the rational function")
        return self.num.evaluate(point) / den_value

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"ZRat({self.num!r}, {self.den!r})"


def pole_term(
    residue: ParamScalar, location: ParamScalar, order: int
) -> ZRat:
    """residue / (z - location)^order as a rational function of z."""
    linear = ZPoly((-location, ParamScalar.one()))
    return ZRat(ZPoly.constant(residue), linear**order)


def over_pole_powers(
    num: ZPoly, z1: ParamScalar, z2: ParamScalar, order1: int, order2: int
) -> ZRat:
    """num / ((z - z1)^order1 (z - z2)^order2), reduced by direct cancellation.

    The denominator's only irreducible factors are the two known linears, so
    full reduction is repeated synthetic division while the numerator
    vanishes at a pole.  Much cheaper than a generic gcd.
    """
    if num.is_zero:
        return ZRat.zero()

    def cancel(poly: ZPoly, location: ParamScalar, order: int):
        while order > 0:
            quotient, remainder = divide_by_linear(poly, location)
            if not remainder.is_zero:
                break
            poly = quotient
            order -= 1
        return poly, order

    num, order1 = cancel(num, z1, order1)
    num, order2 = cancel(num, z2, order2)
    linear1 = ZPoly((-z1, ParamScalar.one()))
    linear2 = ZPoly((-z2, ParamScalar.one()))
    return ZRat._from_reduced(num, linear1**order1 * linear2**order2)
