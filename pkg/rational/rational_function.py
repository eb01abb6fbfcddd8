"""The rational function field F_q(x) as canonical reduced fractions."""

from __future__ import annotations

from typing import Union

import numpy as np

from finite_field import FieldElement, FieldSpec, check_same_field
from polynomial import Polynomial

Operand = Union["RationalFunction", Polynomial, FieldElement, int]


class RationalFunction:
    """num/den with gcd(num, den) = 1 and den monic; 0 is stored as 0/1."""

    __slots__ = ("spec", "num", "den")

    def __init__(self, num: Polynomial, den: Polynomial = None):
        spec = num.spec
        if den is None:
            den = Polynomial.one(spec)
        check_same_field(spec, den.spec)
        if den.is_zero:
            raise ZeroDivisionError("Rational function with zero denominator")
        if num.is_zero:
            num, den = num, Polynomial.one(spec)
        elif not den.is_constant:
            common = num.gcd(den)
            if not common.is_constant:
                num, den = num.exact_div(common), den.exact_div(common)
        scale = den.leading.inverse()
        self.spec = spec
        self.num = num.scale(scale)
        self.den = den.scale(scale)

    @classmethod
    def _canonical(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        rf = cls.__new__(cls)
        rf.spec, rf.num, rf.den = num.spec, num, den
        return rf

    @classmethod
    def constant(cls, spec: FieldSpec, c) -> "RationalFunction":
        return cls._canonical(Polynomial.constant(spec, c), Polynomial.one(spec))

    @classmethod
    def x(cls, spec: FieldSpec) -> "RationalFunction":
        return cls._canonical(Polynomial.x(spec), Polynomial.one(spec))

    @classmethod
    def from_json(cls, spec: FieldSpec, data: dict) -> "RationalFunction":
        return cls(Polynomial.from_json(spec, data["num"]), Polynomial.from_json(spec, data["den"]))

    def _coerce(self, other: Operand):
        if isinstance(other, RationalFunction):
            check_same_field(self.spec, other.spec)
            return other
        if isinstance(other, Polynomial):
            check_same_field(self.spec, other.spec)
            return RationalFunction._canonical(other, Polynomial.one(self.spec))
        if isinstance(other, (FieldElement, int, np.integer)):
            return RationalFunction.constant(self.spec, other)
        return None

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._canonical(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero:
            raise ZeroDivisionError("The zero rational function has no inverse")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            return self.inverse() ** (-k)
        # Powers of coprime polynomials stay coprime; leading coefficients stay 1 in den.
        return RationalFunction._canonical(self.num**k, self.den**k)

    def extension_degree(self) -> int:
        """[F_q(x) : F_q(f)] = max(deg num, deg den) for the reduced fraction."""
        if self.is_constant:
            raise ValueError(f"{self} is a constant: F_q(x) has infinite degree over F_q")
        return int(max(self.num.degree, self.den.degree))

    def in_prime_field(self) -> bool:
        return self.num.in_prime_field() and self.den.in_prime_field()

    def __eq__(self, other):
        if isinstance(other, (Polynomial, FieldElement, int, np.integer)):
            other = self._coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        num = str(self.num) if len(self.num.support()) <= 1 else f"({self.num})"
        den = str(self.den) if len(self.den.support()) == 1 else f"({self.den})"
        return f"{num} / {den}"

    def __repr__(self) -> str:
        return f"RationalFunction({self.spec}, {self})"


def rf_new(num: Polynomial, den: Polynomial) -> RationalFunction:
    return RationalFunction(num, den)


def rf_add(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a + b


def rf_mul(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a * b


def rf_pow(a: RationalFunction, k: int) -> RationalFunction:
    return a**k


def rf_inv(a: RationalFunction) -> RationalFunction:
    return a.inverse()


def extension_degree(f: RationalFunction) -> int:
    return f.extension_degree()
