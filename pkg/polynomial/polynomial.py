"""Dense univariate polynomials over F_q.

Coefficients are numpy int64 vectors of field-element codes in ascending
powers of x, trimmed so the last entry is nonzero. The zero polynomial is the
empty vector and has degree NEG_INF.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from finite_field import FieldElement, FieldSpec, check_same_field, enumerate_elements

NEG_INF = float("-inf")

Scalar = Union[FieldElement, int]


def _trimmed(coeffs: np.ndarray) -> np.ndarray:
    nonzero = np.flatnonzero(coeffs)
    end = nonzero[-1] + 1 if len(nonzero) else 0
    return coeffs[:end]


def convolve(spec: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of two code vectors; schoolbook via np.convolve on base-p digit planes."""
    if not len(a) or not len(b):
        return np.zeros(0, dtype=np.int64)
    if len(b) == 1:
        return spec.mul_table[b[0], a]
    if len(a) == 1:
        return spec.mul_table[a[0], b]
    p, n = spec.p, spec.n
    if n == 1:
        return np.convolve(a, b) % p

    digits_a, digits_b = spec.digits[a], spec.digits[b]
    planes = np.zeros((len(a) + len(b) - 1, 2 * n - 1), dtype=np.int64)
    for i in range(n):
        if not digits_a[:, i].any():
            continue
        for j in range(n):
            if not digits_b[:, j].any():
                continue
            planes[:, i + j] += np.convolve(digits_a[:, i], digits_b[:, j])
    reduced = ((planes % p) @ spec.reduce_matrix) % p
    return reduced @ spec.place_values


class Polynomial:
    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: Iterable[int] = ()):
        array = np.array(coeffs, dtype=np.int64).reshape(-1)
        if len(array) and (array.min() < 0 or array.max() >= spec.q):
            raise ValueError(f"Coefficient codes must lie in [0, {spec.q})")
        array = _trimmed(array).copy()
        array.setflags(write=False)
        self.spec = spec
        self.coeffs = array

    @classmethod
    def _raw(cls, spec: FieldSpec, coeffs: np.ndarray) -> "Polynomial":
        poly = cls.__new__(cls)
        array = np.ascontiguousarray(_trimmed(coeffs), dtype=np.int64)
        array.setflags(write=False)
        poly.spec = spec
        poly.coeffs = array
        return poly

    @classmethod
    def zero(cls, spec: FieldSpec) -> "Polynomial":
        return cls._raw(spec, np.zeros(0, dtype=np.int64))

    @classmethod
    def one(cls, spec: FieldSpec) -> "Polynomial":
        return cls.constant(spec, 1)

    @classmethod
    def constant(cls, spec: FieldSpec, c: Scalar) -> "Polynomial":
        return cls._raw(spec, np.array([spec.element(c).value], dtype=np.int64))

    @classmethod
    def monomial(cls, spec: FieldSpec, degree: int, c: Scalar = 1) -> "Polynomial":
        coeffs = np.zeros(degree + 1, dtype=np.int64)
        coeffs[degree] = spec.element(c).value
        return cls._raw(spec, coeffs)

    @classmethod
    def x(cls, spec: FieldSpec) -> "Polynomial":
        return cls.monomial(spec, 1)

    @classmethod
    def linear(cls, spec: FieldSpec, a: Scalar, b: Scalar) -> "Polynomial":
        """a*x + b"""
        return cls._raw(spec, np.array([spec.element(b).value, spec.element(a).value], dtype=np.int64))

    @classmethod
    def from_json(cls, spec: FieldSpec, data: Sequence[Sequence[int]]) -> "Polynomial":
        return cls._raw(spec, np.array([spec.encode(digits) for digits in data], dtype=np.int64))

    @classmethod
    def random(cls, spec: FieldSpec, degree: int, rng: np.random.Generator) -> "Polynomial":
        """Uniform coefficients up to `degree`; the result may have lower degree."""
        return cls._raw(spec, rng.integers(0, spec.q, size=degree + 1))

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if len(self.coeffs) else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not len(self.coeffs)

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> FieldElement:
        if self.is_zero:
            return self.spec.zero
        return FieldElement(self.spec, int(self.coeffs[-1]))

    def coefficient(self, i: int) -> FieldElement:
        if 0 <= i < len(self.coeffs):
            return FieldElement(self.spec, int(self.coeffs[i]))
        return self.spec.zero

    def coefficients(self) -> List[FieldElement]:
        return [FieldElement(self.spec, int(c)) for c in self.coeffs]

    def support(self) -> List[int]:
        """Exponents with a nonzero coefficient, ascending."""
        return [int(i) for i in np.flatnonzero(self.coeffs)]

    def in_prime_field(self) -> bool:
        return bool(np.all(self.coeffs < self.spec.p))

    def _coerce(self, other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            check_same_field(self.spec, other.spec)
            return other
        if isinstance(other, (FieldElement, int, np.integer)):
            return Polynomial.constant(self.spec, other)
        return None

    def _padded(self, other: "Polynomial") -> Tuple[np.ndarray, np.ndarray]:
        length = max(len(self.coeffs), len(other.coeffs))
        a = np.zeros(length, dtype=np.int64)
        b = np.zeros(length, dtype=np.int64)
        a[: len(self.coeffs)] = self.coeffs
        b[: len(other.coeffs)] = other.coeffs
        return a, b

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._padded(other)
        return Polynomial._raw(self.spec, self.spec.add_table[a, b])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._padded(other)
        return Polynomial._raw(self.spec, self.spec.sub_table[a, b])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Polynomial._raw(self.spec, self.spec.neg_table[self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial._raw(self.spec, convolve(self.spec, self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError(f"Polynomial exponent must be non-negative, got {k}")
        result = Polynomial.one(self.spec)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divrem(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        divisor_poly = self._coerce(other)
        if divisor_poly is None:
            raise TypeError(f"Cannot divide a polynomial by {type(other).__name__}")
        other = divisor_poly
        if other.is_zero:
            raise ZeroDivisionError("Polynomial division by the zero polynomial")
        spec = self.spec
        db = len(other.coeffs) - 1
        if len(self.coeffs) - 1 < db:
            return Polynomial.zero(spec), self

        remainder = self.coeffs.copy()
        divisor = other.coeffs
        lead_inv = spec.inv_table[divisor[-1]]
        quotient = np.zeros(len(remainder) - db, dtype=np.int64)
        for shift in range(len(remainder) - 1 - db, -1, -1):
            lead = remainder[shift + db]
            if lead:
                coef = spec.mul_table[lead, lead_inv]
                quotient[shift] = coef
                window = remainder[shift : shift + db + 1]
                remainder[shift : shift + db + 1] = spec.sub_table[window, spec.mul_table[coef, divisor]]
        return Polynomial._raw(spec, quotient), Polynomial._raw(spec, remainder[:db])

    def __mod__(self, other):
        return self.divrem(other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        quotient, remainder = self.divrem(other)
        if not remainder.is_zero:
            raise ValueError(f"{other} does not divide {self}")
        return quotient

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self.scale(self.leading.inverse())

    def scale(self, c: Scalar) -> "Polynomial":
        c = self.spec.element(c)
        return Polynomial._raw(self.spec, self.spec.mul_table[c.value, self.coeffs])

    def gcd(self, other: "Polynomial") -> "Polynomial":
        other = self._coerce(other)
        if self.is_zero and other.is_zero:
            raise ValueError("gcd(0, 0) is undefined")
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def __call__(self, v: Scalar) -> FieldElement:
        v = self.spec.element(v)
        add_table, mul_table = self.spec.add_table, self.spec.mul_table
        acc = 0
        for c in self.coeffs[::-1]:
            acc = int(add_table[mul_table[acc, v.value], c])
        return FieldElement(self.spec, acc)

    def __eq__(self, other):
        if isinstance(other, (FieldElement, int, np.integer)):
            other = Polynomial.constant(self.spec, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.spec == other.spec and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.spec, self.coeffs.tobytes()))

    def __bool__(self):
        return not self.is_zero

    def to_json(self) -> List[List[int]]:
        return [[int(d) for d in self.spec.digits[c]] for c in self.coeffs]

    def __str__(self) -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            code = int(self.coeffs[i])
            if not code:
                continue
            coef = self.spec.render_code(code)
            if i == 0:
                terms.append(coef)
                continue
            if not coef.isdigit():
                coef = f"({coef})"
            power = "x" if i == 1 else f"x^{i}"
            terms.append(power if code == 1 else f"{coef}{power}")
        return "+".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"Polynomial({self.spec}, {self})"


def p_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def p_sub(a: Polynomial, b: Polynomial) -> Polynomial:
    return a - b


def p_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def p_pow(a: Polynomial, k: int) -> Polynomial:
    return a**k


def p_divrem(a: Polynomial, b: Polynomial) -> Tuple[Polynomial, Polynomial]:
    return a.divrem(b)


def p_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    return a.gcd(b)


def p_eval(a: Polynomial, v: FieldElement) -> FieldElement:
    return a(v)


def vanishing_polynomial(spec: FieldSpec) -> Polynomial:
    """The expanded product of (x - alpha) over every alpha in F_q."""
    result = Polynomial.one(spec)
    for alpha in enumerate_elements(spec):
        result = result * Polynomial.linear(spec, 1, -alpha)
    return result


def x_q_minus_x(spec: FieldSpec) -> Polynomial:
    return Polynomial.monomial(spec, spec.q) - Polynomial.x(spec)
