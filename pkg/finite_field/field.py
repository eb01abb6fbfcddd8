"""Exact arithmetic in F_{p^n}.

Elements are stored as integer codes: the element d_0 + d_1 t + ... + d_{n-1} t^{n-1}
of F_p[t]/(modulus) has code d_0 + d_1 p + ... + d_{n-1} p^{n-1}. Every
operation goes through q x q numpy tables built once per field, so vectors of
codes (polynomial coefficients) can be combined with fancy indexing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from utils.log import get_logger

logger = get_logger("finite_field")

# q x q tables are built row by row; above this order they stop being "desk scale".
MAX_FIELD_ORDER = 1 << 10


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> List[int]:
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors


def render_digits(digits: Sequence[int], var: str = "t") -> str:
    """Render an ascending digit vector as a polynomial in `var`, highest power first."""
    terms = []
    for i in range(len(digits) - 1, -1, -1):
        d = int(digits[i])
        if not d:
            continue
        if i == 0:
            terms.append(str(d))
        else:
            power = var if i == 1 else f"{var}^{i}"
            terms.append(power if d == 1 else f"{d}{power}")
    return "+".join(terms) if terms else "0"


def _trim(coeffs: List[int]) -> List[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _remainder_mod_p(dividend: Sequence[int], divisor: Sequence[int], p: int) -> List[int]:
    """Remainder of dividend / divisor in F_p[t]; divisor must be monic."""
    rem = [c % p for c in dividend]
    d = len(divisor) - 1
    for shift in range(len(rem) - 1 - d, -1, -1):
        lead = rem[shift + d]
        if lead:
            for i, c in enumerate(divisor):
                rem[shift + i] = (rem[shift + i] - lead * c) % p
    return _trim(rem[:d])


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..n//2 over F_p."""
    n = len(modulus) - 1
    if n < 1 or modulus[-1] % p != 1:
        return False
    for degree in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=degree):
            if not _remainder_mod_p(modulus, list(low) + [1], p):
                return False
    return True


def default_modulus(p: int, n: int) -> Tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree n, lowest power compared first."""
    for low in itertools.product(range(p), repeat=n):
        candidate = tuple(low) + (1,)
        if is_irreducible(candidate, p):
            return candidate
    raise ValueError(f"No irreducible polynomial of degree {n} over F_{p}")


@dataclass(frozen=True)
class FieldSpec:
    p: int
    n: int
    modulus: Optional[Tuple[int, ...]] = None
    digits: np.ndarray = field(init=False, repr=False, compare=False)
    place_values: np.ndarray = field(init=False, repr=False, compare=False)
    add_table: np.ndarray = field(init=False, repr=False, compare=False)
    sub_table: np.ndarray = field(init=False, repr=False, compare=False)
    mul_table: np.ndarray = field(init=False, repr=False, compare=False)
    neg_table: np.ndarray = field(init=False, repr=False, compare=False)
    inv_table: np.ndarray = field(init=False, repr=False, compare=False)
    reduce_matrix: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p, n, q = self.p, self.n, self.p**self.n
        codes = np.arange(q, dtype=np.int64)
        place_values = p ** np.arange(n, dtype=np.int64)
        digits = (codes[:, None] // place_values[None, :]) % p

        # Row k holds t^k reduced modulo the modulus, for k < 2n - 1.
        reduce_matrix = np.zeros((2 * n - 1, n), dtype=np.int64)
        for k in range(min(n, 2 * n - 1)):
            reduce_matrix[k, k] = 1
        for k in range(n, 2 * n - 1):
            shifted = np.zeros(n + 1, dtype=np.int64)
            shifted[1:] = reduce_matrix[k - 1]
            top = shifted[n]
            low = (shifted[:n] - top * np.array(self.modulus[:n], dtype=np.int64)) % p
            reduce_matrix[k] = low

        add_table = ((digits[:, None, :] + digits[None, :, :]) % p) @ place_values
        mul_table = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            products = np.zeros((q, 2 * n - 1), dtype=np.int64)
            for i in range(n):
                if digits[a, i]:
                    products[:, i : i + n] += digits[a, i] * digits
            mul_table[a] = ((products @ reduce_matrix) % p) @ place_values
        neg_table = ((-digits) % p) @ place_values
        inv_table = np.argmax(mul_table == 1, axis=1)
        inv_table[0] = 0

        for name, value in (
            ("digits", digits),
            ("place_values", place_values),
            ("add_table", add_table),
            ("sub_table", add_table[:, neg_table]),
            ("mul_table", mul_table),
            ("neg_table", neg_table),
            ("inv_table", inv_table),
            ("reduce_matrix", reduce_matrix),
        ):
            value.setflags(write=False)
            object.__setattr__(self, name, value)
        logger.debug(f"Built arithmetic tables for F_{q} (modulus {self.modulus})")

    @property
    def q(self) -> int:
        return self.p**self.n

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def element(self, value: Union[int, Sequence[int], "FieldElement"]) -> "FieldElement":
        """Build an element from a code, a digit vector or another element of this field."""
        if isinstance(value, FieldElement):
            check_same_field(self, value.spec)
            return value
        if isinstance(value, (int, np.integer)):
            if self.n == 1:
                return FieldElement(self, int(value) % self.p)
            if not 0 <= value < self.q:
                raise ValueError(f"Element code {value} out of range for F_{self.q}")
            return FieldElement(self, int(value))
        return FieldElement(self, self.encode(value))

    def encode(self, digits: Sequence[int]) -> int:
        if len(digits) != self.n:
            raise ValueError(f"Expected {self.n} digits, got {len(digits)}: {list(digits)}")
        if any(not 0 <= int(d) < self.p for d in digits):
            raise ValueError(f"Digits must lie in [0, {self.p}): {list(digits)}")
        return int(sum(int(d) * self.p**i for i, d in enumerate(digits)))

    def render_code(self, code: int) -> str:
        if self.n == 1:
            return str(code)
        return render_digits(self.digits[code])

    def render_modulus(self) -> str:
        return render_digits(self.modulus) if self.modulus else ""

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "modulus": list(self.modulus) if self.modulus else None,
        }

    def __str__(self) -> str:
        return f"F_{self.q}"


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    value: int

    @property
    def digits(self) -> Tuple[int, ...]:
        return tuple(int(d) for d in self.spec.digits[self.value])

    def in_prime_field(self) -> bool:
        return self.value < self.spec.p

    def _other(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            check_same_field(self.spec, other.spec)
            return other
        if isinstance(other, (int, np.integer)) and self.spec.n == 1:
            return FieldElement(self.spec, int(other) % self.spec.p)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.spec, int(self.spec.add_table[self.value, other.value]))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.spec, int(self.spec.sub_table[self.value, other.value]))

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.spec, int(self.spec.mul_table[self.value, other.value]))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.spec, int(self.spec.neg_table[self.value]))

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no multiplicative inverse in {self.spec}")
        return FieldElement(self.spec, int(self.spec.inv_table[self.value]))

    def __pow__(self, k: int) -> "FieldElement":
        if k < 0:
            return self.inverse() ** (-k)
        mul_table = self.spec.mul_table
        result, base = 1, self.value
        while k:
            if k & 1:
                result = int(mul_table[result, base])
            base = int(mul_table[base, base])
            k >>= 1
        return FieldElement(self.spec, result)

    def frobenius(self) -> "FieldElement":
        return self ** self.spec.p

    def multiplicative_order(self) -> int:
        if self.value == 0:
            raise ValueError("0 has no multiplicative order")
        order = self.spec.q - 1
        for r in prime_factors(order):
            while order % r == 0 and (self ** (order // r)).value == 1:
                order //= r
        return order

    def __bool__(self) -> bool:
        return self.value != 0

    def to_json(self) -> List[int]:
        return list(self.digits)

    def __str__(self) -> str:
        return self.spec.render_code(self.value)


def check_same_field(a: FieldSpec, b: FieldSpec):
    if a is not b and a != b:
        raise ValueError(f"Mismatched fields: {a} (modulus {a.modulus}) vs {b} (modulus {b.modulus})")


@lru_cache(maxsize=None)
def _cached_field(p: int, n: int, modulus: Optional[Tuple[int, ...]]) -> FieldSpec:
    return FieldSpec(p, n, modulus)


def make_field(p: int, n: int = 1, modulus: Optional[Iterable[int]] = None) -> FieldSpec:
    """Construct F_{p^n}; the default modulus is deterministic (see `default_modulus`)."""
    if not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
        raise ValueError(f"p must be prime, got {p}")
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    p, n = int(p), int(n)
    if p**n > MAX_FIELD_ORDER:
        raise ValueError(f"q = {p}^{n} exceeds the supported order {MAX_FIELD_ORDER}")

    if modulus is not None:
        modulus = tuple(int(d) for d in modulus)
        if len(modulus) != n + 1:
            raise ValueError(f"Modulus must have {n + 1} digits (degree {n}), got {list(modulus)}")
        if any(not 0 <= d < p for d in modulus):
            raise ValueError(f"Modulus digits must lie in [0, {p}): {list(modulus)}")
        if modulus[-1] != 1:
            raise ValueError(f"Modulus must be monic: {list(modulus)}")
        if not is_irreducible(modulus, p):
            raise ValueError(f"Modulus {list(modulus)} is reducible over F_{p}")
    elif n > 1:
        modulus = default_modulus(p, n)
        logger.debug(f"Default modulus for F_{p}^{n}: {list(modulus)}")
    if n == 1:
        # Every degree-one modulus gives the same representation of F_p.
        modulus = None
    return _cached_field(p, n, modulus)


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, k: int) -> FieldElement:
    """a^k for k >= 0, with 0^0 = 1."""
    if k < 0:
        raise ValueError(f"Exponent must be non-negative, got {k}")
    return a**k


def frobenius(a: FieldElement) -> FieldElement:
    return a.frobenius()


def enumerate_elements(spec: FieldSpec) -> List[FieldElement]:
    """All q elements in lexicographic order of their digit vectors, d0 compared first."""
    return [FieldElement(spec, spec.encode(digits)) for digits in itertools.product(range(spec.p), repeat=spec.n)]


def primitive_element(spec: FieldSpec) -> FieldElement:
    for element in enumerate_elements(spec)[1:]:
        if element.multiplicative_order() == spec.q - 1:
            return element
    raise AssertionError(f"{spec} has no primitive element")
