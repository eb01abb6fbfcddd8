"""The generator f_m of the fixed field E of G = Aut(F_q(x)/F_q), computed three ways.

f_k is the sum of phi(x)^k over every phi in G; E = F_q(f_m) for m = q^2 - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from finite_field import FieldElement, FieldSpec, enumerate_elements
from moebius import MoebiusMap, apply, enumerate_group, group_generators
from polynomial import Polynomial, x_q_minus_x
from rational import RationalFunction
from utils.dispatch import dispatch_partitions
from utils.log import get_logger

logger = get_logger("generator")

# Key of the polynomial (affine) bucket in the common-denominator accumulator.
AFFINE = -1


@dataclass(frozen=True)
class GeneratorSpecs:
    spec: FieldSpec
    m: int
    group_order: int

    @classmethod
    def for_field(cls, spec: FieldSpec) -> "GeneratorSpecs":
        q = spec.q
        return cls(spec, q * q - 1, (q + 1) * q * (q - 1))


def power_sum(spec: FieldSpec, k: int) -> FieldElement:
    """Sum of alpha^k over F_q: -1 when (q-1) | k, else 0."""
    if k < 1:
        raise ValueError(f"power_sum needs k >= 1, got {k} (the k = 0 sum is q*1 = 0)")
    total = spec.zero
    for alpha in enumerate_elements(spec):
        total = total + alpha**k
    expected = -spec.one if k % (spec.q - 1) == 0 else spec.zero
    if total != expected:
        raise ArithmeticError(f"Power sum of degree {k} over {spec} is {total}, expected {expected}")
    return total


def binomial_mod_p(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem on base-p digits."""
    if k < 0 or n < 0 or k > n:
        return 0
    result = 1
    while n or k:
        n, n_digit = divmod(n, p)
        k, k_digit = divmod(k, p)
        if k_digit > n_digit:
            return 0
        result = result * comb(n_digit, k_digit) % p
    return result


def _numerator_and_key(phi: MoebiusMap) -> Tuple[Polynomial, int]:
    """phi(x) = N / (x + c) or N / 1; returns N and the code of c (AFFINE for 1)."""
    spec = phi.spec
    if phi.is_affine:
        scale = phi.d.inverse()
        return Polynomial.linear(spec, phi.a * scale, phi.b * scale), AFFINE
    scale = phi.c.inverse()
    return Polynomial.linear(spec, phi.a * scale, phi.b * scale), (phi.d * scale).value


def _bucket_powers(maps: Sequence[MoebiusMap], k: int) -> Dict[int, Polynomial]:
    buckets: Dict[int, Polynomial] = {}
    for phi in maps:
        numerator, key = _numerator_and_key(phi)
        term = numerator**k
        buckets[key] = buckets[key] + term if key in buckets else term
    return buckets


def _merge_buckets(a: Dict[int, Polynomial], b: Dict[int, Polynomial]) -> Dict[int, Polynomial]:
    merged = dict(a)
    for key, value in b.items():
        merged[key] = merged[key] + value if key in merged else value
    return merged


def f_k_numerator(
    spec: FieldSpec, k: int, max_workers: int = 1, progress: bool = False
) -> Tuple[Polynomial, Polynomial]:
    """(g_k, h_k) with f_k = g_k / h_k and h_k = (x^q - x)^k, unreduced.

    Each group element contributes N^k to the bucket of its denominator x + c;
    bucket c is then lifted to the common denominator by ((x^q - x)/(x + c))^k.
    """
    if k < 1:
        raise ValueError(f"f_k needs k >= 1, got {k}")
    maps = enumerate_group(spec)
    buckets = dispatch_partitions(
        maps,
        lambda partition: _bucket_powers(partition, k),
        _merge_buckets,
        max_workers=max_workers,
        desc=f"Summing f_{k} over {len(maps)} maps",
        progress=progress,
    )
    vanishing = x_q_minus_x(spec)
    h = vanishing**k
    g = Polynomial.zero(spec)
    for key in sorted(buckets):
        if key == AFFINE:
            g = g + buckets[key] * h
        else:
            cofactor = vanishing.exact_div(Polynomial.linear(spec, 1, spec.element(key)))
            g = g + buckets[key] * cofactor**k
    return g, h


def f_k_direct(spec: FieldSpec, k: int, max_workers: int = 1, progress: bool = False) -> RationalFunction:
    """f_k summed over all |G| maps through the common denominator (x^q - x)^k, then reduced."""
    g, h = f_k_numerator(spec, k, max_workers=max_workers, progress=progress)
    return RationalFunction(g, h)


def f_k_factored(spec: FieldSpec, k: int) -> RationalFunction:
    """1 - (1 + sum_b (x-b)^k)(1 + sum_c 1/(x-c)^k), valid when (q-1) | k."""
    q = spec.q
    if k < 1 or k % (q - 1):
        raise ValueError(f"The factored form of f_k needs k to be a positive multiple of q-1 = {q - 1}, got {k}")
    elements = enumerate_elements(spec)
    vanishing = x_q_minus_x(spec)
    h = vanishing**k

    left = Polynomial.one(spec)
    right_num = h
    for b in elements:
        shifted = Polynomial.linear(spec, 1, -b)
        left = left + shifted**k
        right_num = right_num + vanishing.exact_div(shifted) ** k
    return RationalFunction.constant(spec, 1) - RationalFunction(left) * RationalFunction(right_num, h)


def generator_closed_form(spec: FieldSpec) -> Tuple[Polynomial, Polynomial]:
    """(g, h) with g = sum theta_i x^(i(q-1)) over i <= q(q+1) and h = sum x^(iq(q-1)) over 1 <= i <= q.

    theta_i is 2 for i = q, 2q, ..., q^2 and 1 elsewhere, reduced into F_p.
    """
    q, p = spec.q, spec.p
    g_coeffs = [0] * ((q + 1) * q * (q - 1) + 1)
    for i in range(q * (q + 1) + 1):
        theta = 2 if 0 < i <= q * q and i % q == 0 else 1
        g_coeffs[i * (q - 1)] = theta % p
    h_coeffs = [0] * (q * q * (q - 1) + 1)
    for i in range(1, q + 1):
        h_coeffs[i * q * (q - 1)] = 1
    return Polynomial(spec, g_coeffs), Polynomial(spec, h_coeffs)


def is_invariant(
    spec: FieldSpec,
    f: RationalFunction,
    exhaustive: bool = False,
    maps: Optional[List[MoebiusMap]] = None,
) -> bool:
    """Whether apply(sigma, f) = f for every group element, or only for the generators."""
    if maps is None:
        maps = enumerate_group(spec) if exhaustive else group_generators(spec)
    for sigma in maps:
        if apply(sigma, f) != f:
            logger.debug(f"{f} is moved by {sigma}")
            return False
    return True
