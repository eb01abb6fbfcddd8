"""The full verification suite behind `verify`: one named Verdict per check."""

from __future__ import annotations

import itertools
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np
from tqdm import tqdm

from finite_field import FieldSpec, enumerate_elements, primitive_element
from moebius import MoebiusMap, apply, closure, compose, enumerate_group, group_generators, inverse
from polynomial import Polynomial, vanishing_polynomial, x_q_minus_x
from rational import RationalFunction

from fixedfield.generator import (
    GeneratorSpecs,
    f_k_direct,
    f_k_factored,
    generator_closed_form,
    is_invariant,
    power_sum,
)
from fixedfield.lemmas import (
    affine_sum_factorization_check,
    denominator_identity_check,
    left_factor_check,
    lemma1_check,
    lemma2_check,
    lemma2_degree,
    lemma3_check,
    lemma5_check,
    lemma6_check,
    lemma6_expected,
    numerator_expansion_check,
    quotient_identity_check,
    reciprocal_sum_check,
    translation_identity_check,
)
from fixedfield.report import EXHAUSTIVE_INVARIANCE_MAX_Q, Method, Verdict
from utils.log import get_logger

logger = get_logger("suite")

CheckResult = Union[bool, Verdict, Tuple[bool, str]]

# Pairwise checks run exhaustively up to this order, and on random samples above it.
EXHAUSTIVE_PAIRS_MAX_Q = 16
EXHAUSTIVE_TRIPLES_MAX_Q = 9
RANDOM_SAMPLES = 200
LEMMA3_SAMPLES = 20
AFFINE_SUM_MAX_K = 10


def _run(name: str, check: Callable[[], CheckResult]) -> Verdict:
    try:
        result = check()
    except Exception as exc:
        logger.warning(f"Check {name} raised {type(exc).__name__}: {exc}")
        return Verdict(name, False, f"raised {type(exc).__name__}: {exc}")
    if isinstance(result, Verdict):
        return Verdict(name, result.passed, result.detail)
    if isinstance(result, tuple):
        passed, detail = result
        return Verdict(name, bool(passed), detail)
    return Verdict(name, bool(result))


def _pairs(spec: FieldSpec, rng: np.random.Generator):
    elements = enumerate_elements(spec)
    if spec.q <= EXHAUSTIVE_PAIRS_MAX_Q:
        return list(itertools.product(elements, repeat=2))
    codes = rng.integers(0, spec.q, size=(RANDOM_SAMPLES, 2))
    return [(elements[a], elements[b]) for a, b in codes]


def _triples(spec: FieldSpec, rng: np.random.Generator):
    elements = enumerate_elements(spec)
    if spec.q <= EXHAUSTIVE_TRIPLES_MAX_Q:
        return list(itertools.product(elements, repeat=3))
    codes = rng.integers(0, spec.q, size=(RANDOM_SAMPLES, 3))
    return [(elements[a], elements[b], elements[c]) for a, b, c in codes]


def _field_axioms(spec: FieldSpec, rng: np.random.Generator) -> Tuple[bool, str]:
    zero, one = spec.zero, spec.one
    for a, b, c in _triples(spec, rng):
        if (a + b) + c != a + (b + c) or (a * b) * c != a * (b * c):
            return False, f"associativity fails at ({a}, {b}, {c})"
        if a * (b + c) != a * b + a * c:
            return False, f"distributivity fails at ({a}, {b}, {c})"
    for a in enumerate_elements(spec):
        if a + zero != a or a * one != a or a + (-a) != zero:
            return False, f"identity or additive inverse fails at {a}"
        if a and a * a.inverse() != one:
            return False, f"multiplicative inverse fails at {a}"
    return True, ""


def _fermat(spec: FieldSpec) -> Tuple[bool, str]:
    q = spec.q
    for a in enumerate_elements(spec):
        if a**q != a:
            return False, f"{a}^q != {a}"
        if a and a ** (q - 1) != spec.one:
            return False, f"{a}^(q-1) != 1"
    return True, ""


def _group_axioms(spec: FieldSpec, maps: List[MoebiusMap], rng: np.random.Generator) -> Tuple[bool, str]:
    members = set(maps)
    identity = MoebiusMap.identity(spec)
    for s in maps:
        if compose(identity, s) != s or compose(s, identity) != s:
            return False, f"identity law fails at {s}"
        if compose(s, inverse(s)) != identity:
            return False, f"inverse law fails at {s}"
        for t in maps:
            if compose(s, t) not in members:
                return False, f"{s} o {t} escapes the enumeration"
    for i, j, k in rng.integers(0, len(maps), size=(RANDOM_SAMPLES, 3)):
        s, t, u = maps[i], maps[j], maps[k]
        if compose(compose(s, t), u) != compose(s, compose(t, u)):
            return False, f"associativity fails at ({s}, {t}, {u})"
    return True, ""


def _action_law(spec: FieldSpec, maps: List[MoebiusMap], rng: np.random.Generator) -> Tuple[bool, str]:
    """Substitution is a right action: f o (s o t) = (f o s) o t."""
    for _ in range(5):
        num = Polynomial.random(spec, 3, rng)
        den = Polynomial.random(spec, 2, rng)
        if den.is_zero:
            den = Polynomial.one(spec)
        f = RationalFunction(num, den)
        s, t = (maps[i] for i in rng.integers(0, len(maps), size=2))
        if apply(compose(s, t), f) != apply(t, apply(s, f)):
            return False, f"action law fails for f = {f}, s = {s}, t = {t}"
    return True, ""


def run_verification_suite(
    spec: FieldSpec,
    exhaustive: bool = None,
    seed: int = 0,
    max_workers: int = 1,
    progress: bool = False,
    methods: Optional[Sequence[Method]] = None,
) -> List[Verdict]:
    """Run every check for one field; nothing short-circuits, failures are collected.

    `methods` picks which computations of f_m the methods_agree check compares.
    A single method is compared with the closed form, or with the direct sum
    when it is the closed form itself.
    """
    rng = np.random.default_rng(seed)
    specs = GeneratorSpecs.for_field(spec)
    q, p, m = spec.q, spec.p, specs.m
    if exhaustive is None:
        exhaustive = q <= EXHAUSTIVE_INVARIANCE_MAX_Q
    elements = enumerate_elements(spec)
    maps = enumerate_group(spec)
    state = {}
    compared = list(dict.fromkeys(methods)) if methods else list(Method)
    if len(compared) == 1:
        compared.append(Method.DIRECT if compared[0] is Method.CLOSED_FORM else Method.CLOSED_FORM)

    def f_m() -> RationalFunction:
        if "f_m" not in state:
            state["f_m"] = f_k_direct(spec, m, max_workers=max_workers)
        return state["f_m"]

    def closed_form() -> RationalFunction:
        if "closed" not in state:
            state["closed"] = RationalFunction(*generator_closed_form(spec))
        return state["closed"]

    def lemma3_samples() -> Tuple[bool, str]:
        for k in (1, 2):
            a = Polynomial.random(spec, 2, rng)
            if not lemma3_check(spec, a, a, k):
                return False, f"A = B case fails for k = {k}"
        for _ in range(LEMMA3_SAMPLES):
            k = int(rng.integers(1, 3))
            a = Polynomial.random(spec, 2, rng)
            b = Polynomial.random(spec, 2, rng)
            if not lemma3_check(spec, a, b, k):
                return False, f"fails for A = {a}, B = {b}, k = {k}"
        return True, f"{LEMMA3_SAMPLES} random pairs plus A = B"

    def lemma2_all() -> Tuple[bool, str]:
        degrees = []
        for k in sorted({q - 1, 2 * (q - 1), m}):
            f_k = f_m() if k == m else f_k_direct(spec, k, max_workers=max_workers)
            if not lemma2_check(spec, k, f_k):
                return False, f"fails for k = {k}"
            degrees.append(f"deg g_{k} = {lemma2_degree(spec, k, f_k)}")
        return True, ", ".join(degrees)

    def lemma6_all() -> Tuple[bool, str]:
        for j in range(m + 1):
            if lemma6_check(spec, j) != lemma6_expected(spec, j):
                return False, f"fails for j = {j}"
        return True, f"j = 0..{m}"

    def power_sums() -> Tuple[bool, str]:
        for k in range(1, 2 * (q - 1) + 2):
            brute = spec.zero
            for alpha in elements:
                brute = brute + alpha**k
            if power_sum(spec, k) != brute:
                return False, f"fails for k = {k}"
        return True, f"k = 1..{2 * (q - 1) + 1}"

    def by_method(method: Method) -> RationalFunction:
        if method is Method.DIRECT:
            return f_m()
        if method is Method.FACTORED:
            return f_k_factored(spec, m)
        return closed_form()

    def methods_agree() -> Tuple[bool, str]:
        values = {method: by_method(method) for method in compared}
        reference = values[compared[0]]
        differing = [method.value for method in compared if values[method] != reference]
        if differing:
            return False, f"{', '.join(differing)} differ from {compared[0].value}"
        return True, f"compared {', '.join(method.value for method in compared)}: {reference}"

    def denominator_record() -> Tuple[bool, str]:
        exponents = f_m().den.support()
        return denominator_identity_check(spec), f"denominator exponents {exponents}"

    checks = [
        ("fermat_little_theorem", lambda: _fermat(spec)),
        (
            "frobenius_additive",
            lambda: all((a + b).frobenius() == a.frobenius() + b.frobenius() for a, b in _pairs(spec, rng)),
        ),
        ("field_axioms", lambda: _field_axioms(spec, rng)),
        (
            "primitive_element_order",
            lambda: primitive_element(spec).multiplicative_order() == q - 1,
        ),
        ("vanishing_polynomial", lambda: vanishing_polynomial(spec) == x_q_minus_x(spec)),
        ("power_sums", power_sums),
        (
            "maps_have_degree_one",
            lambda: all(s.image().extension_degree() == 1 for s in maps),
        ),
        (
            "group_order",
            lambda: (len(set(maps)) == len(maps) == specs.group_order, f"|G| = {len(maps)}"),
        ),
        ("group_axioms", lambda: _group_axioms(spec, maps, rng) if exhaustive else (True, "skipped")),
        ("generator_closure", lambda: closure(group_generators(spec)) == set(maps)),
        ("action_law", lambda: _action_law(spec, maps, rng)),
        (
            "affine_sum_factorization",
            lambda: all(affine_sum_factorization_check(spec, k) for k in range(1, AFFINE_SUM_MAX_K + 1)),
        ),
        ("degree_of_g_k", lemma2_all),
        ("freshman_expansion", lemma3_samples),
        ("g_h_properties", lambda: lemma5_check(spec, f_m())),
        ("binomial_sums", lemma6_all),
        ("translation_identity", lambda: all(translation_identity_check(spec, a) for a in elements)),
        ("left_factor_identity", lambda: left_factor_check(spec)),
        ("quotient_identity", lambda: all(quotient_identity_check(spec, c) for c in elements)),
        ("reciprocal_sum", lambda: reciprocal_sum_check(spec)),
        ("numerator_expansion", lambda: numerator_expansion_check(spec)),
        ("denominator_identity", denominator_record),
        ("methods_agree", methods_agree),
        (
            "degree_law",
            lambda: (f_m().extension_degree() == specs.group_order, f"degree {f_m().extension_degree()}"),
        ),
        ("degree_criterion_hypotheses", lambda: lemma1_check(spec, *generator_closed_form(spec))),
        (
            "invariance",
            lambda: (
                is_invariant(spec, f_m(), exhaustive=exhaustive),
                "all group elements" if exhaustive else "generators",
            ),
        ),
        (
            "coefficients_in_prime_field",
            lambda: (f_m().in_prime_field(), f"p = {p}"),
        ),
    ]

    verdicts = []
    for name, check in tqdm(checks, desc=f"Verifying {spec}", unit="check", disable=not progress):
        verdict = _run(name, check)
        logger.info(f"{name}: {'pass' if verdict.passed else 'FAIL'} {verdict.detail}")
        verdicts.append(verdict)
    return verdicts
