from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence

from finite_field import FieldSpec
from rational import RationalFunction

from fixedfield.generator import (
    GeneratorSpecs,
    f_k_direct,
    f_k_factored,
    generator_closed_form,
    is_invariant,
)
from utils.log import get_logger

logger = get_logger("report")

# Above this order invariance is checked on the generators only.
EXHAUSTIVE_INVARIANCE_MAX_Q = 5


class Method(str, Enum):
    DIRECT = "direct"
    FACTORED = "factored"
    CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class Verdict:
    name: str
    passed: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


@dataclass
class GeneratorReport:
    spec: FieldSpec
    method: Method
    generator: RationalFunction
    degree: int
    coprime: bool
    invariant_under_group: bool
    coefficients_in_prime_field: bool
    methods_agree: bool
    group_order: int
    m: int
    compared_with: List[Method] = field(default_factory=list)

    @property
    def degree_matches_group_order(self) -> bool:
        return self.degree == self.group_order

    def verdicts(self) -> List[Verdict]:
        compared = ", ".join(method.value for method in self.compared_with) or "nothing"
        return [
            Verdict(
                "degree_equals_group_order",
                self.degree_matches_group_order,
                f"[F(x):F(f_m)] = {self.degree}, |G| = {self.group_order}",
            ),
            Verdict("numerator_denominator_coprime", self.coprime),
            Verdict("invariant_under_group", self.invariant_under_group),
            Verdict("coefficients_in_prime_field", self.coefficients_in_prime_field),
            Verdict("methods_agree", self.methods_agree, f"{self.method.value} compared with {compared}"),
        ]

    @property
    def passed(self) -> bool:
        return all(self.verdicts())

    def to_json(self) -> dict:
        return {
            "method": self.method.value,
            "m": self.m,
            "group_order": self.group_order,
            "degree": self.degree,
            "generator": self.generator.to_json(),
            "rendered": str(self.generator),
        }


def compute_generator(
    spec: FieldSpec, method: Method, max_workers: int = 1, progress: bool = False
) -> RationalFunction:
    m = GeneratorSpecs.for_field(spec).m
    if method == Method.DIRECT:
        return f_k_direct(spec, m, max_workers=max_workers, progress=progress)
    if method == Method.FACTORED:
        return f_k_factored(spec, m)
    g, h = generator_closed_form(spec)
    return RationalFunction(g, h)


def build_report(
    spec: FieldSpec,
    method: Method = Method.CLOSED_FORM,
    exhaustive: Optional[bool] = None,
    compare_with: Optional[Sequence[Method]] = None,
    max_workers: int = 1,
    progress: bool = False,
) -> GeneratorReport:
    """Compute f_m by `method` and verify it generates the fixed field.

    By default the closed form is checked against the direct sum and every other
    method against the closed form.
    """
    method = Method(method)
    specs = GeneratorSpecs.for_field(spec)
    if exhaustive is None:
        exhaustive = spec.q <= EXHAUSTIVE_INVARIANCE_MAX_Q
    if compare_with is None:
        compare_with = [Method.DIRECT] if method == Method.CLOSED_FORM else [Method.CLOSED_FORM]
    compare_with = [Method(other) for other in compare_with if Method(other) != method]

    logger.info(f"Computing f_{specs.m} over {spec} by the {method.value} method")
    try:
        generator = compute_generator(spec, method, max_workers=max_workers, progress=progress)
        if method == Method.CLOSED_FORM:
            g, h = generator_closed_form(spec)
            coprime = g.gcd(h) == 1 and generator.num == g and generator.den == h
        else:
            coprime = generator.num.gcd(generator.den) == 1
        methods_agree = True
        for other in compare_with:
            other_value = compute_generator(spec, other, max_workers=max_workers, progress=progress)
            if other_value != generator:
                logger.warning(f"{method.value} and {other.value} disagree over {spec}")
                methods_agree = False
        invariant = is_invariant(spec, generator, exhaustive=exhaustive)
    except (ArithmeticError, ValueError) as exc:
        raise RuntimeError(f"Generator computation over {spec} by {method.value} failed: {exc}") from exc

    return GeneratorReport(
        spec=spec,
        method=method,
        generator=generator,
        degree=generator.extension_degree(),
        coprime=coprime,
        invariant_under_group=invariant,
        coefficients_in_prime_field=generator.in_prime_field(),
        methods_agree=methods_agree,
        group_order=specs.group_order,
        m=specs.m,
        compared_with=compare_with,
    )
