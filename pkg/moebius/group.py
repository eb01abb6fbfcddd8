"""G = Aut(F_q(x)/F_q) realised as normalized Moebius maps x -> (ax+b)/(cx+d)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Set

from finite_field import FieldElement, FieldSpec, check_same_field, enumerate_elements, primitive_element
from polynomial import Polynomial
from rational import RationalFunction

from utils.log import get_logger

logger = get_logger("moebius")


@dataclass(frozen=True)
class MoebiusMap:
    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement

    def __post_init__(self):
        for entry in (self.b, self.c, self.d):
            check_same_field(self.a.spec, entry.spec)
        if self.a * self.d == self.b * self.c:
            raise ValueError(f"Degenerate map: ad = bc for {self.entries()}")
        first = next(e for e in (self.a, self.b, self.c, self.d) if e)
        if first.value != 1:
            raise ValueError(f"Map is not normalized: first nonzero entry is {first}")

    @classmethod
    def normalized(cls, a, b, c, d, spec: FieldSpec = None) -> "MoebiusMap":
        """Scale (a, b, c, d) so that its first nonzero entry is 1."""
        spec = spec or next(e.spec for e in (a, b, c, d) if isinstance(e, FieldElement))
        a, b, c, d = (spec.element(e) for e in (a, b, c, d))
        if a * d == b * c:
            raise ValueError(f"Degenerate map: ad = bc for ({a}, {b}, {c}, {d})")
        scale = next(e for e in (a, b, c, d) if e).inverse()
        return cls(a * scale, b * scale, c * scale, d * scale)

    @classmethod
    def identity(cls, spec: FieldSpec) -> "MoebiusMap":
        return cls(spec.one, spec.zero, spec.zero, spec.one)

    @property
    def spec(self) -> FieldSpec:
        return self.a.spec

    @property
    def is_affine(self) -> bool:
        return not self.c

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def image(self) -> RationalFunction:
        """The rational function (ax+b)/(cx+d) this map sends x to."""
        return RationalFunction(
            Polynomial.linear(self.spec, self.a, self.b),
            Polynomial.linear(self.spec, self.c, self.d),
        )

    def to_json(self) -> dict:
        return {name: e.to_json() for name, e in zip("abcd", self.entries())}

    def __str__(self) -> str:
        return str(self.image())


def compose(s: MoebiusMap, t: MoebiusMap) -> MoebiusMap:
    """s o t, i.e. x -> s(t(x)); the 2x2 matrix product [[a,b],[c,d]]."""
    check_same_field(s.spec, t.spec)
    return MoebiusMap.normalized(
        s.a * t.a + s.b * t.c,
        s.a * t.b + s.b * t.d,
        s.c * t.a + s.d * t.c,
        s.c * t.b + s.d * t.d,
    )


def inverse(s: MoebiusMap) -> MoebiusMap:
    return MoebiusMap.normalized(s.d, -s.b, -s.c, s.a)


def _homogenized(f: Polynomial, e: int, u: Polynomial, v_powers: List[Polynomial]) -> Polynomial:
    """sum_i f_i u^i v^(e-i), by Horner in u."""
    acc = Polynomial.constant(f.spec, f.coefficient(e))
    for i in range(e - 1, -1, -1):
        acc = acc * u
        coef = f.coefficient(i)
        if coef:
            acc = acc + v_powers[e - i].scale(coef)
    return acc


def apply(s: MoebiusMap, f: RationalFunction) -> RationalFunction:
    """f((ax+b)/(cx+d)), computed by clearing denominators so no pole is ever evaluated."""
    check_same_field(s.spec, f.spec)
    e = int(max(f.num.degree, f.den.degree))
    if e <= 0:
        return f
    spec = s.spec
    u = Polynomial.linear(spec, s.a, s.b)
    v = Polynomial.linear(spec, s.c, s.d)
    v_powers = [Polynomial.one(spec)]
    for _ in range(e):
        v_powers.append(v_powers[-1] * v)
    return RationalFunction(
        _homogenized(f.num, e, u, v_powers),
        _homogenized(f.den, e, u, v_powers),
    )


def enumerate_group(spec: FieldSpec) -> List[MoebiusMap]:
    """All (q+1)q(q-1) maps: affine ax+b first, then (ax+b)/(x+c) with ac != b."""
    elements = enumerate_elements(spec)
    zero, one = spec.zero, spec.one
    maps = [MoebiusMap.normalized(a, b, zero, one) for a in elements[1:] for b in elements]
    for a in elements:
        for b in elements:
            for c in elements:
                if a * c != b:
                    maps.append(MoebiusMap.normalized(a, b, one, c))
    logger.debug(f"Enumerated {len(maps)} maps of PGL2({spec})")
    return maps


def group_generators(spec: FieldSpec) -> List[MoebiusMap]:
    """x -> x+1, x -> y*x (y primitive, omitted for q = 2) and x -> 1/x."""
    zero, one = spec.zero, spec.one
    generators = [MoebiusMap.normalized(one, one, zero, one)]
    if spec.q > 2:
        generators.append(MoebiusMap.normalized(primitive_element(spec), zero, zero, one))
    generators.append(MoebiusMap.normalized(zero, one, one, zero))
    return generators


def closure(generators: Iterable[MoebiusMap]) -> Set[MoebiusMap]:
    """Breadth-first closure of the generators under composition."""
    generators = list(generators)
    if not generators:
        raise ValueError("closure needs at least one generator")
    elements = {MoebiusMap.identity(generators[0].spec)}
    boundary = list(elements)
    while boundary:
        next_boundary = []
        for g in generators:
            for h in boundary:
                product = compose(g, h)
                if product not in elements:
                    elements.add(product)
                    next_boundary.append(product)
        boundary = next_boundary
    return elements
