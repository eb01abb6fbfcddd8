from finite_field.field import (
    FieldElement,
    FieldSpec,
    add,
    check_same_field,
    default_modulus,
    enumerate_elements,
    frobenius,
    inv,
    is_irreducible,
    is_prime,
    make_field,
    mul,
    neg,
    power,
    primitive_element,
    sub,
)
