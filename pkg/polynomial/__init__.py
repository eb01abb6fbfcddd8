from polynomial.polynomial import (
    NEG_INF,
    Polynomial,
    convolve,
    p_add,
    p_divrem,
    p_eval,
    p_gcd,
    p_mul,
    p_pow,
    p_sub,
    vanishing_polynomial,
    x_q_minus_x,
)
