from rational.rational_function import (
    RationalFunction,
    extension_degree,
    rf_add,
    rf_inv,
    rf_mul,
    rf_new,
    rf_pow,
)
