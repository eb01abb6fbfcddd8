from fixedfield.generator import (
    GeneratorSpecs,
    binomial_mod_p,
    f_k_direct,
    f_k_factored,
    f_k_numerator,
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
from fixedfield.report import GeneratorReport, Method, Verdict, build_report, compute_generator
from fixedfield.suite import run_verification_suite
