import argparse

from cli.common import (
    CliConfig,
    add_method_arguments,
    add_output_arguments,
    emit,
    usage_error,
    validate_common,
)
from fixedfield import GeneratorSpecs, Verdict, f_k_direct, f_k_factored, generator_closed_form, is_invariant
from rational import RationalFunction


def get_parser():
    parser = argparse.ArgumentParser(
        prog="fixedfield fk",
        description="Compute f_k, the sum of phi(x)^k over every automorphism phi.",
    )
    parser.add_argument("--k", type=int, required=True, help="The exponent k >= 1.")
    add_method_arguments(
        parser,
        method_help="'factored' needs (q-1) | k, 'closed' needs k = q^2-1; 'all' runs every applicable method.",
        exhaustive_help="Also check that f_k is invariant under every group element.",
    )
    add_output_arguments(parser)
    return parser


def validate_args(config: CliConfig):
    validate_common(config)
    spec = config.field()
    q = spec.q
    assert config.k is not None and config.k >= 1, f"--k must be a positive integer, got {config.k}."
    if config.method == "factored":
        assert config.k % (q - 1) == 0, (
            f"The factored form (Lemma 4) requires (q-1) | k; q-1 = {q - 1} does not divide {config.k}."
        )
    if config.method == "closed":
        m = GeneratorSpecs.for_field(spec).m
        assert config.k == m, f"The closed form only gives f_m with m = q^2-1 = {m}, got k = {config.k}."


def applicable_methods(config: CliConfig):
    if config.method != "all":
        return [config.method]
    spec = config.field()
    methods = ["direct"]
    if config.k % (spec.q - 1) == 0:
        methods.append("factored")
    if config.k == GeneratorSpecs.for_field(spec).m:
        methods.append("closed")
    return methods


def compute(config: CliConfig, method: str) -> RationalFunction:
    spec = config.field()
    if method == "direct":
        return f_k_direct(spec, config.k, max_workers=config.max_workers, progress=config.progress)
    if method == "factored":
        return f_k_factored(spec, config.k)
    return RationalFunction(*generator_closed_form(spec))


def fk_main(argv, config: CliConfig) -> int:
    parser = get_parser()
    args = parser.parse_args(argv)
    config.k = args.k
    config.method = args.method
    config.format = args.format
    config.exhaustive = args.exhaustive
    config.max_workers = args.max_workers
    config.progress = args.progress
    try:
        validate_args(config)
    except (AssertionError, ValueError) as exc:
        usage_error(parser, exc)

    methods = applicable_methods(config)
    values = {method: compute(config, method) for method in methods}
    f_k = values[methods[0]]
    verdicts = []
    if len(methods) > 1:
        disagreeing = [method for method in methods if values[method] != f_k]
        verdicts.append(
            Verdict(
                "methods_agree",
                not disagreeing,
                f"compared {', '.join(methods)}"
                + (f"; {', '.join(disagreeing)} differ from {methods[0]}" if disagreeing else ""),
            )
        )
    if config.exhaustive:
        verdicts.append(
            Verdict(
                "invariant_under_group",
                is_invariant(config.field(), f_k, exhaustive=True),
                "all group elements",
            )
        )
    result = {"k": config.k, "methods": methods, "f_k": f_k.to_json(), "rendered": str(f_k)}
    lines = [f"Methods: {', '.join(methods)}", f"f_{config.k} = {f_k}"]
    return emit(config, result, verdicts, lines)
