import argparse

from cli.common import (
    CLI_METHODS,
    METHOD_CHOICES,
    CliConfig,
    add_method_arguments,
    add_output_arguments,
    emit,
    usage_error,
    validate_common,
)
from fixedfield import Method, build_report


def get_parser():
    parser = argparse.ArgumentParser(
        prog="fixedfield generator",
        description="Compute the generator f_m of the fixed field of Aut(F_q(x)/F_q) and verify it.",
    )
    add_method_arguments(
        parser,
        method_help="How to compute f_m; 'all' computes every method and checks they agree.",
        exhaustive_help="Check invariance under every group element instead of the generators.",
    )
    add_output_arguments(parser)
    return parser


def validate_args(config: CliConfig):
    validate_common(config)
    assert config.method in METHOD_CHOICES, f"Unknown method {config.method}."


def generator_main(argv, config: CliConfig) -> int:
    parser = get_parser()
    args = parser.parse_args(argv)
    config.method = args.method
    config.format = args.format
    config.exhaustive = args.exhaustive
    config.max_workers = args.max_workers
    config.progress = args.progress
    try:
        validate_args(config)
    except (AssertionError, ValueError) as exc:
        usage_error(parser, exc)

    spec = config.field()
    if config.method == "all":
        method, compare_with = Method.CLOSED_FORM, [Method.DIRECT, Method.FACTORED]
    else:
        method, compare_with = CLI_METHODS[config.method], None
    report = build_report(
        spec,
        method,
        exhaustive=True if config.exhaustive else None,
        compare_with=compare_with,
        max_workers=config.max_workers,
        progress=config.progress,
    )
    lines = [
        f"Method: {report.method.value}"
        + (f" (compared with {', '.join(m.value for m in report.compared_with)})" if report.compared_with else ""),
        f"m = {report.m}, |G| = {report.group_order}",
        f"f_{report.m} = {report.generator}",
        f"[F(x):F(f_{report.m})] = {report.degree}",
    ]
    return emit(config, report.to_json(), report.verdicts(), lines)
