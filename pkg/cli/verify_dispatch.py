import argparse

from cli.common import (
    CliConfig,
    add_method_arguments,
    add_output_arguments,
    emit,
    selected_methods,
    usage_error,
    validate_common,
)
from fixedfield import run_verification_suite


def get_parser():
    parser = argparse.ArgumentParser(
        prog="fixedfield verify",
        description="Run the full exact verification suite for one finite field.",
    )
    add_method_arguments(
        parser,
        method_help="Which computations of f_m methods_agree compares; a single method is checked against "
        "the closed form (the closed form against the direct sum).",
        exhaustive_help="Run group axioms and invariance over the whole group even for q > 5.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=0,
        help="Seed for the randomized checks.",
    )
    add_output_arguments(parser)
    return parser


def validate_args(config: CliConfig):
    validate_common(config)


def verify_main(argv, config: CliConfig) -> int:
    parser = get_parser()
    args = parser.parse_args(argv)
    config.method = args.method
    config.format = args.format
    config.exhaustive = args.exhaustive
    config.seed = args.seed
    config.max_workers = args.max_workers
    config.progress = args.progress
    try:
        validate_args(config)
    except (AssertionError, ValueError) as exc:
        usage_error(parser, exc)

    verdicts = run_verification_suite(
        config.field(),
        exhaustive=True if config.exhaustive else None,
        seed=config.seed,
        max_workers=config.max_workers,
        progress=config.progress,
        methods=selected_methods(config),
    )
    failed = [verdict.name for verdict in verdicts if not verdict.passed]
    result = {"checks": len(verdicts), "passed": len(verdicts) - len(failed), "failed": failed}
    return emit(config, result, verdicts)
