import argparse

from cli.common import CliConfig, add_method_arguments, add_output_arguments, emit, usage_error, validate_common
from fixedfield import GeneratorSpecs, Verdict
from moebius import closure, enumerate_group, group_generators


def get_parser():
    parser = argparse.ArgumentParser(
        prog="fixedfield group",
        description="List the normalized Moebius maps forming Aut(F_q(x)/F_q).",
    )
    add_method_arguments(
        parser,
        method_help="Accepted so every command shares one grammar; the listing does not depend on it.",
        exhaustive_help="Also check that the generators close up to the whole listed group.",
    )
    add_output_arguments(parser)
    return parser


def group_main(argv, config: CliConfig) -> int:
    parser = get_parser()
    args = parser.parse_args(argv)
    config.method = args.method
    config.format = args.format
    config.exhaustive = args.exhaustive
    try:
        validate_common(config)
    except (AssertionError, ValueError) as exc:
        usage_error(parser, exc)

    spec = config.field()
    maps = enumerate_group(spec)
    expected = GeneratorSpecs.for_field(spec).group_order
    verdicts = [
        Verdict(
            "group_order",
            len(set(maps)) == len(maps) == expected,
            f"{len(maps)} maps, (q+1)q(q-1) = {expected}",
        )
    ]
    if config.exhaustive:
        generated = closure(group_generators(spec))
        verdicts.append(
            Verdict(
                "generator_closure",
                generated == set(maps),
                f"{len(generated)} maps generated by x+1, yx, 1/x",
            )
        )
    result = {"count": len(maps), "maps": [phi.to_json() for phi in maps]}
    lines = [f"x -> {phi}" for phi in maps] + [f"{len(maps)} maps"]
    return emit(config, result, verdicts, lines)
