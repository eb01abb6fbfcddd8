import argparse
import sys

from cli.common import CliConfig, parse_modulus
from cli.fk_dispatch import fk_main
from cli.generator_dispatch import generator_main
from cli.group_dispatch import group_main
from cli.verify_dispatch import verify_main
from utils.log import get_logger, setup_logging

COMMANDS = {
    "generator": generator_main,
    "verify": verify_main,
    "group": group_main,
    "fk": fk_main,
}


def get_parser():
    parser = argparse.ArgumentParser(
        prog="fixedfield",
        description="Construct the fixed field of Aut(F_q(x)/F_q) and verify it by exact arithmetic.",
        add_help=False,
    )
    parser.add_argument("--p", type=int, required=True, help="The characteristic, a prime.")
    parser.add_argument("--n", type=int, required=True, help="The extension degree, q = p^n.")
    parser.add_argument(
        "--modulus",
        type=parse_modulus,
        default=None,
        help="Monic irreducible modulus as ascending digits d0,d1,...,1 (default: smallest one).",
    )
    parser.add_argument(
        "--log-level",
        type=str,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default="WARNING",
        help="Logging level for messages on stderr.",
    )
    parser.add_argument(
        "--log-file",
        type=str,
        default=None,
        help="Also append log messages to this file.",
    )
    parser.add_argument(
        "command",
        choices=list(COMMANDS),
        help="The command to run.",
    )
    return parser


def main(argv=None) -> int:
    parser = get_parser()
    # parse_known_args leaves the command's own options for its parser
    args, unknown = parser.parse_known_args(argv)
    setup_logging(args.log_level, args.log_file)
    logger = get_logger("run")

    config = CliConfig(p=args.p, n=args.n, modulus=args.modulus, command=args.command)
    try:
        spec = config.field()
    except ValueError as exc:
        parser.error(str(exc))
    logger.info(f"Running {args.command} over {spec}")
    return COMMANDS[args.command](unknown, config)


if __name__ == "__main__":
    sys.exit(main())
