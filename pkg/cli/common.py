import argparse
import json
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from finite_field import FieldSpec, make_field
from fixedfield import Method, Verdict

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

METHOD_CHOICES = ["direct", "factored", "closed", "all"]
CLI_METHODS = {
    "direct": Method.DIRECT,
    "factored": Method.FACTORED,
    "closed": Method.CLOSED_FORM,
}


@dataclass
class CliConfig:
    p: int
    n: int
    modulus: Optional[List[int]] = None
    command: str = "generator"
    k: Optional[int] = None
    method: str = "all"
    format: str = "text"
    exhaustive: bool = False
    max_workers: int = 1
    seed: int = 0
    progress: bool = False
    spec: Optional[FieldSpec] = field(default=None, repr=False)

    def field(self) -> FieldSpec:
        if self.spec is None:
            self.spec = make_field(self.p, self.n, self.modulus)
        return self.spec


def parse_modulus(text: str) -> List[int]:
    try:
        return [int(d) for d in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Modulus must be comma separated digits, got {text!r}")


def add_method_arguments(parser: argparse.ArgumentParser, method_help: str, exhaustive_help: str):
    """--method and --exhaustive, which every command accepts."""
    parser.add_argument(
        "--method",
        type=str,
        choices=METHOD_CHOICES,
        default="all",
        help=method_help,
    )
    parser.add_argument(
        "--exhaustive",
        action="store_true",
        help=exhaustive_help,
    )


def selected_methods(config: CliConfig) -> List[Method]:
    if config.method == "all":
        return list(CLI_METHODS.values())
    return [CLI_METHODS[config.method]]


def add_output_arguments(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--format",
        type=str,
        choices=["text", "json"],
        default="text",
        help="Output format; json output is deterministic.",
    )
    parser.add_argument(
        "--max-workers",
        type=int,
        default=1,
        help="The maximum number of workers summing group partitions simultaneously.",
    )
    parser.add_argument(
        "--progress",
        action="store_true",
        help="Show progress bars on stderr.",
    )


def validate_common(config: CliConfig):
    assert config.max_workers >= 1, "--max-workers must be at least 1."
    config.field()


def render_field(spec: FieldSpec) -> str:
    text = f"{spec} (p = {spec.p}, n = {spec.n}"
    if spec.modulus:
        text += f", modulus {spec.render_modulus()}"
    return text + ")"


def emit(config: CliConfig, result, verdicts: Sequence[Verdict], lines: Sequence[str] = ()) -> int:
    """Print the result in the configured format; exit status 0 iff every verdict passed."""
    spec = config.field()
    if config.format == "json":
        record = {
            "field": spec.to_json(),
            "command": config.command,
            "result": result,
            "verdicts": [verdict.to_json() for verdict in verdicts],
        }
        print(json.dumps(record, indent=2))
    else:
        print(f"Field: {render_field(spec)}")
        for line in lines:
            print(line)
        for verdict in verdicts:
            status = "PASS" if verdict.passed else "FAIL"
            print(f"{status} {verdict.name}" + (f": {verdict.detail}" if verdict.detail else ""))
        failed = [verdict.name for verdict in verdicts if not verdict.passed]
        if failed:
            print(f"{len(failed)} of {len(verdicts)} checks failed: {', '.join(failed)}")
        elif verdicts:
            print(f"All {len(verdicts)} checks passed")
    return EXIT_OK if all(verdicts) else EXIT_VERIFICATION_FAILED


def usage_error(parser: argparse.ArgumentParser, exc: Exception):
    parser.error(str(exc) or type(exc).__name__)
