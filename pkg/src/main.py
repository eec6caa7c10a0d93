from commands import COMMANDS, execute, load_run_config, demo_config
from commands.schemes import apply_override, RunConfig
from helpers.config import get_settings
from helpers.errors import ConfigError
from utils.json_format import dumps_fixed
import argparse
import logging
import sys

logger = logging.getLogger(__name__)

def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--config", help="JSON run configuration")
    shared.add_argument(
        "--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE",
        help="override one configuration entry, e.g. --set evolve.dt=0.005",
    )
    shared.add_argument("--verbose", action="store_true", help="log at DEBUG level")

    parser = argparse.ArgumentParser(
        prog="soliton-lab",
        description="Solitary waves of U(1)-invariant nonlinear Klein-Gordon equations.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("solve", parents=[shared], help="shoot the radial profile")
    commands.add_parser("check", parents=[shared], help="rest-frame functionals and identities")
    commands.add_parser("boost-scan", parents=[shared], help="measured vs predicted E and P of boosted waves")
    commands.add_parser("evolve", parents=[shared], help="leapfrog evolution of a boosted wave")
    commands.add_parser("demo", parents=[shared], help="1D cubic walkthrough of every command")

    return parser

def resolve_config(args) -> RunConfig:
    if args.command != "demo" or args.config:
        return load_run_config(args.config, args.overrides)

    payload = demo_config().normalized()
    for assignment in args.overrides:
        apply_override(payload, assignment)
    return RunConfig.model_validate(payload)

def main(argv=None, emit=print) -> int:
    args = build_parser().parse_args(argv)
    settings = get_settings()

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.LOG_LEVEL,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        config = resolve_config(args)
    except ConfigError as error:
        logger.error(error.message)
        emit(dumps_fixed(error.to_dict()))
        return int(error.exit_code)
    except ValueError as error:
        failure = ConfigError(f"invalid run configuration: {error}")
        emit(dumps_fixed(failure.to_dict()))
        return int(failure.exit_code)

    return execute(args.command, COMMANDS[args.command], config, settings, emit=emit)

if __name__ == "__main__":
    sys.exit(main())
