import argparse
import sys

from mzv_utilities.command_line.finite_diagnostics import add_diagnostic_parsers
from mzv_utilities.command_line.index_queries import add_index_query_parsers
from mzv_utilities.command_line.verify_relations import add_verify_parsers
from mzv_utilities.common import MZVUtilitiesError, load_config_file
from mzv_utilities.logger import enable_file_logging, logger


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mzv-ohno",
        description="Ohno-type relations for multiple zeta(-star) values and their "
        "finite analogues: index queries, relation instances and verification sweeps",
    )
    parser.add_argument(
        "--config",
        help="YAML file whose keys mirror the long flags; explicit flags win",
    )
    parser.add_argument("--log-dir", help="Also log to mzv-ohno.log in this directory")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    add_index_query_parsers(subparsers)
    add_verify_parsers(subparsers)
    add_diagnostic_parsers(subparsers)
    return parser, subparsers


def _config_value(action, value):
    # a single value for a multi-value flag, e.g. `families: oyama`
    if action.nargs in ("+", "*") and not isinstance(value, list):
        return [value]
    return value


def apply_config_defaults(parser, subparsers, config):
    """Feed config values into the parsers as defaults, ignoring unknown keys"""
    known = set()
    for sub in [parser] + list(subparsers.choices.values()):
        actions = {action.dest: action for action in sub._actions}
        values = {
            key: _config_value(actions[key], value)
            for (key, value) in config.items()
            if key in actions
        }
        sub.set_defaults(**values)
        known.update(values)
    for key in sorted(set(config) - known):
        logger.warning(f"Ignoring unknown config key `{key}`")


def run(argv):
    """Run the command line for `argv` and return the process exit code

    0 when everything passes, 1 when any relation check fails, 2 on usage or
    configuration errors (message on stderr).
    """
    parser, subparsers = build_parser()
    pre_parser = argparse.ArgumentParser(add_help=False)
    pre_parser.add_argument("--config")
    known, _ = pre_parser.parse_known_args(argv)
    try:
        if known.config:
            apply_config_defaults(parser, subparsers, load_config_file(known.config))
        args = parser.parse_args(argv)
    except MZVUtilitiesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return exc.code
    if args.log_dir:
        enable_file_logging(args.log_dir)
    try:
        return args.handler(args)
    except MZVUtilitiesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
