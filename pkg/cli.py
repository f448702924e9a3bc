"""
hookcalc command-line entry point
Parses the subcommand grammar, runs one command and writes one document to stdout
"""
import argparse
import json
import logging
import sys

from commands import ALL_COMMANDS
from commands.output import error_document, render
from config import Config
from errors import HookcalcError, InvalidArgumentError

logger = logging.getLogger('hookcalc')

LOG_FORMAT = '%(asctime)s [%(levelname)s] %(name)s: %(message)s'


def _caps_epilog():
    lines = ['caps (override with HOOKCALC_<NAME>, or a KEY=value file named by HOOKCALC_CONFIG):']
    for name, value in Config.caps().items():
        lines.append(f'  {name}={value}')
    return '\n'.join(lines)


def build_parser():
    parser = argparse.ArgumentParser(
        prog='hookcalc',
        description='Exact computations for stack-sorting, valid hook configurations, troupes and cumulants.',
        epilog=_caps_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument('--format', choices=Config.OUTPUT_FORMATS, help='output format (default json)')
    parser.add_argument('--decimal', type=int, metavar='DIGITS', help='add decimal renderings of fractions')
    parser.add_argument('--log-level', help='DEBUG, INFO, WARNING or ERROR')
    parser.add_argument('--workers', type=int, help='process pool size (1 runs serially)')
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True
    for group in ALL_COMMANDS:
        group.attach(subparsers)
    return parser


def configure_logging(level):
    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.WARNING),
        format=LOG_FORMAT,
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


def run(argv=None, stdout=None, stderr=None):
    """Run one command; returns the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    configure_logging(args.log_level or Config.LOG_LEVEL)
    fmt = args.format or (Config.OUTPUT_FORMAT if Config.OUTPUT_FORMAT in Config.OUTPUT_FORMATS else 'json')
    saved_workers = Config.WORKERS
    if args.workers is not None:
        Config.WORKERS = args.workers
    try:
        try:
            for warning in Config.validate_runtime():
                logger.warning(warning)
        except ValueError as e:
            raise InvalidArgumentError(str(e))
        logger.debug("running %s", args.command_path)
        outcome = args.handler(args)
    except HookcalcError as e:
        logger.debug("%s failed: %s", args.command_path, e)
        print(json.dumps(error_document(args.command_path, e)), file=stderr)
        return e.exit_code
    finally:
        Config.WORKERS = saved_workers

    print(render(args.command_path, outcome, fmt, args.decimal), file=stdout)
    return 0


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
