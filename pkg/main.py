import argparse
import asyncio
import importlib
import os
import platform
import sys

import mpmath

import exceptions
from helpers.config import config as app_config
from helpers.logger import logger, setup_logger

"""
Setup parser
"""

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spreadpoly",
        description="Spreading measures of the Rakhmanov densities of Hermite, Laguerre and Jacobi polynomials.")
    parser.add_argument("--log-level", default=None, help="override the configured log level")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    load_commands(subparsers)
    return parser

# Functions
# =========

def load_commands(subparsers) -> None:
    for file in sorted(os.listdir(f"{os.path.realpath(os.path.dirname(__file__))}/commands")):
        if file.endswith(".py") and not file.startswith("_"):
            extension = file[:-3]
            try:
                module = importlib.import_module(f"commands.{extension}")
                module.setup(subparsers)
                logger.debug(f"Loaded command '{extension}'")
            except Exception as e:
                exception = f"{type(e).__name__}: {e}"
                logger.error(
                    f"Failed to load command {extension}\n{exception}")

def main(argv: list = None) -> int:
    """Run one subcommand

    Returns:
        0 on success, 1 when a verification check fails, 2 on usage errors,
        3 on numerical failures
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    if args.log_level:
        setup_logger(args.log_level, app_config["log_file"])
    logger.debug(f"Python version: {platform.python_version()}, mpmath {mpmath.__version__}")
    try:
        code = asyncio.run(args.handler(args))
    except exceptions.UsageError as e:
        logger.error(e.message)
        return 2
    except exceptions.NumericFailure as e:
        logger.error(e.message)
        return 3
    logger.info(f"Executed {args.command} command")
    return code

# Main
# ====

if __name__ == "__main__":
    sys.exit(main())
