"""Shared argparse plumbing for the subcommands in commands/."""
import argparse
import asyncio
import sys
from concurrent.futures import ProcessPoolExecutor

from exceptions import InvalidDegree, UsageError
from helpers import db
from helpers.config import config as app_config
from helpers.logger import logger
from helpers.output import run_metadata, write_rows
from helpers.precision import PrecisionContext, default_context
from measures.family import KINDS, Family, make_family

"""
Command base
"""

class Command:
    """One subcommand: configure() adds its flags, run() executes it and returns the exit code"""

    name = ""
    description = ""
    parents = ()

    def register(self, subparsers) -> argparse.ArgumentParser:
        parser = subparsers.add_parser(self.name, help=self.description, description=self.description,
                                       parents=[build() for build in self.parents])
        self.configure(parser)
        parser.set_defaults(handler=self.run, command=self.name)
        return parser

    def configure(self, parser: argparse.ArgumentParser):
        pass

    async def run(self, args) -> int:
        raise NotImplementedError

"""
Parent parsers
"""

def family_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--family", required=True, choices=KINDS)
    parser.add_argument("--alpha", type=float, default=0.0)
    parser.add_argument("--beta", type=float, default=0.0)
    parser.add_argument("--n", required=True, dest="degrees",
                        help="degrees as a..b, a comma list or a single value")
    return parser

def precision_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--bits", type=int, default=None, help="base working precision in bits")
    parser.add_argument("--rtol", type=float, default=None, help="relative tolerance of precision escalation")
    parser.add_argument("--workers", type=int, default=None, help="rows computed in parallel processes")
    parser.add_argument("--store", default=None, help="sqlite file receiving the results")
    return parser

def output_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--output", default=None, help="file to write instead of stdout")
    parser.add_argument("--null", default="", help="token written for undefined values")
    parser.add_argument("--meta", action="store_true", help="prepend run metadata")
    return parser

"""
Argument conversion
"""

def parse_degrees(text: str) -> list:
    """'3', '0..20' or '10,100' into a list of non-negative degrees"""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            degrees = list(range(int(lo), int(hi) + 1))
        else:
            degrees = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise InvalidDegree("Cannot parse degree list '{}'.".format(text))
    if not degrees:
        raise InvalidDegree("Degree list '{}' is empty.".format(text))
    if min(degrees) < 0:
        raise InvalidDegree("Degrees must be non-negative (got {}).".format(min(degrees)))
    return degrees

def parse_pair(text: str, flag: str) -> tuple:
    try:
        lo, hi = (float(part) for part in text.split(","))
    except ValueError:
        raise UsageError("{} expects LO,HI (got '{}').".format(flag, text))
    if not 0 < lo < hi:
        raise UsageError("{} needs 0 < LO < HI (got '{}').".format(flag, text))
    return lo, hi

def family_from_args(args) -> Family:
    return make_family(args.family, _number(args.alpha), _number(args.beta))

def _number(value: float):
    # integral parameters stay ints so gamma-function shortcuts see exact values
    return int(value) if float(value).is_integer() else value

def context_from_args(args) -> PrecisionContext:
    return default_context(bits=getattr(args, "bits", None), rel_tol=getattr(args, "rtol", None))

def workers_from_args(args) -> int:
    workers = getattr(args, "workers", None) or app_config["workers"]
    if workers < 1:
        raise UsageError("--workers must be at least 1 (got {}).".format(workers))
    return workers

"""
Row computation and output
"""

async def compute_rows(compute, tasks: list, workers: int) -> list:
    """Apply compute to every task, in a process pool when workers > 1; results keep task order"""
    if workers == 1 or len(tasks) == 1:
        return [compute(task) for task in tasks]
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return await asyncio.gather(*[loop.run_in_executor(pool, compute, task) for task in tasks])

def emit(args, ctx: PrecisionContext, columns: list, rows: list, argv: list = None):
    meta = run_metadata(ctx, argv if argv is not None else sys.argv[1:]) if args.meta else None
    if args.output:
        with open(args.output, "w", newline="") as stream:
            write_rows(stream, args.format, columns, rows, args.null, meta)
        logger.info("Wrote {} rows to {}".format(len(rows), args.output))
    else:
        write_rows(sys.stdout, args.format, columns, rows, args.null, meta)

async def open_store(args) -> bool:
    """Initialise the result store named by --store or the config; False when none is configured"""
    path = getattr(args, "store", None) or app_config["database"]
    if not path:
        return False
    try:
        await db.init_db(path)
    except Exception as e:
        logger.error("Unable to open result store {}: {}".format(path, e))
        return False
    return True
