import json
import sys
import uuid

import database.controllers.checks as checksdb
from exceptions import UsageError
from helpers.args import Command, context_from_args, open_store, precision_parser
from helpers.logger import logger
from measures.suites import DEFAULT_TOLERANCES, SUITES, run_suites

TABLE_COLUMNS = ("scope", "name", "measured", "expected", "deviation", "tolerance", "passed")

def parse_tolerances(items: list) -> dict:
    """NAME=VALUE pairs into a tolerance override dict"""
    overrides = {}
    for item in items or []:
        name, _, value = item.partition("=")
        if name not in DEFAULT_TOLERANCES:
            raise UsageError("Unknown tolerance '{}' (expected one of {}).".format(
                name, ", ".join(DEFAULT_TOLERANCES)))
        try:
            overrides[name] = float(value)
        except ValueError:
            raise UsageError("Tolerance {} needs a number (got '{}').".format(name, value))
    return overrides

def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "NO"
    if isinstance(value, float):
        return "{:.6g}".format(value)
    return str(value)

def write_table(stream, results: list):
    rows = [[_cell(getattr(check, column)) for column in TABLE_COLUMNS] for check in results]
    widths = [max([len(column)] + [len(row[i]) for row in rows]) for i, column in enumerate(TABLE_COLUMNS)]
    stream.write("  ".join(column.ljust(w) for column, w in zip(TABLE_COLUMNS, widths)).rstrip() + "\n")
    for row in rows:
        stream.write("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n")

def write_report(stream, results: list):
    document = {"passed": all(check.passed for check in results),
                "checks": [check._asdict() for check in results]}
    json.dump(document, stream, indent=2)
    stream.write("\n")

class Verify(Command):
    name = "verify"
    description = "Check every closed form and route against its oracle."
    parents = (precision_parser,)

    def configure(self, parser):
        parser.add_argument("--scope", choices=list(SUITES) + ["all"], default="all")
        parser.add_argument("--tol", action="append", default=None, metavar="NAME=VALUE",
                            help="override a named tolerance (repeatable)")
        parser.add_argument("--table", action="store_true", help="aligned text table instead of JSON")

    async def run(self, args) -> int:
        overrides = parse_tolerances(args.tol)
        results = run_suites(args.scope, context_from_args(args), overrides)
        if args.table:
            write_table(sys.stdout, results)
        else:
            write_report(sys.stdout, results)
        failed = [check for check in results if not check.passed]
        for check in failed:
            logger.warning("Check failed: [{}] {}".format(check.scope, check.name))
        if await open_store(args):
            run = uuid.uuid4().hex
            if not await checksdb.create_checks(run, results):
                logger.warning("Checks were not stored.")
            else:
                logger.info("Stored checks as run {}".format(run))
        logger.info("Executed verify: {} checks, {} failed".format(len(results), len(failed)))
        return 1 if failed else 0

def setup(subparsers):
    Verify().register(subparsers)
