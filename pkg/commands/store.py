from collections import OrderedDict

import database.controllers.checks as checksdb
import database.controllers.measure_rows as measuresdb
from exceptions import UsageError
from helpers.args import Command, emit, open_store, output_parser
from helpers.logger import logger
from helpers.precision import default_context
from measures.family import KINDS

RUN_COLUMNS = ["run", "checks", "failed"]

def _rows(records: list) -> list:
    return [(OrderedDict(record._asdict()), {}) for record in records]

class Store(Command):
    name = "store"
    description = "List or clear the measure rows and verification runs kept in the result store."
    parents = (output_parser,)

    def configure(self, parser):
        parser.add_argument("--store", default=None, help="sqlite file to read (defaults to the configured one)")
        target = parser.add_mutually_exclusive_group(required=True)
        target.add_argument("--family", choices=KINDS, help="measure cells stored for this family")
        target.add_argument("--run", default=None, help="checks stored for this verification run")
        target.add_argument("--runs", action="store_true", help="every stored verification run")
        parser.add_argument("--alpha", type=float, default=0.0)
        parser.add_argument("--beta", type=float, default=0.0)
        parser.add_argument("--failed", action="store_true", help="only the failed checks of --run")
        parser.add_argument("--clear", action="store_true",
                            help="delete every measure row (with --family) or the checks of --run")

    async def run(self, args) -> int:
        if not await open_store(args):
            raise UsageError("No result store configured (use --store or the database setting).")
        if args.runs:
            if args.clear:
                raise UsageError("--clear needs --family or --run.")
            runs = await checksdb.read_runs()
            if runs is None:
                return 3
            rows = [(OrderedDict(zip(RUN_COLUMNS, run)), {}) for run in runs]
            columns = RUN_COLUMNS
        elif args.run:
            if args.clear:
                cleared = await checksdb.delete_checks_for_run(args.run)
                logger.info("Cleared checks of run {}".format(args.run))
                return 0 if cleared else 3
            read = checksdb.read_failed_checks if args.failed else checksdb.read_checks_for_run
            records = await read(args.run)
            if records is None:
                return 3
            rows, columns = _rows(records), list(checksdb.RespCheck._fields)
        else:
            if args.clear:
                cleared = await measuresdb.delete_all_measure_rows()
                logger.info("Cleared stored measure rows")
                return 0 if cleared else 3
            records = await measuresdb.read_measure_rows_for_family(args.family, args.alpha, args.beta)
            if records is None:
                return 3
            rows, columns = _rows(records), list(measuresdb.RespMeasureCell._fields)
        emit(args, default_context(), columns, rows)
        logger.info("Executed store: {} rows".format(len(rows)))
        return 0

def setup(subparsers):
    Store().register(subparsers)
