import database.controllers.measure_rows as measuresdb
from helpers.args import (Command, compute_rows, context_from_args, emit, family_from_args, family_parser,
                          open_store, output_parser, parse_degrees, precision_parser, workers_from_args)
from helpers.config import config as app_config
from helpers.logger import logger
from measures.family import LAGUERRE
from measures.order import parse_order, require_length_order
from measures.report import BELL, ROUTES, LAURICELLA, build_report, report_columns, report_row
from exceptions import UnsupportedFamily

def _measure_row(task: tuple) -> tuple:
    family, n, orders, route, ctx, with_shannon, bell_max_degree = task
    report = build_report(family, n, orders, route, ctx, with_shannon, bell_max_degree)
    return report_row(report)

class Measures(Command):
    name = "measures"
    description = "Every spreading measure of the Rakhmanov densities over a range of degrees."
    parents = (family_parser, precision_parser, output_parser)

    def configure(self, parser):
        parser.add_argument("--q", action="append", dest="orders", default=None,
                            help="Renyi order (repeatable): 2, 3/2, 1.5 ...; default 2")
        parser.add_argument("--route", choices=ROUTES, default=BELL,
                            help="how the L columns are computed; the oracle is always reported")
        parser.add_argument("--no-shannon", action="store_true",
                            help="skip the numeric Shannon columns, bounds and audits")

    async def run(self, args) -> int:
        family = family_from_args(args)
        degrees = parse_degrees(args.degrees)
        orders = [require_length_order(parse_order(text)) for text in (args.orders or ["2"])]
        if args.route == LAURICELLA and family.kind != LAGUERRE:
            raise UnsupportedFamily("The Lauricella route exists for Laguerre polynomials only.")
        ctx = context_from_args(args)
        tasks = [(family, n, orders, args.route, ctx, not args.no_shannon, app_config["bell_max_degree"])
                 for n in degrees]
        rows = await compute_rows(_measure_row, tasks, workers_from_args(args))
        emit(args, ctx, report_columns(orders), rows)
        if await open_store(args):
            if not await measuresdb.create_measure_rows(rows):
                logger.warning("Measure rows were not stored.")
        logger.info("Executed measures for {} degrees".format(len(rows)))
        return 0

def setup(subparsers):
    Measures().register(subparsers)
