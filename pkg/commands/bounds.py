from collections import OrderedDict

from exceptions import UsageError
from helpers.args import (Command, compute_rows, context_from_args, emit, family_from_args, family_parser,
                          output_parser, parse_degrees, parse_pair, precision_parser, workers_from_args)
from helpers.logger import logger
from helpers.precision import quad_precision
from measures.family import HERMITE, LAGUERRE
from measures.report import CLOSED_FORM, ORACLE
from measures.shannon import bound_check, optimize_bound, shannon_inequality_check, shannon_numeric

COLUMNS = ["family", "alpha", "beta", "n", "shannon_N", "shannon_err", "bound", "bound_param", "bound_ok",
           "shannon_ineq_rhs", "shannon_ok"]

def _bound_row(task: tuple) -> tuple:
    family, n, ctx, params = task
    values, provenance = OrderedDict(), OrderedDict()
    values.update(family=family.kind, alpha=family.alpha, beta=family.beta, n=n)
    numeric = shannon_numeric(family, n, ctx)
    bound = bound_check(family, n, ctx, numeric, params)
    inequality = shannon_inequality_check(family, n, ctx, numeric)
    values["shannon_N"], values["shannon_err"] = numeric.length, numeric.est_error
    provenance["shannon_N"] = provenance["shannon_err"] = ORACLE
    values["bound"] = bound.rhs
    provenance["bound"] = CLOSED_FORM
    with quad_precision(ctx):
        _, values["bound_param"] = optimize_bound(family, n, params)
    values["bound_ok"] = bound.passed
    values["shannon_ineq_rhs"] = inequality.rhs
    provenance["shannon_ineq_rhs"] = CLOSED_FORM
    values["shannon_ok"] = inequality.passed
    return values, provenance

class Bounds(Command):
    name = "bounds"
    description = "Optimised upper bounds of the Shannon length next to its numeric value."
    parents = (family_parser, precision_parser, output_parser)

    def configure(self, parser):
        parser.add_argument("--k-max", type=int, default=12, help="largest even k tried for Hermite")
        parser.add_argument("--b-range", default="0.1,4", help="LO,HI bracket of b for Laguerre")

    async def run(self, args) -> int:
        family = family_from_args(args)
        params = None
        if family.kind == HERMITE:
            if args.k_max < 2:
                raise UsageError("--k-max must be at least 2 (got {}).".format(args.k_max))
            params = args.k_max
        elif family.kind == LAGUERRE:
            params = parse_pair(args.b_range, "--b-range")
        ctx = context_from_args(args)
        tasks = [(family, n, ctx, params) for n in parse_degrees(args.degrees)]
        rows = await compute_rows(_bound_row, tasks, workers_from_args(args))
        emit(args, ctx, COLUMNS, rows)
        logger.info("Executed bounds for {} degrees".format(len(rows)))
        return 0

def setup(subparsers):
    Bounds().register(subparsers)
