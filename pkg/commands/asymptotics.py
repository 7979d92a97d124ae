from collections import OrderedDict

from helpers.args import (Command, compute_rows, context_from_args, emit, family_from_args, family_parser,
                          output_parser, parse_degrees, precision_parser, workers_from_args)
from helpers.logger import logger
from helpers.precision import working_precision
from measures.closed_form import asymptotic_cramer_rao, cramer_rao_product, evaluate_rate, stddev
from measures.family import HERMITE, JACOBI
from measures.report import ASYMPTOTIC, CLOSED_FORM, ORACLE
from measures.shannon import asymptotic_length_leading, ratio_constant, shannon_asymptotic, shannon_numeric

COLUMNS = ["family", "alpha", "beta", "n", "shannon_S", "shannon_S_asym", "shannon_N", "shannon_N_asym",
           "shannon_N_leading", "ratio", "ratio_limit", "cramer_rao", "cramer_rao_asym"]

def _asymptotic_row(task: tuple) -> tuple:
    """Numeric Shannon values and Cramer-Rao product next to their large-n forms"""
    family, n, ctx = task
    values, provenance = OrderedDict(), OrderedDict()
    values.update(family=family.kind, alpha=family.alpha, beta=family.beta, n=n)
    numeric = shannon_numeric(family, n, ctx)
    values["shannon_S"], values["shannon_N"] = numeric.entropy, numeric.length
    provenance["shannon_S"] = provenance["shannon_N"] = ORACLE
    with working_precision(ctx):
        if n >= 1 or family.kind == JACOBI:
            asym = shannon_asymptotic(family, n)
            values["shannon_S_asym"], values["shannon_N_asym"] = asym.entropy, asym.length
            values["shannon_N_leading"] = asymptotic_length_leading(family, n)
            provenance["shannon_S_asym"] = provenance["shannon_N_asym"] = ASYMPTOTIC
            provenance["shannon_N_leading"] = ASYMPTOTIC
        values["ratio"] = numeric.length / stddev(family, n)
        provenance["ratio"] = ORACLE
        if family.kind != JACOBI:
            values["ratio_limit"] = ratio_constant()
            provenance["ratio_limit"] = ASYMPTOTIC
        product = cramer_rao_product(family, n)
        values["cramer_rao"] = product
        provenance["cramer_rao"] = CLOSED_FORM
        rate = asymptotic_cramer_rao(family)
        # a zero coefficient marks a family whose Fisher information diverges
        if rate.coefficient != 0 and (n >= 1 or family.kind == HERMITE):
            values["cramer_rao_asym"] = evaluate_rate(rate, n)
            provenance["cramer_rao_asym"] = ASYMPTOTIC
    return values, provenance

class Asymptotics(Command):
    name = "asymptotics"
    description = "Numeric Shannon length and Cramer-Rao product against their large-n behaviour."
    parents = (family_parser, precision_parser, output_parser)

    async def run(self, args) -> int:
        family = family_from_args(args)
        ctx = context_from_args(args)
        tasks = [(family, n, ctx) for n in parse_degrees(args.degrees)]
        rows = await compute_rows(_asymptotic_row, tasks, workers_from_args(args))
        emit(args, ctx, COLUMNS, rows)
        logger.info("Executed asymptotics for {} degrees".format(len(rows)))
        return 0

def setup(subparsers):
    Asymptotics().register(subparsers)
