"""Per-degree measure reports: every spreading measure with its provenance and audit flags."""
from collections import OrderedDict, namedtuple

from mpmath import mp

from exceptions import UnsupportedFamily
from helpers.logger import logger
from helpers.precision import PrecisionContext, working_precision
from measures.closed_form import fisher_length, stddev
from measures.family import JACOBI, LAGUERRE, Family, check_family
from measures.order import RenyiOrder, is_integrable, require_length_order
from measures.quadrature import integrate_density_power
from measures.renyi_bell import renyi_length_bell
from measures.renyi_lauricella import renyi_length_laguerre_lauricella
from measures.shannon import bound_check, optimize_bound, shannon_asymptotic, shannon_inequality_check, shannon_numeric

CLOSED_FORM = "closed_form"
BELL = "bell"
LAURICELLA = "lauricella"
ORACLE = "oracle"
ASYMPTOTIC = "asymptotic"
ROUTES = (BELL, LAURICELLA, ORACLE)

"""
Types
"""

Measure = namedtuple('Measure', 'value provenance')

MeasureReport = namedtuple('MeasureReport', [
    'family', 'n', 'stddev', 'fisher_length', 'renyi', 'renyi_oracle', 'shannon', 'shannon_asym',
    'cramer_rao', 'bound', 'bound_param', 'cr_ok', 'shannon_ok', 'bound_ok'])

"""
Renyi lengths
"""

def _length(w, q: RenyiOrder):
    return mp.power(w, -1 / (mp.mpf(q.two_q) / 2 - 1))

def renyi_oracle(family: Family, n: int, q: RenyiOrder, ctx: PrecisionContext) -> Measure:
    """Quadrature length; value None when rho^q is not integrable"""
    if not is_integrable(family, q):
        return Measure(None, ORACLE)
    w = integrate_density_power(family, n, q, ctx)
    with working_precision(ctx):
        return Measure(_length(w, q), ORACLE)

def renyi_route(family: Family, n: int, q: RenyiOrder, route: str, ctx: PrecisionContext,
                bell_max_degree: int = 12) -> Measure:
    """Length through the requested route, falling back where the route does not apply

    Bell falls back to the oracle above bell_max_degree; Lauricella falls back to
    Bell for odd 2q with n >= 1.
    """
    require_length_order(q)
    if not is_integrable(family, q):
        return Measure(None, route)
    if route == LAURICELLA:
        if family.kind != LAGUERRE:
            raise UnsupportedFamily("The Lauricella route exists for Laguerre polynomials only.")
        if not (q.is_half_integer and n >= 1):
            return Measure(renyi_length_laguerre_lauricella(n, family.alpha, q, ctx), LAURICELLA)
        route = BELL
    if route == BELL and n <= bell_max_degree:
        return Measure(renyi_length_bell(family, n, q, ctx), BELL)
    return renyi_oracle(family, n, q, ctx)

"""
Reports
"""

def build_report(family: Family, n: int, orders: list, route: str, ctx: PrecisionContext,
                 with_shannon: bool = True, bell_max_degree: int = 12) -> MeasureReport:
    """Compute every measure of rho_n

    Args:
        family: polynomial family
        n: degree
        orders: Renyi orders to report
        route: bell, lauricella or oracle for the L columns
        ctx: precision context
        with_shannon: compute numeric Shannon values, bounds and audits
        bell_max_degree: largest degree handled by the Bell route

    Returns:
        MeasureReport
    """
    family = check_family(family)
    logger.debug("Building report for degree {}".format(n))
    renyi = OrderedDict()
    oracle = OrderedDict()
    for q in orders:
        renyi[q.label()] = renyi_route(family, n, q, route, ctx, bell_max_degree)
        oracle[q.label()] = renyi_oracle(family, n, q, ctx)

    with working_precision(ctx):
        dx = stddev(family, n)
        fx = fisher_length(family, n)
    if mp.isinf(fx):
        cramer_rao, cr_ok = Measure(mp.inf, CLOSED_FORM), None
    else:
        cramer_rao = Measure(fx * dx, CLOSED_FORM)
        # delta x <= Delta x is only claimed for n >= 1; the weight itself may violate it
        cr_ok = bool(fx <= dx * (1 + mp.mpf(10) ** -12)) if n >= 1 else None

    shannon = shannon_asym = bound = bound_param = shannon_ok = bound_ok = None
    if with_shannon:
        result = shannon_numeric(family, n, ctx)
        shannon = Measure(result, ORACLE)
        if n >= 1 or family.kind == JACOBI:
            shannon_asym = Measure(shannon_asymptotic(family, n), ASYMPTOTIC)
        value, param = optimize_bound(family, n)
        bound, bound_param = Measure(value, CLOSED_FORM), param
        shannon_ok = shannon_inequality_check(family, n, ctx, result).passed
        bound_ok = bound_check(family, n, ctx, result).passed

    return MeasureReport(family, n, Measure(dx, CLOSED_FORM), Measure(fx, CLOSED_FORM), renyi, oracle,
                         shannon, shannon_asym, cramer_rao, bound, bound_param, cr_ok, shannon_ok, bound_ok)

def _value(measure: Measure):
    return None if measure is None else measure.value

def report_columns(orders: list) -> list:
    """Canonical column order for a set of Renyi orders"""
    labels = [q.label() for q in orders]
    return (["family", "alpha", "beta", "n", "stddev", "fisher_length"]
            + ["L{}".format(label) for label in labels]
            + ["L{}_oracle".format(label) for label in labels]
            + ["shannon_N", "shannon_S", "shannon_err", "shannon_N_asym", "cramer_rao",
               "bound", "bound_param", "cr_ok", "shannon_ok", "bound_ok"])

def report_row(report: MeasureReport) -> tuple:
    """(values, provenance) dictionaries keyed by column name"""
    values = OrderedDict()
    provenance = OrderedDict()

    def put(column, value, source=None):
        values[column] = value
        if source is not None:
            provenance[column] = source

    family = report.family
    put("family", family.kind)
    put("alpha", family.alpha)
    put("beta", family.beta)
    put("n", report.n)
    put("stddev", report.stddev.value, report.stddev.provenance)
    put("fisher_length", report.fisher_length.value, report.fisher_length.provenance)
    for label, measure in report.renyi.items():
        put("L{}".format(label), measure.value, measure.provenance)
    for label, measure in report.renyi_oracle.items():
        put("L{}_oracle".format(label), measure.value, measure.provenance)
    shannon = _value(report.shannon)
    put("shannon_N", shannon and shannon.length, report.shannon and report.shannon.provenance)
    put("shannon_S", shannon and shannon.entropy, report.shannon and report.shannon.provenance)
    put("shannon_err", shannon and shannon.est_error, report.shannon and report.shannon.provenance)
    asym = _value(report.shannon_asym)
    put("shannon_N_asym", asym and asym.length, report.shannon_asym and report.shannon_asym.provenance)
    put("cramer_rao", report.cramer_rao.value, report.cramer_rao.provenance)
    put("bound", _value(report.bound), report.bound and report.bound.provenance)
    put("bound_param", report.bound_param)
    put("cr_ok", report.cr_ok)
    put("shannon_ok", report.shannon_ok)
    put("bound_ok", report.bound_ok)
    return values, provenance
