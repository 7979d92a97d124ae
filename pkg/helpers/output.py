import csv
import json
import platform
from datetime import datetime, timezone
from fractions import Fraction

import mpmath
from mpmath import mp

from helpers.precision import PrecisionContext

SIGNIFICANT_DIGITS = 17

def format_value(value, null: str = "") -> str:
    """Render one cell: 17 significant digits for reals, inf for +inf, the null token for None"""
    if value is None:
        return null
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        value = mp.mpf(value.numerator) / value.denominator
    if isinstance(value, str):
        return value
    value = mp.mpf(value)
    if mp.isinf(value):
        return "inf" if value > 0 else "-inf"
    if mp.isnan(value):
        return null
    return mpmath.nstr(value, SIGNIFICANT_DIGITS)

def json_value(value):
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Fraction):
        return float(value)
    value = mp.mpf(value)
    if mp.isinf(value):
        return "inf" if value > 0 else "-inf"
    return float(mpmath.nstr(value, SIGNIFICANT_DIGITS))

def run_metadata(ctx: PrecisionContext, argv: list) -> dict:
    """Metadata written only under --meta; data rows never carry timestamps"""
    return {
        "generated": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "python": platform.python_version(),
        "mpmath": mpmath.__version__,
        "bits": ctx.bits,
        "rel_tol": ctx.rel_tol,
        "quad_bits": ctx.quad_bits,
        "quad_tol": ctx.quad_tol,
        "arguments": " ".join(argv),
    }

def write_csv(stream, columns: list, rows: list, null: str = "", meta: dict = None):
    """Write rows (dicts keyed by column) as RFC-4180 CSV

    Args:
        stream: text stream
        columns: header, in order
        rows: list of (values, provenance) pairs
        null: token for undefined values
        meta: optional metadata, written as leading '#' comment lines with the provenance
    """
    if meta is not None:
        for key, value in meta.items():
            stream.write("# {}: {}\n".format(key, value))
        if rows:
            _, provenance = rows[0]
            stream.write("# provenance: {}\n".format(
                ", ".join("{}={}".format(k, v) for k, v in provenance.items())))
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for values, _ in rows:
        writer.writerow([format_value(values.get(column), null) for column in columns])

def write_json(stream, columns: list, rows: list, meta: dict = None):
    """Write rows as a JSON array of objects, each with its provenance object"""
    objects = []
    for values, provenance in rows:
        entry = {column: json_value(values.get(column)) for column in columns}
        entry["provenance"] = dict(provenance)
        objects.append(entry)
    document = objects if meta is None else {"meta": meta, "rows": objects}
    json.dump(document, stream, indent=2)
    stream.write("\n")

def write_rows(stream, fmt: str, columns: list, rows: list, null: str = "", meta: dict = None):
    if fmt == "json":
        write_json(stream, columns, rows, meta)
    else:
        write_csv(stream, columns, rows, null, meta)
