from collections import namedtuple

import aiosqlite

from helpers import db
from helpers.logger import logger
from helpers.output import format_value

"""
Response Types
"""

RespMeasureCell = namedtuple('RespMeasureCell', 'family alpha beta n column value provenance')

"""
Functions
"""

async def create_measure_rows(rows: list) -> bool:
    """Store report rows cell by cell

    Args:
        rows: (values, provenance) pairs as built by report_row

    Returns:
        True on success
    """
    cells = []
    for values, provenance in rows:
        key = (values["family"], float(values["alpha"]), float(values["beta"]), int(values["n"]))
        for column, value in values.items():
            if column in ("family", "alpha", "beta", "n"):
                continue
            cells.append(key + (column, format_value(value, None),
                                provenance.get(column)))
    async with aiosqlite.connect(db.DATABASE_PATH) as conn:
        try:
            await conn.executemany(
                    'INSERT INTO measure_rows(family, alpha, beta, n, "column", value, provenance) '
                    'VALUES (?, ?, ?, ?, ?, ?, ?)',
                    cells)
            await conn.commit()
            return True
        except Exception as e:
            logger.error(e)
            return False

async def read_measure_rows_for_family(family: str, alpha: float = 0, beta: float = 0) -> list[RespMeasureCell] | None:
    async with aiosqlite.connect(db.DATABASE_PATH) as conn:
        try:
            rows = await conn.execute(
                    'SELECT family, alpha, beta, n, "column", value, provenance FROM measure_rows '
                    'WHERE family=? AND alpha=? AND beta=? ORDER BY n, id',
                    (family, float(alpha), float(beta),))
            async with rows as cursor:
                result = await cursor.fetchall()
                return [RespMeasureCell(*row) for row in result]
        except Exception as e:
            logger.error(e)
            return None

async def delete_all_measure_rows() -> bool:
    async with aiosqlite.connect(db.DATABASE_PATH) as conn:
        try:
            await conn.execute("DELETE FROM measure_rows")
            await conn.commit()
            return True
        except Exception as e:
            logger.error(e)
            return False
