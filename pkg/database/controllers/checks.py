from collections import namedtuple

import aiosqlite

from helpers import db
from helpers.logger import logger

"""
Response Types
"""

RespCheck = namedtuple('RespCheck', 'run scope name measured expected deviation tolerance passed')

"""
Functions
"""

async def create_checks(run: str, results: list) -> bool:
    async with aiosqlite.connect(db.DATABASE_PATH) as conn:
        try:
            await conn.executemany(
                    "INSERT INTO checks(run, scope, name, measured, expected, deviation, tolerance, passed) "
                    "VALUES (?, ?, ?, ?, ?, ?, ?, ?)",
                    [(run, c.scope, c.name, _real(c.measured), _real(c.expected), c.deviation, c.tolerance,
                      c.passed and 1 or 0) for c in results])
            await conn.commit()
            return True
        except Exception as e:
            logger.error(e)
            return False

def _real(value):
    # booleans are stored as 0/1 like the passed column
    if isinstance(value, bool):
        return int(value)
    return value

async def _read(query: str, params: tuple) -> list[RespCheck] | None:
    async with aiosqlite.connect(db.DATABASE_PATH) as conn:
        try:
            rows = await conn.execute(query, params)
            async with rows as cursor:
                result = await cursor.fetchall()
                return [RespCheck(*row[:7], bool(row[7])) for row in result]
        except Exception as e:
            logger.error(e)
            return None

async def read_checks_for_run(run: str) -> list[RespCheck] | None:
    return await _read(
            "SELECT run, scope, name, measured, expected, deviation, tolerance, passed FROM checks "
            "WHERE run=? ORDER BY id",
            (run,))

async def read_failed_checks(run: str) -> list[RespCheck] | None:
    return await _read(
            "SELECT run, scope, name, measured, expected, deviation, tolerance, passed FROM checks "
            "WHERE run=? AND passed=0 ORDER BY id",
            (run,))

async def delete_checks_for_run(run: str) -> bool:
    async with aiosqlite.connect(db.DATABASE_PATH) as conn:
        try:
            await conn.execute("DELETE FROM checks WHERE run=?", (run,))
            await conn.commit()
            return True
        except Exception as e:
            logger.error(e)
            return False

async def read_runs() -> list[tuple] | None:
    """(run, checks, failed) for every stored verification run, oldest first"""
    async with aiosqlite.connect(db.DATABASE_PATH) as conn:
        try:
            rows = await conn.execute(
                    "SELECT run, COUNT(*), SUM(passed = 0) FROM checks GROUP BY run ORDER BY MIN(id)")
            async with rows as cursor:
                return [tuple(row) for row in await cursor.fetchall()]
        except Exception as e:
            logger.error(e)
            return None
