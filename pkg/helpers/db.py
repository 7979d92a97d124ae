import os

import aiosqlite

from helpers.config import config as app_config

SCHEMA_PATH = f"{os.path.realpath(os.path.dirname(__file__))}/../database/schema.sql"

# Empty until a store is configured; controllers read it at call time.
DATABASE_PATH = app_config["database"]

async def init_db(path: str = None) -> str:
    """Create the result store (if needed) and make it the active database

    Args:
        path: sqlite file, defaults to the configured one

    Returns:
        The active database path
    """
    global DATABASE_PATH
    if path:
        DATABASE_PATH = path
    async with aiosqlite.connect(DATABASE_PATH) as db:
        # Load schema
        with open(SCHEMA_PATH) as file:
            await db.executescript(file.read())
        await db.commit()
    return DATABASE_PATH
