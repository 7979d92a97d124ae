import asyncio

from mpmath import mp

import database.controllers.checks as checksdb
import database.controllers.measure_rows as measuresdb
from helpers import checks, db

ROW = ({"family": "hermite", "alpha": 0, "beta": 0, "n": 1, "stddev": mp.mpf(1.5), "cr_ok": True, "bound": None},
       {"stddev": "closed_form"})

def test_measure_rows_round_trip(tmp_path, monkeypatch):
    monkeypatch.setattr(db, "DATABASE_PATH", db.DATABASE_PATH)

    async def scenario():
        path = await db.init_db(str(tmp_path / "results.db"))
        assert path.endswith("results.db")
        assert await measuresdb.create_measure_rows([ROW])
        cells = await measuresdb.read_measure_rows_for_family("hermite")
        assert [(c.n, c.column, c.value, c.provenance) for c in cells] == [
            (1, "stddev", "1.5", "closed_form"),
            (1, "cr_ok", "true", None),
            (1, "bound", None, None),
        ]
        assert await measuresdb.read_measure_rows_for_family("laguerre") == []
        assert await measuresdb.delete_all_measure_rows()
        assert await measuresdb.read_measure_rows_for_family("hermite") == []

    asyncio.run(scenario())

def test_checks_round_trip(tmp_path, monkeypatch):
    monkeypatch.setattr(db, "DATABASE_PATH", db.DATABASE_PATH)
    results = [checks.relative("closed_form", "sigma", 1, 1, 1e-12),
               checks.holds("figures", "ordering", False)]

    async def scenario():
        await db.init_db(str(tmp_path / "results.db"))
        assert await checksdb.create_checks("run-1", results)
        stored = await checksdb.read_checks_for_run("run-1")
        assert [c.name for c in stored] == ["sigma", "ordering"]
        failed = await checksdb.read_failed_checks("run-1")
        assert len(failed) == 1
        assert failed[0].scope == "figures" and failed[0].passed is False
        assert await checksdb.delete_checks_for_run("run-1")
        assert await checksdb.read_checks_for_run("run-1") == []

    asyncio.run(scenario())
