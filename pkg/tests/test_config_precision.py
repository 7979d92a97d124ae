import json

import pytest
from mpmath import mp

from exceptions import PrecisionExhausted, UsageError
from helpers.config import DEFAULTS, load_config
from helpers.precision import default_context, escalate, make_context, relative_gap, working_precision

def test_defaults_without_file(tmp_path):
    config = load_config(str(tmp_path / "missing.json"), {})
    assert config == DEFAULTS

def test_file_and_environment(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"bits": 256, "rel_tol": 1}))
    config = load_config(str(path), {})
    assert config["bits"] == 256
    assert config["rel_tol"] == 1.0
    config = load_config(str(path), {"SPREADPOLY_BITS": "512", "SPREADPOLY_DB": "out.db"})
    assert config["bits"] == 512
    assert config["database"] == "out.db"

@pytest.mark.parametrize("content", ['{"bits": "many"}', '{"workers": true}', '[1, 2]', '{bits'])
def test_invalid_config_exits(tmp_path, content):
    path = tmp_path / "config.json"
    path.write_text(content)
    with pytest.raises(SystemExit) as e:
        load_config(str(path), {})
    assert e.value.code == 2

def test_invalid_environment_exits(tmp_path):
    with pytest.raises(SystemExit):
        load_config(str(tmp_path / "missing.json"), {"SPREADPOLY_RTOL": "tight"})

def test_make_context_validation():
    assert make_context(bits=256).bits == 256
    with pytest.raises(UsageError):
        make_context(bits=32)
    with pytest.raises(UsageError):
        make_context(rel_tol=0)
    with pytest.raises(UsageError):
        make_context(max_escalations=-1)

def test_default_context_overrides():
    ctx = default_context(bits=192, rel_tol=None)
    assert ctx.bits == 192

def test_relative_gap():
    assert relative_gap(mp.mpf(0), mp.mpf(0)) == 0
    assert relative_gap(mp.mpf(1), mp.mpf(2)) == mp.mpf(0.5)
    assert relative_gap([mp.mpf(1), mp.mpf(4)], [mp.mpf(1), mp.mpf(2)]) == mp.mpf(0.5)
    # entries that vanish up to rounding are measured against the largest entry
    assert relative_gap([mp.mpf(1), mp.mpf("1e-40")], [mp.mpf(1), mp.mpf("-1e-40")]) < mp.mpf("1e-39")

def test_escalate_converges():
    ctx = make_context()
    value = escalate(lambda: mp.mpf(1) / 3, ctx, "one third")
    with working_precision(ctx):
        assert abs(value - mp.mpf(1) / 3) < mp.mpf(10) ** -30

def test_escalate_exhausts():
    ctx = make_context(max_escalations=1)
    with pytest.raises(PrecisionExhausted):
        escalate(lambda: mp.mpf(mp.prec), ctx, "precision")
