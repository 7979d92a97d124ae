import io
import json
from fractions import Fraction

from mpmath import mp

from helpers.output import format_value, json_value, write_csv, write_json

ROWS = [
    ({"family": "hermite", "n": 0, "value": mp.mpf(0.5), "missing": None}, {"value": "closed_form"}),
    ({"family": "hermite", "n": 1, "value": mp.inf, "missing": None}, {"value": "closed_form"}),
]
COLUMNS = ["family", "n", "value", "missing"]

def test_format_value():
    assert format_value(None) == ""
    assert format_value(None, "NA") == "NA"
    assert format_value(mp.inf) == "inf"
    assert format_value(True) == "true"
    assert format_value(False) == "false"
    assert format_value(Fraction(3, 2)) == "1.5"
    assert format_value(Fraction(4, 2)) == "2"
    assert format_value(0.5) == "0.5"
    assert format_value(2) == "2"
    assert format_value("jacobi") == "jacobi"

def test_format_value_keeps_seventeen_digits():
    with mp.workprec(128):
        assert format_value(mp.pi) == "3.1415926535897932"

def test_json_value():
    assert json_value(mp.inf) == "inf"
    assert json_value(Fraction(1, 4)) == 0.25
    assert json_value(None) is None

def test_write_csv():
    stream = io.StringIO()
    write_csv(stream, COLUMNS, ROWS, null="NA")
    assert stream.getvalue().splitlines() == [
        "family,n,value,missing",
        "hermite,0,0.5,NA",
        "hermite,1,inf,NA",
    ]

def test_write_csv_with_meta():
    stream = io.StringIO()
    write_csv(stream, COLUMNS, ROWS, meta={"bits": 128})
    lines = stream.getvalue().splitlines()
    assert lines[0] == "# bits: 128"
    assert lines[1] == "# provenance: value=closed_form"
    assert lines[2] == "family,n,value,missing"

def test_write_json():
    stream = io.StringIO()
    write_json(stream, COLUMNS, ROWS)
    document = json.loads(stream.getvalue())
    assert isinstance(document, list)
    assert document[0] == {"family": "hermite", "n": 0, "value": 0.5, "missing": None,
                           "provenance": {"value": "closed_form"}}
    assert document[1]["value"] == "inf"

def test_write_json_with_meta():
    stream = io.StringIO()
    write_json(stream, COLUMNS, ROWS[:1], meta={"bits": 128})
    document = json.loads(stream.getvalue())
    assert document["meta"] == {"bits": 128}
    assert len(document["rows"]) == 1
