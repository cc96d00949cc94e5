import json
import math

import pytest
from hypothesis import given, strategies as st

from ybrg.report import Check, Report, csv_text, dumps, format_float, write_atomic


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_float_round_trip(x):
    assert float(format_float(x)) == x


def test_format_float_shape():
    assert format_float(1.0) == "1.0"
    assert format_float(1e-9) == "1.0000000000000001e-09"
    assert format_float(math.inf) == "Infinity"
    assert format_float(-math.inf) == "-Infinity"
    assert format_float(math.nan) == "NaN"


def test_check_relations():
    assert Check.evaluate("x", 1e-15, 1e-13).passed
    assert not Check.evaluate("x", 1e-12, 1e-13).passed
    assert Check.evaluate("x", 0.0, 0.0, "<=").passed
    assert not Check.evaluate("x", 0.0, 0.0).passed
    assert Check.evaluate("x", 0.1, 1e-3, ">").passed
    assert not Check.evaluate("x", math.nan, 1.0).passed
    assert Check.evaluate("x", 1.0, 2.0, u=0.5).params == {"relation": "<", "u": 0.5}


def test_failed_check_records_error():
    chk = Check.failed("c", ValueError("bad u"), 1e-9, u=2.0)
    assert chk.value is None and not chk.passed
    assert chk.params["error"] == "ValueError: bad u"


def _report():
    return Report("0.1.0", "2026-01-01T00:00:00+00:00", {"u": 0.5, "seed": 3},
                  [Check.evaluate("a", 0.1 + 0.2, 1.0, n=2),
                   Check.failed("b", RuntimeError("boom"), 1e-12)])


def test_report_round_trip():
    rep = _report()
    text = rep.to_json()
    back = Report.from_json(text)
    assert back == rep
    assert back.to_json() == text
    assert json.loads(text)["verdict"] == "fail"
    assert json.loads(text)["checks"][0]["value"] == 0.1 + 0.2


def test_tampered_verdict_rejected():
    d = json.loads(_report().to_json())
    d["verdict"] = "pass"
    with pytest.raises(ValueError):
        Report.from_dict(d)


def test_dumps_layout():
    assert dumps({"a": [1, 2.5], "b": {}}) == '{\n  "a": [\n    1,\n    2.5\n  ],\n  "b": {}\n}\n'
    with pytest.raises(TypeError):
        dumps({"x": object()})


def test_csv_text():
    assert csv_text(["t", "y"], [(1, 0.5), (2, 1e-20)]) == "t,y\n1.0,0.5\n2.0,9.9999999999999995e-21\n"


def test_write_atomic(tmp_path):
    path = tmp_path / "out.txt"
    write_atomic(str(path), "one\n")
    write_atomic(str(path), "two\n")
    assert path.read_bytes() == b"two\n"
    assert [p.name for p in tmp_path.iterdir()] == ["out.txt"]
