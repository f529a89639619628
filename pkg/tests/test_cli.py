import csv
import io
import json
import subprocess
import sys

import pytest

from twisted_strata.cli import main, run


def test_table_3d4_text():
    status, text = run(["table", "3D4", "--format", "text"])
    lines = text.splitlines()
    assert status == 0 and len(lines) == 5
    assert lines[-1] == "1_0,(D4,1,0) ..... [1]"


def test_table_2e6_counts():
    status, text = run(["table", "2E6"])
    assert status == 0 and len(text.splitlines()) == 17
    assert "(E6,1,0)#2" in text


def test_tau():
    assert run(["tau", "2E6", "--entry", "(A5,eps,0)"]) == (0, "8'_3\n")
    status, text = run(["tau", "3D4", "--entry", "(D4,1,1)", "--format", "data"])
    assert json.loads(text) == {"group": "3D4", "entry": "(D4,1,1)", "stratum": "2_1"}


def test_enumerate_csv():
    status, text = run(["enumerate", "2A:5", "--format", "csv"])
    rows = list(csv.reader(io.StringIO(text)))
    assert status == 0 and len(rows) - 1 == 11


def test_fiber_and_strata():
    status, text = run(["fiber", "2E6", "--stratum", "12_4"])
    assert text.splitlines() == ["12_4", "6''_6", "1'_12", "9'_6", "(E6,1,4)"]
    status, text = run(["strata", "3D4", "--format", "data"])
    doc = json.loads(text)
    assert [s["c_star_size"] for s in doc["strata"]] == [1, 1, 1, 3, 2]


def test_centralizer():
    assert run(["centralizer", "2A", "--k", "4"]) == (0, "C3xD2\n")
    assert run(["centralizer", "2E6", "--d", "0", "--r", "3"]) == (0, "F4\n")
    assert run(["centralizer", "2D:9", "--k", "3", "--r", "2"]) == (0, "FULL\n")


def test_table_data_round_trip(tmp_path):
    from twisted_strata.springer_tau import golden_table
    from twisted_strata.tables_io import table_from_data
    from twisted_strata.weyl_core import TwistedType
    out = tmp_path / "t.json"
    assert run(["table", "2E6", "--format", "data", "--out", str(out)]) == (0, "")
    assert table_from_data(out.read_text()) == golden_table(TwistedType("2E6"))


@pytest.mark.parametrize("fmt", ["text", "data", "csv"])
def test_verify_formats(fmt):
    status, text = run(["verify", "--format", fmt])
    assert status == 0 and text


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["table"], ["table", "2B:4"], ["tau", "2E6"],
    ["table", "3D4", "--format", "xml"], ["centralizer", "2A"],
    ["centralizer", "2A", "--k", "3", "--d", "0"], ["centralizer", "2E6", "--k", "3"],
])
def test_usage_errors(argv):
    status, text = run(argv)
    assert status == 2 and "error" in text


@pytest.mark.parametrize("argv", [
    ["table", "2A:5"],                              # no golden table for classical types
    ["tau", "2E6", "--entry", "(E6,1,0)"],          # index required
    ["tau", "2A:4", "--entry", "(A2,[1|])"],        # no plugin registered
    ["fiber", "2E6", "--stratum", "4_8"],
    ["fiber", "2E6", "--stratum", "8'''_9"],
    ["centralizer", "2D", "--k", "4"],
])
def test_data_errors(argv):
    status, text = run(argv)
    assert status == 3 and text.startswith("error:")


def test_help_exits_zero():
    status, text = run(["--help"])
    assert status == 0 and "usage" in text


def test_main_streams(capsys):
    assert main(["tau", "3D4", "--entry", "1'_3"]) == 0
    assert capsys.readouterr().out == "2_1\n"
    assert main(["table"]) == 2
    assert "error" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "twisted_strata", "table", "3D4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.endswith("1_0,(D4,1,0) ..... [1]\n")
