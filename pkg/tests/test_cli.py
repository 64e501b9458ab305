import csv
import io
import json
import subprocess
import sys

import jsonschema

from qlegendre import __version__
from qlegendre.cli import main
from qlegendre.registry import CATALOG

REPORT_SCHEMA = {
    "type": "object",
    "required": ["engine_version", "config", "results"],
    "properties": {
        "engine_version": {"type": "string"},
        "config": {"type": "object"},
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "params", "pass", "first_mismatch", "millis"],
                "properties": {
                    "id": {"type": "string"},
                    "params": {"type": "object"},
                    "pass": {"type": "boolean"},
                    "millis": {"type": "number", "minimum": 0},
                    "first_mismatch": {
                        "oneOf": [
                            {"type": "null"},
                            {
                                "type": "object",
                                "required": ["exponent", "lhs_coeff", "rhs_coeff"],
                                "properties": {
                                    "lhs_coeff": {"type": ["string", "null"]},
                                    "rhs_coeff": {"type": ["string", "null"]},
                                },
                            },
                        ]
                    },
                },
            },
        },
    },
}


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_verify_json_report_schema():
    code, out, _ = run("verify", "SEED-A", "CAP", "CHAIN-E-POLY", "--Lmax", "6", "--vmax", "2",
                       "--order", "50", "--output", "json")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, REPORT_SCHEMA)
    assert data["engine_version"] == __version__
    assert {r["id"] for r in data["results"]} == {"SEED-A", "CAP", "CHAIN-E-POLY"}


def test_verify_all_json():
    code, out, _ = run("verify", "--all", "--Lmax", "4", "--vmax", "1", "--order", "30", "--output", "json")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, REPORT_SCHEMA)
    assert {r["id"] for r in data["results"]} == set(CATALOG)


def test_usage_errors():
    code, _, err = run("verify", "SEED-A", "--Lmax", "-1")
    assert code == 2 and "Lmax" in err
    code, _, err = run("verify", "NO-SUCH-ID")
    assert code == 2 and "unknown identity" in err
    code, _, _ = run("frobnicate")
    assert code == 2
    code, _, _ = run("verify", "--jobs", "0")
    assert code == 2
    code, _, err = run("expand", "SEED-A", "--v", "2")
    assert code == 2


def test_failure_exit_code(monkeypatch):
    from dataclasses import replace

    from qlegendre import cli, registry
    from qlegendre.seeds import SEEDS

    alpha = SEEDS["SEED-F"].alpha
    bad = registry.build_catalog(registry.mutated_seeds("SEED-F", replace(alpha, sign=-alpha.sign)))
    real = registry.verify_all
    monkeypatch.setattr(cli, "get_record", lambda rid: bad[rid])
    monkeypatch.setattr(cli, "verify_all", lambda *a, **k: real(*a, **{**k, "catalog": bad}))
    code, out, _ = run("verify", "SEED-F", "--Lmax", "2", "--output", "json")
    assert code == 1
    data = json.loads(out)
    jsonschema.validate(data, REPORT_SCHEMA)
    failed = [r for r in data["results"] if not r["pass"]]
    assert failed and failed[0]["first_mismatch"]["exponent"] >= 0
    code, out, _ = run("verify", "SEED-F", "--Lmax", "2")
    assert code == 1 and "FAIL" in out and "lhs" in out


def test_expand_examples():
    code, out, _ = run("expand", "CAP", "--order", "0")
    assert code == 0 and out.strip() == "0\t1"
    _, lhs, _ = run("expand", "JTP", "--order", "4")
    _, rhs, _ = run("expand", "JTP", "--order", "4", "--side", "rhs")
    assert lhs == rhs and lhs.splitlines()[:2] == ["0\t1", "1\t2"]
    code, out, _ = run("expand", "RAMANUJAN", "--order", "50", "--output", "csv")
    rows = list(csv.reader(io.StringIO(out)))[1:]
    assert code == 0 and len(rows) == 51 and all(r[2] == "1" for r in rows)
    code, out, _ = run("expand", "SEED-C", "--L", "3", "--output", "json")
    data = json.loads(out)
    assert code == 0 and data["params"] == {"L": 3}
    code, _, err = run("expand", "EISEN3")
    assert code == 2


def test_list_outputs():
    code, out, _ = run("list", "--output", "json")
    data = json.loads(out)
    assert code == 0 and len(data) == len(CATALOG)
    code, out, _ = run("list")
    assert code == 0 and out.strip().endswith(f"{len(CATALOG)} records")
    code, out, _ = run("list", "--output", "csv")
    assert len(list(csv.reader(io.StringIO(out)))) == len(CATALOG) + 1


def test_verify_csv_and_text():
    code, out, _ = run("verify", "SEED-B", "--Lmax", "3", "--output", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0][0] == "id" and len(rows) == 5
    code, out, _ = run("verify", "SEED-B", "--Lmax", "3")
    assert "PASS" in out and "4/4 cases passed" in out


def test_selftest():
    code, out, _ = run("selftest")
    assert code == 0 and "cases passed" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qlegendre", "verify", "NO-SUCH-ID"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "unknown identity" in proc.stderr
    proc = subprocess.run([sys.executable, "-m", "qlegendre", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and __version__ in proc.stdout


def test_full_verify_example():
    code, out, _ = run("verify", "--all", "--Lmax", "20", "--order", "100", "--output", "json", "--jobs", "2")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, REPORT_SCHEMA)
    assert all(r["pass"] for r in data["results"])
    assert data["config"]["L_max"] == 20 and data["config"]["order"] == 100
