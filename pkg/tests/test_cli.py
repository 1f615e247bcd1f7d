import json
import subprocess
import sys
from pathlib import Path

import pytest

from duplicial import hochschild as hh, hopf, nerve as nv
from duplicial.cli import main, validate_input


@pytest.fixture
def files(tmp_path):
    def put(name, obj):
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)
    return {
        "Q": put("Q.json", hh.ground_field().to_json()),
        "dual": put("dual.json", hh.dual_numbers().to_json()),
        "neg": put("neg.json", {"matrix": [["1", "0"], ["0", "-1"]]}),
        "idem": put("idem.json", hopf.idempotent_monoid_bialgebra().to_json()),
        "C2": put("C2.json", hopf.cyclic_group_bialgebra(2).to_json()),
        "interval": put("interval.json", nv.interval_category().to_json()),
        "Z2": put("Z2.json", nv.cyclic_group_category(2).to_json()),
        "put": put,
    }


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cyclic_table(capsys, files):
    code, out, _ = run(capsys, "cyclic", "--algebra", files["Q"], "--top", "4")
    assert code == 0
    rows = [ln.split() for ln in out.splitlines()[2:]]
    assert [r[1] for r in rows[:4]] == ["1", "0", "1", "0"]
    assert rows[4][-1] == "(truncated)" and all(len(r) == 2 for r in rows[:4])


def test_cyclic_json(capsys, files):
    code, out, _ = run(capsys, "cyclic", "--algebra", files["Q"], "--format", "json")
    data = json.loads(out)
    assert [r["dim"] for r in data["HC"]][:4] == [1, 0, 1, 0]
    assert [r["truncated"] for r in data["HC"]] == [False] * 4 + [True]


def test_output_is_deterministic(capsys, files):
    a = run(capsys, "hopf", "--bialgebra", files["C2"], "--format", "json")[1]
    b = run(capsys, "hopf", "--bialgebra", files["C2"], "--format", "json")[1]
    assert a == b


def test_hochschild(capsys, files):
    code, out, _ = run(capsys, "hochschild", "--algebra", files["dual"], "--format", "json")
    assert [r["dim"] for r in json.loads(out)["HH"]][:4] == [2, 1, 1, 1]


def test_twisted(capsys, files):
    code, out, _ = run(capsys, "twisted", "--algebra", files["dual"], "--sigma", files["neg"])
    assert code == 0
    assert out.splitlines()[0] == "cyclic: no (t^(n+1) = 1 fails at degree 0)"


def test_hopf_no(capsys, files):
    code, out, _ = run(capsys, "hopf", "--bialgebra", files["idem"])
    assert code == 0 and out.strip() == "Hopf: no (Galois map singular)"


def test_hopf_yes(capsys, files):
    code, out, _ = run(capsys, "hopf", "--bialgebra", files["C2"], "--format", "json")
    data = json.loads(out)
    assert data["hopf"] and data["sayd"] and data["cyclic"]
    assert data["antipode"] == {"g^0": {"g^0": "1"}, "g^1": {"g^1": "1"}}
    assert [r["dim"] for r in data["HC"]][:4] == [1, 0, 1, 0]


def test_nerve(capsys, files):
    code, out, _ = run(capsys, "nerve", "--category", files["interval"])
    assert out.splitlines()[0] == "duplicial: yes, cyclic: no, witness: {0}"
    code, out, _ = run(capsys, "nerve", "--category", files["Z2"])
    assert out.splitlines()[0] == "duplicial: yes, cyclic: yes, witness: {*}"


def test_check_law(capsys):
    code, out, _ = run(capsys, "check-law", "P/C")
    assert code == 0 and out.startswith("mixed law P/C: ok")
    code, out, _ = run(capsys, "check-law", "L")
    assert "partial verification" in out


def test_check_law_bound(capsys):
    code, _, err = run(capsys, "check-law", "P", "--size", "5")
    assert code == 1 and "exceeds the bound" in err


def test_entwined_search(capsys):
    code, out, _ = run(capsys, "entwined-search", "L+/L+", "--format", "json")
    data = json.loads(out)
    assert data["by_size"] == {"0": 1, "1": 0, "2": 0}


def test_validate_ok(capsys, files):
    assert run(capsys, "validate", files["dual"])[0] == 0
    assert validate_input(files["interval"]).ok


def test_validate_nonassociative(capsys, files):
    one, x, y, z = ["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"], ["0", "0", "0"]
    p = files["put"]("bad.json", {"field": "Q", "dim": 3, "mult": [[one, x, y], [x, z, x], [y, y, z]],
                                  "unit": one, "labels": ["1", "x", "y"]})
    code, out, _ = run(capsys, "validate", p)
    assert code == 1 and "(x, y, y)" in out
    assert validate_input(p).violations[0][0] == "invariant"


def test_validate_missing_unit(capsys, files):
    obj = hh.dual_numbers().to_json()
    del obj["unit"]
    p = files["put"]("nounit.json", obj)
    code, out, _ = run(capsys, "validate", p)
    assert code == 2 and "schema error" in out


def test_error_kinds_distinct(capsys, files, tmp_path):
    assert validate_input(str(tmp_path / "missing.json")).violations[0][0] == "io"
    (tmp_path / "junk.json").write_text("{not json")
    assert validate_input(str(tmp_path / "junk.json")).violations[0][0] == "schema"
    assert run(capsys, "cyclic", "--algebra", str(tmp_path / "missing.json"))[0] == 2


def test_parse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["cyclic"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["cyclic", "--algebra", "x.json", "--field", "4"])
    assert e.value.code == 2


def test_field_override(capsys, files):
    C2 = files["put"]("kC2.json", hh.group_algebra(2).to_json())
    data = json.loads(run(capsys, "hochschild", "--algebra", C2, "--field", "2", "--format", "json")[1])
    assert [r["dim"] for r in data["HH"]][:2] == [2, 2]


def test_dimension_cap_warning(capsys, files):
    M2 = files["put"]("M2.json", hh.matrix_algebra().to_json())
    code, out, err = run(capsys, "hochschild", "--algebra", M2, "--top", "8", "--format", "json")
    assert "exceeds 50000" in err and json.loads(out)["top"] == 6


def test_console_entry(files):
    r = subprocess.run([sys.executable, "-m", "duplicial.cli", "nerve", "--category", files["interval"]],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "witness: {0}" in r.stdout
