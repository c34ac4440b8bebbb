import json

import pytest

from framedlie.cli import main
from framedlie.liesolver import default_ledger_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_qspace_json(capsys):
    code, out = run(capsys, "qspace", "--dim", "10", "--type", "plus")
    assert code == 0
    data = json.loads(out)
    assert data["singular_nonzero"] == 527
    assert data["nonsingular"] == 496
    assert data["schema_version"] == 1


def test_qspace_minus(capsys):
    code, out = run(capsys, "qspace", "--dim", "2", "--type", "minus")
    assert code == 0
    assert json.loads(out)["singular_nonzero"] == 0


def test_qspace_usage_error(capsys):
    code, _ = run(capsys, "qspace", "--dim", "3", "--type", "plus")
    assert code == 2


def test_bad_flags_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["qspace", "--dim", "10", "--type", "banana"])
    assert exc.value.code == 2


def test_frame_build(capsys):
    code, out = run(
        capsys, "frame", "build", "--m", "5", "--k1", "3", "--k2", "0", "--type", "minus"
    )
    assert code == 0
    data = json.loads(out)
    assert data["weight1"] == 240
    assert data["classified"] == "even(5,3,0,-)"


def test_frame_build_odd(capsys):
    code, out = run(capsys, "frame", "build", "--m", "5", "--k1", "4", "--k2", "0")
    assert code == 0
    assert json.loads(out)["weight1"] == 408


def test_frame_build_usage(capsys):
    code, _ = run(capsys, "frame", "build", "--m", "5", "--k1", "2", "--k2", "0", "--type", "plus")
    assert code == 2


def test_frame_classify_roundtrip(capsys, tmp_path):
    code, out = run(capsys, "frame", "build", "--m", "2", "--k1", "1", "--k2", "1", "--type", "plus")
    lines = json.loads(out)["subspace"]
    p = tmp_path / "sub.txt"
    p.write_text("\n".join(lines) + "\n")
    code, out = run(capsys, "frame", "classify", "--input", str(p))
    assert code == 0
    assert json.loads(out)["classified"] == "even(2,1,1,+)"


def test_frame_census_m1(capsys):
    code, out = run(capsys, "frame", "census", "--m", "1")
    assert code == 0
    data = json.loads(out)
    assert data["total"] == 30
    assert data["built_cases_in_distinct_orbits"]


def test_frame_census_guard(capsys):
    code, _ = run(capsys, "frame", "census", "--m", "3")
    assert code == 3


def test_frame_pair(capsys):
    code, out = run(capsys, "frame", "pair", "--case", "pcl4_6")
    assert code == 0
    data = json.loads(out)
    assert data["weight1_formula"] == 72 == data["weight1_direct"]


def test_frame_orbifold(capsys):
    code, out = run(capsys, "frame", "orbifold", "--base", "odd:5,4,0", "--w", "section47")
    assert code == 0
    data = json.loads(out)
    assert len(data["results"]) == 3
    assert all(r["classified"] == "even(5,3,0,+)" for r in data["results"])


def test_lie_solve(capsys):
    code, out = run(capsys, "lie", "solve", "--dim", "60", "--constraint", "ideal:28:4")
    assert code == 0
    data = json.loads(out)
    assert data["solutions"] == ["D4,4 (A2,2)^4"] and data["unique"]


def test_lie_ledger(capsys):
    code, out = run(capsys, "lie", "ledger")
    assert code == 0
    data = json.loads(out)
    assert data["all_match"] and len(data["cases"]) == 21
    notes = {n["case"] for n in data["identification_notes"]}
    assert "even(5,5,0,+)" in notes and "niemeier_a17e7" in notes


def test_lie_tables(capsys):
    for which, rows in (("ta8", 15), ("ta16", 5), ("lieframed", 17)):
        code, out = run(capsys, "lie", "tables", "--which", which)
        assert code == 0
        data = json.loads(out)
        assert data["all_match"] and len(data["rows"]) == rows


def test_corrupted_ledger_exits_1(capsys, tmp_path):
    text = open(default_ledger_path()).read()
    # a parseable, dimension-consistent corruption that is not a solution
    bad = text.replace("answer A8,2 F4,2", "answer A7,1 A5,1 A4,1 C2,1", 1)
    assert bad != text
    p = tmp_path / "bad.ledger"
    p.write_text(bad)
    code, out = run(capsys, "lie", "ledger", "--ledger", str(p))
    assert code == 1
    data = json.loads(out)
    row = next(r for r in data["cases"] if r["case"] == "pcl5_3")
    assert "MISMATCH" in row["status"]


def test_output_formats(capsys):
    code, out = run(capsys, "lie", "solve", "--dim", "384", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "solution,rank"
    code, out = run(capsys, "lie", "solve", "--dim", "384", "--format", "markdown")
    assert code == 0
    assert out.startswith("| solution | rank |")


def test_output_determinism(capsys):
    # identical (command, config) must give bit-identical output
    outs = set()
    for _ in range(2):
        code, out = run(
            capsys, "frame", "build", "--m", "5", "--k1", "2", "--k2", "1",
            "--type", "minus", "--seed", "7",
        )
        assert code == 0
        outs.add(out)
    assert len(outs) == 1
    outs = set()
    for _ in range(2):
        _, out = run(capsys, "frame", "pair", "--case", "pcl4_5", "--seed", "3")
        outs.add(out)
    assert len(outs) == 1


def test_verify_quick(capsys):
    code, out = run(capsys, "verify", "--quick")
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln.startswith(("PASS", "FAIL"))]
    assert len(lines) >= 40
    assert all(ln.startswith("PASS") for ln in lines)


def test_verify_quick_detects_corruption(capsys, tmp_path):
    text = open(default_ledger_path()).read()
    p = tmp_path / "bad.ledger"
    p.write_text(text.replace("answer C10,1 B6,1", "answer (A10,1)^2 B6,1"))
    code, out = run(capsys, "verify", "--quick", "--ledger", str(p))
    assert code == 1
    assert "FAIL lie_ledger" in out
    assert "pcl4_3" in out
