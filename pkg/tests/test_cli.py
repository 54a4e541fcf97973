import io
import json

import pytest

from a3btile.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_counts():
    assert call("counts", "--f", "18")[:2] == (0, "Q1=3 Q2=1 Q3=2\n")
    assert call("counts", "--f", "8")[1] == "Q1=1 Q2=0 Q3=1\n"


def test_flips_count():
    assert call("flips", "--f", "14", "--m", "5", "--count")[:2] == (0, "n=1:1 n=2:2 n=3:1 total:4\n")


def test_flips_list():
    code, out, _ = call("flips", "--f", "14", "--m", "5", "--list")
    assert out.splitlines() == ["n=1 gaps=5", "n=2 gaps=0,3", "n=2 gaps=1,2", "n=3 gaps=0,0,1"]


def test_quad_report():
    code, out, _ = call("quad", "--f", "8", "--beta", "1")
    assert code == 0
    assert "a=0.333333333333" in out and out.rstrip().endswith("check_quad PASS")


def test_bad_args():
    assert call("counts", "--f", "7")[0] == 2
    assert call("quad", "--f", "10", "--beta", "0.8")[0] == 2  # rhombus point
    assert call("nosuch")[0] == 2
    assert call("counts")[0] == 2
    assert call("verify", "--json", "/nonexistent/x.json")[0] == 2


def test_emit_and_verify(tmp_path):
    js, obj = tmp_path / "e.json", tmp_path / "e.obj"
    assert call("emt", "--f", "8", "--beta", "0.9", "--json", str(js), "--obj", str(obj))[0] == 0
    assert obj.read_bytes().startswith(b"# a3b tiling")
    assert call("verify", "--json", str(js))[0] == 0
    doc = json.loads(js.read_text())
    doc["vertices"][4]["vector"] = [0, 0, 9, 0]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out, _ = call("verify", "--json", str(bad))
    assert code == 1 and "FAIL tile_pattern" in out


def test_emit_all_verifies(tmp_path):
    assert call("flips", "--f", "14", "--m", "5", "--emit-all", str(tmp_path))[0] == 0
    files = sorted(tmp_path.glob("*.json"))
    assert len(files) == 4
    for p in files:
        assert call("verify", "--json", str(p))[0] == 0


@pytest.mark.parametrize("name", ["emt12_a2b_c3", "octa24_b3"])
def test_sporadic_and_realize(tmp_path, name):
    js, obj = tmp_path / "s.json", tmp_path / "s.obj"
    code, out, _ = call("sporadic", "--name", name, "--json", str(js))
    assert code == 0 and out.startswith(f"name {name}")
    assert call("verify", "--json", str(js))[0] == 0
    code, out, _ = call("realize", "--json", str(js), "--obj", str(obj), "--segments", "2")
    assert code == 0 and obj.exists()


def test_realize_numeric_failure(tmp_path):
    js = tmp_path / "e.json"
    call("emt", "--f", "8", "--beta", "0.9", "--json", str(js))
    doc = json.loads(js.read_text())
    doc["edges"]["b"] += 0.01
    js.write_text(json.dumps(doc))
    assert call("realize", "--json", str(js), "--obj", str(tmp_path / "x.obj"))[0] == 3


def test_moduli_csv():
    code, out, _ = call("moduli", "--f", "10", "--samples", "3")
    rows = out.splitlines()
    assert rows[0] == "t,beta,a,b,alpha,delta" and len(rows) == 4
    assert rows[2].startswith("0,1,0.333333333333,")


def test_deterministic(tmp_path):
    a = call("sporadic", "--name", "f16_bc2_a2d2", "--json", str(tmp_path / "a.json"))
    b = call("sporadic", "--name", "f16_bc2_a2d2", "--json", str(tmp_path / "b.json"))
    assert a == b
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()
