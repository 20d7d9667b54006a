import json
import subprocess
import sys

import pytest

from tambara import cli, verify
from tambara.verify import SuiteResult


def run(capsys, *argv):
    rc = cli.main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_marks_s3(capsys):
    rc, out, _ = run(capsys, "marks", "--group", "symmetric:3")
    assert rc == 0
    assert out.splitlines() == ["6 0 0 0", "3 1 0 0", "2 0 2 0", "1 1 1 1"]


def test_marks_json_has_sorted_keys(capsys):
    rc, out, _ = run(capsys, "marks", "--group", "symmetric:3", "--json")
    data = json.loads(out)
    assert rc == 0
    assert [data["marks"][i][i] for i in range(4)] == [6, 1, 2, 1]
    assert out.strip() == json.dumps(data, sort_keys=True)


def test_witt_mul_unit(capsys):
    rc, out, _ = run(capsys, "witt-mul", "--group", "cyclic:2", "--x", "0,1", "--y", "0,1")
    assert (rc, out.strip()) == (0, "0,1")


def test_witt_add_c2(capsys):
    rc, out, _ = run(capsys, "witt-add", "--x", "0,1", "--y", "0,1")
    # 1 + 1 = 2 delta_G - [G/1] in the classes (G/1, G)
    assert (rc, out.strip()) == (0, "-1,2")


def test_ghost(capsys):
    rc, out, _ = run(capsys, "ghost", "--x", "3,5")
    assert (rc, out.strip()) == (0, "31,5")


def test_distributor_example(capsys):
    rc, out, _ = run(capsys, "distributor", "--group", "cyclic:1", "--f", "3>2:0,1,1",
                     "--g", "2>1", "--json")
    data = json.loads(out)
    assert rc == 0
    assert (data["A"], data["B"]) == (4, 2)
    assert (data["source"], data["target"]) == (3, 1)


def test_normalize_matches_distributor(capsys):
    _, dist, _ = run(capsys, "distributor", "--group", "cyclic:2", "--f", "3>2:0,1,1",
                     "--g", "2>1", "--json")
    _, norm, _ = run(capsys, "normalize", "--group", "cyclic:2", "--word",
                     "N=2>1 T=3>2:0,1,1", "--json")
    assert json.loads(dist)["key"] == json.loads(norm)["key"]


def test_bispan_compose(capsys):
    rc, out, _ = run(capsys, "bispan-compose", "--group", "cyclic:1",
                     "--w0", "2>2:0,1|2>1|1>1", "--w1", "1>1|1>1|1>1")
    assert (rc, out.strip()) == (0, "A=2 B=1 p=[0, 1] q=[0, 0] r=[0]")


def test_orbit_set_tokens(capsys):
    rc, out, _ = run(capsys, "normalize", "--group", "cyclic:2", "--word", "N=o0>1", "--json")
    data = json.loads(out)
    assert rc == 0
    assert (data["source"], data["target"]) == (2, 1)


def test_witt_universal(capsys):
    rc, out, _ = run(capsys, "witt-universal", "--json")
    data = json.loads(out)
    assert rc == 0
    assert data["sum"][1] == "x1 + y1"


def test_burnside_mul_s3(capsys):
    rc, out, _ = run(capsys, "burnside-mul", "--group", "symmetric:3", "--json")
    data = json.loads(out)
    assert rc == 0
    assert data["products"][2][2] == [0, 0, 2, 0]
    assert data["products"][1][1] == [1, 1, 0, 0]


@pytest.mark.parametrize("model", ["dual-numbers", "integers", "burnside", "swap"])
def test_c2_pair_models_pass(capsys, model):
    rc, out, _ = run(capsys, "c2-pair", "--model", model)
    assert rc == 0
    assert all(line.startswith("PASS") for line in out.splitlines())


@pytest.mark.parametrize("argv", [
    ["marks", "--group", "alternating:4"],
    ["witt-mul", "--x", "0,1,2", "--y", "0,1"],
    ["ghost", "--x", "a,b"],
    ["distributor", "--f", "3>2:0,1", "--g", "2>1"],
    ["distributor", "--f", "3>2:0,1,7", "--g", "2>1"],
    ["distributor", "--f", "3>2:0,1,1", "--g", "3>1"],
    ["normalize", "--word", "X=2>1"],
    ["bispan-compose", "--w0", "2>2:0,1|2>1", "--w1", "1>1|1>1|1>1"],
    ["c2-pair", "--group", "symmetric:3"],
    ["verify", "no-such-suite"],
    ["no-such-verb"],
])
def test_invalid_input_exits_1(capsys, argv):
    rc, out, err = run(capsys, *argv)
    assert rc == 1
    assert err


def test_size_cap_exits_2(capsys, monkeypatch):
    rc, _, err = run(capsys, "distributor", "--group", "cyclic:1", "--f", "3>2:0,1,1",
                     "--g", "2>1", "--cap", "1")
    assert rc == 2 and "cap" in err
    monkeypatch.setenv("TAMBARA_CAP", "1")
    rc, _, _ = run(capsys, "distributor", "--group", "cyclic:1", "--f", "3>2:0,1,1", "--g", "2>1")
    assert rc == 2
    # an explicit flag wins over the environment
    rc, _, _ = run(capsys, "distributor", "--group", "cyclic:1", "--f", "3>2:0,1,1",
                   "--g", "2>1", "--cap", "100")
    assert rc == 0


def test_failed_verification_exits_3(capsys, monkeypatch):
    def failing(seed=0, cap=None):
        return SuiteResult("broken", False, 1, witness=("counterexample", 42))

    monkeypatch.setitem(verify.SUITES, "broken", failing)
    rc, out, _ = run(capsys, "verify", "broken")
    assert rc == 3
    assert "FAIL" in out and "42" in out


def test_verify_single_suite(capsys):
    rc, out, _ = run(capsys, "verify", "burnside-c2", "--json")
    data = json.loads(out)
    assert rc == 0 and data["ok"]
    assert [s["name"] for s in data["suites"]] == ["burnside-c2"]


def test_verify_all_covers_every_suite(capsys, monkeypatch):
    called = []
    for name in list(verify.SUITES):
        def fake(seed=0, cap=None, name=name):
            called.append(name)
            return SuiteResult(name, True, 1)
        monkeypatch.setitem(verify.SUITES, name, fake)
    rc, out, _ = run(capsys, "verify", "all")
    assert rc == 0
    assert called == list(verify.SUITES)
    assert len(verify.SUITES) == 14
    assert len(out.splitlines()) == 14


def test_output_is_byte_identical_across_processes():
    argv = [sys.executable, "-m", "tambara", "burnside-mul", "--group", "symmetric:3", "--json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True,
                            env={"PYTHONHASHSEED": "123"}).stdout
    assert first == second and first
