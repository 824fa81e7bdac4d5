import io
import json
import subprocess
import sys

import pytest

from yangbraid.cli import run


def call(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv)
    return code, json.loads(out) if out else json.loads(err)


def test_info_a1():
    code, doc = call_json("info", "--type", "A1")
    assert code == 0
    assert doc["result"]["two_kappa"] == 2
    assert doc["result"]["v_table"] == {"v_11": ["0", "1"]}


def test_info_a2():
    code, doc = call_json("info", "--type", "A2")
    assert doc["result"]["v_table"]["v_12"][2] == "1"
    assert doc["result"]["longest_words"] == [[1, 2, 1], [2, 1, 2]]


def test_illegal_type():
    code, doc = call_json("info", "--type", "Z9")
    assert code == 2 and doc["error"] == "IllegalType"


def test_poles_a1():
    code, doc = call_json("poles", "--type", "A1", "--P", '[[["0",1]]]')
    assert code == 0
    assert doc["result"]["poles"] == {"1": ["0"]}


def test_cyclicity_a1():
    code, doc = call_json(
        "cyclicity", "--type", "A1", "--hbar", "1", "--P", '{"1":[["0",1]]}', "--Q", '{"1":[["1",1]]}'
    )
    assert code == 0
    result = doc["result"]
    assert result["cyclic_sufficient"] is False
    assert result["witnesses"]["poles"] == [{"node": 1, "roots": ["0"]}]


def test_orbit_empty_word_echoes():
    P = {"1": [["1/2", 2], ["3", -1]], "2": []}
    code, doc = call_json("orbit", "--type", "A2", "--P", json.dumps(P), "--word", "")
    assert code == 0
    assert doc["result"]["image"] == doc["input"]["P"] == P


def test_orbit_from_input_file(tmp_path):
    job = tmp_path / "job.json"
    job.write_text(json.dumps({"type": "A2", "hbar": "1/2", "P": {"1": [["0", 1]]}, "word": [2, 1]}))
    code, doc = call_json("orbit", "--input", str(job))
    assert code == 0
    assert doc["result"]["image"] == {"1": [], "2": [["3/4", -1]]}
    # flags override the document
    code, doc = call_json("orbit", "--input", str(job), "--hbar", "1")
    assert doc["result"]["image"] == {"1": [], "2": [["3/2", -1]]}


def test_hw_orbit_and_solver_error():
    code, doc = call_json("orbit", "--type", "A1", "--action", "hw", "--P", '{"1":[["-1",1],["0",-1]]}', "--word", "1")
    assert code == 0
    assert doc["result"]["monic"] == {"1": [["1", -1]]}
    code, doc = call_json("orbit", "--type", "A1", "--action", "hw", "--P", '{"1":[["1/3",1],["0",-1]]}', "--word", "")
    assert code == 4 and doc["error"] == "NonzeroChainSum"


def test_word_errors():
    P = '{"1":[["0",1]]}'
    assert call("extremal", "--type", "A2", "--P", P, "--word", "1,1")[0] == 3
    assert call("orbit", "--type", "A2", "--P", P, "--word", "1,3")[0] == 3
    assert call("cyclicity", "--type", "A2", "--P", P, "--Q", P, "--word", "1,2")[0] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ("poles", "--type", "A1"),
        ("poles", "--type", "A1", "--P", '{"1":[["0",-1]]}'),
        ("poles", "--type", "A1", "--P", '{"1":[[0.5,1]]}'),
        ("poles", "--type", "A1", "--P", "{not json"),
        ("poles", "--type", "A1", "--P", '{"2":[]}'),
        ("poles", "--type", "A1", "--hbar", "0", "--P", "{}"),
        ("poles", "--P", "{}"),
        ("orbit", "--type", "A1", "--P", "{}"),
        ("gtl-check", "--type", "A1", "--order", "0"),
        ("nonsense",),
        ("verify", "bogus"),
    ],
)
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_missing_input_file(tmp_path):
    assert call("info", "--input", str(tmp_path / "absent.json"))[0] == 2


def test_baxter_and_extremal():
    P = '{"1":[["0",1]]}'
    code, doc = call_json("baxter", "--type", "A2", "--P", P)
    assert code == 0
    assert doc["result"]["baxter"]["2"]["roots"] == [["1/2", 1]]
    assert doc["result"]["factorization"]["ok"] is True
    code, doc = call_json("extremal", "--type", "A2", "--P", P, "--word", "1")
    assert doc["result"]["polynomials"]["2"] == ["-1/2", "1"]


def test_q_commands():
    code, doc = call_json("qloop-orbit", "--type", "A1", "--P", '{"1":[["1",0,1]]}', "--word", "1")
    assert code == 0
    assert doc["result"]["image"]["1"]["weight"] == -1
    assert doc["result"]["expansions_agree"] is True
    code, doc = call_json("qloop-orbit", "--type", "A1", "--lweight", json.dumps(doc["result"]["image"]), "--word", "1")
    # the square of a generator is not the identity: it shifts every root by q^4
    assert doc["result"]["image"]["1"] == {"roots": [["1", 2, 1], ["1", 4, -1]], "weight": 1}
    code, doc = call_json("qloop-hecke", "--type", "A1", "--r", "1", "--dump")
    assert code == 0
    assert doc["result"]["matrices"]["1"] == [[{"num": ["0", "-1"], "den": ["1"]}]]
    code, doc = call_json("gtl-check", "--type", "B2", "--r", "-2", "--order", "5")
    assert code == 0 and doc["result"]["ok"] is True


def test_verify_and_determinism():
    code, out, _ = call("verify", "hecke")
    assert code == 0
    assert json.loads(out)["result"]["suites"][0]["failed"] == 0
    first = call("verify", "all", "--seed", "42", "--count", "3")
    second = call("verify", "all", "--seed", "42", "--count", "3")
    assert first[0] == 0
    assert first[1] == second[1]


def test_table_format():
    code, out, _ = call("verify", "kappa", "--format", "table")
    assert code == 0
    assert out.splitlines()[0].split() == ["suite", "cases", "failed", "status"]
    code, out, _ = call("poles", "--type", "A1", "--P", '{"1":[["0",1]]}', "--format", "table")
    rows = dict(line.split(None, 1) for line in out.splitlines())
    assert rows["result.poles.1"] == '["0"]'


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "yangbraid", "info", "--type", "G2"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["two_kappa"] == 12


def test_negative_hbar_flag():
    code, doc = call_json("poles", "--type", "A1", "--hbar", "-1/2", "--P", '{"1":[["0",1]]}')
    assert code == 0
    assert doc["input"]["hbar"] == "-1/2"
