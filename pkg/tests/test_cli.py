from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from quadsg.cli import (
    EXIT_DECIDED,
    EXIT_INPUT_ERROR,
    EXIT_UNDECIDED,
    JobSpec,
    instance_document,
    main,
    parse_circuit,
    parse_instance,
    circuit_document,
    run,
)
from quadsg.pit import random_circuit
from quadsg.structure import make_instance

FOUR_FORMS = {
    "variables": ["x", "y", "z", "w"],
    "A": "x*y + z*w",
    "B": "x*y - z*w",
    "Q": ["x*w", "y*z"],
}


def call(argv, capsys, stdin_text=None, monkeypatch=None):
    if stdin_text is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_classify_four_forms(tmp_path, capsys):
    path = tmp_path / "four.json"
    path.write_text(json.dumps(FOUR_FORMS))
    code, out = call(["classify", "--input", str(path)], capsys)
    assert code == EXIT_DECIDED
    rep = json.loads(out)
    assert {"ii", "iii"} <= set(rep["cases"])
    assert rep["status"] == "decided" and rep["command"] == "classify"


def test_radical_trivial(capsys):
    doc = json.dumps({"variables": ["x"], "f": "x", "gens": ["x^2"]})
    code, out = call(["radical", "--input", doc], capsys)
    assert code == EXIT_DECIDED and json.loads(out)["member"] is True


def test_generate_then_classify(tmp_path, capsys):
    code, out = call(["generate", "--case", "iii", "--n", "6", "--seed", "7"], capsys)
    assert code == EXIT_DECIDED
    path = tmp_path / "inst.json"
    path.write_text(out)
    code, out = call(["classify", "--input", str(path)], capsys)
    assert code == EXIT_DECIDED and "iii" in json.loads(out)["cases"]


@pytest.mark.parametrize("case,n", [("ii", 5), ("iii", 6)])
def test_instance_round_trip(case, n):
    for seed in range(3):
        inst = make_instance(case, n, seed)
        doc = json.loads(json.dumps(instance_document(inst)))
        assert parse_instance(doc) == inst


def test_circuit_round_trip():
    for seed in range(5):
        c = random_circuit(4, 2, seed, zero=seed % 2 == 0)
        assert parse_circuit(json.loads(json.dumps(circuit_document(c, seed)))) == c


def test_malformed_input_exits_one(capsys):
    code, out = call(["radical", "--input", "{not json"], capsys)
    assert code == EXIT_INPUT_ERROR and json.loads(out)["status"] == "error"
    code, _ = call(["classify", "--input", json.dumps({"A": "x"})], capsys)
    assert code == EXIT_INPUT_ERROR
    code, _ = call(["radical", "--input", json.dumps({"f": 1.5, "gens": []})], capsys)
    assert code == EXIT_INPUT_ERROR


def test_cap_exceeded_exits_two(capsys):
    doc = json.dumps({"variables": ["x", "y", "z"], "f": "x*y", "gens": ["x^2 + y*z", "y^2 - x*z", "z^3 - x*y*z"]})
    code, out = call(["radical", "--max-pairs", "1", "--input", doc], capsys)
    assert code == EXIT_UNDECIDED and json.loads(out)["status"] == "undecided"


def test_json_output_is_byte_stable(capsys):
    argv = ["pit", "--seed", "3", "--input", json.dumps(circuit_document(random_circuit(3, 2, 1, zero=True)))]
    first = call(argv, capsys)
    second = call(argv, capsys)
    assert first == second and first[0] == EXIT_DECIDED
    rep = json.loads(first[1])
    assert rep["zero"] is True and rep["gate_radical_report"]["all_confirmed"] is True


def test_stdin_and_human_format(capsys, monkeypatch):
    doc = json.dumps({"variables": ["x", "y"], "forms": ["x^2", "y^2", "x*y"]})
    code, out = call(["dim", "--input", "-", "--format", "human"], capsys, doc, monkeypatch)
    assert code == EXIT_DECIDED
    lines = dict(line.split(": ", 1) for line in out.strip().splitlines())
    assert lines["span_dimension"] == "3" and lines["minimal_space_dimension"] == "2"


def test_sg_verify_points(capsys):
    doc = json.dumps({"points": [[1, 0], [0, 1], [1, 1]]})
    code, out = call(["sg-verify", "--input", doc], capsys)
    rep = json.loads(out)
    assert code == EXIT_DECIDED and rep["sg"] is True and rep["delta_others"] == "1"


def test_run_reports_unknown_command():
    code, rep = run(JobSpec("frobnicate", None))
    assert code == EXIT_INPUT_ERROR and rep["status"] == "error"


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "quadsg", "radical", "--input", "-"],
        input=json.dumps({"variables": ["x", "y"], "f": "x", "gens": ["y"]}),
        capture_output=True,
        text=True,
    )
    assert res.returncode == EXIT_DECIDED
    assert json.loads(res.stdout)["member"] is False
