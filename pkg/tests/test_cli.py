import json
import random
import subprocess
import sys

import pytest

from cubarix.cli import main
from cubarix.complexes import SimplicialComplex, complex_to_json, cube_boundary, cubical_cover
from cubarix.corpus import random_simplicial_complex
from cubarix.polynomial import from_json

from conftest import P


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, doc, name="in.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc) if not isinstance(doc, str) else doc)
    return str(path)


def test_pbnk_n3(capsys):
    code, out, _ = run(capsys, "pbnk", "--n", "3")
    doc = json.loads(out)
    assert code == 0 and doc["agree"]
    assert [from_json(p) for p in doc["polynomials"]] == [
        P(1, 23, 23, 1), P(0, 36, 56, 4), P(0, 12, 72, 12), P(0, 4, 56, 36), P(0, 1, 23, 23, 1)]
    assert doc["routes"] == {"def": True, "gf": True, "step": True}


def test_pbnk_n0_csv(capsys):
    code, out, _ = run(capsys, "pbnk", "--n", "0", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["k,x^0,x^1", "0,1,0", "1,0,1"]


def test_pbnk_n4_pretty(capsys):
    code, out, _ = run(capsys, "pbnk", "--n", "4", "--format", "pretty")
    assert code == 0
    assert "[2] 36x + 420x^2 + 300x^3 + 12x^4" in out
    assert "[5] x + 76x^2 + 230x^3 + 76x^4 + x^5" in out


def test_pbnk_def_skipped_over_budget(capsys):
    code, out, _ = run(capsys, "pbnk", "--n", "7")
    assert code == 0 and json.loads(out)["routes"]["def"] == "skipped"


def test_eulerian(capsys):
    code, out, _ = run(capsys, "eulerian", "--n", "4", "--type", "A")
    doc = json.loads(out)
    assert code == 0 and from_json(doc["polynomial"]) == P(1, 11, 11, 1)
    assert doc["descents_agree"] is True


def test_transform_cube_boundary(capsys, tmp_path):
    path = write(tmp_path, complex_to_json(cube_boundary(3)))
    code, out, _ = run(capsys, "transform", "--input", path)
    doc = json.loads(out)
    assert code == 0
    assert from_json(doc["cubical_h"]) == P(1, 1, 1, 1)
    assert {k: from_json(v) for k, v in doc["h_sd"].items()} == {
        "direct": P(1, 23, 23, 1), "from_f": P(1, 23, 23, 1), "from_cubical_h": P(1, 23, 23, 1)}
    assert doc["routes_agree"] and doc["interlaced_by_B_n"] is True


def test_transform_single_vertex(capsys, tmp_path):
    path = write(tmp_path, {"kind": "grid", "ambient": 1, "boxes": [{"min": [0], "max": [0]}]})
    code, out, _ = run(capsys, "transform", "--input", path)
    assert code == 0 and from_json(json.loads(out)["h_sd"]["direct"]) == P(1)


def test_transform_random_cover(capsys, tmp_path):
    delta = random_simplicial_complex(random.Random(6), max_vertices=6)
    path = write(tmp_path, complex_to_json(cubical_cover(delta)))
    code, out, _ = run(capsys, "transform", "--input", path, "--budget", "100000")
    assert code == 0 and json.loads(out)["routes_agree"]


def test_transform_needs_cubical(capsys, tmp_path):
    path = write(tmp_path, complex_to_json(SimplicialComplex.from_facets([[1, 2]])))
    assert run(capsys, "transform", "--input", path)[0] == 3


def test_hvec_and_sd(capsys, tmp_path):
    path = write(tmp_path, {"kind": "simplicial", "facets": [[1, 2], [2, 3], [1, 3]]})
    code, out, _ = run(capsys, "hvec", "--input", path)
    assert code == 0 and from_json(json.loads(out)["h"]) == P(1, 1, 1)
    code, out, _ = run(capsys, "sd", "--input", path)
    doc = json.loads(out)
    assert code == 0 and doc["sd_f_vector"] == [1, 6, 6]


def test_certify(capsys, tmp_path):
    path = write(tmp_path, complex_to_json(cube_boundary(4)))
    code, out, _ = run(capsys, "certify", "--input", path)
    assert code == 0 and json.loads(out)["status"] == "certified"


@pytest.mark.parametrize("argv", [
    ("verify", "pbnk-props", "--n-max", "8"),
    ("verify", "worpitzky", "--n-max", "6", "--m-max", "20"),
    ("verify", "corollary", "--corpus", "builtin"),
    ("verify", "peaks", "--n-max", "6"),
    ("verify", "simplicial-remark"),
])
def test_verify_suites(capsys, argv):
    code, out, _ = run(capsys, *argv)
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and doc["failures"] == []


@pytest.mark.parametrize("doc, code", [
    ("{not json", 2),
    ({"kind": "grid", "ambient": 1, "boxes": [{"min": [0], "max": [2]}]}, 3),
    ({"kind": "poset", "cells": [{"id": "a", "dim": 0}, {"id": "b", "dim": 0},
                                 {"id": "c", "dim": 0}, {"id": "t", "dim": 1}],
      "covers": [["t", "a"], ["t", "b"], ["t", "c"]]}, 3),
])
def test_exit_codes(capsys, tmp_path, doc, code):
    path = write(tmp_path, doc)
    got, _, err = run(capsys, "hvec", "--input", path)
    assert got == code and err


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "hvec", "--input", str(tmp_path / "nope.json"))[0] == 2


def test_budget_exit(capsys, tmp_path, monkeypatch):
    path = write(tmp_path, complex_to_json(cube_boundary(3)))
    monkeypatch.setenv("CUBARIX_BUDGET", "10")
    assert run(capsys, "sd", "--input", path)[0] == 4


def test_deterministic_output(tmp_path):
    path = write(tmp_path, complex_to_json(cube_boundary(3)))
    cmd = [sys.executable, "-m", "cubarix.cli", "transform", "--input", path]
    first = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert first == second and first.strip()


def test_pbnk_single_column(capsys):
    code, out, _ = run(capsys, "pbnk", "--n", "4", "--k", "2")
    assert code == 0 and from_json(json.loads(out)["polynomial"]) == P(0, 36, 420, 300, 12)
    assert run(capsys, "pbnk", "--n", "4", "--k", "6")[0] == 2


@pytest.mark.parametrize("argv", [
    ("pbnk", "--n", "-1"),
    ("pbnk", "--n", "2", "--budget", "0"),
    ("verify", "peaks", "--seed", "-3"),
])
def test_bad_arguments(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    assert exc.value.code == 2
