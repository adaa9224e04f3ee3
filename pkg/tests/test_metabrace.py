# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.


import json
import pytest
from closingbrace.metabrace import EXIT_OK, EXIT_USAGE, run


def _run(argv):
    with pytest.raises(SystemExit) as exit_info:
        run(argv)
    return exit_info.value.code


def test_validate(capsys):
    assert _run(["validate", "mcp(2,2,1,1,2,-1)"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("mcp(2,2,1,1,2,-1): valid")
    assert "name: Q8" in out


def test_validate_invalid_tuple(capsys):
    assert _run(["validate", "mcp(2,3,1,3,2,-1)"]) == EXIT_OK
    assert "invalid" in capsys.readouterr().out


def test_validate_presentation(capsys):
    assert _run(["validate", "mc(4,2,1,3)"]) == EXIT_OK
    assert "FAIL" in capsys.readouterr().out


def test_counts(capsys):
    assert _run(["counts", "mc(4,2,2,3)"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert "classes=5" in lines
    assert "cyclic-subgroup-classes=5" in lines
    assert "components=5" in lines


def test_counts_checks_formula(capsys):
    assert _run(["counts", "mcp(2,2,1,1,2,-1)", "--json"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["formula_classes"] == 5


def test_iso(capsys):
    assert _run(["iso", "mc(4,2,2,3)", "mc(4,2,0,3)"]) == EXIT_OK
    assert capsys.readouterr().out == "non-isomorphic: division_flag differs\n"
    assert _run(["iso", "mc(3,2,0,2)", "mc(3,2,0,2)"]) == EXIT_OK
    assert capsys.readouterr().out == "isomorphic\n"


def test_wedderburn(capsys):
    assert _run(["wedderburn", "mc(3,2,0,2)"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "Qmc(3,2,0,2) (order 6) has 3 simple components:"
    assert lines[1] == "  Q [Split]"


def test_pi(capsys):
    assert _run(["pi", "mc(3,2,0,2)"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "mc(3,2,0,2): pi={2} pi'={3}"
    assert "nilpotent: no" in lines


def test_bad_literal_is_usage_error():
    assert _run(["validate", "mc(3,2,x,2)"]) == EXIT_USAGE
    assert _run(["counts", "mcp(2,3,1,3,2,-1)"]) == EXIT_USAGE
    assert _run(["iso", "mc(4,2,2,3)"]) == EXIT_USAGE


def test_json_output(capsys):
    assert _run(["validate", "mc(3,2,0,2)", "--json"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith('{\n  "schema": 1')
    assert json.loads(out)["valid"]


def test_out_file(tmp_path, capsys):
    target = tmp_path / "result.txt"
    assert _run(["counts", "mc(3,2,0,2)", "--out", str(target)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert "order=6" in target.read_text().splitlines()


def test_sweep(capsys):
    assert _run(["sweep", "--checks", "counting", "--bound", "8",
        "--primes", "2"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[-1] == "all checks passed"


def test_classify(capsys):
    assert _run(["classify", "--bound", "8", "--primes", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "order 8: 4 tuples, 4 classes, bijective" in out


def test_conf_format(capsys):
    assert _run(["-f"]) == EXIT_OK
    assert capsys.readouterr().out
