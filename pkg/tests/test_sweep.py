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
from closingbrace.canonical import CanonicalPParams
from closingbrace.checkresult import CheckResult
from closingbrace.configuration import Limits
from closingbrace.sweep import RUNNERS, Checkpoint, SweepReport, WorkItem, \
        build_items, run_centers, run_item, run_numtheory, run_sweep, \
        run_wedderburn
from conftest import Q16_PARAMS, Q8


def test_build_items():
    items = build_items(["pi", "counting"], 8, [2], Limits())
    families = [item.family for item in items]
    assert families == ["counting"] * 8 + ["pi"] * 7
    assert items[0].key == "counting:mcp(2,0,0,0,0,1)"
    assert items[-1].key == "pi:order=8"
    assert len({item.key for item in items}) == len(items)


def test_build_items_respects_caps():
    items = build_items(["wedderburn"], 64, [2], Limits(512, 8))
    assert all(item.args[0].order <= 8 for item in items)


def test_every_family_has_a_runner():
    assert set(RUNNERS) == {"numtheory", "counting", "conjugacy",
            "wedderburn", "centers", "classification", "separation",
            "invariance", "pi"}


def test_run_sweep():
    report = run_sweep(["counting"], 8, [2])
    assert report.passed
    assert len(report.results) == 8
    assert report.resumed == 0
    summaries = report.summaries()
    assert len(summaries) == 2
    assert sum(s.passed for s in summaries) == 8
    assert report.as_dict()["checks"] == 8


def test_checkpoint_resume(tmp_path):
    progress = str(tmp_path / "progress.jsonl")
    first = run_sweep(["counting"], 8, [2], checkpoint=progress)
    with open(progress) as fp:
        assert len(fp.readlines()) == 8
    second = run_sweep(["counting"], 8, [2], checkpoint=progress)
    assert second.resumed == 8
    assert all(r.resumed for r in second.results)
    assert [r.item for r in second.results] == [r.item for r in first.results]
    assert [r.state for r in second.results] == \
            [r.state for r in first.results]


def test_checkpoint_skips_truncated_line(tmp_path):
    progress = str(tmp_path / "progress.jsonl")
    run_sweep(["counting"], 4, [2], checkpoint=progress)
    with open(progress, "a") as fp:
        fp.write('{"item": "counting:mcp(2,')
    done = Checkpoint(progress).load()
    assert len(done) == 4
    report = run_sweep(["counting"], 8, [2], checkpoint=progress)
    assert report.resumed == 4
    assert report.passed
    assert len(Checkpoint(progress).load()) == 8


def test_checkpoint_line_format(tmp_path):
    progress = str(tmp_path / "progress.jsonl")
    run_sweep(["counting"], 4, [2], checkpoint=progress)
    with open(progress) as fp:
        record = json.loads(fp.readline())
    assert list(record) == ["timestamp", "item", "family", "invariant",
            "state", "detail"]
    assert record["item"].startswith("counting:mcp(2,")
    assert record["family"] == "counting"
    assert record["state"] == "PASSED"
    assert record["timestamp"].endswith("+00:00")


def test_missing_checkpoint_is_empty(tmp_path):
    assert Checkpoint(str(tmp_path / "none.jsonl")).load() == {}


def test_errors_become_failed_checks():
    item = WorkItem("counting", "counting:{0}".format(Q16_PARAMS),
            (Q16_PARAMS, Limits(8, 8)))
    results = run_item(item)
    assert len(results) == 1
    assert results[0].state is CheckResult.States.FAILED
    assert results[0].detail.startswith("CapExceededError")
    report = SweepReport(["counting"], results)
    assert not report.passed
    assert report.summaries()[0].first_failure is results[0]


def test_run_numtheory():
    assert all(passed for _, passed, _ in run_numtheory("prime power", 2, 4))
    assert all(passed for _, passed, _ in run_numtheory("prime power", 3, 2))


def test_run_numtheory_on_composite_moduli():
    for n in (1, 12, 30, 200):
        verdicts = run_numtheory("modulus", n)
        assert verdicts
        assert all(passed for _, passed, _ in verdicts)
    # units modulo 12 in the residue window
    assert len(run_numtheory("modulus", 12)) == 134


def test_run_numtheory_sum_d_2d():
    verdicts = run_numtheory("sum", 30)
    assert len(verdicts) == 31
    assert all(passed for _, passed, _ in verdicts)
    assert verdicts[-1][2] == "n=30"


def test_build_items_for_numtheory():
    items = build_items(["numtheory"], 8, [2, 3], Limits())
    keys = [item.key for item in items]
    assert len(items) == 16 + 200 + 1
    assert keys[0] == "numtheory:p=2,m=1"
    assert "numtheory:n=200" in keys
    assert keys[-1] == "numtheory:sum_d_2d"
    assert items[-1].args == ("sum", 30)


def test_run_wedderburn():
    verdicts = run_wedderburn(Q8, Limits())
    assert len(verdicts) == 3
    assert all(passed for _, passed, _ in verdicts)


def test_run_centers():
    verdicts = run_centers(CanonicalPParams(2, 3, 2, 3, 2, -1), Limits())
    assert [name for name, _, _ in verdicts] == ["real center criterion",
            "skew center criterion", "fixed field criterion"]
    assert all(passed for _, passed, _ in verdicts)
    assert run_centers(Q16_PARAMS, Limits()) == []
