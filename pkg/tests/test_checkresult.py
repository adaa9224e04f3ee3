# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.


import pytest
from closingbrace.checkresult import CheckResult


def test_states_from_string():
    assert CheckResult.States.from_string("PASSED") is \
            CheckResult.States.PASSED
    assert CheckResult.States.from_string("FAILED") is \
            CheckResult.States.FAILED
    with pytest.raises(ValueError):
        CheckResult.States.from_string("passed")


def test_passed():
    result = CheckResult("counting", "N = cyclic classes", "counting:mc",
            CheckResult.States.PASSED)
    assert result.passed
    assert not result.resumed
    result.state = CheckResult.States.FAILED
    assert not result.passed
    assert result.as_dict()["state"] is CheckResult.States.FAILED
