# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.


import io
import json
from closingbrace.checkresult import CheckResult
from closingbrace.fields import real_cyclotomic_subfield
from closingbrace.jsoncoders import SCHEMA_VERSION, ReportEncoder, \
        decode_checkpoint_json, dump_report
from datetime import datetime
from dateutil.tz import tzutc
from fractions import Fraction


def _encode(obj):
    return json.loads(json.dumps(obj, cls=ReportEncoder))


def test_fractions():
    assert _encode([Fraction(1, 2), Fraction(4, 2)]) == ["1/2", 2]


def test_sets_and_enums():
    assert _encode({3, 1, 2}) == [1, 2, 3]
    assert _encode(CheckResult.States.PASSED) == "PASSED"


def test_datetime():
    moment = datetime(2021, 3, 4, 5, 6, 7, tzinfo=tzutc())
    assert _encode(moment) == "2021-03-04T05:06:07+00:00"


def test_objects_with_as_dict():
    assert _encode(real_cyclotomic_subfield(8)) == {"conductor": 8,
            "degree": 2, "kernel_generators": [7]}


def test_dump_report():
    buffer = io.StringIO()
    dump_report({"command": "validate", "valid": True}, buffer)
    text = buffer.getvalue()
    assert text.endswith("}\n")
    assert list(json.loads(text)) == ["schema", "command", "valid"]
    assert json.loads(text)["schema"] == SCHEMA_VERSION


def test_decode_checkpoint():
    line = '{"item": "counting:x", "state": "FAILED", ' \
            '"timestamp": "2021-03-04T05:06:07+00:00"}'
    decoded = json.loads(line, object_hook=decode_checkpoint_json)
    assert decoded["state"] is CheckResult.States.FAILED
    assert decoded["timestamp"] == datetime(2021, 3, 4, 5, 6, 7,
            tzinfo=tzutc())
    assert decoded["item"] == "counting:x"
