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
from closingbrace.canonical import CanonicalPParams
from closingbrace.functions import as_presentation, parse_group_literal
from closingbrace.metacyclicerror import GroupLiteralError
from closingbrace.presentation import MetacyclicPresentation


def test_parse_presentation():
    assert parse_group_literal("mc(8,2,0,7)") == \
            MetacyclicPresentation(8, 2, 0, 7)
    assert parse_group_literal(" mc( 4 , 2 , 2 , 3 ) ") == \
            MetacyclicPresentation(4, 2, 2, 3)


def test_s_and_r_are_reduced():
    assert parse_group_literal("mc(4,2,6,-1)") == \
            MetacyclicPresentation(4, 2, 2, 3)


def test_parse_canonical_tuple():
    params = parse_group_literal("mcp(2,2,1,1,2,-1)")
    assert params == CanonicalPParams(2, 2, 1, 1, 2, -1)
    assert as_presentation(params) == MetacyclicPresentation(4, 2, 2, 3)
    presentation = MetacyclicPresentation(3, 2, 0, 2)
    assert as_presentation(presentation) is presentation


@pytest.mark.parametrize("literal, position", [
    ("mc(3,2,x,2)", 7),
    ("mc(3,2)", 6),
    ("foo", 0),
    ("mc(3,2,0,2) x", 12),
    ("mcp(2,2,1,1,2,0)", 14),
    ("mc(0,2,0,0)", 3),
    ("mc(3,2,0,2", 10),
])
def test_error_positions(literal, position):
    with pytest.raises(GroupLiteralError) as excinfo:
        parse_group_literal(literal)
    assert excinfo.value.position == position


def test_error_message():
    with pytest.raises(GroupLiteralError) as excinfo:
        parse_group_literal("mc(3,2)")
    assert str(excinfo.value) == "Expected 4 arguments, got 2 (at position 6)"
