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
from closingbrace import presentation as pres
from closingbrace.metacyclicerror import PreconditionError
from closingbrace.presentation import GroupElement, MetacyclicPresentation
from conftest import D8, Q8, S3


def test_consistency():
    assert S3.is_consistent()
    assert Q8.is_consistent()
    invalid = MetacyclicPresentation(4, 2, 1, 2)
    results = dict(invalid.check_consistency())
    assert not results["gcd(r, m) = 1"]
    assert not invalid.is_consistent()
    with pytest.raises(PreconditionError):
        invalid.require_consistent()


def test_s_term_must_be_fixed():
    # b^2 = a must commute with b, but a^b = a^3
    presentation = MetacyclicPresentation(4, 2, 1, 3)
    assert dict(presentation.check_consistency())["s(r - 1) = 0 mod m"] \
            is False


def test_unreduced_presentation_is_rejected():
    with pytest.raises(PreconditionError):
        MetacyclicPresentation(4, 2, 5, 3)
    with pytest.raises(PreconditionError):
        MetacyclicPresentation(0, 2, 0, 0)


def test_str_and_order():
    assert str(Q8) == "mc(4,2,2,3)"
    assert Q8.order == 8


def test_multiply_uses_conjugation_action():
    a = pres.generator_a(D8)
    b = pres.generator_b(D8)
    # a·b = b·a^b = b·a^3
    assert pres.multiply(a, b, D8) == GroupElement(1, 3)
    assert pres.multiply(b, b, D8) == GroupElement(0, 0)
    assert pres.multiply(b, b, Q8) == GroupElement(0, 2)


def test_conjugate():
    a = pres.generator_a(S3)
    b = pres.generator_b(S3)
    assert pres.conjugate(a, b, S3) == GroupElement(0, 2)


def test_inverse():
    for g in pres.elements(Q8):
        assert pres.multiply(g, pres.inverse(g, Q8), Q8) == pres.identity()


def test_power_matches_repeated_multiplication():
    presentation = MetacyclicPresentation(9, 6, 3, 4)
    for g in pres.elements(presentation):
        for k in (-7, -1, 0, 1, 2, 5, 13):
            assert pres.power(g, k, presentation) == \
                    pres.power_by_multiplication(g, k, presentation)


def test_order():
    assert pres.order(GroupElement(1, 0), Q8) == 4
    assert pres.order(GroupElement(1, 1), D8) == 2
    assert pres.order(GroupElement(0, 2), D8) == 2


def test_generator_b_with_trivial_top():
    presentation = MetacyclicPresentation(4, 1, 0, 1)
    assert pres.generator_b(presentation) == GroupElement(0, 0)


def test_consistent_presentations():
    found = list(pres.consistent_presentations(4))
    assert all(p.is_consistent() and p.order == 4 for p in found)
    assert found == sorted(found)
    assert MetacyclicPresentation(2, 2, 0, 1) in found
    assert MetacyclicPresentation(2, 2, 1, 1) in found
    assert MetacyclicPresentation(4, 1, 0, 1) in found
    assert MetacyclicPresentation(1, 4, 0, 0) in found
