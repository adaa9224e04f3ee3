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
from closingbrace.configuration import Limits
from closingbrace.group import MetacyclicGroup
from closingbrace.metacyclicerror import CapExceededError, PreconditionError
from closingbrace.presentation import GroupElement, MetacyclicPresentation
from conftest import C3XC3_PARAMS, D16_PARAMS, Q16_PARAMS, SD16_PARAMS


def test_inconsistent_presentation_is_refused():
    with pytest.raises(PreconditionError):
        MetacyclicGroup(MetacyclicPresentation(4, 2, 1, 2))


def test_table_agrees_with_normal_form_arithmetic():
    presentation = MetacyclicPresentation(9, 6, 3, 4)
    group = MetacyclicGroup(presentation)
    for x in range(0, group.order, 5):
        for y in range(group.order):
            expected = pres.multiply(group.element(x), group.element(y),
                    presentation)
            assert group.element(group.mul_idx(x, y)) == expected


def test_index_and_element(q8):
    assert q8.index(GroupElement(1, 3)) == 7
    assert q8.element(6) == GroupElement(1, 2)
    assert q8.b_idx == 4


def test_inverse_and_conjugation(d8):
    a, b = d8.a_idx, d8.b_idx
    assert d8.mul_idx(a, d8.inv_idx(a)) == 0
    # a^b = a^3
    assert d8.conj_idx(a, b) == 3
    assert d8.powers_idx(a) == [0, 1, 2, 3]


def test_element_orders(q8, d8):
    assert sorted(q8.element_orders()) == [1, 2, 4, 4, 4, 4, 4, 4]
    assert sorted(d8.element_orders()) == [1, 2, 2, 2, 2, 2, 4, 4]


def test_class_counts(q8, d8, s3, c6):
    assert q8.class_count() == 5
    assert d8.class_count() == 5
    assert s3.class_count() == 3
    assert c6.class_count() == 6


@pytest.mark.parametrize("params", [SD16_PARAMS, Q16_PARAMS, D16_PARAMS])
def test_class_count_of_order_16(params):
    assert MetacyclicGroup.from_params(params).class_count() == 7


def test_conjugacy_classes_partition_the_group(s3):
    classes = s3.conjugacy_classes_idx()
    assert sorted(len(c) for c in classes) == [1, 2, 3]
    assert sorted(x for c in classes for x in c) == list(range(6))
    assert s3.conjugacy_classes()[0] == (GroupElement(0, 0),)


def test_subgroups(q8, d8, s3):
    assert len(q8.subgroups()) == 6
    assert len(d8.subgroups()) == 10
    assert len(s3.subgroups()) == 6


def test_cyclic_subgroup_classes(q8, d8, s3, c6):
    assert len(q8.cyclic_subgroup_classes()) == 5
    assert len(d8.cyclic_subgroup_classes()) == 5
    assert len(s3.cyclic_subgroup_classes()) == 3
    assert len(c6.cyclic_subgroup_classes()) == 4
    c3xc3 = MetacyclicGroup.from_params(C3XC3_PARAMS)
    assert len(c3xc3.cyclic_subgroup_classes()) == 5


def test_subgroup_conjugacy_classes(d8):
    classes = d8.subgroup_conjugacy_classes()
    assert sum(len(c) for c in classes) == 10
    # the four reflections fall into two classes
    assert sorted(len(c) for c in classes if c[0].order == 2) == [1, 2, 2]


def test_are_conjugate_subgroups(d8):
    first = d8.cyclic_subgroup(GroupElement(1, 0))
    second = d8.cyclic_subgroup(GroupElement(1, 2))
    third = d8.cyclic_subgroup(GroupElement(1, 1))
    assert d8.are_conjugate_subgroups(first, second)
    assert not d8.are_conjugate_subgroups(first, third)


def test_center_and_derived_subgroup(q8, d8, s3):
    assert q8.center().elements == frozenset([0, 2])
    assert d8.center().elements == frozenset([0, 2])
    assert d8.derived_subgroup().elements == frozenset([0, 2])
    assert s3.center().order == 1
    assert s3.derived_subgroup().elements == frozenset([0, 1, 2])


def test_normalizer_and_core(d8):
    reflection = d8.cyclic_subgroup(GroupElement(1, 0))
    normalizer = d8.normalizer(reflection)
    assert normalizer.order == 4
    assert not d8.is_normal(reflection)
    assert d8.core(reflection).order == 1
    assert d8.is_normal(normalizer)


def test_minimal_normal_over(s3):
    above = s3.minimal_normal_over(s3.trivial())
    assert [sub.elements for sub in above] == [frozenset([0, 1, 2])]
    reflection = s3.cyclic_subgroup(GroupElement(1, 0))
    with pytest.raises(PreconditionError):
        s3.minimal_normal_over(reflection)


def test_subgroup_from_elements(q8):
    sub = q8.subgroup_from_elements([0, 1, 2, 3])
    assert sub.order == 4
    with pytest.raises(PreconditionError):
        q8.subgroup_from_elements([0, 1])


def test_group_cap():
    group = MetacyclicGroup(MetacyclicPresentation(8, 4, 0, 1),
            Limits(16, 16))
    with pytest.raises(CapExceededError) as error:
        group.class_count()
    assert error.value.cap == 16
    assert error.value.order == 32
