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
from closingbrace.group import MetacyclicGroup
from closingbrace.metacyclicerror import PreconditionError
from closingbrace.presentation import MetacyclicPresentation
from closingbrace.structure import PiSignature, abelianization_invariants, \
        derived_order, hall_subgroup, hall_subgroup_in, is_nilpotent, \
        pi_signature, pi_signature_by_derived_subgroup, \
        pi_signature_by_enumeration, sylow_subgroup
from conftest import C4, C6, D8, Q8, S3


@pytest.mark.parametrize("presentation, expected", [(Q8, (2, 2)),
    (D8, (2, 2)), (C4, (4,)), (MetacyclicPresentation(2, 2, 0, 1), (2, 2)),
    (MetacyclicPresentation(2, 2, 1, 1), (4,)), (S3, (2,)), (C6, (6,))])
def test_abelianization(presentation, expected):
    assert abelianization_invariants(presentation) == expected


def test_derived_order():
    assert derived_order(S3) == 3
    assert derived_order(Q8) == 2
    assert derived_order(C6) == 1


def test_pi_signature_of_s3(s3):
    signature = pi_signature(s3)
    assert signature == PiSignature(frozenset([2]), frozenset([3]))
    assert str(signature) == "pi={2} pi'={3}"
    assert signature.as_dict() == {"pi": [2], "pi_prime": [3]}
    assert not is_nilpotent(s3)


def test_pi_signature_of_c6(c6):
    assert pi_signature(c6).pi == frozenset([2, 3])
    assert is_nilpotent(c6)


def test_pi_signatures_agree():
    # C3 ⋊ C4 and C5 ⋊ C4
    for presentation in (MetacyclicPresentation(3, 4, 0, 2),
            MetacyclicPresentation(5, 4, 0, 2), Q8, S3, C6):
        group = MetacyclicGroup(presentation)
        assert pi_signature_by_enumeration(group) == \
                pi_signature_by_derived_subgroup(presentation)


def test_sylow_subgroups_of_s3():
    assert sylow_subgroup(S3, 3) == MetacyclicPresentation(3, 1, 0, 1)
    assert sylow_subgroup(S3, 2) == MetacyclicPresentation(1, 2, 0, 0)
    with pytest.raises(PreconditionError):
        sylow_subgroup(S3, 4)


def test_sylow_subgroup_orders():
    presentation = MetacyclicPresentation(9, 4, 0, 8)
    assert sylow_subgroup(presentation, 3).order == 9
    assert sylow_subgroup(presentation, 2).order == 4


def test_hall_subgroup(s3):
    assert hall_subgroup(S3, [2]) == MetacyclicPresentation(1, 2, 0, 0)
    assert hall_subgroup_in(s3, [2]).order == 2
    with pytest.raises(PreconditionError):
        hall_subgroup(S3, [3])


def test_hall_subgroup_of_nilpotent_group():
    assert hall_subgroup(C6, [2, 3]).order == 6
