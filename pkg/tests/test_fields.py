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
from closingbrace.fields import AbelianFieldDescriptor, canonicalize_field, \
        cyclotomic_field, real_cyclotomic_subfield, skew_cyclotomic_subfield
from closingbrace.metacyclicerror import PreconditionError

RATIONALS = AbelianFieldDescriptor(1, (0,))


def test_rationals():
    assert cyclotomic_field(1) == RATIONALS
    assert cyclotomic_field(2) == RATIONALS
    assert canonicalize_field(6, [5]) == RATIONALS
    assert RATIONALS.degree == 1
    assert RATIONALS.is_real
    assert str(RATIONALS) == "Q"


def test_cyclotomic_field():
    field = cyclotomic_field(4)
    assert field == AbelianFieldDescriptor(4, (1,))
    assert field.degree == 2
    assert not field.is_real
    assert str(field) == "Q(zeta_4)"


def test_conductor_drops_to_smallest_modulus():
    assert canonicalize_field(12, [5]) == AbelianFieldDescriptor(4, (1,))
    assert cyclotomic_field(6) == cyclotomic_field(3)


def test_real_and_skew_subfields():
    real = real_cyclotomic_subfield(8)
    assert real == canonicalize_field(8, [7])
    assert real.kernel == (1, 7)
    assert real.degree == 2
    assert real.is_real
    assert str(real) == "Q(zeta_8)^<7>"
    skew = skew_cyclotomic_subfield(8)
    assert skew == AbelianFieldDescriptor(8, (1, 3))
    assert skew.degree == 2
    assert not skew.is_real
    assert skew != real


def test_containment():
    assert cyclotomic_field(8).contains(real_cyclotomic_subfield(8))
    assert not real_cyclotomic_subfield(8).contains(cyclotomic_field(8))
    assert cyclotomic_field(8).contains(cyclotomic_field(4))
    assert cyclotomic_field(12).contains(cyclotomic_field(3))
    assert cyclotomic_field(5).contains(RATIONALS)


def test_as_dict():
    assert real_cyclotomic_subfield(8).as_dict() == {"conductor": 8,
            "degree": 2, "kernel_generators": [7]}


@pytest.mark.parametrize("n, generators", [(8, [2]), (0, [])])
def test_invalid_fields(n, generators):
    with pytest.raises(PreconditionError):
        canonicalize_field(n, generators)


def test_skew_subfield_needs_multiple_of_four():
    with pytest.raises(PreconditionError):
        skew_cyclotomic_subfield(6)
