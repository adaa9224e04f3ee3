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
from closingbrace.canonical import CanonicalPParams, Interpretation, \
        classical_name, clause_results, enumerate_canonical, \
        enumerate_canonical_up_to, validate_canonical
from closingbrace.metacyclicerror import PreconditionError
from closingbrace.presentation import MetacyclicPresentation
from conftest import C3XC3_PARAMS, D16_PARAMS, D8_PARAMS, Q16_PARAMS, \
        Q8_PARAMS, SD16_PARAMS


def test_lower():
    assert Q8_PARAMS.lower() == MetacyclicPresentation(4, 2, 2, 3)
    assert D8_PARAMS.lower() == MetacyclicPresentation(4, 2, 0, 3)
    assert C3XC3_PARAMS.lower() == MetacyclicPresentation(3, 3, 0, 1)
    assert CanonicalPParams(3, 0, 1, 0, 0, 1).lower() == \
            MetacyclicPresentation(1, 3, 0, 0)


def test_str_and_order():
    assert str(Q8_PARAMS) == "mcp(2,2,1,1,2,-1)"
    assert SD16_PARAMS.order == 16


@pytest.mark.parametrize("params", [Q8_PARAMS, D8_PARAMS, SD16_PARAMS,
    Q16_PARAMS, D16_PARAMS, C3XC3_PARAMS, CanonicalPParams(3, 0, 1, 0, 0, 1)])
def test_valid_tuples(params):
    assert validate_canonical(params)


def test_rho_plus_nu_equal_to_sigma_is_invalid():
    params = CanonicalPParams(2, 3, 1, 3, 2, -1)
    assert not validate_canonical(params)
    assert dict(clause_results(params))["eps=-1 inequalities"] is False


def test_clause_results_stop_after_basic():
    assert clause_results(CanonicalPParams(4, 1, 1, 1, 1, 1)) == \
            [("basic", False)]


def test_interpretations_differ():
    # C2 x C2: mu = 1 forces rho = 1
    c2xc2 = CanonicalPParams(2, 1, 1, 1, 1, 1)
    assert validate_canonical(c2xc2)
    assert not validate_canonical(c2xc2, Interpretation.LITERAL)
    assert not validate_canonical(Q8_PARAMS, Interpretation.LITERAL)


def test_interpretation_from_string():
    assert Interpretation.from_string("literal") is Interpretation.LITERAL
    assert Interpretation.from_string("RESOLVED") is Interpretation.RESOLVED
    with pytest.raises(ValueError):
        Interpretation.from_string("loose")


def test_enumerate_order_8():
    assert enumerate_canonical(2, 3) == [
        CanonicalPParams(2, 0, 3, 0, 0, 1),
        CanonicalPParams(2, 1, 2, 1, 1, 1),
        CanonicalPParams(2, 2, 1, 1, 2, -1),
        CanonicalPParams(2, 2, 1, 2, 2, -1),
    ]


@pytest.mark.parametrize("p, k, expected", [(2, 2, 2), (2, 3, 4), (2, 4, 8),
    (3, 2, 2), (3, 3, 3)])
def test_enumeration_counts(p, k, expected):
    assert len(enumerate_canonical(p, k)) == expected


def test_enumerate_needs_prime():
    with pytest.raises(PreconditionError):
        enumerate_canonical(6, 2)


def test_enumerate_up_to():
    found = enumerate_canonical_up_to(3, 9)
    assert [t.order for t in found] == [1, 3, 9, 9]


@pytest.mark.parametrize("params, name", [(Q8_PARAMS, "Q8"),
    (D8_PARAMS, "D8"), (SD16_PARAMS, "SD16"), (Q16_PARAMS, "Q16"),
    (D16_PARAMS, "D16"), (C3XC3_PARAMS, "C3 x C3"),
    (CanonicalPParams(3, 0, 1, 0, 0, 1), "C3")])
def test_classical_name(params, name):
    assert classical_name(params) == name
