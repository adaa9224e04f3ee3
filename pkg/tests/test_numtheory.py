# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

import math
import pytest
from closingbrace import numtheory
from closingbrace.metacyclicerror import PreconditionError
from closingbrace.numtheory import INFINITY


def test_vp():
    assert numtheory.vp(2, 48) == 4
    assert numtheory.vp(3, -18) == 2
    assert numtheory.vp(5, 7) == 0
    assert numtheory.vp(2, 0) is INFINITY


def test_infinity_compares_above_integers():
    assert INFINITY > 10 ** 9
    assert not INFINITY < 3
    assert INFINITY >= INFINITY
    assert INFINITY + 4 is INFINITY
    assert str(INFINITY) == "Infinity"


def test_vp_needs_prime():
    with pytest.raises(PreconditionError):
        numtheory.vp(4, 8)


def test_parts():
    assert numtheory.p_part(2, 24) == 8
    assert numtheory.pi_part([2, 3], 60) == 12
    with pytest.raises(PreconditionError):
        numtheory.p_part(3, 0)


def test_multiplicative_order():
    assert numtheory.multiplicative_order(2, 7) == 3
    assert numtheory.multiplicative_order(3, 1) == 1
    with pytest.raises(PreconditionError):
        numtheory.multiplicative_order(2, 6)


def test_ese():
    assert numtheory.ese(3, 4) == 40
    assert numtheory.ese(1, 5) == 5
    assert numtheory.ese(7, 0) == 0
    assert numtheory.ese_mod(3, 5, 7) == 2
    assert numtheory.ese_mod(3, 4, 1) == 0


@pytest.mark.parametrize("x, n, modulus", [(3, 9, 16), (-1, 6, 8), (5, 13, 27),
    (0, 3, 10), (2, 200, 12)])
def test_ese_mod_matches_ese(x, n, modulus):
    assert numtheory.ese_mod(x, n, modulus) == numtheory.ese(x, n) % modulus


@pytest.mark.parametrize("R, m, p, expected", [(3, 2, 2, 3), (5, 4, 2, 4),
    (4, 3, 3, 2), (3, 3, 2, 1), (7, 3, 3, 2)])
def test_valuation_of_power_minus_one(R, m, p, expected):
    assert numtheory.valuation_of_power_minus_one(R, m, p) == expected
    assert numtheory.vp(p, R ** m - 1) == expected


def test_valuation_needs_r_congruent_to_one():
    with pytest.raises(PreconditionError):
        numtheory.valuation_of_power_minus_one(2, 3, 3)


@pytest.mark.parametrize("R, p, m, expected", [(3, 2, 3, 2), (5, 2, 4, 4),
    (4, 3, 3, 9), (-1, 2, 3, 2), (7, 2, 1, 1)])
def test_order_mod_prime_power(R, p, m, expected):
    assert numtheory.order_mod_prime_power(R, p, m) == expected
    assert numtheory.multiplicative_order(R, p ** m) == expected


def test_power_residues():
    assert numtheory.power_residues(5, 2, 2, 3) == {1, 5}
    assert numtheory.power_residues(4, 3, 1, 2) == {1, 4, 7}
    with pytest.raises(PreconditionError):
        numtheory.power_residues(3, 2, 1, 3)


def test_ese_residue():
    assert numtheory.ese_residue(5, 2, 2, 3, 2, 1) == 6
    assert numtheory.ese(5, 2) % 8 == 6
    assert numtheory.ese_residue(4, 3, 1, 2, 6, 2) == 6
    with pytest.raises(PreconditionError):
        numtheory.ese_residue(5, 2, 2, 3, 3, 1)


def test_cyclotomic_classes():
    partition = numtheory.cyclotomic_classes(5, 8)
    assert partition.classes == ((0,), (1, 5), (2,), (3, 7), (4,), (6,))
    assert len(partition) == 6
    assert partition.class_of(13) == (1, 5)


@pytest.mark.parametrize("R, p, m, expected", [(5, 2, 3, 6), (3, 2, 3, 5),
    (4, 3, 2, 5), (1, 3, 2, 9), (-1, 2, 4, 9)])
def test_closed_cyclotomic_count(R, p, m, expected):
    assert numtheory.closed_cyclotomic_count(R, p, m) == expected
    assert numtheory.cyclotomic_class_count(R, p ** m) == expected
    assert len(numtheory.cyclotomic_classes(R, p ** m)) == expected


def test_sum_d_2d():
    assert numtheory.sum_d_2d(0) == 0
    assert numtheory.sum_d_2d(3) == 34
    with pytest.raises(PreconditionError):
        numtheory.sum_d_2d(-1)


@pytest.mark.parametrize("n", range(1, 201))
def test_cyclotomic_class_count_on_all_moduli(n):
    for R in range(-20, 21):
        if math.gcd(R, n) == 1:
            assert len(numtheory.cyclotomic_classes(R, n)) \
                    == numtheory.cyclotomic_class_count(R, n)


@pytest.mark.parametrize("n", range(31))
def test_sum_d_2d_matches_naive_sum(n):
    assert numtheory.sum_d_2d(n) == sum(d * 2 ** d for d in range(n + 1))
