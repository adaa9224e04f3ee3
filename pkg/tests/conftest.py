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
from closingbrace.group import MetacyclicGroup
from closingbrace.presentation import MetacyclicPresentation

Q8_PARAMS = CanonicalPParams(2, 2, 1, 1, 2, -1)
D8_PARAMS = CanonicalPParams(2, 2, 1, 2, 2, -1)
SD16_PARAMS = CanonicalPParams(2, 3, 1, 2, 2, -1)
Q16_PARAMS = CanonicalPParams(2, 3, 1, 2, 3, -1)
D16_PARAMS = CanonicalPParams(2, 3, 1, 3, 3, -1)
C3XC3_PARAMS = CanonicalPParams(3, 1, 1, 1, 1, 1)

Q8 = MetacyclicPresentation(4, 2, 2, 3)
D8 = MetacyclicPresentation(4, 2, 0, 3)
S3 = MetacyclicPresentation(3, 2, 0, 2)
C6 = MetacyclicPresentation(3, 2, 0, 1)
C4 = MetacyclicPresentation(4, 1, 0, 1)


def pytest_configure(config):
    config.addinivalue_line("markers",
            "slow: computations on groups of order above 32")


@pytest.fixture
def q8():
    return MetacyclicGroup(Q8)


@pytest.fixture
def d8():
    return MetacyclicGroup(D8)


@pytest.fixture
def s3():
    return MetacyclicGroup(S3)


@pytest.fixture
def c6():
    return MetacyclicGroup(C6)
