# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Closed formulas for class counts of metacyclic p-groups.

All formulas are evaluated with `fractions.Fraction`; a count that does not
come out integral is an internal error, never rounded.
"""

from closingbrace.canonical import validate_canonical
from closingbrace.metacyclicerror import InternalAssertionError, \
        PreconditionError
from closingbrace.numtheory import closed_cyclotomic_count, vp
from closingbrace.presentation import GroupElement
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class ConjugacyQuantities:
    """The quantities deciding conjugacy of ⟨b^(p^d) a^i⟩.

    Attributes:
        d (int)  : The exponent of p in b^(p^d).
        i (int)  : The exponent of a, 1 <= i <= p^mu.
        l (int)  : (b^(p^d) a^i)^(p^(nu-d)) = a^l.
        k (int)  : min(mu, v_p(l)).
        h (int)  : min(k, rho + d, rho + v_p(i)).
    """
    d: int
    i: int
    l: int
    k: int
    h: int


@dataclass(frozen=True)
class CountingTerms:
    """The terms of the cyclic subgroup class count for epsilon = 1.

    Attributes:
        a_sigma (Fraction): The part depending on sigma.
        a_rest (Fraction) : The part independent of sigma.
        b_sigma (Fraction): a_sigma with cleared denominators,
                            2·p^(mu-rho)·(p-1)·a_sigma.
    """
    a_sigma: Fraction
    a_rest: Fraction
    b_sigma: Fraction

    @property
    def total(self):
        return self.a_sigma + self.a_rest

    def as_dict(self):
        return {"A_sigma": self.a_sigma, "A": self.a_rest,
                "B_sigma": self.b_sigma, "N": self.total}


def _require_valid(params, epsilon):
    if params.epsilon != epsilon or not validate_canonical(params):
        raise PreconditionError("{0} is not a valid tuple with epsilon={1}".
                format(params, epsilon))


def conjugacy_quantities(params, d, i):
    """Return the ConjugacyQuantities of ⟨b^(p^d) a^i⟩.

    Raises:
        PreconditionError: Unless epsilon = 1, mu >= 1, 0 <= d < nu and
                           1 <= i <= p^mu.
    """
    p, mu, nu, sigma, rho = (params.p, params.mu, params.nu, params.sigma,
            params.rho)
    if params.epsilon != 1 or mu < 1:
        raise PreconditionError("Need epsilon = 1 and mu >= 1 in {0}".format(
            params))
    if not (0 <= d < nu and 1 <= i <= p ** mu):
        raise PreconditionError("Need 0 <= d < nu and 1 <= i <= p^mu, got "
                "d={0}, i={1} for {2}".format(d, i, params))
    if p == 2 and i % 2 == 1 and mu == nu + rho:
        l = 2 ** sigma + i * (2 ** (nu - d) + 2 ** (mu - 1))
    else:
        l = p ** sigma + i * p ** (nu - d)
    k = min(mu, vp(p, l))
    h = min(k, rho + d, rho + vp(p, i))
    return ConjugacyQuantities(d, i, l, k, h)


def cyclic_conjugate_predicate(params, d, i, j):
    """Return True when ⟨b^(p^d) a^i⟩ and ⟨b^(p^d) a^j⟩ are conjugate,
    i.e. when i ≡ j modulo p^h_i."""
    first = conjugacy_quantities(params, d, i)
    conjugacy_quantities(params, d, j)
    return (i - j) % params.p ** first.h == 0


def cyclic_conjugate_by_enumeration(group, params, d, i, j):
    """Decide the same question by comparing the conjugates of the two
    cyclic subgroups in `group`, the group of `params`."""
    m = params.p ** params.mu
    step = params.p ** d
    first = group.cyclic_subgroup(GroupElement(step, i % m))
    second = group.cyclic_subgroup(GroupElement(step, j % m))
    return group.are_conjugate_subgroups(first, second)


def counting_terms(params):
    """Return the CountingTerms of a valid epsilon = 1 tuple.

    Raises:
        PreconditionError     : When the tuple is not a valid epsilon = 1
                                tuple.
        InternalAssertionError: When B_sigma does not match its closed
                                polynomial form.
    """
    _require_valid(params, 1)
    p, mu, nu, sigma, rho = (Fraction(params.p), params.mu, params.nu,
            params.sigma, params.rho)
    a_sigma = (p ** (rho - 1) * sigma * (1 + (p - 1) * Fraction(1 + 2 * nu
            - sigma, 2)) - p ** (rho + sigma - mu) / (p - 1))
    a_rest = ((3 * p ** (rho - 1) - 2) / (p - 1) + p ** (rho - 1) * Fraction(
            6 - rho + 2 * nu * rho - rho ** 2 + params.p * (rho ** 2 + 2 * nu
            - 3 * rho - 2 * nu * rho + 2), 2))
    b_from_a = 2 * p ** (mu - rho) * (p - 1) * a_sigma
    b = b_sigma(params)
    if b != b_from_a:
        raise InternalAssertionError("B_sigma of {0} is {1} but "
                "2p^(mu-rho)(p-1)A_sigma is {2}".format(params, b, b_from_a))
    return CountingTerms(a_sigma, a_rest, Fraction(b))


def count_cyclic_classes_eps1(params):
    """Return the number of conjugacy classes of cyclic subgroups for a
    valid epsilon = 1 tuple.

    Raises:
        InternalAssertionError: When the closed form is not a positive
                                integer.
    """
    total = counting_terms(params).total
    if total.denominator != 1 or total < 1:
        raise InternalAssertionError(
                "Cyclic subgroup class count of {0} evaluates to {1}".format(
                    params, total))
    return int(total)


def count_conjugacy_classes_epsm1(params):
    """Return the number of conjugacy classes for a valid epsilon = -1
    tuple: 3·2^(nu-1) + 2^(rho-1)·(3·2^(nu-1) - 2^(nu+rho-mu))."""
    _require_valid(params, -1)
    mu, nu, rho = params.mu, params.nu, params.rho
    two = Fraction(2)
    total = 3 * two ** (nu - 1) + two ** (rho - 1) * (3 * two ** (nu - 1)
            - two ** (nu + rho - mu))
    if total.denominator != 1 or total < 1:
        raise InternalAssertionError(
                "Conjugacy class count of {0} evaluates to {1}".format(
                    params, total))
    return int(total)


def conjugacy_class_count_by_cyclotomic_classes(params):
    """Return the same count as the sum over 1 <= j <= 2^nu of the number
    of R-cyclotomic classes modulo gcd(2^mu, R^j - 1), R = -1 + 2^rho.

    The elements b^j a^i for fixed j fall into that many classes.
    """
    _require_valid(params, -1)
    R = -1 + 2 ** params.rho
    modulus = 2 ** params.mu
    total = 0
    for j in range(1, 2 ** params.nu + 1):
        d_j = gcd(modulus, R ** j - 1)
        total += closed_cyclotomic_count(R, 2, vp(2, d_j))
    return total


def b_sigma(params):
    """Return -2p^sigma + sigma·p^(mu-1)·(p-1)·(2 + (p-1)(1 + 2nu -
    sigma)) for an epsilon = 1 tuple."""
    if params.epsilon != 1:
        raise PreconditionError("B_sigma needs epsilon = 1, got {0}".format(
            params))
    p, mu, nu, sigma = params.p, params.mu, params.nu, params.sigma
    value = (-2 * Fraction(p) ** sigma + sigma * Fraction(p) ** (mu - 1)
            * (p - 1) * (2 + (p - 1) * (1 + 2 * nu - sigma)))
    return int(value) if value.denominator == 1 else value
