# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Exact arithmetic in the rational group algebra QG and the idempotents
built from pairs of subgroups.

An element is stored as integer numerators over one common denominator,
always reduced, so that equal elements have equal representations.
"""

import logging
from closingbrace.metacyclicerror import InternalAssertionError, \
        PreconditionError
from fractions import Fraction
from functools import reduce
from math import gcd


class GroupAlgebraElement:
    """An element Σ c_g g of QG.

    Attributes:
        group (MetacyclicGroup): The group.
    """

    def __init__(self, group, numerators, denominator=1):
        """Build the element Σ numerators[x]/denominator · x.

        Args:
            group (MetacyclicGroup): The group.
            numerators (dict)      : Maps element indices to integers.
            denominator (int)      : A non-zero integer.
        """
        if denominator == 0:
            raise PreconditionError("Zero denominator")
        if denominator < 0:
            numerators = {x: -c for x, c in numerators.items()}
            denominator = -denominator
        numerators = {x: c for x, c in numerators.items() if c}
        common = reduce(gcd, numerators.values(), denominator)
        self.group = group
        self._numerators = {x: c // common for x, c in numerators.items()}
        self._denominator = denominator // common

    @classmethod
    def zero(cls, group):
        return cls(group, {})

    @classmethod
    def one(cls, group):
        return cls(group, {0: 1})

    @classmethod
    def of_element(cls, group, idx):
        return cls(group, {idx: 1})

    @classmethod
    def from_fractions(cls, group, coefficients):
        """Build an element from a dict of index -> Fraction."""
        denominator = reduce(lambda d, c: d * c.denominator // gcd(d,
            c.denominator), (Fraction(c) for c in coefficients.values()), 1)
        return cls(group, {x: int(Fraction(c) * denominator)
            for x, c in coefficients.items()}, denominator)

    def coefficient(self, idx):
        return Fraction(self._numerators.get(idx, 0), self._denominator)

    def coefficients(self):
        """Return the non-zero coefficients as a dict of index ->
        Fraction."""
        return {x: Fraction(c, self._denominator)
                for x, c in sorted(self._numerators.items())}

    def support(self):
        return frozenset(self._numerators)

    def is_zero(self):
        return not self._numerators

    def _check_group(self, other):
        if other.group is not self.group:
            raise PreconditionError("Elements of different group algebras")

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return (self.group is other.group
                and self._denominator == other._denominator
                and self._numerators == other._numerators)

    def __hash__(self):
        return hash((self._denominator, frozenset(self._numerators.items())))

    def __add__(self, other):
        self._check_group(other)
        d1, d2 = self._denominator, other._denominator
        numerators = {x: c * d2 for x, c in self._numerators.items()}
        for x, c in other._numerators.items():
            numerators[x] = numerators.get(x, 0) + c * d1
        return GroupAlgebraElement(self.group, numerators, d1 * d2)

    def __neg__(self):
        return GroupAlgebraElement(self.group,
                {x: -c for x, c in self._numerators.items()},
                self._denominator)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return GroupAlgebraElement(self.group,
                    {x: c * other.numerator for x, c in self._numerators.items()},
                    self._denominator * other.denominator)
        self._check_group(other)
        table = self.group.table
        product = {}
        right = list(other._numerators.items())
        for x, c in self._numerators.items():
            row = table[x]
            for y, d in right:
                z = row[y]
                product[z] = product.get(z, 0) + c * d
        return GroupAlgebraElement(self.group, product,
                self._denominator * other._denominator)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def left_translate(self, g):
        """Return g·self for the element index g."""
        row = self.group.table[g]
        return GroupAlgebraElement(self.group,
                {row[x]: c for x, c in self._numerators.items()},
                self._denominator)

    def right_translate(self, g):
        """Return self·g for the element index g."""
        table = self.group.table
        return GroupAlgebraElement(self.group,
                {table[x][g]: c for x, c in self._numerators.items()},
                self._denominator)

    def conjugate_by(self, g):
        """Return g^-1·self·g."""
        return GroupAlgebraElement(self.group,
                {self.group.conj_idx(x, g): c
                    for x, c in self._numerators.items()},
                self._denominator)

    def is_idempotent(self):
        return self * self == self

    def is_central(self):
        return all(self.conjugate_by(g) == self
                for g in (self.group.a_idx, self.group.b_idx))

    def stabilizer(self):
        """Return the indices g with g·self = self."""
        return frozenset(g for g in range(self.group.order)
                if self.left_translate(g) == self)

    def __str__(self):
        if self.is_zero():
            return "0"
        return " + ".join("{0}*{1}".format(c, self.group.element(x))
                for x, c in self.coefficients().items())

    def as_dict(self):
        return {str(self.group.element(x)): c
                for x, c in self.coefficients().items()}


def hat(group, sub):
    """Return |H|^-1 Σ_{h in H} h for the subgroup H = `sub`.

    Raises:
        CapExceededError: When the group exceeds the algebra cap.
    """
    group.require_cap("Group algebra arithmetic", algebra=True)
    return GroupAlgebraElement(group, {x: 1 for x in sub.elements},
            sub.order)


def epsilon_idempotent(group, normal, within=None):
    """Return ε(H, N) for N normal in H (default H = G): Ĥ when N = H,
    else the product of N̂ - D̂ over the D with D/N minimal normal in
    H/N.

    Raises:
        PreconditionError     : When N is not normal in H.
        InternalAssertionError: When the result is not idempotent.
    """
    top = within if within is not None else group.whole()
    if normal.elements == top.elements:
        return hat(group, top)
    n_hat = hat(group, normal)
    result = n_hat
    for minimal in group.minimal_normal_over(normal, top):
        result = result * (n_hat - hat(group, minimal))
    if not result.is_idempotent():
        raise InternalAssertionError("ε(H, N) with |H| = {0}, |N| = {1} in "
                "{2} is not idempotent".format(top.order, normal.order, group))
    return result


def e_idempotent(group, big, small):
    """Return e(G, H, K), the sum of the distinct G-conjugates of
    ε(H, K).

    Raises:
        InternalAssertionError: When two distinct conjugates of ε(H, K) do
                                not multiply to zero, or when the result
                                is not a central idempotent whose
                                stabilizer is the core of K.
    """
    epsilon = epsilon_idempotent(group, small, big)
    orbit = [(epsilon, 0)]
    seen = {epsilon}
    for element, g in orbit:
        for s in (group.a_idx, group.b_idx):
            image = element.conjugate_by(s)
            if image not in seen:
                seen.add(image)
                orbit.append((image, group.mul_idx(g, s)))
    for conjugate, g in orbit[1:]:
        if not (epsilon * conjugate).is_zero():
            raise InternalAssertionError(
                    "ε(H, K) and its conjugate by {0} are not orthogonal in "
                    "{1}".format(group.element(g), group))
    result = GroupAlgebraElement.zero(group)
    for conjugate, _ in orbit:
        result = result + conjugate
    if not result.is_central() or not result.is_idempotent():
        raise InternalAssertionError("e(G, H, K) is not a central idempotent "
                "in {0}".format(group))
    if result.stabilizer() != group.core(small).elements:
        raise InternalAssertionError("Stabilizer of e(G, H, K) is not the "
                "core of K in {0}".format(group))
    logging.debug("e(G, H, K) with |H| = {0}, |K| = {1} has {2} conjugate "
            "summands".format(big.order, small.order, len(orbit)))
    return result
