# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Metacyclic presentations and arithmetic on their normal forms.

A presentation ⟨a, b | a^m = 1, b^n = a^s, a^b = a^r⟩ defines a group of
order m·n when gcd(r, m) = 1, r^n ≡ 1 and s(r - 1) ≡ 0 modulo m. Every
element has a unique normal form b^j a^i with 0 <= j < n and 0 <= i < m.

Conjugation is g^h = h^-1 g h throughout, so that a^b = a^r.
"""

from closingbrace.metacyclicerror import PreconditionError
from closingbrace.numtheory import ese_mod
from dataclasses import dataclass
from math import gcd
from sympy import divisors


@dataclass(frozen=True, order=True)
class MetacyclicPresentation:
    """The presentation ⟨a, b | a^m = 1, b^n = a^s, a^b = a^r⟩.

    Attributes:
        m (int): The order of a.
        n (int): The order of b modulo ⟨a⟩.
        s (int): The exponent with b^n = a^s, 0 <= s < m.
        r (int): The exponent with a^b = a^r, 0 <= r < m.
    """
    m: int
    n: int
    s: int
    r: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise PreconditionError(
                    "m and n must be positive in {0}".format(self))
        if not (0 <= self.s < self.m and 0 <= self.r < self.m):
            raise PreconditionError(
                    "s and r must be reduced modulo m in {0}".format(self))

    def __str__(self):
        return "mc({0},{1},{2},{3})".format(self.m, self.n, self.s, self.r)

    @property
    def order(self):
        """The order m·n of the group, when the presentation is
        consistent."""
        return self.m * self.n

    def check_consistency(self):
        """Return the three consistency conditions with their outcome.

        Returns:
            A list of (description, passed) pairs.
        """
        m, n, s, r = self.m, self.n, self.s, self.r
        return [
            ("gcd(r, m) = 1", gcd(r, m) == 1),
            ("r^n = 1 mod m", pow(r, n, m) == 1 % m),
            ("s(r - 1) = 0 mod m", (s * (r - 1)) % m == 0),
        ]

    def is_consistent(self):
        """Return True when the presentation defines a group of order
        m·n."""
        return all(passed for _, passed in self.check_consistency())

    def require_consistent(self):
        """Raise a PreconditionError when the presentation is not
        consistent."""
        failed = [text for text, passed in self.check_consistency()
                if not passed]
        if failed:
            raise PreconditionError("Presentation {0} is inconsistent: {1}".
                    format(self, ", ".join(failed)))

    def as_dict(self):
        return {"m": self.m, "n": self.n, "s": self.s, "r": self.r}


@dataclass(frozen=True, order=True)
class GroupElement:
    """The element b^j a^i in normal form.

    Attributes:
        j (int): The exponent of b, 0 <= j < n.
        i (int): The exponent of a, 0 <= i < m.
    """
    j: int
    i: int

    def __str__(self):
        return "b^{0}a^{1}".format(self.j, self.i)


def identity():
    return GroupElement(0, 0)


def generator_a(presentation):
    return GroupElement(0, 1 % presentation.m)


def generator_b(presentation):
    if presentation.n == 1:
        return GroupElement(0, presentation.s)
    return GroupElement(1, 0)


def elements(presentation):
    """Return all elements in index order, j major and i minor."""
    return [GroupElement(j, i) for j in range(presentation.n)
            for i in range(presentation.m)]


def multiply(g, h, presentation):
    """Return the normal form of g·h.

    Uses a^i b^j' = b^j' a^(i·r^j'), followed by b^n -> a^s.
    """
    m, n, s, r = (presentation.m, presentation.n, presentation.s,
            presentation.r)
    j = g.j + h.j
    i = g.i * pow(r, h.j, m) + h.i
    if j >= n:
        j -= n
        i += s
    return GroupElement(j, i % m)


def inverse(g, presentation):
    """Return the inverse of g."""
    m, n, s, r = (presentation.m, presentation.n, presentation.s,
            presentation.r)
    if g.j == 0:
        return GroupElement(0, (-g.i) % m)
    j = n - g.j
    return GroupElement(j, (-g.i * pow(r, j, m) - s) % m)


def power(g, k, presentation):
    """Return g^k for any integer k.

    With x = r^j the power (b^j a^i)^k equals b^(jk) a^(i·S(x, k)), and
    b^(jk) is reduced with b^n = a^s.
    """
    if k < 0:
        return power(inverse(g, presentation), -k, presentation)
    m, n, s, r = (presentation.m, presentation.n, presentation.s,
            presentation.r)
    x = pow(r, g.j, m)
    carry, j = divmod(g.j * k, n)
    i = s * carry + g.i * ese_mod(x, k, m)
    return GroupElement(j, i % m)


def power_by_multiplication(g, k, presentation):
    """Return g^k by repeated multiplication (slow path)."""
    if k < 0:
        g = inverse(g, presentation)
        k = -k
    result = identity()
    for _ in range(k):
        result = multiply(result, g, presentation)
    return result


def order(g, presentation):
    """Return the order of g."""
    one = identity()
    for d in divisors(presentation.order):
        if power(g, d, presentation) == one:
            return d
    raise PreconditionError(
            "{0} has no finite order in {1}".format(g, presentation))


def conjugate(g, h, presentation):
    """Return g^h = h^-1 g h."""
    return multiply(multiply(inverse(h, presentation), g, presentation), h,
            presentation)


def consistent_presentations(order_):
    """Yield every consistent presentation of the given order, ordered by
    (m, n, s, r)."""
    for m in divisors(order_):
        n = order_ // m
        actions = [r for r in range(m)
                if gcd(r, m) == 1 and pow(r, n, m) == 1 % m]
        for s in range(m):
            for r in actions:
                if (s * (r - 1)) % m == 0:
                    yield MetacyclicPresentation(m, n, s, r)
