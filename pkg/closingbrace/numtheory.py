# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Integer arithmetic used throughout the package.

All functions work on Python integers, which are unbounded, so none of
them can overflow. Valuations of 0 are `INFINITY`, a member of the
`Unbounded` enumeration that compares greater than every integer.
"""

from closingbrace.metacyclicerror import PreconditionError
from dataclasses import dataclass
from enum import Enum
from math import gcd
from sympy import divisors, isprime, multiplicity, n_order, totient


class Unbounded(Enum):
    """The valuation of 0.

    The single member INFINITY is greater than every integer, and
    adding an integer to it gives INFINITY again.
    """

    INFINITY = "Infinity"

    def __ge__(self, other):
        """The >=-operator."""
        if isinstance(other, (int, Unbounded)):
            return True
        return NotImplemented

    def __gt__(self, other):
        """The >-operator."""
        if isinstance(other, int):
            return True
        if isinstance(other, Unbounded):
            return False
        return NotImplemented

    def __le__(self, other):
        """The <=-operator."""
        if isinstance(other, int):
            return False
        if isinstance(other, Unbounded):
            return True
        return NotImplemented

    def __lt__(self, other):
        """The <-operator."""
        if isinstance(other, (int, Unbounded)):
            return False
        return NotImplemented

    def __add__(self, other):
        """The +-operator; adding anything finite stays infinite."""
        if isinstance(other, (int, Unbounded)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __str__(self):
        """String representation."""
        return self.value


INFINITY = Unbounded.INFINITY


@dataclass(frozen=True)
class CyclotomicClassPartition:
    """The orbits of multiplication by R on the residues modulo
    `modulus`.

    Attributes:
        modulus (int): The modulus.
        classes (tuple): The classes as sorted tuples, ordered by their
                         least member.
    """
    modulus: int
    classes: tuple

    def __len__(self):
        return len(self.classes)

    def class_of(self, residue):
        """Return the class that contains `residue`."""
        residue %= self.modulus
        for cls in self.classes:
            if residue in cls:
                return cls
        raise KeyError(residue)


def require_prime(p):
    """Raise a PreconditionError when `p` is not a prime."""
    if not isinstance(p, int) or not isprime(p):
        raise PreconditionError("{0} is not a prime".format(p))


def vp(p, n):
    """Return the p-adic valuation of the integer `n`.

    Args:
        p (int): A prime.
        n (int): Any integer.

    Returns:
        The largest e with p^e dividing n, or INFINITY when n is 0.

    Raises:
        PreconditionError: When p is not a prime.
    """
    require_prime(p)
    if n == 0:
        return INFINITY
    return int(multiplicity(p, abs(n)))


def p_part(p, n):
    """Return n_p, the largest power of `p` dividing the non-zero `n`."""
    value = vp(p, n)
    if value is INFINITY:
        raise PreconditionError("0 has no {0}-part".format(p))
    return p ** value


def pi_part(primes, n):
    """Return n_π, the product of the p-parts of `n` for p in
    `primes`."""
    result = 1
    for p in primes:
        result *= p_part(p, n)
    return result


def multiplicative_order(m, n):
    """Return the multiplicative order of `m` modulo `n`.

    Raises:
        PreconditionError: When gcd(m, n) is not 1 or n < 1.
    """
    if n < 1:
        raise PreconditionError("Modulus {0} is not positive".format(n))
    if gcd(m, n) != 1:
        raise PreconditionError("{0} is not a unit modulo {1}".format(m, n))
    if n == 1:
        return 1
    return int(n_order(m % n, n))


def ese(x, n):
    """Return S(x, n) = 1 + x + ... + x^(n-1) exactly.

    If g^h = g^x then (hg)^n = h^n g^S(x, n); this is how powers of
    elements in normal form are computed.
    """
    if n < 0:
        raise PreconditionError("S(x, n) needs n >= 0, got {0}".format(n))
    if x == 1:
        return n
    return (x ** n - 1) // (x - 1)


def ese_mod(x, n, modulus):
    """Return S(x, n) modulo `modulus` without computing S(x, n).

    The residue is computed from x^n modulo modulus·(x - 1), which keeps
    the numbers small when n is large.
    """
    if n < 0:
        raise PreconditionError("S(x, n) needs n >= 0, got {0}".format(n))
    x %= modulus
    if modulus == 1:
        return 0
    if x == 0:
        return (1 if n > 0 else 0) % modulus
    if x == 1:
        return n % modulus
    big_modulus = modulus * (x - 1)
    return ((pow(x, n, big_modulus) - 1) // (x - 1)) % modulus


def _valuation_at_least_one(R, p):
    """Return v_p(R - 1), which must be at least 1."""
    a = vp(p, R - 1)
    if a < 1:
        raise PreconditionError(
                "{0} is not congruent to 1 modulo {1}".format(R, p))
    return a


def valuation_of_power_minus_one(R, m, p):
    """Return v_p(R^m - 1) by the closed case split for R ≡ 1 mod p.

    Args:
        R (int): An integer with v_p(R - 1) >= 1.
        m (int): A positive exponent.
        p (int): A prime.

    Returns:
        v_p(R - 1) + v_p(m) if p is odd or 4 divides R - 1;
        v_2(R + 1) + v_2(m) if p = 2, v_2(R - 1) = 1 and m is even;
        1 otherwise. INFINITY when R^m = 1.
    """
    require_prime(p)
    if m < 1:
        raise PreconditionError("Exponent {0} is not positive".format(m))
    a = _valuation_at_least_one(R, p)
    if p != 2 or a >= 2:
        return a + vp(p, m)
    if m % 2 == 0:
        return vp(2, R + 1) + vp(2, m)
    return 1


def _gap(m, valuation):
    """Return max(0, m - valuation) for a possibly infinite valuation."""
    if valuation is INFINITY:
        return 0
    return max(0, m - valuation)


def order_mod_prime_power(R, p, m):
    """Return the multiplicative order of R modulo p^m, for
    R ≡ 1 mod p, by the closed case split.
    """
    require_prime(p)
    if m < 0:
        raise PreconditionError("Exponent {0} is negative".format(m))
    a = _valuation_at_least_one(R, p)
    if p != 2 or a >= 2:
        return p ** _gap(m, a)
    if m <= 1:
        return 1
    # R ≡ 3 mod 4 from here on
    return 2 ** max(1, _gap(m, vp(2, R + 1)))


def _check_power_hypotheses(R, p, a, m):
    require_prime(p)
    if vp(p, R - 1) != a:
        raise PreconditionError("v_{0}({1} - 1) is not {2}".format(p, R, a))
    if a < 1 or a > m:
        raise PreconditionError(
                "Need 1 <= v_p(R - 1) <= m, got a={0}, m={1}".format(a, m))
    if p == 2 and a < 2:
        raise PreconditionError("For p = 2, R must be 1 modulo 4")


def power_residues(R, p, a, m):
    """Return the set {R^x mod p^m : x >= 0}.

    For a = v_p(R - 1) with 1 <= a <= m (and a >= 2 when p = 2) this is
    the set of residues 1 + y·p^a.
    """
    _check_power_hypotheses(R, p, a, m)
    modulus = p ** m
    step = p ** a
    return frozenset((1 + y * step) % modulus for y in range(p ** (m - a)))


def ese_residue(R, p, a, m, n, k):
    """Return S(R, n) mod p^m for n ≡ k·p^(m-a) mod p^m, from the
    closed form: n + k·2^(m-1) when p = 2 and m > a, else n.
    """
    _check_power_hypotheses(R, p, a, m)
    modulus = p ** m
    if (n - k * p ** (m - a)) % modulus != 0:
        raise PreconditionError(
                "{0} is not congruent to {1}*{2}^{3} modulo {2}^{4}".format(
                    n, k, p, m - a, m))
    if p == 2 and m > a:
        return (n + k * 2 ** (m - 1)) % modulus
    return n % modulus


def cyclotomic_classes(R, n):
    """Return the R-cyclotomic classes modulo `n`.

    Raises:
        PreconditionError: When R is not a unit modulo n.
    """
    if n < 1:
        raise PreconditionError("Modulus {0} is not positive".format(n))
    if gcd(R, n) != 1:
        raise PreconditionError("{0} is not a unit modulo {1}".format(R, n))
    seen = set()
    classes = []
    for start in range(n):
        if start in seen:
            continue
        orbit = []
        current = start
        while current not in seen:
            seen.add(current)
            orbit.append(current)
            current = (current * R) % n
        classes.append(tuple(sorted(orbit)))
    return CyclotomicClassPartition(n, tuple(classes))


def cyclotomic_class_count(R, n):
    """Return the number of R-cyclotomic classes modulo `n` as the sum
    of φ(d)/o_d(R) over the divisors d of n.
    """
    if gcd(R, n) != 1:
        raise PreconditionError("{0} is not a unit modulo {1}".format(R, n))
    return sum(int(totient(d)) // multiplicative_order(R, d)
            for d in divisors(n))


def closed_cyclotomic_count(R, p, m):
    """Return the number of R-cyclotomic classes modulo p^m for
    R ≡ 1 mod p, from its closed form.
    """
    require_prime(p)
    if m < 0:
        raise PreconditionError("Exponent {0} is negative".format(m))
    a = _valuation_at_least_one(R, p)
    if m <= a:
        return p ** m
    if p == 2 and m >= 2:
        v = vp(2, R + 1)
        if m < v:
            return 1 + 2 ** (m - 1)
        if v >= 2:
            return 1 + 2 ** (v - 1) * (1 + m - v)
    return p ** (a - 1) * (p + (p - 1) * (m - a))


def sum_d_2d(n):
    """Return the sum of d·2^d for d = 0..n, i.e. (n - 1)·2^(n+1) + 2."""
    if n < 0:
        raise PreconditionError("n must be non-negative, got {0}".format(n))
    return (n - 1) * 2 ** (n + 1) + 2
