# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Structural invariants of metacyclic groups: the abelianization, the
primes p for which there is a normal Hall p'-subgroup, and Sylow and Hall
subgroups re-presented as metacyclic presentations.
"""

import logging
from closingbrace.group import MetacyclicGroup
from closingbrace.metacyclicerror import InternalAssertionError, \
        PreconditionError
from closingbrace.numtheory import pi_part, require_prime
from closingbrace import presentation as pres
from closingbrace.presentation import MetacyclicPresentation
from dataclasses import dataclass
from math import gcd
from sympy import Matrix, ZZ, primefactors
from sympy.matrices.normalforms import invariant_factors


def _presentation_of(group):
    if isinstance(group, MetacyclicGroup):
        return group.presentation
    return group


def prime_divisors(order_):
    return sorted(int(p) for p in primefactors(order_))


def derived_order(group):
    """Return |G'| = m / gcd(m, r - 1), the order of ⟨a^(r-1)⟩."""
    p = _presentation_of(group)
    return p.m // gcd(p.m, p.r - 1)


def abelianization_invariants(group):
    """Return the invariant factors of G/G' in increasing order.

    G/G' is generated by the images of a and b subject to
    a^gcd(m, r-1) = 1 and b^n = a^s; the invariant factors are those of
    the Smith normal form of that relation matrix, without the 1s.

    Args:
        group: A MetacyclicPresentation or MetacyclicGroup.

    Returns:
        A tuple of integers > 1, each dividing the next.
    """
    p = _presentation_of(group)
    relations = Matrix([[gcd(p.m, p.r - 1), 0], [-p.s, p.n]])
    factors = invariant_factors(relations, domain=ZZ)
    return tuple(sorted(abs(int(f)) for f in factors if abs(int(f)) != 1))


@dataclass(frozen=True)
class PiSignature:
    """The primes of |G| split by whether G has a normal Hall
    p'-subgroup.

    Attributes:
        pi (frozenset)      : Primes p with a normal Hall p'-subgroup.
        pi_prime (frozenset): The remaining prime divisors of |G|.
    """
    pi: frozenset
    pi_prime: frozenset

    def as_dict(self):
        return {"pi": sorted(self.pi), "pi_prime": sorted(self.pi_prime)}

    def __str__(self):
        return "pi={{{0}}} pi'={{{1}}}".format(
                ",".join(str(p) for p in sorted(self.pi)),
                ",".join(str(p) for p in sorted(self.pi_prime)))


def pi_signature_by_derived_subgroup(group):
    """Return the signature from the abelianization alone: p is outside
    pi exactly when p divides |G'| and the p-part of G/G' is cyclic."""
    p = _presentation_of(group)
    primes = prime_divisors(p.order)
    commutator_order = derived_order(p)
    factors = abelianization_invariants(p)
    pi_prime = frozenset(q for q in primes if commutator_order % q == 0
            and sum(1 for f in factors if f % q == 0) <= 1)
    return PiSignature(frozenset(primes) - pi_prime, pi_prime)


def pi_signature_by_enumeration(group):
    """Return the signature by testing, for each prime p, whether the
    p'-elements generate a normal subgroup of order |G|_p'."""
    orders = group.element_orders()
    pi = set()
    primes = prime_divisors(group.order)
    for q in primes:
        others = [x for x, o in enumerate(orders) if o % q != 0]
        closure = group.closure(others)
        wanted = group.order // pi_part([q], group.order)
        if closure.order == wanted and group.is_normal(closure):
            pi.add(q)
    return PiSignature(frozenset(pi), frozenset(primes) - pi)


def pi_signature(group):
    """Return the PiSignature of `group`, computed by enumeration and
    from the derived subgroup.

    Raises:
        CapExceededError      : When the group is too large to enumerate.
        InternalAssertionError: When the two computations disagree.
    """
    if not isinstance(group, MetacyclicGroup):
        group = MetacyclicGroup(group)
    by_enumeration = pi_signature_by_enumeration(group)
    by_derived = pi_signature_by_derived_subgroup(group)
    if by_enumeration != by_derived:
        raise InternalAssertionError(
                "pi signatures of {0} disagree: enumeration gives {1}, "
                "derived subgroup gives {2}".format(group, by_enumeration,
                    by_derived))
    return by_enumeration


def element_pi_part(presentation, g, primes):
    """Return g_π, the power of g whose order is the π-part of the order
    of g."""
    g_order = pres.order(g, presentation)
    own = pi_part(primes, g_order)
    rest = g_order // own
    # k ≡ 1 mod own and k ≡ 0 mod rest
    k = rest * pow(rest, -1, own) if own > 1 else 0
    return pres.power(g, k, presentation)


def hall_generators(presentation, primes):
    """Return (a_π, b_π), which generate a Hall π-subgroup."""
    return (element_pi_part(presentation, pres.generator_a(presentation),
                primes),
            element_pi_part(presentation, pres.generator_b(presentation),
                primes))


def _subgroup_presentation(presentation, primes):
    m = presentation.m
    a_pi, b_pi = hall_generators(presentation, primes)
    new_m = pres.order(a_pi, presentation)
    new_n = pi_part(primes, presentation.order) // new_m
    step = m // new_m
    # a_pi = a^(step·unit)
    unit = (a_pi.i // step) % new_m if new_m > 1 else 0
    top = pres.power(b_pi, new_n, presentation)
    if top.j != 0 or top.i % step != 0:
        raise InternalAssertionError(
                "{0}-part of b in {1} does not power into ⟨a⟩".format(
                    sorted(primes), presentation))
    if new_m == 1:
        return MetacyclicPresentation(1, new_n, 0, 0)
    s = (top.i // step) * pow(unit, -1, new_m) % new_m
    r = pow(presentation.r, b_pi.j, new_m)
    result = MetacyclicPresentation(new_m, new_n, s, r)
    result.require_consistent()
    return result


def sylow_subgroup(group, p):
    """Return the Sylow p-subgroup ⟨a_p, b_p⟩ as a presentation on the
    generators a_p and b_p.

    Raises:
        PreconditionError: When p is not a prime.
    """
    require_prime(p)
    return _subgroup_presentation(_presentation_of(group), [p])


def hall_subgroup(group, primes):
    """Return the Hall π-subgroup ⟨a_π, b_π⟩ for π ⊆ π_G as a
    presentation on the generators a_π and b_π.

    Raises:
        PreconditionError: When π is not contained in π_G.
    """
    presentation = _presentation_of(group)
    primes = sorted(set(primes))
    for p in primes:
        require_prime(p)
    signature = pi_signature_by_derived_subgroup(presentation)
    outside = [p for p in primes
            if p not in signature.pi and presentation.order % p == 0]
    if outside:
        raise PreconditionError("Primes {0} are not in pi of {1}".format(
            outside, presentation))
    logging.info("Hall {0}-subgroup of {1}".format(primes, presentation))
    return _subgroup_presentation(presentation, primes)


def hall_subgroup_in(group, primes):
    """Return the Hall π-subgroup ⟨a_π, b_π⟩ as a Subgroup of `group`."""
    gens = hall_generators(group.presentation, primes)
    return group.closure(group.index(g) for g in gens)


def is_nilpotent(group):
    """A finite group is nilpotent exactly when every prime is in pi."""
    return not pi_signature_by_derived_subgroup(group).pi_prime
