# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Wedderburn decomposition of the rational group algebra of a metacyclic
group.

Let A be a maximal abelian subgroup containing G'. The primitive central
idempotents of QG are the e(G, H, K) for the pairs (H, K) where H is
maximal among the B ⊇ A with B' ≤ K ≤ B, and H/K is cyclic. For such a
pair, with N = N_G(K), the component QG·e(G, H, K) is

    M_[G:N]( (Q(ζ_m)/F, σ_x, ζ_m^y) ),   m = [H:K], k = [N:H],

where u generates N/H, h generates H/K, h^u ≡ h^x and u^k ≡ h^y modulo K,
and F is the subfield of Q(ζ_m) fixed by σ_x.
"""

import logging
from closingbrace.fields import canonicalize_field
from closingbrace.groupalgebra import GroupAlgebraElement, e_idempotent
from closingbrace.metacyclicerror import InternalAssertionError
from closingbrace.numtheory import ese_mod, multiplicative_order, vp
from dataclasses import dataclass
from enum import Enum
from math import gcd
from sympy import primefactors


class DivisionFlag(Enum):
    """Whether the cyclic algebra part of a component is split, a
    division algebra, or not decided.
    """

    SPLIT = "Split"
    DIVISION = "Division"
    UNKNOWN = "Unknown"

    @classmethod
    def from_string(cls, name):
        """Return the enum member given a string with its name or value.

        Raises:
            ValueError: When the name does not correspond to a member.
        """
        for member in cls:
            if name in (member.name, member.value):
                return member
        raise ValueError("Illegal name ({0}) for enumeration "
                "'DivisionFlag'".format(name))


@dataclass(frozen=True)
class ShodaPair:
    """A pair (H, K) of subgroups with K ≤ H.

    Attributes:
        big (Subgroup)  : H.
        small (Subgroup): K.
    """
    big: object
    small: object


@dataclass(frozen=True)
class SimpleComponentDescriptor:
    """A simple component M_n((Q(ζ_m)/F, σ_x, ζ_m^y)) of QG.

    Attributes:
        matrix_size (int)             : n = [G:N_G(K)].
        m (int)                       : [H:K].
        k (int)                       : [N_G(K):H].
        x (int)                       : h^u ≡ h^x modulo K.
        y (int)                       : u^k ≡ h^y modulo K.
        degree (int)                  : [G:H] = n·k.
        center (AbelianFieldDescriptor): F.
        division_flag (DivisionFlag)  : Whether the cyclic part splits.
    """
    matrix_size: int
    m: int
    k: int
    x: int
    y: int
    degree: int
    center: object
    division_flag: DivisionFlag

    @property
    def dimension(self):
        """The dimension over the rationals."""
        return self.degree ** 2 * self.center.degree

    def comparison_key(self):
        """The data compared between decompositions of different
        groups."""
        return (self.degree, self.center, self.division_flag.value)

    def sort_key(self):
        return (self.degree, self.center, self.matrix_size, self.m, self.k,
                self.x, self.y, self.division_flag.value)

    def __str__(self):
        if self.k == 1:
            inner = str(self.center)
        else:
            inner = "(Q(zeta_{0})/{1}, sigma_{2}, zeta_{0}^{3})".format(
                    self.m, self.center, self.x, self.y)
        if self.matrix_size == 1:
            return "{0} [{1}]".format(inner, self.division_flag.value)
        return "M_{0}({1}) [{2}]".format(self.matrix_size, inner,
                self.division_flag.value)

    def as_dict(self):
        return {"matrix_size": self.matrix_size, "m": self.m, "k": self.k,
                "x": self.x, "y": self.y, "degree": self.degree,
                "center": self.center.as_dict(),
                "division_flag": self.division_flag.value}


@dataclass(frozen=True)
class WedderburnComponent:
    """A component with the pair and the idempotent it comes from."""
    pair: ShodaPair
    idempotent: GroupAlgebraElement
    descriptor: SimpleComponentDescriptor


def _order_modulo(group, x, sub):
    """Return the least t >= 1 with x^t in `sub`."""
    table = group.table
    t, current = 1, x
    while current not in sub.elements:
        current = table[current][x]
        t += 1
    return t


def _quotient_generator(group, big, small):
    """Return an element of `big` generating big/small, or None when the
    quotient is not cyclic."""
    wanted = big.order // small.order
    for x in sorted(big.elements):
        if _order_modulo(group, x, small) == wanted:
            return x
    return None


def maximal_abelian_subgroup(group):
    """Return the largest abelian subgroup containing ⟨a⟩·Z(G), ties
    broken by the sorted element indices."""
    base = group.subgroup_product(group.cyclic_subgroup_idx(group.a_idx),
            group.center())
    candidates = [sub for sub in group.subgroups()
            if base.issubset(sub) and group.is_abelian(sub)]
    return max(candidates, key=lambda sub: (sub.order,
        tuple(-x for x in sorted(sub.elements))))


def strong_shoda_pairs(group):
    """Return strong Shoda pairs giving each primitive central idempotent
    of QG exactly once, in a deterministic order.

    Returns:
        A list of (ShodaPair, idempotent) tuples.

    Raises:
        CapExceededError      : When the group exceeds the algebra cap.
        InternalAssertionError: When the idempotents do not form a
                                partition of unity.
    """
    group.require_cap("Strong Shoda pairs", algebra=True)
    abelian = maximal_abelian_subgroup(group)
    above = [sub for sub in group.subgroups() if abelian.issubset(sub)]
    derived = {sub.elements: group.derived_subgroup(sub) for sub in above}
    found = []
    seen = set()
    for cls in group.subgroup_conjugacy_classes():
        small = cls[0]
        admissible = [sub for sub in above if small.issubset(sub)
                and derived[sub.elements].issubset(small)]
        maximal = [sub for sub in admissible if not any(
            sub.elements < other.elements for other in admissible)]
        for big in maximal:
            if _quotient_generator(group, big, small) is None:
                continue
            idempotent = e_idempotent(group, big, small)
            if idempotent in seen:
                continue
            seen.add(idempotent)
            found.append((ShodaPair(big, small), idempotent))
    _check_partition_of_unity(group, [e for _, e in found])
    logging.info("{0} has {1} primitive central idempotents".format(group,
        len(found)))
    return found


def _check_partition_of_unity(group, idempotents):
    total = GroupAlgebraElement.zero(group)
    for e in idempotents:
        total = total + e
    if total != GroupAlgebraElement.one(group):
        raise InternalAssertionError("Idempotents of {0} do not sum to 1".
                format(group))
    for pos, first in enumerate(idempotents):
        for second in idempotents[pos + 1:]:
            if not (first * second).is_zero():
                raise InternalAssertionError("Idempotents of {0} are not "
                        "orthogonal".format(group))


def _exponent_modulo(group, target, h, small, m):
    """Return y in [0, m) with target ≡ h^y modulo `small`."""
    table = group.table
    current = 0
    for y in range(m):
        if table[target][group.inv_idx(current)] in small.elements:
            return y
        current = table[current][h]
    raise InternalAssertionError("Element {0} is not a power of {1} modulo "
            "K in {2}".format(group.element(target), group.element(h), group))


def classify_degree2_division(component):
    """Return the DivisionFlag of the cyclic algebra part.

    The part splits when k = 1 or when ζ_m^y is the norm of a root of
    unity, i.e. y ≡ 0 modulo gcd(m, S(x, k)). For k = 2 with a real
    center and m > 2, ζ_m^y ≡ -1 modulo such norms gives a division
    algebra, since -1 is not a norm from a totally imaginary field to a
    totally real one.
    """
    m, k, x, y = component.m, component.k, component.x, component.y
    if k == 1:
        return DivisionFlag.SPLIT
    if y % gcd(m, ese_mod(x, k, m)) == 0:
        return DivisionFlag.SPLIT
    if (k == 2 and m > 2 and m % 2 == 0 and component.center.is_real
            and (y - m // 2) % gcd(m, 1 + x) == 0):
        return DivisionFlag.DIVISION
    return DivisionFlag.UNKNOWN


def describe_component(group, pair):
    """Return the SimpleComponentDescriptor of the pair (H, K)."""
    big, small = pair.big, pair.small
    normalizer = group.normalizer(small)
    m = big.order // small.order
    k = normalizer.order // big.order
    h = _quotient_generator(group, big, small)
    u = next(x for x in sorted(normalizer.elements)
            if _order_modulo(group, x, big) == k)
    x = _exponent_modulo(group, group.conj_idx(h, u), h, small, m)
    u_power = group.powers_idx(u)[k % group.element_order_idx(u)]
    y = _exponent_modulo(group, u_power, h, small, m)
    if m > 1 and multiplicative_order(x, m) != k:
        raise InternalAssertionError("N_G(K)/H does not act faithfully on "
                "H/K in {0}".format(group))
    center = canonicalize_field(m, [x])
    draft = SimpleComponentDescriptor(group.order // normalizer.order, m, k,
            x % m if m > 1 else 0, y, group.order // big.order, center,
            DivisionFlag.UNKNOWN)
    return SimpleComponentDescriptor(draft.matrix_size, draft.m, draft.k,
            draft.x, draft.y, draft.degree, draft.center,
            classify_degree2_division(draft))


def is_power_of(p, n):
    return n >= 1 and n == p ** vp(p, n)


def p_component_predicate(component, p):
    """Return True when the degree is a power of p and the center lies in
    a p-power cyclotomic field."""
    return (is_power_of(p, component.degree)
            and is_power_of(p, component.center.conductor))


def shoda_p_criterion(component, p):
    """Return True when [G:H] is a power of p and [H:K] is a power of p
    or twice one."""
    rest = component.m // p ** vp(p, component.m)
    return is_power_of(p, component.degree) and rest in (1, 2)


def decompose(group):
    """Return the components of QG with their pairs and idempotents,
    sorted by descriptor.

    Raises:
        CapExceededError      : When the group exceeds the algebra cap.
        InternalAssertionError: When the components do not account for
                                the whole algebra.
    """
    logging.info("Decomposing group {0}".format(group))
    components = [WedderburnComponent(pair, idempotent,
        describe_component(group, pair))
        for pair, idempotent in strong_shoda_pairs(group)]
    components.sort(key=lambda c: c.descriptor.sort_key())
    total = sum(c.descriptor.dimension for c in components)
    if total != group.order:
        raise InternalAssertionError("Components of Q{0} have total "
                "dimension {1}".format(group, total))
    primes = [int(p) for p in primefactors(group.order)]
    for c in components:
        for p in primes:
            by_pair = shoda_p_criterion(c.descriptor, p)
            by_definition = p_component_predicate(c.descriptor, p)
            if (by_pair and not by_definition) or (p != 2
                    and by_definition and not by_pair):
                raise InternalAssertionError("{0}-component criteria "
                        "disagree on {1} in Q{2}".format(p, c.descriptor,
                            group))
    return components


def wedderburn_decomposition(group):
    """Return the sorted list of SimpleComponentDescriptor of QG."""
    return [c.descriptor for c in decompose(group)]


def has_component_with(group, center, degree):
    """Return True when QG has a component with the given center and
    degree."""
    return any(c.center == center and c.degree == degree
            for c in wedderburn_decomposition(group))
