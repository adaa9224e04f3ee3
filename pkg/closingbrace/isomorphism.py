# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Isomorphism testing by searching for images of the generators, and
re-presentation of a group on other generators."""

import logging
from closingbrace.group import MetacyclicGroup
from closingbrace.metacyclicerror import PreconditionError
from closingbrace import presentation as pres
from closingbrace.presentation import MetacyclicPresentation
from closingbrace.structure import abelianization_invariants
from collections import Counter
from math import gcd


def as_group(group, limits=None):
    if isinstance(group, MetacyclicGroup):
        return group
    return MetacyclicGroup(group, limits)


def fingerprint(group):
    """Return cheap isomorphism invariants: the order, the histogram of
    element orders, the abelianization and the class count."""
    histogram = Counter(group.element_orders())
    return (group.order, tuple(sorted(histogram.items())),
            abelianization_invariants(group), group.class_count())


def find_isomorphism(first, second):
    """Return indices (g, h) of `second` such that a -> g, b -> h extends
    to an isomorphism from `first`, or None.

    The images must satisfy g^m = 1, h^n = g^s, h^-1 g h = g^r, and the
    least t with h^t in ⟨g⟩ must be n, so that ⟨g, h⟩ has order m·n.
    """
    p = first.presentation
    if first.order != second.order:
        return None
    b_order = first.element_order_idx(first.b_idx)
    orders = second.element_orders()
    b_images = {y: second.powers_idx(y)
            for y, o in enumerate(orders) if o == b_order}
    for g, o in enumerate(orders):
        if o != p.m:
            continue
        g_powers = second.powers_idx(g)
        span = frozenset(g_powers)
        wanted_conj = g_powers[p.r % p.m]
        wanted_top = g_powers[p.s % p.m]
        for h, h_powers in b_images.items():
            if second.conj_idx(g, h) != wanted_conj:
                continue
            if h_powers[p.n % len(h_powers)] != wanted_top:
                continue
            if all(h_powers[t % len(h_powers)] not in span
                    for t in range(1, p.n)):
                return (g, h)
    return None


def brute_force_isomorphic(first, second, limits=None):
    """Return True when the two groups are isomorphic.

    Args:
        first : A MetacyclicGroup or MetacyclicPresentation.
        second: A MetacyclicGroup or MetacyclicPresentation.
        limits: Limits for groups built from presentations.

    Raises:
        CapExceededError: When a group is too large to enumerate.
    """
    first = as_group(first, limits)
    second = as_group(second, limits)
    if first.order != second.order:
        return False
    if fingerprint(first) != fingerprint(second):
        return False
    return find_isomorphism(first, second) is not None


def isomorphism_classes(presentations, limits=None):
    """Partition presentations into isomorphism classes.

    Returns:
        A list of classes in order of first appearance, each a list of
        presentations in input order.
    """
    buckets = {}
    classes = []
    for presentation in presentations:
        group = as_group(presentation, limits)
        bucket = buckets.setdefault(fingerprint(group), [])
        for representative, members in bucket:
            if find_isomorphism(representative, group) is not None:
                members.append(presentation)
                break
        else:
            members = [presentation]
            bucket.append((group, members))
            classes.append(members)
    logging.info("Found {0} isomorphism classes among {1} presentations".
            format(len(classes), sum(len(c) for c in classes)))
    return classes


def represent_again(presentation, u, v, t):
    """Return the presentation of the same group on the generators
    a' = a^u and b' = b^v a^t.

    Raises:
        PreconditionError: When u is not a unit modulo m or v is not a
                           unit modulo n.
    """
    m, n = presentation.m, presentation.n
    if gcd(u, m) != 1 or gcd(v, n) != 1:
        raise PreconditionError("Need gcd(u, m) = gcd(v, n) = 1, got "
                "u={0}, v={1} for {2}".format(u, v, presentation))
    b_new = pres.multiply(
            pres.power(pres.generator_b(presentation), v, presentation),
            pres.GroupElement(0, t % m), presentation)
    top = pres.power(b_new, n, presentation)
    if top.j != 0:
        raise PreconditionError("b^v a^t does not generate modulo ⟨a⟩")
    if m == 1:
        return MetacyclicPresentation(1, n, 0, 0)
    s = top.i * pow(u, -1, m) % m
    r = pow(presentation.r, b_new.j, m)
    result = MetacyclicPresentation(m, n, s, r)
    result.require_consistent()
    return result


def random_representation(presentation, rng):
    """Return a randomly re-presented copy of `presentation`.

    Args:
        presentation (MetacyclicPresentation): The group.
        rng (random.Random)                  : The source of randomness.

    Returns:
        (new presentation, (u, v, t))
    """
    m, n = presentation.m, presentation.n
    u = rng.choice([x for x in range(1, m + 1) if gcd(x, m) == 1])
    v = rng.choice([x for x in range(1, n + 1) if gcd(x, n) == 1])
    t = rng.randrange(m)
    return represent_again(presentation, u, v, t), (u, v, t)
