# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Finite metacyclic groups as explicit sets of elements.

Elements are addressed by their index j·m + i, where b^j a^i is the normal
form. Methods ending in `_idx` work on indices, the others on
`GroupElement` values or `Subgroup` objects.
"""

import logging
from closingbrace.configuration import Limits
from closingbrace.metacyclicerror import CapExceededError, PreconditionError
from closingbrace.presentation import GroupElement
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by the indices of its elements.

    Two subgroups are equal when they have the same elements; the
    generators are only a cached generating set.

    Attributes:
        elements (frozenset): Indices of the elements.
        generators (tuple)  : Indices of a generating set.
    """
    elements: frozenset
    generators: tuple = field(compare=False, default=())

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, idx):
        return idx in self.elements

    def __len__(self):
        return len(self.elements)

    def issubset(self, other):
        return self.elements <= other.elements

    def sort_key(self):
        return (len(self.elements), tuple(sorted(self.elements)))


class MetacyclicGroup:
    """The group defined by a consistent `MetacyclicPresentation`.

    The multiplication table, element orders and the subgroup lattice are
    computed on first use and cached. Every enumeration refuses groups
    larger than the group cap of `limits`.

    Attributes:
        presentation (MetacyclicPresentation): The defining presentation.
        limits (Limits)                      : The caps in force.
        order (int)                          : The group order m·n.
    """

    def __init__(self, presentation, limits=None):
        presentation.require_consistent()
        self.presentation = presentation
        self.limits = limits if limits is not None else Limits()
        self.order = presentation.order
        self._table = None
        self._inverses = None
        self._orders = None
        self._cyclic = None
        self._subgroups = None
        self._classes = None

    @classmethod
    def from_params(cls, params, limits=None):
        """Build the group of a canonical tuple."""
        return cls(params.lower(), limits)

    def __str__(self):
        return str(self.presentation)

    def __repr__(self):
        return "MetacyclicGroup({0})".format(self.presentation)

    # Elements

    def index(self, g):
        return g.j * self.presentation.m + g.i

    def element(self, idx):
        return GroupElement(*divmod(idx, self.presentation.m))

    @property
    def identity_idx(self):
        return 0

    @property
    def a_idx(self):
        return 1 % self.presentation.m

    @property
    def b_idx(self):
        p = self.presentation
        if p.n == 1:
            return p.s
        return p.m

    def require_cap(self, what, algebra=False):
        """Raise a CapExceededError when the group is too large for
        `what`."""
        cap = self.limits.algebra_cap if algebra else self.limits.group_cap
        if self.order > cap:
            raise CapExceededError(what, self.order, cap)

    @property
    def table(self):
        """The multiplication table as a list of rows of indices."""
        if self._table is None:
            self.require_cap("Element enumeration")
            logging.info("Building multiplication table of {0}".format(self))
            m, n, s, r = (self.presentation.m, self.presentation.n,
                    self.presentation.s, self.presentation.r)
            r_powers = [pow(r, j, m) for j in range(n)]
            table = []
            for x in range(self.order):
                j1, i1 = divmod(x, m)
                row = []
                for j2 in range(n):
                    j = j1 + j2
                    shift = i1 * r_powers[j2]
                    if j >= n:
                        j -= n
                        shift += s
                    base = j * m
                    row.extend(base + (shift + i2) % m for i2 in range(m))
                table.append(row)
            self._table = table
        return self._table

    def mul_idx(self, x, y):
        return self.table[x][y]

    def inv_idx(self, x):
        if self._inverses is None:
            inverses = [0] * self.order
            for x_, row in enumerate(self.table):
                inverses[x_] = row.index(0)
            self._inverses = inverses
        return self._inverses[x]

    def conj_idx(self, x, y):
        """Return x^y = y^-1 x y."""
        table = self.table
        return table[table[self.inv_idx(y)][x]][y]

    def commutator_idx(self, x, y):
        """Return [x, y] = x^-1 y^-1 x y."""
        table = self.table
        return table[table[self.inv_idx(x)][self.inv_idx(y)]][table[x][y]]

    def powers_idx(self, x):
        """Return the list 1, x, x^2, ... up to the order of x."""
        table = self.table
        powers = [0]
        current = x
        while current != 0:
            powers.append(current)
            current = table[current][x]
        return powers

    def element_order_idx(self, x):
        if self._orders is None:
            self._orders = [len(self.powers_idx(y)) for y in range(self.order)]
        return self._orders[x]

    def element_orders(self):
        """Return the orders of all elements in index order."""
        self.element_order_idx(0)
        return list(self._orders)

    def is_abelian(self, sub=None):
        gens = sub.generators if sub is not None else (self.a_idx, self.b_idx)
        table = self.table
        return all(table[x][y] == table[y][x] for x in gens for y in gens)

    # Subgroups

    def closure(self, generators):
        """Return the subgroup generated by the given indices."""
        table = self.table
        gens = tuple(sorted(set(generators) - {0}))
        elements = {0}
        frontier = [0]
        while frontier:
            grown = []
            for x in frontier:
                row = table[x]
                for g in gens:
                    y = row[g]
                    if y not in elements:
                        elements.add(y)
                        grown.append(y)
            frontier = grown
        return Subgroup(frozenset(elements), gens)

    def whole(self):
        return Subgroup(frozenset(range(self.order)), (self.a_idx, self.b_idx))

    def trivial(self):
        return Subgroup(frozenset([0]), ())

    def subgroup_from_elements(self, elements):
        """Return `elements` as a Subgroup with a small generating set.

        Raises:
            PreconditionError: When the set is not a subgroup.
        """
        target = frozenset(elements)
        if 0 not in target:
            raise PreconditionError("Element set does not contain the identity")
        gens = []
        current = frozenset([0])
        for x in sorted(target, key=lambda y: (-self.element_order_idx(y), y)):
            if x not in current:
                gens.append(x)
                current = self.closure(gens).elements
        if current != target:
            raise PreconditionError("Element set is not a subgroup")
        return Subgroup(target, tuple(gens))

    def cyclic_subgroup_idx(self, x):
        return Subgroup(frozenset(self.powers_idx(x)), (x,) if x else ())

    def cyclic_subgroup(self, g):
        return self.cyclic_subgroup_idx(self.index(g))

    def cyclic_subgroups(self):
        """Return all cyclic subgroups, sorted by order and elements."""
        if self._cyclic is None:
            found = {}
            for x in range(self.order):
                sub = self.cyclic_subgroup_idx(x)
                found.setdefault(sub.elements, sub)
            self._cyclic = sorted(found.values(), key=Subgroup.sort_key)
        return list(self._cyclic)

    def subgroups(self):
        """Return all subgroups, sorted by order and elements.

        Every subgroup of a metacyclic group is generated by two elements,
        so the joins of pairs of cyclic subgroups are all of them.
        """
        if self._subgroups is None:
            logging.info("Enumerating subgroups of {0}".format(self))
            cyclic = self.cyclic_subgroups()
            found = {sub.elements: sub for sub in cyclic}
            for pos, first in enumerate(cyclic):
                for second in cyclic[pos + 1:]:
                    if first.issubset(second) or second.issubset(first):
                        continue
                    join = self.closure(first.generators + second.generators)
                    found.setdefault(join.elements, join)
            self._subgroups = sorted(found.values(), key=Subgroup.sort_key)
        return list(self._subgroups)

    def conjugate_subgroup(self, sub, y):
        """Return sub^y for the element index y."""
        return Subgroup(frozenset(self.conj_idx(x, y) for x in sub.elements),
                tuple(self.conj_idx(x, y) for x in sub.generators))

    def is_normal(self, sub, within=None):
        """Return True when `sub` is normalized by `within` (default: the
        whole group)."""
        gens = within.generators if within is not None else (self.a_idx,
                self.b_idx)
        return all(self.conj_idx(x, g) in sub.elements
                for g in gens for x in sub.generators)

    def _orbit(self, start, act):
        """Return the orbit of `start` under the action of the group
        generators."""
        gens = [g for g in (self.a_idx, self.b_idx) if g]
        orbit = [start]
        seen = {start}
        for item in orbit:
            for g in gens:
                image = act(item, g)
                if image not in seen:
                    seen.add(image)
                    orbit.append(image)
        return orbit

    def conjugacy_classes_idx(self):
        """Return the conjugacy classes as sorted tuples of indices,
        ordered by least member."""
        if self._classes is None:
            self.require_cap("Conjugacy classes")
            remaining = set(range(self.order))
            classes = []
            for x in range(self.order):
                if x not in remaining:
                    continue
                orbit = self._orbit(x, self.conj_idx)
                remaining.difference_update(orbit)
                classes.append(tuple(sorted(orbit)))
            self._classes = classes
        return list(self._classes)

    def conjugacy_classes(self):
        """Return the conjugacy classes as tuples of GroupElement."""
        return [tuple(self.element(x) for x in cls)
                for cls in self.conjugacy_classes_idx()]

    def class_count(self):
        return len(self.conjugacy_classes_idx())

    def subgroup_orbit(self, sub):
        """Return the distinct conjugates of `sub`."""
        by_elements = {sub.elements: sub}

        def act(elements, g):
            image = self.conjugate_subgroup(by_elements[elements], g)
            by_elements.setdefault(image.elements, image)
            return image.elements

        orbit = self._orbit(sub.elements, act)
        return [by_elements[elements] for elements in orbit]

    def subgroup_conjugacy_classes(self, subgroups=None):
        """Partition `subgroups` (default: all subgroups) into conjugacy
        classes. Each class is a list sorted by `Subgroup.sort_key`, and
        classes are ordered by their first member."""
        if subgroups is None:
            subgroups = self.subgroups()
        remaining = {sub.elements for sub in subgroups}
        classes = []
        for sub in sorted(subgroups, key=Subgroup.sort_key):
            if sub.elements not in remaining:
                continue
            orbit = self.subgroup_orbit(sub)
            remaining.difference_update(conj.elements for conj in orbit)
            classes.append(sorted(orbit, key=Subgroup.sort_key))
        return classes

    def cyclic_subgroup_classes(self):
        """Return the conjugacy classes of cyclic subgroups."""
        self.require_cap("Cyclic subgroup classes")
        return self.subgroup_conjugacy_classes(self.cyclic_subgroups())

    def are_conjugate_subgroups(self, first, second):
        return any(conj.elements == second.elements
                for conj in self.subgroup_orbit(first))

    def minimal_normal_over(self, normal, within=None):
        """Return the subgroups D of `within` (default: the whole group)
        that are normal in `within` and contain `normal`, with D/normal
        minimal among those.

        Raises:
            PreconditionError: When `normal` is not a normal subgroup of
                               `within`.
        """
        top = within if within is not None else self.whole()
        if not normal.issubset(top) or not self.is_normal(normal, top):
            raise PreconditionError("Subgroup of order {0} is not normal".
                    format(normal.order))
        candidates = [sub for sub in self.subgroups()
                if normal.elements < sub.elements and sub.issubset(top)
                and self.is_normal(sub, top)]
        return [sub for sub in candidates
                if not any(other.elements < sub.elements for other in candidates)]

    def center(self):
        table = self.table
        gens = (self.a_idx, self.b_idx)
        return self.subgroup_from_elements(x for x in range(self.order)
                if all(table[x][g] == table[g][x] for g in gens))

    def centralizer(self, sub):
        """Return the elements commuting with every element of `sub`."""
        table = self.table
        return self.subgroup_from_elements(x for x in range(self.order)
                if all(table[x][g] == table[g][x] for g in sub.generators))

    def normalizer(self, sub):
        return self.subgroup_from_elements(x for x in range(self.order)
                if all(self.conj_idx(g, x) in sub.elements
                    for g in sub.generators))

    def core(self, sub):
        """Return the intersection of the conjugates of `sub`."""
        elements = sub.elements
        for conj in self.subgroup_orbit(sub):
            elements = elements & conj.elements
        return self.subgroup_from_elements(elements)

    def derived_subgroup(self, sub=None):
        """Return the commutator subgroup of `sub` (default: the whole
        group), the normal closure of the commutators of its
        generators."""
        if sub is None:
            sub = self.whole()
        gens = sub.generators
        seeds = {self.commutator_idx(x, y) for x in gens for y in gens}
        derived = self.closure(seeds)
        while True:
            extra = {self.conj_idx(x, g) for x in derived.generators
                    for g in gens} - derived.elements
            if not extra:
                return derived
            seeds |= extra
            derived = self.closure(seeds)

    def index_of(self, sub, over=None):
        """Return [over : sub]."""
        top = over.order if over is not None else self.order
        return top // sub.order

    def subgroup_product(self, first, second):
        """Return the subgroup generated by two subgroups."""
        return self.closure(first.generators + second.generators)
