# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Abelian number fields as subfields of cyclotomic fields.

The field Q(ζ_n)^Γ fixed by a subgroup Γ of (Z/n)* is stored by its
conductor f, the least f dividing n with Q(ζ_n)^Γ ⊆ Q(ζ_f), and by the
image of Γ in (Z/f)*. Two descriptors are equal exactly when the fields
are equal.
"""

from closingbrace.metacyclicerror import PreconditionError
from dataclasses import dataclass
from math import gcd
from sympy import divisors, totient


def _units(n):
    return [u for u in range(n) if gcd(u, n) == 1] if n > 1 else [0]


def _span(generators, n):
    """Return the subgroup of (Z/n)* generated by `generators`."""
    one = 1 % n
    elements = {one}
    frontier = [one]
    while frontier:
        grown = []
        for x in frontier:
            for g in generators:
                y = (x * g) % n
                if y not in elements:
                    elements.add(y)
                    grown.append(y)
        frontier = grown
    return elements


def _lift(kernel, f, n):
    """Return the units modulo n that reduce into `kernel` modulo f."""
    return {u for u in _units(n) if u % f in kernel}


@dataclass(frozen=True, order=True)
class AbelianFieldDescriptor:
    """A subfield of a cyclotomic field.

    Attributes:
        conductor (int): The least f with the field inside Q(ζ_f).
        kernel (tuple) : The sorted residues modulo f that fix the field.
    """
    conductor: int
    kernel: tuple

    @classmethod
    def fixed_field(cls, n, generators):
        return canonicalize_field(n, generators)

    @property
    def degree(self):
        """The degree over the rationals, φ(f)/|kernel|."""
        return int(totient(self.conductor)) // len(self.kernel)

    @property
    def is_real(self):
        f = self.conductor
        return f <= 2 or (f - 1) in self.kernel

    def generators(self):
        """Return a small generating set of the kernel, greedily from the
        smallest residue."""
        f = self.conductor
        gens = []
        span = _span([], f)
        for u in self.kernel:
            if u not in span:
                gens.append(u)
                span = _span(gens, f)
        return gens

    def contains(self, other):
        """Return True when `other` is a subfield of this field."""
        n = self.conductor * other.conductor // gcd(self.conductor,
                other.conductor)
        return (_lift(set(self.kernel), self.conductor, n)
                <= _lift(set(other.kernel), other.conductor, n))

    def __str__(self):
        if self.conductor == 1:
            return "Q"
        if len(self.kernel) == 1:
            return "Q(zeta_{0})".format(self.conductor)
        return "Q(zeta_{0})^<{1}>".format(self.conductor,
                ",".join(str(g) for g in self.generators()))

    def as_dict(self):
        return {"conductor": self.conductor, "degree": self.degree,
                "kernel_generators": self.generators()}


def canonicalize_field(n, generators):
    """Return the descriptor of the field Q(ζ_n)^Γ, Γ generated by the
    residues in `generators`.

    Args:
        n (int)          : A positive modulus.
        generators (list): Residues coprime to n.

    Raises:
        PreconditionError: When n < 1 or a generator is not a unit.
    """
    if n < 1:
        raise PreconditionError("Modulus {0} is not positive".format(n))
    for g in generators:
        if gcd(g, n) != 1:
            raise PreconditionError("{0} is not a unit modulo {1}".format(g, n))
    if n == 1:
        return AbelianFieldDescriptor(1, (0,))
    group = _span([g % n for g in generators], n)
    units = _units(n)
    for f in divisors(n):
        f = int(f)
        if all(u in group for u in units if u % f == 1 % f):
            kernel = sorted({u % f for u in group})
            return AbelianFieldDescriptor(f, tuple(kernel))
    raise PreconditionError("No conductor found for modulus {0}".format(n))


def cyclotomic_field(n):
    """Return Q(ζ_n)."""
    return canonicalize_field(n, [])


def real_cyclotomic_subfield(n):
    """Return Q(ζ_n + ζ_n^-1)."""
    return canonicalize_field(n, [n - 1])


def skew_cyclotomic_subfield(n):
    """Return Q(ζ_n - ζ_n^-1) for n divisible by 4; it is fixed by
    ζ -> ζ^(n/2 - 1).
    """
    if n % 4 != 0:
        raise PreconditionError("{0} is not divisible by 4".format(n))
    return canonicalize_field(n, [n // 2 - 1])
