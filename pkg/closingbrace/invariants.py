# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Invariants of rational group algebras and the statements about them
that are checked on concrete groups.

Isomorphism of rational group algebras is not decided here. It is
approximated by `QGInvariantVector`: isomorphic algebras always give
compatible vectors, while compatible vectors need not come from
isomorphic algebras. Components whose division flag is Unknown may stand
for either outcome, and every comparison says whether its verdict depends
on them.
"""

import logging
from closingbrace.canonical import Interpretation, enumerate_canonical, \
        validate_canonical
from closingbrace.configuration import Limits
from closingbrace.fields import canonicalize_field, \
        real_cyclotomic_subfield, skew_cyclotomic_subfield
from closingbrace.group import MetacyclicGroup
from closingbrace.isomorphism import brute_force_isomorphic, \
        find_isomorphism, fingerprint, isomorphism_classes
from closingbrace.metacyclicerror import InternalAssertionError, \
        PreconditionError
from closingbrace.presentation import consistent_presentations
from closingbrace.structure import abelianization_invariants, \
        hall_subgroup, is_nilpotent, pi_signature, sylow_subgroup
from closingbrace.wedderburn import DivisionFlag, decompose, \
        has_component_with, shoda_p_criterion, wedderburn_decomposition
from collections import Counter
from dataclasses import dataclass, field
from sympy import primerange


@dataclass(frozen=True)
class QGInvariantVector:
    """Data of QG that isomorphic rational group algebras share.

    Attributes:
        order (int)            : |G|.
        abelianization (tuple) : Invariant factors of G/G'.
        class_count (int)      : Number of conjugacy classes, the sum of
                                 the degrees of the centers.
        cyclic_class_count (int): Number of conjugacy classes of cyclic
                                 subgroups, the number of components.
        components (tuple)     : Sorted SimpleComponentDescriptor.
    """
    order: int
    abelianization: tuple
    class_count: int
    cyclic_class_count: int
    components: tuple

    def component_keys(self):
        return Counter(c.comparison_key() for c in self.components)

    def as_dict(self):
        return {"order": self.order,
                "abelianization": list(self.abelianization),
                "class_count": self.class_count,
                "cyclic_class_count": self.cyclic_class_count,
                "components": [c.as_dict() for c in self.components]}


@dataclass(frozen=True)
class VectorComparison:
    """The outcome of comparing two invariant vectors.

    Attributes:
        equal (bool)            : Equal, with Unknown compared as a value.
        compatible (bool)       : Equal for some resolution of every
                                  Unknown division flag.
        unknown_sensitive (bool): Compatible, but some resolution of the
                                  Unknown flags would separate them.
        first_difference (str)  : Name of the first field that differs,
                                  or None.
    """
    equal: bool
    compatible: bool
    unknown_sensitive: bool
    first_difference: str

    def as_dict(self):
        return {"equal": self.equal, "compatible": self.compatible,
                "unknown_sensitive": self.unknown_sensitive,
                "first_difference": self.first_difference}


@dataclass
class CheckOutcome:
    description: str
    passed: bool
    detail: str = ""

    def as_dict(self):
        return {"check": self.description, "passed": self.passed,
                "detail": self.detail}


@dataclass
class TheoremReport:
    """The outcome of a group of checks on concrete groups.

    Attributes:
        name (str)     : What was checked.
        subjects (list): The groups involved, as strings.
        checks (list)  : CheckOutcome per check, in order.
    """
    name: str
    subjects: list
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def add(self, description, passed, detail=""):
        self.checks.append(CheckOutcome(description, bool(passed), detail))
        if not passed:
            logging.error("{0} failed for {1}: {2} {3}".format(self.name,
                ", ".join(self.subjects), description, detail))

    def first_failure(self):
        return next((c for c in self.checks if not c.passed), None)

    def as_dict(self):
        return {"name": self.name, "subjects": self.subjects,
                "passed": self.passed,
                "checks": [c.as_dict() for c in self.checks]}


def _as_group(group, limits=None):
    if isinstance(group, MetacyclicGroup):
        return group
    return MetacyclicGroup(group, limits)


def qg_invariant_vector(group, limits=None):
    """Return the QGInvariantVector of a group or presentation.

    Raises:
        CapExceededError: When the group exceeds the algebra cap.
    """
    group = _as_group(group, limits)
    return QGInvariantVector(group.order, abelianization_invariants(group),
            group.class_count(), len(group.cyclic_subgroup_classes()),
            tuple(wedderburn_decomposition(group)))


def _flag_counts(keys):
    """Group a Counter of (degree, center, flag) by (degree, center)."""
    grouped = {}
    for (degree, center, flag), count in keys.items():
        grouped.setdefault((degree, center), Counter())[flag] += count
    return grouped


def multisets_compatible(first, second):
    """Return (compatible, unknown involved) for two Counters of
    component comparison keys."""
    split, unknown = DivisionFlag.SPLIT.value, DivisionFlag.UNKNOWN.value
    grouped1, grouped2 = _flag_counts(first), _flag_counts(second)
    if set(grouped1) != set(grouped2):
        return False, False
    involved = False
    for key in grouped1:
        c1, c2 = grouped1[key], grouped2[key]
        if sum(c1.values()) != sum(c2.values()):
            return False, False
        u1, u2 = c1[unknown], c2[unknown]
        involved = involved or u1 > 0 or u2 > 0
        # each Unknown may turn into Split or Division
        if not -u1 <= c1[split] - c2[split] <= u2:
            return False, False
    return True, involved


def compare_vectors(first, second):
    """Return the VectorComparison of two invariant vectors."""
    scalar_fields = ("order", "abelianization", "class_count",
            "cyclic_class_count")
    difference = next((name for name in scalar_fields
        if getattr(first, name) != getattr(second, name)), None)
    keys1, keys2 = first.component_keys(), second.component_keys()
    if difference is None:
        if Counter(k[0] for k in keys1.elements()) != Counter(
                k[0] for k in keys2.elements()):
            difference = "degrees"
        elif Counter(k[:2] for k in keys1.elements()) != Counter(
                k[:2] for k in keys2.elements()):
            difference = "centers"
        elif keys1 != keys2:
            difference = "division_flag"
    if difference is not None and difference != "division_flag":
        return VectorComparison(False, False, False, difference)
    compatible, involved = multisets_compatible(keys1, keys2)
    return VectorComparison(difference is None, compatible,
            compatible and involved, difference)


def isop_decide(first, second, limits=None):
    """Decide whether two canonical tuples give isomorphic groups, which
    happens exactly when they are equal. For distinct tuples of the same
    order within the caps, also check that their invariant vectors are
    not compatible.

    Raises:
        PreconditionError     : When a tuple is not valid or the primes
                                differ.
        InternalAssertionError: When distinct tuples have compatible
                                vectors.
    """
    for params in (first, second):
        if not validate_canonical(params):
            raise PreconditionError("{0} is not a valid tuple".format(params))
    if first.p != second.p:
        raise PreconditionError("Tuples {0} and {1} have different primes".
                format(first, second))
    if first == second:
        return True
    limits = limits if limits is not None else Limits()
    if first.order == second.order and first.order <= limits.algebra_cap:
        comparison = separate(first, second, limits)
        if comparison.compatible:
            raise InternalAssertionError("{0} and {1} have compatible "
                    "invariant vectors".format(first, second))
    return False


def separate(first, second, limits=None):
    """Return the VectorComparison of the groups of two tuples."""
    v1 = qg_invariant_vector(first.lower(), limits)
    v2 = qg_invariant_vector(second.lower(), limits)
    return compare_vectors(v1, v2)


def main_theorem_check(first, second, limits=None):
    """Check on two metacyclic groups with compatible invariant vectors
    that they have the same pi signature, that their Sylow p-subgroups
    for p in pi have compatible vectors and are isomorphic, that their
    Hall pi-subgroups are isomorphic, and that they are isomorphic when
    nilpotent.

    Raises:
        PreconditionError: When the vectors of the groups are not
                           compatible.
    """
    g1, g2 = _as_group(first, limits), _as_group(second, limits)
    limits = g1.limits
    comparison = compare_vectors(qg_invariant_vector(g1),
            qg_invariant_vector(g2))
    if not comparison.compatible:
        raise PreconditionError("{0} and {1} have different invariant "
                "vectors ({2})".format(g1, g2, comparison.first_difference))
    report = TheoremReport("pi signature and Hall subgroups",
            [str(g1), str(g2)])
    if comparison.unknown_sensitive:
        report.add("vectors compatible only through Unknown division flags",
                True, "proxy")
    sig1, sig2 = pi_signature(g1), pi_signature(g2)
    report.add("equal pi signatures", sig1 == sig2,
            "{0} vs {1}".format(sig1, sig2))
    report.add("smallest prime in pi", _smallest_prime_in_pi(g1, sig1),
            str(sig1))
    for p in sorted(sig1.pi & sig2.pi):
        s1, s2 = sylow_subgroup(g1, p), sylow_subgroup(g2, p)
        sylow_comparison = compare_vectors(qg_invariant_vector(s1, limits),
                qg_invariant_vector(s2, limits))
        report.add("Sylow {0}-subgroups have compatible vectors".format(p),
                sylow_comparison.compatible, "{0} vs {1}: {2}".format(s1, s2,
                    sylow_comparison.first_difference))
        report.add("Sylow {0}-subgroups are isomorphic".format(p),
                brute_force_isomorphic(s1, s2, limits),
                "{0} vs {1}".format(s1, s2))
    if sig1 == sig2:
        h1 = hall_subgroup(g1, sorted(sig1.pi))
        h2 = hall_subgroup(g2, sorted(sig2.pi))
        report.add("Hall pi-subgroups are isomorphic",
                brute_force_isomorphic(h1, h2, limits),
                "{0} vs {1}".format(h1, h2))
    if is_nilpotent(g1) and is_nilpotent(g2):
        report.add("nilpotent groups are isomorphic",
                brute_force_isomorphic(g1, g2), "")
    return report


def _smallest_prime_in_pi(group, signature):
    primes = sorted(signature.pi | signature.pi_prime)
    return not primes or primes[0] in signature.pi


def frattini_index_of_sylow_2(group, limits=None):
    """Return [S : S'S^2] for a Sylow 2-subgroup S of `group`."""
    sylow = MetacyclicGroup(sylow_subgroup(group, 2), limits)
    squares = {sylow.mul_idx(x, x) for x in range(sylow.order)}
    frattini = sylow.closure(squares | set(sylow.derived_subgroup().elements))
    return sylow.order // frattini.order


def p_component_sum_check(group, p, limits=None):
    """Check that the p-components of QG are k copies of the components
    of QG_p, with k = 1 for p = 2 and k = [S : S'S^2] for a Sylow
    2-subgroup S otherwise. p-components are selected by their pairs:
    [G:H] a power of p and [H:K] a power of p or twice one.

    Raises:
        PreconditionError: When p is not in pi of the group.
    """
    group = _as_group(group, limits)
    signature = pi_signature(group)
    if p not in signature.pi:
        raise PreconditionError("{0} is not in pi of {1}".format(p, group))
    k = 1 if p == 2 else frattini_index_of_sylow_2(group, group.limits)
    sylow = sylow_subgroup(group, p)
    own = Counter(c.descriptor.comparison_key() for c in decompose(group)
            if shoda_p_criterion(c.descriptor, p))
    copies = Counter()
    for c in wedderburn_decomposition(MetacyclicGroup(sylow, group.limits)):
        copies[c.comparison_key()] += k
    compatible, _ = multisets_compatible(own, copies)
    report = TheoremReport("{0}-components".format(p), [str(group)])
    report.add("{0}-components are {1} copies of Q{2}".format(p, k, sylow),
            compatible, "{0} vs {1}".format(_describe(own), _describe(copies)))
    return report


def _describe(keys):
    return "[" + ", ".join("{0}x(deg {1}, {2}, {3})".format(count, *key)
        for key, count in sorted(keys.items(), key=lambda item:
            (item[0][0], item[0][1], item[0][2]))) + "]"


@dataclass
class ClassificationRow:
    """The canonical tuples and isomorphism classes of one order.

    Attributes:
        p (int)          : The prime.
        k (int)          : The order is p^k.
        tuples (list)    : Valid canonical tuples.
        classes (list)   : Isomorphism classes of presentations.
        matching (list)  : For each tuple the index of its class, or None.
    """
    p: int
    k: int
    tuples: list
    classes: list
    matching: list

    @property
    def order(self):
        return self.p ** self.k

    @property
    def bijective(self):
        return (len(self.tuples) == len(self.classes)
                and None not in self.matching
                and sorted(self.matching) == list(range(len(self.classes))))

    def as_dict(self):
        return {"order": self.order, "tuples": [str(t) for t in self.tuples],
                "classes": len(self.classes),
                "representatives": [str(c[0]) for c in self.classes],
                "matching": self.matching, "bijective": self.bijective}


def classify_order(p, k, interpretation=Interpretation.RESOLVED,
        limits=None):
    """Return the ClassificationRow of the order p^k."""
    tuples = enumerate_canonical(p, k, interpretation)
    classes = isomorphism_classes(consistent_presentations(p ** k), limits)
    representatives = [MetacyclicGroup(c[0], limits) for c in classes]
    prints = [fingerprint(g) for g in representatives]
    matching = []
    for params in tuples:
        group = MetacyclicGroup(params.lower(), limits)
        own = fingerprint(group)
        matching.append(next((pos for pos, rep in enumerate(representatives)
            if prints[pos] == own and find_isomorphism(group, rep) is not None),
            None))
    return ClassificationRow(p, k, tuples, classes, matching)


def classify_small_metacyclic(order_bound, primes=None,
        interpretation=Interpretation.RESOLVED, limits=None):
    """Return a ClassificationRow for every prime power up to
    `order_bound`.

    Raises:
        PreconditionError: When the bound exceeds the group cap.
    """
    cap = limits.group_cap if limits is not None else None
    if cap is not None and order_bound > cap:
        raise PreconditionError("Bound {0} exceeds the cap {1}".format(
            order_bound, cap))
    if primes is None:
        primes = list(primerange(2, order_bound + 1))
    rows = []
    for p in primes:
        k = 1
        while p ** k <= order_bound:
            logging.info("Classifying metacyclic groups of order {0}".format(
                p ** k))
            rows.append(classify_order(p, k, interpretation, limits))
            k += 1
    return rows


@dataclass
class CenterCriterion:
    """A statement "QG has a component with property X iff condition",
    evaluated on one group.

    Attributes:
        params (CanonicalPParams): The group.
        predicted (bool)         : The condition on the parameters.
        observed (bool)          : Whether the decomposition has such a
                                   component.
    """
    params: object
    predicted: bool
    observed: bool

    @property
    def agrees(self):
        return self.predicted == self.observed

    def as_dict(self):
        return {"group": str(self.params), "predicted": self.predicted,
                "observed": self.observed, "agrees": self.agrees}


def _require_minus_one(params):
    if params.epsilon != -1 or not validate_canonical(params):
        raise PreconditionError("{0} is not a valid epsilon = -1 tuple".
                format(params))


def _require_maximal_centralizer(params):
    """b^2 must lie outside <a>: with nu = 1, Q16 and SD16 have components
    with these centers although the parameter condition fails."""
    _require_minus_one(params)
    if not (params.rho >= params.mu - 1 and params.mu >= 3
            and params.nu >= 2):
        raise PreconditionError("Need rho >= mu - 1, mu >= 3 and nu >= 2 "
                "in {0}".format(params))


def real_center_criterion(params, limits=None):
    """For epsilon = -1, rho >= mu - 1, mu >= 3 and nu >= 2: a component
    with center Q(ζ + ζ^-1), ζ of order 2^mu, exists iff
    rho = sigma = mu."""
    _require_maximal_centralizer(params)
    center = real_cyclotomic_subfield(2 ** params.mu)
    group = MetacyclicGroup(params.lower(), limits)
    return CenterCriterion(params, params.rho == params.sigma == params.mu,
            any(c.center == center for c in wedderburn_decomposition(group)))


def skew_center_criterion(params, limits=None):
    """For epsilon = -1, rho >= mu - 1, mu >= 3 and nu >= 2: a component
    with center Q(ζ - ζ^-1), ζ of order 2^mu, exists iff rho = mu - 1
    and sigma = mu."""
    _require_maximal_centralizer(params)
    center = skew_cyclotomic_subfield(2 ** params.mu)
    group = MetacyclicGroup(params.lower(), limits)
    return CenterCriterion(params,
            params.rho == params.mu - 1 and params.sigma == params.mu,
            any(c.center == center for c in wedderburn_decomposition(group)))


def fixed_field_criterion(params, limits=None):
    """For epsilon = -1 and rho < mu < nu + rho: a component of degree
    2^(mu-rho) whose center is the subfield of Q(ζ_(2^mu)) fixed by
    ζ -> ζ^(-1+2^rho) exists iff sigma = mu."""
    _require_minus_one(params)
    if not params.rho < params.mu < params.nu + params.rho:
        raise PreconditionError("Need rho < mu < nu + rho in {0}".format(
            params))
    modulus = 2 ** params.mu
    center = canonicalize_field(modulus, [(-1 + 2 ** params.rho) % modulus])
    group = MetacyclicGroup(params.lower(), limits)
    return CenterCriterion(params, params.sigma == params.mu,
            has_component_with(group, center, 2 ** (params.mu - params.rho)))
