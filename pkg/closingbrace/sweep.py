# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Sweeps: every checkable property of the library evaluated over all small
groups up to a bound.

A sweep is a list of work items. Each item belongs to a family, is named by
a key, and yields one or more CheckResult. Items are pure, so they may run
in worker processes; results are collected in item order, which keeps the
report deterministic.
"""

import json
import logging
import math
import os
import random
from closingbrace import counting, numtheory
from closingbrace.canonical import Interpretation, enumerate_canonical, \
        enumerate_canonical_up_to
from closingbrace.checkresult import CheckResult
from closingbrace.configuration import Limits, SWEEP_FAMILIES
from closingbrace.group import MetacyclicGroup
from closingbrace.invariants import classify_order, compare_vectors, \
        fixed_field_criterion, main_theorem_check, p_component_sum_check, \
        qg_invariant_vector, real_center_criterion, skew_center_criterion
from closingbrace.isomorphism import brute_force_isomorphic, \
        isomorphism_classes, random_representation
from closingbrace.jsoncoders import ReportEncoder, decode_checkpoint_json
from closingbrace.metacyclicerror import MetacyclicError
from closingbrace.presentation import consistent_presentations
from closingbrace.structure import is_nilpotent, pi_signature
from closingbrace.wedderburn import decompose
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone

# Largest order for the randomized invariance pairs.
INVARIANCE_ORDER_BOUND = 64
# Residues R with |R| up to this bound are used by the numtheory family.
NUMTHEORY_RESIDUE_BOUND = 200
# Moduli n up to this bound are checked against the divisor-sum class count.
CYCLOTOMIC_MODULUS_BOUND = 200
# sum_d_2d is compared with the naive sum for n up to this bound.
SUM_D_2D_BOUND = 30


@dataclass(frozen=True)
class WorkItem:
    """One unit of sweep work.

    Attributes:
        family (str): The sweep family.
        key (str)   : A unique, stable name of the item.
        args (tuple): Picklable arguments of the family's runner.
    """
    family: str
    key: str
    args: tuple


class Checkpoint:
    """A progress file with one JSON line per completed check.

    Attributes:
        path (str): The progress file.
    """

    def __init__(self, path):
        self.path = path
        self._unterminated = False

    def load(self):
        """Return the recorded results, grouped by item key.

        A truncated last line, left by an interrupted write, is ignored.

        Returns:
            A dict of item key -> list of CheckResult, in file order.
        """
        done = {}
        if not os.path.exists(self.path):
            return done
        with open(self.path, "r") as fp:
            for line in fp:
                self._unterminated = not line.endswith("\n")
                try:
                    record = json.loads(line, object_hook=decode_checkpoint_json)
                except ValueError:
                    logging.warning("Ignoring unreadable line in checkpoint "
                            "'{0}'".format(self.path))
                    continue
                done.setdefault(record["item"], []).append(CheckResult(
                    record["family"], record["invariant"], record["item"],
                    record["state"], record["detail"], record["timestamp"],
                    resumed=True))
        if done:
            latest = max(r.timestamp for results in done.values()
                    for r in results)
            logging.info("Resuming {0} items from '{1}', last completed at "
                    "{2}".format(len(done), self.path, latest.isoformat()))
        return done

    def record(self, results):
        """Append the results of one item in a single write."""
        lines = []
        for result in results:
            lines.append(json.dumps({"timestamp": result.timestamp,
                "item": result.item, "family": result.family,
                "invariant": result.invariant, "state": result.state,
                "detail": result.detail}, cls=ReportEncoder))
        # a truncated last line must not swallow the next record
        prefix = "\n" if self._unterminated else ""
        self._unterminated = False
        with open(self.path, "a") as fp:
            fp.write(prefix + "\n".join(lines) + "\n")
            fp.flush()


@dataclass
class InvariantSummary:
    family: str
    invariant: str
    passed: int = 0
    failed: int = 0
    first_failure: CheckResult = None

    def as_dict(self):
        failure = None
        if self.first_failure is not None:
            failure = {"item": self.first_failure.item,
                    "detail": self.first_failure.detail}
        return {"family": self.family, "invariant": self.invariant,
                "passed": self.passed, "failed": self.failed,
                "first_failure": failure}


@dataclass
class SweepReport:
    """All results of a sweep.

    Attributes:
        families (list): The families that ran.
        results (list) : CheckResult in item order.
        resumed (int)  : Number of items read back from a checkpoint.
    """
    families: list
    results: list = field(default_factory=list)
    resumed: int = 0

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def summaries(self):
        """Return an InvariantSummary per (family, invariant), ordered by
        family and first appearance."""
        found = {}
        for result in self.results:
            key = (result.family, result.invariant)
            summary = found.setdefault(key, InvariantSummary(*key))
            if result.passed:
                summary.passed += 1
            else:
                summary.failed += 1
                if summary.first_failure is None:
                    summary.first_failure = result
        order = {family: pos for pos, family in enumerate(SWEEP_FAMILIES)}
        return sorted(found.values(), key=lambda s: order[s.family])

    def as_dict(self):
        return {"passed": self.passed, "families": self.families,
                "checks": len(self.results),
                "summaries": [s.as_dict() for s in self.summaries()]}


def _verdict(invariant, passed, detail=""):
    return (invariant, bool(passed), detail)


def _tuples(p, bound, epsilon=None):
    return [t for t in enumerate_canonical_up_to(p, bound)
            if epsilon is None or t.epsilon == epsilon]


def run_numtheory(kind, *args):
    """Run one numtheory item. kind is "prime power" (args p, m), "modulus"
    (args n) or "sum" (args bound)."""
    return NUMTHEORY_CHECKS[kind](*args)


def _modulus_checks(n):
    verdicts = []
    for R in range(-NUMTHEORY_RESIDUE_BOUND, NUMTHEORY_RESIDUE_BOUND + 1):
        if math.gcd(R, n) != 1:
            continue
        orbits = len(numtheory.cyclotomic_classes(R, n))
        count = numtheory.cyclotomic_class_count(R, n)
        verdicts.append(_verdict("cyclotomic class count", orbits == count,
            "R={0}: {1} classes, divisor sum {2}".format(R, orbits, count)))
    return verdicts


def _sum_checks(bound):
    return [_verdict("sum of d*2^d", numtheory.sum_d_2d(n)
        == sum(d * 2 ** d for d in range(n + 1)), "n={0}".format(n))
        for n in range(bound + 1)]


def _prime_power_checks(p, m):
    verdicts = []
    modulus = p ** m
    for R in range(-NUMTHEORY_RESIDUE_BOUND, NUMTHEORY_RESIDUE_BOUND + 1):
        if R == 1 or (R - 1) % p != 0:
            continue
        for e in range(1, 9):
            if R ** e != 1:
                verdicts.append(_verdict("valuation of R^m - 1",
                    numtheory.valuation_of_power_minus_one(R, e, p)
                    == numtheory.vp(p, R ** e - 1), "R={0}, m={1}".format(R, e)))
        verdicts.append(_verdict("order modulo p^m",
            numtheory.order_mod_prime_power(R, p, m)
            == numtheory.multiplicative_order(R, modulus),
            "R={0}".format(R)))
        closed = numtheory.closed_cyclotomic_count(R, p, m)
        verdicts.append(_verdict("cyclotomic class count",
            closed == len(numtheory.cyclotomic_classes(R, modulus))
            == numtheory.cyclotomic_class_count(R, modulus),
            "R={0}: closed form {1}".format(R, closed)))
        a = numtheory.vp(p, R - 1)
        if 1 <= a <= m and (p != 2 or a >= 2):
            verdicts.append(_verdict("power residues",
                numtheory.power_residues(R, p, a, m)
                == {pow(R, x, modulus) for x in range(modulus)},
                "R={0}".format(R)))
            for k in range(p ** a):
                n = k * p ** (m - a)
                verdicts.append(_verdict("S(R, n) residue",
                    numtheory.ese_residue(R, p, a, m, n, k)
                    == numtheory.ese_mod(R, n, modulus),
                    "R={0}, n={1}".format(R, n)))
    return verdicts


NUMTHEORY_CHECKS = {
    "prime power": _prime_power_checks,
    "modulus": _modulus_checks,
    "sum": _sum_checks,
}


def run_counting(params, limits):
    group = MetacyclicGroup(params.lower(), limits)
    if params.epsilon == 1:
        formula = counting.count_cyclic_classes_eps1(params)
        actual = len(group.cyclic_subgroup_classes())
        return [_verdict("cyclic subgroup class count formula",
            formula == actual, "formula {0}, enumeration {1}".format(formula,
                actual))]
    formula = counting.count_conjugacy_classes_epsm1(params)
    by_classes = counting.conjugacy_class_count_by_cyclotomic_classes(params)
    actual = group.class_count()
    return [_verdict("conjugacy class count formula",
        formula == by_classes == actual,
        "formula {0}, cyclotomic classes {1}, enumeration {2}".format(formula,
            by_classes, actual))]


def run_conjugacy(params, limits):
    group = MetacyclicGroup(params.lower(), limits)
    top = params.p ** params.mu
    mismatches = []
    for d in range(params.nu):
        for i in range(1, top + 1):
            for j in range(1, top + 1):
                predicted = counting.cyclic_conjugate_predicate(params, d, i, j)
                actual = counting.cyclic_conjugate_by_enumeration(group,
                        params, d, i, j)
                if predicted != actual:
                    mismatches.append((d, i, j))
    detail = "first mismatch (d, i, j) = {0}".format(mismatches[0]) \
            if mismatches else ""
    return [_verdict("cyclic subgroup conjugacy predicate", not mismatches,
        detail)]


def run_wedderburn(presentation, limits):
    group = MetacyclicGroup(presentation, limits)
    components = decompose(group)
    descriptors = [c.descriptor for c in components]
    cyclic_classes = len(group.cyclic_subgroup_classes())
    classes = group.class_count()
    center_sum = sum(d.center.degree for d in descriptors)
    return [
        _verdict("component count is the cyclic subgroup class count",
            len(descriptors) == cyclic_classes, "{0} components, {1} classes".
            format(len(descriptors), cyclic_classes)),
        _verdict("dimensions sum to the group order",
            sum(d.dimension for d in descriptors) == group.order),
        _verdict("center degrees sum to the class count",
            center_sum == classes, "{0} vs {1}".format(center_sum, classes)),
    ]


def run_centers(params, limits):
    verdicts = []
    criteria = (("real center criterion", real_center_criterion,
                params.rho >= params.mu - 1 and params.mu >= 3
                and params.nu >= 2),
            ("skew center criterion", skew_center_criterion,
                params.rho >= params.mu - 1 and params.mu >= 3
                and params.nu >= 2),
            ("fixed field criterion", fixed_field_criterion,
                params.rho < params.mu < params.nu + params.rho))
    for name, criterion, applies in criteria:
        if applies:
            outcome = criterion(params, limits)
            verdicts.append(_verdict(name, outcome.agrees,
                "predicted {0}, observed {1}".format(outcome.predicted,
                    outcome.observed)))
    return verdicts


def run_classification(p, k, interpretation, limits):
    row = classify_order(p, k, Interpretation.from_string(interpretation),
            limits)
    return [_verdict("canonical tuples match isomorphism classes",
        row.bijective, "{0} tuples, {1} classes, matching {2}".format(
            len(row.tuples), len(row.classes), row.matching))]


def run_separation(p, k, limits):
    tuples = enumerate_canonical(p, k)
    vectors = [qg_invariant_vector(t.lower(), limits) for t in tuples]
    verdicts = []
    for pos, first in enumerate(tuples):
        for other in range(pos + 1, len(tuples)):
            comparison = compare_vectors(vectors[pos], vectors[other])
            verdicts.append(_verdict("distinct tuples have separated vectors",
                not comparison.compatible, "{0} vs {1}: {2}".format(first,
                    tuples[other], comparison.first_difference)))
    return verdicts


def run_invariance(presentation, copy, generators, limits):
    isomorphic = brute_force_isomorphic(presentation, copy, limits)
    comparison = compare_vectors(qg_invariant_vector(presentation, limits),
            qg_invariant_vector(copy, limits))
    detail = "{0} re-presented by {1} as {2}".format(presentation, generators,
            copy)
    if not comparison.equal:
        detail += ", differing in {0}".format(comparison.first_difference)
    return [_verdict("re-presented copy is isomorphic", isomorphic, detail),
            _verdict("isomorphic groups have compatible vectors",
                comparison.compatible, detail)]


def run_pi(order_, limits):
    verdicts = []
    presentations = list(consistent_presentations(order_))
    for presentation in presentations:
        group = MetacyclicGroup(presentation, limits)
        signature = pi_signature(group)
        if not is_nilpotent(group):
            primes = sorted(signature.pi | signature.pi_prime)
            verdicts.append(_verdict("smallest prime lies in pi",
                primes[0] in signature.pi, "{0}: {1}".format(presentation,
                    signature)))
    if order_ > limits.algebra_cap:
        return verdicts
    classes = isomorphism_classes(presentations, limits)
    representatives = [MetacyclicGroup(c[0], limits) for c in classes]
    vectors = [qg_invariant_vector(g) for g in representatives]
    for group, members in zip(representatives, classes):
        for p in sorted(pi_signature(group).pi):
            report = p_component_sum_check(group, p)
            verdicts.append(_verdict("p-components are copies of QG_p",
                report.passed, _failure_detail(report)))
        if len(members) > 1:
            report = main_theorem_check(group, members[-1], limits)
            verdicts.append(_verdict("pi signature and Hall subgroups",
                report.passed, _failure_detail(report)))
    for pos, first in enumerate(representatives):
        for other in range(pos + 1, len(representatives)):
            if compare_vectors(vectors[pos], vectors[other]).compatible:
                report = main_theorem_check(first, representatives[other])
                verdicts.append(_verdict("pi signature and Hall subgroups",
                    report.passed, _failure_detail(report)))
    return verdicts


def _failure_detail(report):
    failure = report.first_failure()
    if failure is None:
        return ", ".join(report.subjects)
    return "{0}: {1} {2}".format(", ".join(report.subjects),
            failure.description, failure.detail)


RUNNERS = {
    "numtheory": run_numtheory,
    "counting": run_counting,
    "conjugacy": run_conjugacy,
    "wedderburn": run_wedderburn,
    "centers": run_centers,
    "classification": run_classification,
    "separation": run_separation,
    "invariance": run_invariance,
    "pi": run_pi,
}


def run_item(item):
    """Run one work item and return its CheckResult list. Errors of the
    library become failed checks."""
    try:
        verdicts = RUNNERS[item.family](*item.args)
    except MetacyclicError as err:
        logging.error("Sweep item {0} failed: {1}".format(item.key, err))
        verdicts = [("no error", False, "{0}: {1}".format(
            type(err).__name__, err))]
    now = datetime.now(timezone.utc)
    return [CheckResult(item.family, invariant, item.key,
        CheckResult.States.PASSED if passed else CheckResult.States.FAILED,
        detail, now) for invariant, passed, detail in verdicts]


def _prime_powers(primes, bound):
    for p in primes:
        k = 1
        while p ** k <= bound:
            yield p, k
            k += 1


def build_items(families, bound, primes, limits, samples=50, seed=1,
        interpretation="resolved"):
    """Return the work items of a sweep, in a fixed order.

    Args:
        families (list): Sweep families to include.
        bound (int)    : Largest group order.
        primes (list)  : Primes for the p-group families.
        limits (Limits): Caps; groups beyond them are left out.
        samples (int)  : Number of randomized pairs for invariance.
        seed (int)     : Seed for those pairs.
        interpretation (str): Clause reading for classification.
    """
    group_bound = min(bound, limits.group_cap)
    algebra_bound = min(bound, limits.algebra_cap)
    items = []
    wanted = [f for f in SWEEP_FAMILIES if f in families]
    for family in wanted:
        if family == "numtheory":
            for p in primes:
                for m in range(1, 9):
                    items.append(WorkItem(family, "numtheory:p={0},m={1}".format(
                        p, m), ("prime power", p, m)))
            for n in range(1, CYCLOTOMIC_MODULUS_BOUND + 1):
                items.append(WorkItem(family, "numtheory:n={0}".format(n),
                    ("modulus", n)))
            items.append(WorkItem(family, "numtheory:sum_d_2d",
                ("sum", SUM_D_2D_BOUND)))
        elif family == "counting":
            for p in primes:
                for t in _tuples(p, group_bound):
                    if t.epsilon == 1 or t.p == 2:
                        items.append(WorkItem(family, "counting:{0}".format(t),
                            (t, limits)))
        elif family == "conjugacy":
            for p in primes:
                for t in _tuples(p, group_bound, epsilon=1):
                    if t.mu >= 1 and t.nu >= 1:
                        items.append(WorkItem(family,
                            "conjugacy:{0}".format(t), (t, limits)))
        elif family == "wedderburn":
            for p in primes:
                for t in _tuples(p, algebra_bound):
                    items.append(WorkItem(family, "wedderburn:{0}".format(t),
                        (t.lower(), limits)))
        elif family == "centers":
            if 2 in primes:
                for t in _tuples(2, algebra_bound, epsilon=-1):
                    items.append(WorkItem(family, "centers:{0}".format(t),
                        (t, limits)))
        elif family == "classification":
            for p, k in _prime_powers(primes, group_bound):
                items.append(WorkItem(family, "classification:{0}^{1}".format(
                    p, k), (p, k, interpretation, limits)))
        elif family == "separation":
            for p, k in _prime_powers(primes, algebra_bound):
                items.append(WorkItem(family, "separation:{0}^{1}".format(p, k),
                    (p, k, limits)))
        elif family == "invariance":
            items.extend(_invariance_items(min(algebra_bound,
                INVARIANCE_ORDER_BOUND), samples, seed, limits))
        elif family == "pi":
            for order_ in range(2, group_bound + 1):
                items.append(WorkItem(family, "pi:order={0}".format(order_),
                    (order_, limits)))
    return items


def _invariance_items(bound, samples, seed, limits):
    rng = random.Random(seed)
    pool = [p for order_ in range(2, bound + 1)
            for p in consistent_presentations(order_)]
    items = []
    if not pool:
        return items
    for number in range(samples):
        presentation = rng.choice(pool)
        copy, generators = random_representation(presentation, rng)
        items.append(WorkItem("invariance", "invariance:{0}:{1}".format(number,
            presentation), (presentation, copy, generators, limits)))
    return items


def run_sweep(families, bound, primes, limits=None, jobs=1, checkpoint=None,
        samples=50, seed=1, interpretation="resolved"):
    """Run a sweep and return its SweepReport.

    Items found in the checkpoint are not run again; their recorded
    results are part of the report.

    Args:
        families (list)  : Sweep families to run.
        bound (int)      : Largest group order.
        primes (list)    : Primes for the p-group families.
        limits (Limits)  : Caps, default Limits().
        jobs (int)       : Number of worker processes.
        checkpoint (str) : Progress file, or None.
        samples (int)    : Randomized pairs for the invariance family.
        seed (int)       : Seed for those pairs.
        interpretation (str): Clause reading for classification.
    """
    limits = limits if limits is not None else Limits()
    items = build_items(families, bound, primes, limits, samples, seed,
            interpretation)
    progress = Checkpoint(checkpoint) if checkpoint else None
    done = progress.load() if progress else {}
    pending = [item for item in items if item.key not in done]
    logging.info("Sweep of {0} items, {1} to run".format(len(items),
        len(pending)))
    fresh = {}
    if jobs > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            for item, results in zip(pending, executor.map(run_item, pending)):
                fresh[item.key] = results
                if progress:
                    progress.record(results)
    else:
        for item in pending:
            results = run_item(item)
            fresh[item.key] = results
            if progress:
                progress.record(results)
    report = SweepReport([f for f in SWEEP_FAMILIES if f in families])
    for item in items:
        if item.key in done:
            report.resumed += 1
            report.results.extend(done[item.key])
        else:
            report.results.extend(fresh[item.key])
    logging.info("Sweep finished: {0} checks, {1} failed".format(
        len(report.results), sum(1 for r in report.results if not r.passed)))
    return report
