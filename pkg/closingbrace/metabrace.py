# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

import io
import logging
import sys
from closingbrace import counting
from closingbrace.canonical import CanonicalPParams, Interpretation, \
        classical_name, clause_results, validate_canonical
from closingbrace.configuration import Configuration, JobConfig
from closingbrace.environment import Environment
from closingbrace.functions import as_presentation, parse_group_literal
from closingbrace.group import MetacyclicGroup
from closingbrace.invariants import classify_small_metacyclic, \
        compare_vectors, isop_decide, qg_invariant_vector
from closingbrace.isomorphism import brute_force_isomorphic
from closingbrace.jsoncoders import dump_report
from closingbrace.metacyclicerror import InternalAssertionError, \
        MetacyclicError, PreconditionError
from closingbrace.structure import abelianization_invariants, \
        hall_subgroup, is_nilpotent, pi_signature, sylow_subgroup
from closingbrace.sweep import run_sweep

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class Outcome:
    """What a command produced.

    Attributes:
        document (dict): The JSON form of the result.
        text (str)     : The human readable form.
        passed (bool)  : False when a check failed.
    """

    def __init__(self, document, text, passed=True):
        self.document = document
        self.text = text
        self.passed = passed


def resolve_group(literal, interpretation=Interpretation.RESOLVED):
    """Parse a literal into a consistent presentation.

    Raises:
        GroupLiteralError: When the literal does not parse.
        PreconditionError: When the tuple is not valid or the presentation
                           is not consistent.
    """
    group = parse_group_literal(literal)
    if isinstance(group, CanonicalPParams):
        if not validate_canonical(group, interpretation):
            failed = [name for name, passed in clause_results(group,
                interpretation) if not passed]
            raise PreconditionError("{0} is not a valid tuple (failed: {1})".
                    format(group, ", ".join(failed)))
    presentation = as_presentation(group)
    presentation.require_consistent()
    return group, presentation


def _require_specs(job, count):
    if len(job.specs) != count:
        raise MetacyclicError("'{0}' needs {1} group literal(s), got {2}".
                format(job.command, count, len(job.specs)))


def cmd_validate(literal, interpretation=Interpretation.RESOLVED):
    """List the clauses of a canonical tuple, or the consistency
    conditions of a presentation, with their outcome."""
    group = parse_group_literal(literal)
    if isinstance(group, CanonicalPParams):
        clauses = clause_results(group, interpretation)
        name = classical_name(group) if all(p for _, p in clauses) else None
    else:
        clauses = group.check_consistency()
        name = None
    valid = all(passed for _, passed in clauses)
    lines = ["{0}: {1}".format(group, "valid" if valid else "invalid")]
    lines.extend("  {0:<24} {1}".format(text, "pass" if passed else "FAIL")
            for text, passed in clauses)
    if name:
        lines.append("  name: {0}".format(name))
    document = {"group": str(group), "valid": valid,
            "clauses": [{"clause": text, "passed": passed}
                for text, passed in clauses]}
    if name:
        document["name"] = name
    return Outcome(document, "\n".join(lines))


def cmd_counts(literal, limits, interpretation=Interpretation.RESOLVED):
    """Count conjugacy classes, classes of cyclic subgroups and, within the
    algebra cap, simple components; canonical tuples are also checked
    against the closed formulas.

    Raises:
        InternalAssertionError: When a formula disagrees with enumeration.
    """
    params, presentation = resolve_group(literal, interpretation)
    group = MetacyclicGroup(presentation, limits)
    document = {"group": literal, "presentation": str(presentation),
            "order": group.order,
            "abelianization": list(abelianization_invariants(group)),
            "classes": group.class_count(),
            "cyclic_subgroup_classes": len(group.cyclic_subgroup_classes())}
    if group.order <= limits.algebra_cap:
        document["components"] = len(qg_invariant_vector(group).components)
    if isinstance(params, CanonicalPParams):
        document.update(_formula_counts(params, document))
    lines = ["{0}={1}".format(key.replace("_", "-"), value)
            for key, value in document.items() if key != "terms"]
    return Outcome(document, "\n".join(lines))


def _formula_counts(params, document):
    if params.epsilon == 1:
        terms = counting.counting_terms(params)
        formula = counting.count_cyclic_classes_eps1(params)
        if formula != document["cyclic_subgroup_classes"]:
            raise InternalAssertionError("Cyclic subgroup class formula "
                    "gives {0} for {1}, enumeration {2}".format(formula,
                        params, document["cyclic_subgroup_classes"]))
        return {"formula_cyclic_subgroup_classes": formula, "terms": terms}
    formula = counting.count_conjugacy_classes_epsm1(params)
    by_classes = counting.conjugacy_class_count_by_cyclotomic_classes(params)
    if not formula == by_classes == document["classes"]:
        raise InternalAssertionError("Class count formula gives {0} and {1} "
                "for {2}, enumeration {3}".format(formula, by_classes, params,
                    document["classes"]))
    return {"formula_classes": formula}


def cmd_wedderburn(literal, limits, interpretation=Interpretation.RESOLVED):
    """Decompose the rational group algebra."""
    _, presentation = resolve_group(literal, interpretation)
    group = MetacyclicGroup(presentation, limits)
    vector = qg_invariant_vector(group)
    lines = ["Q{0} (order {1}) has {2} simple components:".format(literal,
        group.order, len(vector.components))]
    lines.extend("  " + str(c) for c in vector.components)
    return Outcome({"group": literal, "presentation": str(presentation),
        "vector": vector}, "\n".join(lines))


def cmd_iso(first, second, limits, interpretation=Interpretation.RESOLVED):
    """Decide isomorphism of two groups by brute force and compare their
    invariant vectors.

    Raises:
        InternalAssertionError: When isomorphic groups have vectors that
                                cannot be equal.
    """
    params1, p1 = resolve_group(first, interpretation)
    params2, p2 = resolve_group(second, interpretation)
    document = {"groups": [first, second]}
    if isinstance(params1, CanonicalPParams) and isinstance(params2,
            CanonicalPParams) and params1.p == params2.p:
        document["tuples_equal"] = isop_decide(params1, params2, limits)
    isomorphic = brute_force_isomorphic(p1, p2, limits)
    document["isomorphic"] = isomorphic
    comparison = None
    if max(p1.order, p2.order) <= limits.algebra_cap:
        comparison = compare_vectors(qg_invariant_vector(p1, limits),
                qg_invariant_vector(p2, limits))
        document["vectors"] = comparison
        if isomorphic and not comparison.compatible:
            raise InternalAssertionError("Isomorphic {0} and {1} have "
                    "different invariant vectors ({2})".format(first, second,
                        comparison.first_difference))
    if isomorphic:
        verdict = "isomorphic"
    elif comparison is None:
        verdict = "non-isomorphic"
    elif comparison.compatible:
        verdict = "non-isomorphic: invariant vectors agree"
    else:
        verdict = "non-isomorphic: {0} differs".format(
                comparison.first_difference)
    if comparison is not None and comparison.unknown_sensitive:
        verdict += " (depends on Unknown division flags)"
    document["verdict"] = verdict
    return Outcome(document, verdict)


def cmd_pi(literal, limits, interpretation=Interpretation.RESOLVED):
    """Report the pi signature with the Sylow and Hall subgroups."""
    _, presentation = resolve_group(literal, interpretation)
    group = MetacyclicGroup(presentation, limits)
    signature = pi_signature(group)
    primes = sorted(signature.pi | signature.pi_prime)
    sylows = {str(p): str(sylow_subgroup(group, p)) for p in primes}
    document = {"group": literal, "signature": signature,
            "nilpotent": is_nilpotent(group), "sylow": sylows}
    lines = ["{0}: {1}".format(literal, signature),
            "nilpotent: {0}".format("yes" if document["nilpotent"] else "no")]
    lines.extend("Sylow {0}-subgroup: {1}".format(p, sylows[str(p)])
            for p in primes)
    if signature.pi:
        hall = str(hall_subgroup(group, sorted(signature.pi)))
        document["hall"] = hall
        lines.append("Hall pi-subgroup: {0}".format(hall))
    return Outcome(document, "\n".join(lines))


def cmd_sweep(job):
    """Run the sweep families of the job."""
    report = run_sweep(job.checks, job.bound, job.primes, job.limits, job.jobs,
            job.checkpoint, job.samples, job.seed, job.interpretation)
    lines = []
    for summary in report.summaries():
        lines.append("{0:<15} {1:<55} {2:>6} passed {3:>4} failed".format(
            summary.family, summary.invariant, summary.passed,
            summary.failed))
        if summary.first_failure is not None:
            lines.append("    first failure: {0}: {1}".format(
                summary.first_failure.item, summary.first_failure.detail))
    if report.resumed:
        lines.append("({0} items resumed from checkpoint)".format(
            report.resumed))
    lines.append("all checks passed" if report.passed else "CHECKS FAILED")
    return Outcome({"sweep": report}, "\n".join(lines), report.passed)


def cmd_classify(job):
    """Print canonical tuples against isomorphism classes per order."""
    rows = classify_small_metacyclic(job.bound, job.primes,
            Interpretation.from_string(job.interpretation), job.limits)
    lines = []
    for row in rows:
        lines.append("order {0}: {1} tuples, {2} classes, {3}".format(
            row.order, len(row.tuples), len(row.classes),
            "bijective" if row.bijective else "NOT BIJECTIVE"))
        for params, match in zip(row.tuples, row.matching):
            representative = row.classes[match][0] if match is not None \
                    else "-"
            lines.append("  {0:<22} {1}".format(str(params),
                str(representative)))
    passed = all(row.bijective for row in rows)
    return Outcome({"classification": rows}, "\n".join(lines), passed)


def execute(job):
    """Run the command of `job` and return its Outcome."""
    interpretation = Interpretation.from_string(job.interpretation)
    if job.command == "validate":
        _require_specs(job, 1)
        return cmd_validate(job.specs[0], interpretation)
    if job.command == "counts":
        _require_specs(job, 1)
        return cmd_counts(job.specs[0], job.limits, interpretation)
    if job.command == "wedderburn":
        _require_specs(job, 1)
        return cmd_wedderburn(job.specs[0], job.limits, interpretation)
    if job.command == "iso":
        _require_specs(job, 2)
        return cmd_iso(job.specs[0], job.specs[1], job.limits, interpretation)
    if job.command == "pi":
        _require_specs(job, 1)
        return cmd_pi(job.specs[0], job.limits, interpretation)
    if job.command == "sweep":
        return cmd_sweep(job)
    return cmd_classify(job)


def write_outcome(outcome, job):
    """Write the outcome as text or JSON to --out or stdout."""
    buffer = io.StringIO()
    if job.json:
        dump_report(outcome.document, buffer)
    else:
        buffer.write(outcome.text + "\n")
    if job.out:
        with open(job.out, "w") as fp:
            fp.write(buffer.getvalue())
    else:
        sys.stdout.write(buffer.getvalue())


def run(argv=None):
    env = Environment(argv)
    if (env.conf_format):
        Configuration.print_configuration_format()
        sys.exit(EXIT_OK)
    if env.log:
        logging.basicConfig(filename=env.log,
                format="%(asctime)s %(levelname)s: %(message)s",
                level=logging.INFO)
    else:
        logging.basicConfig(format="%(asctime)s %(levelname)s: %(message)s",
                level=logging.WARNING)
    try:
        conf = Configuration(env.conffile)
        job = JobConfig.from_environment(env, conf)
        outcome = execute(job)
    except InternalAssertionError as e:
        logging.error("Internal check failed:")
        logging.error("  {0}".format(e))
        sys.exit(EXIT_FAILED)
    except MetacyclicError as e:
        logging.error("Command not run due to error:")
        logging.error("  {0}".format(e))
        sys.exit(EXIT_USAGE)
    write_outcome(outcome, job)
    sys.exit(EXIT_OK if outcome.passed else EXIT_FAILED)
