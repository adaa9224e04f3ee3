# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Canonical parameters of metacyclic p-groups.

Every metacyclic p-group has a presentation

    ⟨a, b | a^(p^mu) = 1, b^(p^nu) = a^(p^sigma), a^b = a^(epsilon + p^rho)⟩

for unique (p, mu, nu, sigma, rho, epsilon) satisfying four clauses. Two
of the clauses are ambiguous as usually printed; both readings are
available through `Interpretation`, and RESOLVED (the default) is the
reading under which tuples and isomorphism classes correspond one to one:

  RESOLVED: if p = 2 and mu >= 2 then rho >= 2;
            for epsilon = -1: if nu >= 2 and mu >= 3 then rho <= sigma.
  LITERAL:  if p = 2 and mu <= 2 then rho >= 2;
            for epsilon = -1: if nu <= 2 and mu <= 3 then rho <= sigma.
"""

from closingbrace.metacyclicerror import PreconditionError
from closingbrace.presentation import MetacyclicPresentation
from dataclasses import dataclass
from enum import Enum
from sympy import isprime


class Interpretation(Enum):
    """Readings of the two ambiguous clauses."""

    RESOLVED = "resolved"
    LITERAL = "literal"

    @classmethod
    def from_string(cls, name):
        """Return the member given its value or name.

        Raises:
            ValueError: When the name does not correspond to a member.
        """
        for member in cls:
            if name in (member.value, member.name):
                return member
        raise ValueError("Illegal name ({0}) for enumeration "
                "'Interpretation'".format(name))


@dataclass(frozen=True, order=True)
class CanonicalPParams:
    """The tuple (p, mu, nu, sigma, rho, epsilon).

    Attributes:
        p (int)      : A prime.
        mu (int)     : log_p of the order of a.
        nu (int)     : log_p of the order of b modulo ⟨a⟩.
        sigma (int)  : b^(p^nu) = a^(p^sigma).
        rho (int)    : a^b = a^(epsilon + p^rho).
        epsilon (int): +1 or -1.
    """
    p: int
    mu: int
    nu: int
    sigma: int
    rho: int
    epsilon: int

    def __str__(self):
        return "mcp({0},{1},{2},{3},{4},{5})".format(self.p, self.mu,
                self.nu, self.sigma, self.rho, self.epsilon)

    @property
    def order(self):
        return self.p ** (self.mu + self.nu)

    def lower(self):
        """Return the MetacyclicPresentation this tuple stands for."""
        m = self.p ** self.mu
        return MetacyclicPresentation(m, self.p ** self.nu,
                self.p ** self.sigma % m, (self.epsilon + self.p ** self.rho) % m)

    def as_dict(self):
        return {"p": self.p, "mu": self.mu, "nu": self.nu,
                "sigma": self.sigma, "rho": self.rho, "epsilon": self.epsilon}


def clause_basic(t):
    """p prime, exponents non-negative, epsilon = ±1."""
    return (isprime(t.p) and min(t.mu, t.nu, t.sigma, t.rho) >= 0
            and t.epsilon in (1, -1))


def clause_rho_range(t, interpretation=Interpretation.RESOLVED):
    """rho <= mu, rho >= 1 when mu >= 1, and the p = 2 restriction."""
    if t.rho > t.mu or (t.mu >= 1 and t.rho < 1):
        return False
    if interpretation is Interpretation.RESOLVED:
        restricted = t.p == 2 and t.mu >= 2
    else:
        restricted = t.p == 2 and t.mu <= 2
    return not restricted or t.rho >= 2


def clause_plus_one(t):
    """For epsilon = 1: rho <= sigma <= mu <= rho + sigma and
    sigma <= nu."""
    if t.epsilon != 1:
        return True
    return t.rho <= t.sigma <= t.mu <= t.rho + t.sigma and t.sigma <= t.nu


def clause_minus_one(t):
    """For epsilon = -1: p = 2, 2 <= rho <= mu, nu >= 1,
    mu - 1 <= sigma <= mu <= rho + nu and rho + nu != sigma."""
    if t.epsilon != -1:
        return True
    return (t.p == 2 and 2 <= t.rho <= t.mu and t.nu >= 1
            and t.mu - 1 <= t.sigma <= t.mu <= t.rho + t.nu
            and t.rho + t.nu != t.sigma)


def clause_minus_one_exclusion(t, interpretation=Interpretation.RESOLVED):
    """For epsilon = -1, the clause that removes the duplicates with
    rho = mu and sigma = mu - 1."""
    if t.epsilon != -1:
        return True
    if interpretation is Interpretation.RESOLVED:
        applies = t.nu >= 2 and t.mu >= 3
    else:
        applies = t.nu <= 2 and t.mu <= 3
    return not applies or t.rho <= t.sigma


CLAUSES = (
    ("basic", lambda t, i: clause_basic(t)),
    ("rho-range", clause_rho_range),
    ("eps=+1 inequalities", lambda t, i: clause_plus_one(t)),
    ("eps=-1 inequalities", lambda t, i: clause_minus_one(t)),
    ("eps=-1 exclusion", clause_minus_one_exclusion),
)


def clause_results(params, interpretation=Interpretation.RESOLVED):
    """Return the list of (clause name, passed) for `params`."""
    results = []
    for name, clause in CLAUSES:
        passed = clause(params, interpretation)
        results.append((name, bool(passed)))
        if name == "basic" and not passed:
            break
    return results


def validate_canonical(params, interpretation=Interpretation.RESOLVED):
    """Return True when `params` is a canonical tuple."""
    return all(passed for _, passed in clause_results(params, interpretation))


def enumerate_canonical(p, k, interpretation=Interpretation.RESOLVED):
    """Return all canonical tuples of order p^k, sorted by
    (mu, nu, sigma, rho, epsilon)."""
    if not isprime(p) or k < 0:
        raise PreconditionError("Need a prime and k >= 0, got {0}, {1}".
                format(p, k))
    found = []
    for mu in range(k + 1):
        nu = k - mu
        for sigma in range(mu + 1):
            for rho in range(mu + 1):
                for epsilon in (-1, 1):
                    params = CanonicalPParams(p, mu, nu, sigma, rho, epsilon)
                    if validate_canonical(params, interpretation):
                        found.append(params)
    return found


def enumerate_canonical_up_to(p, bound, interpretation=Interpretation.RESOLVED):
    """Return all canonical tuples with p^(mu+nu) <= bound, ordered by
    order and then lexicographically."""
    found = []
    k = 0
    while p ** k <= bound:
        found.extend(enumerate_canonical(p, k, interpretation))
        k += 1
    return found


def classical_name(params):
    """Return a conventional name for well-known groups, or None."""
    p, mu, nu = params.p, params.mu, params.nu
    if params.epsilon == 1:
        if mu == 0:
            return "C{0}".format(p ** nu)
        if params.rho == mu:
            return "C{0} x C{1}".format(p ** mu, p ** nu)
        return None
    if nu != 1 or mu < 2:
        return None
    size = 2 ** (mu + 1)
    if params.rho == mu:
        if params.sigma == mu:
            return "D{0}".format(size)
        return "Q{0}".format(size)
    if params.rho == mu - 1:
        return "SD{0}".format(size)
    return None
