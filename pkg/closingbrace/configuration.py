# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

import json
import textwrap
from closingbrace.metacyclicerror import MetacyclicError
from dataclasses import dataclass, field
from sympy import isprime

# Default cap on the order of groups whose elements are enumerated.
DEFAULT_GROUP_CAP = 512
# Default cap on the order of groups whose rational group algebra is built.
DEFAULT_ALGEBRA_CAP = 128
# No cap may be raised above this.
HARD_ORDER_CAP = 2048

VERBS = ("validate", "counts", "wedderburn", "iso", "pi", "sweep",
        "classify")

SWEEP_FAMILIES = ("numtheory", "counting", "conjugacy", "wedderburn",
        "centers", "classification", "separation", "invariance", "pi")


@dataclass(frozen=True)
class Limits:
    """The caps in force for a group.

    Attributes:
        group_cap (int)  : Largest order for element enumeration.
        algebra_cap (int): Largest order for group algebra arithmetic.
    """
    group_cap: int = DEFAULT_GROUP_CAP
    algebra_cap: int = DEFAULT_ALGEBRA_CAP

    @classmethod
    def with_cap(cls, cap):
        """Return limits where `cap` overrides both caps."""
        if cap is None:
            return cls()
        return cls(cap, cap)


class Configuration:
    """Configuration for sweeps.

    The configuration is read from a json-configuration file. This
    configuration file is versioned. The program only supports
    configuration files in the version 1.x format.

    Attributes:
        version_major (str): The major part of the configuration's
                             version.
        version_minor (str): The minor part of the configuration's
                             version.
    """

    def __init__(self, conf_file=None):
        """Constructor that takes the path to the configuration file as
        argument.

        The configuration is loaded from the json configuration file at
        `conf_file`. Without a file the configuration is empty and every
        parameter takes its default.

        Args:
            conf_file (str): Path to the configuration file, or None.

        Raises:
            MetacyclicError: When the configuration file does not exist
                             or could otherwise not be opened, or when
                             the configuration file could not be parsed.
        """
        if conf_file is None:
            self._configuration = {"version": "1.0"}
            self._extract_version()
            return
        try:
            with open(conf_file, "r") as fp:
                self._configuration = json.load(fp)
            self._extract_version()
            self._check_version()
        except IOError as err:
            raise MetacyclicError(
                    "Could not open configuration file '{0}' ({1})".format(
                        err.filename, err.strerror))
        except ValueError as err:
            raise MetacyclicError("Could not parse configuration ({0})".
                    format(err))

    _MISSING = object()

    def get_param(self, key, default=_MISSING):
        """Get the parameter `key` from the configuration.

        Args:
            key (str)    : The key to retrieve.
            default (any): Returned when `key` is absent, if given.

        Returns:
            The value corresponding to `key`.

        Raises:
            KeyError: When `key` does not exist in the configuration and
                      no default was given.
        """
        if default is Configuration._MISSING:
            return self._configuration[key]
        return self._configuration.get(key, default)

    def _extract_version(self):
        """Extract the version from the configuration into the
        attributes version_major and version_minor.

        Raises:
            MetacyclicError: When the configuration does not have a
                             version parameter, or when the version
                             parameter could not be split into two
                             separate strings.
        """
        try:
            version = self._configuration["version"]
            self.version_major, self.version_minor = version.split(".")
        except KeyError as err:
            raise MetacyclicError("Missing configuration parameter '{0}'".
                    format(err.args[0]))
        except (ValueError, AttributeError) as err:
            raise MetacyclicError(
                    "Error parsing configuration's version string ({0})".
                    format(err))

    def _check_version(self):
        """Check if the configuration format version is supported.

        Raises:
            MetacyclicError: When the configuration format version is not
                             supported.
        """
        try:
            if (int(self.version_major) == 1) and (int(self.version_minor) >= 0):
                return
        except ValueError:
            pass
        raise MetacyclicError("Configuration file format not supported. "
                "Found version {0}, only supporting versions 1.x".
                format(self._configuration["version"]))

    @classmethod
    def print_configuration_format(cls):
        """Print the configuration file format.
        """
        print(textwrap.dedent("""\
            The configuration for sweeps is stored in a JSON-file. The file
            is versioned. This version of the program uses version 1.0 of
            the configuration file. It is also compatible with any other
            1.x version of the configuration file.

            A sample version 1.0 configuration file looks as follows:

                {
                   "version": "1.0",
                   "bound": 64,
                   "primes": [2, 3],
                   "cap": 512,
                   "jobs": 4,
                   "checkpoint": "/path/to/sweep.progress",
                   "checks": ["counting", "wedderburn", "pi"],
                   "samples": 50,
                   "seed": 1
                }

            The configuration is contained in a single, unnamed JSON object.
            Every name/value pair except `version` is optional, and a value
            given on the command line takes precedence:
            - `version`   : The string "1.0".
            - `bound`     : The largest group order a sweep visits.
            - `primes`    : The primes whose p-groups are swept.
            - `cap`       : Overrides the caps on group and group algebra
                            sizes (at most 2048).
            - `jobs`      : The number of worker processes.
            - `checkpoint`: A progress file. Every completed work item is
                            appended as one line, and a sweep that is
                            started again skips the items found in it.
            - `checks`    : The sweep families to run, any of numtheory,
                            counting, conjugacy, wedderburn, centers,
                            classification, separation, invariance, pi.
            - `samples`   : The number of randomly re-presented pairs for
                            the invariance family.
            - `seed`      : The seed for those random choices."""))


@dataclass
class JobConfig:
    """Everything a command needs to run.

    Attributes:
        command (str)    : One of VERBS.
        specs (list)     : Group literals given on the command line.
        bound (int)      : Largest group order for sweeps.
        primes (list)    : Primes for sweeps and classification.
        cap (int)        : Cap override, or None.
        json (bool)      : Emit JSON instead of text.
        out (str)        : Output file, or None for stdout.
        jobs (int)       : Number of worker processes.
        checkpoint (str) : Progress file for sweeps, or None.
        checks (list)    : Sweep families to run.
        samples (int)    : Randomized pairs for the invariance family.
        seed (int)       : Seed for random choices.
        interpretation (str): Clause reading for canonical tuples.
    """
    command: str
    specs: list = field(default_factory=list)
    bound: int = 64
    primes: list = field(default_factory=lambda: [2, 3])
    cap: int = None
    json: bool = False
    out: str = None
    jobs: int = 1
    checkpoint: str = None
    checks: list = field(default_factory=lambda: list(SWEEP_FAMILIES))
    samples: int = 50
    seed: int = 1
    interpretation: str = "resolved"

    @classmethod
    def from_environment(cls, env, conf):
        """Build the job from command line arguments layered over the
        configuration file.

        Args:
            env (Environment)    : The parsed command line.
            conf (Configuration) : The configuration file contents.

        Raises:
            MetacyclicError: When the result is not a valid job.
        """
        def pick(name, default):
            value = getattr(env, name, None)
            if value is not None:
                return value
            return conf.get_param(name, default)

        job = cls(command=env.command,
                specs=list(env.specs),
                bound=pick("bound", 64),
                primes=list(pick("primes", [2, 3])),
                cap=pick("cap", None),
                json=bool(env.json),
                out=env.out,
                jobs=pick("jobs", 1),
                checkpoint=pick("checkpoint", None),
                checks=list(pick("checks", list(SWEEP_FAMILIES))),
                samples=pick("samples", 50),
                seed=pick("seed", 1),
                interpretation=env.interpretation)
        job.validate()
        return job

    def validate(self):
        """Check the job against the fixed verbs and the hard caps.

        Raises:
            MetacyclicError: When a value is out of range.
        """
        if self.command not in VERBS:
            raise MetacyclicError("Unknown command '{0}'".format(self.command))
        if not isinstance(self.bound, int) or not 1 <= self.bound <= HARD_ORDER_CAP:
            raise MetacyclicError("Bound {0} outside 1..{1}".format(
                self.bound, HARD_ORDER_CAP))
        if self.cap is not None and not 1 <= self.cap <= HARD_ORDER_CAP:
            raise MetacyclicError("Cap {0} outside 1..{1}".format(
                self.cap, HARD_ORDER_CAP))
        if not isinstance(self.jobs, int) or self.jobs < 1:
            raise MetacyclicError("Need at least one job, got {0}".format(
                self.jobs))
        for p in self.primes:
            if not isinstance(p, int) or not isprime(p):
                raise MetacyclicError("{0} is not a prime".format(p))
        for check in self.checks:
            if check not in SWEEP_FAMILIES:
                raise MetacyclicError("Unknown sweep family '{0}'".format(check))

    @property
    def limits(self):
        return Limits.with_cap(self.cap)
