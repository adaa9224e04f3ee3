# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

PROGRAM_VERSION = "1.0.0"

import argparse
from closingbrace.configuration import HARD_ORDER_CAP, SWEEP_FAMILIES, VERBS


def _prime_list(text):
    """Parse a comma separated list of integers, e.g. "2,3"."""
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("'{0}' is not a comma separated "
                "list of integers".format(text))


def _family_list(text):
    families = [f.strip() for f in text.split(",") if f.strip()]
    for family in families:
        if family not in SWEEP_FAMILIES:
            raise argparse.ArgumentTypeError("unknown check family '{0}' "
                    "(choose from {1})".format(family, ", ".join(SWEEP_FAMILIES)))
    return families


class Environment:
    """The operating environment of the program.

    An Environment object contains the parsed command line. Options that
    the configuration file may also set default to None, so that the
    configuration file can fill them in.

    Attributes:
        command (str)       : The verb, one of VERBS.
        specs (list)        : Group literals.
        conffile (str)      : The configuration file, or None.
        conf_format (bool)  : Show the configuration file format.
        log (str)           : The log file, or None for stderr.
    """

    def __init__(self, argv=None):
        """Constructor.

        Args:
            argv (list): The arguments to parse, default sys.argv[1:].
        """
        self.conffile = None
        self._parse_command_line(argv)

    @staticmethod
    def _build_parser():
        parser = argparse.ArgumentParser(prog="metabrace",
                description="Exact computations with finite metacyclic "
                "groups and their rational group algebras.",
                epilog="Group literals: mc(m,n,s,r) for <a,b | a^m=1, b^n=a^s, "
                "a^b=a^r>, mcp(p,mu,nu,sigma,rho,eps) for canonical p-group "
                "parameters.")
        parser.add_argument("command", nargs="?", choices=VERBS,
                help="what to compute")
        parser.add_argument("specs", nargs="*", metavar="GROUP",
                help="group literals (two for iso)")
        parser.add_argument("-f", "--conf-format", action="store_true",
                help="show help about the configuration file format and exit")
        parser.add_argument("-v", "--version", action="version",
                version="%(prog)s v" + PROGRAM_VERSION)
        parser.add_argument("-c", "--config", dest="conffile", default=None,
                help="the sweep configuration file (default: none)")
        parser.add_argument("--bound", type=int, default=None,
                help="largest group order for sweep and classify "
                "(default: 64, at most {0})".format(HARD_ORDER_CAP))
        parser.add_argument("--primes", type=_prime_list, default=None,
                help="comma separated primes for sweep and classify "
                "(default: 2,3)")
        parser.add_argument("--cap", type=int, default=None,
                help="override the caps on group and group algebra sizes")
        parser.add_argument("--json", action="store_true",
                help="write JSON instead of text")
        parser.add_argument("--out", default=None,
                help="write the result to this file (default: stdout)")
        parser.add_argument("--jobs", type=int, default=None,
                help="number of worker processes for sweeps (default: 1)")
        parser.add_argument("--checkpoint", default=None,
                help="progress file for resuming sweeps")
        parser.add_argument("--checks", type=_family_list, default=None,
                help="comma separated sweep families (default: all)")
        parser.add_argument("--samples", type=int, default=None,
                help="randomized isomorphic pairs for the invariance family "
                "(default: 50)")
        parser.add_argument("--seed", type=int, default=None,
                help="seed for randomized choices (default: 1)")
        parser.add_argument("--interpretation", default="resolved",
                choices=["resolved", "literal"],
                help="reading of the ambiguous canonical tuple clauses "
                "(default: resolved)")
        parser.add_argument("--log", default=None,
                help="write an INFO level log to this file")
        return parser

    def _parse_command_line(self, argv):
        """Parse command line arguments.

        The command line arguments that are parsed are added to the
        parsing operating environment instance. A missing verb is a
        usage error unless the configuration format is requested.
        """
        parser = self._build_parser()
        parser.parse_args(argv, namespace=self)
        if self.command is None and not self.conf_format:
            parser.error("a command is required (choose from {0})".format(
                ", ".join(VERBS)))
