# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

import dateutil.parser
import json
from closingbrace.checkresult import CheckResult
from datetime import datetime
from enum import Enum
from fractions import Fraction

# Version of every JSON document the program writes.
SCHEMA_VERSION = 1


class ReportEncoder(json.JSONEncoder):
    """Custom JSON encoder for reports.

    Fractions are encoded as "p/q" strings (integral ones as integers),
    sets as sorted lists, enum members by name, datetime objects as their
    ISO-8601 string, and any object with an `as_dict` method as that
    dictionary.
    """

    def default(self, obj):
        """Encoding function.
        """
        if isinstance(obj, Fraction):
            if obj.denominator == 1:
                return obj.numerator
            return "{0}/{1}".format(obj.numerator, obj.denominator)
        if isinstance(obj, (set, frozenset)):
            return sorted(obj)
        if isinstance(obj, Enum):
            return obj.name
        if isinstance(obj, datetime):
            return obj.isoformat()
        if hasattr(obj, "as_dict"):
            return obj.as_dict()
        return json.JSONEncoder.default(self, obj)


def dump_report(document, fp):
    """Write `document` to `fp` as a versioned JSON report. The key
    "schema" comes first; the other keys keep their insertion order.

    Args:
        document (dict): The report.
        fp             : A text file.
    """
    versioned = {"schema": SCHEMA_VERSION}
    versioned.update(document)
    json.dump(versioned, fp, indent=2, cls=ReportEncoder)
    fp.write("\n")


def decode_checkpoint_json(dct):
    """Object hook for decoding a checkpoint line from JSON. In the JSON
    file, the timestamp is a string. This is converted to a datetime
    object. Also in the JSON file, the check's state is a string. This is
    converted to an instance of the CheckResult.States enumeration.

    Args:
        dct: The dictionary as decoded by the default decoder.

    Returns:
        A dictionary with the timestamp as a datetime object and the
        state using the state enumeration.
    """
    if 'timestamp' in dct:
        dct['timestamp'] = dateutil.parser.parse(dct['timestamp'])
    if 'state' in dct:
        dct['state'] = CheckResult.States.from_string(dct['state'])
    return dct
