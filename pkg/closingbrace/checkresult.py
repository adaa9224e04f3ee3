# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from dataclasses import dataclass
from enum import Enum


@dataclass
class CheckResult:
    """The outcome of one sweep work item.

    Attributes:
        family (str)     : The sweep family the item belongs to.
        invariant (str)  : The property that was checked.
        item (str)       : A key naming the input, e.g. "counting:mcp(...)".
        state (States)   : PASSED or FAILED.
        detail (str)     : Why the item failed, or a short summary.
        timestamp        : When the item completed (datetime), or None.
        resumed (bool)   : True when read back from a checkpoint.
    """

    class States(Enum):
        """Enumeration for the states of a check.

        The states are:
            PASSED
            FAILED
        """

        @classmethod
        def from_string(cls, name):
            """Return the enum member given a string with its name.

            Args:
                name (str): The enum member's name.

            Returns:
                The state as an enum member.

            Raises:
                ValueError: When the name does not correspond to a
                            member.
            """
            if name == CheckResult.States.PASSED.name:
                return CheckResult.States.PASSED
            elif name == CheckResult.States.FAILED.name:
                return CheckResult.States.FAILED
            else:
                raise ValueError("Illegal name ({0}) for enumeration 'States'".
                        format(name))

        PASSED = 0
        FAILED = 1

    family: str
    invariant: str
    item: str
    state: States
    detail: str = ""
    timestamp: object = None
    resumed: bool = False

    @property
    def passed(self):
        return self.state is CheckResult.States.PASSED

    def as_dict(self):
        return {"family": self.family, "invariant": self.invariant,
                "item": self.item, "state": self.state,
                "detail": self.detail}
