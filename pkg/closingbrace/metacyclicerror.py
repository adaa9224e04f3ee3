# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

class MetacyclicError(Exception):
    """Base exception for the metacyclic group library.

    This exception is raised when an error occurs in the library or the
    command line program. It is derived for more specific errors.
    """

    def __init__(self, reason):
        """Constructor that takes the reason for the error as argument.

        Args:
            reason (str): The reason for raising the error.
        """
        super().__init__(reason)
        self._reason = reason

    def __str__(self):
        """String representation of the error."""
        return self._reason


class PreconditionError(MetacyclicError):
    """Raised when the arguments of an operation violate its
    precondition, e.g. an inconsistent presentation, a non-prime p or a
    subgroup that should be normal but is not.
    """


class CapExceededError(MetacyclicError):
    """Raised when a group is too large for the cap in force."""

    def __init__(self, what, order, cap):
        """Constructor.

        Args:
            what (str) : The computation that was refused.
            order (int): The order of the group involved.
            cap (int)  : The cap that was exceeded.
        """
        super().__init__("{0} refused: group order {1} exceeds cap {2}".
                format(what, order, cap))
        self.args = (what, order, cap)
        self.order = order
        self.cap = cap


class GroupLiteralError(MetacyclicError):
    """Raised when a group literal such as `mc(8,2,0,7)` cannot be
    parsed.

    Attributes:
        position (int): 0-based position of the offending character.
    """

    def __init__(self, reason, position):
        """Constructor.

        Args:
            reason (str)  : What is wrong with the literal.
            position (int): Where it went wrong.
        """
        super().__init__("{0} (at position {1})".format(reason, position))
        self.args = (reason, position)
        self.position = position


class InternalAssertionError(MetacyclicError):
    """Raised when two independent computations of the same quantity
    disagree, or when a structural identity fails. The message describes
    the input, so that the failure can be reproduced.
    """
