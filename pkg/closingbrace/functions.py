# Metabrace
# Exact computations with finite metacyclic groups and their rational group
# algebras.
#
# Copyright (c) 2021 The Metabrace authors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

import re
from closingbrace.canonical import CanonicalPParams
from closingbrace.metacyclicerror import GroupLiteralError
from closingbrace.presentation import MetacyclicPresentation

_HEAD = re.compile(r"\s*(mcp|mc)\s*\(")
_NUMBER = re.compile(r"\s*([+-]?\d+)\s*")
_ARITY = {"mc": 4, "mcp": 6}


def _scan_arguments(literal, position, count):
    """Scan `count` comma separated integers and the closing parenthesis,
    starting at `position`.

    Returns:
        A list of (value, position) pairs and the position after the
        closing parenthesis.
    """
    values = []
    for index in range(count):
        match = _NUMBER.match(literal, position)
        if not match:
            raise GroupLiteralError("Expected an integer", _skip(literal,
                position))
        values.append((int(match.group(1)), match.start(1)))
        position = match.end()
        closing = ")" if index == count - 1 else ","
        if position >= len(literal) or literal[position] != closing:
            if (closing == "," and position < len(literal)
                    and literal[position] == ")"):
                raise GroupLiteralError("Expected {0} arguments, got {1}".
                        format(count, index + 1), position)
            raise GroupLiteralError("Expected '{0}'".format(closing),
                    position)
        position += 1
    return values, position


def _skip(literal, position):
    while position < len(literal) and literal[position].isspace():
        position += 1
    return position


def parse_group_literal(literal):
    """Parse a group literal.

    `mc(m,n,s,r)` stands for ⟨a, b | a^m = 1, b^n = a^s, a^b = a^r⟩,
    with s and r taken modulo m. `mcp(p,mu,nu,sigma,rho,eps)` stands for
    a canonical tuple of a metacyclic p-group. Whitespace between tokens
    is allowed.

    Args:
        literal (str): The literal to parse.

    Returns:
        A MetacyclicPresentation for `mc(...)`, a CanonicalPParams for
        `mcp(...)`.

    Raises:
        GroupLiteralError: When the literal cannot be parsed; the error
                           carries the position of the offending
                           character.
    """
    head = _HEAD.match(literal)
    if not head:
        raise GroupLiteralError("Expected 'mc(' or 'mcp('",
                _skip(literal, 0))
    kind = head.group(1)
    values, position = _scan_arguments(literal, head.end(), _ARITY[kind])
    rest = _skip(literal, position)
    if rest != len(literal):
        raise GroupLiteralError("Unexpected text after literal", rest)
    if kind == "mcp":
        eps, eps_position = values[5]
        if eps not in (1, -1):
            raise GroupLiteralError("epsilon must be 1 or -1", eps_position)
        return CanonicalPParams(*(value for value, _ in values))
    for value, at in values[:2]:
        if value < 1:
            raise GroupLiteralError("m and n must be positive", at)
    m, n, s, r = (value for value, _ in values)
    return MetacyclicPresentation(m, n, s % m, r % m)


def as_presentation(group):
    """Return the presentation of a parsed literal."""
    if isinstance(group, CanonicalPParams):
        return group.lower()
    return group
