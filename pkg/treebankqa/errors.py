#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: exception hierarchy
# Created: 02.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License
"""
All exceptions raised by treebankqa derive from :class:`TreebankError`, which
is a `ValueError`: every one of them signals bad input data or an impossible
request, never an internal failure.
"""


class TreebankError(ValueError):
    pass


class InventoryError(TreebankError):
    """ Invalid afun inventory (duplicates, malformed names). """


class LabelError(TreebankError):
    """ A label string that can not be decomposed into afun + affixes. """


class ParseError(TreebankError):
    """ Malformed annotation file.

    .. attribute:: lineno

       1-based line number of the offending line, `None` if not line bound.

    .. attribute:: category

       ``'format' | 'id' | 'afun' | 'head' | 'tree' | 'sent-id'``
    """
    def __init__(self, message, lineno=None, category='format', filename=None):
        self.message = message
        self.lineno = lineno
        self.category = category
        self.filename = filename
        super(ParseError, self).__init__(message)

    def __str__(self):
        location = []
        if self.filename is not None:
            location.append(str(self.filename))
        if self.lineno is not None:
            location.append("line %d" % self.lineno)
        prefix = ", ".join(location) + ": " if location else ""
        return "%s[%s] %s" % (prefix, self.category, self.message)


class DocumentMismatchError(TreebankError):
    """ Two documents do not cover the same sentences and tokens. """


class RuleSyntaxError(TreebankError):
    def __init__(self, message, lineno=None):
        self.message = message
        self.lineno = lineno
        if lineno is None:
            super(RuleSyntaxError, self).__init__(message)
        else:
            super(RuleSyntaxError, self).__init__("line %d: %s" % (lineno, message))


class UnknownRuleError(TreebankError):
    pass


class DegenerateAgreementError(TreebankError):
    """ Kappa is undefined for the given counts (p_e >= 1 or no common edges). """


class DesignError(TreebankError):
    pass


class LedgerError(TreebankError):
    pass


class BundleError(TreebankError):
    """ Incomplete experiment bundle.

    .. attribute:: missing

       list of the missing component names
    """
    def __init__(self, missing):
        self.missing = list(missing)
        super(BundleError, self).__init__("incomplete bundle, missing: %s" % ", ".join(self.missing))
