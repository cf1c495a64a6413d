#!/usr/bin/env python
# coding:utf-8
# Author:  treebankqa developers
# Purpose: util functions
# Created: 08.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License
"""

.. autofunction:: mean

.. autofunction:: percent

.. autofunction:: format_p_value

"""


def mean(values):
    """
    Arithmetic mean of **values**.

    :raises ValueError: empty **values**
    """
    values = list(values)
    if not values:
        raise ValueError("mean of an empty sequence.")
    return sum(values) / float(len(values))


def percent(value, digits=1):
    """
    Format a percentage, ``None`` as ``'-'``.

    ========= ======================
    value     result (digits=1)
    ========= ======================
    ``96.5``  ``'96.5'``
    ``None``  ``'-'``
    ========= ======================

    """
    if value is None:
        return '-'
    return "%.*f" % (digits, value)


def format_p_value(p):
    """
    Format a p-value in percent, values below 0.1% as ``'p<0.1%'``.

    """
    if p is None:
        return '-'
    if p < 0.001:
        return 'p<0.1%'
    return "p=%.1f%%" % (100. * p)
