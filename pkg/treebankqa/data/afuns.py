#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: label affix data
# Created: 02.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License

# afun + affix: member slot (_Co | _Ap), parenthesis (_P), ellipsis (_E)
AFFIX_SLOTS = 3
MEMBER_FORMS = frozenset(['Co', 'Ap'])
PARENTHESIS = 'P'
ELLIPSIS = 'E'
