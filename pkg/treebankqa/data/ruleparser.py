#!/usr/bin/env python
# coding:utf-8
# Author:  treebankqa developers
# Purpose: rule condition grammar using re module
# Created: 05.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License

__all__ = ["is_valid_condition", "split_condition", "split_values"]

import re

field_name = r"[a-z_]+(\.[a-z_]+)?"
symbol_op = r"(!=|<=|>=|!~|=|<|>|~)"
word_op = r"((?<=\s)(not\s+in|in|has|lacks)(?=\s))"
token = r"[^\s,{}$]+"
set_reference = r"\$[A-Za-z_][\w-]*"
token_list = fr"\{{\s*{token}(\s*,\s*{token})*\s*\}}"
value = fr"({token_list}|{set_reference}|{token})"


def build_condition_parser():
    return fr"\s*(?P<field>{field_name})\s*(?P<op>{symbol_op}|{word_op})\s*(?P<value>{value})\s*"


condition_re = re.compile(build_condition_parser())


def is_valid(regex):
    reg = re.compile(regex)

    def f(term):
        return bool(reg.fullmatch(term))

    return f


is_valid_condition = is_valid(build_condition_parser())


def split_condition(term):
    """ Split condition `term` into ``(field, op, value)``, `None` if invalid. """
    result = condition_re.fullmatch(term)
    if result is None:
        return None
    op = " ".join(result.group('op').split())
    return result.group('field'), op, result.group('value')


def split_values(value):
    """ ``'{a, b}'`` -> ``['a', 'b']``, ``'a'`` -> ``['a']``. """
    if value.startswith('{'):
        return [item.strip() for item in value[1:-1].split(',')]
    return [value]
