#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: node fields addressable by rule conditions
# Created: 05.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License
"""
Rule conditions address fields of a node and of its (effective) parent. Each
field has a kind, the kind decides which operators and values are legal.

========== ==================================== =========================
kind       operators                            values
========== ==================================== =========================
afun       ``= != in not-in ~ !~``              inventory afuns, globs
string     ``= != in not-in ~ !~``              any token, globs
label      ``= != in not-in``                   labels with affixes
affixes    ``= !=``                             ``none`` or ``_Co_P`` ...
member     ``= !=``                             ``none | Co | Ap``
bool       ``= !=``                             ``yes | no``
integer    ``= != < <= > >=``                   decimal integers
afun-set   ``has lacks``                        inventory afuns
========== ==================================== =========================
"""

COORD_AFUNS = frozenset(['Coord', 'Apos'])

node_fields = {
    'afun': 'afun',
    'label': 'label',
    'affixes': 'affixes',
    'member': 'member',
    'parenthesis': 'bool',
    'ellipsis': 'bool',
    'pos': 'string',
    'tag': 'string',
    'lemma': 'string',
    'form': 'string',
}

governor_fields = dict(node_fields)
governor_fields['is_root'] = 'bool'

fields = dict(node_fields)
fields.update({
    'id': 'integer',
    'depth': 'integer',
    'children': 'integer',
    'is_last': 'bool',
    'ancestors': 'afun-set',
})
for prefix in ('parent', 'eparent'):
    for name, kind in governor_fields.items():
        fields[prefix + '.' + name] = kind

operators = {
    'afun': frozenset(['=', '!=', 'in', 'not in', '~', '!~']),
    'string': frozenset(['=', '!=', 'in', 'not in', '~', '!~']),
    'label': frozenset(['=', '!=', 'in', 'not in']),
    'affixes': frozenset(['=', '!=']),
    'member': frozenset(['=', '!=']),
    'bool': frozenset(['=', '!=']),
    'integer': frozenset(['=', '!=', '<', '<=', '>', '>=']),
    'afun-set': frozenset(['has', 'lacks']),
}

BOOL_VALUES = {'yes': True, 'no': False}
NONE_VALUE = 'none'


def effective_parent(sentence, token):
    """ Governor of `token` once coordination and apposition heads are skipped
    for members (``_Co``, ``_Ap``); `None` stands for the technical root.
    """
    node = token
    while node.label.member is not None:
        parent = sentence.parent(node)
        if parent is None or parent.afun not in COORD_AFUNS:
            break
        node = parent
    return sentence.parent(node)


def token_value(token, name):
    """ Value of node field `name` for `token`, `None` stands for the root. """
    if token is None:
        return None
    if name == 'afun':
        return token.afun
    elif name == 'label':
        return str(token.label)
    elif name == 'affixes':
        return token.affixes.suffix or NONE_VALUE
    elif name == 'member':
        return token.label.member or NONE_VALUE
    elif name == 'parenthesis':
        return token.affixes.parenthesis
    elif name == 'ellipsis':
        return token.affixes.ellipsis
    elif name == 'pos':
        return token.pos
    return getattr(token, name)


class NodeView(object):
    """ Field access for one token of a sentence, computed lazily. """
    def __init__(self, sentence, token):
        self.sentence = sentence
        self.token = token
        self._eparent = False

    @property
    def eparent(self):
        if self._eparent is False:
            self._eparent = effective_parent(self.sentence, self.token)
        return self._eparent

    def get(self, name):
        if '.' in name:
            prefix, name = name.split('.', 1)
            governor = self.sentence.parent(self.token) if prefix == 'parent' else self.eparent
            if name == 'is_root':
                return governor is None
            return token_value(governor, name)
        if name == 'id':
            return self.token.id
        elif name == 'depth':
            return self.sentence.depth(self.token)
        elif name == 'children':
            return len(self.sentence.children(self.token.id))
        elif name == 'is_last':
            return self.token.id == len(self.sentence)
        elif name == 'ancestors':
            return frozenset(node.afun for node in self.sentence.ancestors(self.token))
        return token_value(self.token, name)
