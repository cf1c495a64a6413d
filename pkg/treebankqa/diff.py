#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: token-wise comparison of parallel annotations
# Created: 04.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License
"""
Diff of two parallel annotations of the same text, the input of gold-standard
adjudication.
"""
from collections import Counter
from dataclasses import dataclass

from treebankqa.treebank import check_parallel

KINDS = ('head', 'label', 'both')


@dataclass(frozen=True)
class Disagreement:
    sent_id: str
    token_id: int
    form: str
    kind: str
    a_head: int
    a_label: str
    b_head: int
    b_label: str

    @property
    def a_value(self):
        return self.a_head, self.a_label

    @property
    def b_value(self):
        return self.b_head, self.b_label


@dataclass(frozen=True)
class DisagreementReport:
    a_id: str
    b_id: str
    entries: tuple
    tokens: int

    @property
    def summary(self):
        """ Entry count per kind, all kinds present. """
        counts = Counter(entry.kind for entry in self.entries)
        return {kind: counts.get(kind, 0) for kind in KINDS}

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __bool__(self):
        return bool(self.entries)


def diff_annotations(a, b):
    """ List every token whose head or full label differs between `a` and `b`.

    :raises DocumentMismatchError: `a` and `b` are not parallel
    """
    check_parallel(a, b)
    entries = []
    for sa, sb in zip(a.sentences, b.sentences):
        for ta, tb in zip(sa.tokens, sb.tokens):
            same_head = ta.head == tb.head
            same_label = ta.label == tb.label
            if same_head and same_label:
                continue
            if not same_head and not same_label:
                kind = 'both'
            elif same_head:
                kind = 'label'
            else:
                kind = 'head'
            entries.append(Disagreement(sa.sent_id, ta.id, ta.form, kind,
                                        ta.head, str(ta.label), tb.head, str(tb.label)))
    return DisagreementReport(a.doc_id, b.doc_id, tuple(entries), a.token_count)
