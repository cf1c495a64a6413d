#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: inter-annotator agreement (Cohen's kappa variants)
# Created: 06.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License
"""
Three variants of Cohen's kappa ``k = 1 - (1 - p0) / (1 - pe)`` for
dependency annotation, differing in the actual agreement `p0` and the chance
agreement `pe`:

=========== ================ ===============================
kind        p0               pe
=========== ================ ===============================
unlabeled   aP / n           1 / s_bar (average sentence size)
labeled     aL / aP          1 / inventory size
full        aF / aP          1 / (8 * inventory size)
=========== ================ ===============================

aP counts nodes with the same head, aL and aF count those of them with the
same base afun and the same full label. Labeled and full agreement only
consider the edges common to both annotations.

Kappa is computed on the pooled document (corpus level counts), never as a
mean of per-sentence kappas.
"""
import logging
from dataclasses import dataclass, field

from treebankqa.errors import DegenerateAgreementError
from treebankqa.label import default_inventory
from treebankqa.treebank import check_parallel

logger = logging.getLogger(__name__)

KINDS = ('unlabeled', 'labeled', 'full')


@dataclass(frozen=True)
class AgreementResult:
    kind: str
    kappa: float
    p0: float
    pe: float
    a_p: int
    a_l: int
    a_f: int
    n: int
    s_bar: float = None
    pairs: tuple = field(default=(), compare=False)

    def as_dict(self):
        result = {'kind': self.kind, 'kappa': self.kappa, 'p0': self.p0, 'pe': self.pe,
                  'a_p': self.a_p, 'a_l': self.a_l, 'a_f': self.a_f, 'n': self.n,
                  's_bar': self.s_bar}
        if self.pairs:
            result['pairs'] = [dict(pair.as_dict(), a=a, b=b) for a, b, pair in self.pairs]
        return result


def kappa(p0, pe):
    """ Cohen's kappa from actual agreement `p0` and chance agreement `pe`.

    :raises DegenerateAgreementError: `pe` >= 1
    """
    if pe >= 1.:
        raise DegenerateAgreementError("chance agreement p_e = %g, kappa is undefined." % pe)
    return 1. - (1. - p0) / (1. - pe)


def agreement_counts(a, b):
    """ ``(aP, aL, aF, n)`` of two parallel documents. """
    check_parallel(a, b)
    a_p = a_l = a_f = n = 0
    for sa, sb in zip(a.sentences, b.sentences):
        for ta, tb in zip(sa.tokens, sb.tokens):
            n += 1
            if ta.head != tb.head:
                continue
            a_p += 1
            if ta.afun == tb.afun:
                a_l += 1
            if ta.label == tb.label:
                a_f += 1
    return a_p, a_l, a_f, n


def unlabeled_kappa(a, b, count_root=False):
    """ Agreement on heads, chance agreement is the reciprocal of the average
    sentence size.

    :param bool count_root: count the technical root into the sentence size
    :raises DegenerateAgreementError: p_e >= 1 (average sentence size <= 1)
    """
    a_p, a_l, a_f, n = agreement_counts(a, b)
    if not len(a.sentences):
        raise DegenerateAgreementError("no sentences to compare.")
    s_bar = float(n + (len(a.sentences) if count_root else 0)) / len(a.sentences)
    if n == 0:
        raise DegenerateAgreementError("empty sentences, kappa is undefined.")
    p0 = float(a_p) / n
    pe = 1. / s_bar
    return AgreementResult('unlabeled', kappa(p0, pe), p0, pe, a_p, a_l, a_f, n, s_bar)


def _edge_kappa(kind, a, b, pe):
    a_p, a_l, a_f, n = agreement_counts(a, b)
    if a_p == 0:
        raise DegenerateAgreementError("no common edges, %s kappa is undefined." % kind)
    p0 = float(a_l if kind == 'labeled' else a_f) / a_p
    return AgreementResult(kind, kappa(p0, pe), p0, pe, a_p, a_l, a_f, n)


def labeled_kappa(a, b, inventory=None):
    """ Agreement on base afuns over the common edges, ``pe = 1/|inventory|``. """
    inventory = inventory or default_inventory()
    return _edge_kappa('labeled', a, b, 1. / inventory.size)


def full_kappa(a, b, inventory=None):
    """ Agreement on full labels over the common edges,
    ``pe = 1/(8 * |inventory|)``.
    """
    inventory = inventory or default_inventory()
    return _edge_kappa('full', a, b, 1. / inventory.full_label_space)


def compute_kappa(kind, a, b, inventory=None, count_root=False):
    if kind == 'unlabeled':
        return unlabeled_kappa(a, b, count_root)
    elif kind == 'labeled':
        return labeled_kappa(a, b, inventory)
    elif kind == 'full':
        return full_kappa(a, b, inventory)
    raise ValueError("unknown kappa kind '%s', use one of %s." % (kind, ", ".join(KINDS)))


def pairwise_agreement(annotations, kind, pairs=None, inventory=None, count_root=False):
    """ Kappa per annotator pair and their unweighted mean.

    :param annotations: mapping of name to :class:`~treebankqa.treebank.Document`,
      or a list of documents (names are the list positions)
    :param string kind: ``'unlabeled' | 'labeled' | 'full'``
    :param pairs: list of ``(name, name)``; default pairs consecutive
      annotations (first with second, third with fourth, ...)
    :returns: :class:`AgreementResult` holding the mean values, counts summed
      over the pairs, the per-pair results in `pairs`
    :raises ValueError: unpaired input or a pair naming a missing document
    """
    if not isinstance(annotations, dict):
        annotations = dict(enumerate(annotations))
    names = list(annotations)
    if pairs is None:
        if len(names) < 2 or len(names) % 2:
            raise ValueError("unpaired input: %d annotations, an even count >= 2 is required."
                             % len(names))
        pairs = [(names[i], names[i + 1]) for i in range(0, len(names), 2)]
    pairs = list(pairs)
    if not pairs:
        raise ValueError("no annotator pairs given.")
    results = []
    for a, b in pairs:
        for name in (a, b):
            if name not in annotations:
                raise ValueError("pair (%s, %s) references missing annotation '%s'." % (a, b, name))
        result = compute_kappa(kind, annotations[a], annotations[b], inventory, count_root)
        logger.debug("%s kappa %s-%s: %.4f", kind, a, b, result.kappa)
        results.append((a, b, result))

    count = float(len(results))

    def mean(attr):
        return sum(getattr(r, attr) for _, _, r in results) / count

    s_bar = mean('s_bar') if kind == 'unlabeled' else None
    return AgreementResult(
        kind, mean('kappa'), mean('p0'), mean('pe'),
        sum(r.a_p for _, _, r in results), sum(r.a_l for _, _, r in results),
        sum(r.a_f for _, _, r in results), sum(r.n for _, _, r in results),
        s_bar, tuple(results))
