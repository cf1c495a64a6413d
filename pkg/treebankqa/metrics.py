#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: attachment scores against gold
# Created: 06.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License
"""
Accuracy of an annotation against gold, counted over all tokens (punctuation
included):

* **UAS** - same head
* **LAS** - same head and same base afun
* **FULL** - same head and same afun including affixes

A label match is only counted on a matching edge, so for every sentence
``full_hits <= las_hits <= uas_hits <= n_tokens``.
"""
import logging
from dataclasses import dataclass

from treebankqa.stats import SentenceStat
from treebankqa.treebank import check_parallel

logger = logging.getLogger(__name__)

METRICS = ('uas', 'las', 'full')


@dataclass(frozen=True)
class SentenceScore:
    sent_id: str
    n_tokens: int
    uas_hits: int
    las_hits: int
    full_hits: int

    def hits(self, metric):
        return getattr(self, metric + '_hits')


@dataclass(frozen=True)
class ScoreReport:
    """ Per-sentence hit counts of one annotation, scores are micro-averages
    in percent.
    """
    doc_id: str
    sentences: tuple

    @property
    def n_tokens(self):
        return sum(s.n_tokens for s in self.sentences)

    def total(self, metric):
        return sum(s.hits(metric) for s in self.sentences)

    def score(self, metric):
        tokens = self.n_tokens
        if tokens == 0:
            return 0.
        return 100. * self.total(metric) / tokens

    @property
    def uas(self):
        return self.score('uas')

    @property
    def las(self):
        return self.score('las')

    @property
    def full(self):
        return self.score('full')

    @property
    def scores(self):
        return self.uas, self.las, self.full

    def sentence_stats(self, metric, group=''):
        """ Resampling units for :mod:`treebankqa.stats`, one per sentence. """
        if metric not in METRICS:
            raise ValueError("unknown metric '%s', use one of %s." % (metric, ", ".join(METRICS)))
        return [SentenceStat("%s/%s" % (self.doc_id, s.sent_id), s.hits(metric), s.n_tokens, group)
                for s in self.sentences if s.n_tokens]


def attachment_scores(ann, gold):
    """ Score annotation `ann` against `gold`.

    :param ann: annotated :class:`~treebankqa.treebank.Document`
    :param gold: parallel gold :class:`~treebankqa.treebank.Document`
    :returns: :class:`ScoreReport`
    :raises DocumentMismatchError: non-parallel documents
    """
    check_parallel(ann, gold)
    sentences = []
    for sa, sg in zip(ann.sentences, gold.sentences):
        uas = las = full = 0
        for ta, tg in zip(sa.tokens, sg.tokens):
            if ta.head != tg.head:
                continue
            uas += 1
            if ta.afun == tg.afun:
                las += 1
                if ta.label == tg.label:
                    full += 1
        sentences.append(SentenceScore(sa.sent_id, len(sa), uas, las, full))
    report = ScoreReport(ann.doc_id, tuple(sentences))
    logger.debug("scored '%s' against '%s': UAS %.2f LAS %.2f FULL %.2f",
                 ann.doc_id, gold.doc_id, *report.scores)
    return report


def average_scores(reports):
    """ Unweighted mean of the report-level percentages, every report (one
    annotator) counts equally.

    :returns: ``(mean_uas, mean_las, mean_full)``
    :raises ValueError: empty `reports`
    """
    reports = list(reports)
    if not reports:
        raise ValueError("average_scores() needs at least one report.")
    count = float(len(reports))
    return tuple(sum(report.score(metric) for report in reports) / count for metric in METRICS)
