#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: consolidated experiment report
# Created: 11.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License
"""
Consolidated report of an annotation experiment bundle.

A bundle is a directory::

    design.tsv                          design table
    timing.tsv                          timing ledger
    gold/<dataset>.tsv                  adjudicated gold annotations
    annotations/<annotator>/<dataset>.tsv
    parser/<dataset>.tsv                optional pre-annotation (parser output)

The report has an accuracy section (mean over annotators, bootstrap standard
deviation of the pooled set-up, p-value against ``no_supp`` in the same mode),
a kappa section, a time section, an extrapolation and plot data series.
"""
import logging
from dataclasses import dataclass, field
from pathlib import Path

from treebankqa import export
from treebankqa.agreement import KINDS, pairwise_agreement
from treebankqa.chart import PlotSeries
from treebankqa.errors import BundleError
from treebankqa.experiment import (MODES, BASELINE_TASK, dataset_profile, extrapolation_report, savings,
                                   savings_setups, time_summary)
from treebankqa.label import default_inventory
from treebankqa.metrics import METRICS, attachment_scores, average_scores
from treebankqa.stats import DEFAULT_SAMPLES, SentenceStat, bootstrap_stddev, permutation_test, regroup
from treebankqa.treebank import read_document
from treebankqa.utils import format_p_value, percent

logger = logging.getLogger(__name__)

DEFAULT_TARGET_TOKENS = 2000000
SECTIONS = ('accuracy', 'kappa', 'time', 'extrapolation')


@dataclass
class ExperimentBundle:
    design: object
    ledger: object
    gold: dict
    annotations: dict  # (annotator, dataset) -> Document
    parser: dict = field(default_factory=dict)


def _find_gold(gold, doc, dataset):
    if dataset in gold:
        return gold[dataset]
    if doc.doc_id in gold:
        return gold[doc.doc_id]
    for candidate in gold.values():
        if candidate.sent_ids == doc.sent_ids:
            return candidate
    return None


def load_bundle(path, inventory=None):
    """ Read an experiment bundle directory.

    :raises BundleError: listing every missing component
    """
    inventory = inventory or default_inventory()
    root = Path(path)
    missing = []
    design = ledger = None
    if (root / 'design.tsv').is_file():
        design = export.read_design((root / 'design.tsv').read_text(encoding='utf-8'))
    else:
        missing.append('design table')
    if (root / 'timing.tsv').is_file():
        ledger = export.read_ledger((root / 'timing.tsv').read_text(encoding='utf-8'))
    else:
        missing.append('timing ledger')

    def read_dir(directory):
        return {p.stem: read_document(p, inventory) for p in sorted(directory.glob('*.tsv'))}

    gold = read_dir(root / 'gold') if (root / 'gold').is_dir() else {}
    if not gold:
        missing.append('gold annotations')
    annotations = {}
    if (root / 'annotations').is_dir():
        for directory in sorted(p for p in (root / 'annotations').iterdir() if p.is_dir()):
            for dataset, doc in read_dir(directory).items():
                annotations[(directory.name, dataset)] = doc
    if not annotations:
        missing.append('annotations')
    elif design is not None:
        for row in design:
            if (row.annotator, row.dataset) not in annotations:
                missing.append('annotations/%s/%s.tsv' % (row.annotator, row.dataset))
    if gold and design is not None:
        for dataset in design.datasets:
            if dataset not in gold:
                missing.append('gold/%s.tsv' % dataset)
    if missing:
        raise BundleError(missing)
    parser = read_dir(root / 'parser') if (root / 'parser').is_dir() else {}
    logger.info("loaded bundle %s: %d annotations, %d gold datasets", root, len(annotations), len(gold))
    return ExperimentBundle(design, ledger, gold, annotations, parser)


@dataclass(frozen=True)
class AccuracyCell:
    """ Scores in percent, `stddev` in percentage points. """
    task: str
    mode: str
    metric: str
    mean: float
    stddev: float
    p_value: float = None


@dataclass(frozen=True)
class KappaCell:
    task: str
    mode: str
    kind: str
    result: object


@dataclass
class ExperimentReport:
    accuracy: list
    kappa: list
    time: object
    extrapolation: list
    savings: float = None
    parser: tuple = None
    profiles: list = field(default_factory=list)
    samples: int = 0
    seed: int = 0
    unit: str = 'sentence'

    def accuracy_cell(self, task, mode, metric):
        for cell in self.accuracy:
            if (cell.task, cell.mode, cell.metric) == (task, mode, metric):
                return cell
        return None

    def kappa_cell(self, task, mode, kind):
        for cell in self.kappa:
            if (cell.task, cell.mode, cell.kind) == (task, mode, kind):
                return cell
        return None

    @property
    def sections(self):
        return [name for name in SECTIONS if getattr(self, name)]

    def plot_series(self, figure=None):
        """ Plot data series, all figures or only `figure`
        (``'accuracy' | 'kappa' | 'time' | 'extrapolation'``).
        """
        series = []
        baseline = [cell for cell in self.accuracy if cell.task == BASELINE_TASK]
        if self.parser is not None:
            series.append(PlotSeries('accuracy', 'parser', tuple(zip(METRICS, self.parser))))
        for mode in MODES:
            points = tuple((c.metric, c.mean) for c in baseline if c.mode == mode)
            if points:
                series.append(PlotSeries('accuracy', "%s %s" % (BASELINE_TASK, mode), points))
        tasks = list(dict.fromkeys(cell.task for cell in self.kappa))
        for mode in MODES:
            for kind in KINDS:
                points = tuple((task, self.kappa_cell(task, mode, kind).result.kappa) for task in tasks
                               if self.kappa_cell(task, mode, kind) is not None)
                if points:
                    series.append(PlotSeries('kappa', "%s %s" % (kind, mode), points))
        for (task, mode), values in self.time.values.items():
            series.append(PlotSeries('time', "%s %s" % (task, mode), tuple(values)))
        if self.extrapolation:
            series.append(PlotSeries('extrapolation', 'hours', tuple(
                ("%s %s" % (r.task, r.mode), r.total_hours) for r in self.extrapolation)))
        if figure is not None:
            series = [s for s in series if s.figure == figure]
        return series

    def as_dict(self):
        return {
            'samples': self.samples, 'seed': self.seed, 'unit': self.unit,
            'accuracy': [{'task': c.task, 'mode': c.mode, 'metric': c.metric, 'mean': c.mean,
                          'stddev': c.stddev, 'p_value': c.p_value} for c in self.accuracy],
            'parser': None if self.parser is None else dict(zip(METRICS, self.parser)),
            'kappa': [dict(c.result.as_dict(), task=c.task, mode=c.mode) for c in self.kappa],
            'time': export.time_summary_dict(self.time),
            'extrapolation': [r.as_dict() for r in self.extrapolation],
            'savings': self.savings,
            'profiles': [p.as_dict() for p in self.profiles],
        }

    def to_text(self):
        parts = ["Accuracy (mean over annotators, +- bootstrap SD)\n"]
        rows = []
        for task in dict.fromkeys(c.task for c in self.accuracy):
            for mode in MODES:
                cells = [self.accuracy_cell(task, mode, metric) for metric in METRICS]
                if any(cell is None for cell in cells):
                    continue
                rows.append([task, mode] + [_accuracy_text(c) for c in cells])
        if self.parser is not None:
            rows.append(['parser', '-'] + [percent(value) for value in self.parser])
        parts.append(export.text_table(('task', 'mode', 'UAS', 'LAS', 'FULL'), rows))
        parts.append("\nAgreement (Cohen's kappa, mean over pairs)\n")
        rows = []
        for task in dict.fromkeys(c.task for c in self.kappa):
            for mode in MODES:
                cells = [self.kappa_cell(task, mode, kind) for kind in KINDS]
                if all(cell is not None for cell in cells):
                    rows.append([task, mode] + ["%.2f" % c.result.kappa for c in cells])
        parts.append(export.text_table(('task', 'mode') + KINDS, rows))
        parts.append("\nTime (minutes)\n")
        parts.append(export.time_table_text(self.time))
        parts.append("\nExtrapolation\n")
        parts.extend(str(r) + '\n' for r in self.extrapolation)
        if self.savings is not None:
            parts.append("savings: %.0f h\n" % self.savings)
        return ''.join(parts)


def _accuracy_text(cell):
    text = "%s +-%s" % (percent(cell.mean), percent(cell.stddev, 2))
    if cell.p_value is not None:
        text += " " + format_p_value(cell.p_value)
    return text


def _setup_reports(bundle, task, mode):
    reports = []
    for row in bundle.design.cell(task, mode):
        doc = bundle.annotations[(row.annotator, row.dataset)]
        gold = _find_gold(bundle.gold, doc, row.dataset)
        reports.append((row.annotator, attachment_scores(doc, gold)))
    return reports


def _pooled_stats(reports, metric, unit):
    stats = []
    for annotator, report in reports:
        stats.extend(report.sentence_stats(metric, group=annotator))
    # unit ids must not collide between annotators of the same dataset
    stats = [SentenceStat("%s:%s" % (s.group, s.unit_id), s.hits, s.tokens, s.group) for s in stats]
    return regroup(stats, unit)


def build_report(bundle, samples=DEFAULT_SAMPLES, seed=0, workers=1, unit='sentence',
                 tokens_per_dataset=None, target_tokens=DEFAULT_TARGET_TOKENS, passes=1,
                 hourly_rate=None, inventory=None, count_root=False):
    """ Compute all report sections of `bundle`.

    :param int samples: bootstrap and permutation replicates
    :param int seed: master seed of all resampling
    :param tokens_per_dataset: default is the mean token count of the gold
      datasets
    :param bool count_root: count the technical root into the sentence size
      of the kappa chance agreement
    :returns: :class:`ExperimentReport`
    """
    inventory = inventory or default_inventory()
    design = bundle.design
    tasks = design.tasks
    setup_reports = {(task, mode): _setup_reports(bundle, task, mode) for task in tasks for mode in MODES}

    accuracy = []
    for mode in MODES:
        baseline = setup_reports.get((BASELINE_TASK, mode))
        for task in tasks:
            reports = setup_reports[(task, mode)]
            if not reports:
                continue
            means = average_scores(report for _, report in reports)
            for metric, value in zip(METRICS, means):
                stats = _pooled_stats(reports, metric, unit)
                stddev = bootstrap_stddev(stats, samples, seed, workers).stddev * 100.
                p_value = None
                if task != BASELINE_TASK and baseline:
                    p_value = permutation_test(stats, _pooled_stats(baseline, metric, unit),
                                               samples, seed, workers).p_value
                accuracy.append(AccuracyCell(task, mode, metric, value, stddev, p_value))
    accuracy.sort(key=lambda c: (tasks.index(c.task), MODES.index(c.mode)))

    kappa = []
    for task in tasks:
        for mode in MODES:
            cell = design.cell(task, mode)
            if not cell:
                continue
            docs = {row.annotator: bundle.annotations[(row.annotator, row.dataset)] for row in cell}
            pairs = [tuple(members) for _, members in sorted(design.pairs.items())
                     if all(name in docs for name in members) and len(members) == 2]
            if not pairs:
                continue
            for kind in KINDS:
                kappa.append(KappaCell(task, mode, kind,
                                       pairwise_agreement(docs, kind, pairs, inventory, count_root)))

    parser = None
    if bundle.parser:
        reports = []
        for dataset, doc in sorted(bundle.parser.items()):
            gold = _find_gold(bundle.gold, doc, dataset)
            if gold is None:
                raise BundleError(['gold/%s.tsv' % dataset])
            reports.append(attachment_scores(doc, gold))
        parser = average_scores(reports)

    summary = time_summary(bundle.ledger)
    if tokens_per_dataset is None:
        tokens_per_dataset = sum(doc.token_count for doc in bundle.gold.values()) / float(len(bundle.gold))
    extrapolation = []
    for task in summary.task_ratios:
        for mode in MODES:
            if summary.mean(task, mode) is not None:
                extrapolation.append(extrapolation_report(summary, task, mode, tokens_per_dataset,
                                                          target_tokens, passes, hourly_rate))
    saved = None
    selected = {(r.task, r.mode): r for r in extrapolation}
    worst_setup, best_setup = savings_setups(tasks)
    if worst_setup in selected and best_setup in selected:
        saved = savings(selected[worst_setup], selected[best_setup])

    profiles = [dataset_profile(bundle.gold[name]) for name in sorted(bundle.gold)]
    return ExperimentReport(accuracy, kappa, summary, extrapolation, saved, parser, profiles,
                            samples, seed, unit)
