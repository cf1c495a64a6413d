#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: annotation experiment design, timing and cost extrapolation
# Created: 08.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License
"""
Support for the annotation experiment workflow:

* balanced assignment of datasets to annotator pairs, tasks and modes
  (:func:`generate_design`, :func:`verify_design`)
* timing ledger, mean times and from-scratch/pre-parsed ratios
  (:func:`time_summary`)
* linear extrapolation of annotation hours and cost
  (:func:`extrapolate_hours`, :func:`extrapolation_report`)
* gold adjudication input merged from several annotations
  (:func:`adjudication_bundle`)
* dataset similarity profile (:func:`dataset_profile`)
"""
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations

from treebankqa.diff import diff_annotations
from treebankqa.errors import DesignError, LedgerError
from treebankqa.treebank import check_parallel
from treebankqa.utils import mean

logger = logging.getLogger(__name__)

TASKS = ('no_supp', 'rules', 'annot', 'rul_annot')
BASELINE_TASK = TASKS[0]
PRE_PARSED = 'pre-parsed'
FROM_SCRATCH = 'from-scratch'
MODES = (PRE_PARSED, FROM_SCRATCH)


def _check_mode(mode):
    if mode not in MODES:
        raise ValueError("unknown mode '%s', use one of %s." % (mode, ", ".join(MODES)))


@dataclass(frozen=True)
class Assignment:
    annotator: str
    pair: int
    task: str
    mode: str
    dataset: str


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str

    def __str__(self):
        return "%s: %s" % (self.kind, self.message)


class DesignTable(object):
    """ Assignment of datasets to (annotator, task, mode). One row per
    annotator and set-up.
    """
    __slots__ = ['rows']

    def __init__(self, rows):
        self.rows = tuple(rows)

    def _ordered(self, attr):
        return list(dict.fromkeys(getattr(row, attr) for row in self.rows))

    @property
    def annotators(self):
        return self._ordered('annotator')

    @property
    def tasks(self):
        return self._ordered('task')

    @property
    def datasets(self):
        return self._ordered('dataset')

    @property
    def pairs(self):
        """ pair number -> annotators of the pair (first occurrence order) """
        result = defaultdict(list)
        for row in self.rows:
            if row.annotator not in result[row.pair]:
                result[row.pair].append(row.annotator)
        return dict(result)

    def cell(self, task, mode):
        return [row for row in self.rows if row.task == task and row.mode == mode]

    def assignment(self, annotator, task, mode):
        for row in self.rows:
            if (row.annotator, row.task, row.mode) == (annotator, task, mode):
                return row
        return None

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        return isinstance(other, DesignTable) and self.rows == other.rows

    def __repr__(self):
        return "DesignTable(%d rows)" % len(self.rows)


def generate_design(annotators, n_tasks=len(TASKS), n_datasets=2 * len(TASKS), tasks=None):
    """ Balanced design: stable pairs of consecutive annotators, two datasets
    per task; for task `t` pair `p` annotates dataset ``D(2t + p%2 + 1)``
    pre-parsed and the other dataset of the task from scratch.

    :param annotators: list of annotator names or their count (named
      ``a1 ... an``)
    :param int n_tasks: number of tasks
    :param int n_datasets: number of datasets, must be ``2 * n_tasks``
    :param tasks: task names, default :data:`TASKS` (``task5`` ... beyond)
    :returns: :class:`DesignTable`
    :raises DesignError: odd annotator count or dataset shortfall
    """
    if isinstance(annotators, int):
        annotators = ["a%d" % (i + 1) for i in range(annotators)]
    annotators = list(annotators)
    if len(annotators) < 2 or len(annotators) % 2:
        raise DesignError("pairing infeasible: %d annotators, an even count >= 2 is required."
                          % len(annotators))
    if len(set(annotators)) != len(annotators):
        raise DesignError("duplicate annotator names.")
    if n_tasks < 1:
        raise DesignError("at least one task is required.")
    if n_datasets != 2 * n_tasks:
        raise DesignError("%d tasks need %d datasets, got %d." % (n_tasks, 2 * n_tasks, n_datasets))
    if tasks is None:
        tasks = list(TASKS[:n_tasks]) + ["task%d" % (i + 1) for i in range(len(TASKS), n_tasks)]
    elif len(tasks) != n_tasks:
        raise DesignError("%d task names given for %d tasks." % (len(tasks), n_tasks))

    pairs = [annotators[i:i + 2] for i in range(0, len(annotators), 2)]
    rows = []
    for t, task in enumerate(tasks):
        for mode in MODES:
            for p, members in enumerate(pairs):
                offset = p % 2 if mode == PRE_PARSED else (p + 1) % 2
                dataset = "D%d" % (2 * t + offset + 1)
                for annotator in members:
                    rows.append(Assignment(annotator, p + 1, task, mode, dataset))
    design = DesignTable(rows)
    logger.debug("generated design: %d annotators, %d tasks, %d rows", len(annotators), n_tasks, len(design))
    return design


def verify_design(d):
    """ Check the balance constraints of design table `d`.

    :returns: list of :class:`Violation`, empty for a balanced design
    """
    violations = []
    seen = Counter((row.annotator, row.dataset) for row in d.rows)
    for (annotator, dataset), count in seen.items():
        if count > 1:
            violations.append(Violation(
                "annotator repeats dataset",
                "%s annotates %s %d times" % (annotator, dataset, count)))

    pair_of = defaultdict(set)
    for row in d.rows:
        pair_of[row.annotator].add(row.pair)
    for annotator, pairs in pair_of.items():
        if len(pairs) > 1:
            violations.append(Violation(
                "unstable pair",
                "%s is a member of pairs %s" % (annotator, ", ".join(str(p) for p in sorted(pairs)))))

    members = d.pairs
    for task in d.tasks:
        for mode in MODES:
            cell = d.cell(task, mode)
            for pair, names in sorted(members.items()):
                rows = [row for row in cell if row.pair == pair]
                missing = [name for name in names if name not in {row.annotator for row in rows}]
                if missing:
                    violations.append(Violation(
                        "set-up coverage",
                        "pair {%s} does not annotate task %s in %s mode"
                        % (",".join(names), task, mode)))
                elif len({row.dataset for row in rows}) > 1:
                    violations.append(Violation(
                        "pair dataset mismatch",
                        "pair {%s} annotates different datasets in task %s, %s mode"
                        % (",".join(names), task, mode)))

    totals = Counter(row.dataset for row in d.rows)
    if len(set(totals.values())) > 1:
        violations.append(Violation(
            "dataset balance",
            "datasets are annotated unequally often: %s"
            % ", ".join("%s=%d" % item for item in sorted(totals.items()))))
    # an odd number of pairs can not split evenly between the modes
    tolerance = 0 if len(members) % 2 == 0 else 2
    for dataset in d.datasets:
        modes = Counter(row.mode for row in d.rows if row.dataset == dataset)
        if abs(modes[PRE_PARSED] - modes[FROM_SCRATCH]) > tolerance:
            violations.append(Violation(
                "mode balance",
                "%s is annotated %d times pre-parsed and %d times from scratch"
                % (dataset, modes[PRE_PARSED], modes[FROM_SCRATCH])))
    return violations


@dataclass(frozen=True)
class TimingEntry:
    annotator: str
    task: str
    mode: str
    dataset: str
    minutes: float

    def __post_init__(self):
        if not self.minutes > 0:
            raise LedgerError("non-positive time %r for %s, %s, %s."
                              % (self.minutes, self.annotator, self.task, self.mode))
        _check_mode(self.mode)


class TimingLedger(object):
    """ Measured annotation times in minutes, one entry per annotator and
    dataset.
    """
    __slots__ = ['entries']

    def __init__(self, entries=()):
        self.entries = tuple(entries)

    def select(self, task=None, mode=None):
        return [e for e in self.entries
                if (task is None or e.task == task) and (mode is None or e.mode == mode)]

    @property
    def tasks(self):
        return list(dict.fromkeys(e.task for e in self.entries))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class TimeSummary:
    """ Means are minutes per dataset. A ratio is `None` where one of the two
    modes is absent.
    """
    setup_means: dict
    mode_means: dict
    task_ratios: dict
    overall_ratio: float
    values: dict = field(repr=False)

    def mean(self, task, mode):
        return self.setup_means.get((task, mode))


def ordered_tasks(names):
    """ `names` in :data:`TASKS` order, other task names sorted after them. """
    names = set(names)
    known = [task for task in TASKS if task in names]
    return known + sorted(names.difference(TASKS), key=lambda name: (len(name), name))


def savings_setups(tasks):
    """ The two set-ups compared by the savings figure: the baseline task
    from scratch against the last of `tasks` pre-parsed.

    :returns: ``((task, mode), (task, mode))``
    """
    tasks = ordered_tasks(tasks)
    if not tasks:
        raise ValueError("no tasks.")
    return (BASELINE_TASK, FROM_SCRATCH), (tasks[-1], PRE_PARSED)


def time_summary(ledger):
    """ Mean minutes per set-up and per mode, ratios from-scratch/pre-parsed.

    :raises LedgerError: empty ledger or non-positive minutes
    """
    entries = list(ledger)
    if not entries:
        raise LedgerError("empty timing ledger.")
    collected = defaultdict(list)
    for entry in entries:
        if not entry.minutes > 0:
            raise LedgerError("non-positive time %r for %s." % (entry.minutes, entry.annotator))
        collected[(entry.task, entry.mode)].append((entry.annotator, entry.minutes))
    tasks = ordered_tasks(task for task, _ in collected)
    values = {(task, mode): sorted(collected[(task, mode)])
              for task in tasks for mode in MODES if (task, mode) in collected}
    setup_means = {key: mean([m for _, m in items]) for key, items in values.items()}
    mode_means = {}
    for mode in MODES:
        minutes = [m for key, items in values.items() if key[1] == mode for _, m in items]
        if minutes:
            mode_means[mode] = mean(minutes)
    task_ratios = {}
    for task in tasks:
        pre = setup_means.get((task, PRE_PARSED))
        scratch = setup_means.get((task, FROM_SCRATCH))
        task_ratios[task] = scratch / pre if pre and scratch else None
    if len(mode_means) == 2:
        overall = mode_means[FROM_SCRATCH] / mode_means[PRE_PARSED]
    else:
        overall = None
    return TimeSummary(setup_means, mode_means, task_ratios, overall, values)


def extrapolate_hours(mean_minutes_per_dataset, tokens_per_dataset, target_tokens):
    """ Hours needed to annotate `target_tokens` at the measured pace.

    :raises ValueError: zero or negative input
    """
    for name, value in (('mean minutes', mean_minutes_per_dataset),
                        ('tokens per dataset', tokens_per_dataset),
                        ('target tokens', target_tokens)):
        if not value > 0:
            raise ValueError("%s must be positive, got %r." % (name, value))
    return mean_minutes_per_dataset * target_tokens / (tokens_per_dataset * 60.)


@dataclass(frozen=True)
class ExtrapolationReport:
    task: str
    mode: str
    mean_minutes: float
    tokens_per_dataset: int
    target_tokens: int
    hours: float
    passes: int = 1
    hourly_rate: float = None

    @property
    def total_hours(self):
        """ Hours for all annotation passes (2 for double annotation). """
        return self.hours * self.passes

    @property
    def cost(self):
        if self.hourly_rate is None:
            return None
        return self.total_hours * self.hourly_rate

    def as_dict(self):
        return {'task': self.task, 'mode': self.mode, 'mean_minutes': self.mean_minutes,
                'tokens_per_dataset': self.tokens_per_dataset, 'target_tokens': self.target_tokens,
                'hours': self.hours, 'passes': self.passes, 'total_hours': self.total_hours,
                'hourly_rate': self.hourly_rate, 'cost': self.cost}

    def __str__(self):
        text = ("%s, %s: %.2f min per %d tokens -> %.0f h for %d tokens"
                % (self.task, self.mode, self.mean_minutes, self.tokens_per_dataset,
                   self.hours, self.target_tokens))
        if self.passes != 1:
            text += ", %d passes %.0f h" % (self.passes, self.total_hours)
        if self.cost is not None:
            text += ", cost %.2f" % self.cost
        return text


def extrapolation_report(summary, task, mode, tokens_per_dataset, target_tokens, passes=1,
                         hourly_rate=None):
    """ Extrapolate the mean time of set-up (`task`, `mode`) of `summary`.

    :param summary: :class:`TimeSummary`
    :param int passes: annotation passes per token (2 = double annotation)
    :param hourly_rate: cost per hour, no cost if `None`
    """
    _check_mode(mode)
    minutes = summary.mean(task, mode)
    if minutes is None:
        raise LedgerError("no timing entries for %s in %s mode." % (task, mode))
    if passes < 1:
        raise ValueError("passes must be >= 1.")
    if hourly_rate is not None and hourly_rate < 0:
        raise ValueError("hourly rate must not be negative.")
    hours = extrapolate_hours(minutes, tokens_per_dataset, target_tokens)
    return ExtrapolationReport(task, mode, minutes, tokens_per_dataset, target_tokens, hours,
                               passes, hourly_rate)


def savings(a, b):
    """ Hours saved by set-up `b` against set-up `a` (all passes). """
    return a.total_hours - b.total_hours


@dataclass(frozen=True)
class AdjudicationEntry:
    """ A token the annotations do not agree on. `votes` lists
    ``((head, label), annotators)`` by decreasing support.
    """
    sent_id: str
    token_id: int
    form: str
    votes: tuple

    @property
    def split(self):
        return tuple(len(names) for _, names in self.votes)


@dataclass(frozen=True)
class AdjudicationBundle:
    names: tuple
    entries: tuple
    matrix: tuple
    pairs: dict = field(repr=False)
    tokens: int = 0

    def __len__(self):
        return len(self.entries)

    def __bool__(self):
        return bool(self.entries)


def adjudication_bundle(annotations):
    """ Merge parallel annotations for gold adjudication.

    :param annotations: mapping of annotator name to
      :class:`~treebankqa.treebank.Document`, or a list of documents
    :returns: :class:`AdjudicationBundle` with one entry per token the
      annotations disagree on and the matrix of pairwise agreeing token counts
    :raises ValueError: less than two annotations
    :raises DocumentMismatchError: non-parallel annotations
    """
    if not isinstance(annotations, dict):
        annotations = dict(enumerate(annotations))
    names = tuple(annotations)
    if len(names) < 2:
        raise ValueError("adjudication needs at least two annotations.")
    docs = [annotations[name] for name in names]
    for doc in docs[1:]:
        check_parallel(docs[0], doc)

    entries = []
    for sentences in zip(*(doc.sentences for doc in docs)):
        for tokens in zip(*(s.tokens for s in sentences)):
            groups = defaultdict(list)
            for name, token in zip(names, tokens):
                groups[(token.head, str(token.label))].append(name)
            if len(groups) > 1:
                votes = sorted(((value, tuple(members)) for value, members in groups.items()),
                               key=lambda vote: -len(vote[1]))
                entries.append(AdjudicationEntry(sentences[0].sent_id, tokens[0].id,
                                                 tokens[0].form, tuple(votes)))

    pairs = {}
    tokens = docs[0].token_count
    matrix = [[tokens] * len(names) for _ in names]
    for i, j in combinations(range(len(names)), 2):
        report = diff_annotations(docs[i], docs[j])
        pairs[(names[i], names[j])] = report
        matrix[i][j] = matrix[j][i] = tokens - len(report)
    logger.info("adjudication of %d annotations: %d disputed tokens", len(names), len(entries))
    return AdjudicationBundle(names, tuple(entries), tuple(tuple(row) for row in matrix), pairs, tokens)


@dataclass(frozen=True)
class DatasetProfile:
    doc_id: str
    sentences: int
    tokens: int
    mean_sentence_length: float
    mean_depth: float

    def as_dict(self):
        return {'doc_id': self.doc_id, 'sentences': self.sentences, 'tokens': self.tokens,
                'mean_sentence_length': self.mean_sentence_length, 'mean_depth': self.mean_depth}


def dataset_profile(doc):
    """ Size and shape of a dataset for similarity balancing; `mean_depth`
    is the mean of the per-sentence tree depths.
    """
    if not len(doc):
        return DatasetProfile(doc.doc_id, 0, 0, 0., 0.)
    return DatasetProfile(doc.doc_id, len(doc), doc.token_count,
                          float(doc.token_count) / len(doc),
                          mean([sentence.max_depth() for sentence in doc.sentences]))
