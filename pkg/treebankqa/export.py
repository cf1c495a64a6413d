#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: TSV, JSON and text table output
# Created: 09.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License
"""
Serialization of results. Every TSV file starts with a fixed header line,
columns are separated by TAB, lines end with ``\\n``. Design tables and timing
ledgers are also read back from TSV.
"""
import csv
import io
import json

from treebankqa.errors import DesignError, LedgerError
from treebankqa.experiment import Assignment, DesignTable, TimingEntry, TimingLedger, MODES
from treebankqa.lint import Finding
from treebankqa.utils import percent

FINDING_HEADER = ('rule_id', 'group', 'severity', 'sent_id', 'token_id', 'form', 'label', 'head', 'message')
SCORE_HEADER = ('sent_id', 'n_tokens', 'uas_hits', 'las_hits', 'full_hits')
DESIGN_HEADER = ('annotator', 'pair', 'task', 'mode', 'dataset')
LEDGER_HEADER = ('annotator', 'task', 'mode', 'dataset', 'minutes')
DIFF_HEADER = ('sent_id', 'token_id', 'form', 'kind', 'a_head', 'a_label', 'b_head', 'b_label')
PLOT_HEADER = ('figure', 'series', 'x', 'y')


def write_tsv(header, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter='\t', lineterminator='\n', quoting=csv.QUOTE_MINIMAL)
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def read_tsv(text, header, error=ValueError):
    """ Rows of TSV `text` as dicts, the first line must equal `header`.

    :returns: list of ``(lineno, row)``
    """
    reader = csv.reader(io.StringIO(text), delimiter='\t')
    try:
        first = next(reader)
    except StopIteration:
        raise error("empty file, expected header: %s" % " ".join(header))
    if tuple(first) != tuple(header):
        raise error("line 1: expected header '%s', got '%s'" % (" ".join(header), " ".join(first)))
    rows = []
    for row in reader:
        if not row or not any(cell.strip() for cell in row):
            continue
        if len(row) != len(header):
            raise error("line %d: expected %d columns, got %d" % (reader.line_num, len(header), len(row)))
        rows.append((reader.line_num, dict(zip(header, row))))
    return rows


def to_json(data):
    return json.dumps(data, indent=2, ensure_ascii=False) + '\n'


def to_jsonl(records):
    return ''.join(json.dumps(record, ensure_ascii=False) + '\n' for record in records)


def findings_tsv(findings):
    return write_tsv(FINDING_HEADER, ([getattr(f, name) for name in FINDING_HEADER] for f in findings))


def findings_jsonl(findings):
    return to_jsonl(f.as_dict() for f in findings)


def read_findings(text):
    return [Finding(**dict(row, token_id=int(row['token_id']), head=int(row['head'])))
            for _, row in read_tsv(text, FINDING_HEADER)]


def findings_text(findings):
    return ''.join("%s:%d %s [%s] %s\n" % (f.sent_id, f.token_id, f.rule_id, f.severity, f.message)
                   for f in findings)


def score_report_tsv(report):
    """ One row per sentence, a final ``TOTAL`` row. """
    rows = [(s.sent_id, s.n_tokens, s.uas_hits, s.las_hits, s.full_hits) for s in report.sentences]
    rows.append(('TOTAL', report.n_tokens, report.total('uas'), report.total('las'), report.total('full')))
    return write_tsv(SCORE_HEADER, rows)


def score_report_dict(report):
    return {'doc_id': report.doc_id, 'n_tokens': report.n_tokens,
            'uas': report.uas, 'las': report.las, 'full': report.full,
            'sentences': [{'sent_id': s.sent_id, 'n_tokens': s.n_tokens, 'uas_hits': s.uas_hits,
                           'las_hits': s.las_hits, 'full_hits': s.full_hits}
                          for s in report.sentences]}


def diff_tsv(report):
    return write_tsv(DIFF_HEADER, ([getattr(e, name) for name in DIFF_HEADER] for e in report))


def design_tsv(design):
    return write_tsv(DESIGN_HEADER, ((r.annotator, r.pair, r.task, r.mode, r.dataset) for r in design))


def read_design(text):
    """ :raises DesignError: malformed design table """
    rows = []
    for lineno, row in read_tsv(text, DESIGN_HEADER, DesignError):
        if row['mode'] not in MODES:
            raise DesignError("line %d: unknown mode '%s'" % (lineno, row['mode']))
        try:
            pair = int(row['pair'])
        except ValueError:
            raise DesignError("line %d: pair must be an integer" % lineno)
        rows.append(Assignment(row['annotator'], pair, row['task'], row['mode'], row['dataset']))
    return DesignTable(rows)


def ledger_tsv(ledger):
    return write_tsv(LEDGER_HEADER, ((e.annotator, e.task, e.mode, e.dataset, "%g" % e.minutes)
                                     for e in ledger))


def read_ledger(text):
    """ :raises LedgerError: malformed ledger, unknown mode or non-positive minutes """
    entries = []
    for lineno, row in read_tsv(text, LEDGER_HEADER, LedgerError):
        try:
            minutes = float(row['minutes'])
        except ValueError:
            raise LedgerError("line %d: minutes '%s' is not a number" % (lineno, row['minutes']))
        if row['mode'] not in MODES:
            raise LedgerError("line %d: unknown mode '%s'" % (lineno, row['mode']))
        try:
            entries.append(TimingEntry(row['annotator'], row['task'], row['mode'], row['dataset'], minutes))
        except LedgerError as e:
            raise LedgerError("line %d: %s" % (lineno, e))
    return TimingLedger(entries)


def plotdata_tsv(series):
    rows = []
    for s in series:
        for x, y in s.points:
            rows.append((s.figure, s.name, x, "%.6g" % y))
    return write_tsv(PLOT_HEADER, rows)


def text_table(header, rows):
    """ Render `rows` as a left aligned plain text table. """
    rows = [[str(cell) for cell in row] for row in rows]
    widths = [len(str(h)) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip(),
             "  ".join('-' * w for w in widths)]
    lines.extend("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows)
    return '\n'.join(lines) + '\n'


def score_table(report):
    return text_table(('doc', 'tokens', 'UAS', 'LAS', 'FULL'),
                      [(report.doc_id, report.n_tokens, percent(report.uas), percent(report.las),
                        percent(report.full))])


def agreement_table(results):
    """ `results`: list of ``(label, AgreementResult)`` """
    return text_table(('set-up', 'kind', 'kappa', 'p0', 'pe', 'aP', 'aL', 'aF', 'n'),
                      [(label, r.kind, "%.4f" % r.kappa, "%.4f" % r.p0, "%.4f" % r.pe,
                        r.a_p, r.a_l, r.a_f, r.n) for label, r in results])


def design_table_text(design):
    """ Data distribution grid: one column per dataset, annotators of each
    mode listed below.
    """
    columns = []
    for task in design.tasks:
        datasets = list(dict.fromkeys(r.dataset for r in design.rows if r.task == task))
        for dataset in datasets:
            columns.append((task, dataset))
    rows = [['Data'] + [dataset for _, dataset in columns]]
    for mode in MODES:
        cells = [[r.annotator for r in design.rows
                  if (r.task, r.dataset, r.mode) == (task, dataset, mode)] for task, dataset in columns]
        height = max([len(cell) for cell in cells] + [1])
        for i in range(height):
            label = mode if i == 0 else ''
            rows.append([label] + [cell[i] if i < len(cell) else '' for cell in cells])
    return text_table(['Task'] + [task for task, _ in columns], rows)


def time_table_text(summary):
    """ Minutes per task and annotator in both modes, means and ratios. """
    rows = []
    for task, ratio in summary.task_ratios.items():
        pre = dict(summary.values.get((task, MODES[0]), ()))
        scratch = dict(summary.values.get((task, MODES[1]), ()))
        for annotator in dict.fromkeys(list(pre) + list(scratch)):
            rows.append((task, annotator, "%g" % pre[annotator] if annotator in pre else '-',
                         "%g" % scratch[annotator] if annotator in scratch else '-', ''))
        rows.append((task, 'mean', _fixed(summary.mean(task, MODES[0])),
                     _fixed(summary.mean(task, MODES[1])), _fixed(ratio)))
    rows.append(('all', 'mean', _fixed(summary.mode_means.get(MODES[0])),
                 _fixed(summary.mode_means.get(MODES[1])), _fixed(summary.overall_ratio)))
    return text_table(('task', 'annotator', MODES[0], MODES[1], 'ratio'), rows)


def _fixed(value):
    return '-' if value is None else "%.2f" % value


def time_summary_tsv(summary):
    rows = [(task, mode, "%.4f" % minutes) for (task, mode), minutes in summary.setup_means.items()]
    rows.extend(('ratio', task, _fixed(ratio)) for task, ratio in summary.task_ratios.items())
    rows.append(('ratio', 'all', _fixed(summary.overall_ratio)))
    return write_tsv(('task', 'mode', 'mean_minutes'), rows)


def time_summary_dict(summary):
    return {
        'setups': [{'task': task, 'mode': mode, 'mean_minutes': minutes}
                   for (task, mode), minutes in summary.setup_means.items()],
        'mode_means': summary.mode_means,
        'task_ratios': summary.task_ratios,
        'overall_ratio': summary.overall_ratio,
    }
