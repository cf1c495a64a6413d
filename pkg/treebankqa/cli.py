#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: command line interface
# Created: 12.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License
"""
``treebankqa <subcommand> [options]``

Exit codes: 0 success, 1 findings or violations present, 2 usage or I/O
error.
"""
import argparse
import logging
import os
import sys

from treebankqa import export
from treebankqa.agreement import KINDS, compute_kappa
from treebankqa.chart import PlotSeries, save_svg
from treebankqa.diff import diff_annotations
from treebankqa.experiment import (MODES, TASKS, extrapolation_report, generate_design, savings,
                                   savings_setups, time_summary, verify_design)
from treebankqa.lint import run_checks
from treebankqa.metrics import METRICS, attachment_scores
from treebankqa.params import Parameter
from treebankqa.report import DEFAULT_TARGET_TOKENS, build_report, load_bundle
from treebankqa.stats import (DEFAULT_SAMPLES, UNITS, bootstrap_stddev, permutation_test,
                              regroup)
from treebankqa.treebank import read_document
from treebankqa.utils import percent, format_p_value
from treebankqa.version import __version__

logger = logging.getLogger('treebankqa')

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_USAGE = 2
FORMATS = ('table', 'tsv', 'json', 'plotdata')


class UsageError(Exception):
    pass


def common_options():
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group('common options')
    group.add_argument('--format', choices=FORMATS, default='table', help="output format (default: table)")
    group.add_argument('--inventory', metavar='FILE', help="afun inventory file")
    group.add_argument('--rules', metavar='FILE', help="rule file")
    group.add_argument('--seed', type=int, default=None, help="master seed of randomized computations")
    group.add_argument('--samples', type=int, default=DEFAULT_SAMPLES,
                       help="bootstrap/permutation replicates (default: %(default)s)")
    group.add_argument('--unit', choices=UNITS, default='sentence', help="resampling unit")
    group.add_argument('--workers', type=int, default=1, help="threads for resampling")
    group.add_argument('-o', '--output', metavar='FILE', help="write output to FILE instead of stdout")
    group.add_argument('-v', '--verbose', action='count', default=0, help="more log output")
    group.add_argument('-q', '--quiet', action='store_true', help="log errors only")
    return parser


def build_parser():
    parent = common_options()
    parser = argparse.ArgumentParser(prog='treebankqa', description="Quality assurance and evaluation "
                                     "of dependency treebank annotation.")
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    commands = parser.add_subparsers(dest='command', metavar='<command>')
    commands.required = True

    p = commands.add_parser('check', parents=[parent], help="run consistency rules")
    p.add_argument('files', nargs='+', metavar='FILE')
    p.add_argument('--disable', action='append', default=[], metavar='GROUP', help="disable a rule group")
    p.set_defaults(func=cmd_check)

    p = commands.add_parser('score', parents=[parent], help="UAS/LAS/FULL against gold")
    p.add_argument('annotation')
    p.add_argument('gold')
    p.set_defaults(func=cmd_score)

    p = commands.add_parser('kappa', parents=[parent], help="inter-annotator agreement")
    p.add_argument('a')
    p.add_argument('b')
    p.add_argument('--kind', choices=KINDS + ('all', ), default='all')
    p.add_argument('--count-root', action='store_true', help="count the technical root into s_bar")
    p.set_defaults(func=cmd_kappa)

    p = commands.add_parser('stats', parents=[parent], help="bootstrap SD and permutation test")
    p.add_argument('annotation')
    p.add_argument('gold')
    p.add_argument('--baseline', metavar='FILE', help="annotation to test against")
    p.add_argument('--baseline-gold', metavar='FILE', help="gold of the baseline (default: gold)")
    p.set_defaults(func=cmd_stats)

    p = commands.add_parser('design', parents=[parent], help="generate a balanced design table")
    p.add_argument('--annotators', nargs='+', default=['4'], metavar='NAME',
                   help="annotator names or their count (default: 4)")
    p.add_argument('--tasks', type=int, default=len(TASKS))
    p.add_argument('--datasets', type=int, default=None, help="default: 2 * tasks")
    p.set_defaults(func=cmd_design)

    p = commands.add_parser('verify-design', parents=[parent], help="check a design table")
    p.add_argument('design')
    p.set_defaults(func=cmd_verify_design)

    p = commands.add_parser('time', parents=[parent], help="mean times and ratios of a timing ledger")
    p.add_argument('ledger')
    p.set_defaults(func=cmd_time)

    p = commands.add_parser('extrapolate', parents=[parent], help="extrapolate annotation hours")
    p.add_argument('ledger')
    p.add_argument('--task', default=None)
    p.add_argument('--mode', choices=MODES, default=None)
    p.add_argument('--tokens-per-dataset', type=float, default=1250)
    p.add_argument('--target', type=int, default=DEFAULT_TARGET_TOKENS, help="target token count")
    p.add_argument('--passes', type=int, default=1)
    p.add_argument('--rate', type=float, default=None, help="hourly rate for the cost estimate")
    p.set_defaults(func=cmd_extrapolate)

    p = commands.add_parser('diff', parents=[parent], help="token-wise differences of two annotations")
    p.add_argument('a')
    p.add_argument('b')
    p.set_defaults(func=cmd_diff)

    p = commands.add_parser('report', parents=[parent], help="consolidated experiment report")
    p.add_argument('bundle')
    p.add_argument('--figure', default=None, help="plotdata/chart: only this figure")
    p.add_argument('--chart', metavar='FILE', help="also write an SVG chart of the figure data")
    p.add_argument('--target', type=int, default=DEFAULT_TARGET_TOKENS)
    p.add_argument('--passes', type=int, default=1)
    p.add_argument('--count-root', action='store_true', help="count the technical root into s_bar")
    p.add_argument('--rate', type=float, default=None)
    p.set_defaults(func=cmd_report)
    return parser


def require_seed(args):
    if args.seed is None:
        if os.environ.get('CI'):
            raise UsageError("--seed is required in CI mode")
        args.seed = 0
    return args.seed


def require_format(args, *formats):
    if args.format not in formats:
        raise UsageError("format '%s' is not supported by '%s'" % (args.format, args.command))


def cmd_check(args, params):
    require_format(args, 'table', 'tsv', 'json')
    rules = params.rules
    if args.disable:
        rules = rules.without(*args.disable)
    findings = []
    for filename in args.files:
        findings.extend(check_file(filename, params, rules))
    if args.format == 'tsv':
        text = export.findings_tsv(findings)
    elif args.format == 'json':
        text = export.findings_jsonl(findings)
    else:
        text = export.findings_text(findings)
    errors = sum(1 for f in findings if f.severity == 'error')
    logger.info("%d findings, %d errors", len(findings), errors)
    return text, EXIT_FINDINGS if errors else EXIT_OK


def check_file(filename, params, rules):
    return run_checks(read_document(filename, params.inventory), rules)


def cmd_score(args, params):
    require_format(args, 'table', 'tsv', 'json')
    report = attachment_scores(read_document(args.annotation, params.inventory),
                               read_document(args.gold, params.inventory))
    if args.format == 'tsv':
        return export.score_report_tsv(report), EXIT_OK
    elif args.format == 'json':
        return export.to_json(export.score_report_dict(report)), EXIT_OK
    return export.score_table(report), EXIT_OK


def cmd_kappa(args, params):
    require_format(args, 'table', 'json')
    a = read_document(args.a, params.inventory)
    b = read_document(args.b, params.inventory)
    kinds = KINDS if args.kind == 'all' else (args.kind, )
    results = [compute_kappa(kind, a, b, params.inventory, args.count_root) for kind in kinds]
    if args.format == 'json':
        return export.to_json([r.as_dict() for r in results]), EXIT_OK
    return export.agreement_table([("%s/%s" % (a.doc_id, b.doc_id), r) for r in results]), EXIT_OK


def cmd_stats(args, params):
    require_format(args, 'table', 'tsv', 'json')
    seed = require_seed(args)
    gold = read_document(args.gold, params.inventory)
    report = attachment_scores(read_document(args.annotation, params.inventory), gold)
    baseline = None
    if args.baseline:
        baseline_gold = read_document(args.baseline_gold, params.inventory) if args.baseline_gold else gold
        baseline = attachment_scores(read_document(args.baseline, params.inventory), baseline_gold)
    rows = []
    for metric in METRICS:
        stats = regroup(report.sentence_stats(metric), args.unit)
        boot = bootstrap_stddev(stats, args.samples, seed, args.workers)
        perm = None
        if baseline is not None:
            perm = permutation_test(stats, regroup(baseline.sentence_stats(metric), args.unit),
                                    args.samples, seed, args.workers)
        rows.append((metric, boot, perm))
    if args.format == 'json':
        return export.to_json([dict(metric=metric, unit=args.unit, bootstrap=boot.as_dict(),
                                    permutation=perm.as_dict() if perm else None)
                               for metric, boot, perm in rows]), EXIT_OK
    if args.format == 'tsv':
        return export.write_tsv(
            ('metric', 'score', 'stddev', 'observed_diff', 'p_value', 'samples', 'seed'),
            [(metric, repr(boot.statistic), repr(boot.stddev),
              repr(perm.observed_diff) if perm else '', repr(perm.p_value) if perm else '',
              boot.samples, boot.seed) for metric, boot, perm in rows]), EXIT_OK
    return export.text_table(
        ('metric', 'score', 'SD', 'diff', 'p'),
        [(metric.upper(), percent(100 * boot.statistic), percent(100 * boot.stddev, 2),
          percent(100 * perm.observed_diff, 2) if perm else '-',
          format_p_value(perm.p_value) if perm else '-') for metric, boot, perm in rows]), EXIT_OK


def _annotator_arg(values):
    if len(values) == 1 and values[0].isdigit():
        return int(values[0])
    return values


def cmd_design(args, params):
    require_format(args, 'table', 'tsv')
    datasets = args.datasets if args.datasets is not None else 2 * args.tasks
    design = generate_design(_annotator_arg(args.annotators), args.tasks, datasets)
    if args.format == 'tsv':
        return export.design_tsv(design), EXIT_OK
    return export.design_table_text(design), EXIT_OK


def cmd_verify_design(args, params):
    require_format(args, 'table', 'json')
    with open(args.design, encoding='utf-8') as fp:
        design = export.read_design(fp.read())
    violations = verify_design(design)
    if args.format == 'json':
        text = export.to_json([{'kind': v.kind, 'message': v.message} for v in violations])
    else:
        text = ''.join(str(v) + '\n' for v in violations)
    return text, EXIT_FINDINGS if violations else EXIT_OK


def _read_ledger(filename):
    with open(filename, encoding='utf-8') as fp:
        return export.read_ledger(fp.read())


def cmd_time(args, params):
    summary = time_summary(_read_ledger(args.ledger))
    if args.format == 'tsv':
        return export.time_summary_tsv(summary), EXIT_OK
    elif args.format == 'json':
        return export.to_json(export.time_summary_dict(summary)), EXIT_OK
    elif args.format == 'plotdata':
        return export.plotdata_tsv([PlotSeries('time', "%s %s" % key, tuple(values))
                                    for key, values in summary.values.items()]), EXIT_OK
    return export.time_table_text(summary), EXIT_OK


def cmd_extrapolate(args, params):
    require_format(args, 'table', 'json')
    summary = time_summary(_read_ledger(args.ledger))
    setups = [(task, mode) for task in summary.task_ratios for mode in MODES
              if summary.mean(task, mode) is not None
              and args.task in (None, task) and args.mode in (None, mode)]
    if not setups:
        raise UsageError("no timing entries for the selected set-up")
    reports = [extrapolation_report(summary, task, mode, args.tokens_per_dataset, args.target,
                                    args.passes, args.rate) for task, mode in setups]
    saved = None
    selected = {(r.task, r.mode): r for r in reports}
    worst_setup, best_setup = savings_setups(summary.task_ratios)
    worst, best = selected.get(worst_setup), selected.get(best_setup)
    if worst is not None and best is not None and worst is not best:
        saved = savings(worst, best)
    if args.format == 'json':
        return export.to_json({'extrapolations': [r.as_dict() for r in reports], 'savings': saved}), EXIT_OK
    text = ''.join(str(r) + '\n' for r in reports)
    if saved is not None:
        text += "savings %s %s -> %s %s: %.0f h\n" % (worst.task, worst.mode, best.task, best.mode, saved)
    return text, EXIT_OK


def cmd_diff(args, params):
    require_format(args, 'table', 'tsv')
    report = diff_annotations(read_document(args.a, params.inventory),
                              read_document(args.b, params.inventory))
    if args.format == 'tsv':
        text = export.diff_tsv(report)
    else:
        text = ''.join("%s:%d %s %s: %s/%s vs %s/%s\n" % (e.sent_id, e.token_id, e.form, e.kind,
                                                          e.a_head, e.a_label, e.b_head, e.b_label)
                       for e in report)
        text += "%s\n" % ", ".join("%s=%d" % item for item in report.summary.items())
    return text, EXIT_FINDINGS if report else EXIT_OK


def cmd_report(args, params):
    seed = require_seed(args)
    bundle = load_bundle(args.bundle, params.inventory)
    report = build_report(bundle, args.samples, seed, args.workers, args.unit,
                          target_tokens=args.target, passes=args.passes, hourly_rate=args.rate,
                          inventory=params.inventory, count_root=params.count_root)
    if args.chart:
        save_svg(report.plot_series(args.figure or 'time'), args.chart, title=args.figure or 'time')
    if args.format == 'plotdata':
        return export.plotdata_tsv(report.plot_series(args.figure)), EXIT_OK
    elif args.format == 'json':
        return export.to_json(report.as_dict()), EXIT_OK
    elif args.format == 'tsv':
        return export.write_tsv(('task', 'mode', 'metric', 'mean', 'stddev', 'p_value'),
                                [(c.task, c.mode, c.metric, repr(c.mean), repr(c.stddev),
                                  '' if c.p_value is None else repr(c.p_value))
                                 for c in report.accuracy]), EXIT_OK
    return report.to_text(), EXIT_OK


def setup_logging(args):
    if args.quiet:
        level = logging.ERROR
    elif args.verbose >= 2:
        level = logging.DEBUG
    elif args.verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s:%(name)s: %(message)s")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args)
    try:
        params = Parameter(inventory_path=args.inventory, rules_path=args.rules,
                           count_root=getattr(args, 'count_root', False))
        text, status = args.func(args, params)
    except (ValueError, UsageError, OSError) as e:
        sys.stderr.write("treebankqa %s: error: %s\n" % (args.command, e))
        return EXIT_USAGE
    if args.output:
        with open(args.output, mode='w', encoding='utf-8', newline='\n') as fp:
            fp.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == '__main__':
    sys.exit(main())
