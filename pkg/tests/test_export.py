#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: test export module
# Created: 09.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License

import json
import unittest

from treebankqa import export
from treebankqa.chart import PlotSeries
from treebankqa.diff import diff_annotations
from treebankqa.errors import DesignError, LedgerError
from treebankqa.experiment import generate_design, time_summary, PRE_PARSED
from treebankqa.lint import run_checks, default_ruleset
from treebankqa.metrics import attachment_scores

from helpers import CONFORMANT_ROWS, make_document, relabel

LEDGER = """annotator\ttask\tmode\tdataset\tminutes
a1\tno_supp\tpre-parsed\tD1\t66
a1\tno_supp\tfrom-scratch\tD2\t150
a2\tno_supp\tpre-parsed\tD1\t125.5

a2\tno_supp\tfrom-scratch\tD2\t231
"""


def adv_under_noun():
    return make_document('auction', relabel(CONFORMANT_ROWS, 6, label='Adv'))


class TestTSV(unittest.TestCase):
    def test_write(self):
        self.assertEqual(export.write_tsv(('a', 'b'), [(1, 'x y')]), "a\tb\n1\tx y\n")

    def test_read(self):
        rows = export.read_tsv("a\tb\n1\t2\n\n3\t4\n", ('a', 'b'))
        self.assertEqual(rows, [(2, {'a': '1', 'b': '2'}), (4, {'a': '3', 'b': '4'})])

    def test_wrong_header(self):
        self.assertRaises(ValueError, export.read_tsv, "x\ty\n", ('a', 'b'))
        self.assertRaises(LedgerError, export.read_tsv, "", ('a', 'b'), LedgerError)

    def test_wrong_column_count(self):
        with self.assertRaises(ValueError) as cm:
            export.read_tsv("a\tb\n1\n", ('a', 'b'))
        self.assertIn("line 2", str(cm.exception))


class TestFindings(unittest.TestCase):
    def test_tsv_read_back(self):
        findings = run_checks(adv_under_noun(), default_ruleset())
        text = export.findings_tsv(findings)
        self.assertTrue(text.startswith("\t".join(export.FINDING_HEADER) + "\n"))
        self.assertEqual(export.read_findings(text), findings)

    def test_jsonl(self):
        findings = run_checks(adv_under_noun(), default_ruleset())
        lines = export.findings_jsonl(findings).splitlines()
        self.assertEqual(len(lines), len(findings))
        record = json.loads(lines[0])
        self.assertEqual(record['form'], 'benefiční')
        self.assertEqual(record['label'], 'Adv')

    def test_text(self):
        findings = run_checks(adv_under_noun(), default_ruleset())
        self.assertTrue(export.findings_text(findings).startswith("s1:7 G2.noun-dependent-atr [warning]"))


class TestScores(unittest.TestCase):
    def setUp(self):
        gold = make_document('gold', CONFORMANT_ROWS)
        self.report = attachment_scores(adv_under_noun(), gold)

    def test_tsv_total_row(self):
        lines = export.score_report_tsv(self.report).splitlines()
        self.assertEqual(lines[0], "sent_id\tn_tokens\tuas_hits\tlas_hits\tfull_hits")
        self.assertEqual(lines[-1], "TOTAL\t9\t9\t8\t8")

    def test_dict(self):
        data = export.score_report_dict(self.report)
        self.assertAlmostEqual(data['las'], 800. / 9)
        self.assertEqual(data['sentences'][0]['full_hits'], 8)

    def test_table(self):
        text = export.score_table(self.report)
        self.assertIn("88.9", text)
        self.assertEqual(text.splitlines()[0].split(), ['doc', 'tokens', 'UAS', 'LAS', 'FULL'])


class TestDiff(unittest.TestCase):
    def test_diff_tsv(self):
        report = diff_annotations(make_document('a', CONFORMANT_ROWS), adv_under_noun())
        self.assertEqual(export.diff_tsv(report).splitlines()[1], "s1\t7\tbenefiční\tlabel\t8\tAtr\t8\tAdv")


class TestDesign(unittest.TestCase):
    def test_read_back(self):
        design = generate_design(4)
        self.assertEqual(export.read_design(export.design_tsv(design)), design)

    def test_bad_mode(self):
        text = "annotator\tpair\ttask\tmode\tdataset\na1\t1\tno_supp\tsideways\tD1\n"
        self.assertRaises(DesignError, export.read_design, text)

    def test_bad_pair(self):
        text = "annotator\tpair\ttask\tmode\tdataset\na1\tone\tno_supp\tpre-parsed\tD1\n"
        self.assertRaises(DesignError, export.read_design, text)

    def test_text_grid(self):
        lines = export.design_table_text(generate_design(4)).splitlines()
        self.assertEqual(lines[0].split()[:3], ['Task', 'no_supp', 'no_supp'])
        self.assertEqual(lines[2].split()[:3], ['Data', 'D1', 'D2'])
        self.assertEqual(lines[3].split()[:3], ['pre-parsed', 'a1', 'a3'])
        self.assertEqual(lines[4].split()[:2], ['a2', 'a4'])


class TestLedger(unittest.TestCase):
    def test_read(self):
        ledger = export.read_ledger(LEDGER)
        self.assertEqual(len(ledger), 4)
        self.assertEqual(ledger.entries[2].minutes, 125.5)
        self.assertEqual(time_summary(ledger).mean('no_supp', PRE_PARSED), 95.75)

    def test_read_back(self):
        ledger = export.read_ledger(LEDGER)
        self.assertEqual(export.read_ledger(export.ledger_tsv(ledger)).entries, ledger.entries)

    def test_non_positive_minutes(self):
        with self.assertRaises(LedgerError) as cm:
            export.read_ledger(LEDGER.replace("\t66\n", "\t0\n"))
        self.assertIn("line 2", str(cm.exception))

    def test_not_a_number(self):
        self.assertRaises(LedgerError, export.read_ledger, LEDGER.replace("\t66\n", "\tmany\n"))

    def test_unknown_mode(self):
        self.assertRaises(LedgerError, export.read_ledger, LEDGER.replace("pre-parsed", "pre", 1))

    def test_missing_header(self):
        self.assertRaises(LedgerError, export.read_ledger, "\n".join(LEDGER.splitlines()[1:]))

    def test_time_outputs(self):
        summary = time_summary(export.read_ledger(LEDGER))
        text = export.time_table_text(summary)
        self.assertIn("95.75", text)
        tsv = export.time_summary_tsv(summary).splitlines()
        self.assertIn("no_supp\tpre-parsed\t95.7500", tsv)
        self.assertEqual(tsv[-1], "ratio\tall\t%.2f" % (381. / 191.5))
        self.assertEqual(export.time_summary_dict(summary)['task_ratios']['no_supp'], summary.task_ratios['no_supp'])


class TestPlotData(unittest.TestCase):
    def test_rows(self):
        text = export.plotdata_tsv([PlotSeries('time', 'no_supp', ((1, 117.75), (2, 200.25)))])
        self.assertEqual(text.splitlines(), ["figure\tseries\tx\ty", "time\tno_supp\t1\t117.75",
                                             "time\tno_supp\t2\t200.25"])


if __name__ == '__main__':
    unittest.main()
