#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: package definition file
# Created: 02.03.2026
# License: MIT License
# Copyright (c) 2026  treebankqa developers

"""
Quality assurance and evaluation of PDT-style dependency treebank annotation.

Every token of a sentence, punctuation included, is a node of a dependency
tree; every edge carries an analytical function (*afun*) optionally
complemented with affixes for coordination or apposition members, parenthesis
and ellipsis. treebankqa checks such annotations against declarative
consistency rules, scores them against gold data, measures inter-annotator
agreement, estimates the uncertainty and significance of score differences,
and supports the design and cost evaluation of annotation experiments.

a simple example::

    import treebankqa

    inventory = treebankqa.default_inventory()
    doc = treebankqa.read_document('D1.tsv', inventory)
    for finding in treebankqa.run_checks(doc, treebankqa.default_ruleset()):
        print(finding.message)

    report = treebankqa.attachment_scores(doc, treebankqa.read_document('gold/D1.tsv', inventory))
    print(report.uas, report.las, report.full)

"""
from .version import __version__, version
VERSION = __version__

__author__ = "treebankqa developers"

from treebankqa.label import AfunInventory, AffixSet, Label, default_inventory, get_inventory
from treebankqa.treebank import (Token, AnnotatedSentence, Document, parse_document, serialize_document,
                                 read_document, write_document, validate_tree)
from treebankqa.diff import diff_annotations
from treebankqa.lint import load_ruleset, default_ruleset, run_checks, explain_finding
from treebankqa.metrics import attachment_scores, average_scores
from treebankqa.agreement import unlabeled_kappa, labeled_kappa, full_kappa, pairwise_agreement
from treebankqa.stats import SentenceStat, bootstrap_stddev, permutation_test, exact_permutation_test
from treebankqa.experiment import (generate_design, verify_design, time_summary, extrapolate_hours,
                                   extrapolation_report, adjudication_bundle, dataset_profile)
