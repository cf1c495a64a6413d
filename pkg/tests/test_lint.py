#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: test lint module and the shipped rules
# Created: 05.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License

import unittest

from treebankqa.data.fields import NodeView, effective_parent
from treebankqa.errors import RuleSyntaxError, UnknownRuleError
from treebankqa.label import AfunInventory
from treebankqa.lint import Finding, load_ruleset, default_ruleset, run_checks, explain_finding, check_sentence
from treebankqa.treebank import Document

from helpers import CONFORMANT_ROWS, make_document, make_sentence, relabel

SMALL_RULES = """\
ruleset small

set copula = {být, bývat}

group A first group
rule A.one
    severity: error
    description: Atr on a verb
    expect: Atr depends on a noun
    when: afun = Atr
    when: eparent.pos = V

group B
rule B.one
    when: afun = Pnom
    when: eparent.lemma not in $copula
"""

# (group, violating rows, conforming rows)
COORDINATION = [
    ('Prší', 'pršet', 'V', 2, 'Pred_Co'),
    ('a', 'a', 'J', 0, 'Coord'),
    ('fouká', 'foukat', 'V', 2, 'Pred_Co'),
    ('.', '.', 'Z', 0, 'AuxK'),
]
APPOSITION = [
    ('Karel', 'Karel', 'N', 2, 'Denom_Ap'),
    (',', ',', 'Z', 0, 'Apos'),
    ('král', 'král', 'N', 2, 'Denom_Ap'),
    ('.', '.', 'Z', 0, 'AuxK'),
]
COPULA = [
    ('Jan', 'Jan', 'N', 2, 'Sb'),
    ('je', 'být', 'V', 0, 'Pred'),
    ('učitel', 'učitel', 'N', 2, 'Pnom'),
    ('.', '.', 'Z', 0, 'AuxK'),
]
EMBEDDED = [
    ('Myslím', 'myslet', 'V', 0, 'Pred'),
    ('že', 'že', 'J', 1, 'AuxC'),
    ('prší', 'pršet', 'V', 2, 'Pred_P'),
    ('.', '.', 'Z', 0, 'AuxK'),
]
PREPOSITION = [
    ('Bydlí', 'bydlet', 'V', 0, 'Pred'),
    ('v', 'v', 'R', 1, 'AuxP'),
    ('Praze', 'Praha', 'N', 2, 'Adv'),
    ('.', '.', 'Z', 0, 'AuxK'),
]
SIMPLE = [
    ('Petr', 'Petr', 'N', 2, 'Sb'),
    ('spí', 'spát', 'V', 0, 'Pred'),
    ('.', '.', 'Z', 0, 'AuxK'),
]
PUNCTUATION = [
    ('Prší', 'pršet', 'V', 0, 'Pred'),
    (',', ',', 'Z', 1, 'AuxX'),
    ('.', '.', 'Z', 0, 'AuxK'),
]

CATALOG = [
    ('G1', 'G1.atr-verb-parent', relabel(SIMPLE, 0, label='Atr'), SIMPLE),
    ('G2', 'G2.noun-dependent-atr', relabel(CONFORMANT_ROWS, 6, label='Adv'), CONFORMANT_ROWS),
    ('G3', 'G3.pnom-copula', relabel(COPULA, 1, lemma='mít'), COPULA),
    ('G3', 'G3.pnom-verb', relabel(COPULA, 2, head=1), COPULA),
    ('G4', 'G4.pred-embedded', relabel(EMBEDDED, 2, label='Pred'), EMBEDDED),
    ('G5', 'G5.root-afun', relabel(SIMPLE, 0, head=0), SIMPLE),
    ('G5', 'G5.root-auxk-final', PUNCTUATION[:1] + [('.', '.', 'Z', 0, 'AuxK'), (')', ')', 'Z', 1, 'AuxG')],
     PUNCTUATION),
    ('G6', 'G6.aux-punct-affix', relabel(PUNCTUATION, 1, label='AuxX_Co'), PUNCTUATION),
    ('G7', 'G7.auxk-no-affix', relabel(PUNCTUATION, 2, label='AuxK_P'), PUNCTUATION),
    ('G8', 'G8.co-under-coord', relabel(SIMPLE, 0, label='Sb_Co'), COORDINATION),
    ('G8', 'G8.ap-under-apos', relabel(SIMPLE, 0, label='Sb_Ap'), APPOSITION),
    ('G9', 'G9.auxp-governs', relabel(PREPOSITION, 2, head=1), PREPOSITION),
    ('G9', 'G9.auxc-governs', relabel(EMBEDDED, 2, head=1), EMBEDDED),
]


class TestLoadRuleset(unittest.TestCase):
    def test_empty_config(self):
        rules = load_ruleset("")
        self.assertEqual(len(rules), 0)
        self.assertEqual(rules.groups, ())

    def test_small_config(self):
        rules = load_ruleset(SMALL_RULES)
        self.assertEqual(rules.name, 'small')
        self.assertEqual(rules.group_ids, ['A', 'B'])
        self.assertEqual(rules.groups[0].title, 'first group')
        rule = rules.rule('A.one')
        self.assertEqual(rule.severity, 'error')
        self.assertEqual(rule.group, 'A')
        self.assertEqual(len(rule.conditions), 2)
        self.assertEqual(rules.rule('B.one').severity, 'warning')
        self.assertEqual(rules.sets['copula'], ['být', 'bývat'])

    def test_default_ruleset_has_nine_groups(self):
        rules = default_ruleset()
        self.assertEqual(rules.group_ids, ['G%d' % i for i in range(1, 10)])
        self.assertIs(default_ruleset(), rules)

    def test_catalog_rules_exist(self):
        rules = default_ruleset()
        for group, rule_id, _, _ in CATALOG:
            self.assertEqual(rules.rule(rule_id).group, group)

    def assertSyntaxError(self, text, lineno=None):
        with self.assertRaises(RuleSyntaxError) as cm:
            load_ruleset(text)
        if lineno is not None:
            self.assertEqual(cm.exception.lineno, lineno)
            self.assertIn("line %d" % lineno, str(cm.exception))

    def test_unknown_afun(self):
        self.assertSyntaxError("group G\nrule r\n    when: afun = Xyz\n", 3)

    def test_unknown_afun_in_list(self):
        self.assertSyntaxError("group G\nrule r\n    when: afun in {Atr, Xyz}\n", 3)

    def test_glob_matching_nothing(self):
        self.assertSyntaxError("group G\nrule r\n    when: afun ~ Xyz*\n", 3)

    def test_unknown_field(self):
        self.assertSyntaxError("group G\nrule r\n    when: colour = red\n", 3)

    def test_operator_not_allowed(self):
        self.assertSyntaxError("group G\nrule r\n    when: depth ~ 1*\n", 3)
        self.assertSyntaxError("group G\nrule r\n    when: afun < Atr\n", 3)

    def test_invalid_values(self):
        self.assertSyntaxError("group G\nrule r\n    when: depth = deep\n", 3)
        self.assertSyntaxError("group G\nrule r\n    when: is_last = maybe\n", 3)
        self.assertSyntaxError("group G\nrule r\n    when: member = Xx\n", 3)
        self.assertSyntaxError("group G\nrule r\n    when: affixes = _Co_Ap\n", 3)
        self.assertSyntaxError("group G\nrule r\n    when: label = Xyz_Co\n", 3)

    def test_in_needs_list(self):
        self.assertSyntaxError("group G\nrule r\n    when: afun in Atr\n", 3)
        self.assertSyntaxError("group G\nrule r\n    when: afun = {Atr, Adv}\n", 3)

    def test_undefined_set(self):
        self.assertSyntaxError("group G\nrule r\n    when: lemma in $copula\n", 3)

    def test_rule_outside_group(self):
        self.assertSyntaxError("rule r\n    when: afun = Atr\n", 1)

    def test_duplicate_rule_id(self):
        self.assertSyntaxError("group G\nrule r\n    when: afun = Atr\nrule r\n    when: afun = Sb\n")

    def test_rule_without_conditions(self):
        self.assertSyntaxError("group G\nrule r\n    severity: error\ngroup H\n", 4)

    def test_invalid_severity(self):
        self.assertSyntaxError("group G\nrule r\n    severity: fatal\n", 3)

    def test_garbage_line(self):
        self.assertSyntaxError("group G\nthis is not a rule\n", 2)

    def test_custom_inventory(self):
        inventory = AfunInventory(['Pred', 'Sb', 'Xyz'])
        rules = load_ruleset("group G\nrule r\n    when: afun = Xyz\n", inventory)
        self.assertEqual(len(rules), 1)

    def test_without_and_only(self):
        rules = default_ruleset()
        self.assertEqual(rules.without('G7', 'G8').group_ids, ['G1', 'G2', 'G3', 'G4', 'G5', 'G6', 'G9'])
        self.assertEqual(rules.only('G2').group_ids, ['G2'])
        self.assertEqual(len(rules), len(default_ruleset()))
        self.assertRaises(UnknownRuleError, rules.without, 'G10')


class TestCatalog(unittest.TestCase):
    def setUp(self):
        self.rules = default_ruleset()

    def test_conformant_fixtures_have_no_findings(self):
        for rows in (CONFORMANT_ROWS, COORDINATION, APPOSITION, COPULA, EMBEDDED, PREPOSITION,
                     SIMPLE, PUNCTUATION):
            findings = run_checks(make_document('d', rows), self.rules)
            self.assertEqual(findings, [], rows[0][0])

    def test_every_rule_distinguishes_its_fixtures(self):
        for group, rule_id, violating, conforming in CATALOG:
            only = self.rules.only(group)
            fired = {f.rule_id for f in run_checks(make_document('v', violating), only)}
            self.assertIn(rule_id, fired, rule_id)
            fired = {f.rule_id for f in run_checks(make_document('c', conforming), only)}
            self.assertNotIn(rule_id, fired, rule_id)

    def test_adv_under_noun(self):
        doc = make_document('auction', relabel(CONFORMANT_ROWS, 6, label='Adv'))
        findings = run_checks(doc, self.rules)
        self.assertEqual(len(findings), 1)
        finding = findings[0]
        self.assertEqual(finding.rule_id, 'G2.noun-dependent-atr')
        self.assertEqual((finding.sent_id, finding.token_id, finding.form), ('s1', 7, 'benefiční'))
        self.assertEqual(finding.observed, ('Adv', 8))
        self.assertIn('Atr', finding.message)

    def test_pnom_on_copula(self):
        rules = self.rules.only('G3')
        self.assertEqual(run_checks(make_document('d', COPULA), rules), [])
        bývat = relabel(COPULA, 1, lemma='bývat')
        self.assertEqual(run_checks(make_document('d', bývat), rules), [])

    def test_pred_at_depth_two(self):
        rows = [('Řekl', 'říci', 'V', 0, 'Pred'), ('přijde', 'přijít', 'V', 1, 'Pred'), ('.', '.', 'Z', 0, 'AuxK')]
        findings = run_checks(make_document('d', rows), self.rules)
        self.assertEqual([(f.rule_id, f.token_id) for f in findings], [('G4.pred-embedded', 2)])

    def test_pred_member_of_coordination_exempt(self):
        self.assertEqual(run_checks(make_document('d', COORDINATION), self.rules.only('G4')), [])

    def test_disabling_group_removes_only_its_findings(self):
        doc = make_document('d', *[violating for _, _, violating, _ in CATALOG])
        all_findings = run_checks(doc, self.rules)
        for group in self.rules.group_ids:
            remaining = run_checks(doc, self.rules.without(group))
            self.assertEqual(remaining, [f for f in all_findings if f.group != group])

    def test_order_and_concatenation(self):
        sentences = [make_sentence('s%d' % i, violating) for i, (_, _, violating, _) in enumerate(CATALOG)]
        findings = run_checks(Document('d', sentences), self.rules)
        self.assertEqual(findings, [f for s in sentences for f in check_sentence(s, self.rules)])
        keys = [(int(f.sent_id[1:]), f.token_id, f.rule_id) for f in findings]
        self.assertEqual(keys, sorted(keys))

    def test_reproducible(self):
        doc = make_document('d', relabel(CONFORMANT_ROWS, 6, label='Adv'))
        self.assertEqual(run_checks(doc, self.rules), run_checks(doc, self.rules))


class TestEffectiveParent(unittest.TestCase):
    def test_member_skips_coordination(self):
        sentence = make_sentence('s', [
            ('Petr', 'Petr', 'N', 2, 'Sb_Co'),
            ('a', 'a', 'J', 4, 'Coord'),
            ('Pavel', 'Pavel', 'N', 2, 'Sb_Co'),
            ('spí', 'spát', 'V', 0, 'Pred'),
            ('.', '.', 'Z', 0, 'AuxK'),
        ])
        self.assertEqual(effective_parent(sentence, sentence[1]).form, 'spí')
        self.assertEqual(effective_parent(sentence, sentence[2]).form, 'spí')
        self.assertIsNone(effective_parent(sentence, sentence[4]))
        view = NodeView(sentence, sentence[3])
        self.assertEqual(view.get('eparent.pos'), 'V')
        self.assertEqual(view.get('parent.afun'), 'Coord')
        self.assertEqual(view.get('ancestors'), frozenset(['Coord', 'Pred']))

    def test_root_values(self):
        sentence = make_sentence('s', SIMPLE)
        view = NodeView(sentence, sentence[2])
        self.assertIs(view.get('parent.is_root'), True)
        self.assertIsNone(view.get('parent.afun'))
        self.assertEqual(view.get('depth'), 1)
        self.assertEqual(view.get('children'), 1)
        self.assertEqual(view.get('affixes'), 'none')
        self.assertEqual(view.get('member'), 'none')


class TestExplainFinding(unittest.TestCase):
    def setUp(self):
        self.rules = default_ruleset()

    def test_adv_under_noun(self):
        doc = make_document('auction', relabel(CONFORMANT_ROWS, 6, label='Adv'))
        text = explain_finding(run_checks(doc, self.rules)[0], self.rules)
        self.assertIn('benefiční', text)
        self.assertIn('any node that depends on a noun gets the afun Atr', text)
        self.assertIn(self.rules.rule('G2.noun-dependent-atr').description, text)

    def test_auxx_with_affix(self):
        doc = make_document('d', relabel(PUNCTUATION, 1, label='AuxX_Co'))
        findings = [f for f in run_checks(doc, self.rules) if f.group == 'G6']
        text = explain_finding(findings[0], self.rules)
        self.assertIn('never complemented with any affixes', text)

    def test_unknown_rule(self):
        finding = Finding('G99.none', 'G99', 'error', 's1', 1, 'x', 'Atr', 0, 'none')
        self.assertRaises(UnknownRuleError, explain_finding, finding, self.rules)


if __name__ == '__main__':
    unittest.main()
