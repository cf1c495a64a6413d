#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: consistency checking rules
# Created: 05.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License
"""
Declarative consistency rules ("online" checks) for dependency annotation.

Rules are data: a rule file groups rules, every rule is a conjunction of
conditions over a node, its parent, its effective parent and its position in
the tree. A node for which all conditions hold violates the rule and is
reported as a :class:`Finding`.

a short example::

    rules = load_ruleset(text, inventory)
    for finding in run_checks(document, rules):
        print(explain_finding(finding, rules))

The rule file grammar is described in the *File Formats* documentation.
"""
import logging
from dataclasses import dataclass
from fnmatch import fnmatchcase
from pathlib import Path

from treebankqa.data import fields as fieldinfo
from treebankqa.data import pattern
from treebankqa.data.ruleparser import split_condition, split_values
from treebankqa.errors import RuleSyntaxError, UnknownRuleError, LabelError
from treebankqa.label import AffixSet, Label, default_inventory

logger = logging.getLogger(__name__)

SEVERITIES = ('error', 'warning')
DEFAULT_RULES = Path(__file__).parent / 'data' / 'default.rules'

ruleset_cache = {}


class Condition(object):
    """ One compiled condition ``<field> <op> <value>``. """
    __slots__ = ['field', 'op', 'values', 'kind', 'source']

    def __init__(self, field, op, values, kind, source):
        self.field = field
        self.op = op
        self.values = values
        self.kind = kind
        self.source = source

    def test(self, view):
        value = view.get(self.field)
        op = self.op
        if self.kind == 'afun-set':
            found = self.values[0] in value
            return found if op == 'has' else not found
        if self.kind == 'integer':
            other = self.values[0]
            return {
                '=': value == other, '!=': value != other,
                '<': value < other, '<=': value <= other,
                '>': value > other, '>=': value >= other,
            }[op]
        if op in ('~', '!~'):
            found = value is not None and any(fnmatchcase(value, glob) for glob in self.values)
            return found if op == '~' else not found
        found = value in self.values
        return not found if op in ('!=', 'not in') else found

    def __str__(self):
        return self.source


@dataclass(frozen=True)
class Rule:
    id: str
    group: str
    severity: str
    description: str
    expect: str
    conditions: tuple

    def matches(self, view):
        return all(condition.test(view) for condition in self.conditions)


@dataclass(frozen=True)
class RuleGroup:
    id: str
    title: str
    rules: tuple


@dataclass(frozen=True)
class Finding:
    """ A rule violation pinned to one token. `label` and `head` are the
    observed values at check time.
    """
    rule_id: str
    group: str
    severity: str
    sent_id: str
    token_id: int
    form: str
    label: str
    head: int
    message: str

    @property
    def observed(self):
        return self.label, self.head

    def as_dict(self):
        return {
            'rule_id': self.rule_id, 'group': self.group, 'severity': self.severity,
            'sent_id': self.sent_id, 'token_id': self.token_id, 'form': self.form,
            'label': self.label, 'head': self.head, 'message': self.message,
        }


class RuleSet(object):
    """ Immutable collection of rule groups.

    .. attribute:: name

    .. attribute:: groups

       *tuple* of :class:`RuleGroup` in file order

    """
    __slots__ = ['name', 'groups', 'sets', '_rules']

    def __init__(self, name, groups, sets=None):
        self.name = name
        self.groups = tuple(groups)
        self.sets = dict(sets or {})
        self._rules = {}
        for group in self.groups:
            for rule in group.rules:
                if rule.id in self._rules:
                    raise RuleSyntaxError("duplicate rule id '%s'." % rule.id)
                self._rules[rule.id] = rule

    @property
    def rules(self):
        return [rule for group in self.groups for rule in group.rules]

    @property
    def group_ids(self):
        return [group.id for group in self.groups]

    def rule(self, rule_id):
        try:
            return self._rules[rule_id]
        except KeyError:
            raise UnknownRuleError("rule '%s' is not part of ruleset '%s'." % (rule_id, self.name))

    def without(self, *group_ids):
        """ Copy of the ruleset with the groups `group_ids` disabled. """
        self._check_groups(group_ids)
        return RuleSet(self.name, [g for g in self.groups if g.id not in group_ids], self.sets)

    def only(self, *group_ids):
        """ Copy of the ruleset containing just the groups `group_ids`. """
        self._check_groups(group_ids)
        return RuleSet(self.name, [g for g in self.groups if g.id in group_ids], self.sets)

    def _check_groups(self, group_ids):
        unknown = set(group_ids) - set(self.group_ids)
        if unknown:
            raise UnknownRuleError("unknown rule group(s): %s" % ", ".join(sorted(unknown)))

    def __len__(self):
        return len(self._rules)

    def __contains__(self, rule_id):
        return rule_id in self._rules

    def __repr__(self):
        return "RuleSet(%r, %d groups, %d rules)" % (self.name, len(self.groups), len(self))


class _RuleCompiler(object):
    def __init__(self, inventory):
        self.inventory = inventory
        self.sets = {}

    def compile_condition(self, text, lineno):
        parts = split_condition(text)
        if parts is None:
            raise RuleSyntaxError("invalid condition '%s'." % text, lineno)
        field, op, value = parts
        try:
            kind = fieldinfo.fields[field]
        except KeyError:
            raise RuleSyntaxError("unknown field '%s'." % field, lineno)
        if op not in fieldinfo.operators[kind]:
            raise RuleSyntaxError("operator '%s' is not valid for field '%s'." % (op, field), lineno)
        if value.startswith('$'):
            try:
                values = self.sets[value[1:]]
            except KeyError:
                raise RuleSyntaxError("undefined set '%s'." % value, lineno)
        else:
            values = split_values(value)
        if op in ('in', 'not in'):
            if not (value.startswith('{') or value.startswith('$')):
                raise RuleSyntaxError("operator '%s' requires a {list} or $set." % op, lineno)
        elif len(values) != 1 and op not in ('~', '!~'):
            raise RuleSyntaxError("operator '%s' requires a single value." % op, lineno)
        values = tuple(self.convert(kind, op, v, lineno) for v in values)
        return Condition(field, op, values, kind, " ".join(text.split()))

    def convert(self, kind, op, value, lineno):
        if kind in ('afun', 'afun-set'):
            if op in ('~', '!~'):
                if not self.inventory.matching(value):
                    raise RuleSyntaxError("pattern '%s' matches no afun of the inventory." % value, lineno)
            elif value not in self.inventory:
                raise RuleSyntaxError("unknown afun '%s'." % value, lineno)
            return value
        elif kind == 'label':
            try:
                return str(Label.parse(value, self.inventory))
            except LabelError as e:
                raise RuleSyntaxError(str(e), lineno)
        elif kind == 'affixes':
            if value == fieldinfo.NONE_VALUE:
                return value
            try:
                affixes = AffixSet.from_suffix(value)
            except LabelError as e:
                raise RuleSyntaxError(str(e), lineno)
            if not affixes or not value.startswith('_'):
                raise RuleSyntaxError("invalid affix value '%s'." % value, lineno)
            return affixes.suffix
        elif kind == 'member':
            if value not in ('none', 'Co', 'Ap'):
                raise RuleSyntaxError("member value must be none, Co or Ap, not '%s'." % value, lineno)
            return value
        elif kind == 'bool':
            try:
                return fieldinfo.BOOL_VALUES[value]
            except KeyError:
                raise RuleSyntaxError("boolean value must be yes or no, not '%s'." % value, lineno)
        elif kind == 'integer':
            try:
                return int(value)
            except ValueError:
                raise RuleSyntaxError("'%s' is not an integer." % value, lineno)
        return value


def load_ruleset(config_text, inventory=None):
    """ Compile rule file text into a :class:`RuleSet`.

    :param string config_text: rule file content
    :param inventory: :class:`~treebankqa.label.AfunInventory` afun names are
      checked against, default inventory if `None`
    :raises RuleSyntaxError: with line number
    """
    if inventory is None:
        inventory = default_inventory()
    compiler = _RuleCompiler(inventory)
    name = 'rules'
    groups = []  # [id, title, [rules]]
    current = None  # rule under construction

    def close_rule(current, lineno):
        if current is None:
            return
        if not current['conditions']:
            raise RuleSyntaxError("rule '%s' has no conditions." % current['id'], lineno)
        groups[-1][2].append(Rule(
            current['id'], groups[-1][0], current['severity'],
            current['description'] or current['id'],
            current['expect'] or current['description'] or '',
            tuple(current['conditions'])))

    for lineno, line in enumerate(config_text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith('#'):
            continue
        result = pattern.rule_key.match(stripped)
        if result and line[:1].isspace():
            if current is None:
                raise RuleSyntaxError("'%s' outside of a rule." % result.group(1), lineno)
            key, value = result.groups()
            if key == 'when':
                current['conditions'].append(compiler.compile_condition(value, lineno))
            elif key == 'severity':
                if value not in SEVERITIES:
                    raise RuleSyntaxError("severity must be error or warning, not '%s'." % value, lineno)
                current['severity'] = value
            else:
                current[key] = value
            continue
        result = pattern.rule.match(stripped)
        if result:
            close_rule(current, lineno)
            if not groups:
                raise RuleSyntaxError("rule '%s' outside of a group." % result.group(1), lineno)
            current = {'id': result.group(1), 'severity': 'warning', 'description': '',
                       'expect': '', 'conditions': []}
            continue
        result = pattern.group.match(stripped)
        if result:
            close_rule(current, lineno)
            current = None
            group_id = result.group(1)
            if any(group[0] == group_id for group in groups):
                raise RuleSyntaxError("duplicate group '%s'." % group_id, lineno)
            groups.append([group_id, result.group(2) or group_id, []])
            continue
        result = pattern.set_directive.match(stripped)
        if result:
            set_name, items = result.groups()
            compiler.sets[set_name] = [item.strip() for item in items.split(',') if item.strip()]
            continue
        result = pattern.ruleset.match(stripped)
        if result:
            name = result.group(1)
            continue
        raise RuleSyntaxError("cannot parse '%s'." % stripped, lineno)
    close_rule(current, None)

    ruleset = RuleSet(name, [RuleGroup(g[0], g[1], tuple(g[2])) for g in groups], compiler.sets)
    logger.debug("loaded ruleset '%s': %d groups, %d rules", name, len(ruleset.groups), len(ruleset))
    return ruleset


def default_ruleset(inventory=None):
    """ The shipped nine-group ruleset. """
    return get_ruleset(None, inventory)


def get_ruleset(path=None, inventory=None):
    """ Ruleset factory, compiled rulesets are cached by (path, inventory).

    :param path: rule file, `None` for the shipped default rules
    """
    if inventory is None:
        inventory = default_inventory()
    path = Path(path).resolve() if path is not None else DEFAULT_RULES
    key = (str(path), inventory)
    try:
        return ruleset_cache[key]
    except KeyError:
        ruleset = load_ruleset(path.read_text(encoding='utf-8'), inventory)
        ruleset_cache[key] = ruleset
        return ruleset


def _message(rule, token):
    return "%s '%s' (%s): %s" % (token.id, token.form, token.label, rule.expect)


def check_sentence(sentence, rules):
    """ Findings of one sentence, ordered by (token id, rule id). """
    ordered = sorted(rules.rules, key=lambda rule: rule.id)
    findings = []
    for token in sentence.tokens:
        view = fieldinfo.NodeView(sentence, token)
        for rule in ordered:
            if rule.matches(view):
                findings.append(Finding(rule.id, rule.group, rule.severity, sentence.sent_id,
                                        token.id, token.form, str(token.label), token.head,
                                        _message(rule, token)))
    return findings


def run_checks(doc, rules):
    """ Run all `rules` on every sentence of `doc`.

    :returns: list of :class:`Finding` ordered by (sentence, token, rule id)
    """
    findings = []
    for sentence in doc.sentences:
        findings.extend(check_sentence(sentence, rules))
    logger.info("checked '%s' with '%s': %d findings", doc.doc_id, rules.name, len(findings))
    return findings


def explain_finding(f, rules):
    """ Annotator-facing explanation of finding `f`.

    :raises UnknownRuleError: `f` was not produced by `rules`
    """
    rule = rules.rule(f.rule_id)
    return ("%s [%s] %s\n"
            "  sentence %s, token %d '%s' labeled %s (head %d)\n"
            "  expected: %s" % (rule.id, rule.severity, rule.description,
                                f.sent_id, f.token_id, f.form, f.label, f.head,
                                rule.expect))
