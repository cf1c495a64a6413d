#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: afun inventory and dependency labels
# Created: 02.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License
"""
A dependency label is a base analytical function (*afun*) plus up to three
affixes: membership in a coordination (``_Co``) or apposition (``_Ap``),
parenthesis (``_P``) and ellipsis (``_E``). The affixes combine freely, so an
inventory of ``n`` afuns spans ``n * 2**3`` full labels (200 for the default
inventory of 25).

Labels are serialized in canonical order: member, then ``_P``, then ``_E``::

    >>> str(Label.parse('Atr_E_P_Ap', default_inventory()))
    'Atr_Ap_P_E'

"""
import logging
from dataclasses import dataclass
from fnmatch import fnmatchcase
from pathlib import Path

from treebankqa.data import afuns
from treebankqa.data import pattern
from treebankqa.errors import InventoryError, LabelError

logger = logging.getLogger(__name__)

DEFAULT_INVENTORY = Path(__file__).parent / 'data' / 'afuns.txt'
inventory_cache = {}


class AfunInventory(object):
    """ Ordered set of base afun names.

    .. attribute:: labels

       *tuple* of afun names in file order

    """
    __slots__ = ['labels', '_index']

    def __init__(self, labels):
        labels = tuple(labels)
        seen = set()
        for name in labels:
            if not name or not pattern.afun.match(name):
                raise InventoryError("'%s' is not a valid afun name." % name)
            if name in seen:
                raise InventoryError("duplicate afun '%s' in inventory." % name)
            seen.add(name)
        self.labels = labels
        self._index = frozenset(labels)

    @classmethod
    def from_text(cls, text):
        """ Create inventory from line-oriented text, one afun per line,
        ``#`` comments and blank lines are ignored.
        """
        names = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            if not pattern.afun.match(line):
                raise InventoryError("line %d: '%s' is not a valid afun name." % (lineno, line))
            names.append(line)
        return cls(names)

    @property
    def size(self):
        return len(self.labels)

    @property
    def full_label_space(self):
        """ Count of all afun + affix combinations, ``size * 2**3``. """
        return self.size * 2 ** afuns.AFFIX_SLOTS

    def matching(self, glob):
        """ Afuns matching the shell-style `glob` (``'Aux*'``). """
        return [name for name in self.labels if fnmatchcase(name, glob)]

    def __contains__(self, name):
        return name in self._index

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        return isinstance(other, AfunInventory) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return "AfunInventory(%d labels)" % self.size


def default_inventory():
    """ The shipped 25-afun inventory. """
    return get_inventory(None)


def get_inventory(path=None):
    """ Inventory factory, loaded inventories are cached by path.

    :param path: inventory file, `None` for the default inventory
    """
    key = None if path is None else str(Path(path).resolve())
    try:
        return inventory_cache[key]
    except KeyError:
        filename = DEFAULT_INVENTORY if key is None else Path(key)
        inventory = AfunInventory.from_text(filename.read_text(encoding='utf-8'))
        logger.debug("loaded inventory %s with %d afuns", filename, inventory.size)
        inventory_cache[key] = inventory
        return inventory


@dataclass(frozen=True)
class AffixSet:
    """ The three affix slots of a label. `member` is ``None``, ``'Co'`` or
    ``'Ap'``.
    """
    member: str = None
    parenthesis: bool = False
    ellipsis: bool = False

    def __post_init__(self):
        if self.member is not None and self.member not in afuns.MEMBER_FORMS:
            raise LabelError("invalid member affix '%s'." % self.member)

    @classmethod
    def from_suffix(cls, suffix):
        """ Parse an affix suffix like ``'_Co_P'`` (any order, each slot once). """
        member = None
        parenthesis = ellipsis = False
        if not suffix:
            return cls()
        for part in suffix.lstrip('_').split('_'):
            if part in afuns.MEMBER_FORMS:
                if member is not None:
                    raise LabelError("more than one member affix in '%s'." % suffix)
                member = part
            elif part == afuns.PARENTHESIS:
                if parenthesis:
                    raise LabelError("repeated affix _P in '%s'." % suffix)
                parenthesis = True
            elif part == afuns.ELLIPSIS:
                if ellipsis:
                    raise LabelError("repeated affix _E in '%s'." % suffix)
                ellipsis = True
            else:
                raise LabelError("unknown affix '_%s'." % part)
        return cls(member, parenthesis, ellipsis)

    @property
    def suffix(self):
        parts = []
        if self.member:
            parts.append('_' + self.member)
        if self.parenthesis:
            parts.append('_' + afuns.PARENTHESIS)
        if self.ellipsis:
            parts.append('_' + afuns.ELLIPSIS)
        return ''.join(parts)

    def __bool__(self):
        return bool(self.member or self.parenthesis or self.ellipsis)

    def __str__(self):
        return self.suffix


@dataclass(frozen=True)
class Label:
    afun: str
    affixes: AffixSet = AffixSet()

    @classmethod
    def parse(cls, text, inventory=None):
        """ Decompose `text` into base afun and :class:`AffixSet`.

        :param text: label string, e.g. ``'Obj_Co'``
        :param inventory: :class:`AfunInventory` to check the afun against,
          `None` skips the check
        :raises LabelError: malformed label or afun outside `inventory`
        """
        result = pattern.label.match(text)
        if result is None:
            raise LabelError("'%s' is not a valid label." % text)
        afun, suffix = result.groups()
        if inventory is not None and afun not in inventory:
            raise LabelError("unknown afun '%s'." % afun)
        return cls(afun, AffixSet.from_suffix(suffix))

    @property
    def member(self):
        return self.affixes.member

    def __str__(self):
        return self.afun + self.affixes.suffix
