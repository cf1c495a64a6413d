#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: treebankqa configuration parameter
# Created: 08.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License

import os
from pathlib import Path

from treebankqa.label import get_inventory
from treebankqa.lint import get_ruleset

CONFIG_DIR_VARIABLE = 'TREEBANKQA_CONFIG_DIR'
INVENTORY_FILE = 'afuns.txt'
RULES_FILE = 'default.rules'


class Parameter(object):
    """
    .. attribute:: Parameter.config_dir

       *read/write* property

       directory with user configuration, default from the environment
       variable ``TREEBANKQA_CONFIG_DIR``; an ``afuns.txt`` or
       ``default.rules`` in it replaces the shipped file.

    .. attribute:: Parameter.inventory_path

       *read/write* property

       explicit afun inventory file, `None` for the configuration directory
       or the shipped inventory

    .. attribute:: Parameter.rules_path

       *read/write* property

       explicit rule file, `None` for the configuration directory or the
       shipped rules

    .. attribute:: Parameter.count_root

       *read/write* property

       count the technical root into the average sentence size of the
       unlabeled kappa
    """
    __slots__ = ['_config_dir', '_inventory_path', '_rules_path', 'count_root', 'inventory', '_rules']

    def __init__(self, inventory_path=None, rules_path=None, config_dir=None, count_root=False):
        if config_dir is None:
            config_dir = os.environ.get(CONFIG_DIR_VARIABLE) or None
        self._inventory_path = inventory_path
        self._rules_path = rules_path
        self._rules = None
        self.count_root = count_root
        self.config_dir = config_dir

    def _resolve(self, explicit, filename):
        if explicit is not None:
            path = Path(explicit)
            if not path.is_file():
                raise FileNotFoundError("'%s' does not exist." % explicit)
            return path
        if self._config_dir is not None:
            path = self._config_dir / filename
            if path.is_file():
                return path
        return None

    def _init_inventory(self):
        self.inventory = get_inventory(self._resolve(self._inventory_path, INVENTORY_FILE))
        self._rules = None

    @property
    def config_dir(self):
        return self._config_dir

    @config_dir.setter
    def config_dir(self, config_dir):
        if config_dir is not None:
            config_dir = Path(config_dir)
            if not config_dir.is_dir():
                raise ValueError("'%s' is not a directory." % config_dir)
        self._config_dir = config_dir
        self._init_inventory()

    @property
    def inventory_path(self):
        return self._inventory_path

    @inventory_path.setter
    def inventory_path(self, path):
        self._inventory_path = path
        self._init_inventory()

    @property
    def rules_path(self):
        return self._rules_path

    @rules_path.setter
    def rules_path(self, path):
        self._rules_path = path
        self._rules = None

    @property
    def rules(self):
        """ The rule set, compiled on first access. """
        if self._rules is None:
            self._rules = get_ruleset(self._resolve(self._rules_path, RULES_FILE), self.inventory)
        return self._rules
