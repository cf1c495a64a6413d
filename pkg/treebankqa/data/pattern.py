#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: pattern module
# Created: 02.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License

import re

# afun ::= [A-Za-z][A-Za-z0-9]*
afun = re.compile(r"^[A-Za-z][A-Za-z0-9]*$")

# label ::= afun ("_" ("Co" | "Ap" | "P" | "E"))*
label = re.compile(r"^([A-Za-z][A-Za-z0-9]*)((?:_(?:Co|Ap|P|E))*)$")

# decimal integer as used by the ID and HEAD columns
integer = re.compile(r"^\d+$")

# comment lines of the annotation format
# ids may contain inner blanks, surrounding blanks are not part of the id
sent_id = re.compile(r"^#\s*sent_id\s*=\s*(.*?)\s*$")
doc_id = re.compile(r"^#\s*doc_id\s*=\s*(.*?)\s*$")

# rule file directives
ruleset = re.compile(r"^ruleset\s+(\S+)\s*$")
set_directive = re.compile(r"^set\s+([A-Za-z_][\w-]*)\s*=\s*\{(.*)\}\s*$")
group = re.compile(r"^group\s+(\S+)(?:\s+(.*?))?\s*$")
rule = re.compile(r"^rule\s+(\S+)\s*$")
rule_key = re.compile(r"^(severity|description|expect|when)\s*:\s*(.*?)\s*$")
