#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: python -m treebankqa
# Created: 12.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License
import sys

from treebankqa.cli import main

sys.exit(main())
