#!/usr/bin/env python3
# License: MIT License
# Copyright (C) 2026  treebankqa developers
from pathlib import Path
from setuptools import setup

AUTHOR_NAME = 'treebankqa developers'

ROOT = Path(__file__).resolve().parent

def get_version():
    v = {}
    # do not import treebankqa, because required packages may not installed yet
    for line in (ROOT / "treebankqa" / "version.py").read_text().splitlines():
        if line.strip().startswith('__version__'):
            exec(line, v)
            return v['__version__']
    raise IOError('__version__ string not found')


setup(name='treebankqa',
      version=get_version(),
      description='Quality assurance and evaluation of dependency treebank annotation.',
      author=AUTHOR_NAME,
      python_requires='>=3.8',
      packages=['treebankqa', 'treebankqa/data'],
      package_data={'treebankqa': ['data/*.txt', 'data/*.rules']},
      provides=['treebankqa'],
      install_requires=['numpy>=1.20', 'svgwrite>=1.4'],
      entry_points={'console_scripts': ['treebankqa = treebankqa.cli:main']},
      long_description=((ROOT / 'README.rst').read_text(encoding='utf-8') +
                        (ROOT / 'NEWS.rst').read_text(encoding='utf-8')),
      platforms="OS Independent",
      license="MIT License",
      classifiers=[
          "Development Status :: 4 - Beta",
          "License :: OSI Approved :: MIT License",
          "Operating System :: OS Independent",
          "Programming Language :: Python :: 3",
          "Programming Language :: Python :: 3.8",
          "Programming Language :: Python :: 3.9",
          "Programming Language :: Python :: 3.10",
          "Programming Language :: Python :: 3.11",
          "Programming Language :: Python :: Implementation :: CPython",
          "Intended Audience :: Science/Research",
          "Topic :: Scientific/Engineering :: Information Analysis",
          "Topic :: Text Processing :: Linguistic",
      ]
)
