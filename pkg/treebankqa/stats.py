#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: bootstrap standard deviations and permutation tests
# Created: 07.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License
"""
Uncertainty and significance of accuracy scores.

The resampling unit is a :class:`SentenceStat`: hits and tokens of one
sentence (or, see :func:`regroup`, of one token or one document). A score of
a list of units is the micro-average ``sum(hits) / sum(tokens)``, a
proportion in ``[0, 1]``.

Replicates are drawn in blocks of :data:`BLOCK_SIZE`, block ``b`` uses its
own generator seeded with ``SeedSequence(seed, spawn_key=(b,))``. Results
depend only on (data, samples, seed), not on the number of `workers`.
"""
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb

import numpy as np

logger = logging.getLogger(__name__)

BLOCK_SIZE = 2000
TIE_TOLERANCE = 1e-12
DEFAULT_SAMPLES = 1000000
MAX_EXACT_ASSIGNMENTS = 2000000
UNITS = ('sentence', 'token', 'document')


@dataclass(frozen=True)
class SentenceStat:
    unit_id: str
    hits: int
    tokens: int
    group: str = ''

    def __post_init__(self):
        if self.tokens < 1:
            raise ValueError("unit '%s': tokens must be >= 1." % self.unit_id)
        if not 0 <= self.hits <= self.tokens:
            raise ValueError("unit '%s': hits must be in [0, %d]." % (self.unit_id, self.tokens))


@dataclass(frozen=True)
class BootstrapResult:
    statistic: float
    stddev: float
    samples: int
    seed: int
    replicate_mean: float

    def as_dict(self):
        return {'statistic': self.statistic, 'stddev': self.stddev, 'samples': self.samples,
                'seed': self.seed, 'replicate_mean': self.replicate_mean}


@dataclass(frozen=True)
class PermutationResult:
    """ One-sided test of ``score(A) > score(B)``. For the exact test
    `samples` is the number of enumerated assignments and `seed` is `None`.
    """
    observed_diff: float
    p_value: float
    samples: int
    seed: int

    def as_dict(self):
        return {'observed_diff': self.observed_diff, 'p_value': self.p_value,
                'samples': self.samples, 'seed': self.seed}


def score(stats):
    """ Micro-averaged score of `stats` as a proportion. """
    tokens = sum(s.tokens for s in stats)
    if not tokens:
        raise ValueError("score of an empty unit list.")
    return float(sum(s.hits for s in stats)) / tokens


def regroup(stats, unit):
    """ Change the resampling unit.

    :param string unit: ``'sentence'`` keeps `stats`, ``'token'`` splits every
      unit into single-token units, ``'document'`` merges the units sharing
      the unit id prefix before the last ``'/'``
    """
    if unit == 'sentence':
        return list(stats)
    elif unit == 'token':
        result = []
        for s in stats:
            for i in range(s.tokens):
                result.append(SentenceStat("%s#%d" % (s.unit_id, i + 1), int(i < s.hits), 1, s.group))
        return result
    elif unit == 'document':
        merged = {}
        for s in stats:
            key = (s.unit_id.rsplit('/', 1)[0], s.group)
            hits, tokens = merged.get(key, (0, 0))
            merged[key] = (hits + s.hits, tokens + s.tokens)
        return [SentenceStat(unit_id, hits, tokens, group)
                for (unit_id, group), (hits, tokens) in merged.items()]
    raise ValueError("unknown resampling unit '%s', use one of %s." % (unit, ", ".join(UNITS)))


def _check_samples(samples):
    if int(samples) != samples or samples < 1:
        raise ValueError("samples must be a positive integer, got %r." % samples)
    return int(samples)


def _arrays(stats):
    hits = np.array([s.hits for s in stats], dtype=np.float64)
    tokens = np.array([s.tokens for s in stats], dtype=np.float64)
    return hits, tokens


def block_rng(seed, block):
    """ Generator of replicate block `block`, a pure function of (`seed`, `block`). """
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(block, )))


def _replicates(draw_block, samples, workers):
    blocks = [(index, min(BLOCK_SIZE, samples - start))
              for index, start in enumerate(range(0, samples, BLOCK_SIZE))]
    if workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(lambda block: draw_block(*block), blocks))
    else:
        results = [draw_block(*block) for block in blocks]
    return np.concatenate(results)


def _group_diff(hits, tokens, a_index, b_index):
    """ Score differences A - B, one per row of the index arrays. """
    a_score = hits[a_index].sum(axis=1) / tokens[a_index].sum(axis=1)
    b_score = hits[b_index].sum(axis=1) / tokens[b_index].sum(axis=1)
    return a_score - b_score


def bootstrap_stddev(stats, samples=DEFAULT_SAMPLES, seed=0, workers=1):
    """ Bootstrap estimate of the standard deviation of the score of `stats`.

    Each replicate draws ``len(stats)`` units with replacement and computes
    their micro-averaged score.

    :param stats: list of :class:`SentenceStat`
    :param int samples: number of replicates
    :param int seed: master seed
    :param int workers: threads evaluating replicate blocks
    :returns: :class:`BootstrapResult`, proportions
    :raises ValueError: empty `stats` or invalid `samples`
    """
    stats = list(stats)
    if not stats:
        raise ValueError("bootstrap_stddev() needs at least one unit.")
    samples = _check_samples(samples)
    hits, tokens = _arrays(stats)
    size = len(stats)

    def draw_block(block, count):
        index = block_rng(seed, block).integers(0, size, size=(count, size))
        return hits[index].sum(axis=1) / tokens[index].sum(axis=1)

    replicates = _replicates(draw_block, samples, workers)
    if np.ptp(replicates) == 0:
        stddev = 0.
    else:
        stddev = float(np.std(replicates))
    result = BootstrapResult(score(stats), stddev, samples, seed, float(np.mean(replicates)))
    logger.debug("bootstrap over %d units, %d samples: %.6f +- %.6f",
                 size, samples, result.statistic, result.stddev)
    return result


def permutation_test(group_a, group_b, samples=DEFAULT_SAMPLES, seed=0, workers=1):
    """ Monte Carlo permutation test that group A scores higher than group B.

    Every replicate pools all units and reassigns them at random to groups of
    the original sizes. ``p = (1 + k) / (1 + samples)`` where `k` counts the
    replicates whose difference reaches the observed one.

    :returns: :class:`PermutationResult`
    :raises ValueError: empty group or invalid `samples`
    """
    group_a, group_b = list(group_a), list(group_b)
    if not group_a or not group_b:
        raise ValueError("permutation_test() needs two non-empty groups.")
    samples = _check_samples(samples)
    hits, tokens = _arrays(group_a + group_b)
    size_a, size = len(group_a), len(group_a) + len(group_b)
    observed = score(group_a) - score(group_b)

    def draw_block(block, count):
        rng = block_rng(seed, block)
        order = rng.permuted(np.tile(np.arange(size), (count, 1)), axis=1)
        return _group_diff(hits, tokens, order[:, :size_a], order[:, size_a:])

    diffs = _replicates(draw_block, samples, workers)
    extreme = int(np.count_nonzero(diffs >= observed - TIE_TOLERANCE))
    p_value = (1. + extreme) / (1. + samples)
    logger.debug("permutation test %d vs %d units, %d samples: diff %.6f, p %.6f",
                 len(group_a), len(group_b), samples, observed, p_value)
    return PermutationResult(observed, p_value, samples, seed)


def exact_permutation_test(group_a, group_b):
    """ Exhaustive permutation test: enumerates every reassignment of the
    pooled units, ``p = k / C(n, |A|)``.

    :raises ValueError: empty group or more than
      :data:`MAX_EXACT_ASSIGNMENTS` assignments
    """
    group_a, group_b = list(group_a), list(group_b)
    if not group_a or not group_b:
        raise ValueError("exact_permutation_test() needs two non-empty groups.")
    size_a, size = len(group_a), len(group_a) + len(group_b)
    total = comb(size, size_a)
    if total > MAX_EXACT_ASSIGNMENTS:
        raise ValueError("%d assignments, too many for exhaustive enumeration." % total)
    hits, tokens = _arrays(group_a + group_b)
    observed = score(group_a) - score(group_b)
    a_index = np.array(list(itertools.combinations(range(size), size_a)), dtype=np.intp)
    mask = np.ones((total, size), dtype=bool)
    np.put_along_axis(mask, a_index, False, axis=1)
    b_index = np.nonzero(mask)[1].reshape(total, size - size_a)
    diffs = _group_diff(hits, tokens, a_index, b_index)
    extreme = int(np.count_nonzero(diffs >= observed - TIE_TOLERANCE))
    return PermutationResult(observed, float(extreme) / total, total, None)
