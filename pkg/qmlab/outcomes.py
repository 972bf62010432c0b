#!/usr/bin/env python
# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import division

import numpy as np
from six.moves import zip

from qmlab.utils import EXACT_TOL


__all__ = [
    'UP',
    'DOWN',
    'OUTCOMES',
    'OUTCOME_PAIRS',
    'JointDistribution',
]


UP = 'up'
DOWN = 'down'
OUTCOMES = (UP, DOWN)
# Cell order used everywhere: (up,up), (up,down), (down,up), (down,down).
OUTCOME_PAIRS = ((UP, UP), (UP, DOWN), (DOWN, UP), (DOWN, DOWN))


def check_outcome(outcome):
    if outcome not in OUTCOMES:
        raise ValueError('Outcome must be one of {}, got {!r}.'.format(
            list(OUTCOMES), outcome))
    return outcome


class JointDistribution(object):
    """
    Probabilities of the four outcome pairs of a joint spin experiment.

    :param p_uu: Probability of (up, up).
    :param p_ud: Probability of (up, down).
    :param p_du: Probability of (down, up).
    :param p_dd: Probability of (down, down).
    """

    def __init__(self, p_uu, p_ud, p_du, p_dd):
        probs = np.array([p_uu, p_ud, p_du, p_dd], dtype=np.float64)
        if np.any(probs < -EXACT_TOL) or np.any(probs > 1. + EXACT_TOL):
            raise ValueError(
                'Joint probabilities must lie in [0, 1], got {}.'.format(
                    probs.tolist()))
        if abs(np.sum(probs) - 1.) > EXACT_TOL:
            raise ValueError(
                'Joint probabilities must sum to 1, got {!r}.'.format(
                    float(np.sum(probs))))
        probs.flags.writeable = False
        self._probs = probs

    @classmethod
    def from_counts(cls, counts):
        """
        Empirical distribution from the four cell counts.

        :param counts: A length-4 sequence of non-negative integers in
            :data:`OUTCOME_PAIRS` order.
        """
        counts = np.asarray(counts, dtype=np.int64)
        total = int(np.sum(counts))
        if counts.shape != (4,) or total <= 0 or np.any(counts < 0):
            raise ValueError('Need four non-negative counts with a positive '
                             'total, got {}.'.format(counts.tolist()))
        return cls(*(counts / total))

    @property
    def p_uu(self):
        return float(self._probs[0])

    @property
    def p_ud(self):
        return float(self._probs[1])

    @property
    def p_du(self):
        return float(self._probs[2])

    @property
    def p_dd(self):
        return float(self._probs[3])

    def prob(self, outcome1, outcome2):
        """Probability of one outcome pair."""
        pair = (check_outcome(outcome1), check_outcome(outcome2))
        return float(self._probs[OUTCOME_PAIRS.index(pair)])

    def as_array(self):
        """The four probabilities in :data:`OUTCOME_PAIRS` order."""
        return self._probs.copy()

    def to_dict(self):
        keys = ('p_uu', 'p_ud', 'p_du', 'p_dd')
        return dict(zip(keys, self._probs.tolist()))

    def __repr__(self):
        return ('JointDistribution(p_uu={!r}, p_ud={!r}, p_du={!r}, '
                'p_dd={!r})'.format(*self._probs.tolist()))
