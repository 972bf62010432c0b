#!/usr/bin/env python
# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import division

import numpy as np
from six.moves import range

from qmlab.bloch import BallState, direction_from_vector
from qmlab.diagnostics import binomial_sigma


def random_direction(rng):
    return direction_from_vector(*rng.normal(size=3))


def random_ball_state(rng):
    """Uniform in the ball."""
    v = rng.normal(size=3)
    return BallState(v / np.linalg.norm(v) * rng.uniform() ** (1. / 3))


def alpha_grid(n=37):
    """`n` angles covering [0, pi]."""
    return np.linspace(0., np.pi, n)


def check_frequencies(test_class, freqs, probs, n, n_sigma=4.):
    # Cells with probability 0 or 1 must be hit exactly.
    freqs = np.asarray(freqs)
    probs = np.asarray(probs)
    sigma = binomial_sigma(probs, n)
    for i in range(len(probs)):
        test_class.assertLessEqual(abs(freqs[i] - probs[i]),
                                   n_sigma * sigma[i] + 1e-15,
                                   msg='cell {}'.format(i))
