#!/usr/bin/env python
# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import division

import numpy as np

from qmlab.utils import InvariantViolation, assert_positive_int


__all__ = [
    'binomial_sigma',
    'within_sigma',
    'chsh_sigma',
    'max_abs_gap',
    'check_close',
]


def binomial_sigma(p, n):
    """
    The standard deviation ``sqrt(p (1 - p) / n)`` of a frequency estimated
    from `n` Bernoulli trials with success probability `p`.

    :param p: A float or numpy array of probabilities.
    :param n: A positive int.
    :return: A float or numpy array.
    """
    n = assert_positive_int(n, 'n')
    p = np.asarray(p, dtype=np.float64)
    return np.sqrt(p * (1. - p) / n)


def within_sigma(freq, p, n, n_sigma=4.):
    """
    Whether empirical frequencies are within `n_sigma` binomial standard
    deviations of `p`. Degenerate cells (``p`` of 0 or 1) must match exactly.

    :param freq: Empirical frequencies, a float or numpy array.
    :param p: Analytic probabilities of the same shape.
    :param n: The number of trials.
    :param n_sigma: Width of the acceptance band.
    :return: A bool.
    """
    freq = np.asarray(freq, dtype=np.float64)
    p = np.asarray(p, dtype=np.float64)
    return bool(np.all(np.abs(freq - p) <= n_sigma * binomial_sigma(p, n)))


def chsh_sigma(correlations, n):
    """
    Standard deviation of an empirical CHSH value built from four
    independent runs of `n` trials. Each correlation estimate ``E`` has
    variance ``(1 - E^2) / n``.

    :param correlations: The four analytic correlations.
    :param n: Trials per setting.
    :return: A float.
    """
    n = assert_positive_int(n, 'n')
    e = np.asarray(correlations, dtype=np.float64)
    return float(np.sqrt(np.sum(1. - e ** 2) / n))


def max_abs_gap(a, b):
    """The largest absolute elementwise difference of two arrays."""
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def check_close(name, value, expected, tol):
    """
    Raise :class:`~qmlab.utils.InvariantViolation` unless `value` and
    `expected` agree elementwise within `tol`.

    :param name: The name of the checked quantity for error message.
    :return: The largest gap.
    """
    gap = max_abs_gap(value, expected)
    if not gap <= tol:
        raise InvariantViolation(
            '{}: gap {:.3e} exceeds tolerance {:.1e}.'.format(name, gap, tol))
    return gap
