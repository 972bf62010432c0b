#!/usr/bin/env python
# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import division

import numpy as np

from qmlab.bloch import BallState, Direction, make_ball_state
from qmlab.machines.base import MeasurementModel
from qmlab.outcomes import UP, DOWN, OUTCOMES
from qmlab.streams import RandomStream, run_sharded
from qmlab.utils import assert_positive_int


__all__ = [
    'MeasurementRecord',
    'EmpiricalDistribution',
    'QuantumMachine',
    'analytic_probability',
    'sample_outcome',
    'run_trials',
    'post_state',
]


def _foot(w, u):
    # Coordinate of the particle's foot on the elastic, in [-1, 1] along u.
    return float(np.clip(np.dot(w.w, u.vector), -1., 1.))


def _breaks_up(beta, d):
    # A break strictly below the foot leaves the particle on the piece
    # attached to +u; ties go down.
    return beta < d


class MeasurementRecord(object):
    """
    The result of one run of the quantum machine.

    :param outcome: ``'up'`` or ``'down'``.
    :param post_state: The :class:`~qmlab.bloch.BallState` the particle ends
        in, ``+u`` or ``-u``.
    :param break_point: Where the elastic broke, in [-1, 1] along `u`.
    """

    def __init__(self, outcome, post_state, break_point):
        self.outcome = outcome
        self.post_state = post_state
        self.break_point = break_point

    def __repr__(self):
        return 'MeasurementRecord(outcome={!r}, post_state={!r}, ' \
               'break_point={!r})'.format(self.outcome, self.post_state,
                                          self.break_point)


class EmpiricalDistribution(object):
    """
    Outcome counts of repeated single-machine trials.

    :param n_up: Number of up outcomes.
    :param n_down: Number of down outcomes.
    :param seed: The seed the trials were drawn with, if any.
    """

    def __init__(self, n_up, n_down, seed=None):
        if n_up < 0 or n_down < 0 or n_up + n_down == 0:
            raise ValueError('Counts must be non-negative with a positive '
                             'total, got ({}, {}).'.format(n_up, n_down))
        self._n_up = int(n_up)
        self._n_down = int(n_down)
        self._seed = seed

    @property
    def n_up(self):
        return self._n_up

    @property
    def n_down(self):
        return self._n_down

    @property
    def n_total(self):
        return self._n_up + self._n_down

    @property
    def freq_up(self):
        return self._n_up / self.n_total

    @property
    def freq_down(self):
        return self._n_down / self.n_total

    @property
    def seed(self):
        return self._seed

    def merge(self, other):
        """Pool the counts of two runs with the same seed."""
        return EmpiricalDistribution(self._n_up + other.n_up,
                                     self._n_down + other.n_down,
                                     seed=self._seed)

    def to_dict(self):
        return {
            'n_up': self._n_up,
            'n_down': self._n_down,
            'n_total': self.n_total,
            'freq_up': self.freq_up,
            'freq_down': self.freq_down,
            'seed': self._seed,
        }

    def __repr__(self):
        return 'EmpiricalDistribution(n_up={}, n_down={}, seed={!r})'.format(
            self._n_up, self._n_down, self._seed)


class QuantumMachine(MeasurementModel):
    """
    The quantum machine: a particle at `w` in the unit ball, an elastic
    stretched between ``u`` and ``-u``. The particle falls orthogonally onto
    the elastic, the elastic breaks at a uniformly distributed point, and the
    particle is pulled to the end of the piece it sticks to. Landing on
    ``u`` is the outcome ``'up'``.

    With ``d = w . u`` the foot of the particle, the up probability is the
    length of the piece towards ``u`` over the whole length,
    ``(1 + d) / 2``.

    See :class:`~qmlab.machines.base.MeasurementModel` for the sampling
    protocol.

    :param w: A :class:`~qmlab.bloch.BallState`.
    :param u: A :class:`~qmlab.bloch.Direction`.
    """

    def __init__(self, w, u):
        if not isinstance(w, BallState):
            raise TypeError('w must be a BallState.')
        if not isinstance(u, Direction):
            raise TypeError('u must be a Direction.')
        self._w = w
        self._u = u
        self._d = _foot(w, u)
        super(QuantumMachine, self).__init__(OUTCOMES, draws_per_trial=1)

    @property
    def w(self):
        """The state of the particle."""
        return self._w

    @property
    def u(self):
        """The measurement direction."""
        return self._u

    @property
    def foot(self):
        """Where the particle sticks to the elastic, in [-1, 1]."""
        return self._d

    def _probs(self):
        p_up = (1. + self._d) / 2.
        return np.array([p_up, 1. - p_up])

    def _sample(self, stream, n_samples):
        beta = stream.break_points(n_samples)
        return np.where(_breaks_up(beta, self._d), 0, 1)

    def measure(self, stream):
        """
        Run the machine once and report where the particle ended.

        :param stream: A :class:`~qmlab.streams.RandomStream`.
        :return: A :class:`MeasurementRecord`.
        """
        if not isinstance(stream, RandomStream):
            raise TypeError('stream must be a RandomStream.')
        beta = float(stream.break_points())
        outcome = UP if _breaks_up(beta, self._d) else DOWN
        return MeasurementRecord(outcome, post_state(outcome, self._u), beta)


def analytic_probability(w, u):
    """
    The mechanistic outcome probabilities of a machine in state `w` measured
    along `u`, ``((1 + w.u) / 2, (1 - w.u) / 2)``. For ``w = (a - b) v``
    these are ``a cos^2(theta/2) + b sin^2(theta/2)`` and
    ``a sin^2(theta/2) + b cos^2(theta/2)`` with `theta` the angle between
    `v` and `u`.

    :param w: A :class:`~qmlab.bloch.BallState`.
    :param u: A :class:`~qmlab.bloch.Direction`.
    :return: A tuple ``(p_up, p_down)``.
    """
    p_up, p_down = QuantumMachine(w, u).probs()
    return float(p_up), float(p_down)


def sample_outcome(w, u, rng):
    """
    One run of the quantum machine.

    :param w: A :class:`~qmlab.bloch.BallState`.
    :param u: A :class:`~qmlab.bloch.Direction`.
    :param rng: A :class:`~qmlab.streams.RandomStream`.
    :return: A :class:`MeasurementRecord`.
    """
    return QuantumMachine(w, u).measure(rng)


def run_trials(w, u, n, seed, n_shards=1, n_workers=None, verbose=False):
    """
    `n` independent runs of the quantum machine, split into `n_shards`
    shards with their own child streams and merged by summing counts. The
    result is identical for fixed ``(seed, n, n_shards)``.

    :param w: A :class:`~qmlab.bloch.BallState`.
    :param u: A :class:`~qmlab.bloch.Direction`.
    :param n: A positive int.
    :param seed: A non-negative integer seed.
    :param n_shards: A positive int.
    :param n_workers: Worker threads for the shards.
    :param verbose: Whether to print shard progress.
    :return: An :class:`EmpiricalDistribution`.
    """
    n = assert_positive_int(n, 'n')
    machine = QuantumMachine(w, u)
    counts = run_sharded(machine.count, n, seed, n_shards=n_shards,
                         n_workers=n_workers, verbose=verbose)
    n_up, n_down = np.sum(counts, axis=0).tolist()
    return EmpiricalDistribution(n_up, n_down, seed=seed)


def post_state(outcome, u):
    """The ray state at ``+u`` for up and ``-u`` for down."""
    sign = 1. if outcome == UP else -1.
    return make_ball_state(*(sign * u.vector))
