#!/usr/bin/env python
# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import division

import numpy as np
from six.moves import range, zip

from qmlab.bloch import BallState, Direction
from qmlab.machines.base import MeasurementModel
from qmlab.machines.single import analytic_probability
from qmlab.outcomes import JointDistribution, OUTCOME_PAIRS
from qmlab.streams import RandomStream, run_sharded
from qmlab.utils import (
    CLAMP_TOL,
    assert_positive_int,
    assert_probability,
)


__all__ = [
    'ROD_RULES',
    'RodState',
    'ChshSetting',
    'coplanar_direction',
    'RodMachine',
    'singlet_joint_probability',
    'protocol_joint_probability',
    'sample_singlet',
    'product_joint_probability',
    'marginals',
    'correlation',
    'correlation_from_joint',
    'chsh',
    'optimal_chsh_setting',
    'max_chsh_over_grid',
    'tv_distance',
    'max_cell_gap',
    'run_epr_trials',
    'run_chsh_trials',
]


# How the rod moves the partner once the first particle has landed on
# +-u: to the antipode -+u, or along with it to +-u.
ROD_RULES = {
    'antipodal': -1.,
    'parallel': 1.,
}


class RodState(object):
    """
    The state of two quantum machines whose particles may be joined by a
    rigid rod.

    The rod is only modelled for the singlet preparation, both particles at
    the centers of their balls. Disconnected machines can be in any states
    and then behave as two independent machines.

    :param w1: A :class:`~qmlab.bloch.BallState`, the first particle.
    :param w2: A :class:`~qmlab.bloch.BallState`, the second particle.
    :param connected: Whether the rod is present.
    """

    def __init__(self, w1, w2, connected):
        if not (isinstance(w1, BallState) and isinstance(w2, BallState)):
            raise TypeError('w1 and w2 must be BallStates.')
        connected = bool(connected)
        if connected and (w1.radius >= CLAMP_TOL or w2.radius >= CLAMP_TOL):
            raise ValueError(
                'A connected rod is only defined with both particles at the '
                'centers, got |w1| = {}, |w2| = {}.'.format(w1.radius,
                                                           w2.radius))
        self._w1 = w1
        self._w2 = w2
        self._connected = connected

    @classmethod
    def singlet(cls):
        """Both particles at the centers, joined by the rod."""
        center = BallState([0., 0., 0.])
        return cls(center, center, True)

    @property
    def w1(self):
        return self._w1

    @property
    def w2(self):
        return self._w2

    @property
    def connected(self):
        return self._connected

    def __repr__(self):
        return 'RodState(w1={!r}, w2={!r}, connected={!r})'.format(
            self._w1, self._w2, self._connected)


class ChshSetting(object):
    """
    The four measurement directions of a CHSH test: `a`, `a_prime` on the
    first machine and `b`, `b_prime` on the second.
    """

    def __init__(self, a, a_prime, b, b_prime):
        for name, u in zip(('a', 'a_prime', 'b', 'b_prime'),
                           (a, a_prime, b, b_prime)):
            if not isinstance(u, Direction):
                raise TypeError('ChshSetting.{} must be a Direction.'.format(
                    name))
        self.a = a
        self.a_prime = a_prime
        self.b = b
        self.b_prime = b_prime

    @classmethod
    def from_angles(cls, a, a_prime, b, b_prime):
        """
        Coplanar setting: each angle (radians) is measured from +z towards
        +x in the x-z plane.
        """
        return cls(*[coplanar_direction(angle)
                     for angle in (a, a_prime, b, b_prime)])

    def terms(self):
        """
        The four ``(sign, u1, u2)`` terms of
        ``S = E(a,b) - E(a,b') + E(a',b) + E(a',b')``.
        """
        return [(1., self.a, self.b),
                (-1., self.a, self.b_prime),
                (1., self.a_prime, self.b),
                (1., self.a_prime, self.b_prime)]


def coplanar_direction(angle):
    """The direction at `angle` from +z towards +x in the x-z plane."""
    return Direction([np.sin(angle), 0., np.cos(angle)])


class RodMachine(MeasurementModel):
    """
    Two quantum machines measured along `u1` and `u2`, with outcomes the
    pairs in :data:`~qmlab.outcomes.OUTCOME_PAIRS`.

    With the rod connected, a trial runs as follows:

    1. one of the two elastics breaks first, the first machine's with
       probability `first_break_prob`;
    2. that machine, its particle at the center, gives up or down with
       probability 1/2 each;
    3. the rod drags the other particle to the antipode ``-+u_i`` of where
       the first landed (``+-u_i``), or along to ``+-u_i`` for the
       ``'parallel'`` rule;
    4. the rod breaks;
    5. the other machine runs on its own from that surface state.

    Only the antipodal rule reproduces the singlet statistics; the parallel
    rule is kept to show that. A disconnected :class:`RodState` gives two
    independent machines.

    Each trial consumes three uniform draws: which elastic breaks first and
    the two break points.

    :param u1: A :class:`~qmlab.bloch.Direction` for the first machine.
    :param u2: A :class:`~qmlab.bloch.Direction` for the second machine.
    :param state: A :class:`RodState`. Defaults to the singlet preparation.
    :param first_break_prob: Probability that the first machine's elastic
        breaks first.
    :param rod_rule: ``'antipodal'`` (default) or ``'parallel'``.
    """

    def __init__(self, u1, u2, state=None, first_break_prob=0.5,
                 rod_rule='antipodal'):
        if not (isinstance(u1, Direction) and isinstance(u2, Direction)):
            raise TypeError('u1 and u2 must be Directions.')
        if rod_rule not in ROD_RULES:
            raise ValueError('rod_rule must be one of {}, got {!r}.'.format(
                sorted(ROD_RULES), rod_rule))
        self._u1 = u1
        self._u2 = u2
        self._state = RodState.singlet() if state is None else state
        self._first_break_prob = assert_probability(first_break_prob,
                                                    'first_break_prob')
        self._rod_rule = rod_rule
        super(RodMachine, self).__init__(OUTCOME_PAIRS, draws_per_trial=3)

    @property
    def state(self):
        return self._state

    @property
    def rod_rule(self):
        return self._rod_rule

    @property
    def first_break_prob(self):
        return self._first_break_prob

    def joint(self):
        """The analytic joint distribution of the protocol."""
        if self._state.connected:
            return protocol_joint_probability(
                self._u1, self._u2, self._first_break_prob, self._rod_rule)
        return product_joint_probability(self._state.w1, self._state.w2,
                                         self._u1, self._u2)

    def _probs(self):
        return self.joint().as_array()

    def _sample(self, stream, n_samples):
        draws = stream.uniform((n_samples, 3))
        first_is_1 = draws[:, 0] < self._first_break_prob
        beta_first = 2. * draws[:, 1] - 1.
        beta_second = 2. * draws[:, 2] - 1.

        d1 = float(np.dot(self._state.w1.w, self._u1.vector))
        d2 = float(np.dot(self._state.w2.w, self._u2.vector))
        first_up = beta_first < np.where(first_is_1, d1, d2)
        if self._state.connected:
            # The partner sits at sign * (+-u_first); its foot on its own
            # elastic is that point projected on u_other.
            c = float(np.dot(self._u1.vector, self._u2.vector))
            landing = np.where(first_up, 1., -1.)
            d_second = ROD_RULES[self._rod_rule] * landing * c
        else:
            d_second = np.where(first_is_1, d2, d1)
        second_up = beta_second < d_second

        up1 = np.where(first_is_1, first_up, second_up)
        up2 = np.where(first_is_1, second_up, first_up)
        return 2 * (~up1).astype(np.int64) + (~up2).astype(np.int64)


def singlet_joint_probability(u1, u2):
    """
    The joint outcome probabilities of the rod model in the singlet
    preparation, with `alpha` the angle between `u1` and `u2`::

        (up, up)     = sin^2(alpha/2) / 2    (up, down)   = cos^2(alpha/2) / 2
        (down, up)   = cos^2(alpha/2) / 2    (down, down) = sin^2(alpha/2) / 2

    :param u1: A :class:`~qmlab.bloch.Direction`.
    :param u2: A :class:`~qmlab.bloch.Direction`.
    :return: A :class:`~qmlab.outcomes.JointDistribution`.
    """
    alpha = u1.angle_to(u2)
    same = 0.5 * np.sin(alpha / 2.) ** 2
    diff = 0.5 * np.cos(alpha / 2.) ** 2
    return JointDistribution(same, diff, diff, same)


def protocol_joint_probability(u1, u2, first_break_prob=0.5,
                               rod_rule='antipodal'):
    """
    The joint distribution obtained by enumerating the branches of the
    connected :class:`RodMachine` protocol with single-machine
    probabilities. With the antipodal rule it equals
    :func:`singlet_joint_probability` for every `first_break_prob`.

    :return: A :class:`~qmlab.outcomes.JointDistribution`.
    """
    first_break_prob = assert_probability(first_break_prob,
                                          'first_break_prob')
    sign = ROD_RULES[rod_rule]
    center = BallState([0., 0., 0.])
    cells = np.zeros((2, 2))
    for first, weight in ((0, first_break_prob), (1, 1. - first_break_prob)):
        u_first, u_other = (u1, u2) if first == 0 else (u2, u1)
        p_first = analytic_probability(center, u_first)
        for i_first in range(2):
            landing = 1. if i_first == 0 else -1.
            partner = BallState(sign * landing * u_first.vector)
            p_other = analytic_probability(partner, u_other)
            for i_other in range(2):
                p = weight * p_first[i_first] * p_other[i_other]
                if first == 0:
                    cells[i_first, i_other] += p
                else:
                    cells[i_other, i_first] += p
    return JointDistribution(*cells.reshape(-1))


def sample_singlet(u1, u2, rng, first_break_prob=0.5, rod_rule='antipodal'):
    """
    One trial of the rod model in the singlet preparation.

    :param u1: A :class:`~qmlab.bloch.Direction`.
    :param u2: A :class:`~qmlab.bloch.Direction`.
    :param rng: A :class:`~qmlab.streams.RandomStream`.
    :return: A pair of outcomes, e.g. ``('up', 'down')``.
    """
    machine = RodMachine(u1, u2, first_break_prob=first_break_prob,
                         rod_rule=rod_rule)
    return OUTCOME_PAIRS[machine.sample(rng)]


def product_joint_probability(w1, w2, u1, u2):
    """
    The joint distribution of two independent machines in states `w1`, `w2`,
    the product of the single-machine probabilities.

    :return: A :class:`~qmlab.outcomes.JointDistribution`.
    """
    p1 = analytic_probability(w1, u1)
    p2 = analytic_probability(w2, u2)
    return JointDistribution(*np.outer(p1, p2).reshape(-1))


def marginals(j):
    """
    The probabilities of up on the first and on the second side.

    :param j: A :class:`~qmlab.outcomes.JointDistribution`.
    :return: A tuple of two floats.
    """
    return j.p_uu + j.p_ud, j.p_uu + j.p_du


def correlation_from_joint(j):
    """``E = p_uu - p_ud - p_du + p_dd`` of a joint distribution."""
    return j.p_uu - j.p_ud - j.p_du + j.p_dd


def correlation(u1, u2):
    """
    The outcome correlation of the singlet model, ``-cos(alpha)``.

    :return: A float.
    """
    return correlation_from_joint(singlet_joint_probability(u1, u2))


def chsh(s):
    """
    ``S = E(a,b) - E(a,b') + E(a',b) + E(a',b')`` of the singlet model.

    :param s: A :class:`ChshSetting`.
    :return: A float with ``|S| <= 2 sqrt(2)``.
    """
    return float(sum(sign * correlation(u1, u2)
                     for sign, u1, u2 in s.terms()))


def optimal_chsh_setting():
    """The coplanar setting ``a = 0, a' = pi/2, b = pi/4, b' = 3 pi/4``."""
    return ChshSetting.from_angles(0., np.pi / 2, np.pi / 4, 3 * np.pi / 4)


def max_chsh_over_grid(n_grid=16):
    """
    Search coplanar settings on a grid of `n_grid` angles in [0, 2 pi) for
    the largest ``|S|``. `a` is fixed at 0 since only angle differences
    matter.

    :param n_grid: A positive int; multiples of 8 contain the optimum.
    :return: A tuple ``(S, ChshSetting)`` at the maximum of ``|S|``.
    """
    n_grid = assert_positive_int(n_grid, 'n_grid')
    angles = 2. * np.pi * np.arange(n_grid) / n_grid
    a_p, b, b_p = np.meshgrid(angles, angles, angles, indexing='ij')

    def e(x, y):
        return -np.cos(x - y)

    s = e(0., b) - e(0., b_p) + e(a_p, b) + e(a_p, b_p)
    i, j, k = np.unravel_index(np.argmax(np.abs(s)), s.shape)
    setting = ChshSetting.from_angles(0., angles[i], angles[j], angles[k])
    return chsh(setting), setting


def tv_distance(j1, j2):
    """
    Total variation distance, half the L1 distance of the cell
    probabilities.

    :return: A float in [0, 1].
    """
    return float(0.5 * np.sum(np.abs(j1.as_array() - j2.as_array())))


def max_cell_gap(j1, j2):
    """The largest difference of a single cell probability."""
    return float(np.max(np.abs(j1.as_array() - j2.as_array())))


def run_epr_trials(u1, u2, n, seed, n_shards=1, n_workers=None,
                   verbose=False, first_break_prob=0.5, rod_rule='antipodal'):
    """
    `n` seeded trials of the rod model in the singlet preparation, sharded
    like :func:`~qmlab.machines.single.run_trials`.

    :return: The empirical :class:`~qmlab.outcomes.JointDistribution`.
    """
    n = assert_positive_int(n, 'n')
    machine = RodMachine(u1, u2, first_break_prob=first_break_prob,
                         rod_rule=rod_rule)
    counts = run_sharded(machine.count, n, seed, n_shards=n_shards,
                         n_workers=n_workers, verbose=verbose)
    return JointDistribution.from_counts(np.sum(counts, axis=0))


def run_chsh_trials(setting, n, seed, n_shards=1, n_workers=None,
                    verbose=False):
    """
    `n` trials for each of the four pairs of a CHSH setting. Each pair draws
    from its own child of ``RandomStream(seed)``.

    :param setting: A :class:`ChshSetting`.
    :return: A tuple ``(S, joints)`` with the empirical S and the list of
        four empirical joint distributions in :meth:`ChshSetting.terms`
        order.
    """
    streams = RandomStream(seed).spawn(4)
    joints = []
    s_value = 0.
    for (sign, u1, u2), stream in zip(setting.terms(), streams):
        j = run_epr_trials(u1, u2, n, stream, n_shards=n_shards,
                           n_workers=n_workers, verbose=verbose)
        joints.append(j)
        s_value += sign * correlation_from_joint(j)
    return s_value, joints
