#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Evolutions of ball states and the two ways of lifting them from surface
points to the interior.

The *mixture lift* evolves the two endpoints ``+-v`` of a decomposition and
keeps the ignorance weights ``(a, b)``. The *pure lift* evolves the density
operator itself. Unitary evolutions rotate the ball, so both lifts agree.
The nonlinear evolution ``W -> e^{Gt} W e^{Gt} / tr(...)`` does not act
linearly on the ball and the lifts drift apart by an amount that depends on
the decomposition.
"""

from __future__ import absolute_import
from __future__ import division

import numpy as np
from six.moves import range, zip

from qmlab.bloch import (
    Decomposition,
    DensityMatrix,
    Direction,
    ball_from_density,
    density_from_ball,
    make_ball_state,
    recompose,
)
from qmlab.hilbert import herm_exp, spinor, unitary_exp
from qmlab.utils import (
    NonHermitian,
    as_square_matrix,
    assert_hermitian,
)


__all__ = [
    'UNITARY',
    'NONLINEAR',
    'KINDS',
    'EvolutionSpec',
    'LiftTrajectory',
    'evolve_ray',
    'mixture_lift',
    'pure_lift',
    'divergence_trajectory',
    'time_grid',
]


UNITARY = 'unitary'
NONLINEAR = 'nonlinear'
KINDS = (UNITARY, NONLINEAR)


class EvolutionSpec(object):
    """
    An evolution of one spin for a time `t`.

    :param generator: A Hermitian 2x2 matrix `G`.
    :param kind: ``'unitary'`` for ``exp(-i G t)`` or ``'nonlinear'`` for the
        normalized conjugation by ``exp(G t)``.
    :param t: A non-negative float.
    """

    def __init__(self, generator, kind=NONLINEAR, t=0.):
        generator = as_square_matrix(generator, 'generator', dims=(2,))
        assert_hermitian(generator, 'generator', NonHermitian)
        if kind not in KINDS:
            raise ValueError('kind must be one of {}, got {!r}.'.format(
                list(KINDS), kind))
        t = float(t)
        if not np.isfinite(t) or t < 0:
            raise ValueError('t must be a finite non-negative number, got '
                             '{}.'.format(t))
        self._generator = generator
        self._kind = kind
        self._t = t

    @property
    def generator(self):
        return self._generator

    @property
    def kind(self):
        return self._kind

    @property
    def t(self):
        return self._t

    def at(self, t):
        """The same evolution for another time."""
        return EvolutionSpec(self._generator, self._kind, t)

    def operator(self, rescaled=False):
        """
        The 2x2 operator acting on spinors: ``exp(-i G t)`` or ``exp(G t)``.

        :param rescaled: For the nonlinear kind, divide ``exp(G t)`` by its
            largest eigenvalue so the entries stay bounded for large `t`.
            Normalized evolutions do not depend on this factor.
        """
        if self._kind == UNITARY:
            return unitary_exp(self._generator, self._t)
        return herm_exp(self._generator, self._t, rescaled=rescaled)

    def __repr__(self):
        return 'EvolutionSpec(kind={!r}, t={!r})'.format(self._kind, self._t)


def _bloch_of_spinor(psi):
    overlap = np.conj(psi[0]) * psi[1]
    vec = np.array([2. * overlap.real, 2. * overlap.imag,
                    abs(psi[0]) ** 2 - abs(psi[1]) ** 2])
    return vec / np.linalg.norm(vec)


def _evolve_spinor(v, spec):
    psi = spinor(v)
    out = spec.operator(rescaled=True).dot(psi)
    norm2 = float(np.vdot(out, out).real)
    if norm2 == 0.:
        # Only a ray in the decaying eigenspace underflows; that ray is fixed.
        return psi, 0.
    return out / np.sqrt(norm2), norm2


def evolve_ray(v, spec):
    """
    Evolve a ray state. The spinor of `v` is multiplied by
    :meth:`EvolutionSpec.operator` and renormalized, so the result stays on
    the sphere. Under ``G = sigma_z`` the nonlinear kind drives rays towards
    ``+z``: ``+x`` becomes ``(sech 2t, 0, tanh 2t)``.

    :param v: A :class:`~qmlab.bloch.Direction`.
    :param spec: An :class:`EvolutionSpec`.
    :return: A :class:`~qmlab.bloch.Direction`.
    """
    if not isinstance(v, Direction):
        raise TypeError('v must be a Direction.')
    if spec.t == 0.:
        return v
    psi, _ = _evolve_spinor(v, spec)
    return Direction(_bloch_of_spinor(psi))


def mixture_lift(d, spec, reweighted=False):
    """
    Evolve a decomposed state by evolving its endpoints:
    ``a * evolve_ray(v) + b * evolve_ray(-v)``.

    With `reweighted` the weights become ``a |M psi_v|^2`` and
    ``b |M psi_{-v}|^2``, normalized, which reproduces :func:`pure_lift`
    for every decomposition.

    :param d: A :class:`~qmlab.bloch.Decomposition`.
    :param spec: An :class:`EvolutionSpec`.
    :param reweighted: Whether the branch weights follow the branch norms.
    :return: A :class:`~qmlab.bloch.BallState`.
    """
    if not isinstance(d, Decomposition):
        raise TypeError('d must be a Decomposition.')
    if spec.t == 0.:
        return recompose(d)
    psi_p, norm_p = _evolve_spinor(d.v, spec)
    psi_m, norm_m = _evolve_spinor(d.v.antipode(), spec)
    a, b = d.a, d.b
    if reweighted and a * norm_p + b * norm_m > 0.:
        a, b = a * norm_p, b * norm_m
        a, b = a / (a + b), b / (a + b)
    w = a * _bloch_of_spinor(psi_p) + b * _bloch_of_spinor(psi_m)
    return make_ball_state(*w)


def pure_lift(W, spec):
    """
    Evolve a density operator directly: ``U W U^dagger`` for the unitary
    kind, ``M W M / tr(M W M)`` with ``M = exp(G t)`` for the nonlinear kind.
The nonlinear update uses the rescaled ``M``, so it stays finite for
every `t`.

    :param W: A 2x2 :class:`~qmlab.bloch.DensityMatrix` or array-like.
    :param spec: An :class:`EvolutionSpec`.
    :return: A :class:`~qmlab.bloch.BallState`.
    """
    if not isinstance(W, DensityMatrix):
        W = DensityMatrix(W)
    if spec.t == 0.:
        return ball_from_density(W)
    op = spec.operator(rescaled=True)
    out = op.dot(W.entries).dot(op.conj().T)
    if spec.kind == NONLINEAR:
        trace = np.trace(out).real
        if trace == 0.:
            # W is the projector onto the decaying eigenray, which is fixed.
            return ball_from_density(W)
        out = out / trace
    out = 0.5 * (out + out.conj().T)
    return ball_from_density(out)


class LiftTrajectory(object):
    """
    Both lifts of one initial state sampled on a time grid.

    :param times: A 1-D sequence of times.
    :param mixture_points: The mixture-lift :class:`~qmlab.bloch.BallState`
        at each time.
    :param pure_points: The pure-lift :class:`~qmlab.bloch.BallState` at
        each time.
    """

    def __init__(self, times, mixture_points, pure_points):
        times = np.array(times, dtype=np.float64).reshape(-1)
        if not (len(times) == len(mixture_points) == len(pure_points)):
            raise ValueError(
                'times, mixture_points and pure_points need equal lengths, '
                'got {}, {}, {}.'.format(len(times), len(mixture_points),
                                         len(pure_points)))
        times.flags.writeable = False
        self._times = times
        self._mixture_points = list(mixture_points)
        self._pure_points = list(pure_points)
        divergence = np.array([m.distance_to(p) for m, p in
                               zip(self._mixture_points, self._pure_points)])
        divergence.flags.writeable = False
        self._divergence = divergence

    @property
    def times(self):
        return self._times

    @property
    def mixture_points(self):
        return self._mixture_points

    @property
    def pure_points(self):
        return self._pure_points

    @property
    def divergence(self):
        """Euclidean distances between the two lifts, one per time."""
        return self._divergence

    def max_divergence(self):
        return float(np.max(self._divergence))

    def argmax_t(self):
        """The first time at which the divergence is largest."""
        return float(self._times[int(np.argmax(self._divergence))])

    def rows(self):
        """
        One tuple per time:
        ``(t, mix_x, mix_y, mix_z, pure_x, pure_y, pure_z, divergence)``.
        """
        rows = []
        for i in range(len(self._times)):
            rows.append((float(self._times[i]),) +
                        tuple(self._mixture_points[i].w.tolist()) +
                        tuple(self._pure_points[i].w.tolist()) +
                        (float(self._divergence[i]),))
        return rows


def time_grid(t_max, n_steps):
    """``n_steps + 1`` equally spaced times from 0 to `t_max`."""
    t_max = float(t_max)
    if not np.isfinite(t_max) or t_max < 0:
        raise ValueError('t_max must be a finite non-negative number, got '
                         '{}.'.format(t_max))
    return np.linspace(0., t_max, int(n_steps) + 1)


def divergence_trajectory(d, spec, t_grid, reweighted=False):
    """
    Run both lifts from the same decomposition over `t_grid`. The pure lift
    starts from ``density_from_ball(d)``; at ``t = 0`` both points are the
    recomposed ball point, so the divergence starts at 0.

    :param d: A :class:`~qmlab.bloch.Decomposition`.
    :param spec: An :class:`EvolutionSpec`; its `t` is ignored.
    :param t_grid: Times starting at 0, strictly increasing.
    :param reweighted: Passed to :func:`mixture_lift`.
    :return: A :class:`LiftTrajectory`.
    """
    t_grid = np.asarray(t_grid, dtype=np.float64).reshape(-1)
    if t_grid.shape[0] == 0 or t_grid[0] != 0.:
        raise ValueError('t_grid must start at 0.')
    if np.any(np.diff(t_grid) <= 0):
        raise ValueError('t_grid must be strictly increasing.')
    W = density_from_ball(d)
    start = recompose(d)
    mixture_points, pure_points = [], []
    for t in t_grid:
        if t == 0.:
            mixture_points.append(start)
            pure_points.append(start)
            continue
        spec_t = spec.at(t)
        mixture_points.append(mixture_lift(d, spec_t, reweighted=reweighted))
        pure_points.append(pure_lift(W, spec_t))
    return LiftTrajectory(t_grid, mixture_points, pure_points)
