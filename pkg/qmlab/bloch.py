#!/usr/bin/env python
# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import division

import numpy as np

from qmlab.utils import (
    EXACT_TOL,
    EIG_TOL,
    CLAMP_TOL,
    NormExceeded,
    DegenerateDecomposition,
    InvalidDensity,
    as_real_vector,
    as_square_matrix,
    assert_probability,
    assert_same_dim,
    is_hermitian,
    warn_numerical,
)


__all__ = [
    'Direction',
    'BallState',
    'Decomposition',
    'DensityMatrix',
    'direction_from_angles',
    'direction_from_vector',
    'make_ball_state',
    'decompose',
    'recompose',
    'density_from_ball',
    'ball_from_density',
    'purity',
    'trace_distance',
]


class Direction(object):
    """
    A unit vector of 3-space, i.e. a point on the surface of the unit ball.
    The polar angle `theta` is measured from the +z axis and the azimuth
    `phi` from the +x axis.

    Build instances with :func:`direction_from_angles` or
    :func:`direction_from_vector`.

    :param vector: A unit 3-vector.
    """

    def __init__(self, vector):
        self._vector = as_real_vector(vector, 3, 'Direction.vector')
        norm = np.linalg.norm(self._vector)
        if abs(norm - 1.) > EXACT_TOL:
            raise ValueError(
                'Direction must have unit norm, got {!r}.'.format(norm))
        x, y, z = self._vector
        self._theta = float(np.arctan2(np.hypot(x, y), z))
        self._phi = float(np.mod(np.arctan2(y, x), 2 * np.pi))

    @property
    def vector(self):
        """The Cartesian unit vector (read-only numpy array)."""
        return self._vector

    @property
    def theta(self):
        """The polar angle in [0, pi]."""
        return self._theta

    @property
    def phi(self):
        """The azimuth in [0, 2 pi)."""
        return self._phi

    def antipode(self):
        """The diametrically opposed direction -u."""
        return Direction(-self._vector)

    def angle_to(self, other):
        """
        The angle between two directions, in [0, pi].

        :param other: A :class:`Direction`.
        :return: A float.
        """
        cross = np.linalg.norm(np.cross(self._vector, other.vector))
        dot = float(np.dot(self._vector, other.vector))
        return float(np.arctan2(cross, dot))

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self._vector, dtype=dtype)

    def __repr__(self):
        return 'Direction(theta={!r}, phi={!r})'.format(self._theta,
                                                        self._phi)


def direction_from_angles(theta, phi=0.):
    """
    Build a :class:`Direction` from spherical angles.

    :param theta: The polar angle in radians, measured from +z.
    :param phi: The azimuth in radians.
    :return: A :class:`Direction`.
    """
    theta, phi = float(theta), float(phi)
    vector = [np.sin(theta) * np.cos(phi),
              np.sin(theta) * np.sin(phi),
              np.cos(theta)]
    return Direction(vector)


def direction_from_vector(x, y, z):
    """
    Build a :class:`Direction` by normalizing a nonzero 3-vector.

    :return: A :class:`Direction`.
    """
    vector = np.array([x, y, z], dtype=np.float64)
    norm = np.linalg.norm(vector)
    if norm == 0.:
        raise ValueError('Cannot build a Direction from the zero vector.')
    return Direction(vector / norm)


class BallState(object):
    """
    A point `w` of the closed unit ball, the state of one quantum machine.
    Points on the surface are ray states, interior points are density
    states. Use :func:`make_ball_state` to build a state from raw
    coordinates that may overshoot the surface by rounding.

    :param w: A 3-vector with norm at most 1 (within 1e-12).
    """

    def __init__(self, w):
        self._w = as_real_vector(w, 3, 'BallState.w')
        self._radius = float(np.linalg.norm(self._w))
        if self._radius > 1. + EXACT_TOL:
            raise NormExceeded(
                'BallState norm {!r} exceeds 1.'.format(self._radius))

    @property
    def w(self):
        """The coordinates of the point (read-only numpy array)."""
        return self._w

    @property
    def radius(self):
        """The Euclidean norm |w|."""
        return self._radius

    def is_ray(self):
        """Whether the state lies on the surface (a ray state)."""
        return abs(self._radius - 1.) <= EXACT_TOL

    def is_center(self):
        """Whether the state is numerically the center of the ball."""
        return self._radius < CLAMP_TOL

    def distance_to(self, other):
        """Euclidean distance between two ball states."""
        return float(np.linalg.norm(self._w - other.w))

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self._w, dtype=dtype)

    def __repr__(self):
        return 'BallState({!r}, {!r}, {!r})'.format(*self._w.tolist())


def make_ball_state(x, y, z):
    """
    Build a :class:`BallState`, pulling points that overshoot the surface by
    less than 1e-9 back onto it.

    :param x: A float.
    :param y: A float.
    :param z: A float.
    :return: A :class:`BallState`.
    """
    w = np.array([x, y, z], dtype=np.float64)
    norm = np.linalg.norm(w)
    if norm > 1. + CLAMP_TOL:
        raise NormExceeded(
            'Point ({}, {}, {}) has norm {!r} > 1.'.format(x, y, z, norm))
    if norm > 1.:
        if norm > 1. + EXACT_TOL:
            warn_numerical('Clamped ball point with norm {!r} onto the '
                           'surface.'.format(norm))
        w = w / norm
    return BallState(w)


class Decomposition(object):
    """
    A ball state written as the convex combination ``a * v + b * (-v)`` of two
    antipodal surface points.

    :param v: A :class:`Direction`.
    :param a: The weight of `v`, in [0, 1].
    :param b: The weight of `-v`. Defaults to ``1 - a``.
    """

    def __init__(self, v, a, b=None):
        if not isinstance(v, Direction):
            raise TypeError('Decomposition.v must be a Direction.')
        a = assert_probability(a, 'Decomposition.a')
        b = 1. - a if b is None else assert_probability(b, 'Decomposition.b')
        if abs(a + b - 1.) > EXACT_TOL:
            raise ValueError(
                'Decomposition weights must sum to 1, got {} + {}.'.format(
                    a, b))
        self._v = v
        self._a = a
        self._b = b

    @property
    def v(self):
        """The axis direction."""
        return self._v

    @property
    def a(self):
        """The weight of `v`."""
        return self._a

    @property
    def b(self):
        """The weight of `-v`."""
        return self._b

    def with_weights(self, a, b=None):
        """The same axis with other weights."""
        return Decomposition(self._v, a, b)

    def __repr__(self):
        return 'Decomposition(v={!r}, a={!r}, b={!r})'.format(
            self._v, self._a, self._b)


class DensityMatrix(object):
    """
    A density operator: Hermitian, unit trace and positive semidefinite.
    Dimension 2 describes one spin, dimension 4 a joint pair.

    :param entries: A 2x2 or 4x4 complex array-like.
    """

    def __init__(self, entries):
        mat = as_square_matrix(entries, 'DensityMatrix.entries')
        if not is_hermitian(mat, EXACT_TOL):
            raise InvalidDensity('DensityMatrix must be Hermitian.')
        trace = np.trace(mat)
        if abs(trace - 1.) > EXACT_TOL:
            raise InvalidDensity(
                'DensityMatrix must have unit trace, got {!r}.'.format(trace))
        self._eigenvalues = np.linalg.eigvalsh(mat)
        if self._eigenvalues[0] < -EXACT_TOL:
            raise InvalidDensity(
                'DensityMatrix must be positive semidefinite, smallest '
                'eigenvalue {!r}.'.format(float(self._eigenvalues[0])))
        self._entries = mat

    @property
    def entries(self):
        """The matrix entries (read-only numpy array)."""
        return self._entries

    @property
    def dim(self):
        """The Hilbert space dimension, 2 or 4."""
        return self._entries.shape[0]

    def eigenvalues(self):
        """The eigenvalues in ascending order."""
        return self._eigenvalues.copy()

    def is_projector(self, tol=EIG_TOL):
        """Whether the operator is a rank-1 projection (a ray state)."""
        return bool(np.sum(np.abs(self._eigenvalues) > tol) == 1)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self._entries, dtype=dtype)

    def __repr__(self):
        return 'DensityMatrix({!r})'.format(self._entries.tolist())


def decompose(w, axis=None):
    """
    Write a ball state as a convex combination of two antipodal surface
    points. For ``|w| > 0`` the axis is ``w / |w|`` with ``a >= b``. The
    center admits every diameter, so the axis must then be given.

    :param w: A :class:`BallState`.
    :param axis: A :class:`Direction`, used (and required) only when `w` is
        the center of the ball.
    :return: A :class:`Decomposition`.
    """
    radius = w.radius
    if radius < CLAMP_TOL:
        if axis is None:
            raise DegenerateDecomposition(
                'The center of the ball has no preferred diameter; pass '
                '`axis` explicitly.')
        v = axis
    else:
        v = Direction(w.w / radius)
    radius = min(radius, 1.)
    return Decomposition(v, (1. + radius) / 2., (1. - radius) / 2.)


def recompose(d):
    """
    The ball point ``(a - b) * v`` of a decomposition.

    :param d: A :class:`Decomposition`.
    :return: A :class:`BallState`.
    """
    return make_ball_state(*((d.a - d.b) * d.v.vector))


def density_from_ball(d):
    """
    The density operator of a decomposed ball state::

        [[a c^2 + b s^2,          (a - b) s c e^{-i phi}],
         [(a - b) s c e^{i phi},  a s^2 + b c^2         ]]

    with ``c = cos(theta / 2)``, ``s = sin(theta / 2)`` and `(theta, phi)` the
    angles of the axis. Surface points give rank-1 projectors.

    :param d: A :class:`Decomposition`.
    :return: A :class:`DensityMatrix`.
    """
    a, b = d.a, d.b
    c, s = np.cos(d.v.theta / 2.), np.sin(d.v.theta / 2.)
    off = (a - b) * s * c * np.exp(-1j * d.v.phi)
    entries = np.array([[a * c ** 2 + b * s ** 2, off],
                        [np.conj(off), a * s ** 2 + b * c ** 2]],
                       dtype=np.complex128)
    return DensityMatrix(entries)


def _as_density(W):
    if isinstance(W, DensityMatrix):
        return W
    try:
        return DensityMatrix(W)
    except InvalidDensity:
        raise
    except ValueError as e:
        raise InvalidDensity(str(e))


def ball_from_density(W):
    """
    The ball point of a 2x2 density operator, inverse to
    :func:`density_from_ball` up to the choice of decomposition.

    :param W: A :class:`DensityMatrix` or a 2x2 array-like.
    :return: A :class:`BallState`.
    """
    W = _as_density(W)
    if W.dim != 2:
        raise InvalidDensity(
            'ball_from_density needs a 2x2 density, got dimension {}.'.format(
                W.dim))
    m = W.entries
    return make_ball_state(2. * m[0, 1].real,
                           -2. * m[0, 1].imag,
                           (m[0, 0] - m[1, 1]).real)


def purity(W):
    """
    The purity ``tr(W^2)``; equals ``(1 + |w|^2) / 2`` for a spin.

    :param W: A :class:`DensityMatrix` or array-like.
    :return: A float.
    """
    m = np.asarray(_as_density(W))
    return float(np.trace(m.dot(m)).real)


def trace_distance(W1, W2):
    """
    Half the trace norm of ``W1 - W2``. For spins this is half the Euclidean
    distance of the two ball points.

    :return: A float.
    """
    m1 = np.asarray(_as_density(W1))
    m2 = np.asarray(_as_density(W2))
    assert_same_dim(m1, m2, 'W1', 'W2')
    return float(0.5 * np.sum(np.abs(np.linalg.eigvalsh(m1 - m2))))
