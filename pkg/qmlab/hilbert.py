#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Standard Hilbert-space calculations for one and two spins. Nothing here
knows about the ball model; the functions serve as the reference the
mechanistic probabilities are checked against.

Two-spin index order is (1,1), (1,2), (2,1), (2,2), i.e. ``np.kron`` order
with the spin-up basis vector first.
"""

from __future__ import absolute_import
from __future__ import division

import numpy as np

from qmlab.outcomes import JointDistribution, OUTCOME_PAIRS, UP, DOWN
from qmlab.utils import (
    EXACT_TOL,
    SCHMIDT_TOL,
    DimensionMismatch,
    NonHermitian,
    as_real_vector,
    as_square_matrix,
    assert_hermitian,
    assert_same_dim,
)


__all__ = [
    'spinor',
    'projector',
    'ray_projector',
    'trace_probability',
    'tensor',
    'partial_trace',
    'singlet',
    'schmidt_rank',
    'is_product',
    'joint_quantum_probability',
    'spin_observable',
    'spin_expectation',
    'pauli_generator',
    'herm_exp',
    'unitary_exp',
]


_SIGMA = np.array([[[0, 1], [1, 0]],
                   [[0, -1j], [1j, 0]],
                   [[1, 0], [0, -1]]], dtype=np.complex128)


def _as_state_vector(z, dim, name='z'):
    z = np.array(z, dtype=np.complex128).reshape(-1)
    if z.shape[0] != dim:
        raise DimensionMismatch('{} should have {} amplitudes, got {}.'.format(
            name, dim, z.shape[0]))
    norm = np.linalg.norm(z)
    if abs(norm - 1.) > EXACT_TOL:
        raise ValueError('{} must have unit norm, got {!r}.'.format(name,
                                                                   norm))
    return z


def spinor(u):
    """
    The spin-up spinor along `u`, ``(cos(theta/2), e^{i phi} sin(theta/2))``.

    :param u: A :class:`~qmlab.bloch.Direction`.
    :return: A complex 2-vector.
    """
    return np.array([np.cos(u.theta / 2.),
                     np.exp(1j * u.phi) * np.sin(u.theta / 2.)],
                    dtype=np.complex128)


def ray_projector(z):
    """
    The projector ``|z><z|`` onto a unit vector of dimension 2 or 4.

    :param z: A unit complex vector.
    :return: A complex matrix.
    """
    z = np.array(z, dtype=np.complex128).reshape(-1)
    z = _as_state_vector(z, z.shape[0])
    if z.shape[0] not in (2, 4):
        raise DimensionMismatch('Only dimensions 2 and 4 are supported.')
    return np.outer(z, z.conj())


def projector(u):
    """
    The spectral projection for spin up along `u`. For ``u = +z`` this is
    ``[[1, 0], [0, 0]]`` and for ``u = -z`` it is ``[[0, 0], [0, 1]]``.

    :param u: A :class:`~qmlab.bloch.Direction`.
    :return: A 2x2 complex matrix.
    """
    psi = spinor(u)
    return np.outer(psi, psi.conj())


def trace_probability(W, E):
    """
    The trace-rule probability ``tr(W E)``.

    :param W: A density matrix (array-like or
        :class:`~qmlab.bloch.DensityMatrix`).
    :param E: A projector of the same dimension.
    :return: A float.
    """
    W = as_square_matrix(W, 'W')
    E = as_square_matrix(E, 'E')
    assert_same_dim(W, E, 'W', 'E')
    return float(np.trace(W.dot(E)).real)


def tensor(A, B):
    """
    The Kronecker product of two 2x2 operators.

    :return: A 4x4 complex matrix.
    """
    A = as_square_matrix(A, 'A', dims=(2,))
    B = as_square_matrix(B, 'B', dims=(2,))
    return np.kron(A, B)


def partial_trace(R, subsystem):
    """
    The reduced operator of one spin of a two-spin operator. `subsystem`
    names the spin that is kept: ``partial_trace(tensor(A, B), 2)`` equals
    ``tr(A) * B``.

    :param R: A 4x4 operator.
    :param subsystem: 1 or 2.
    :return: A 2x2 complex matrix.
    """
    R = as_square_matrix(R, 'R', dims=(4,))
    if subsystem not in (1, 2):
        raise ValueError('subsystem must be 1 or 2, got {!r}.'.format(
            subsystem))
    r = R.reshape(2, 2, 2, 2)
    if subsystem == 1:
        return np.einsum('ijkj->ik', r)
    return np.einsum('ijik->jk', r)


def singlet():
    """
    The normalized singlet ``(|up,down> - |down,up>) / sqrt(2)``.

    :return: A complex 4-vector.
    """
    return np.array([0., 1., -1., 0.], dtype=np.complex128) / np.sqrt(2.)


def schmidt_rank(z):
    """
    The number of Schmidt coefficients of a two-spin vector above 1e-10.
    Product vectors have rank 1, nonproduct vectors rank 2.

    :param z: A unit complex 4-vector.
    :return: 1 or 2.
    """
    z = _as_state_vector(z, 4)
    singular_values = np.linalg.svd(z.reshape(2, 2), compute_uv=False)
    return int(np.sum(singular_values > SCHMIDT_TOL))


def is_product(z):
    """Whether a two-spin vector is a product vector."""
    return schmidt_rank(z) == 1


def joint_quantum_probability(z, u1, u2):
    """
    The outcome-pair probabilities ``<z| P1 (x) P2 |z>`` for spin
    measurements along `u1` on the first spin and `u2` on the second.

    :param z: A unit complex 4-vector.
    :param u1: A :class:`~qmlab.bloch.Direction`.
    :param u2: A :class:`~qmlab.bloch.Direction`.
    :return: A :class:`~qmlab.outcomes.JointDistribution`.
    """
    z = _as_state_vector(z, 4)
    proj1 = {UP: projector(u1), DOWN: projector(u1.antipode())}
    proj2 = {UP: projector(u2), DOWN: projector(u2.antipode())}
    probs = []
    for o1, o2 in OUTCOME_PAIRS:
        op = np.kron(proj1[o1], proj2[o2])
        probs.append(np.vdot(z, op.dot(z)).real)
    return JointDistribution(*probs)


def spin_observable(u):
    """
    The spin operator ``S = P_u / 2 - P_{-u} / 2`` of a measurement along `u`.

    :return: A 2x2 complex matrix.
    """
    return 0.5 * projector(u) - 0.5 * projector(u.antipode())


def spin_expectation(W, u):
    """``tr(W S)`` for the spin operator along `u`."""
    return trace_probability(W, spin_observable(u))


def pauli_generator(h, h0=0.):
    """
    The Hermitian generator ``h0 I + h . sigma``. For example
    ``pauli_generator([0, 0, 1])`` is ``sigma_z``.

    :param h: A real 3-vector.
    :param h0: A float.
    :return: A 2x2 complex matrix.
    """
    h = as_real_vector(h, 3, 'h')
    return float(h0) * np.eye(2, dtype=np.complex128) + \
        np.einsum('i,ijk->jk', h, _SIGMA)


def _pauli_parts(H):
    # H = h0 * I + h . sigma
    h0 = 0.5 * np.trace(H).real
    h = np.array([H[0, 1].real, -H[0, 1].imag,
                  0.5 * (H[0, 0] - H[1, 1]).real])
    return h0, h


def _check_generator(H):
    H = as_square_matrix(H, 'H', dims=(2,))
    return assert_hermitian(H, 'H', NonHermitian)


def herm_exp(H, t, rescaled=False):
    """
    ``exp(H t)`` for a Hermitian 2x2 `H`, by the closed form::

        exp(H t) = e^{h0 t} (cosh(r t) I + sinh(r t) / r (h . sigma))

    where ``H = h0 I + h . sigma`` and ``r = |h|``.

    With `rescaled` the result is divided by its largest eigenvalue
    ``e^{h0 t + |r t|}``. The rescaled operator has entries in [-1, 1] for
    every `t`, and any normalized conjugation by it equals the one by
    ``exp(H t)``.

    :param H: A Hermitian 2x2 matrix.
    :param t: A float.
    :param rescaled: Whether to divide by the largest eigenvalue.
    :return: A Hermitian positive definite 2x2 complex matrix.
    """
    H = _check_generator(H)
    t = float(t)
    h0, h = _pauli_parts(H)
    r = np.linalg.norm(h)
    rt = r * t
    if rescaled:
        s = abs(rt)
        # e^{-s} cosh(rt) and e^{-s} sinh(rt) / r, without overflow
        ch = 0.5 * (1. + np.exp(-2. * s))
        shc = -0.5 * np.sign(t) * np.expm1(-2. * s) / r if r != 0. else t
        out = ch * np.eye(2) + shc * np.einsum('i,ijk->jk', h, _SIGMA)
        return 0.5 * (out + out.conj().T)
    # sinh(rt) / r, continuous at r = 0
    shc = t * np.sinh(rt) / rt if rt != 0. else t
    out = np.cosh(rt) * np.eye(2) + shc * np.einsum('i,ijk->jk', h, _SIGMA)
    out = np.exp(h0 * t) * out
    return 0.5 * (out + out.conj().T)


def unitary_exp(H, t):
    """
    ``exp(-i H t)`` for a Hermitian 2x2 `H`, by the closed form::

        exp(-i H t) = e^{-i h0 t} (cos(r t) I - i sin(r t) / r (h . sigma))

    :param H: A Hermitian 2x2 matrix.
    :param t: A float.
    :return: A unitary 2x2 complex matrix.
    """
    H = _check_generator(H)
    t = float(t)
    h0, h = _pauli_parts(H)
    r = np.linalg.norm(h)
    rt = r * t
    snc = t * np.sin(rt) / rt if rt != 0. else t
    out = np.cos(rt) * np.eye(2) - 1j * snc * np.einsum('i,ijk->jk', h,
                                                         _SIGMA)
    return np.exp(-1j * h0 * t) * out
