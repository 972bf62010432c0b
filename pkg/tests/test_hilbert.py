#!/usr/bin/env python
# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import division

import numpy as np
import tensorflow as tf
from scipy.linalg import expm
from six.moves import range

from qmlab.bloch import (
    BallState,
    decompose,
    density_from_ball,
    direction_from_angles,
    direction_from_vector,
)
from qmlab.hilbert import *
from qmlab.utils import DimensionMismatch, NonHermitian


_SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
_SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


def _random_direction(rng):
    return direction_from_vector(*rng.normal(size=3))


def _random_hermitian(rng):
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    return 0.5 * (a + a.conj().T)


class TestProjector(tf.test.TestCase):
    def test_poles(self):
        self.assertAllClose(projector(direction_from_angles(0.)),
                            [[1., 0.], [0., 0.]])
        self.assertAllClose(projector(direction_from_angles(np.pi)),
                            [[0., 0.], [0., 1.]], atol=1e-15)

    def test_projector_properties(self):
        rng = np.random.RandomState(1)
        for _ in range(50):
            u = _random_direction(rng)
            P = projector(u)
            self.assertAllClose(P.dot(P), P, atol=1e-12)
            self.assertAllClose(P, P.conj().T, atol=1e-12)
            self.assertAllClose(np.trace(P), 1.)
            self.assertAllClose(P + projector(u.antipode()), np.eye(2),
                                atol=1e-12)

    def test_ray_projector(self):
        z = singlet()
        R = ray_projector(z)
        self.assertAllClose(R.dot(R), R)
        self.assertAllClose(np.trace(R), 1.)
        with self.assertRaisesRegex(ValueError, "unit norm"):
            ray_projector([1., 1.])
        with self.assertRaises(DimensionMismatch):
            ray_projector([1., 0., 0.])


class TestTraceRule(tf.test.TestCase):
    def test_trace_probability(self):
        W = density_from_ball(decompose(BallState([0., 0., 0.5])))
        self.assertAllClose(
            trace_probability(W, projector(direction_from_angles(0.))),
            0.75)
        with self.assertRaises(DimensionMismatch):
            trace_probability(W, np.eye(4))

    def test_spin_expectation(self):
        rng = np.random.RandomState(2)
        for _ in range(50):
            v = rng.normal(size=3)
            w = BallState(v / np.linalg.norm(v) * rng.uniform())
            u = _random_direction(rng)
            W = density_from_ball(decompose(w))
            self.assertAllClose(spin_expectation(W, u),
                                0.5 * np.dot(w.w, u.vector), atol=1e-12)
        S = spin_observable(direction_from_angles(0.))
        self.assertAllClose(S, 0.5 * _SIGMA_Z)


class TestTwoSpins(tf.test.TestCase):
    def test_tensor(self):
        A = np.array([[1, 2], [3, 4]])
        self.assertAllClose(tensor(A, np.eye(2)), np.kron(A, np.eye(2)))
        with self.assertRaises(DimensionMismatch):
            tensor(np.eye(4), np.eye(2))

    def test_partial_trace_of_product(self):
        rng = np.random.RandomState(3)
        for _ in range(20):
            A = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
            B = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
            AB = tensor(A, B)
            self.assertAllClose(partial_trace(AB, 1), np.trace(B) * A)
            self.assertAllClose(partial_trace(AB, 2), np.trace(A) * B)
        with self.assertRaisesRegex(ValueError, "subsystem must be 1 or 2"):
            partial_trace(np.eye(4), 3)

    def test_singlet_reduced_states(self):
        R = ray_projector(singlet())
        self.assertAllClose(partial_trace(R, 1), 0.5 * np.eye(2),
                            rtol=0, atol=1e-12)
        self.assertAllClose(partial_trace(R, 2), 0.5 * np.eye(2),
                            rtol=0, atol=1e-12)

    def test_schmidt_rank(self):
        self.assertEqual(schmidt_rank(singlet()), 2)
        self.assertFalse(is_product(singlet()))
        rng = np.random.RandomState(4)
        for _ in range(20):
            psi = spinor(_random_direction(rng))
            chi = spinor(_random_direction(rng))
            self.assertEqual(schmidt_rank(np.kron(psi, chi)), 1)
            self.assertTrue(is_product(np.kron(psi, chi)))

    def test_joint_probability(self):
        u = direction_from_angles(0.)
        j = joint_quantum_probability(singlet(), u, u)
        self.assertAllClose(j.as_array(), [0., 0.5, 0.5, 0.], atol=1e-15)
        x = direction_from_angles(np.pi / 2)
        j = joint_quantum_probability(singlet(), u, x)
        self.assertAllClose(j.as_array(), [0.25] * 4)
        up_down = np.kron(spinor(u), spinor(u.antipode()))
        j = joint_quantum_probability(up_down, u, u)
        self.assertAllClose(j.as_array(), [0., 1., 0., 0.], atol=1e-15)


class TestExponentials(tf.test.TestCase):
    def test_pauli_generator(self):
        self.assertAllClose(pauli_generator([0., 0., 1.]), _SIGMA_Z)
        self.assertAllClose(pauli_generator([1., 0., 0.], 2.),
                            _SIGMA_X + 2. * np.eye(2))

    def test_herm_exp(self):
        self.assertAllClose(herm_exp(_SIGMA_Z, 0.5),
                            np.diag([np.exp(0.5), np.exp(-0.5)]))
        self.assertAllClose(herm_exp(np.zeros((2, 2)), 3.), np.eye(2))
        rng = np.random.RandomState(5)
        for _ in range(50):
            H = _random_hermitian(rng)
            t = rng.uniform(0., 2.)
            self.assertAllClose(herm_exp(H, t), expm(H * t), rtol=1e-10,
                                atol=1e-10)

    def test_herm_exp_rescaled(self):
        rng = np.random.RandomState(7)
        for _ in range(50):
            H = _random_hermitian(rng)
            t = rng.uniform(-2., 2.)
            top = np.exp(np.max(np.linalg.eigvalsh(H * t)))
            self.assertAllClose(herm_exp(H, t, rescaled=True),
                                expm(H * t) / top, rtol=1e-10, atol=1e-10)
        self.assertAllClose(herm_exp(np.eye(2) * 3., 2., rescaled=True),
                            np.eye(2))
        for H in [_SIGMA_Z, _SIGMA_Z + 2. * np.eye(2)]:
            M = herm_exp(H, 1000., rescaled=True)
            self.assertTrue(np.all(np.isfinite(M)))
            self.assertAllClose(M, np.diag([1., 0.]), rtol=0, atol=1e-15)

    def test_unitary_exp(self):
        rng = np.random.RandomState(6)
        for _ in range(50):
            H = _random_hermitian(rng)
            t = rng.uniform(0., 2.)
            U = unitary_exp(H, t)
            self.assertAllClose(U, expm(-1j * H * t), rtol=1e-10,
                                atol=1e-10)
            self.assertAllClose(U.dot(U.conj().T), np.eye(2), atol=1e-12)

    def test_non_hermitian(self):
        with self.assertRaises(NonHermitian):
            herm_exp(np.array([[0, 1], [0, 0]]), 1.)
        with self.assertRaises(NonHermitian):
            unitary_exp(np.array([[0, 1j], [1j, 0]]), 1.)
