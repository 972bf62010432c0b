#!/usr/bin/env python
# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import division
import warnings

import numpy as np
import tensorflow as tf
from six.moves import range

from qmlab.bloch import *
from qmlab.utils import (
    DegenerateDecomposition,
    InvalidDensity,
    NormExceeded,
    NumericalWarning,
)


def _random_ball_point(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v) * rng.uniform() ** (1. / 3)


class TestDirection(tf.test.TestCase):
    def test_angles(self):
        u = direction_from_angles(np.pi / 3, 0.)
        self.assertAllClose(u.vector, [np.sqrt(3) / 2, 0., 0.5])
        self.assertAllClose(u.theta, np.pi / 3)
        self.assertEqual(u.phi, 0.)
        v = direction_from_angles(np.pi / 2, 3 * np.pi / 2)
        self.assertAllClose(v.vector, [0., -1., 0.], atol=1e-15)
        self.assertAllClose(v.phi, 3 * np.pi / 2)

    def test_poles(self):
        self.assertEqual(direction_from_angles(0.).theta, 0.)
        self.assertAllClose(direction_from_angles(np.pi).theta, np.pi)
        self.assertAllClose(direction_from_angles(np.pi).vector,
                            [0., 0., -1.], atol=1e-15)

    def test_from_vector(self):
        u = direction_from_vector(0., 3., 4.)
        self.assertAllClose(u.vector, [0., 0.6, 0.8])
        with self.assertRaisesRegex(ValueError, "zero vector"):
            direction_from_vector(0., 0., 0.)

    def test_unit_norm(self):
        with self.assertRaisesRegex(ValueError, "unit norm"):
            Direction([1., 1., 0.])

    def test_antipode_and_angle(self):
        u = direction_from_angles(0.7, 1.3)
        self.assertAllClose(u.antipode().vector, -u.vector)
        self.assertAllClose(u.angle_to(u.antipode()), np.pi)
        self.assertEqual(u.angle_to(u), 0.)
        x = direction_from_vector(1., 0., 0.)
        z = direction_from_vector(0., 0., 1.)
        self.assertAllClose(x.angle_to(z), np.pi / 2)

    def test_read_only(self):
        u = direction_from_angles(0.3)
        with self.assertRaises(ValueError):
            u.vector[0] = 1.
        self.assertAllClose(np.asarray(u), u.vector)


class TestBallState(tf.test.TestCase):
    def test_ball_state(self):
        w = BallState([0., 0., 0.5])
        self.assertEqual(w.radius, 0.5)
        self.assertFalse(w.is_ray())
        self.assertFalse(w.is_center())
        self.assertTrue(BallState([0., 1., 0.]).is_ray())
        self.assertTrue(BallState([0., 0., 0.]).is_center())
        self.assertAllClose(w.distance_to(BallState([0., 0., -0.5])), 1.)
        with self.assertRaises(NormExceeded):
            BallState([1., 1., 0.])

    def test_make_ball_state(self):
        with warnings.catch_warnings(record=True) as w:
            warnings.simplefilter('always')
            state = make_ball_state(1. + 1e-10, 0., 0.)
        self.assertEqual(state.w[0], 1.)
        self.assertTrue(any(issubclass(x.category, NumericalWarning)
                            for x in w))
        with self.assertRaises(NormExceeded):
            make_ball_state(1. + 1e-6, 0., 0.)
        self.assertAllClose(make_ball_state(0.1, 0.2, 0.3).w,
                            [0.1, 0.2, 0.3])


class TestDecomposition(tf.test.TestCase):
    def test_decompose(self):
        d = decompose(BallState([0., 0., 0.5]))
        self.assertAllClose(d.v.vector, [0., 0., 1.])
        self.assertAllClose((d.a, d.b), (0.75, 0.25))
        d = decompose(BallState([0., 0., -1.]))
        self.assertAllClose(d.v.vector, [0., 0., -1.])
        self.assertAllClose((d.a, d.b), (1., 0.))

    def test_center(self):
        center = BallState([0., 0., 0.])
        with self.assertRaises(DegenerateDecomposition):
            decompose(center)
        x = direction_from_vector(1., 0., 0.)
        d = decompose(center, axis=x)
        self.assertAllClose(d.v.vector, x.vector)
        self.assertAllClose((d.a, d.b), (0.5, 0.5))

    def test_roundtrip(self):
        rng = np.random.RandomState(1)
        for _ in range(200):
            w = BallState(_random_ball_point(rng))
            self.assertAllClose(recompose(decompose(w)).w, w.w,
                                rtol=0, atol=1e-12)

    def test_weights(self):
        v = direction_from_angles(0.4)
        d = Decomposition(v, 0.3)
        self.assertAllClose(d.b, 0.7)
        self.assertAllClose(d.with_weights(0.9).b, 0.1)
        with self.assertRaisesRegex(ValueError, "sum to 1"):
            Decomposition(v, 0.3, 0.3)
        with self.assertRaises(TypeError):
            Decomposition([0., 0., 1.], 0.5)


class TestDensity(tf.test.TestCase):
    def test_pure_up(self):
        d = Decomposition(direction_from_angles(0.), 1.)
        W = density_from_ball(d)
        self.assertAllClose(W.entries, [[1., 0.], [0., 0.]])
        self.assertTrue(W.is_projector())

    def test_center(self):
        d = decompose(BallState([0., 0., 0.]),
                      axis=direction_from_angles(1.1, 2.))
        W = density_from_ball(d)
        self.assertAllClose(W.entries, 0.5 * np.eye(2), rtol=0, atol=1e-12)
        self.assertFalse(W.is_projector())
        self.assertAllClose(W.eigenvalues(), [0.5, 0.5])

    def test_equatorial(self):
        d = Decomposition(direction_from_angles(np.pi / 2, np.pi / 2), 1.)
        W = density_from_ball(d)
        self.assertAllClose(W.entries, [[0.5, -0.5j], [0.5j, 0.5]],
                            atol=1e-15)
        self.assertAllClose(ball_from_density(W).w, [0., 1., 0.],
                            atol=1e-15)

    def test_density_does_not_depend_on_decomposition(self):
        # Every decomposition of the center gives the same operator.
        rng = np.random.RandomState(2)
        center = BallState([0., 0., 0.])
        for _ in range(20):
            axis = direction_from_vector(*rng.normal(size=3))
            W = density_from_ball(decompose(center, axis=axis))
            self.assertAllClose(W.entries, 0.5 * np.eye(2), rtol=0,
                                atol=1e-12)

    def test_ball_density_roundtrip(self):
        rng = np.random.RandomState(3)
        for _ in range(200):
            w = BallState(_random_ball_point(rng))
            W = density_from_ball(decompose(w))
            self.assertAllClose(ball_from_density(W).w, w.w, rtol=0,
                                atol=1e-12)
            self.assertAllClose(purity(W), (1. + w.radius ** 2) / 2)

    def test_invalid(self):
        with self.assertRaisesRegex(InvalidDensity, "Hermitian"):
            DensityMatrix([[0.5, 1.], [0., 0.5]])
        with self.assertRaisesRegex(InvalidDensity, "unit trace"):
            DensityMatrix(np.eye(2))
        with self.assertRaisesRegex(InvalidDensity, "positive"):
            DensityMatrix([[1.5, 0.], [0., -0.5]])
        with self.assertRaises(InvalidDensity):
            ball_from_density(np.eye(4) / 4.)

    def test_trace_distance(self):
        rng = np.random.RandomState(4)
        for _ in range(50):
            w1 = BallState(_random_ball_point(rng))
            w2 = BallState(_random_ball_point(rng))
            W1 = density_from_ball(decompose(w1))
            W2 = density_from_ball(decompose(w2))
            self.assertAllClose(trace_distance(W1, W2),
                                0.5 * w1.distance_to(w2), rtol=0, atol=1e-12)
