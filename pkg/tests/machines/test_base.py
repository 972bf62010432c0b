#!/usr/bin/env python
# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import division

import numpy as np
import tensorflow as tf

from qmlab.machines.base import *
from qmlab.streams import RandomStream


class Coin(MeasurementModel):
    def __init__(self, p):
        self._p = p
        super(Coin, self).__init__(('heads', 'tails'), draws_per_trial=1)

    def _sample(self, stream, n_samples):
        return np.where(stream.uniform(n_samples) < self._p, 0, 1)

    def _probs(self):
        return np.array([self._p, 1. - self._p])


class TestMeasurementModel(tf.test.TestCase):
    def test_baseclass(self):
        model = MeasurementModel(('a', 'b'), draws_per_trial=2)
        self.assertEqual(model.outcomes, ('a', 'b'))
        self.assertEqual(model.draws_per_trial, 2)
        with self.assertRaises(NotImplementedError):
            model.sample(RandomStream(0), 1)
        with self.assertRaises(NotImplementedError):
            model.probs()
        with self.assertRaisesRegex(ValueError, "draws_per_trial must be"):
            MeasurementModel(('a',), draws_per_trial=0)

    def test_sample(self):
        coin = Coin(0.3)
        single = coin.sample(RandomStream(0))
        self.assertIsInstance(single, int)
        self.assertIn(single, (0, 1))
        samples = coin.sample(RandomStream(0), 10)
        self.assertEqual(samples.shape, (10,))
        # A single draw is the first of a batch from the same seed.
        self.assertEqual(single, samples[0])
        with self.assertRaisesRegex(TypeError, "RandomStream"):
            coin.sample(np.random.RandomState(0), 10)
        with self.assertRaisesRegex(TypeError, "n_samples must be integer"):
            coin.sample(RandomStream(0), 1.)
        with self.assertRaisesRegex(ValueError, "n_samples must be positive"):
            coin.sample(RandomStream(0), 0)

    def test_count(self):
        counts = Coin(1.).count(RandomStream(0), 50)
        self.assertAllEqual(counts, [50, 0])
        counts = Coin(0.5).count(RandomStream(1), 1000)
        self.assertEqual(counts.dtype, np.int64)
        self.assertEqual(int(np.sum(counts)), 1000)

    def test_prob(self):
        coin = Coin(0.3)
        self.assertAllClose(coin.prob('heads'), 0.3)
        self.assertAllClose(coin.prob('tails'), 0.7)
        self.assertAllClose(coin.probs(), [0.3, 0.7])
        with self.assertRaisesRegex(ValueError, "Unknown outcome"):
            coin.prob('edge')
