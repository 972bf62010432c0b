#!/usr/bin/env python
# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import division

import numpy as np
import tensorflow as tf

from qmlab.utils import *
from qmlab.utils import (
    as_real_vector,
    as_square_matrix,
    assert_hermitian,
    assert_positive_int,
    assert_probability,
    assert_same_dim,
    is_hermitian,
)


class TestMergeDicts(tf.test.TestCase):
    def test_merge_dicts(self):
        dict1 = {'a': 1, 'b': 2}
        dict2 = {'b': 3, 'c': 4}
        self.assertEqual(merge_dicts(dict1, dict2),
                         {'a': 1, 'b': 3, 'c': 4})
        self.assertEqual(merge_dicts(), {})
        # The inputs are left untouched.
        self.assertEqual(dict1, {'a': 1, 'b': 2})


class TestExceptions(tf.test.TestCase):
    def test_hierarchy(self):
        for cls in [NormExceeded, DegenerateDecomposition, InvalidDensity,
                    DimensionMismatch, NonHermitian]:
            self.assertTrue(issubclass(cls, ValueError))
        self.assertTrue(issubclass(InvariantViolation, RuntimeError))
        self.assertTrue(issubclass(NumericalWarning, UserWarning))


class TestChecks(tf.test.TestCase):
    def test_as_real_vector(self):
        v = as_real_vector([1, 2, 3], 3, 'v')
        self.assertEqual(v.dtype, np.float64)
        self.assertFalse(v.flags.writeable)
        with self.assertRaisesRegex(DimensionMismatch, "3 components"):
            as_real_vector([1, 2], 3, 'v')
        with self.assertRaisesRegex(ValueError, "non-finite"):
            as_real_vector([1, np.nan, 0], 3, 'v')
        with self.assertRaisesRegex(TypeError, "float vector"):
            as_real_vector(['a', 'b', 'c'], 3, 'v')

    def test_as_square_matrix(self):
        m = as_square_matrix(np.eye(2), 'm')
        self.assertEqual(m.dtype, np.complex128)
        self.assertEqual(as_square_matrix(np.eye(4), 'm').shape, (4, 4))
        with self.assertRaisesRegex(DimensionMismatch, "square matrix"):
            as_square_matrix(np.ones((2, 3)), 'm')
        with self.assertRaisesRegex(DimensionMismatch, "dimension in"):
            as_square_matrix(np.eye(3), 'm')
        with self.assertRaisesRegex(DimensionMismatch, "dimension in"):
            as_square_matrix(np.eye(4), 'm', dims=(2,))

    def test_hermitian(self):
        self.assertTrue(is_hermitian(np.array([[1, 1j], [-1j, 0]])))
        self.assertFalse(is_hermitian(np.array([[1, 1j], [1j, 0]])))
        with self.assertRaisesRegex(NonHermitian, "must be Hermitian"):
            assert_hermitian(np.array([[0, 1], [0, 0]]), 'H')
        with self.assertRaisesRegex(InvalidDensity, "must be Hermitian"):
            assert_hermitian(np.array([[0, 1], [0, 0]]), 'W',
                             error=InvalidDensity)

    def test_assert_same_dim(self):
        assert_same_dim(np.eye(2), np.eye(2), 'a', 'b')
        with self.assertRaisesRegex(DimensionMismatch, "same dimension"):
            assert_same_dim(np.eye(2), np.eye(4), 'a', 'b')

    def test_assert_positive_int(self):
        self.assertEqual(assert_positive_int(3, 'n'), 3)
        self.assertEqual(assert_positive_int(np.int64(5), 'n'), 5)
        with self.assertRaisesRegex(TypeError, "n must be integer"):
            assert_positive_int(1.5, 'n')
        with self.assertRaisesRegex(TypeError, "n must be integer"):
            assert_positive_int(True, 'n')
        with self.assertRaisesRegex(ValueError, "n must be positive"):
            assert_positive_int(0, 'n')

    def test_assert_probability(self):
        self.assertEqual(assert_probability(0, 'p'), 0.)
        self.assertEqual(assert_probability(1, 'p'), 1.)
        with self.assertRaisesRegex(ValueError, r"must lie in \[0, 1\]"):
            assert_probability(1.5, 'p')
        with self.assertRaisesRegex(ValueError, r"must lie in \[0, 1\]"):
            assert_probability(-0.1, 'p')
