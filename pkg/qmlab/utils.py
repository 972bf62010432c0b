#!/usr/bin/env python
# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import division
import numbers
import warnings

import numpy as np


__all__ = [
    'EXACT_TOL',
    'EIG_TOL',
    'CLAMP_TOL',
    'SCHMIDT_TOL',
    'NumericalWarning',
    'NormExceeded',
    'DegenerateDecomposition',
    'InvalidDensity',
    'DimensionMismatch',
    'NonHermitian',
    'InvariantViolation',
    'merge_dicts',
]


# Exact algebra, after eigensolves, clamp onto the sphere, Schmidt cut.
EXACT_TOL = 1e-12
EIG_TOL = 1e-10
CLAMP_TOL = 1e-9
SCHMIDT_TOL = 1e-10


class NumericalWarning(UserWarning):
    """
    Warning category for values repaired within tolerance, e.g. a ball point
    whose norm overshoots 1 by less than :data:`CLAMP_TOL`.
    """


class NormExceeded(ValueError):
    """A point lies outside the closed unit ball."""


class DegenerateDecomposition(ValueError):
    """The center of the ball was decomposed without an explicit axis."""


class InvalidDensity(ValueError):
    """A matrix is not Hermitian, unit-trace and positive semidefinite."""


class DimensionMismatch(ValueError):
    """Operands have incompatible matrix dimensions."""


class NonHermitian(ValueError):
    """A generator that must be Hermitian is not."""


class InvariantViolation(RuntimeError):
    """A numerical equivalence between two computations does not hold."""


def merge_dicts(*dict_args):
    """
    Given any number of dicts, shallow copy and merge into a new dict,
    precedence goes to key value pairs in latter dicts.
    """
    result = {}
    for dictionary in dict_args:
        result.update(dictionary)
    return result


def warn_numerical(message):
    warnings.warn(message, NumericalWarning, stacklevel=3)


def as_real_vector(value, size, name):
    """
    Convert `value` to a read-only 1-D float64 array of length `size`.

    :param value: An array-like.
    :param size: The required length.
    :param name: The name of `value` for error message.

    :return: A numpy array.
    """
    try:
        arr = np.array(value, dtype=np.float64).reshape(-1)
    except (TypeError, ValueError):
        raise TypeError('{} must be convertible to a float vector.'.format(
            name))
    if arr.shape[0] != size:
        raise DimensionMismatch('{} should have {} components, got {}.'.format(
            name, size, arr.shape[0]))
    if not np.all(np.isfinite(arr)):
        raise ValueError('{} has non-finite components.'.format(name))
    arr.flags.writeable = False
    return arr


def as_square_matrix(value, name, dims=(2, 4)):
    """
    Convert `value` to a read-only complex128 square matrix whose dimension
    is in `dims`.

    :param value: An array-like.
    :param name: The name of `value` for error message.
    :param dims: Allowed dimensions.

    :return: A numpy array.
    """
    mat = np.array(value, dtype=np.complex128)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise DimensionMismatch('{} should be a square matrix, got shape '
                                '{}.'.format(name, mat.shape))
    if mat.shape[0] not in dims:
        raise DimensionMismatch('{} should have dimension in {}, got '
                                '{}.'.format(name, list(dims), mat.shape[0]))
    mat.flags.writeable = False
    return mat


def is_hermitian(mat, tol=EXACT_TOL):
    """Whether `mat` equals its conjugate transpose within `tol`."""
    return bool(np.max(np.abs(mat - mat.conj().T)) <= tol)


def assert_hermitian(mat, name, error=NonHermitian, tol=EXACT_TOL):
    """
    Raise `error` unless `mat` is Hermitian within `tol`.

    :return: The checked matrix.
    """
    if not is_hermitian(mat, tol):
        raise error('{} must be Hermitian (max deviation {:.3e}).'.format(
            name, float(np.max(np.abs(mat - mat.conj().T)))))
    return mat


def assert_same_dim(a, b, a_name, b_name):
    """Raise :class:`DimensionMismatch` if two matrices differ in size."""
    if a.shape != b.shape:
        raise DimensionMismatch('{} and {} must have the same dimension. '
                                '({} vs. {})'.format(a_name, b_name,
                                                     a.shape, b.shape))


def assert_positive_int(value, name):
    """
    Whether `value` is a positive integer.

    :param value: The value to be checked.
    :param name: The name of `value` used in error message.

    :return: The checked value as `int`.
    """
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise TypeError(name + " must be integer")
    if value <= 0:
        raise ValueError(name + " must be positive")
    return int(value)


def assert_probability(value, name):
    """Whether `value` is a real number in [0, 1]."""
    value = float(value)
    if not (0. <= value <= 1.):
        raise ValueError('{} must lie in [0, 1], got {}.'.format(name, value))
    return value
