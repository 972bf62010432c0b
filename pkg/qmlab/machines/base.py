#!/usr/bin/env python
# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import division

import numpy as np

from qmlab.streams import RandomStream
from qmlab.utils import assert_positive_int


__all__ = [
    'MeasurementModel',
]


class MeasurementModel(object):
    """
    The :class:`MeasurementModel` class is the base class of the mechanistic
    measurement models. A model is a fully specified experiment (states plus
    measurement directions) whose outcomes are labelled by
    :attr:`outcomes`. It can evaluate the analytic probability of an outcome
    and draw outcomes from a :class:`~qmlab.streams.RandomStream`.

    Samples are returned as integer indices into :attr:`outcomes`. When
    `n_samples` is None (by default) a single index is returned, otherwise a
    1-D array of shape ``[n_samples]``.

    Every trial consumes exactly :attr:`draws_per_trial` uniform draws, so
    a sharded run is reproducible for a fixed seed and shard count.

    :param outcomes: A tuple of outcome labels.
    :param draws_per_trial: Number of uniform draws one trial consumes.
    """

    def __init__(self, outcomes, draws_per_trial):
        self._outcomes = tuple(outcomes)
        self._draws_per_trial = assert_positive_int(draws_per_trial,
                                                    'draws_per_trial')

    @property
    def outcomes(self):
        """The outcome labels, in index order."""
        return self._outcomes

    @property
    def draws_per_trial(self):
        """The number of uniform draws consumed by one trial."""
        return self._draws_per_trial

    def sample(self, stream, n_samples=None):
        """
        sample(stream, n_samples=None)

        Draw outcomes of independent trials.

        :param stream: A :class:`~qmlab.streams.RandomStream`.
        :param n_samples: None or a positive int. How many independent
            trials to run.
        :return: An int, or a 1-D int array of outcome indices.
        """
        if not isinstance(stream, RandomStream):
            raise TypeError('stream must be a RandomStream.')
        if n_samples is None:
            return int(self._sample(stream, 1)[0])
        n_samples = assert_positive_int(n_samples, 'n_samples')
        return self._sample(stream, n_samples)

    def _sample(self, stream, n_samples):
        """
        Private method for subclasses to rewrite the :meth:`sample` method.
        """
        raise NotImplementedError()

    def count(self, stream, n_samples):
        """
        Outcome counts of `n_samples` trials, in :attr:`outcomes` order.

        :return: A 1-D int64 array.
        """
        indices = self.sample(stream, n_samples)
        return np.bincount(indices, minlength=len(self._outcomes)).astype(
            np.int64)

    def prob(self, given):
        """
        prob(given)

        The analytic probability of the outcome `given`.

        :param given: An outcome label from :attr:`outcomes`.
        :return: A float.
        """
        if given not in self._outcomes:
            raise ValueError('Unknown outcome {!r}; expected one of '
                             '{}.'.format(given, list(self._outcomes)))
        return float(self.probs()[self._outcomes.index(given)])

    def probs(self):
        """
        The analytic probabilities of all outcomes, in :attr:`outcomes`
        order.

        :return: A 1-D float array.
        """
        return self._probs()

    def _probs(self):
        """
        Private method for subclasses to rewrite the :meth:`probs` method.
        """
        raise NotImplementedError()
