#!/usr/bin/env python
# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
import numbers
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from six.moves import range

from qmlab.utils import assert_positive_int


__all__ = [
    'RandomStream',
    'plan_shards',
    'run_sharded',
]


class RandomStream(object):
    """
    A reproducible stream of uniform draws backed by numpy's counter-based
    :class:`~numpy.random.Philox` generator. Streams are split with
    :meth:`spawn`, which derives statistically independent children from the
    same :class:`~numpy.random.SeedSequence`, so a sharded run depends only
    on the root seed and the number of shards.

    :param seed: A non-negative integer (up to 64 bits).
    :param seed_sequence: Internal, used by :meth:`spawn`.
    """

    def __init__(self, seed=0, seed_sequence=None):
        if seed_sequence is None:
            if isinstance(seed, bool) or \
                    not isinstance(seed, numbers.Integral):
                raise TypeError('seed must be integer')
            if seed < 0 or seed >= 2 ** 64:
                raise ValueError('seed must be a non-negative 64-bit integer, '
                                 'got {}.'.format(seed))
            seed_sequence = np.random.SeedSequence(int(seed))
        self._seed_sequence = seed_sequence
        self._generator = np.random.Generator(np.random.Philox(seed_sequence))

    @property
    def entropy(self):
        """The root seed this stream descends from."""
        return self._seed_sequence.entropy

    @property
    def spawn_key(self):
        """The position of this stream in the spawn tree."""
        return tuple(self._seed_sequence.spawn_key)

    def uniform(self, size=None):
        """
        Uniform draws on [0, 1).

        :param size: None for a single float, or an int for an array.
        """
        return self._generator.random(size)

    def break_points(self, size=None):
        """Uniform draws on [-1, 1), one per break of an elastic."""
        return 2. * self.uniform(size) - 1.

    def spawn(self, n_children):
        """
        Derive `n_children` independent child streams.

        :param n_children: A positive int.
        :return: A list of :class:`RandomStream`.
        """
        n_children = assert_positive_int(n_children, 'n_children')
        return [RandomStream(seed_sequence=child)
                for child in self._seed_sequence.spawn(n_children)]


def plan_shards(n, n_shards):
    """
    Split `n` trials into `n_shards` contiguous shards whose sizes differ by
    at most one, larger shards first. Empty shards are dropped.

    :param n: A positive int, the number of trials.
    :param n_shards: A positive int.
    :return: A list of shard sizes summing to `n`.
    """
    n = assert_positive_int(n, 'n')
    n_shards = assert_positive_int(n_shards, 'n_shards')
    base, extra = divmod(n, n_shards)
    sizes = [base + (1 if i < extra else 0) for i in range(n_shards)]
    return [s for s in sizes if s > 0]


def run_sharded(shard_fn, n, seed, n_shards=1, n_workers=None,
                verbose=False):
    """
    Run `n` trials as independent shards and return the per-shard results in
    shard order. Shard ``i`` always receives the ``i``-th child stream of
    ``RandomStream(seed)``, so the output does not depend on `n_workers`.

    :param shard_fn: A callable ``shard_fn(stream, size)``, for example
        :meth:`~qmlab.machines.MeasurementModel.count`.
    :param n: A positive int, the total number of trials.
    :param seed: The root seed, or a :class:`RandomStream` to spawn from.
    :param n_shards: A positive int.
    :param n_workers: Number of worker threads. None or 1 runs serially.
    :param verbose: Whether to print progress to stderr.
    :return: A list of shard results.
    """
    sizes = plan_shards(n, n_shards)
    root = seed if isinstance(seed, RandomStream) else RandomStream(seed)
    streams = root.spawn(len(sizes))

    def _run(i):
        result = shard_fn(streams[i], sizes[i])
        if verbose:
            print('Finished shard {}/{}, trials = {}'.format(
                i + 1, len(sizes), sizes[i]), file=sys.stderr)
        return result

    if n_workers is None or n_workers <= 1 or len(sizes) == 1:
        return [_run(i) for i in range(len(sizes))]
    with ThreadPoolExecutor(max_workers=n_workers) as executor:
        return list(executor.map(_run, range(len(sizes))))
