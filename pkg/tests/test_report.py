#!/usr/bin/env python
# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import division
import io
import json
import os
import shutil
import tempfile

import numpy as np
import six
import tensorflow as tf

from qmlab.report import *


class TestFormatFloat(tf.test.TestCase):
    def test_format_float(self):
        self.assertEqual(format_float(1.), '1.0')
        self.assertEqual(format_float(0.1), '0.10000000000000001')
        self.assertEqual(format_float(1e20), '1e+20')
        self.assertEqual(format_float(np.float64(-2.5)), '-2.5')
        self.assertEqual(float(format_float(np.pi)), np.pi)
        with self.assertRaisesRegex(ValueError, "non-finite"):
            format_float(np.nan)


class TestJson(tf.test.TestCase):
    def test_dumps_json(self):
        report = {
            'b': [1, 2.5, None, True],
            'a': {'z': 'text', 'y': np.array([0.5, 1.])},
            'c': np.int64(3),
            'd': {},
            'e': [],
        }
        text = dumps_json(report)
        self.assertTrue(text.endswith('\n'))
        self.assertEqual(json.loads(text), {
            'a': {'y': [0.5, 1.], 'z': 'text'},
            'b': [1, 2.5, None, True],
            'c': 3,
            'd': {},
            'e': [],
        })
        # Sorted keys.
        self.assertLess(text.index('"a"'), text.index('"b"'))
        self.assertEqual(text, dumps_json(report))

    def test_exact_floats(self):
        values = [0.1, 1. / 3, np.pi, 2. ** -40, 1e300]
        self.assertEqual(json.loads(dumps_json(values)), values)

    def test_unsupported(self):
        with self.assertRaisesRegex(TypeError, "Cannot write"):
            dumps_json({'x': object()})


class TestCsv(tf.test.TestCase):
    def test_table(self):
        table = Table(['t', 'name'], [[0.5, 'a'], [1., 'b']])
        self.assertEqual(table.to_dict(), [{'t': 0.5, 'name': 'a'},
                                           {'t': 1., 'name': 'b'}])
        self.assertEqual(dumps_csv(table), 't,name\n0.5,a\n1.0,b\n')
        with self.assertRaisesRegex(ValueError, "does not match header"):
            Table(['t'], [[1., 2.]])


class TestWriteReport(tf.test.TestCase):
    def setUp(self):
        self.tmp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp_dir)

    def test_stream(self):
        out = six.StringIO()
        text = write_report({'x': 1.}, None, 'json', stream=out)
        self.assertEqual(out.getvalue(), text)
        self.assertEqual(json.loads(text), {'x': 1.})

    def test_file(self):
        path = os.path.join(self.tmp_dir, 'out.csv')
        write_report({}, Table(['x'], [[1.]]), 'csv', output_path=path)
        with io.open(path, encoding='utf-8', newline='') as f:
            self.assertEqual(f.read(), 'x\n1.0\n')

    def test_errors(self):
        with self.assertRaisesRegex(ValueError, "no CSV table"):
            write_report({}, None, 'csv', stream=six.StringIO())
        with self.assertRaisesRegex(ValueError, "Unknown output format"):
            write_report({}, None, 'xml', stream=six.StringIO())
