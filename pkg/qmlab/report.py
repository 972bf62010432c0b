#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Machine-readable experiment reports. JSON floats carry 17 significant
digits so a report round-trips every float exactly, and keys are sorted so
equal reports are byte-identical. CSV tables use a header row and LF line
endings.
"""

from __future__ import absolute_import
from __future__ import division
import csv
import io
import json
import numbers

import numpy as np
import six
from six.moves import zip


__all__ = [
    'SCHEMA',
    'Table',
    'format_float',
    'dumps_json',
    'dumps_csv',
    'write_report',
]


SCHEMA = 'qmlab/1'


class Table(object):
    """
    A CSV table: a header and rows of equal length.

    :param header: A sequence of column names.
    :param rows: A sequence of row sequences.
    """

    def __init__(self, header, rows):
        self.header = list(header)
        self.rows = [list(row) for row in rows]
        for row in self.rows:
            if len(row) != len(self.header):
                raise ValueError('Row {} does not match header {}.'.format(
                    row, self.header))

    def to_dict(self):
        return [dict(zip(self.header, row)) for row in self.rows]


def format_float(x):
    """
    Format a float with 17 significant digits, keeping a decimal point or an
    exponent so the value still reads back as a float.
    """
    x = float(x)
    if not np.isfinite(x):
        raise ValueError('Cannot write non-finite value {!r}.'.format(x))
    text = '{:.17g}'.format(x)
    if '.' not in text and 'e' not in text:
        text += '.0'
    return text


def _encode(value, indent, level):
    pad = ' ' * (indent * (level + 1))
    end = ' ' * (indent * level)
    if value is None or isinstance(value, (bool, np.bool_)):
        return json.dumps(None if value is None else bool(value))
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return format_float(value)
    if isinstance(value, six.string_types):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, np.ndarray):
        value = value.tolist()
    if isinstance(value, dict):
        if not value:
            return '{}'
        items = []
        for key in sorted(value):
            items.append('{}{}: {}'.format(
                pad, json.dumps(str(key), ensure_ascii=False),
                _encode(value[key], indent, level + 1)))
        return '{\n' + ',\n'.join(items) + '\n' + end + '}'
    if isinstance(value, (list, tuple)):
        if not value:
            return '[]'
        items = [pad + _encode(v, indent, level + 1) for v in value]
        return '[\n' + ',\n'.join(items) + '\n' + end + ']'
    raise TypeError('Cannot write {!r} of type {} to JSON.'.format(
        value, type(value).__name__))


def dumps_json(report, indent=2):
    """
    Serialize a report of dicts, lists, strings, ints and floats.

    :return: A string ending with a newline.
    """
    return _encode(report, indent, 0) + '\n'


def dumps_csv(table):
    """
    Serialize a :class:`Table`.

    :return: A string with LF line endings.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(table.header)
    for row in table.rows:
        writer.writerow([format_float(v) if isinstance(v, float) else v
                         for v in row])
    return buf.getvalue()


def write_report(report, table, output_format='json', output_path=None,
                 stream=None):
    """
    Write a report as JSON, or its table as CSV.

    :param report: The report dict.
    :param table: A :class:`Table`, or None if the command has no table.
    :param output_format: ``'json'`` or ``'csv'``.
    :param output_path: A file path; when None the text goes to `stream`.
    :param stream: A text stream, used when `output_path` is None.
    :return: The written text.
    """
    if output_format == 'json':
        text = dumps_json(report)
    elif output_format == 'csv':
        if table is None:
            raise ValueError('This command has no CSV table; use '
                             '--format json.')
        text = dumps_csv(table)
    else:
        raise ValueError('Unknown output format {!r}.'.format(output_format))
    if output_path is not None:
        with io.open(output_path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
    elif stream is not None:
        stream.write(text)
    return text
