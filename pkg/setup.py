#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Always prefer setuptools over distutils
from setuptools import setup, find_packages
# To use a consistent encoding
from codecs import open
from os import path
import re

here = path.abspath(path.dirname(__file__))

# Get the version string
with open(path.join(here, 'qmlab', '__init__.py'), encoding='utf-8') as f:
    version = re.search(r'__version__ = \'(.*?)\'', f.read()).group(1)

# Get the long description from the README file
with open(path.join(here, 'README.md'), encoding='utf-8') as f:
    readme = f.read()

setup(
    name='qmlab',
    version=version,

    description='Quantum machine models of spin measurements, entangled '
                'pairs and nonlinear evolutions',
    long_description=readme,
    long_description_content_type='text/markdown',

    license='MIT',

    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Physics',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],

    keywords='quantum machine bloch ball singlet epr chsh density operator',

    packages=find_packages(exclude=['tests', 'tests.*',
                                    'examples', 'examples.*']),

    # Philox and SeedSequence.spawn need numpy >= 1.17.
    python_requires='>=3.6',
    install_requires=['numpy>=1.17.0',
                      'six'],

    # $ pip install -e .[dev]
    extras_require={
        'dev': [
            'tensorflow>=1.13.0',
            'Sphinx>=1.7.1',
            'sphinx_rtd_theme',
            'sphinxcontrib-bibtex>=2.0.0',
            'pep8',
            'scipy',
            'coverage',
            'mock'
        ],
    },

    entry_points={
        'console_scripts': [
            'qmlab=qmlab.cli:main',
        ],
    },
)
