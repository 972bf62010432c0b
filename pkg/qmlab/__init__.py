#!/usr/bin/env python
# -*- coding: utf-8 -*-

from . import machines
from .utils import *
from .outcomes import *
from .bloch import *
from .hilbert import *
from .streams import *
from .dynamics import *
from .diagnostics import *


__version__ = '0.1.0'
