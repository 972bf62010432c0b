#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .base import *
from .single import *
from .compound import *
