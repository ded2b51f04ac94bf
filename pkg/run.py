#!/usr/bin/env python

import os
import shlex
import sys

os.system(shlex.join(["./venv/bin/python", "-m", "ffperm", *sys.argv[1:]]))
