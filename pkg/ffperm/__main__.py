# Copyright (c) Evan Overman 2023 (https://an-prata.it/)
# Licensed under the MIT License
# See LICENSE file at repository root for details.

import sys
from . import cli
from . import logging

if __name__ == '__main__':
    logging.open_log_file()
    code = cli.run()
    logging.close_log_file()
    sys.exit(code)
