# Copyright (c) Evan Overman 2023 (https://an-prata.it/)
# Licensed under the MIT License
# See LICENSE file at repository root for details.

import sys
import datetime
import inspect
import os
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from ._compat import StrEnum
from typing import Any, Optional, TextIO
from . import config

# Reports are written to stdout, so every log line goes to stderr.

LOG_FILE: Optional[TextIO] = None

dbg_enabled = False

class Color(StrEnum):
    RED    = "\033[31m"
    YELLOW = "\033[33m"
    BLUE   = "\033[34m"
    BOLD   = "\033[1m"
    NORMAL = "\033[0m"


def open_log_file(path: str = config.LOG_PATH) -> bool:
    """
    Opens the given file path, or a default file path, to save logs to.
    """

    global LOG_FILE

    try:
        directory = os.path.dirname(path)

        if directory:
            os.makedirs(directory, exist_ok=True)

        LOG_FILE = open(path, 'a')
        log("LOG", f"Opened '{path}' for logging")
        return True
    except OSError:
        LOG_FILE = None
        err("LOG", f"Could not open '{path}' for saving logs")
        return False


def close_log_file():
    """
    Closes the log file if one is open.
    """

    global LOG_FILE

    if LOG_FILE is not None:
        LOG_FILE.close()
        LOG_FILE = None


def _emit(level: str, color: Color, id: str, *kargs):
    for arg in kargs:
        time = datetime.datetime.now()
        pad = ' ' if len(level) < 4 else ''
        sys.stderr.write(f"[{color}{Color.BOLD}{level}{Color.NORMAL}]{pad} [{time}] [{Color.BOLD}{id}{Color.NORMAL}]: {arg}\n")

        if LOG_FILE is None:
            continue

        LOG_FILE.write(f"[{level}]{pad} [{time}] [{id}]: {arg}\n")
        LOG_FILE.flush()


def log(id: str, *kargs):
    """
    Log info to stderr.
    """

    _emit("INFO", Color.BLUE, id, *kargs)


def warn(id: str, *kargs):
    """
    Log a warning to stderr.
    """

    _emit("WARN", Color.YELLOW, id, *kargs)


def err(id: str, *kargs):
    """
    Log an error to stderr.
    """

    _emit("ERR", Color.RED, id, *kargs)


def dbg(data: Any) -> Any:
    """
    Log a debug message, only prints if debug messages are enabled with
    `enable_dbg()`. Returns the `data` given. Debug logs are not saved to file.
    """

    if dbg_enabled:
        time = datetime.datetime.now()
        caller = inspect.stack()[1]
        filename = caller.filename.removeprefix(os.getcwd() + '/')
        line = caller.lineno
        sys.stderr.write(f"[{Color.BOLD}DBG{Color.NORMAL}]  [{time}] ['{filename}' (line {line})]: {data}\n")

    return data


def enable_dbg(enable: bool = True):
    """
    Enables or disables the printing of verbose debug messages to stderr.
    """

    global dbg_enabled

    if not enable:
        dbg(f"Disabled {Color.BOLD}DBG{Color.NORMAL} log")

    dbg_enabled = enable

    if enable:
        dbg(f"Enabled {Color.BOLD}DBG{Color.NORMAL} log")
