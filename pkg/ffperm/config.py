# Copyright (c) Evan Overman 2023 (https://an-prata.it/)
# Licensed under the MIT License
# See LICENSE file at repository root for details.

import os

# File and directory paths here based on the XDG Base Directory spec.
# Please RTFM: https://wiki.archlinux.org/title/XDG_Base_Directory

HOME_DIR:       str = os.getenv('HOME') or '.'
XDG_STATE_HOME: str = os.getenv('XDG_STATE_HOME') or f"{HOME_DIR}/.local/state"
LOG_PATH:       str = f"{XDG_STATE_HOME}/ffperm.log"

MAX_FIELD_SIZE_ENV_VAR: str = 'FFPERM_MAX_Q'
DEFAULT_MAX_FIELD_SIZE: int = 2 ** 20

# Largest n for which g_{n,q} is computed directly.
GNQ_DEGREE_BOUND: int = 30000


class ConfigError(ValueError):
    """
    Raised when a configuration value taken from the environment is unusable.
    """


def max_field_size() -> int:
    """
    Gets the largest field cardinality any field context may have. Reads
    `FFPERM_MAX_Q` on every call so that the bound can be changed without
    re-importing, falls back to `DEFAULT_MAX_FIELD_SIZE`.
    """

    raw = os.getenv(MAX_FIELD_SIZE_ENV_VAR)

    if raw is None or raw.strip() == '':
        return DEFAULT_MAX_FIELD_SIZE

    try:
        bound = int(raw.strip())
    except ValueError:
        raise ConfigError(f"{MAX_FIELD_SIZE_ENV_VAR} must be an integer, got '{raw}'")

    if bound < 2:
        raise ConfigError(f"{MAX_FIELD_SIZE_ENV_VAR} must be at least 2, got {bound}")

    return bound
