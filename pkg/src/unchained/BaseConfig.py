#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Package-wide settings: the global size cap on every enumeration, the
output-format tag and the default seed for randomized checks.

The size cap can be overridden per call or globally by setting the
environment variable ``UNCHAINED_CAP`` to a positive integer.
"""
__author__ = "Dennis van Gils"
__authoremail__ = "vangils.dennis@gmail.com"
__url__ = "https://github.com/Dennis-van-Gils/python-unchained"
__date__ = "18-10-2026"
__version__ = "1.0.0"

import os
from typing import Optional

from dvg_debug_functions import dprint, ANSI

from unchained.BaseErrors import SizeCapExceeded

# fmt: off
DEFAULT_SIZE_CAP = 200000         # [encoded elements]
ENV_SIZE_CAP     = "UNCHAINED_CAP"
FORMAT_TAG       = "unchained/1"  # Tag of every JSON and DOT output
DEFAULT_SEED     = 0              # Seed for randomized property checks
# fmt: on


# ------------------------------------------------------------------------------
#   get_size_cap
# ------------------------------------------------------------------------------


def get_size_cap(cap: Optional[int] = None) -> int:
    """Return the size cap in effect.

    Args:
        cap (:obj:`int`, optional):
            Explicit cap. Wins over the environment when given.

            Default: :obj:`None`

    Returns:
        The explicit ``cap`` when given, else the value of the environment
        variable ``UNCHAINED_CAP``, else :const:`DEFAULT_SIZE_CAP`.
    """
    if cap is not None:
        if cap <= 0:
            raise ValueError(f"Size cap must be positive, got {cap}.")
        return int(cap)

    env_value = os.environ.get(ENV_SIZE_CAP)
    if env_value is None or env_value.strip() == "":
        return DEFAULT_SIZE_CAP

    try:
        env_cap = int(env_value)
    except ValueError:
        dprint(
            f"Ignoring malformed {ENV_SIZE_CAP}='{env_value}', "
            f"using {DEFAULT_SIZE_CAP}.",
            ANSI.RED,
        )
        return DEFAULT_SIZE_CAP

    if env_cap <= 0:
        dprint(
            f"Ignoring non-positive {ENV_SIZE_CAP}={env_cap}, "
            f"using {DEFAULT_SIZE_CAP}.",
            ANSI.RED,
        )
        return DEFAULT_SIZE_CAP

    return env_cap


# ------------------------------------------------------------------------------
#   check_size
# ------------------------------------------------------------------------------


def check_size(what: str, size: int, cap: Optional[int] = None):
    """Raise :class:`~unchained.BaseErrors.SizeCapExceeded` when ``size``
    exceeds the cap in effect. Must be called before materializing anything
    whose size is only known combinatorially.
    """
    limit = get_size_cap(cap)
    if size > limit:
        raise SizeCapExceeded(
            f"{what}: size {size} exceeds the cap of {limit}.",
            witness={"what": what, "size": int(size), "cap": limit},
        )
