"""Size caps.

FLASQUE_LAB_MAX_GROUP_ORDER overrides the group-order caps (permutation
closure and subgroup enumeration).  The bar-resolution bound for direct
degree-2 cohomology defaults to 12 and is overridable per call.
"""

from __future__ import annotations

import os

DEFAULT_MAX_GROUP_ORDER = 512
DEFAULT_BAR_BOUND = 12

_ENV_VAR = "FLASQUE_LAB_MAX_GROUP_ORDER"


def max_group_order() -> int:
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return DEFAULT_MAX_GROUP_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{_ENV_VAR} must be positive, got {value}")
    return value
