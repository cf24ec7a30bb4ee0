"""Size guards for exponential scans, overridable via ORDSGP_LIMITS.

ORDSGP_LIMITS is a comma-separated list of key=value pairs, e.g.
``ORDSGP_LIMITS="ideals=14,partitions=10"``.  Raising a guard is an
expert-only move: the guarded scans are exponential (2^n subsets, Bell(n)
partitions, n^(n*n) tables).
"""

from __future__ import annotations

import os

from .errors import SizeLimit

DEFAULTS = {
    # carrier bound for 2^n subset scans (ideal enumeration, subset covers)
    "ideals": 12,
    # carrier bound for Bell(n) partition scans
    "partitions": 9,
    # order bound for exhaustive semigroup / ordered-semigroup enumeration
    "semigroups": 4,
    # carrier bound for enumerating all compatible partial orders
    "orders": 5,
    # |F| bound for the power construction (carrier becomes 2^|F| - 1)
    "power": 10,
}


def get(guard: str) -> int:
    value = DEFAULTS[guard]
    raw = os.environ.get("ORDSGP_LIMITS", "")
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        key, _, val = item.partition("=")
        if key.strip() == guard:
            try:
                value = int(val)
            except ValueError:
                raise ValueError(f"bad ORDSGP_LIMITS entry: {item!r}") from None
    return value


def check(guard: str, requested: int) -> None:
    bound = get(guard)
    if requested > bound:
        raise SizeLimit(guard, requested, bound)
