"""Desk-scale guards, overridable through the CREPANTO_GUARD env var."""

import os

from .errors import GuardExceeded

# Default ceilings for the combinatorial searches.  They keep accidental
# huge inputs from hanging the process; CREPANTO_GUARD scales all of them.
ELEMENTARY_SCAN = 10_000      # lattice points scanned per elementary test
DUAL_ENUMERATION = 2_000_000  # parallelotope points enumerated in the dual
TRIANGULATION_POINTS = 14     # point-configuration size for enumeration
POLYTOPE_DIM = 4              # convex-hull / volume dimension
MIXED_DIM = 3                 # mixed-volume dimension


def guard_factor() -> int:
    raw = os.environ.get("CREPANTO_GUARD", "")
    if not raw:
        return 1
    try:
        factor = int(raw)
    except ValueError:
        return 1
    return max(factor, 1)


def check(value: int, limit: int, what: str) -> None:
    """Raise GuardExceeded when value is beyond limit * CREPANTO_GUARD."""
    bound = limit * guard_factor()
    if value > bound:
        raise GuardExceeded(
            f"{what} = {value} exceeds the desk-scale guard {bound}; "
            "set CREPANTO_GUARD to raise it"
        )
