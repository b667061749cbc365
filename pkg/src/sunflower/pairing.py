"""Cantor pairing on the naturals.

Used to code pairs (and tagged universes) as plain integers so that every
family in this package lives inside finite sets of naturals.
"""

from __future__ import annotations

from math import isqrt


def pair(a: int, b: int) -> int:
    """Cantor pairing: (a + b)(a + b + 1)/2 + b."""
    if a < 0 or b < 0:
        raise ValueError(f"pairing is defined on naturals, got ({a}, {b})")
    s = a + b
    return s * (s + 1) // 2 + b


def unpair(z: int) -> tuple[int, int]:
    """Inverse of :func:`pair`."""
    if z < 0:
        raise ValueError(f"unpair expects a natural, got {z}")
    w = (isqrt(8 * z + 1) - 1) // 2
    b = z - w * (w + 1) // 2
    return w - b, b
