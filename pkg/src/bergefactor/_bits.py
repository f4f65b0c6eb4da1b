"""Bitmask helpers shared by the enumeration kernels.

Vertex sets are plain Python ints (bit i set = vertex i present); every
exhaustive scan in the package funnels through these few primitives.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_tuple(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))
