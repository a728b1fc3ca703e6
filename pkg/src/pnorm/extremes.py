"""Closed-form maximum of the norm over partitions of ``n``."""

from __future__ import annotations

from dataclasses import dataclass

from .exact_core import Partition, norm


@dataclass(frozen=True)
class MaxNormResult:
    n: int
    value: int
    witness: Partition

    def __post_init__(self):
        if self.witness.n != self.n or norm(self.witness) != self.value:
            raise ValueError("witness does not realise the stated maximum")


def max_norm(n: int) -> MaxNormResult:
    """Largest product of parts among partitions of ``n``.

    Use as many 3s as possible; a remainder of 1 turns one 3 into a 4,
    a remainder of 2 adds a single 2.  ``n = 0`` and ``n = 1`` give 1.

    >>> max_norm(7).value, max_norm(7).witness.parts
    (12, (4, 3))
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n < 2:
        return MaxNormResult(n, 1, Partition([1] * n))
    q, r = divmod(n, 3)
    if r == 0:
        value, parts = 3**q, [3] * q
    elif r == 1:
        value, parts = 4 * 3 ** (q - 1), [4] + [3] * (q - 1)
    else:
        value, parts = 2 * 3**q, [3] * q + [2]
    return MaxNormResult(n, value, Partition(parts))
