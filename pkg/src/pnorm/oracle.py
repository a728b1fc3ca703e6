"""Brute-force partition enumeration, used as ground truth at small ``n``.

Enumeration is exponential in ``sqrt(n)``; ``n <= 60`` (about a million
partitions) is the practical ceiling.
"""

from __future__ import annotations

from typing import Iterator

from .exact_core import Partition, norm

PRACTICAL_MAX_N = 60


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, in reverse-lexicographic order.

    Only the current partition is held in memory.

    >>> [p.parts for p in enumerate_partitions(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n == 0:
        yield Partition()
        return
    parts = [n]
    while True:
        yield Partition(parts)
        # drop trailing 1s, then decrement the last part > 1
        ones = 0
        while parts and parts[-1] == 1:
            parts.pop()
            ones += 1
        if not parts:
            return
        a = parts.pop() - 1
        rest = ones + 1
        parts.append(a)
        while rest > a:
            parts.append(a)
            rest -= a
        if rest:
            parts.append(rest)


def brute_power_sum(ell: int, n: int) -> int:
    """Sum of ``norm(lam)**ell`` over explicitly enumerated partitions of ``n``."""
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    return sum(norm(lam) ** ell for lam in enumerate_partitions(n))


def brute_max_norm(n: int) -> tuple[int, Partition]:
    """Maximum norm over partitions of ``n`` and the first maximiser found."""
    best, witness = 0, None
    for lam in enumerate_partitions(n):
        v = norm(lam)
        if v > best:
            best, witness = v, lam
    return best, witness
