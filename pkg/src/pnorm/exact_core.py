"""Partitions, norms and coefficient tables.

Exact integers are plain Python ``int`` and exact rationals are
:class:`fractions.Fraction`; both are arbitrary precision and immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence


@dataclass(frozen=True, init=False)
class Partition:
    """A partition stored canonically as a non-increasing tuple of positive parts.

    Parts may be given in any order; they are sorted on construction.

    >>> Partition([1, 3, 1]).parts
    (3, 1, 1)
    >>> Partition().n
    0
    """

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for a in parts:
            if isinstance(a, bool) or not isinstance(a, int):
                raise TypeError(f"partition parts must be integers, got {a!r}")
            if a < 1:
                raise ValueError(f"partition parts must be positive, got {a}")
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return "+".join(map(str, self.parts))


def norm(lam: Partition) -> int:
    """Product of the parts of ``lam``; the empty partition has norm 1."""
    return prod(lam.parts)


def norm_power(lam: Partition, ell: int) -> int:
    """``norm(lam) ** ell`` computed exactly."""
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    return norm(lam) ** ell


@dataclass(frozen=True)
class CoefficientSeries:
    """Coefficients ``c[0..n_max]`` of a truncated power series.

    ``tag`` identifies the weight sequence that produced the coefficients
    (``unit``, ``norm_power:<ell>`` or ``custom:<digest>``).
    """

    tag: str
    n_max: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.n_max < 0:
            raise ValueError("n_max must be non-negative")
        if len(self.coeffs) != self.n_max + 1:
            raise ValueError(
                f"expected {self.n_max + 1} coefficients, got {len(self.coeffs)}"
            )
        if self.coeffs[0] != 1:
            raise ValueError("constant coefficient of an Euler product must be 1")

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def prefix(self, n_max: int) -> "CoefficientSeries":
        if n_max > self.n_max:
            raise ValueError(f"prefix {n_max} exceeds stored n_max {self.n_max}")
        return CoefficientSeries(self.tag, n_max, self.coeffs[: n_max + 1])


def as_partition(parts: Partition | Sequence[int]) -> Partition:
    return parts if isinstance(parts, Partition) else Partition(parts)
