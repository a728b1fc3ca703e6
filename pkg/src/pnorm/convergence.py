"""Compare exact moments with their leading-order asymptotics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mp

from .constants import DEFAULT_PREC_BITS, GUARD_DIGITS, ConstantRequest, asymptotic_constant
from .series import (
    SeriesCache,
    WeightSpec,
    default_cache,
    moment,
    norm_power_sum,
    partition_count,
)


def _prec_bits(digits: int) -> int:
    return max(DEFAULT_PREC_BITS, math.ceil((digits + GUARD_DIGITS) * math.log2(10)))


def _exact_to_mpf(x: int | Fraction) -> mpmath.mpf:
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    # held exactly; rounding happens in the next operation at working precision
    with mp.workprec(max(mp.prec, x.bit_length() + 1)):
        return mpmath.mpf(x)


def _three_power(exponent_num: int) -> mpmath.mpf:
    """``3**(exponent_num / 3)`` as ``exp(exponent_num/3 * ln 3)``."""
    if exponent_num % 3 == 0:
        e = exponent_num // 3
        return mpmath.mpf(3) ** e if e >= 0 else 1 / mpmath.mpf(3) ** (-e)
    return mp.exp(mpmath.mpf(exponent_num) / 3 * mp.ln(3))


def hardy_ramanujan_p(n: int, digits: int = 15) -> mpmath.mpf:
    """Leading-order estimate ``exp(pi sqrt(2n/3)) / (4 n sqrt 3)`` of ``p(n)``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    with mp.workprec(_prec_bits(digits)):
        return mp.exp(mp.pi * mp.sqrt(mpmath.mpf(2 * n) / 3)) / (4 * n * mp.sqrt(3))


def scaled_power_sum(
    ell: int, n: int, digits: int = 15, cache: SeriesCache | None = None
) -> mpmath.mpf:
    """``S_ell(n) * 3**(-ell n / 3)``, which tends to ``c(ell, n mod 3)``."""
    S = norm_power_sum(ell, n, cache)
    with mp.workprec(_prec_bits(digits)):
        return _exact_to_mpf(S) * _three_power(-ell * n)


def predicted_moment(
    ell: int,
    n: int,
    digits: int = 15,
    use_hardy_ramanujan: bool = False,
    cache: SeriesCache | None = None,
) -> mpmath.mpf:
    """Asymptotic prediction ``c(ell, n mod 3) * 3**(ell n/3) / p(n)``.

    The exact ``p(n)`` is used unless ``use_hardy_ramanujan`` is set.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    c = asymptotic_constant(ConstantRequest(ell, n % 3, digits, prec_bits=_prec_bits(digits)))
    with mp.workprec(_prec_bits(digits)):
        if use_hardy_ramanujan:
            p = hardy_ramanujan_p(n, digits)
        else:
            p = _exact_to_mpf(partition_count(n, cache))
        return c * _three_power(ell * n) / p


def dispersion(n: int, cache: SeriesCache | None = None) -> tuple[Fraction, Fraction]:
    """Variance ``E(N^2) - E(N)^2`` and ratio ``E(N^2) / E(N)^2``, both exact.

    >>> dispersion(3)
    (Fraction(2, 3), Fraction(7, 6))
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    m1 = moment(1, n, cache)
    m2 = moment(2, n, cache)
    return m2 - m1 * m1, m2 / (m1 * m1)


@dataclass(frozen=True)
class MomentRecord:
    n: int
    ell: int
    S: int
    p: int
    moment: Fraction
    scaled: mpmath.mpf
    constant: mpmath.mpf
    rel_dev: mpmath.mpf


def convergence_table(
    ell: int,
    n_from: int,
    n_to: int,
    step: int = 1,
    digits: int = 15,
    cache: SeriesCache | None = None,
) -> list[MomentRecord]:
    """One :class:`MomentRecord` per ``n`` in ``range(n_from, n_to + 1, step)``.

    Deviations are reported, not checked: they oscillate with ``n mod 3``.
    """
    if not 0 <= n_from <= n_to:
        raise ValueError(f"need 0 <= n_from <= n_to, got {n_from}, {n_to}")
    if step < 1:
        raise ValueError("step must be >= 1")
    cache = cache or default_cache()
    prec = _prec_bits(digits)
    S_series = cache.get(WeightSpec.norm_power(ell), n_to)
    p_series = cache.get(WeightSpec.unit(), n_to)
    consts = {
        r: asymptotic_constant(ConstantRequest(ell, r, digits, prec_bits=prec))
        for r in (0, 1, 2)
    }
    records = []
    for n in range(n_from, n_to + 1, step):
        S, p = S_series[n], p_series[n]
        c = consts[n % 3]
        with mp.workprec(prec):
            scaled = _exact_to_mpf(S) * _three_power(-ell * n)
            rel = abs(scaled - c) / c
        records.append(MomentRecord(n, ell, S, p, Fraction(S, p), scaled, c, rel))
    return records
