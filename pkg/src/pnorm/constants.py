"""Leading constants in the asymptotic growth of norm power sums.

For fixed ``ell`` the generating function ``prod_k 1/(1 - k**ell q**k)`` has
its dominant singularities at the three simple poles ``q = w**j r`` with
``r = 3**(-ell/3)`` and ``w = exp(2 pi i / 3)``.  Their residues give

    S_ell(n) ~ c(ell, n mod 3) * 3**(ell n / 3)

with

    c(ell, n0) = 1/3 * sum_{j=1..3} w**(-j n0) * P_j,
    P_j       = prod_{k >= 1, k != 3} 1 / (1 - a_k w**(j k)),
    a_k       = k**ell * 3**(-k ell / 3).

Truncation
----------
``P_j`` is evaluated over ``k <= K``.  For ``k >= 3`` the ratio
``a_{k+1}/a_k = ((k+1)/k)**ell * 3**(-ell/3)`` is below 1 and decreasing in
``k``, so with ``rho = ((K+2)/(K+1))**ell * 3**(-ell/3)`` the neglected
weights satisfy

    T(K) = sum_{k > K} a_k <= a_{K+1} / (1 - rho).

If every ``a_k <= 1/2`` for ``k > K`` then ``|log(1/(1 - a_k z))| <= 2 a_k``
for ``|z| = 1``, and the neglected tail multiplies ``P_j`` by a factor within
``exp(2 T(K)) - 1`` of 1.  The absolute error of the truncated constant is
therefore at most ``(|P_1| + |P_2| + |P_3|)/3 * (exp(2 T(K)) - 1)``, which is
divided by the computed constant to get the relative bound used below.

Powers of ``w`` are taken from an exact table indexed by the exponent mod 3,
so ``n0 = 0`` and ``n0 = 3`` select identical arithmetic.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

import mpmath
from mpmath import mp

from .errors import NonRealResultError, PrecisionInfeasibleError

DEFAULT_PREC_BITS = 128
GUARD_DIGITS = 10


@dataclass(frozen=True)
class ConstantRequest:
    ell: int
    n0: int
    precision_digits: int = 10
    K: int | None = None
    prec_bits: int = DEFAULT_PREC_BITS

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError(f"ell must be >= 1, got {self.ell}")
        if self.n0 not in (0, 1, 2, 3):
            raise ValueError(f"n0 must be in 0..3, got {self.n0}")
        if self.precision_digits < 1:
            raise ValueError("precision_digits must be >= 1")
        if self.K is not None and self.K < 3:
            raise ValueError("K must be >= 3")


@dataclass(frozen=True)
class ConstantEvaluation:
    """Value of one constant together with its error diagnostics."""

    value: mpmath.mpf
    imag: mpmath.mpf
    K: int
    tail_bound: mpmath.mpf
    stability: mpmath.mpf | None  # relative change from K/2 to K, adaptive mode only


def _root_of_unity_table():
    half_sqrt3 = mp.sqrt(3) / 2
    return (
        mpmath.mpc(1, 0),
        mpmath.mpc(-0.5, half_sqrt3),
        mpmath.mpc(-0.5, -half_sqrt3),
    )


def _weight(k, ell):
    return mpmath.mpf(k) ** ell * mp.power(3, mpmath.mpf(-k * ell) / 3)


@lru_cache(maxsize=256)
def _products(ell: int, K: int, prec_bits: int):
    """``(P_1, P_2, P_3)`` truncated at ``k <= K``, at ``prec_bits`` bits."""
    with mp.workprec(prec_bits):
        roots = _root_of_unity_table()
        prods = [mpmath.mpc(1), mpmath.mpc(1), mpmath.mpc(1)]
        for k in range(1, K + 1):
            if k == 3:
                continue
            a = _weight(k, ell)
            for idx, j in enumerate((1, 2, 3)):
                prods[idx] /= 1 - a * roots[(j * k) % 3]
        return tuple(prods)


def tail_bound(ell: int, K: int) -> mpmath.mpf:
    """Upper bound on ``sum_{k > K} k**ell 3**(-k ell/3)`` (requires ``K >= 3``)."""
    rho = (mpmath.mpf(K + 2) / (K + 1)) ** ell * mp.power(3, mpmath.mpf(-ell) / 3)
    return _weight(K + 1, ell) / (1 - rho)


def _evaluate(ell, n0, K, prec_bits):
    prods = _products(ell, K, prec_bits)
    with mp.workprec(prec_bits):
        roots = _root_of_unity_table()
        total = mpmath.mpc(0)
        for idx, j in enumerate((1, 2, 3)):
            total += roots[(-j * n0) % 3] * prods[idx]
        total /= 3
        T = tail_bound(ell, K)
        if _weight(K + 1, ell) > 0.5:
            bound = mpmath.inf
        else:
            scale = sum(abs(p) for p in prods) / 3
            abs_err = scale * mpmath.expm1(2 * T)
            denom = abs(total) - abs_err
            bound = abs_err / denom if denom > 0 else mpmath.inf
        return total.real, total.imag, bound


def check_feasible(digits: int, prec_bits: int) -> None:
    available = math.floor(prec_bits * math.log10(2))
    if digits + GUARD_DIGITS > available:
        raise PrecisionInfeasibleError(
            f"{digits} digits need {digits + GUARD_DIGITS} working digits "
            f"but {prec_bits} bits give only {available}; raise prec_bits"
        )


def evaluate_constant(req: ConstantRequest) -> ConstantEvaluation:
    """Evaluate ``c(ell, n0)`` and report truncation and roundoff diagnostics.

    Without an explicit ``K`` the truncation starts at
    ``max(50, ceil(40 * digits / ell))`` and doubles until the tail bound is
    below ``10**-(digits + 2)`` and doubling ``K`` changes the value by less
    than ``10**-digits`` relatively.
    """
    digits, ell = req.precision_digits, req.ell
    check_feasible(digits, req.prec_bits)
    tol_tail = mpmath.mpf(10) ** -(digits + 2)
    stability = None
    if req.K is not None:
        K = req.K
        value, imag, bound = _evaluate(ell, req.n0, K, req.prec_bits)
    else:
        K = max(50, math.ceil(40 * digits / ell))
        prev, _, _ = _evaluate(ell, req.n0, K, req.prec_bits)
        while True:
            K *= 2
            value, imag, bound = _evaluate(ell, req.n0, K, req.prec_bits)
            with mp.workprec(req.prec_bits):
                stability = abs(value - prev) / abs(value)
            if bound < tol_tail and stability < mpmath.mpf(10) ** -digits:
                break
            prev = value
            if K > 1 << 20:
                raise PrecisionInfeasibleError(
                    f"truncation did not settle for ell={ell}, digits={digits}"
                )
    if abs(imag) >= mpmath.mpf(10) ** -(digits - 2):
        raise NonRealResultError(
            f"c(ell={ell}, n0={req.n0}) has imaginary part {mpmath.nstr(imag, 5)}"
        )
    if value <= 0:
        warnings.warn(f"c(ell={ell}, n0={req.n0}) is not positive: {value}")
    return ConstantEvaluation(value, imag, K, bound, stability)


def asymptotic_constant(req: ConstantRequest) -> mpmath.mpf:
    """Real value of ``c(ell, n0)``; see :func:`evaluate_constant`."""
    return evaluate_constant(req).value


def constant_for(ell: int, n: int, digits: int = 10) -> mpmath.mpf:
    """Constant matching the residue class of ``n`` modulo 3."""
    return asymptotic_constant(ConstantRequest(ell, n % 3, digits))


def constant_table(
    ell_max: int, digits: int, prec_bits: int = DEFAULT_PREC_BITS
) -> dict[tuple[int, int], mpmath.mpf]:
    """Constants for ``ell = 1..ell_max`` and residue labels ``n0 = 1, 2, 3``."""
    if ell_max < 1:
        raise ValueError("ell_max must be >= 1")
    return {
        (ell, n0): asymptotic_constant(ConstantRequest(ell, n0, digits, prec_bits=prec_bits))
        for ell in range(1, ell_max + 1)
        for n0 in (1, 2, 3)
    }
