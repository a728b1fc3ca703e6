"""Euler-product expansion of weighted partition sums.

The product ``prod_{k>=1} 1/(1 - w(k) q^k)`` has degree-``n`` coefficient
``sum over partitions lam of n of prod_j w(lam_j)``.  With ``w(k) = k**ell``
this is the norm power sum ``S_ell(n)``; with ``w(k) = 1`` it is ``p(n)``.

Series can be persisted in a small text format so that large expansions are
computed once::

    PNORMSERIES 1
    weight=norm_power:2
    nmax=3
    0 1
    1 1
    2 5
    3 14
"""

from __future__ import annotations

import hashlib
import os
import tempfile
import threading
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from filelock import FileLock

from .errors import MalformedCacheError, StaleCacheError, WeightUndefinedError
from .exact_core import CoefficientSeries

CACHE_MAGIC = "PNORMSERIES 1"


@dataclass(frozen=True)
class WeightSpec:
    """Weight sequence ``w(k)``, ``k >= 1``, for an Euler product.

    Use the constructors :meth:`norm_power`, :meth:`unit` and :meth:`custom`.
    Custom values are indexed from ``k = 1`` (``values[0]`` is ``w(1)``).
    """

    kind: str
    ell: int | None = None
    values: tuple[int, ...] | None = None

    @classmethod
    def norm_power(cls, ell: int) -> "WeightSpec":
        if isinstance(ell, bool) or not isinstance(ell, int) or ell < 1:
            raise ValueError(f"ell must be a positive integer, got {ell!r}")
        return cls("norm_power", ell=ell)

    @classmethod
    def unit(cls) -> "WeightSpec":
        return cls("unit")

    @classmethod
    def custom(cls, values: Iterable[int]) -> "WeightSpec":
        values = tuple(int(v) for v in values)
        return cls("custom", values=values)

    @property
    def tag(self) -> str:
        if self.kind == "unit":
            return "unit"
        if self.kind == "norm_power":
            return f"norm_power:{self.ell}"
        digest = hashlib.sha256(",".join(map(str, self.values)).encode()).hexdigest()
        return f"custom:{digest}"

    def weights(self, n_max: int) -> list[int]:
        """Return ``[w(1), ..., w(n_max)]``."""
        if self.kind == "unit":
            return [1] * n_max
        if self.kind == "norm_power":
            return [k**self.ell for k in range(1, n_max + 1)]
        if len(self.values) < n_max:
            raise WeightUndefinedError(
                f"custom weight undefined for k = {len(self.values) + 1} "
                f"(have {len(self.values)} values, need {n_max})"
            )
        return list(self.values[:n_max])


def expand_euler_product(
    w: WeightSpec, n_max: int, order: Sequence[int] | None = None
) -> CoefficientSeries:
    """Expand ``prod_{k=1}^{n_max} 1/(1 - w(k) q^k)`` up to degree ``n_max``.

    Factors are absorbed one at a time.  Multiplying by ``1/(1 - a q^k)`` is
    the in-place recurrence ``c[m] += a * c[m - k]`` for ascending ``m``,
    so the whole expansion costs ``O(n_max**2)`` big-integer operations.
    ``order`` permits absorbing the factors in a different sequence (the
    result does not depend on it).

    >>> expand_euler_product(WeightSpec.norm_power(1), 4).coeffs
    (1, 1, 3, 6, 14)
    """
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    weights = w.weights(n_max)
    ks = range(1, n_max + 1) if order is None else order
    c = [1] + [0] * n_max
    for k in ks:
        a = weights[k - 1]
        if a == 0:
            continue
        if a == 1:
            for m in range(k, n_max + 1):
                c[m] += c[m - k]
        else:
            for m in range(k, n_max + 1):
                c[m] += a * c[m - k]
    return CoefficientSeries(w.tag, n_max, tuple(c))


def _pentagonal_offsets(n_max):
    j = 1
    while True:
        g1 = j * (3 * j - 1) // 2
        if g1 > n_max:
            return
        sign = 1 if j % 2 else -1
        yield sign, g1, g1 + j
        j += 1


def partition_numbers(n_max: int) -> CoefficientSeries:
    """``p(0), ..., p(n_max)`` via Euler's pentagonal-number recurrence."""
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    offsets = list(_pentagonal_offsets(n_max))
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        total = 0
        for sign, g1, g2 in offsets:
            if g1 > n:
                break
            term = p[n - g1]
            if g2 <= n:
                term += p[n - g2]
            total += sign * term
        p[n] = total
    return CoefficientSeries("unit", n_max, tuple(p))


# -- on-disk cache -----------------------------------------------------------


def cache_store(series: CoefficientSeries, path: str | os.PathLike) -> Path:
    """Write ``series`` to ``path`` atomically (temp file + rename)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [CACHE_MAGIC, f"weight={series.tag}", f"nmax={series.n_max}"]
    lines += [f"{n} {c}" for n, c in enumerate(series.coeffs)]
    payload = "\n".join(lines) + "\n"
    with FileLock(str(path) + ".lock"):
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(payload)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    return path


def _read_header(fh, path):
    header = [fh.readline().rstrip("\n") for _ in range(3)]
    if header[0] != CACHE_MAGIC:
        raise MalformedCacheError(f"bad magic/version line {header[0]!r}", path)
    if not header[1].startswith("weight="):
        raise MalformedCacheError(f"bad weight line {header[1]!r}", path)
    if not header[2].startswith("nmax="):
        raise MalformedCacheError(f"bad nmax line {header[2]!r}", path)
    try:
        stored_nmax = int(header[2][len("nmax="):])
    except ValueError:
        raise MalformedCacheError(f"bad nmax line {header[2]!r}", path) from None
    return header[1][len("weight="):], stored_nmax


def cache_load(tag: str, n_max: int, path: str | os.PathLike) -> CoefficientSeries:
    """Load the first ``n_max + 1`` coefficients of the series stored at ``path``.

    Raises :class:`MalformedCacheError` on a bad header, a tag mismatch or
    a non-integer token, and :class:`StaleCacheError` if the file stores
    fewer coefficients than requested.
    """
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        stored_tag, stored_nmax = _read_header(fh, path)
        if stored_tag != tag:
            raise MalformedCacheError(
                f"weight tag {stored_tag!r} does not match requested {tag!r}", path
            )
        if n_max > stored_nmax:
            raise StaleCacheError(
                f"requested nmax={n_max} exceeds stored nmax={stored_nmax}", path
            )
        coeffs = []
        for expected in range(n_max + 1):
            line = fh.readline()
            fields = line.split()
            try:
                idx, value = (int(f) for f in fields)
            except ValueError:
                raise MalformedCacheError(
                    f"malformed coefficient line {line.rstrip()!r}", path
                ) from None
            if idx != expected:
                raise MalformedCacheError(
                    f"coefficient index {idx} out of order (expected {expected})", path
                )
            coeffs.append(value)
    try:
        return CoefficientSeries(tag, n_max, tuple(coeffs))
    except ValueError as exc:
        raise MalformedCacheError(str(exc), path) from None


class SeriesCache:
    """Memoises expansions in memory and, optionally, in a cache directory.

    A stored expansion to ``n_max`` serves every request up to ``n_max`` by
    prefix; a larger request recomputes and replaces the stored copy.
    """

    def __init__(self, directory: str | os.PathLike | None = None):
        self.directory = Path(directory) if directory is not None else None
        self._mem: dict[str, CoefficientSeries] = {}
        self._lock = threading.Lock()

    def path_for(self, tag: str) -> Path:
        return self.directory / (tag.replace(":", "_") + ".txt")

    def get(self, w: WeightSpec, n_max: int) -> CoefficientSeries:
        tag = w.tag
        with self._lock:
            held = self._mem.get(tag)
        if held is not None and held.n_max >= n_max:
            return held.prefix(n_max)
        series = None
        if self.directory is not None:
            path = self.path_for(tag)
            if path.exists():
                try:
                    series = cache_load(tag, n_max, path)
                except StaleCacheError:
                    series = None
        if series is None:
            if w.kind == "unit":
                series = partition_numbers(n_max)
            else:
                series = expand_euler_product(w, n_max)
            if self.directory is not None:
                cache_store(series, self.path_for(tag))
        with self._lock:
            held = self._mem.get(tag)
            if held is None or held.n_max < series.n_max:
                self._mem[tag] = series
        return series


_default_cache = SeriesCache()


def default_cache() -> SeriesCache:
    return _default_cache


def norm_power_sum(ell: int, n: int, cache: SeriesCache | None = None) -> int:
    """``S_ell(n)``: the sum of ``N(lam)**ell`` over all partitions of ``n``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    cache = cache or _default_cache
    return cache.get(WeightSpec.norm_power(ell), n)[n]


def partition_count(n: int, cache: SeriesCache | None = None) -> int:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    cache = cache or _default_cache
    return cache.get(WeightSpec.unit(), n)[n]


def moment(ell: int, n: int, cache: SeriesCache | None = None) -> Fraction:
    """``E_n(N**ell) = S_ell(n) / p(n)`` in lowest terms.

    >>> moment(1, 5)
    Fraction(25, 7)
    """
    return Fraction(norm_power_sum(ell, n, cache), partition_count(n, cache))
