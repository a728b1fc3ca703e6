"""Exact and asymptotic statistics of the partition norm (product of parts)."""

from .constants import (
    ConstantEvaluation,
    ConstantRequest,
    asymptotic_constant,
    constant_for,
    constant_table,
    evaluate_constant,
    tail_bound,
)
from .convergence import (
    MomentRecord,
    convergence_table,
    dispersion,
    hardy_ramanujan_p,
    predicted_moment,
    scaled_power_sum,
)
from .errors import (
    CacheError,
    MalformedCacheError,
    NonRealResultError,
    PnormError,
    PrecisionInfeasibleError,
    StaleCacheError,
    WeightUndefinedError,
)
from .exact_core import CoefficientSeries, Partition, norm, norm_power
from .extremes import MaxNormResult, max_norm
from .oracle import brute_max_norm, brute_power_sum, enumerate_partitions
from .series import (
    SeriesCache,
    WeightSpec,
    cache_load,
    cache_store,
    expand_euler_product,
    moment,
    norm_power_sum,
    partition_count,
    partition_numbers,
)

__version__ = "0.1.0"
