"""hkdyn: exponential-sum angle maps over finite fields, beta-transformations,
Sturmian measures for the doubling map, and symbolic complexity / return-time
statistics, all backed by desk-scale brute-force checks."""

__version__ = "0.1.0"

from .arith import Prime, is_prime, legendre, mod_inverse, primes_in_range
from .beta import (
    BetaExpansion,
    beta_expansion,
    beta_map_step,
    is_admissible,
    natural_extension_orbit,
    natural_extension_step,
)
from .complexity import (
    SymbolSequence,
    block_complexity,
    empirical_entropy_rate,
    equidistribution_stat,
    topological_entropy_estimate,
)
from .expsums import (
    CubicCurveParams,
    KloostermanValue,
    TraceResult,
    affine_point_count,
    kloosterman_sum,
    trace_ap,
    weil_angle,
)
from .hkmap import (
    AnglePair,
    DigitSequence,
    PartitionPair,
    digits_to_point,
    encode_stream,
    hk_arithmetic_scan,
    hk_functional_scan,
    hk_point,
)
from .kernels import BACKEND
from .returntimes import ks_vs_exponential, odometer_step, return_time_samples
from .sturmian import (
    BinaryWord,
    PeriodicOrbitMeasure,
    enumerate_cycles,
    ergodic_optimize,
    is_balanced,
    orbit_stats,
    sturmian_word,
    word_to_orbit,
)

__all__ = [
    "AnglePair",
    "BACKEND",
    "BetaExpansion",
    "BinaryWord",
    "CubicCurveParams",
    "DigitSequence",
    "KloostermanValue",
    "PartitionPair",
    "PeriodicOrbitMeasure",
    "Prime",
    "SymbolSequence",
    "TraceResult",
    "__version__",
    "affine_point_count",
    "beta_expansion",
    "beta_map_step",
    "block_complexity",
    "digits_to_point",
    "empirical_entropy_rate",
    "encode_stream",
    "enumerate_cycles",
    "equidistribution_stat",
    "ergodic_optimize",
    "hk_arithmetic_scan",
    "hk_functional_scan",
    "hk_point",
    "is_admissible",
    "is_balanced",
    "is_prime",
    "kloosterman_sum",
    "ks_vs_exponential",
    "legendre",
    "mod_inverse",
    "natural_extension_orbit",
    "natural_extension_step",
    "odometer_step",
    "orbit_stats",
    "primes_in_range",
    "return_time_samples",
    "sturmian_word",
    "topological_entropy_estimate",
    "trace_ap",
    "weil_angle",
    "word_to_orbit",
]
