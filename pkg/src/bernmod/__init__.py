"""Irregular prime computations at desk scale.

Computes Bernoulli numbers modulo p for whole prime ranges by two
independent FFT-based methods (a multiplicative form of Voronoi's
congruence evaluated with Bluestein's chirp transform, and power series
inversion of x/(e^x - 1)), extracts irregular pairs, verifies the
Kummer-Vandiver condition and the Iwasawa lambda invariant for each pair,
and emits line-oriented certificates that third parties can spot-check in
O(p) time per value.
"""

from .bernoulli import (
    BernoulliTable,
    CertificatePairs,
    IrregularPair,
    bernoulli_all_powerseries,
    bernoulli_all_voronoi,
    bernoulli_single,
    bluestein_dft,
    certificate_pairs,
    consistency_check,
    irregular_pairs,
)
from .errors import (
    BernmodError,
    ConsistencyFailure,
    CrossCheckFault,
    DegenerateFactor,
    FormatError,
    MethodDisagreement,
    SchemeDisagreement,
    SearchExhausted,
)
from .harness import (
    Checkpoint,
    Mismatch,
    PrimeRecord,
    ScanFault,
    StatsTable,
    VerifyReport,
    read_certificate,
    scan,
    stats,
    verify_certificate,
)
from .iwasawa import (
    LambdaResult,
    LambdaSummary,
    lambda_tests,
    lambda_verdict,
    power_sum,
)
from .modarith import (
    FieldCtx,
    invmod,
    is_prime,
    multiplicative_order,
    powmod,
    primes_in_range,
    primitive_root,
)
from .polyring import ModPoly, middle_product, mul, series_inverse
from .vandiver import (
    VandiverResult,
    pth_root_of_unity,
    smallest_q,
    vandiver_test,
)

__version__ = "0.1.0"

__all__ = [
    "BernmodError",
    "BernoulliTable",
    "CertificatePairs",
    "Checkpoint",
    "ConsistencyFailure",
    "CrossCheckFault",
    "DegenerateFactor",
    "FieldCtx",
    "FormatError",
    "IrregularPair",
    "LambdaResult",
    "LambdaSummary",
    "MethodDisagreement",
    "Mismatch",
    "ModPoly",
    "PrimeRecord",
    "ScanFault",
    "SchemeDisagreement",
    "SearchExhausted",
    "StatsTable",
    "VandiverResult",
    "VerifyReport",
    "bernoulli_all_powerseries",
    "bernoulli_all_voronoi",
    "bernoulli_single",
    "bluestein_dft",
    "certificate_pairs",
    "consistency_check",
    "invmod",
    "irregular_pairs",
    "is_prime",
    "lambda_tests",
    "lambda_verdict",
    "middle_product",
    "mul",
    "multiplicative_order",
    "power_sum",
    "powmod",
    "primes_in_range",
    "primitive_root",
    "pth_root_of_unity",
    "read_certificate",
    "scan",
    "smallest_q",
    "stats",
    "vandiver_test",
    "verify_certificate",
    "__version__",
]
