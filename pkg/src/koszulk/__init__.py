"""koszulk: exact-arithmetic combinatorial Hopf algebra and Koszul-duality
bookkeeping -- shuffle/quasi-shuffle products on compositions, truncated
reduced bar homology over Q, free graded Lie dimension counts via Lyndon
words and the Witt identity, and Bernoulli/zeta arithmetic."""

from .core import (
    CapExceededError,
    CheckReport,
    Composition,
    DimensionSeries,
    EMPTY_WORD,
    FormalSum,
    KoszulkError,
    ParseError,
    Partition,
    Rational,
    TensorSum,
    ValidationError,
    series_of_exterior_algebra,
    series_of_polynomial_algebra,
    series_of_tensor_algebra,
    series_pointwise_product,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "CheckReport",
    "Composition",
    "DimensionSeries",
    "EMPTY_WORD",
    "FormalSum",
    "KoszulkError",
    "ParseError",
    "Partition",
    "Rational",
    "TensorSum",
    "ValidationError",
    "series_of_exterior_algebra",
    "series_of_polynomial_algebra",
    "series_of_tensor_algebra",
    "series_pointwise_product",
    "__version__",
]
