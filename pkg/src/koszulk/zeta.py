"""Exact Bernoulli/zeta arithmetic and K-theoretic dimension presets.

Bernoulli numbers follow the convention B_1 = -1/2, under which the
binomial recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0 holds uniformly for
n >= 1; only even indices feed anything downstream.  The negative odd zeta
values are the exact rationals zeta(1-2k) = -B_{2k}/(2k); the order of the
cyclic group detected by the classical J-homomorphism in dimension 4k-1 is
the denominator of B_{2k}/(4k) in lowest terms; its odd part localizes
prime by prime through the continuous-cohomology order p^(v_p(k0)+1) at
odd p with (p-1)k0 = 2k, and the global/local agreement is a standing
invariant of the test suite.  Transcendental zeta values at positive odd
integers are never computed; only their rank consequences appear, as the
dimension presets below.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .core import (
    CheckReport,
    DimensionSeries,
    ValidationError,
    series_of_polynomial_algebra,
    series_of_tensor_algebra,
    series_pointwise_product,
)
from .numth import divisors, is_prime, valuation

__all__ = [
    "BernoulliTable",
    "bernoulli",
    "zeta_odd_negative",
    "von_staudt_clausen",
    "h1c_order_at_p",
    "image_of_j_order",
    "KTheoryPreset",
    "ktheory_preset",
    "KTHEORY_PRESET_NAMES",
    "mzv_dimension",
    "mzv_dimension_series",
    "motivic_consistency",
    "zeta_global_suite",
]


class BernoulliTable:
    """Append-only cache of Bernoulli numbers (convention B_1 = -1/2).

    Extension is guarded by a lock, so concurrent callers see a consistent
    table; values are exact Fractions computed by the defining binomial
    recurrence B_n = -1/(n+1) * sum_{j<n} C(n+1, j) B_j.
    """

    def __init__(self):
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def value(self, n: int) -> Fraction:
        n = int(n)
        if n < 0:
            raise ValidationError(f"Bernoulli index must be >= 0: {n}")
        with self._lock:
            while len(self._values) <= n:
                m = len(self._values)
                acc = Fraction(0)
                for j, b in enumerate(self._values):
                    acc += comb(m + 1, j) * b
                self._values.append(-acc / (m + 1))
            return self._values[n]


_TABLE = BernoulliTable()


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2)."""
    return _TABLE.value(n)


def zeta_odd_negative(k: int) -> Fraction:
    """zeta(1-2k) = -B_{2k}/(2k) for k >= 1, exactly."""
    k = int(k)
    if k < 1:
        raise ValidationError(f"k must be >= 1: {k}")
    return -bernoulli(2 * k) / (2 * k)


def von_staudt_clausen(two_k: int) -> tuple[int, tuple[int, ...]]:
    """Primes p with (p-1) | 2k and their product, which is the denominator
    of B_{2k}; the integrality of B_{2k} + sum 1/p is asserted on the way."""
    two_k = int(two_k)
    if two_k < 2 or two_k % 2:
        raise ValidationError(f"expected a positive even index: {two_k}")
    primes = tuple(d + 1 for d in divisors(two_k) if is_prime(d + 1))
    total = bernoulli(two_k)
    denominator = 1
    for p in primes:
        total += Fraction(1, p)
        denominator *= p
    if total.denominator != 1:
        raise ValidationError(
            f"von Staudt-Clausen integrality failed at index {two_k}: {total}"
        )
    return denominator, primes


def h1c_order_at_p(p: int, k: int) -> int:
    """Order at an odd prime p of the weight-2k continuous-cohomology group:
    1 unless (p-1) | 2k, else p^(v_p(k0)+1) where 2k = (p-1)*k0."""
    p, k = int(p), int(k)
    if p < 3 or not is_prime(p):
        raise ValidationError(f"p must be an odd prime: {p}")
    if k < 1:
        raise ValidationError(f"k must be >= 1: {k}")
    if (2 * k) % (p - 1):
        return 1
    k0 = (2 * k) // (p - 1)
    return p ** (valuation(k0, p) + 1)


def image_of_j_order(k: int) -> int:
    """Order of the cyclic group generated by the class of (1/2)zeta(1-2k),
    i.e. the denominator of B_{2k}/(4k) in lowest terms."""
    k = int(k)
    if k < 1:
        raise ValidationError(f"k must be >= 1: {k}")
    return (bernoulli(2 * k) / (4 * k)).denominator


# ---------------------------------------------------------------------------
# Dimension presets.

KTHEORY_PRESET_NAMES = (
    "KS0-rational",
    "Kcell-rational",
    "KQZ-weights",
    "TCgeo-rational",
    "MT-ext-pattern",
)


@dataclass(frozen=True)
class KTheoryPreset:
    """A named graded dimension series with its degree-convention label."""

    name: str
    series: DimensionSeries
    convention: str


def ktheory_preset(name: str, cap: int = 40) -> KTheoryPreset:
    """Rational dimension presets, one per defining rule.

    * ``KS0-rational``: 1 in degree 0 and in each degree 4k+1, k >= 1
      (square-zero ideal on classes sigma*v^k, |v| = 4).
    * ``Kcell-rational``: 1 in degree 0 and 2 in each degree 4k > 0.
    * ``KQZ-weights``: 1 in each odd weight n >= 3 (rank of K_{2n-1} of the
      integers, rationally).
    * ``TCgeo-rational``: 1 in degree 0 and in each degree 2k+1 for k >= -1
      (so the support includes degree -1).
    * ``MT-ext-pattern``: the extension-group vanishing pattern by weight:
      1 at weight 0 (the degree-0 endomorphisms) and 1 in each odd weight
      n >= 3 (the one-dimensional Ext^1), zero elsewhere.
    """
    name = name.strip()
    cap = int(cap)
    if cap < 0:
        raise ValidationError(f"cap must be >= 0: {cap}")
    if name == "KS0-rational":
        dims = {0: 1}
        dims.update({4 * k + 1: 1 for k in range(1, cap // 4 + 1) if 4 * k + 1 <= cap})
        return KTheoryPreset(name, DimensionSeries(dims, cap), "topological degree")
    if name == "Kcell-rational":
        dims = {0: 1}
        dims.update({4 * k: 2 for k in range(1, cap // 4 + 1)})
        return KTheoryPreset(name, DimensionSeries(dims, cap), "topological degree")
    if name == "KQZ-weights":
        dims = {n: 1 for n in range(3, cap + 1, 2)}
        return KTheoryPreset(name, DimensionSeries(dims, cap), "motivic weight")
    if name == "TCgeo-rational":
        dims = {0: 1, -1: 1}
        dims.update({2 * k + 1: 1 for k in range(0, (cap - 1) // 2 + 1)})
        return KTheoryPreset(name, DimensionSeries(dims, cap), "topological degree")
    if name == "MT-ext-pattern":
        dims = {0: 1}
        dims.update({n: 1 for n in range(3, cap + 1, 2)})
        return KTheoryPreset(name, DimensionSeries(dims, cap), "motivic weight")
    raise ValidationError(f"unknown K-theory preset: {name!r}")


# ---------------------------------------------------------------------------
# Motivic dimension arithmetic.


def mzv_dimension(n: int) -> int:
    """The weight-n dimension d_n with d_0 = 1, d_1 = 0, d_2 = 1 and
    d_n = d_{n-2} + d_{n-3}."""
    n = int(n)
    if n < 0:
        raise ValidationError(f"weight must be >= 0: {n}")
    d = [1, 0, 1]
    for m in range(3, n + 1):
        d.append(d[m - 2] + d[m - 3])
    return d[n]


def mzv_dimension_series(cap: int) -> DimensionSeries:
    return DimensionSeries({n: mzv_dimension(n) for n in range(cap + 1)}, cap)


def motivic_consistency(cap: int, *, kqz_series: DimensionSeries | None = None) -> CheckReport:
    """Three independent computations of the weight-n dimensions d_n:

    1. the recursion d_n = d_{n-2} + d_{n-3};
    2. the tensor series on the odd weights >= 3 (the cotensor algebra of
       the rational K-groups) times the polynomial series on one weight-2
       generator;
    3. the polynomial algebra with one generator per Lyndon word over the
       alphabet {2,3}, graded by weight.

    ``kqz_series`` may be injected to exercise the harness (a corrupted
    series must make the check fail)."""
    from .lie import lyndon_words  # local import keeps the module graphs acyclic

    cap = int(cap)
    if cap < 0:
        raise ValidationError(f"cap must be >= 0: {cap}")
    recursion = mzv_dimension_series(cap)
    kqz = kqz_series if kqz_series is not None else ktheory_preset("KQZ-weights", cap).series
    cotensor = series_of_tensor_algebra(
        {n: kqz[n] for n in range(1, cap + 1) if kqz[n]}, cap
    )
    product = series_pointwise_product(cotensor, series_of_polynomial_algebra([2], cap))
    lyndon = series_of_polynomial_algebra(
        [w.weight for w in lyndon_words({2, 3}, cap)], cap
    )
    failures = []
    for n in range(cap + 1):
        if product[n] != recursion[n]:
            failures.append(
                f"weight {n}: cotensor*poly(2) gives {product[n]} != recursion {recursion[n]}"
            )
        elif lyndon[n] != recursion[n]:
            failures.append(
                f"weight {n}: Lyndon polynomial count {lyndon[n]} != recursion {recursion[n]}"
            )
    return CheckReport(
        name=f"motivic dimension consistency cap {cap}",
        passed=not failures,
        checked=3 * (cap + 1),
        failures=tuple(failures[:5]),
    )


def zeta_global_suite() -> list[CheckReport]:
    """Arithmetic suite: image-of-J orders, von Staudt-Clausen integrality,
    the odd-part local/global agreement, preset fidelity on degrees <= 40,
    and the three-way motivic dimension consistency."""
    reports: list[CheckReport] = []

    expected_orders = {1: 24, 2: 240, 3: 504, 4: 480, 5: 264}
    failures = tuple(
        f"k={k}: {image_of_j_order(k)} != {expected}"
        for k, expected in expected_orders.items()
        if image_of_j_order(k) != expected
    )
    reports.append(
        CheckReport(
            name="image-of-J orders k=1..5",
            passed=not failures,
            checked=len(expected_orders),
            failures=failures,
        )
    )

    vsc_failures = []
    for two_k in range(2, 61, 2):
        try:
            denominator, _ = von_staudt_clausen(two_k)
        except ValidationError as exc:
            vsc_failures.append(str(exc))
            continue
        if denominator != bernoulli(two_k).denominator:
            vsc_failures.append(
                f"index {two_k}: prime product {denominator} != denominator of B"
            )
    reports.append(
        CheckReport(
            name="von Staudt-Clausen integrality 2k<=60",
            passed=not vsc_failures,
            checked=30,
            failures=tuple(vsc_failures[:5]),
        )
    )

    lg_failures = []
    for k in range(1, 31):
        order = image_of_j_order(k)
        odd_part = order
        while odd_part % 2 == 0:
            odd_part //= 2
        local = 1
        for p in range(3, 2 * k + 2, 2):
            if is_prime(p):
                local *= h1c_order_at_p(p, k)
        if local != odd_part:
            lg_failures.append(f"k={k}: local product {local} != odd part {odd_part}")
    reports.append(
        CheckReport(
            name="odd part of image-of-J order equals local product k<=30",
            passed=not lg_failures,
            checked=30,
            failures=tuple(lg_failures[:5]),
        )
    )

    preset_failures = []
    cap = 40
    rules = {
        "KS0-rational": lambda d: 1 if d == 0 or (d > 4 and d % 4 == 1) else 0,
        "Kcell-rational": lambda d: 1 if d == 0 else (2 if d > 0 and d % 4 == 0 else 0),
        "KQZ-weights": lambda d: 1 if d >= 3 and d % 2 == 1 else 0,
        "TCgeo-rational": lambda d: 1 if d == 0 or (d >= -1 and d % 2 == 1) else 0,
    }
    for name, rule in rules.items():
        series = ktheory_preset(name, cap).series
        low = -1 if name == "TCgeo-rational" else 0
        for d in range(low, cap + 1):
            if series[d] != rule(d):
                preset_failures.append(f"{name} degree {d}: {series[d]} != {rule(d)}")
    reports.append(
        CheckReport(
            name="preset fidelity degrees<=40",
            passed=not preset_failures,
            checked=4 * (cap + 1),
            failures=tuple(preset_failures[:5]),
        )
    )

    reports.append(motivic_consistency(30))
    return reports
