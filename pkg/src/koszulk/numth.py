"""Tiny exact number-theory helpers (trial division scale).

Everything here runs on the small integers this package meets (degrees and
Bernoulli indices of a few dozen), so trial division is plenty; keeping
these local avoids pulling a large CAS import into the command-line path.
The test suite cross-checks them against an independent implementation.
"""

from __future__ import annotations

__all__ = ["is_prime", "divisors", "mobius", "valuation"]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def divisors(n: int) -> list[int]:
    """Positive divisors of n >= 1, ascending."""
    if n < 1:
        raise ValueError(f"divisors of nonpositive integer: {n}")
    small, large = [], []
    f = 1
    while f * f <= n:
        if n % f == 0:
            small.append(f)
            if f != n // f:
                large.append(n // f)
        f += 1
    return small + large[::-1]


def mobius(n: int) -> int:
    """Moebius function: 0 on non-squarefree n, else (-1)^(number of prime factors)."""
    if n < 1:
        raise ValueError(f"mobius of nonpositive integer: {n}")
    result = 1
    f = 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                return 0
            result = -result
        f += 1 if f == 2 else 2
    if n > 1:
        result = -result
    return result


def valuation(n: int, p: int) -> int:
    """Largest e with p^e dividing n (n != 0)."""
    if n == 0:
        raise ValueError("valuation of zero")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e
