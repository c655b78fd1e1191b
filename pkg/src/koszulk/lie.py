"""Free graded Lie algebras at the level of dimension counts, and Lyndon words.

No brackets are ever constructed: the dimensions l_n of a free graded Lie
algebra are the unique nonnegative integers with

    prod_n (1 - t^n)^(-l_n)  ==  1 / (1 - g(t))        (mod t^(cap+1)),

where g is the generating series of the generator multiset.  They are
computed by taking the exact logarithm of the tensor-algebra series and
Moebius-inverting; integrality and nonnegativity are asserted, not assumed.
The identity itself (the graded Witt / PBW identity) is re-checked
coefficientwise by :func:`pbw_check`.

Lyndon words (aperiodic words strictly minimal among their rotations) are
enumerated by Duval's algorithm, weight-bounded; for a weighted alphabet
the number of Lyndon words of weight n equals l_n of the free Lie algebra
on one generator per letter, which the tests exercise both ways.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    CapExceededError,
    CheckReport,
    Composition,
    DimensionSeries,
    ParseError,
    ValidationError,
    series_of_polynomial_algebra,
    series_of_exterior_algebra,
    series_of_tensor_algebra,
    series_pointwise_product,
)
from .numth import divisors, mobius

__all__ = [
    "GradedGeneratorSet",
    "LyndonWord",
    "is_lyndon",
    "lyndon_words",
    "free_lie_dimensions",
    "pbw_check",
    "ext1_dimension",
    "witt_suite",
]


@dataclass(frozen=True)
class GradedGeneratorSet:
    """A multiset of positive generator weights, enumerated up to a cap.

    ``rule`` records the defining rule when the set came from one
    (``odd>=3``, ``4k+1,k>=1``, ``even>=2``, or an explicit list).
    """

    degrees: tuple[int, ...]
    cap: int
    rule: str | None = None

    def __post_init__(self):
        if any(d < 1 for d in self.degrees):
            raise ValidationError(f"generator weights must be >= 1: {self.degrees}")
        if self.cap < 0:
            raise ValidationError(f"cap must be >= 0: {self.cap}")
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees)))

    @classmethod
    def from_degrees(cls, degrees, cap: int) -> "GradedGeneratorSet":
        return cls(tuple(int(d) for d in degrees), int(cap))

    @classmethod
    def from_rule(cls, rule: str, cap: int) -> "GradedGeneratorSet":
        """Parse ``odd>=N``, ``even>=N``, ``Ak+B,k>=N``, or an explicit
        comma-separated list, enumerating degrees up to the cap."""
        rule = rule.strip()
        cap = int(cap)
        m = re.match(r"^(odd|even)\s*>=\s*(\d+)$", rule)
        if m:
            start = int(m.group(2))
            parity = 1 if m.group(1) == "odd" else 0
            degrees = [d for d in range(start, cap + 1) if d % 2 == parity]
            return cls(tuple(degrees), cap, rule)
        m = re.match(r"^(\d+)k([+-]\d+)?\s*,\s*k\s*>=\s*(\d+)$", rule)
        if m:
            step, offset, k0 = int(m.group(1)), int(m.group(2) or 0), int(m.group(3))
            degrees = []
            k = k0
            while step * k + offset <= cap:
                if step * k + offset >= 1:
                    degrees.append(step * k + offset)
                k += 1
            return cls(tuple(degrees), cap, rule)
        if re.match(r"^\d+(\s*,\s*\d+)*$", rule):
            return cls(tuple(int(a) for a in rule.split(",")), cap, rule)
        raise ParseError(f"cannot parse generator rule: {rule!r}")

    def counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for d in self.degrees:
            out[d] = out.get(d, 0) + 1
        return out


def is_lyndon(letters) -> bool:
    """True iff the word is aperiodic and strictly smaller than every proper
    rotation (lexicographic order on letter values)."""
    w = tuple(letters)
    if not w:
        return False
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


class LyndonWord(Composition):
    """A composition that is strictly minimal among its rotations."""

    __slots__ = ()

    def __init__(self, letters):
        super().__init__(letters)
        if not is_lyndon(self.letters):
            raise ValidationError(f"not a Lyndon word: {self.letters}")

    def __repr__(self) -> str:
        return f"LyndonWord({list(self.letters)!r})"


def lyndon_words(alphabet, max_weight: int) -> list[LyndonWord]:
    """All Lyndon words over the alphabet with letter-sum at most
    ``max_weight``, in canonical composition order.

    Duval's algorithm generates Lyndon words by length in lexicographic
    order; the weight bound caps the length at max_weight // min(alphabet).
    """
    letters = sorted(set(int(a) for a in alphabet))
    if not letters or letters[0] < 1:
        raise ValidationError(f"alphabet must be a nonempty set of positive integers: {alphabet}")
    max_weight = int(max_weight)
    if max_weight < 0:
        raise ValidationError(f"max_weight must be >= 0: {max_weight}")
    max_len = max_weight // letters[0]
    found: list[LyndonWord] = []
    if max_len == 0:
        return found
    stack = [0]
    while stack:
        word = tuple(letters[i] for i in stack)
        if sum(word) <= max_weight:
            found.append(LyndonWord(word))
        m = len(stack)
        while len(stack) < max_len:
            stack.append(stack[len(stack) - m])
        while stack and stack[-1] == len(letters) - 1:
            stack.pop()
        if stack:
            stack[-1] += 1
    return sorted(found, key=lambda w: w.sort_key)


def free_lie_dimensions(generators: GradedGeneratorSet, cap: int) -> DimensionSeries:
    """Dimensions l_n of the free graded Lie algebra on the generator set.

    Takes the exact log of the tensor series T(t) = 1/(1 - g(t)) and
    Moebius-inverts  n*c_n = sum_{d|n} d*l_d.  A non-integral or negative
    l_n cannot occur for genuine free-Lie input and raises.
    """
    cap = int(cap)
    if cap < 0:
        raise ValidationError(f"cap must be >= 0: {cap}")
    if cap > generators.cap:
        raise CapExceededError(
            f"requested cap {cap} exceeds the generator enumeration cap {generators.cap}"
        )
    tensor = series_of_tensor_algebra(generators.counts(), cap)
    a = [Fraction(tensor[n]) for n in range(cap + 1)]
    # c = log(T): n*a_n = sum_{k=1..n} k*c_k*a_{n-k}.
    c = [Fraction(0)] * (cap + 1)
    for n in range(1, cap + 1):
        acc = n * a[n]
        for k in range(1, n):
            acc -= k * c[k] * a[n - k]
        c[n] = acc / n
    dims: dict[int, int] = {}
    for n in range(1, cap + 1):
        total = Fraction(0)
        for d in divisors(n):
            total += mobius(n // d) * d * c[d]
        value = total / n
        if value.denominator != 1 or value < 0:
            raise ValidationError(
                f"Witt recursion produced a non-integral or negative dimension at weight {n}: {value}"
            )
        dims[n] = int(value)
    return DimensionSeries(dims, cap)


def pbw_check(
    generators: GradedGeneratorSet,
    cap: int,
    *,
    lie_dims: DimensionSeries | None = None,
) -> CheckReport:
    """Check prod_n (1 - t^n)^(-l_n) == tensor series of the generators,
    coefficient by coefficient up to the cap.  ``lie_dims`` may be injected
    (e.g. deliberately corrupted) to exercise the harness itself."""
    cap = int(cap)
    dims = lie_dims if lie_dims is not None else free_lie_dimensions(generators, cap)
    enveloping = series_of_polynomial_algebra(
        {n: dims[n] for n in range(1, cap + 1) if dims[n]}, cap
    )
    tensor = series_of_tensor_algebra(generators.counts(), cap)
    failures = tuple(
        f"degree {n}: enveloping {enveloping[n]} != tensor {tensor[n]}"
        for n in range(cap + 1)
        if enveloping[n] != tensor[n]
    )[:5]
    label = generators.rule or ",".join(str(d) for d in generators.degrees)
    return CheckReport(
        name=f"PBW series identity [{label}] cap {cap}",
        passed=not failures,
        checked=cap + 1,
        failures=failures,
    )


def ext1_dimension(generators: GradedGeneratorSet, n: int) -> int:
    """Number of free generators in weight n (the degree-n abelianization
    dimension, i.e. the first extension-group dimension between the trivial
    weight-0 and weight-n representations)."""
    n = int(n)
    if n > generators.cap:
        raise CapExceededError(f"weight {n} exceeds generator cap {generators.cap}")
    return sum(1 for d in generators.degrees if d == n)


def witt_suite(cap: int = 20) -> list[CheckReport]:
    """Dimension-identity suite: PBW for the standard generator sets,
    Lyndon/Witt agreement over the alphabet {2,3}, and the Euler
    complementation identity for exterior and polynomial series."""
    reports: list[CheckReport] = []
    for label, gens in [
        ("1", GradedGeneratorSet.from_degrees([1], cap)),
        ("1,1", GradedGeneratorSet.from_degrees([1, 1], cap)),
        ("2,3", GradedGeneratorSet.from_degrees([2, 3], cap)),
        ("odd>=3", GradedGeneratorSet.from_rule("odd>=3", cap)),
    ]:
        reports.append(pbw_check(gens, cap))

    lyndon_cap = max(cap, 24)
    gens23 = GradedGeneratorSet.from_degrees([2, 3], lyndon_cap)
    witt = free_lie_dimensions(gens23, lyndon_cap)
    counts: dict[int, int] = {}
    for w in lyndon_words({2, 3}, lyndon_cap):
        counts[w.weight] = counts.get(w.weight, 0) + 1
    failures = tuple(
        f"weight {n}: {counts.get(n, 0)} Lyndon words != l_{n} = {witt[n]}"
        for n in range(1, lyndon_cap + 1)
        if counts.get(n, 0) != witt[n]
    )[:5]
    reports.append(
        CheckReport(
            name=f"Lyndon{{2,3}} counts equal Witt dimensions weight<={lyndon_cap}",
            passed=not failures,
            checked=lyndon_cap,
            failures=failures,
        )
    )

    euler_failures = []
    for d in (1, 2, 3):
        lhs = series_pointwise_product(
            series_of_exterior_algebra([d], cap),
            series_of_polynomial_algebra([2 * d], cap),
        )
        rhs = series_of_polynomial_algebra([d], cap)
        if lhs != rhs:
            euler_failures.append(f"degree parameter {d}")
    reports.append(
        CheckReport(
            name=f"Euler identity ext(d) * poly(2d) = poly(d) cap {cap}",
            passed=not euler_failures,
            checked=3,
            failures=tuple(euler_failures),
        )
    )
    return reports
